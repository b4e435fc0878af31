"""Plücker relations of Gr(2, n) and the action of wedged matrices on them.

Run: python demos/02_pluecker_ideal.py
"""
import numpy as np

from wedgescheme import QuadForm, Zmod, act, canonical_basis, in_ideal, plucker_poly, wedge
from wedgescheme.exalg import random_invertible
from wedgescheme.pluecker import combine

F97 = Zmod(97)
rng = np.random.default_rng(2)

f = plucker_poly(1, (2, 3, 4))
print("f_1,234 =", f)
print("f_2,134 =", plucker_poly(2, (1, 3, 4)), " (the opposite sign)")
print("basis sizes for n = 4..7:", [len(canonical_basis(n)) for n in range(4, 8)])

# ideal membership recovers the coordinates theta_S in the canonical basis
b = combine({(1, 2, 3, 4): 5, (1, 2, 3, 5): 2, (2, 3, 4, 5): 96}, 5, F97)
verdict = in_ideal(b)
print("accepted:", verdict.accepted, " nonzero theta:", {S: t for S, t in verdict.theta.items() if t})

print("x12*x34 alone:", in_ideal(QuadForm(4, F97, {((1, 2), (3, 4)): 1})).reason)
print("x12*x13:", in_ideal(QuadForm(4, F97, {((1, 2), (1, 3)): 1})).reason)

# a wedged invertible matrix maps the ideal into itself
g = wedge(2, random_invertible(F97, 5, rng))
print("act(wedge(2, x), f) stays in the ideal for every basis form:",
      all(in_ideal(act(g, q)).accepted for q in canonical_basis(5, F97)))

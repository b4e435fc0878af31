"""Deciding membership in the scheme wedge^2 GL_n from exterior numbers.

Run: python demos/03_membership.py
"""
import numpy as np

from wedgescheme import Matrix, Zmod, exterior_number, membership, theta_from_minors, wedge
from wedgescheme.exalg import random_invertible

F97 = Zmod(97)
rng = np.random.default_rng(3)

# a genuine wedge: accepted, and the witness table is the 4x4 minors of x
x = random_invertible(F97, 6, rng)
report = membership(wedge(2, x))
print("wedge(2, x):", report.verdict, "| theta == wedge(4, x):", report.theta == theta_from_minors(x))

# identity plus one stray entry: the certificate names the broken equation
g = Matrix.identity(F97, 4, "wedge2").with_entry((1, 2), (3, 4), 1)
print("a^1234_{12,12}(g) =", exterior_number(g, (1, 2), (1, 2), (1, 2, 3, 4)))
print("bumped identity:", membership(g).to_json())

# a scalar matrix whose square root does not exist in F_97 is still a point of the scheme
lam = 5
s = membership(Matrix.scalar(F97, 4, lam, "wedge2"))
print(f"{lam}*identity: {s.verdict}, theta = {s.theta.entry((1, 2, 3, 4), (1, 2, 3, 4))} = {lam}^2;",
      f"5 is a square mod 97: {pow(5, 48, 97) == 1}")

# the full report lists every violated equation in sweep order
bad = wedge(2, x).with_entry((1, 2), (5, 6), 0)
print("violations after zeroing one entry:", len(membership(bad, full_report=True).violations))

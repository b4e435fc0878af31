"""Wedge powers of matrices and the Cauchy-Binet homomorphism.

Run: python demos/01_wedge_powers.py
"""
import numpy as np

from wedgescheme import ZZ, Matrix, Zmod, det, minor, wedge
from wedgescheme.combinat import subsets

F97 = Zmod(97)
rng = np.random.default_rng(1)

x = Matrix(ZZ, [[2, 1, 0, 0], [0, 1, 3, 0], [1, 0, 1, 1], [0, 2, 0, 1]])
w = wedge(2, x)
print("x =", x.tolist())
print("rows/cols of wedge(2, x) are the pairs", [f"{a}{b}" for a, b in subsets(4, 2)])
for row in w.tolist():
    print("   ", row)

# each entry is a 2x2 minor
print("entry (13, 24) =", w.entry((1, 3), (2, 4)), "= minor(x, 13, 24) =", minor(x, (1, 3), (2, 4)))

# wedge is multiplicative
from wedgescheme.exalg import random_matrix

a, b = random_matrix(F97, 5, rng), random_matrix(F97, 5, rng)
for m in (2, 3, 4):
    print(f"wedge({m}, a b) == wedge({m}, a) wedge({m}, b):", wedge(m, a @ b) == wedge(m, a) @ wedge(m, b))

# the determinant of the second wedge power is det(x)^(n-1)
print("det(wedge(2, x)) =", det(w), " det(x)^3 =", det(x).value ** 3)

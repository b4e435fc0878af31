"""A second equation system (B-matrices) and membership modulo an integer.

Run: python demos/06_second_form_and_congruence.py
"""
import numpy as np

from wedgescheme import ZZ, Matrix, Zmod, congruence_membership, membership, second_form_membership, wedge
from wedgescheme.exalg import random_invertible
from wedgescheme.scheme_eqs import b_matrix

F97 = Zmod(97)
rng = np.random.default_rng(6)

B = b_matrix((1, 2, 3, 4), 4)
print("B_1234 =")
for row in B.tolist():
    print("   ", row)

g = wedge(2, random_invertible(F97, 5, rng))
sf = second_form_membership(g)
print("second system on a wedge:", sf.verdict, "| alpha == theta^T:", sf.alpha == membership(g).theta.T)

bumped = Matrix.identity(F97, 4, "wedge2").with_entry((1, 2), (3, 4), 1)
print("second system on the bumped identity:", second_form_membership(bumped).to_dict())

# over the integers the same bump is harmless modulo 2, but not modulo 3
gz = Matrix.identity(ZZ, 4, "wedge2").with_entry((1, 2), (3, 4), 1)
for m in (2, 3):
    print(f"bumped identity modulo {m}:", congruence_membership(gz, m).verdict)

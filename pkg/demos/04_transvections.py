"""Wedged transvections as products of elementary transvections of GL_N.

Run: python demos/04_transvections.py
"""
from wedgescheme import ZZ, decompose_wedge2, elementary, exterior_number, transvection_ext_numbers, wedge
from wedgescheme.transvect import commutator, product, verify_decomposition

for n, i, j in ((5, 2, 4), (5, 4, 2), (6, 1, 6)):
    factors = decompose_wedge2(n, i, j, 1)
    shown = ", ".join(f"t[{t.row},{t.col}]({t.ring.format(t.param)})" for t in factors)
    print(f"wedge(2, t_{i}{j}(1)) in GL_{n}: {shown}")
    print("   product matches:", product(factors, ZZ, n) == wedge(2, elementary(ZZ, n, i, j, 1)),
          "| order-free and commuting:", verify_decomposition(n, i, j, 1))

# commutator identities among the generators
print("[t12(3), t23(5)] == t13(15):", commutator(elementary(ZZ, 4, 1, 2, 3), elementary(ZZ, 4, 2, 3, 5))
      == elementary(ZZ, 4, 1, 3, 15))

# exterior numbers of wedged transvections have a closed form
g = wedge(2, elementary(ZZ, 4, 1, 2, 7))
for A, C in (((1, 3), (2, 4)), ((2, 3), (1, 4)), ((1, 3), (1, 4))):
    print(f"a^1234_{A},{C}: closed form {transvection_ext_numbers(4, 1, 2, 7, A, C, (1, 2, 3, 4))},",
          f"direct {exterior_number(g, A, C, (1, 2, 3, 4))}")

"""The weight diagram (A_{n-1}, varpi_2): paths, elementary squares, and exterior numbers.

Run: python demos/05_weight_diagram.py
"""
from wedgescheme import ZZ, Matrix, build_diagram, diagram_exterior_number, elementary_square, path_of, render
from wedgescheme.diagrams import Highlights

d4 = build_diagram(4)
print(render(d4, "ascii"))

d7 = build_diagram(7)
print("path of 1:", path_of(d7, 1).vertices)
sq = elementary_square(d7, (1, 2, 4, 6))
print("square on 1246:", sq.vertices)
print(render(d7, "ascii", Highlights(paths=(1, 5), squares=((1, 2, 4, 6),), signs=True)))

# reading a^1234_{23,24} off the two squares: probe each of the 36 products
pairs = d4.vertices
print("terms of a^1234_{23,24}:")
for P in pairs:
    for Q in pairs:
        g = Matrix.zeros(ZZ, 4, "wedge2").with_entry((2, 3), P, 1).with_entry((2, 4), Q, 1)
        c = diagram_exterior_number(g, (2, 3), (2, 4), (1, 2, 3, 4)).value
        if c:
            print(f"  {'+' if c > 0 else '-'} g[23,{P[0]}{P[1]}] g[24,{Q[0]}{Q[1]}]")

print(render(build_diagram(5), "dot"))

"""Weight diagram of (A_{n-1}, varpi_2) and exterior numbers read off it.

Vertices are the pairs (i, j), i < j.  An edge labelled k joins P and the
pair obtained from P by replacing k with k + 1.  The product diagram used to
picture a wedge2 matrix is addressed as (outer pair, inner pair) and never
materialized: the copy sitting at outer vertex A carries the row g[A, :].
"""
from __future__ import annotations

import html
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .combinat import check_index_set, format_index_set, rank_table, subsets
from .errors import InvalidIndexSet, RankTooSmall, UnsupportedFormat
from .exalg import Matrix
from .scalars import Scalar

FORMATS = ("ascii", "dot", "svg")

# local splittings of a 4-set (positions 0..3) with their signs; the square
# picture fixes them without reference to permutation parity
_SQUARE_PAIRINGS = (((0, 1), (2, 3), 1), ((0, 2), (1, 3), -1), ((0, 3), (1, 2), 1))


@dataclass(frozen=True)
class Edge:
    src: tuple
    dst: tuple
    label: int


@dataclass(frozen=True)
class WeightDiagram:
    n: int
    vertices: tuple
    edges: tuple

    def neighbors(self, P) -> dict:
        """Adjacent vertex -> edge label."""
        out = {}
        for e in self.edges:
            if e.src == P:
                out[e.dst] = e.label
            elif e.dst == P:
                out[e.src] = e.label
        return out

    def has_edge(self, P, Q) -> bool:
        return Q in self._adjacency().get(P, {})

    def _adjacency(self) -> dict:
        return _adjacency(self)

    def rank_row(self, P) -> int:
        """Row of P in the triangular picture: j - i (the top row is n - 1)."""
        return P[1] - P[0]


@lru_cache(maxsize=None)
def _adjacency(d: WeightDiagram) -> dict:
    adj = {P: {} for P in d.vertices}
    for e in d.edges:
        adj[e.src][e.dst] = e.label
        adj[e.dst][e.src] = e.label
    return adj


@lru_cache(maxsize=None)
def build_diagram(n: int) -> WeightDiagram:
    if n < 3:
        raise RankTooSmall(f"weight diagram needs n >= 3, got {n}")
    verts = subsets(n, 2)
    edges = []
    for P in verts:
        for k in P:
            if k + 1 <= n and k + 1 not in P:
                Q = tuple(sorted(k + 1 if p == k else p for p in P))
                edges.append(Edge(P, Q, k))
    edges.sort(key=lambda e: (e.src, e.dst))
    return WeightDiagram(n, verts, tuple(edges))


@dataclass(frozen=True)
class DiagramPath:
    """All vertices containing ``anchor``, in order along the path.

    Between (anchor-1, anchor) and (anchor, anchor+1) the path runs through the
    diagonal vertex (anchor, anchor) of the symmetric-square diagram, which the
    exterior diagram does not have; every other consecutive pair is an edge.
    """

    anchor: int
    vertices: tuple

    def steps(self, diagram: WeightDiagram) -> list:
        """(P, Q, label) for consecutive vertices; label None across the diagonal gap."""
        out = []
        for P, Q in zip(self.vertices, self.vertices[1:]):
            lbl = _adjacency(diagram)[P].get(Q)
            out.append((P, Q, lbl))
        return out


def path_of(diagram: WeightDiagram, i: int) -> DiagramPath:
    if not 1 <= i <= diagram.n:
        raise InvalidIndexSet(f"{i} is outside [1, {diagram.n}]")
    verts = [P for P in diagram.vertices if i in P]
    verts.sort(key=lambda P: P[0] if P[1] == i else P[1])
    return DiagramPath(i, tuple(verts))


@dataclass(frozen=True)
class ElementarySquare:
    H: tuple
    vertices: tuple
    pairings: tuple  # ((B, D, sign), ...) with B < D, in lex order of B

    def partner(self, P) -> tuple:
        for B, D, s in self.pairings:
            if P == B:
                return D, s
            if P == D:
                return B, s
        raise InvalidIndexSet(f"{P} is not a vertex of the square on {self.H}")

    def edges(self) -> list:
        """(P, Q, labels): square edges and the ambient label chain each one spans."""
        out = []
        H = self.H
        for P in self.vertices:
            for r in range(3):
                a, b = H[r], H[r + 1]
                if a in P and b not in P:
                    Q = tuple(sorted(b if p == a else p for p in P))
                    out.append((P, Q, tuple(range(a, b))))
        return out


def elementary_square(diagram: WeightDiagram, H) -> ElementarySquare:
    """The six vertices inside H, found as pairwise intersections of the four paths."""
    H = check_index_set(H, diagram.n, 4)
    paths = {h: set(path_of(diagram, h).vertices) for h in H}
    verts = []
    for r in range(4):
        for s in range(r + 1, 4):
            meet = paths[H[r]] & paths[H[s]]
            (P,) = meet
            verts.append(P)
    pairings = tuple(
        ((H[b0], H[b1]), (H[d0], H[d1]), sgn) for (b0, b1), (d0, d1), sgn in _SQUARE_PAIRINGS
    )
    return ElementarySquare(H, tuple(sorted(verts)), pairings)


@lru_cache(maxsize=4096)
def _square(n: int, H: tuple) -> ElementarySquare:
    return elementary_square(build_diagram(n), H)


def diagram_exterior_number(g: Matrix, A, C, H) -> Scalar:
    """Exterior number a^H_{A,C}(g) computed on the weight diagram.

    Take the copies of the diagram sitting at A and C in the product diagram,
    draw the elementary square of H in each, and add up the products of
    complementary vertices of the two squares with the square's signs.
    """
    if g.indexing != "wedge2":
        raise InvalidIndexSet("expected a wedge2-indexed matrix")
    n = g.n
    A = check_index_set(A, n, 2)
    C = check_index_set(C, n, 2)
    H = check_index_set(H, n, 4)
    ring = g.ring
    pos = rank_table(n, 2)
    copy_a = g.data[pos[A]]
    copy_c = g.data[pos[C]]
    sq = _square(n, H)
    acc = ring.zero
    for P in sq.vertices:
        Q, sgn = sq.partner(P)
        term = ring.mul(_py(copy_a[pos[P]]), _py(copy_c[pos[Q]]))
        acc = ring.add(acc, term) if sgn > 0 else ring.sub(acc, term)
    return Scalar(ring, acc)


def _py(v):
    return int(v) if isinstance(v, np.integer) else v


# -- rendering -----------------------------------------------------------------


@dataclass(frozen=True)
class Highlights:
    paths: tuple = ()
    squares: tuple = ()
    signs: bool = False


def _marked(diagram: WeightDiagram, hl: Highlights):
    on_path = {}
    for i in hl.paths:
        for P in path_of(diagram, i).vertices:
            on_path.setdefault(P, []).append(i)
    on_square = set()
    squares = [elementary_square(diagram, H) for H in hl.squares]
    for sq in squares:
        on_square.update(sq.vertices)
    return on_path, on_square, squares


def render(diagram: WeightDiagram, fmt: str = "ascii", highlights: Highlights | None = None) -> str:
    hl = highlights or Highlights()
    if fmt == "ascii":
        return _render_ascii(diagram, hl)
    if fmt == "dot":
        return _render_dot(diagram, hl)
    if fmt == "svg":
        return _render_svg(diagram, hl)
    raise UnsupportedFormat(f"unsupported format {fmt!r}; choose one of {', '.join(FORMATS)}")


def _legend(diagram: WeightDiagram, hl: Highlights, squares) -> list:
    n = diagram.n
    f = lambda P: format_index_set(P, n)
    lines = []
    for i in hl.paths:
        lines.append(f"path {i}: " + " - ".join(f(P) for P in path_of(diagram, i).vertices))
    for sq in squares:
        lines.append(f"square {f(sq.H)}: " + " ".join(f(P) for P in sq.vertices))
        if hl.signs:
            lines.append(
                "  pairings: " + ", ".join(f"{f(B)}|{f(D)} {'+' if s > 0 else '-'}" for B, D, s in sq.pairings)
            )
    return lines


def _render_ascii(diagram: WeightDiagram, hl: Highlights) -> str:
    n = diagram.n
    on_path, on_square, squares = _marked(diagram, hl)
    width = max(len(format_index_set(P, n)) for P in diagram.vertices) + 2
    step = width  # horizontal distance between x = i + j and x + 1
    ncols = step * (2 * n - 3) + width
    lines = []
    for d in range(n - 1, 0, -1):
        row = [" "] * ncols
        for i in range(1, n - d + 1):
            P = (i, i + d)
            label = format_index_set(P, n)
            if P in on_square:
                label = f"<{label}>"
            elif P in on_path:
                label = f"[{label}]"
            x = step * (P[0] + P[1] - 3) + width // 2
            start = x - len(label) // 2
            for k, ch in enumerate(label):
                row[start + k] = ch
        lines.append("".join(row).rstrip())
        if d > 1:
            conn = [" "] * ncols
            for i in range(1, n - d + 1):
                P = (i, i + d)
                x = step * (P[0] + P[1] - 3) + width // 2
                # down-left: (i, j-1) --(j-1)--> (i, j)
                _put(conn, x - step // 2, "/", str(P[1] - 1), left=True)
                # down-right: (i, j) --i--> (i+1, j)
                _put(conn, x + step // 2, "\\", str(P[0]), left=False)
            lines.append("".join(conn).rstrip())
    lines.extend(_legend(diagram, hl, squares))
    return "\n".join(lines) + "\n"


def _put(row: list, pos: int, glyph: str, label: str, left: bool):
    row[pos] = glyph
    start = pos - len(label) if left else pos + 1
    for k, ch in enumerate(label):
        if 0 <= start + k < len(row) and row[start + k] == " ":
            row[start + k] = ch


def _render_dot(diagram: WeightDiagram, hl: Highlights) -> str:
    n = diagram.n
    on_path, on_square, squares = _marked(diagram, hl)
    f = lambda P: format_index_set(P, n)
    out = [f"graph weight_diagram_A{n - 1} {{", "  node [shape=circle];"]
    for P in diagram.vertices:
        attrs = [f'label="{f(P)}"', f'rank_row="{diagram.rank_row(P)}"']
        if P in on_square:
            attrs.append('color="red"')
        elif P in on_path:
            attrs.append('color="blue"')
        out.append(f'  "{f(P)}" [{", ".join(attrs)}];')
    path_edges = set()
    for i in hl.paths:
        for P, Q, lbl in path_of(diagram, i).steps(diagram):
            if lbl is not None:
                path_edges.add(frozenset((P, Q)))
    for e in diagram.edges:
        attrs = [f'label="{e.label}"']
        if frozenset((e.src, e.dst)) in path_edges:
            attrs.append('style="bold"')
        out.append(f'  "{f(e.src)}" -- "{f(e.dst)}" [{", ".join(attrs)}];')
    for sq in squares:
        if hl.signs:
            for B, D, s in sq.pairings:
                out.append(
                    f'  "{f(B)}" -- "{f(D)}" [style="dotted", constraint="false", '
                    f'pairing="{f(sq.H)}", label="{"+" if s > 0 else "-"}"];'
                )
    out.append("}")
    return "\n".join(out) + "\n"


def _render_svg(diagram: WeightDiagram, hl: Highlights) -> str:
    n = diagram.n
    on_path, on_square, squares = _marked(diagram, hl)
    f = lambda P: format_index_set(P, n)
    dx, dy, pad = 30, 45, 30

    def xy(P):
        return pad + dx * (P[0] + P[1] - 3), pad + dy * (n - 1 - diagram.rank_row(P))

    width = 2 * pad + dx * (2 * n - 4)
    height = 2 * pad + dy * (n - 2) + 20 * len(_legend(diagram, hl, squares))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for e in diagram.edges:
        (x1, y1), (x2, y2) = xy(e.src), xy(e.dst)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>')
        out.append(
            f'<text x="{(x1 + x2) / 2 + 4}" y="{(y1 + y2) / 2}" font-size="9">{e.label}</text>'
        )
    if hl.signs:
        for sq in squares:
            for B, D, s in sq.pairings:
                (x1, y1), (x2, y2) = xy(B), xy(D)
                out.append(
                    f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="gray" stroke-dasharray="3,3"/>'
                )
    for P in diagram.vertices:
        x, y = xy(P)
        color = "red" if P in on_square else "blue" if P in on_path else "black"
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{color}"/>')
        out.append(f'<text x="{x - 6}" y="{y - 8}" font-size="10">{f(P)}</text>')
    y = height - pad // 2 - 20 * (len(_legend(diagram, hl, squares)) - 1)
    for line in _legend(diagram, hl, squares):
        out.append(f'<text x="{pad}" y="{y}" font-size="10">{html.escape(line)}</text>')
        y += 20
    out.append("</svg>")
    return "\n".join(out) + "\n"

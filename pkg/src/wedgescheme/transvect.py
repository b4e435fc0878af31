"""Elementary transvections and the factorization of wedged transvections.

wedge(2, t_{i,j}(xi)) is a product of n - 2 pairwise commuting elementary
transvections of GL_N, one for each k outside {i, j}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .combinat import format_index_set, normalize_pair, rank_table
from .errors import InvalidIndexSet, RankTooSmall
from .exalg import Matrix, wedge
from .scalars import ZZ, Ring

PRNG_ALGORITHM = "numpy.random.PCG64"


@dataclass(frozen=True)
class Transvection:
    """identity + param * e_{row, col}; rows/cols are ints (plain) or pairs (wedge2)."""

    n: int
    row: object
    col: object
    param: object
    indexing: str = "plain"
    ring: Ring = ZZ

    def __post_init__(self):
        object.__setattr__(self, "param", self.ring.coerce(self.param))
        if self.row == self.col:
            raise InvalidIndexSet(f"transvection needs row != col, got {self.row}")

    def to_matrix(self) -> Matrix:
        return to_matrix(self)

    def to_dict(self) -> dict:
        fmt = (lambda x: str(x)) if self.indexing == "plain" else (lambda P: format_index_set(P, self.n))
        return {"row": fmt(self.row), "col": fmt(self.col), "param": self.ring.format(self.param)}


def to_matrix(t: Transvection) -> Matrix:
    m = Matrix.identity(t.ring, t.n, t.indexing)
    return m.with_entry(t.row, t.col, t.param)


def elementary(ring: Ring, n: int, i: int, j: int, xi) -> Matrix:
    """t_{i,j}(xi) in GL_n."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidIndexSet(f"bad transvection indices ({i}, {j}) for n = {n}")
    return to_matrix(Transvection(n, i, j, xi, "plain", ring))


def commutator(x: Matrix, y: Matrix) -> Matrix:
    """Left-normed [x, y] = x y x^-1 y^-1."""
    from .exalg import inverse

    return x @ y @ inverse(x) @ inverse(y)


def _wedge_factor(n, ring, row, col, xi) -> Transvection:
    (r, s1) = normalize_pair(*row)
    (c, s2) = normalize_pair(*col)
    param = ring.mul(ring.coerce(xi), s1 * s2)
    return Transvection(n, r, c, param, "wedge2", ring)


def decompose_wedge2(n: int, i: int, j: int, xi, ring: Ring = ZZ) -> list:
    """Factors of wedge(2, t_{i,j}(xi)) in GL_N, in the displayed product order.

    For i < j:  t_{ki,kj}(xi) for k < i, t_{il,lj}(-xi) for i < l < j,
    t_{im,jm}(xi) for m > j.  For i > j the middle block reads
    t_{li,jl}(-xi) for j < l < i.  Pairs are normalized to ascending order
    and any sign from reordering is absorbed into the parameter.
    """
    if n < 3:
        raise RankTooSmall(f"decomposition needs n >= 3, got {n}")
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidIndexSet(f"bad transvection indices ({i}, {j}) for n = {n}")
    neg = ring.neg(ring.coerce(xi))
    lo, hi = min(i, j), max(i, j)
    out = [_wedge_factor(n, ring, (k, i), (k, j), xi) for k in range(1, lo)]
    if i < j:
        out += [_wedge_factor(n, ring, (i, l), (l, j), neg) for l in range(i + 1, j)]
    else:
        out += [_wedge_factor(n, ring, (l, i), (j, l), neg) for l in range(j + 1, i)]
    out += [_wedge_factor(n, ring, (i, m), (j, m), xi) for m in range(hi + 1, n + 1)]
    return out


def _pos(t: Transvection, label) -> int:
    if t.indexing == "plain":
        return label - 1
    return rank_table(t.n, 2)[label]


def apply_left(t: Transvection, arr: np.ndarray) -> np.ndarray:
    """Rows of t @ arr: row(t.row) += param * row(t.col). Works in place."""
    r, c = _pos(t, t.row), _pos(t, t.col)
    arr[r] = t.ring.reduce(arr[r] + arr[c] * t.param)
    return arr


def product(factors, ring: Ring, n: int, indexing: str = "wedge2") -> Matrix:
    arr = np.array(Matrix.identity(ring, n, indexing).data, copy=True)
    for t in reversed(list(factors)):
        apply_left(t, arr)
    return Matrix._raw(ring, arr, indexing, n)


def _orders(k: int):
    """All orderings of k factors; for k > 6 the rotations and their reversals."""
    if k <= 6:
        yield from itertools.permutations(range(k))
        return
    base = list(range(k))
    for s in range(k):
        rot = base[s:] + base[:s]
        yield tuple(rot)
        yield tuple(reversed(rot))


def verify_decomposition(n: int, i: int, j: int, xi, ring: Ring = ZZ) -> bool:
    """Product equals wedge(2, t_{i,j}(xi)) in every order and all factors commute."""
    factors = decompose_wedge2(n, i, j, xi, ring)
    target = wedge(2, elementary(ring, n, i, j, xi))
    mats = [to_matrix(t) for t in factors]
    for a, b in itertools.combinations(mats, 2):
        if a @ b != b @ a:
            return False
    for order in _orders(len(factors)):
        if product([factors[k] for k in order], ring, n) != target:
            return False
    return True


def random_elementary(n: int, length: int, ring: Ring, seed: int, low: int = -3, high: int = 3) -> Matrix:
    """Seeded product of ``length`` random transvections t_{i,j}(xi) in E(n, ring)."""
    rng = np.random.default_rng(seed)
    arr = np.array(Matrix.identity(ring, n).data, copy=True)
    for _ in range(length):
        i, j = (int(v) for v in rng.choice(np.arange(1, n + 1), size=2, replace=False))
        if ring.kind == "zmod":
            xi = int(rng.integers(0, ring.modulus))
        else:
            xi = int(rng.integers(low, high + 1))
        apply_left(Transvection(n, i, j, xi, "plain", ring), arr)
    return Matrix._raw(ring, arr, "plain", n)

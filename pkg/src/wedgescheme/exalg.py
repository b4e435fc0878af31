"""Exact dense matrices, minors, determinants, inverses and wedge powers.

Entries are stored as a read-only numpy array of canonical payloads: int64
for small moduli, Python objects (``int``/``Fraction``) otherwise.  Nothing
here ever touches floating point.
"""
from __future__ import annotations

import itertools
import json
from math import comb

import numpy as np

from .combinat import rank_table, subsets
from .errors import (
    ArityOutOfRange,
    InvalidIndexSet,
    NotAUnit,
    NotInvertible,
    ParseError,
    RingMismatch,
    ShapeMismatch,
)
from .scalars import QQ, Ring, Scalar


def _side_for(indexing: str, n: int) -> int:
    if indexing == "plain":
        return n
    if indexing.startswith("wedge"):
        return comb(n, int(indexing[5:]))
    raise ShapeMismatch(f"unknown indexing {indexing!r}")


class Matrix:
    """Immutable square matrix over an exact ring.

    ``indexing`` is ``"plain"`` (rows labelled 1..n) or ``"wedgeM"`` (rows
    labelled by the M-subsets of [n] in lex order).
    """

    __slots__ = ("ring", "n", "indexing", "data")

    def __init__(self, ring: Ring, data, indexing: str = "plain", n: int | None = None):
        arr = data if isinstance(data, np.ndarray) and data.dtype == ring.dtype else ring.array(data)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ShapeMismatch(f"matrix must be square, got shape {arr.shape}")
        if n is None:
            if indexing != "plain":
                raise ShapeMismatch("wedge indexing requires n")
            n = arr.shape[0]
        if _side_for(indexing, n) != arr.shape[0]:
            raise ShapeMismatch(f"side {arr.shape[0]} does not match {indexing} indexing for n = {n}")
        arr = arr.copy() if arr.flags.writeable else arr
        arr.flags.writeable = False
        self.ring = ring
        self.n = n
        self.indexing = indexing
        self.data = arr

    # -- construction ---------------------------------------------------------

    @classmethod
    def _raw(cls, ring, arr, indexing, n):
        """Wrap an already canonical array (no per-entry coercion)."""
        return cls(ring, np.ascontiguousarray(arr, dtype=ring.dtype), indexing, n)

    @classmethod
    def identity(cls, ring: Ring, n: int, indexing: str = "plain") -> "Matrix":
        side = _side_for(indexing, n)
        arr = ring.zeros((side, side))
        for k in range(side):
            arr[k, k] = ring.one
        return cls._raw(ring, arr, indexing, n)

    @classmethod
    def scalar(cls, ring: Ring, n: int, c, indexing: str = "plain") -> "Matrix":
        return cls.identity(ring, n, indexing).scale(c)

    @classmethod
    def zeros(cls, ring: Ring, n: int, indexing: str = "plain") -> "Matrix":
        side = _side_for(indexing, n)
        return cls._raw(ring, ring.zeros((side, side)), indexing, n)

    # -- inspection -----------------------------------------------------------

    @property
    def side(self) -> int:
        return self.data.shape[0]

    @property
    def arity(self) -> int:
        return 1 if self.indexing == "plain" else int(self.indexing[5:])

    @property
    def labels(self) -> tuple:
        if self.indexing == "plain":
            return tuple((i,) for i in range(1, self.n + 1))
        return subsets(self.n, self.arity)

    def position(self, label) -> int:
        """0-based row/column of a label (int for plain, index set otherwise)."""
        if self.indexing == "plain":
            i = label[0] if isinstance(label, tuple) else label
            if not 1 <= i <= self.n:
                raise InvalidIndexSet(f"{label} out of range for n = {self.n}")
            return i - 1
        try:
            return rank_table(self.n, self.arity)[tuple(label)]
        except KeyError:
            raise InvalidIndexSet(f"{label} is not in the {self.indexing} labels for n = {self.n}") from None

    def entry(self, row, col) -> Scalar:
        return Scalar(self.ring, self.data[self.position(row), self.position(col)])

    def __getitem__(self, key):
        row, col = key
        return self.entry(row, col)

    def tolist(self) -> list:
        return [[v if not isinstance(v, np.integer) else int(v) for v in row] for row in self.data.tolist()]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.n == other.n
            and self.indexing == other.indexing
            and np.array_equal(self.data, other.data)
        )

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.ring}, {self.indexing}, n={self.n}, side={self.side})"

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.ring, self.n, self.indexing)

    # -- algebra --------------------------------------------------------------

    def _check_compatible(self, other: "Matrix"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.indexing != other.indexing or self.n != other.n:
            raise ShapeMismatch(f"{self!r} vs {other!r}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        return Matrix._raw(self.ring, self.ring.reduce(self.data + other.data), self.indexing, self.n)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        return Matrix._raw(self.ring, self.ring.reduce(self.data - other.data), self.indexing, self.n)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.ring, self.ring.reduce(-self.data), self.indexing, self.n)

    def scale(self, c) -> "Matrix":
        c = self.ring.coerce(c)
        return Matrix._raw(self.ring, self.ring.reduce(self.data * c), self.indexing, self.n)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.ring, self.data.T, self.indexing, self.n)

    def with_entry(self, row, col, value) -> "Matrix":
        arr = self.data.copy()
        arr[self.position(row), self.position(col)] = self.ring.coerce(value)
        return Matrix._raw(self.ring, arr, self.indexing, self.n)

    def change_ring(self, ring: Ring) -> "Matrix":
        """Reinterpret entries in another ring (e.g. reduce ZZ -> Z/m)."""
        return Matrix(ring, self.data.astype(object), self.indexing, self.n)

    def relabel(self, indexing: str, n: int) -> "Matrix":
        return Matrix._raw(self.ring, self.data, indexing, n)

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.tag,
            "n": self.n,
            "indexing": self.indexing,
            "entries": [[self.ring.format(v) for v in row] for row in self.tolist()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "Matrix":
        try:
            ring = Ring.from_tag(doc["ring"])
            n = int(doc["n"])
            indexing = doc.get("indexing", "plain")
            entries = doc["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed matrix document: {exc}") from None
        if indexing != "plain" and not (indexing.startswith("wedge") and indexing[5:].isdigit()):
            raise ParseError(f"unknown indexing {indexing!r}")
        side = _side_for(indexing, n)
        if entries and not isinstance(entries[0], list):
            if len(entries) != side * side:
                raise ParseError(f"expected {side * side} entries, got {len(entries)}")
            entries = [entries[k * side:(k + 1) * side] for k in range(side)]
        if len(entries) != side or any(len(r) != side for r in entries):
            raise ShapeMismatch(f"entries do not form a {side}x{side} array")
        rows = [[ring.parse(str(v)) for v in r] for r in entries]
        return cls(ring, rows, indexing, n)

    @classmethod
    def from_json(cls, text: str) -> "Matrix":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_dict(doc)


# -- products -----------------------------------------------------------------


def _dot(ring: Ring, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and ring.kind == "zmod":
        inner = a.shape[1]
        if inner * (ring.modulus - 1) ** 2 >= 1 << 62:
            return ring.reduce(a.astype(object) @ b.astype(object)).astype(np.int64)
    return ring.reduce(a @ b)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    a._check_compatible(b)
    return Matrix._raw(a.ring, _dot(a.ring, a.data, b.data), a.indexing, a.n)


def naive_matmul(a: Matrix, b: Matrix) -> Matrix:
    """Triple-loop product with scalar ring ops; reference for :func:`matmul`."""
    a._check_compatible(b)
    r = a.ring
    s = a.side
    out = [[r.zero] * s for _ in range(s)]
    for i in range(s):
        for j in range(s):
            acc = r.zero
            for k in range(s):
                acc = r.add(acc, r.mul(a.data[i, k], b.data[k, j]))
            out[i][j] = acc
    return Matrix(r, out, a.indexing, a.n)


# -- determinants -------------------------------------------------------------


def _py(v):
    return int(v) if isinstance(v, np.integer) else v


def _laplace(rows: list, ring: Ring):
    """Cofactor expansion along the first row; used for sizes <= 4."""
    k = len(rows)
    if k == 0:
        return ring.one
    if k == 1:
        return rows[0][0]
    if k == 2:
        return ring.sub(ring.mul(rows[0][0], rows[1][1]), ring.mul(rows[0][1], rows[1][0]))
    acc = ring.zero
    for c in range(k):
        if rows[0][c] == 0:
            continue
        sub = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = ring.mul(rows[0][c], _laplace(sub, ring))
        acc = ring.add(acc, term) if c % 2 == 0 else ring.sub(acc, term)
    return acc


def _bareiss(rows: list) -> int:
    """Fraction-free elimination over ZZ (exact divisions only)."""
    m = [list(r) for r in rows]
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(k - 1):
        if m[c][c] == 0:
            swap = next((r for r in range(c + 1, k) if m[r][c] != 0), None)
            if swap is None:
                return 0
            m[c], m[swap] = m[swap], m[c]
            sign = -sign
        p = m[c][c]
        for r in range(c + 1, k):
            mr = m[r]
            f = mr[c]
            mc = m[c]
            for j in range(c + 1, k):
                mr[j] = (p * mr[j] - f * mc[j]) // prev
            mr[c] = 0
        prev = p
    return sign * m[-1][-1]


def _row_reduce_field(ring: Ring, arr: np.ndarray, ncols: int | None = None):
    """Reduced row echelon form over a field; pivots searched in the first ``ncols`` columns.

    Returns (rref array, pivot columns, sign of row swaps, product of pivots).
    """
    A = np.array(arr, dtype=ring.dtype, copy=True)
    rows, cols = A.shape
    ncols = cols if ncols is None else ncols
    pivots = []
    sign = 1
    pivot_product = ring.one
    r = 0
    for c in range(ncols):
        if r >= rows:
            break
        nz = np.nonzero(A[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
            sign = -sign
        pv = _py(A[r, c])
        pivot_product = ring.mul(pivot_product, pv)
        A[r] = ring.reduce(A[r] * ring.inv(pv))
        col = A[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col != 0)[0]
        if len(hit):
            A[hit] = ring.reduce(A[hit] - np.outer(col[hit], A[r]))
        pivots.append(c)
        r += 1
    return A, pivots, sign, pivot_product


def _lift(a: Matrix) -> list:
    return [[int(v) for v in row] for row in a.data.tolist()]


def det(a: Matrix) -> Scalar:
    ring = a.ring
    if a.side <= 4:
        return Scalar(ring, _laplace([[_py(v) for v in row] for row in a.data.tolist()], ring))
    if ring.kind == "z":
        return Scalar(ring, _bareiss(_lift(a)))
    if ring.kind == "zmod" and not ring.is_field:
        # det is an integer polynomial in the entries, so lifting is exact
        return Scalar(ring, _bareiss(_lift(a)) % ring.modulus)
    _, pivots, sign, prod = _row_reduce_field(ring, a.data)
    if len(pivots) < a.side:
        return Scalar(ring, ring.zero)
    return Scalar(ring, ring.mul(prod, sign))


def minor(a: Matrix, I, J) -> Scalar:
    """Determinant of the submatrix on rows I and columns J (1-based positions)."""
    I, J = tuple(I), tuple(J)
    if len(I) != len(J) or len(I) > a.side:
        raise InvalidIndexSet(f"row set {I} and column set {J} are incompatible")
    for S in (I, J):
        if any(not 1 <= i <= a.side for i in S):
            raise InvalidIndexSet(f"{S} out of range 1..{a.side}")
    sub = a.data[np.ix_([i - 1 for i in I], [j - 1 for j in J])]
    if len(I) <= 4:
        return Scalar(a.ring, _laplace([[_py(v) for v in row] for row in sub.tolist()], a.ring))
    return det(Matrix._raw(a.ring, sub, "plain", len(I)))


def leibniz_det(a: Matrix) -> Scalar:
    """Permutation-sum determinant; brute-force reference for small sides."""
    ring = a.ring
    k = a.side
    acc = ring.zero
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for x in range(k) for y in range(x + 1, k) if perm[x] > perm[y])
        term = ring.one
        for r, c in enumerate(perm):
            term = ring.mul(term, _py(a.data[r, c]))
        acc = ring.sub(acc, term) if inv % 2 else ring.add(acc, term)
    return Scalar(ring, acc)


def is_invertible(a: Matrix) -> bool:
    return a.ring.is_unit(det(a).value)


def inverse(a: Matrix) -> Matrix:
    ring = a.ring
    d = det(a).value
    if not ring.is_unit(d):
        raise NotInvertible(f"determinant {ring.format(d)} is not a unit in {ring}")
    if ring.is_field:
        aug = np.concatenate([a.data, Matrix.identity(ring, a.n, a.indexing).data], axis=1)
        R, _, _, _ = _row_reduce_field(ring, aug, a.side)
        return Matrix._raw(ring, R[:, a.side:], a.indexing, a.n)
    # ZZ or composite modulus: adjugate over QQ, then scale by the inverse det
    lifted = Matrix(QQ, _lift(a), "plain", a.side)
    d_z = _bareiss(_lift(a))
    inv_q = inverse(lifted)
    adj = [[int(v * d_z) for v in row] for row in inv_q.data.tolist()]
    d_inv = ring.inv(ring.coerce(d_z))
    return Matrix(ring, [[ring.mul(ring.coerce(v), d_inv) for v in row] for row in adj], a.indexing, a.n)


def solve_linear(ring: Ring, A: np.ndarray, B: np.ndarray):
    """Solve ``A @ X = B`` column by column over a field.

    Returns ``(X, consistent)``: X has one column per column of B (free
    variables set to zero), ``consistent`` is a boolean per column.
    """
    if not ring.is_field:
        raise NotAUnit(f"{ring} is not a field")
    rows, k = A.shape
    aug = np.concatenate([np.asarray(A, dtype=ring.dtype), np.asarray(B, dtype=ring.dtype)], axis=1)
    R, pivots, _, _ = _row_reduce_field(ring, aug, k)
    rhs = R[:, k:]
    consistent = np.all(rhs[len(pivots):] == 0, axis=0) if len(pivots) < rows else np.ones(rhs.shape[1], bool)
    X = ring.zeros((k, B.shape[1]))
    for r, c in enumerate(pivots):
        X[c] = rhs[r]
    return X, [bool(v) for v in consistent]


# -- exterior powers ----------------------------------------------------------


def _signed_perms(m: int):
    for perm in itertools.permutations(range(m)):
        inv = sum(1 for x in range(m) for y in range(x + 1, m) if perm[x] > perm[y])
        yield perm, -1 if inv % 2 else 1


def wedge(m: int, x: Matrix) -> Matrix:
    """m-th compound matrix: entry (I, J) is the minor of x on rows I, columns J."""
    if x.indexing != "plain":
        raise ShapeMismatch("wedge expects a plain-indexed matrix")
    n = x.n
    if not 1 <= m <= n:
        raise ArityOutOfRange(f"need 1 <= m <= n, got m={m}, n={n}")
    ring = x.ring
    idx = np.array(subsets(n, m), dtype=np.intp) - 1
    M = len(idx)
    if m <= 4:
        acc = ring.zeros((M, M))
        for perm, sgn in _signed_perms(m):
            term = None
            for k in range(m):
                block = x.data[np.ix_(idx[:, k], idx[:, perm[k]])]
                term = block if term is None else ring.reduce(term * block)
            acc = acc + term if sgn > 0 else acc - term
        return Matrix._raw(ring, ring.reduce(acc), f"wedge{m}", n)
    out = ring.zeros((M, M))
    labels = subsets(n, m)
    for r, I in enumerate(labels):
        for c, J in enumerate(labels):
            out[r, c] = minor(x, I, J).value
    return Matrix._raw(ring, out, f"wedge{m}", n)


def random_matrix(ring: Ring, n: int, rng: np.random.Generator, low: int = -3, high: int = 3) -> Matrix:
    """Uniform residues for Z/m, integers in [low, high] otherwise."""
    if ring.kind == "zmod":
        vals = rng.integers(0, ring.modulus, size=(n, n))
    else:
        vals = rng.integers(low, high + 1, size=(n, n))
    return Matrix(ring, vals.astype(object), "plain", n)


def random_invertible(ring: Ring, n: int, rng: np.random.Generator, low: int = -3, high: int = 3) -> Matrix:
    """Rejection-sampled random matrix with unit determinant."""
    while True:
        x = random_matrix(ring, n, rng, low, high)
        if is_invertible(x):
            return x

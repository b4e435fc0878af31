"""Exterior numbers and the equation systems cutting out the exterior square of GL_n.

For g in GL_N (N = C(n, 2), rows and columns labelled by pairs) and a 4-set
H, the exterior number is

    a^H_{A,C}(g) = sum over ordered splittings H = B + D of sign(B, D) g[A,B] g[C,D].

g lies in the scheme iff a^H_{A,C} vanishes whenever A and C overlap, and
sign(A, C) a^H_{A,C} depends only on (A u C, H) otherwise.  That common value
is the theta-table entry theta[S, H]; for g = wedge(2, x) it is the 4x4 minor
of x on rows S and columns H.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .combinat import (
    check_index_set,
    format_index_set,
    pair_partitions,
    rank_table,
    sign_concat,
    subsets,
)
from .errors import (
    InvalidIndexSet,
    NotInvertible,
    NotInvertibleModulo,
    RingMismatch,
    ShapeMismatch,
    UnsupportedRing,
)
from .exalg import Matrix, det, inverse, is_invertible, matmul, solve_linear, wedge
from .scalars import ZZ, Ring, Scalar, Zmod

ZERO_CONSTRAINT = "ZeroConstraint"
CONSISTENCY_CONSTRAINT = "ConsistencyConstraint"

# theta determinants are reported only up to this side (n <= 9)
_THETA_DET_MAX_SIDE = 126


def _require_wedge2(g: Matrix):
    if g.indexing != "wedge2":
        raise ShapeMismatch(f"expected a wedge2-indexed matrix, got {g.indexing}")


def _col(g: Matrix, P) -> int:
    return g.position(P)


def _entry(g: Matrix, r: int, c: int):
    v = g.data[r, c]
    return int(v) if isinstance(v, np.integer) else v


# -- single exterior numbers ----------------------------------------------------


def exterior_number(g: Matrix, A, C, H) -> Scalar:
    """a^H_{A,C}(g), summed over the six ordered splittings of H."""
    _require_wedge2(g)
    n = g.n
    A = check_index_set(A, n, 2)
    C = check_index_set(C, n, 2)
    H = check_index_set(H, n, 4)
    ring = g.ring
    ra, rc = g.position(A), g.position(C)
    acc = ring.zero
    for part in pair_partitions(H):
        for B, D in ((part.B, part.D), (part.D, part.B)):
            term = ring.mul(_entry(g, ra, _col(g, B)), _entry(g, rc, _col(g, D)))
            acc = ring.add(acc, term) if part.sgn > 0 else ring.sub(acc, term)
    return Scalar(ring, acc)


def exterior_numbers_for(g: Matrix, H) -> np.ndarray:
    """All a^H_{A,C}(g) for one 4-set H as an N x N array (rows A, columns C)."""
    ring = g.ring
    acc = None
    for part in pair_partitions(H):
        u = g.data[:, _col(g, part.B)]
        v = g.data[:, _col(g, part.D)]
        outer = np.outer(u, v)
        term = ring.reduce(outer + outer.T)
        if acc is None:
            acc = term if part.sgn > 0 else ring.reduce(-term)
        else:
            acc = ring.reduce(acc + term if part.sgn > 0 else acc - term)
    return acc


# -- membership -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    A: tuple
    C: tuple
    H: tuple
    value: Scalar
    conflicting_key: tuple | None = None  # (A', C', H) of the representative splitting

    @property
    def key(self) -> tuple:
        return (self.A, self.C, self.H)

    def to_dict(self, n: int) -> dict:
        f = lambda I: format_index_set(I, n)
        out = {"kind": self.kind, "A": f(self.A), "C": f(self.C), "H": f(self.H), "value": str(self.value)}
        if self.conflicting_key is not None:
            a, c, h = self.conflicting_key
            out["conflicting_key"] = {"A": f(a), "C": f(c), "H": f(h)}
        return out


@dataclass
class MembershipReport:
    accepted: bool
    n: int
    ring: Ring
    theta: Matrix | None = None
    violation: Violation | None = None
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.accepted

    @property
    def verdict(self) -> str:
        return "accept" if self.accepted else "reject"

    def theta_entry(self, S, H) -> Scalar:
        return self.theta.entry(S, H)

    def theta_det(self) -> Scalar | None:
        """Determinant of the theta-table (recorded, never required to be a unit)."""
        if self.theta is None:
            return None
        return det(self.theta)

    def to_dict(self) -> dict:
        doc = {"verdict": self.verdict, "ring": self.ring.tag, "n": self.n}
        if self.theta is not None:
            quads = subsets(self.n, 4)
            nz = np.nonzero(self.theta.data)
            doc["theta"] = {
                f"{format_index_set(quads[s], self.n)}|{format_index_set(quads[h], self.n)}":
                    self.ring.format(self.theta.data[s, h])
                for s, h in zip(*nz)
            }
            doc["theta_det"] = str(self.theta_det()) if self.theta.side <= _THETA_DET_MAX_SIDE else None
        else:
            doc["theta"] = None
        doc["violation"] = self.violation.to_dict(self.n) if self.violation else None
        if len(self.violations) > 1:
            doc["violations"] = [v.to_dict(self.n) for v in self.violations]
        return doc

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


@lru_cache(maxsize=None)
def _sweep_layout(n: int):
    """Index arrays shared by every sweep at rank n."""
    pairs = subsets(n, 2)
    quads = subsets(n, 4)
    pos = rank_table(n, 2)
    N = len(pairs)
    overlap = np.zeros((N, N), dtype=bool)
    for a, P in enumerate(pairs):
        for c, Q in enumerate(pairs):
            overlap[a, c] = bool(set(P) & set(Q))
    upper = np.triu(np.ones((N, N), dtype=bool))
    zero_mask = overlap & upper
    Q = len(quads)
    a_idx = np.zeros((Q, 3), dtype=np.intp)
    c_idx = np.zeros((Q, 3), dtype=np.intp)
    sgn = np.zeros((Q, 3), dtype=np.int64)
    for s, S in enumerate(quads):
        for k, part in enumerate(pair_partitions(S)):
            a_idx[s, k] = pos[part.B]
            c_idx[s, k] = pos[part.D]
            sgn[s, k] = part.sgn
    return pairs, quads, zero_mask, a_idx, c_idx, sgn


def _sweep_one(g: Matrix, h_index: int, collect_all: bool):
    """Check every constraint for one H. Returns (theta column, violations)."""
    ring = g.ring
    pairs, quads, zero_mask, a_idx, c_idx, sgn = _sweep_layout(g.n)
    H = quads[h_index]
    E = exterior_numbers_for(g, H)
    vals = E[a_idx, c_idx]
    vals = ring.reduce(vals * sgn) if vals.dtype != object else ring.reduce(vals * sgn.astype(object))
    theta_col = vals[:, 0]
    bad_zero = np.argwhere(zero_mask & (E != 0))
    bad_cons = np.argwhere(vals[:, 1:] != theta_col[:, None])
    found = []
    for a, c in bad_zero:
        found.append((int(a), int(c), ZERO_CONSTRAINT, None))
    for s, k in bad_cons:
        a, c = int(a_idx[s, k + 1]), int(c_idx[s, k + 1])
        found.append((a, c, CONSISTENCY_CONSTRAINT, (int(a_idx[s, 0]), int(c_idx[s, 0]))))
    found.sort(key=lambda t: (t[0], t[1]))
    if not collect_all:
        found = found[:1]
    out = []
    for a, c, kind, rep in found:
        value = E[a, c]
        value = int(value) if isinstance(value, np.integer) else value
        conflict = (pairs[rep[0]], pairs[rep[1]], H) if rep else None
        out.append(Violation(kind, pairs[a], pairs[c], H, Scalar(ring, value), conflict))
    return theta_col, out


def _sweep(g: Matrix, h_range, collect_all: bool):
    cols = {}
    viol = []
    for h in h_range:
        col, v = _sweep_one(g, h, collect_all)
        cols[h] = col
        if v:
            viol.extend(v)
            if not collect_all:
                break
    return cols, viol


def membership(
    g: Matrix,
    equations_only: bool = False,
    full_report: bool = False,
    workers: int = 1,
) -> MembershipReport:
    """Decide whether g is a point of the exterior-square group scheme.

    Constraints are swept in lex order of (H, A, C) with A <= C; the first
    violated one is reported.  ``full_report`` keeps sweeping and lists every
    violation.  With ``workers > 1`` the H range is split into chunks and the
    lex-smallest violation wins, so the result does not depend on scheduling.
    """
    _require_wedge2(g)
    ring = g.ring
    if not equations_only and not is_invertible(g):
        raise NotInvertible(f"det(g) = {det(g)} is not a unit in {ring}")
    n = g.n
    nq = len(subsets(n, 4)) if n >= 4 else 0
    if workers > 1 and nq > 1:
        chunks = [range(k, nq, workers) for k in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda r: _sweep(g, r, full_report), chunks))
        cols = {}
        viol = []
        for c, v in results:
            cols.update(c)
            viol.extend(v)
    else:
        cols, viol = _sweep(g, range(nq), full_report)
    if viol:
        order = {Q: k for k, Q in enumerate(subsets(n, 4))}
        pos = rank_table(n, 2)
        viol.sort(key=lambda v: (order[v.H], pos[v.A], pos[v.C]))
        if not full_report:
            viol = viol[:1]
        return MembershipReport(False, n, ring, None, viol[0], viol)
    theta = ring.zeros((nq, nq))
    for h, col in cols.items():
        theta[:, h] = col
    return MembershipReport(True, n, ring, Matrix._raw(ring, theta, "wedge4", n) if n >= 4 else None)


def congruence_membership(g: Matrix, modulus: int, **kw) -> MembershipReport:
    """Membership of g (over ZZ) in the preimage of the scheme's points over ZZ/modulus."""
    _require_wedge2(g)
    if g.ring != ZZ:
        raise RingMismatch(f"congruence membership expects an integer matrix, got {g.ring}")
    if not isinstance(modulus, int) or modulus < 2:
        raise UnsupportedRing(f"modulus must be >= 2, got {modulus!r}")
    reduced = g.change_ring(Zmod(modulus))
    if not kw.pop("equations_only", False) and not is_invertible(reduced):
        raise NotInvertibleModulo(f"det(g) is not a unit modulo {modulus}")
    return membership(reduced, equations_only=True, **kw)


# -- theta tables -----------------------------------------------------------------


def theta_from_minors(x: Matrix) -> Matrix:
    """theta[S, H] = 4x4 minor of x on rows S, columns H."""
    return wedge(4, x)


def theta_compose(theta_g: Matrix, theta_h: Matrix) -> Matrix:
    """theta table of g*h from those of g and h."""
    if theta_g.indexing != "wedge4" or theta_h.indexing != "wedge4":
        raise ShapeMismatch("theta tables must be wedge4-indexed")
    return matmul(theta_g, theta_h)


def delta_table(ring: Ring, n: int) -> Matrix:
    return Matrix.identity(ring, n, "wedge4")


# -- wedged transvections -----------------------------------------------------------


def _shift(P: tuple, i: int, j: int) -> tuple:
    return tuple(sorted(j if p == i else p for p in P))


def wedge_transvection_entry(i: int, j: int, xi, L: tuple, M: tuple, ring: Ring = ZZ):
    """Entry (L, M) of wedge(2, t_{i,j}(xi)) without forming the matrix."""
    if L == M:
        return ring.one
    if i in L and j not in L and M == _shift(L, i, j):
        k = next(p for p in L if p != i)
        return ring.coerce(xi) if (i < k) == (j < k) else ring.neg(ring.coerce(xi))
    return ring.zero


def transvection_ext_numbers(n: int, i: int, j: int, xi, A, C, H, ring: Ring = ZZ) -> Scalar:
    """Closed form of a^H_{A,C}(wedge(2, t_{i,j}(xi))).

    Only three kinds of splitting H = B + D can contribute: B = A, D = C when
    H = A + C; B = A with D the i->j shift of C; and B the i->j shift of A
    with D = C.  When i lies in both A and C the last two occur together and
    cancel.
    """
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidIndexSet(f"bad transvection indices ({i}, {j}) for n = {n}")
    A = check_index_set(A, n, 2)
    C = check_index_set(C, n, 2)
    H = check_index_set(H, n, 4)
    xi = ring.coerce(xi)
    if not set(A) & set(C) and tuple(sorted(A + C)) == H:
        return Scalar(ring, sign_concat(A, C))
    total = ring.zero
    if i in C and j not in C:
        D = _shift(C, i, j)
        if not set(A) & set(D) and tuple(sorted(A + D)) == H:
            total = ring.add(total, ring.mul(sign_concat(A, D), wedge_transvection_entry(i, j, xi, C, D, ring)))
    if i in A and j not in A:
        B = _shift(A, i, j)
        if not set(B) & set(C) and tuple(sorted(B + C)) == H:
            total = ring.add(total, ring.mul(sign_concat(B, C), wedge_transvection_entry(i, j, xi, A, B, ring)))
    return Scalar(ring, total)


# -- second system: B-matrices ---------------------------------------------------------


def b_matrix(I, n: int, ring: Ring = ZZ) -> Matrix:
    """Symmetric N x N matrix with sign(M, L) at (M, L) whenever M + L = I."""
    I = check_index_set(I, n, 4)
    pos = rank_table(n, 2)
    arr = ring.zeros((len(pos), len(pos)))
    for part in pair_partitions(I):
        s = ring.coerce(part.sgn)
        arr[pos[part.B], pos[part.D]] = s
        arr[pos[part.D], pos[part.B]] = s
    return Matrix._raw(ring, arr, "wedge2", n)


def quadratic_value(B: Matrix, x) -> Scalar:
    """x^t B x for a coordinate vector x."""
    v = np.array([B.ring.coerce(t) for t in x], dtype=object)
    return Scalar(B.ring, v @ (B.data.astype(object) @ v))


@dataclass
class SecondFormReport:
    accepted: bool
    n: int
    ring: Ring
    alpha: Matrix | None = None  # alpha[J, I] is the coefficient of B_J in the identity for B_I
    failed_quad: tuple | None = None

    def __bool__(self):
        return self.accepted

    @property
    def verdict(self) -> str:
        return "accept" if self.accepted else "reject"

    def to_dict(self) -> dict:
        doc = {"verdict": self.verdict, "ring": self.ring.tag, "n": self.n}
        if self.failed_quad is not None:
            doc["failed_quad"] = format_index_set(self.failed_quad, self.n)
        return doc


def second_form_membership(g: Matrix, equations_only: bool = False) -> SecondFormReport:
    """Solve g^t B_I = sum_J alpha_J^I B_J g^{-1} for the alphas, one 4-set I at a time."""
    _require_wedge2(g)
    ring = g.ring
    if not ring.is_field:
        raise UnsupportedRing(f"second-form check needs a field, got {ring}")
    if not is_invertible(g):
        raise NotInvertible(f"det(g) = {det(g)} is not a unit in {ring}")
    n = g.n
    quads = subsets(n, 4) if n >= 4 else ()
    if not quads:
        return SecondFormReport(True, n, ring, None)
    g_inv = inverse(g)
    gt = g.T
    Bs = [b_matrix(I, n, ring) for I in quads]
    coef = np.stack([matmul(B, g_inv).data.reshape(-1) for B in Bs], axis=1)
    rhs = np.stack([matmul(gt, B).data.reshape(-1) for B in Bs], axis=1)
    X, ok = solve_linear(ring, coef, rhs)
    for k, good in enumerate(ok):
        if not good:
            return SecondFormReport(False, n, ring, None, quads[k])
    return SecondFormReport(True, n, ring, Matrix._raw(ring, X, "wedge4", n))

"""Quadratic Plücker relations for Gr(2, n) and the action of GL_N on them.

A :class:`QuadForm` is a quadratic polynomial in the coordinates x_P,
P ranging over the 2-subsets of [n].  Coordinates are always written with an
ascending pair; x_ba = -x_ab is folded into the coefficient on construction.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .combinat import (
    check_index_set,
    format_index_set,
    normalize_pair,
    pair_partitions,
    parse_index_set,
    rank_table,
    subsets,
)
from .errors import OverlappingIndices, ShapeMismatch
from .exalg import Matrix
from .scalars import ZZ, Ring, Scalar


def _key(P: tuple, Q: tuple) -> tuple:
    return (P, Q) if P <= Q else (Q, P)


@dataclass(frozen=True)
class QuadForm:
    """sum over unordered {P, Q} of coeffs[(P, Q)] * x_P * x_Q  (P <= Q)."""

    n: int
    ring: Ring = ZZ
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (P, Q), c in self.coeffs.items():
            P = check_index_set(P, self.n, 2)
            Q = check_index_set(Q, self.n, 2)
            k = _key(P, Q)
            v = self.ring.add(clean.get(k, self.ring.zero), self.ring.coerce(c))
            clean[k] = v
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(clean.items()) if v != 0})

    def coeff(self, P, Q) -> Scalar:
        return Scalar(self.ring, self.coeffs.get(_key(tuple(P), tuple(Q)), self.ring.zero))

    def __add__(self, other: "QuadForm") -> "QuadForm":
        if other.n != self.n or other.ring != self.ring:
            raise ShapeMismatch("quadratic forms over different n or rings")
        merged = dict(self.coeffs)
        for k, v in other.coeffs.items():
            merged[k] = self.ring.add(merged.get(k, self.ring.zero), v)
        return QuadForm(self.n, self.ring, merged)

    def __neg__(self) -> "QuadForm":
        return self.scale(-1)

    def __sub__(self, other: "QuadForm") -> "QuadForm":
        return self + (-other)

    def scale(self, c) -> "QuadForm":
        c = self.ring.coerce(c)
        return QuadForm(self.n, self.ring, {k: self.ring.mul(v, c) for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (P, Q), c in self.coeffs.items():
            mono = f"x{format_index_set(P, self.n)}" + (
                "^2" if P == Q else f"*x{format_index_set(Q, self.n)}"
            )
            parts.append(f"{self.ring.format(c)}*{mono}")
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {
            f"{format_index_set(P, self.n)}|{format_index_set(Q, self.n)}": self.ring.format(c)
            for (P, Q), c in self.coeffs.items()
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict, n: int, ring: Ring = ZZ) -> "QuadForm":
        coeffs = {}
        for key, val in doc.items():
            left, right = key.split("|")
            coeffs[(parse_index_set(left, n, 2), parse_index_set(right, n, 2))] = ring.parse(str(val))
        return cls(n, ring, coeffs)


def plucker_poly(i: int, J, n: int | None = None, ring: Ring = ZZ) -> QuadForm:
    """f_{i,J} = sum_h (-1)^h x_{i j_h} x_{J - j_h} for a 3-set J not containing i."""
    J = tuple(J)
    n = n if n is not None else max(i, *J)
    J = check_index_set(J, n, 3)
    if i in J:
        raise OverlappingIndices(f"{i} lies in {J}")
    if not 1 <= i <= n:
        raise OverlappingIndices(f"{i} is outside [1, {n}]")
    coeffs = {}
    for h, jh in enumerate(J, start=1):
        P, s = normalize_pair(i, jh)
        Q = tuple(j for j in J if j != jh)
        k = _key(P, Q)
        coeffs[k] = coeffs.get(k, 0) + s * (-1) ** h
    return QuadForm(n, ring, coeffs)


def canonical_form(S, n: int, ring: Ring = ZZ) -> QuadForm:
    S = check_index_set(S, n, 4)
    return plucker_poly(S[0], S[1:], n, ring)


def canonical_basis(n: int, ring: Ring = ZZ) -> list:
    """f_{i,{j,k,l}} for i < j < k < l, in lex order of the 4-set; empty for n < 4."""
    if n < 4:
        return []
    return [canonical_form(S, n, ring) for S in subsets(n, 4)]


def combine(theta: dict, n: int, ring: Ring = ZZ) -> QuadForm:
    """sum_S theta[S] * f_S over the canonical basis."""
    total = QuadForm(n, ring)
    for S, t in theta.items():
        total = total + canonical_form(S, n, ring).scale(t)
    return total


class IdealVerdict(NamedTuple):
    accepted: bool
    theta: dict | None
    reason: str | None = None

    def __bool__(self):
        return self.accepted


def in_ideal(b: QuadForm) -> IdealVerdict:
    """Decide whether b lies in the degree-2 part of the Plücker ideal.

    On acceptance ``theta`` maps every 4-set S to the coefficient of the
    canonical generator f_S, so that ``b == combine(theta)``.
    """
    ring = b.ring
    for (P, Q), c in b.coeffs.items():
        if set(P) & set(Q):
            return IdealVerdict(False, None, f"overlapping monomial x{P}*x{Q} has coefficient {c}")
    theta = {}
    for S in subsets(b.n, 4):
        vals = []
        for part in pair_partitions(S):
            c = b.coeffs.get((part.B, part.D), ring.zero)
            # canonical generator carries -sign(B, D) on x_B x_D
            vals.append(ring.mul(c, -part.sgn))
        if any(v != vals[0] for v in vals[1:]):
            return IdealVerdict(False, None, f"inconsistent coefficients on the 4-set {S}")
        theta[S] = vals[0]
    return IdealVerdict(True, theta)


def act(g: Matrix, f: QuadForm) -> QuadForm:
    """Substitute x_P -> sum_A g[A, P] x_A into f and collect unordered monomials."""
    if g.indexing != "wedge2" or g.n != f.n:
        raise ShapeMismatch(f"need a wedge2 matrix with n = {f.n}, got {g!r}")
    if g.ring != f.ring:
        f = QuadForm(f.n, g.ring, {k: g.ring.coerce(v) for k, v in f.coeffs.items()})
    ring = g.ring
    pos = rank_table(f.n, 2)
    acc = ring.zeros((g.side, g.side))
    for (P, Q), c in f.coeffs.items():
        u = g.data[:, pos[P]]
        v = g.data[:, pos[Q]]
        acc = ring.reduce(acc + ring.reduce(np.outer(u, v) * c))
    pairs = subsets(f.n, 2)
    coeffs = {}
    for a in range(len(pairs)):
        coeffs[(pairs[a], pairs[a])] = acc[a, a]
        for c_ in range(a + 1, len(pairs)):
            coeffs[(pairs[a], pairs[c_])] = ring.add(acc[a, c_], acc[c_, a])
    return QuadForm(f.n, ring, {k: int(v) if isinstance(v, np.integer) else v for k, v in coeffs.items()})

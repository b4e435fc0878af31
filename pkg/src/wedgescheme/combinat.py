"""Index sets: m-subsets of [n] in lexicographic order, ranking, signs.

Index sets are plain tuples of strictly increasing 1-based integers.  The
lexicographic order produced by :func:`subsets` fixes the row/column order of
every wedge-indexed matrix in the package.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

from .errors import ArityOutOfRange, InvalidIndexSet, ParseError

IndexSet = tuple


@lru_cache(maxsize=None)
def subsets(n: int, m: int) -> tuple:
    """All m-element subsets of [n] as increasing tuples, in lex order."""
    if not (0 <= m <= n):
        raise ArityOutOfRange(f"need 0 <= m <= n, got m={m}, n={n}")
    return tuple(combinations(range(1, n + 1), m))


@lru_cache(maxsize=None)
def rank_table(n: int, m: int) -> dict:
    """Mapping index set -> lex position, for hot loops."""
    return {s: k for k, s in enumerate(subsets(n, m))}


def check_index_set(I, n: int, arity: int | None = None) -> tuple:
    I = tuple(I)
    if arity is not None and len(I) != arity:
        raise InvalidIndexSet(f"{I} does not have {arity} elements")
    if any(not isinstance(i, int) for i in I):
        raise InvalidIndexSet(f"{I} has non-integer entries")
    if any(a >= b for a, b in zip(I, I[1:])):
        raise InvalidIndexSet(f"{I} is not strictly increasing")
    if I and (I[0] < 1 or I[-1] > n):
        raise InvalidIndexSet(f"{I} is not contained in [1, {n}]")
    return I


def rank(I, n: int) -> int:
    """Position of I in ``subsets(n, len(I))``."""
    I = check_index_set(I, n)
    m = len(I)
    r = 0
    prev = 0
    for pos, c in enumerate(I):
        # subsets agreeing on the prefix but with a smaller entry here
        for smaller in range(prev + 1, c):
            r += comb(n - smaller, m - pos - 1)
        prev = c
    return r


def unrank(r: int, n: int, m: int) -> tuple:
    """Inverse of :func:`rank`."""
    total = comb(n, m) if 0 <= m <= n else 0
    if not (0 <= m <= n):
        raise ArityOutOfRange(f"need 0 <= m <= n, got m={m}, n={n}")
    if not (0 <= r < total):
        raise InvalidIndexSet(f"rank {r} out of range for C({n},{m}) = {total}")
    out = []
    c = 1
    for pos in range(m):
        while True:
            block = comb(n - c, m - pos - 1)
            if r < block:
                break
            r -= block
            c += 1
        out.append(c)
        c += 1
    return tuple(out)


def sign_concat(I, J) -> int:
    """Sign of the word I followed by J; 0 when the sets overlap."""
    if set(I) & set(J):
        return 0
    inversions = sum(1 for a in I for b in J if a > b)
    return -1 if inversions % 2 else 1


class PairPartition(NamedTuple):
    B: tuple
    D: tuple
    sgn: int


def pair_partitions(H) -> tuple:
    """The three splittings of a 4-set into two pairs, lex order of B.

    B always holds the smallest element of H, so ``B < D``.  The sign is
    symmetric: ``sign_concat(B, D) == sign_concat(D, B)`` for 2+2 splits.
    """
    H = tuple(H)
    if len(H) != 4 or len(set(H)) != 4:
        raise InvalidIndexSet(f"{H} is not a 4-set")
    H = tuple(sorted(H))
    h0 = H[0]
    out = []
    for other in H[1:]:
        B = (h0, other)
        D = tuple(x for x in H if x not in B)
        out.append(PairPartition(B, D, sign_concat(B, D)))
    return tuple(out)


def normalize_pair(a: int, b: int) -> tuple:
    """Ascending pair plus the sign picked up by e_a^e_b = -e_b^e_a."""
    if a == b:
        raise InvalidIndexSet(f"degenerate pair ({a}, {b})")
    return ((a, b), 1) if a < b else ((b, a), -1)


def format_index_set(I, n: int) -> str:
    """'13' style when n <= 9, '1,3' otherwise."""
    if n <= 9:
        return "".join(str(i) for i in I)
    return ",".join(str(i) for i in I)


def parse_index_set(text: str, n: int, arity: int | None = None) -> tuple:
    s = text.strip()
    try:
        if "," in s:
            I = tuple(int(p) for p in s.split(","))
        elif n <= 9:
            I = tuple(int(ch) for ch in s)
        else:
            raise ParseError(f"index set {s!r} needs commas for n = {n}")
    except ValueError:
        raise ParseError(f"bad index set {s!r}") from None
    return check_index_set(I, n, arity)

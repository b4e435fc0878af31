"""Exact coefficient rings: the integers, the rationals and the residues mod m.

A :class:`Ring` is a small immutable tag that knows how to canonicalize,
combine, parse and print payloads.  Matrices keep raw payloads (``int`` or
:class:`fractions.Fraction`) next to their ring; :class:`Scalar` is the boxed,
ring-checked value handed out at API boundaries.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NotAUnit, ParseError, RingMismatch, UnsupportedRing

# largest modulus for which sums of a few products of residues fit in int64
_INT64_MODULUS_LIMIT = 1 << 28

_INT_RE = re.compile(r"^[+-]?\d+$")
_FRAC_RE = re.compile(r"^([+-]?\d+)/(\d+)$")


@lru_cache(maxsize=None)
def is_prime(m: int) -> bool:
    from sympy import isprime  # deferred: only needed when a modulus is first queried

    return bool(isprime(m))


@dataclass(frozen=True)
class Ring:
    """Coefficient ring tag. Use :data:`ZZ`, :data:`QQ` or :func:`Zmod`."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "zmod":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise UnsupportedRing(f"modulus must be an integer >= 2, got {self.modulus!r}")
        elif self.kind in ("z", "q"):
            if self.modulus is not None:
                raise UnsupportedRing(f"ring {self.kind!r} takes no modulus")
        else:
            raise UnsupportedRing(f"unknown ring kind {self.kind!r}")

    # -- identification -----------------------------------------------------

    @property
    def tag(self) -> str:
        return f"zmod:{self.modulus}" if self.kind == "zmod" else self.kind

    @classmethod
    def from_tag(cls, tag: str) -> "Ring":
        tag = tag.strip().lower()
        if tag in ("z", "q"):
            return cls(tag)
        if tag.startswith("zmod:"):
            try:
                m = int(tag[5:])
            except ValueError:
                raise ParseError(f"bad ring tag {tag!r}") from None
            return cls("zmod", m)
        raise ParseError(f"bad ring tag {tag!r}")

    def __str__(self):
        return {"z": "ZZ", "q": "QQ"}.get(self.kind, f"Z/{self.modulus}")

    __repr__ = __str__

    @property
    def is_field(self) -> bool:
        if self.kind == "q":
            return True
        return self.kind == "zmod" and is_prime(self.modulus)

    @property
    def dtype(self):
        """numpy dtype used for dense storage of this ring's payloads."""
        if self.kind == "zmod" and self.modulus <= _INT64_MODULUS_LIMIT:
            return np.int64
        return object

    # -- payload arithmetic -------------------------------------------------

    def coerce(self, value):
        """Canonical payload for ``value`` (int, Fraction, Scalar or text)."""
        if isinstance(value, Scalar):
            if value.ring != self:
                raise RingMismatch(f"{value.ring} value used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (bool, np.bool_)):
            value = int(value)
        if isinstance(value, np.integer):
            value = int(value)
        if self.kind == "q":
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        elif isinstance(value, Fraction):
            if value.denominator == 1:
                value = value.numerator
            elif self.kind == "zmod":
                return value.numerator * self.inv(value.denominator % self.modulus) % self.modulus
            else:
                raise RingMismatch(f"{value} is not an integer")
        if isinstance(value, int):
            return value % self.modulus if self.kind == "zmod" else value
        raise RingMismatch(f"cannot interpret {value!r} in {self}")

    @property
    def zero(self):
        return Fraction(0) if self.kind == "q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "q" else 1

    def add(self, a, b):
        return self._fix(a + b)

    def sub(self, a, b):
        return self._fix(a - b)

    def mul(self, a, b):
        return self._fix(a * b)

    def neg(self, a):
        return self._fix(-a)

    def _fix(self, v):
        return v % self.modulus if self.kind == "zmod" else v

    def is_unit(self, a) -> bool:
        if self.kind == "z":
            return a in (1, -1)
        if self.kind == "q":
            return a != 0
        return math.gcd(a, self.modulus) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{self.format(a)} is not a unit in {self}")
        if self.kind == "z":
            return a
        if self.kind == "q":
            return 1 / a
        return pow(a, -1, self.modulus)

    # -- text ---------------------------------------------------------------

    def parse(self, text: str):
        s = str(text).strip()
        if _INT_RE.match(s):
            return self.coerce(int(s))
        m = _FRAC_RE.match(s)
        if m and self.kind != "z":
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise ParseError(f"zero denominator in {s!r}")
            try:
                return self.coerce(Fraction(num, den))
            except NotAUnit:
                raise ParseError(f"{s!r} has no value in {self}") from None
        raise ParseError(f"cannot parse scalar {s!r} in {self}")

    def format(self, a) -> str:
        return str(a)

    # -- arrays -------------------------------------------------------------

    def array(self, rows) -> np.ndarray:
        """Dense canonical numpy array from nested sequences of payload-like values."""
        src = np.asarray(rows, dtype=object)
        if src.ndim != 2:
            raise ValueError("expected a 2-d array")
        out = np.empty(src.shape, dtype=self.dtype)
        for idx, v in np.ndenumerate(src):
            out[idx] = self.coerce(v)
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Canonicalize an array produced by raw numpy arithmetic."""
        if self.kind == "zmod":
            return np.mod(arr, self.modulus)
        if self.kind == "q" and arr.dtype == object:
            return _to_fraction(arr)
        return arr

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(self.zero)
            return out
        return np.zeros(shape, dtype=self.dtype)


_to_fraction = np.frompyfunc(Fraction, 1, 1)

ZZ = Ring("z")
QQ = Ring("q")


def Zmod(m: int) -> Ring:
    return Ring("zmod", m)


@dataclass(frozen=True)
class Scalar:
    """An element of a :class:`Ring`, stored in canonical form."""

    ring: Ring
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.coerce(self.value))

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.ring.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else Scalar(self.ring, self.ring.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else Scalar(self.ring, self.ring.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else Scalar(self.ring, self.ring.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else Scalar(self.ring, self.ring.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def inv(self) -> "Scalar":
        return Scalar(self.ring, self.ring.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, np.integer, Fraction)):
            try:
                return self.value == self.ring.coerce(other)
            except (RingMismatch, NotAUnit):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"Scalar({self.ring}, {self})"


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def inv(a: Scalar) -> Scalar:
    return a.inv()

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wedgescheme import QQ, ZZ, Ring, Scalar, Zmod
from wedgescheme.errors import NotAUnit, RingMismatch, UnsupportedRing
from wedgescheme.scalars import add, inv, mul, sub


def test_integer_product():
    assert mul(Scalar(ZZ, 2), Scalar(ZZ, 3)) == Scalar(ZZ, 6)


def test_modular_sum_wraps():
    assert add(Scalar(Zmod(97), 96), Scalar(Zmod(97), 5)).value == 4


def test_rational_product_is_reduced():
    r = mul(Scalar(QQ, Fraction(1, 2)), Scalar(QQ, Fraction(2, 3)))
    assert r.value == Fraction(1, 3)
    assert str(r) == "1/3"


def test_inverses():
    assert inv(Scalar(Zmod(7), 3)).value == 5
    assert inv(Scalar(ZZ, -1)).value == -1
    with pytest.raises(NotAUnit):
        inv(Scalar(ZZ, 0))
    with pytest.raises(NotAUnit):
        inv(Scalar(Zmod(6), 2))
    with pytest.raises(NotAUnit):
        inv(Scalar(ZZ, 2))


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatch):
        add(Scalar(ZZ, 1), Scalar(Zmod(5), 1))
    with pytest.raises(RingMismatch):
        sub(Scalar(QQ, 1), Scalar(ZZ, 1))


def test_ring_tags_round_trip():
    for ring in (ZZ, QQ, Zmod(2), Zmod(97), Zmod(2**61 - 1)):
        assert Ring.from_tag(ring.tag) == ring
    with pytest.raises(UnsupportedRing):
        Zmod(1)


def test_parse_and_format():
    assert QQ.parse("-6/4") == Fraction(-3, 2)
    assert QQ.format(Fraction(-3, 2)) == "-3/2"
    assert Zmod(5).parse("-1") == 4
    assert ZZ.parse("+12") == 12


def test_canonical_forms():
    assert Scalar(Zmod(5), 12) == Scalar(Zmod(5), 2)
    assert Scalar(QQ, Fraction(2, -4)).value.denominator == 2
    assert Scalar(Zmod(5), 7).value == 2


def test_field_detection():
    assert QQ.is_field and Zmod(97).is_field
    assert not ZZ.is_field and not Zmod(6).is_field


RINGS = [ZZ, QQ, Zmod(97), Zmod(12), Zmod(2**40 + 15)]


def _values(ring):
    if ring.kind == "q":
        return st.fractions(max_denominator=50).filter(lambda f: abs(f) < 10**6)
    return st.integers(-(10**12), 10**12)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
def test_ring_axioms(ring):
    @given(_values(ring), _values(ring), _values(ring))
    def check(a, b, c):
        x, y, z = (Scalar(ring, v) for v in (a, b, c))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        assert x - x == Scalar(ring, 0)

    check()


@given(st.integers(1, 96))
def test_prime_field_inverse(a):
    x = Scalar(Zmod(97), a)
    assert x * x.inv() == Scalar(Zmod(97), 1)


@given(st.integers(-(10**6), 10**6), st.integers(-(10**6), 10**6))
def test_canonical_uniqueness_mod(a, b):
    ring = Zmod(1009)
    assert (Scalar(ring, a) == Scalar(ring, b)) == ((a - b) % 1009 == 0)


def test_primality_matches_trial_division():
    from wedgescheme.scalars import is_prime

    def slow(m):
        return m >= 2 and all(m % p for p in range(2, int(m**0.5) + 1))

    assert [m for m in range(5000) if is_prime(m)] == [m for m in range(5000) if slow(m)]
    assert is_prime(2**61 - 1) and not is_prime(3215031751)  # the latter is a strong pseudoprime to bases 2, 3, 5, 7

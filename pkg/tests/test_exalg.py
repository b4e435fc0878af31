import itertools
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wedgescheme import QQ, ZZ, Matrix, Zmod, det, inverse, minor, wedge
from wedgescheme.combinat import subsets
from wedgescheme.errors import ArityOutOfRange, InvalidIndexSet, NotInvertible, ParseError, RingMismatch, ShapeMismatch
from wedgescheme.exalg import leibniz_det, naive_matmul, random_invertible, random_matrix, solve_linear
from wedgescheme.transvect import elementary

F97 = Zmod(97)


def test_identity_is_neutral(rng):
    a = random_matrix(F97, 5, rng)
    assert a @ Matrix.identity(F97, 5) == a
    assert Matrix.identity(F97, 5) @ a == a


def test_transvection_additivity():
    assert elementary(ZZ, 4, 1, 2, 3) @ elementary(ZZ, 4, 1, 2, -7) == elementary(ZZ, 4, 1, 2, -4)


def test_matmul_matches_naive(rng):
    for ring in (F97, ZZ, QQ, Zmod(2**61 - 1)):
        for n in (3, 5):
            a, b = random_matrix(ring, n, rng), random_matrix(ring, n, rng)
            assert a @ b == naive_matmul(a, b)


def test_matmul_shape_and_ring_errors():
    with pytest.raises(ShapeMismatch):
        Matrix.identity(ZZ, 3) @ Matrix.identity(ZZ, 4)
    with pytest.raises(RingMismatch):
        Matrix.identity(ZZ, 3) @ Matrix.identity(F97, 3)
    with pytest.raises(ShapeMismatch):
        Matrix.identity(ZZ, 4) @ Matrix.identity(ZZ, 4, "wedge2")


def test_int64_overflow_is_avoided():
    big = 3 * 10**9
    a = Matrix(ZZ, [[big, big], [big, big]])
    assert (a @ a).entry(1, 1).value == 2 * big * big


def test_minor_examples():
    I4 = Matrix.identity(ZZ, 4)
    assert minor(I4, (1, 3), (1, 3)) == 1
    assert minor(I4, (1, 3), (1, 4)) == 0
    a, b, c, d = 2, 7, -3, 5
    m = Matrix(ZZ, [[a, b], [c, d]])
    assert minor(m, (1, 2), (1, 2)) == a * d - b * c


def test_minor_errors():
    with pytest.raises(InvalidIndexSet):
        minor(Matrix.identity(ZZ, 3), (1, 2), (1,))
    with pytest.raises(InvalidIndexSet):
        minor(Matrix.identity(ZZ, 3), (1, 4), (1, 2))


def _perm_det(rows):
    total = 0
    n = len(rows)
    for p in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = (-1) ** inv
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def test_minor_against_permutation_sum(rng):
    x = random_matrix(ZZ, 6, rng, -9, 9)
    for _ in range(20):
        I = tuple(sorted(rng.choice(np.arange(1, 7), 4, replace=False).tolist()))
        J = tuple(sorted(rng.choice(np.arange(1, 7), 4, replace=False).tolist()))
        sub = [[x.entry(i, j).value for j in J] for i in I]
        assert minor(x, I, J) == _perm_det(sub)


def test_minor_alternates_under_row_swap(rng):
    x = random_matrix(ZZ, 5, rng)
    full = [[x.entry(i, j).value for j in (1, 3, 4)] for i in (1, 2, 5)]
    swapped = [full[1], full[0], full[2]]
    assert _perm_det(swapped) == -minor(x, (1, 2, 5), (1, 3, 4)).value


@pytest.mark.parametrize("ring", [ZZ, QQ, F97, Zmod(12), Zmod(2**61 - 1)], ids=lambda r: r.tag)
def test_det_agrees_with_leibniz(ring, rng):
    for n in (1, 2, 3, 5, 6):
        a = random_matrix(ring, n, rng, -5, 5)
        assert det(a) == leibniz_det(a)


def test_det_of_rational_matrix():
    a = Matrix(QQ, [["1/2", "1/3"], ["1/4", "1/5"]])
    assert det(a).value == Fraction(1, 10) - Fraction(1, 12)


def test_inverse_examples(rng):
    assert inverse(Matrix.identity(F97, 4)).is_identity()
    assert inverse(elementary(ZZ, 4, 1, 2, 5)) == elementary(ZZ, 4, 1, 2, -5)
    F101 = Zmod(101)
    a = random_invertible(F101, 5, rng)
    assert (a @ inverse(a)).is_identity() and (inverse(a) @ a).is_identity()


def test_inverse_over_composite_and_rationals(rng):
    a = random_invertible(Zmod(6), 4, rng)
    assert (a @ inverse(a)).is_identity()
    q = random_invertible(QQ, 4, rng)
    assert (q @ inverse(q)).is_identity()


def test_singular_inverse_fails():
    with pytest.raises(NotInvertible):
        inverse(Matrix(ZZ, [[2, 0], [0, 1]]))
    with pytest.raises(NotInvertible):
        inverse(Matrix(F97, [[1, 2], [2, 4]]))


def test_solve_linear_flags_inconsistency():
    A = F97.array([[1, 1], [2, 2]])
    B = F97.array([[3, 1], [6, 5]])
    X, ok = solve_linear(F97, A, B)
    assert ok == [True, False]
    assert (F97.reduce(A @ X[:, :1]) == B[:, :1]).all()


def test_wedge_examples():
    assert wedge(2, Matrix.identity(ZZ, 5)).is_identity()
    g = wedge(2, elementary(ZZ, 3, 1, 2, 7))
    expected = Matrix.identity(ZZ, 3, "wedge2").with_entry((1, 3), (2, 3), 7)
    assert g == expected
    c = wedge(2, Matrix.scalar(ZZ, 4, 3))
    assert c == Matrix.scalar(ZZ, 4, 9, "wedge2")


def test_wedge_arity_errors():
    with pytest.raises(ArityOutOfRange):
        wedge(5, Matrix.identity(ZZ, 4))
    with pytest.raises(ArityOutOfRange):
        wedge(0, Matrix.identity(ZZ, 4))


def test_wedge_entries_are_minors(rng):
    x = random_matrix(ZZ, 6, rng)
    for m in (1, 2, 3, 4, 6):
        w = wedge(m, x)
        for I, J in itertools.islice(itertools.product(subsets(6, m), repeat=2), 0, None, 7):
            assert w.entry(I, J) == minor(x, I, J)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_cauchy_binet(n, rng):
    for _ in range(3):
        x, y = random_matrix(F97, n, rng), random_matrix(F97, n, rng)
        for m in (2, 3, 4):
            assert wedge(m, x @ y) == wedge(m, x) @ wedge(m, y)


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 5), st.integers(0, 2**32))
def test_sylvester_franke(n, seed):
    x = random_matrix(ZZ, n, np.random.default_rng(seed))
    assert det(wedge(2, x)) == det(x).value ** (n - 1)


def test_json_round_trip(rng):
    for ring in (ZZ, QQ, F97):
        a = random_matrix(ring, 4, rng)
        assert Matrix.from_json(a.to_json()) == a
        w = wedge(2, a)
        doc = json.loads(w.to_json())
        assert doc["indexing"] == "wedge2" and doc["n"] == 4 and len(doc["entries"]) == 6
        assert Matrix.from_dict(doc) == w


def test_json_accepts_flat_entries():
    doc = {"ring": "zmod:5", "n": 2, "indexing": "plain", "entries": ["1", "2", "3", "9"]}
    m = Matrix.from_dict(doc)
    assert m.entry(2, 2).value == 4


def test_json_errors():
    with pytest.raises(ParseError):
        Matrix.from_json("{not json")
    with pytest.raises(ParseError):
        Matrix.from_dict({"ring": "z", "n": 2, "indexing": "plain", "entries": ["1", "2", "3"]})
    with pytest.raises(ParseError):
        Matrix.from_dict({"ring": "z", "n": 2, "indexing": "plain", "entries": [["1", "x"], ["0", "1"]]})

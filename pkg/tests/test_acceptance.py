"""Acceptance gate: criteria 1-11, each run at its stated size and time budget.

Every criterion prints one ``ACCEPTANCE <k> PASS|FAIL`` line (also collected in
the pytest terminal summary).  Run directly with ``python tests/test_acceptance.py``
for just those lines.
"""
from __future__ import annotations

import itertools
import time
import traceback
from math import comb

import numpy as np
import pytest

from wedgescheme import ZZ, Matrix, Zmod, wedge
from wedgescheme.combinat import sign_concat, subsets
from wedgescheme.diagrams import diagram_exterior_number
from wedgescheme.exalg import minor, random_invertible, random_matrix
from wedgescheme.pluecker import QuadForm, act, canonical_basis, combine, in_ideal
from wedgescheme.scheme_eqs import (
    ZERO_CONSTRAINT,
    congruence_membership,
    delta_table,
    exterior_number,
    membership,
    second_form_membership,
    theta_compose,
    transvection_ext_numbers,
)
from wedgescheme.transvect import decompose_wedge2, elementary, verify_decomposition

F97 = Zmod(97)
RESULTS: dict[int, str] = {}


def _rng(k: int) -> np.random.Generator:
    return np.random.default_rng([2026, k])


def _bumped(ring, xi=1):
    return Matrix.identity(ring, 4, "wedge2").with_entry((1, 2), (3, 4), xi)


# -- criteria ----------------------------------------------------------------------


def cauchy_binet():
    rng = _rng(1)
    for n in range(4, 8):
        for _ in range(100):
            x, y = random_matrix(F97, n, rng), random_matrix(F97, n, rng)
            assert wedge(2, x @ y) == wedge(2, x) @ wedge(2, y)
        for _ in range(10):
            x, y = random_matrix(ZZ, n, rng, -3, 3), random_matrix(ZZ, n, rng, -3, 3)
            assert wedge(2, x @ y) == wedge(2, x) @ wedge(2, y)


def membership_soundness():
    rng = _rng(2)
    for n in range(4, 8):
        for _ in range(25):
            x = random_invertible(F97, n, rng)
            report = membership(wedge(2, x))
            assert report.accepted
            assert report.theta == wedge(4, x)


def membership_rejection():
    for xi in (1, 3):
        v = membership(_bumped(F97, xi)).violation
        assert v is not None and v.kind == ZERO_CONSTRAINT
        assert (v.A, v.C, v.H) == ((1, 2), (1, 2), (1, 2, 3, 4))
        assert v.value == 2 * xi
    assert congruence_membership(_bumped(ZZ, 1), 2).accepted


def nonsquare_scalar_point():
    lam = 5
    assert pow(lam, 48, 97) == 96  # Euler's criterion: not a square mod 97
    for n in (4, 5, 6):
        report = membership(Matrix.scalar(F97, n, lam, "wedge2"))
        assert report.accepted
        assert report.theta == delta_table(F97, n).scale(lam * lam)


def transvection_decomposition():
    for n in range(3, 8):
        for i, j in itertools.permutations(range(1, n + 1), 2):
            for xi in (1, 3):
                assert len(decompose_wedge2(n, i, j, xi)) == n - 2
                # product, commutation and order independence
                assert verify_decomposition(n, i, j, xi)


def closed_form_transvections():
    for n in (4, 5):
        pairs, quads = subsets(n, 2), subsets(n, 4)
        for i, j in itertools.permutations(range(1, n + 1), 2):
            for xi in (1, 2, 5):
                g = wedge(2, elementary(ZZ, n, i, j, xi))
                for A, C, H in itertools.product(pairs, pairs, quads):
                    assert transvection_ext_numbers(n, i, j, xi, A, C, H) == exterior_number(g, A, C, H)


# the six displayed terms: (column in row 23, column in row 24, sign)
WORKED_EXAMPLE = (
    ((1, 2), (3, 4), +1),
    ((1, 3), (2, 4), -1),
    ((1, 4), (2, 3), +1),
    ((2, 3), (1, 4), +1),
    ((2, 4), (1, 3), -1),
    ((3, 4), (1, 2), +1),
)


def worked_example():
    pairs = subsets(4, 2)
    expected = {(P, Q): s for P, Q, s in WORKED_EXAMPLE}
    assert [s for _, _, s in WORKED_EXAMPLE] == [1, -1, 1, 1, -1, 1]
    for P, Q in itertools.product(pairs, pairs):  # 36 unit probes
        g = Matrix.zeros(ZZ, 4, "wedge2").with_entry((2, 3), P, 1).with_entry((2, 4), Q, 1)
        want = expected.get((P, Q), 0)
        assert exterior_number(g, (2, 3), (2, 4), (1, 2, 3, 4)) == want
        assert diagram_exterior_number(g, (2, 3), (2, 4), (1, 2, 3, 4)) == want


def _law(theta_g, theta_h, A, C, H):
    """sign(A, C) * sum_I theta^H_I(h) theta^I_{A u C}(g), summed explicitly."""
    if set(A) & set(C):
        return 0
    S = tuple(sorted(A + C))
    total = sum(int(theta_g.entry(S, I).value) * int(theta_h.entry(I, H).value) for I in subsets(theta_g.n, 4))
    return sign_concat(A, C) * total % 97


def multiplicativity():
    rng = _rng(8)
    for n, keys in ((4, None), (6, 200)):
        g = wedge(2, random_invertible(F97, n, rng))
        h = wedge(2, random_invertible(F97, n, rng))
        tg, th = membership(g).theta, membership(h).theta
        gh = g @ h
        pairs, quads = subsets(n, 2), subsets(n, 4)
        if keys is None:
            sample = list(itertools.product(pairs, pairs, quads))
        else:
            sample = [
                (pairs[rng.integers(len(pairs))], pairs[rng.integers(len(pairs))], quads[rng.integers(len(quads))])
                for _ in range(keys)
            ]
        composed = theta_compose(tg, th)
        for A, C, H in sample:
            lhs = exterior_number(gh, A, C, H)
            assert lhs == _law(tg, th, A, C, H)
            if not set(A) & set(C):
                assert lhs == sign_concat(A, C) * composed.entry(tuple(sorted(A + C)), H).value
    # three-fold form
    n = 4
    gs = [wedge(2, random_invertible(F97, n, rng)) for _ in range(3)]
    ts = [membership(x).theta for x in gs]
    prod = gs[0] @ gs[1] @ gs[2]
    quads, pairs = subsets(n, 4), subsets(n, 2)
    for A, C, H in itertools.product(pairs, pairs, quads):
        if set(A) & set(C):
            rhs = 0
        else:
            S = tuple(sorted(A + C))
            rhs = sign_concat(A, C) * sum(
                int(ts[0].entry(S, I).value) * int(ts[1].entry(I, J).value) * int(ts[2].entry(J, H).value)
                for I in quads
                for J in quads
            )
        assert exterior_number(prod, A, C, H) == rhs % 97


def pluecker_ideal():
    rng = _rng(9)
    for _ in range(50):
        n = int(rng.integers(4, 7))
        theta = {S: int(rng.integers(0, 97)) for S in subsets(n, 4)}
        v = in_ideal(combine(theta, n, F97))
        assert v.accepted and v.theta == theta
    for k in range(50):
        n = int(rng.integers(4, 7))
        pairs = subsets(n, 2)
        if k % 2 == 0:
            # a lone monomial x_P x_Q on a 4-set
            P, Q = (pairs[i] for i in rng.choice(len(pairs), 2, replace=False))
            while set(P) & set(Q):
                P, Q = (pairs[i] for i in rng.choice(len(pairs), 2, replace=False))
            form = QuadForm(n, F97, {(P, Q): int(rng.integers(1, 97))})
        else:
            # an overlapping key, optionally on top of a genuine ideal element
            P = pairs[rng.integers(len(pairs))]
            Q = next(R for R in pairs[rng.integers(len(pairs)):] + pairs if set(R) & set(P))
            form = QuadForm(n, F97, {(P, Q): int(rng.integers(1, 97))})
            if k % 4 == 1:
                form = form + combine({S: int(rng.integers(0, 97)) for S in subsets(n, 4)}, n, F97)
        assert not in_ideal(form).accepted
    for n in (4, 5, 6):
        basis = canonical_basis(n, F97)
        for _ in range(20):
            g = wedge(2, random_invertible(F97, n, rng))
            for f in basis:
                assert in_ideal(act(g, f)).accepted


def _diagram_verdict(g: Matrix) -> bool:
    """Membership decided from diagram exterior numbers alone."""
    n = g.n
    pairs = subsets(n, 2)
    for H in subsets(n, 4):
        seen = {}
        for A, C in itertools.combinations_with_replacement(pairs, 2):
            a = diagram_exterior_number(g, A, C, H).value
            if set(A) & set(C):
                if a:
                    return False
                continue
            S = tuple(sorted(A + C))
            val = sign_concat(A, C) * a % 97
            if seen.setdefault(S, val) != val:
                return False
    return True


def oracle_triangle():
    rng = _rng(10)
    suite = []
    for k in range(20):
        n = 4 + k % 2
        g = wedge(2, random_invertible(F97, n, rng))
        suite.append((g, True))
        N = comb(n, 2)
        r, c = (int(v) for v in rng.integers(0, N, 2))
        arr = np.array(g.data, copy=True)
        arr[r, c] = (arr[r, c] + rng.integers(1, 97)) % 97
        suite.append((Matrix(F97, arr.tolist(), "wedge2", n), False))
    for g, member in suite:
        verdicts = {membership(g).accepted, second_form_membership(g).accepted, _diagram_verdict(g)}
        assert verdicts == {member}
    for n in (4, 5, 6):
        g = random_matrix(F97, comb(n, 2), rng).relabel("wedge2", n)
        pairs = subsets(n, 2)
        for A, C, H in itertools.product(pairs, pairs, subsets(n, 4)):
            assert diagram_exterior_number(g, A, C, H) == exterior_number(g, A, C, H)
    n = 8
    g = random_matrix(F97, comb(n, 2), rng).relabel("wedge2", n)
    pairs, quads = subsets(n, 2), subsets(n, 4)
    for _ in range(1000):
        A, C = pairs[rng.integers(len(pairs))], pairs[rng.integers(len(pairs))]
        H = quads[rng.integers(len(quads))]
        assert diagram_exterior_number(g, A, C, H) == exterior_number(g, A, C, H)


def performance_n16():
    rng = _rng(11)
    n = 16
    x = random_invertible(F97, n, rng)
    report = membership(wedge(2, x))
    assert report.accepted
    quads = subsets(n, 4)
    for _ in range(50):
        S, H = quads[rng.integers(len(quads))], quads[rng.integers(len(quads))]
        assert report.theta.entry(S, H) == minor(x, S, H)


CRITERIA = [
    (1, "Cauchy-Binet homomorphism", 10, cauchy_binet),
    (2, "membership soundness and minor theta", 30, membership_soundness),
    (3, "membership rejection certificate", 1, membership_rejection),
    (4, "non-square scalar point accepted", 1, nonsquare_scalar_point),
    (5, "wedged transvection factorization", 10, transvection_decomposition),
    (6, "closed-form transvection exterior numbers", 20, closed_form_transvections),
    (7, "six-term worked example", 1, worked_example),
    (8, "multiplicativity law", 20, multiplicativity),
    (9, "Pluecker ideal membership and stability", 15, pluecker_ideal),
    (10, "oracle triangle", 60, oracle_triangle),
    (11, "n = 16 sweep performance", 60, performance_n16),
]


def run_criterion(k, title, budget, fn, out=print) -> bool:
    start = time.perf_counter()
    err = None
    try:
        fn()
    except Exception as exc:  # noqa: BLE001 - reported, then re-raised by the test
        err = exc
    elapsed = time.perf_counter() - start
    ok = err is None and elapsed < budget
    why = "" if ok else (f" ({type(err).__name__}: {err})" if err else f" (over budget {budget}s)")
    line = f"ACCEPTANCE {k:2d} {'PASS' if ok else 'FAIL'} {title} [{elapsed:.2f}s / {budget}s]{why}"
    RESULTS[k] = line
    out(line)
    if err is not None:
        raise err
    return ok


@pytest.mark.parametrize("k,title,budget,fn", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_acceptance(k, title, budget, fn):
    ok = run_criterion(k, title, budget, fn)
    assert ok, RESULTS[k]


if __name__ == "__main__":
    import sys

    failed = 0
    for crit in CRITERIA:
        try:
            failed += not run_criterion(*crit)
        except Exception:  # noqa: BLE001
            failed += 1
            traceback.print_exc()
    sys.exit(1 if failed else 0)

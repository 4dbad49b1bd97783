"""Rank-2 case table, the six-family specialization, exceptional patterns."""

import math
import random

import pytest

from gkhopf.heckenberger import (BraidingMatrix, DiagonalDatum, lemma41_case,
                                 omega_checks, prop42_case, remark43_finite,
                                 supplementary_type)
from gkhopf.presentations import BParams
from gkhopf.scalars import Cyclo, RootOfUnity, make_root

from helpers import b_grid

R = RootOfUnity
ONE = R.one()
MINUS = R.minus_one()


def test_non_root_entry_rejected():
    with pytest.raises(ValueError):
        BraidingMatrix.make(Cyclo.from_rational(2), ONE, ONE, ONE)


def test_lemma41_pinned_examples():
    # q12*q21 = 1 regardless of the diagonal
    v = lemma41_case(BraidingMatrix.make(R(3, 1), R(5, 1), R(5, 4), R(7, 1)))
    assert v.case_label == "1"
    v = lemma41_case(BraidingMatrix.make(R(3, 1), R(3, 1), R(3, 1), R(3, 1)))
    assert v.case_label == "2.1"
    v = lemma41_case(BraidingMatrix.make(R(5, 1), R(5, 2), ONE, MINUS))
    assert v.case_label == "4.2"


# one constructible witness per sub-case, chosen to make that sub-case the
# first match; rho denotes q12*q21
CASE_TABLE = [
    ("1", (R(3, 1), R(5, 1), R(5, 4), R(7, 1))),
    ("2.1", (R(3, 2), R(3, 1), ONE, R(3, 2))),
    ("2.2", (MINUS, R(3, 1), ONE, R(3, 2))),
    ("2.3", (R(5, 1), R(5, 3), ONE, R(5, 2))),
    ("2.4", (R(7, 1), R(7, 4), ONE, R(7, 3))),
    ("2.5", (R(3, 1), R(5, 1), ONE, R(5, 4))),
    ("2.6", (R(4, 1), R(8, 1), ONE, R(8, 7))),
    ("2.7", (R(4, 1), R(24, 1), ONE, R(24, 23))),
    ("2.8", (R(5, 2), R(30, 1), ONE, R(30, 29))),
    ("3.1", (MINUS, R(3, 1), ONE, MINUS)),
    ("3.2", (R(3, 1), R(3, 1), ONE, MINUS)),
    ("3.3", (R(3, 1), R(4, 3), ONE, MINUS)),
    ("3.4", (R(3, 2), R(12, 1), ONE, MINUS)),
    ("3.5", (R(3, 2), R(9, 1), ONE, MINUS)),
    ("3.6", (R(3, 2), R(24, 1), ONE, MINUS)),
    ("3.7", (R(3, 2), R(30, 1), ONE, MINUS)),
    ("4.1", (R(5, 1), R(5, 3), ONE, MINUS)),
    ("4.2", (R(5, 1), R(5, 2), ONE, MINUS)),
    ("4.3", (R(10, 1), R(5, 3), ONE, MINUS)),
    ("4.4", (R(14, 1), R(14, 9), ONE, MINUS)),
    ("4.5", (R(4, 3), R(8, 1), ONE, MINUS)),
    ("4.6", (R(4, 3), R(12, 1), ONE, MINUS)),
    ("4.7", (R(5, 4), R(20, 1), ONE, MINUS)),
    ("4.8", (R(5, 4), R(30, 1), ONE, MINUS)),
    ("5.1", (R(3, 1), R(4, 3), ONE, R(3, 2))),
    ("5.2", (R(3, 2), R(12, 1), ONE, R(3, 2))),
    ("5.3", (R(4, 3), R(24, 1), ONE, R(3, 2))),
    ("5.4", (R(18, 1), R(9, 8), ONE, R(3, 2))),
    ("5.5", (R(30, 1), R(10, 9), ONE, R(3, 2))),
]


@pytest.mark.parametrize("label,entries", CASE_TABLE, ids=[c[0] for c in CASE_TABLE])
def test_lemma41_case_table(label, entries):
    verdict = lemma41_case(BraidingMatrix.make(*entries))
    assert verdict.case_label == label
    assert not verdict.permutation_applied


def test_lemma41_swap_coherence():
    rng = random.Random(5)
    roots = [R(n, k) for n in range(1, 31) for k in range(n) if math.gcd(k, n) == 1 or n == 1]
    for _ in range(400):
        q = BraidingMatrix(*(rng.choice(roots) for _ in range(4)))
        v1 = lemma41_case(q)
        v2 = lemma41_case(q.swapped())
        assert v1.matched == v2.matched


def test_prop42_pinned_examples():
    # epsilon = 1: admissible roots have q1^{n2} = q2^{n1} = 1
    assert prop42_case(DiagonalDatum.make(2, 3, R(3, 1), MINUS), 1) == "I"
    assert prop42_case(DiagonalDatum.make(1, 1, MINUS, MINUS), 2) == "I"
    assert prop42_case(DiagonalDatum.make(1, 1, R(5, 1), R(5, 2)), 5) == "III"
    assert prop42_case(DiagonalDatum.make(1, 2, R(10, 1), R(10, 6)), 5) == "IV"
    assert prop42_case(DiagonalDatum.make(2, 1, R(10, 6), R(10, 1)), 5) == "IV"
    assert prop42_case(DiagonalDatum.make(1, 1, R(7, 1), R(7, 3)), 7) == "V"
    assert prop42_case(DiagonalDatum.make(1, 3, R(21, 1), R(21, 15)), 7) == "VI"
    assert prop42_case(DiagonalDatum.make(2, 3, ONE, ONE), 1) == "hypotheses-violated"


def _admissible_pairs(n1, n2, eps):
    p1, p2 = n2 * eps, n1 * eps
    if math.gcd(n1, p1) != 1 or math.gcd(n2, p2) != 1:
        return
    q1s = [R(p1, k) for k in range(p1) if math.gcd(k, p1) == 1 or p1 == 1]
    q2s = [R(p2, k) for k in range(p2) if math.gcd(k, p2) == 1 or p2 == 1]
    for q1 in q1s:
        for q2 in q2s:
            yield q1, q2


def test_prop42_exhaustive_consistency():
    """Whenever the case table matches, one of the six families applies."""
    checked = 0
    for n1, n2 in ((1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)):
        for eps in range(1, 9):
            for q1, q2 in _admissible_pairs(n1, n2, eps):
                d = DiagonalDatum(n1, n2, q1, q2)
                checked += 1
                if lemma41_case(d.braiding_matrix()).matched:
                    assert prop42_case(d, eps) in ("I", "II", "III", "IV", "V", "VI")
    assert checked > 300


def test_supplementary_pins():
    assert supplementary_type(DiagonalDatum.make(1, 1, R(5, 1), R(5, 2))) == "N5"
    assert supplementary_type(DiagonalDatum.make(1, 1, R(7, 1), R(7, 3))) == "N7"
    assert supplementary_type(DiagonalDatum.make(1, 2, R(10, 1), R(10, 6))) == "N10"
    assert supplementary_type(DiagonalDatum.make(1, 3, R(21, 1), R(21, 15))) == "N21"
    assert supplementary_type(DiagonalDatum.make(1, 1, R(5, 1), R(5, 4))) == "none"
    # swapped labeling detects the same pattern
    assert supplementary_type(DiagonalDatum.make(2, 1, R(10, 6), R(10, 1))) == "N10"


def test_remark43_pins():
    assert remark43_finite(DiagonalDatum.make(1, 1, R(5, 1), R(5, 2)))
    assert remark43_finite(DiagonalDatum.make(1, 1, R(7, 1), R(7, 3)))
    assert remark43_finite(DiagonalDatum.make(1, 2, R(10, 1), R(10, 6)))
    assert remark43_finite(DiagonalDatum.make(1, 3, R(21, 1), R(21, 15)))
    assert not remark43_finite(DiagonalDatum.make(1, 1, R(5, 1), R(5, 4)))


def test_supplementary_exhaustive_detection():
    """Each pattern is detected from its own data and nothing else."""
    roots = [R(n, k) for n in range(1, 31) for k in range(n) if math.gcd(k, n) == 1 or n == 1]
    found = {tag: 0 for tag in ("N5", "N7", "N10", "N21")}
    for n1 in range(1, 4):
        for n2 in range(1, 4):
            for q1 in roots:
                for q2 in roots:
                    tag = supplementary_type(DiagonalDatum(n1, n2, q1, q2))
                    if tag == "none":
                        continue
                    found[tag] += 1
                    d = DiagonalDatum(n1, n2, q1, q2)
                    forward = _supplementary_data_matches(tag, d)
                    backward = _supplementary_data_matches(tag, d.swapped())
                    assert forward or backward, (tag, n1, n2, q1, q2)
                    assert remark43_finite(d)
    assert all(found[tag] > 0 for tag in found)


def _supplementary_data_matches(tag, d):
    pattern = {
        "N5": (1, 1, 5, 5, 2),
        "N7": (1, 1, 7, 7, 3),
        "N10": (1, 2, 10, 5, 6),
        "N21": (1, 3, 21, 7, 15),
    }[tag]
    n1, n2, o1, o2, e = pattern
    return (d.n1, d.n2) == (n1, n2) and d.q1.order == o1 and d.q2.order == o2 \
        and d.q2 == d.q1 ** e


def test_patterns_mutually_exclusive():
    patterns = [
        DiagonalDatum.make(1, 1, R(5, 1), R(5, 2)),
        DiagonalDatum.make(1, 1, R(7, 1), R(7, 3)),
        DiagonalDatum.make(1, 2, R(10, 1), R(10, 6)),
        DiagonalDatum.make(1, 3, R(21, 1), R(21, 15)),
    ]
    tags = [supplementary_type(d) for d in patterns]
    assert sorted(tags) == ["N10", "N21", "N5", "N7"]


def test_omega_checks():
    b = BParams.make(1, (2, 3), make_root(6, 1), (0, 1)).expand()
    assert omega_checks(b) == (True, True)
    b57 = BParams.make(1, (5, 7), make_root(35, 1), (0, 1)).expand()
    omega, omega_prime = omega_checks(b57)
    assert not omega_prime
    # degenerate single-generator record with a commutator of order 7
    from gkhopf.presentations import KParams

    single = KParams.make(7, (1,), (7,), [make_root(7, 1)], (0,))
    assert omega_checks(single)[1] is False


def test_omega_prime_on_grid():
    for b in b_grid():
        params = b.expand()
        _, omega_prime = omega_checks(params)
        lambdas = [params.q[i] ** params.n[i] for i in range(params.s)]
        from gkhopf.scalars import order_of

        expected = all(order_of(lam) not in (5, 7) for lam in lambdas)
        assert omega_prime == expected

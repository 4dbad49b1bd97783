"""Rewrite engine: normal forms, ring axioms, ambiguities, confluence."""

import random

import pytest

from gkhopf.ncpoly import (NCPoly, RewriteSystem, Rule, certify_confluence,
                           enumerate_ambiguities, multiply, normal_form, power)
from gkhopf.presentations import HopfPresentation, KParams, build
from gkhopf.scalars import Cyclo, make_root

from helpers import ev


def test_rule_counts(b23, a15):
    assert len(b23.rs.rules) == 8
    names = [r.name for r in a15.rs.rules]
    assert names == ["x*x^-1", "x^-1*x", "y*x", "y*x^-1"]
    # single skew generator: no commutation or power rules
    degenerate = KParams.make(6, (3,), (2,), [Cyclo.from_rational(-1)], (0,))
    built = build(HopfPresentation.from_k(degenerate))
    assert len(built.rs.rules) == 4


def test_power_rule_instantiation(b23):
    rule = next(r for r in b23.rs.rules if r.name == "y2^p")
    assert rule.lhs == (3, 3, 3)
    rhs = {w: c for c, w in rule.rhs}
    assert rhs[(2, 2)] == Cyclo.one()
    assert rhs[(1,) * 6] == Cyclo.one()
    assert rhs[()] == Cyclo.from_rational(-1)


def test_normal_form_pins(b23):
    rs = b23.rs
    assert rs.format_poly(normal_form((3, 2), rs)) == "y1*y2"
    assert rs.format_poly(normal_form((2, 1), rs)) == "-x*y1"
    assert rs.format_poly(normal_form((1, 0), rs)) == "1"


def test_multiply_pins(b23):
    rs = b23.rs
    y1 = NCPoly.monomial(b23.free_monomial(0))
    assert rs.format_poly(multiply(y1, y1, rs)) == "y1^2"
    y2sq = ev(b23, "y2^2")
    y2 = NCPoly.monomial(b23.free_monomial(1))
    assert multiply(y2sq, y2, rs) == ev(b23, "y1^2 + x^6 - 1")
    p = ev(b23, "x^-2*y1 + 3")
    assert multiply(b23.unit(), p, rs) == p


def _random_word(rng, n_letters, max_len):
    return tuple(rng.randrange(n_letters) for _ in range(rng.randrange(max_len + 1)))


def test_normal_form_idempotent(b23):
    rng = random.Random(7)
    rs = b23.rs
    for _ in range(120):
        w = _random_word(rng, 4, 8)
        nf = normal_form(w, rs)
        again = normal_form(nf, rs)
        assert nf == again


def test_strategy_independence(b23, k22, c3):
    rng = random.Random(11)
    for built in (b23, k22, c3):
        rs = built.rs
        for _ in range(120):
            w = _random_word(rng, len(rs.letter_names), 8)
            assert normal_form(w, rs) == normal_form(w, rs, from_right=True)


def test_ring_axioms(b23):
    rng = random.Random(13)
    rs = b23.rs

    def rand_poly():
        terms = {}
        for _ in range(rng.randrange(1, 4)):
            m = normal_form(_random_word(rng, 4, 5), rs)
            for mono, c in m.terms.items():
                terms[mono] = c * Cyclo.from_rational(rng.randrange(-3, 4))
        return NCPoly(terms)

    for _ in range(40):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert multiply(multiply(a, b, rs), c, rs) == multiply(a, multiply(b, c, rs), rs)
        assert multiply(a, b + c, rs) == multiply(a, b, rs) + multiply(a, c, rs)


def test_central_elements(b23, b235, k22):
    for built in (b23, b235, k22):
        params = built.presentation.kparams
        rs = built.rs
        pivot = min(range(params.s), key=lambda i: params.p[i])
        for central in (NCPoly.monomial(built.group_monomial(params.M)),
                        NCPoly.monomial(built.free_monomial(pivot, params.p[pivot]))):
            for letter in range(len(rs.letter_names)):
                g = normal_form((letter,), rs)
                assert multiply(central, g, rs) == multiply(g, central, rs)


def test_defining_identity_all_pairs(b23, b235, k22):
    # y_j^{p_j} - y_i^{p_i} - (alpha_j - alpha_i)(x^M - 1) = 0 for every i < j
    for built in (b23, b235, k22):
        params = built.presentation.kparams
        rs = built.rs
        for i in range(params.s):
            for j in range(i + 1, params.s):
                diff = params.alpha[j] - params.alpha[i]
                lhs = normal_form((j + 2,) * params.p[j], rs)
                rhs = normal_form((i + 2,) * params.p[i], rs) \
                    + NCPoly.monomial(built.group_monomial(params.M), diff) \
                    + NCPoly.monomial(built.group_monomial(0), -diff)
                assert lhs == rhs, (i, j)


def test_ambiguity_enumeration(b23):
    ambs = enumerate_ambiguities(b23.rs)
    words = {a.word for a in ambs}
    assert (1, 0, 1) in words          # x * x^-1 * x
    assert (0, 1, 0) in words
    assert (3, 3, 3, 1) in words       # y2^3 * x
    assert (3, 3, 3, 2) in words       # y2^3 * y1
    assert (3, 3, 3, 3, 3) in words    # self-overlap of the power rule
    single = RewriteSystem(["x^-1", "x", "y"], [0, 0, 1],
                           [Rule((2, 1), ((make_root(5, 1), (1, 2)),), "y*x")])
    assert enumerate_ambiguities(single) == []


def test_confluence_positive(b23, b235, k22, a25, c3):
    for built in (b23, b235, k22, a25, c3):
        report = certify_confluence(built.rs)
        assert report.all_resolved, built.presentation.family
        assert len(report) > 0 or built.presentation.family == "?"


def test_confluence_across_instance_grid():
    # the ordered-monomial basis needs only the structural conditions, so
    # every validated instance certifies, coprime or not
    from gkhopf.presentations import validate
    from helpers import k_grid

    checked = 0
    for params in k_grid():
        if not validate(params).ok:
            continue
        built = build(HopfPresentation.from_k(params))
        assert certify_confluence(built.rs).all_resolved, params.p
        checked += 1
    assert checked >= 30


def test_negative_weight_comparison_family():
    from gkhopf.hopfops import check_hopf_axioms
    from gkhopf.scalars import make_root

    built = build(HopfPresentation.a_family(-2, make_root(5, 1)))
    assert certify_confluence(built.rs).all_resolved
    assert check_hopf_axioms(built, 3, 6).all_passed


def test_confluence_negative_control(b23):
    rs = b23.rs
    rules = list(rs.rules)
    idx = next(i for i, r in enumerate(rules) if r.name == "y1*x")
    q1 = b23.presentation.kparams.q[0]
    rules[idx] = Rule(rules[idx].lhs, ((q1 * q1, rules[idx].rhs[0][1]),), "y1*x corrupted")
    corrupted = RewriteSystem(rs.letter_names, rs.letter_weights, rules)
    report = certify_confluence(corrupted)
    assert not report.all_resolved
    assert len(report.failures) >= 1


def test_budget_guard(b23):
    rs = RewriteSystem(b23.rs.letter_names, b23.rs.letter_weights, b23.rs.rules, step_budget=3)
    from gkhopf.ncpoly import BudgetExceeded
    with pytest.raises(BudgetExceeded):
        normal_form((3, 3, 3, 3, 3, 3, 2, 1, 0), rs)


def test_power_helper(b23):
    y2 = NCPoly.monomial(b23.free_monomial(1))
    assert power(y2, 3, b23.rs) == ev(b23, "y1^2 + x^6 - 1")


def test_c2_degenerate_tail():
    # n = 2 empties the y^{n-2} tail of the inverse commutation rule
    from gkhopf.hopfops import check_hopf_axioms

    built = build(HopfPresentation.c_family(2))
    assert certify_confluence(built.rs).all_resolved
    assert check_hopf_axioms(built, 3, 3).all_passed
    assert ev(built, "x*y - y*x - y^2 + y").is_zero()

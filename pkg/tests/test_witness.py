from math import gcd

import pytest

from unicyclo.arith import is_prime, mobius_star
from unicyclo.witness import (
    CeilingExceeded,
    PredictionMismatch,
    build_plan,
    coefficient_window_direct,
    truncated_phi_star,
    verify_witness,
)


def test_build_plan_smallest_choices():
    plan = build_plan(2, 1)
    assert plan.n == 16
    assert plan.primes == (17,)
    assert plan.q == 37  # smallest prime beyond 2 * 17
    assert plan.n1 == 17 and plan.n2 == 17 * 37


def test_build_plan_parity_rule():
    even = build_plan(12, 2)
    assert even.n1 % even.q == 0 and even.n2 % even.q != 0
    odd = build_plan(12, 3)
    assert odd.n1 % odd.q != 0 and odd.n2 % odd.q == 0
    assert mobius_star(even.n1) == -1 and mobius_star(even.n2) == 1


def test_build_plan_invariants():
    for m in (2, 3, 4, 6, 8, 9, 12, 30):
        for t in (1, 2, 3):
            plan = build_plan(m, t)
            assert plan.n >= 8 * m
            assert len(plan.primes) == t
            assert all(p % m == 1 and is_prime(p) for p in plan.primes)
            assert all(plan.n < p and 8 * p < 15 * plan.n for p in plan.primes)
            assert plan.primes[-1] < 2 * plan.primes[0]
            assert plan.q > 2 * plan.primes[0] and is_prime(plan.q)
            assert gcd(m, plan.n1 * plan.n2) == 1
            assert mobius_star(plan.n1) == -1 and mobius_star(plan.n2) == 1


def test_build_plan_validation():
    with pytest.raises(ValueError):
        build_plan(1, 1)
    with pytest.raises(ValueError):
        build_plan(12, 0)


def test_truncated_window_cross_checks():
    # both internal routes must agree (truncated_phi_star raises otherwise)
    for m in (2, 3, 4, 12):
        for t in (1, 2, 3):
            plan = build_plan(m, t)
            win = truncated_phi_star(plan)
            assert win.order == 2 * plan.primes[0]
            assert win.coefficient(0) == 1


def test_direct_oracle_confirms_window():
    for m, t in ((2, 1), (3, 1), (4, 2), (2, 2), (3, 3)):
        plan = build_plan(m, t)
        assert plan.m * plan.n1 <= 10**6
        assert coefficient_window_direct(plan) == truncated_phi_star(plan)


def test_direct_oracle_ceiling():
    plan = build_plan(2, 1)
    with pytest.raises(CeilingExceeded):
        coefficient_window_direct(plan, ceiling=10)


def test_verify_witness_case_values():
    rep = verify_witness(12, 3)
    assert rep.case_tag == "mu-star-plus"
    assert [(c.family, c.predicted) for c in rep.checks[:2]] == [
        ("phi-star", -2),
        ("phi-star", 2),
    ]
    assert rep.checks[1].k == rep.plan.primes[-1] + 4  # second unitary divisor of 12

    rep = verify_witness(2, 4)
    assert rep.case_tag == "mu-star-minus-2mod4"
    assert [c.predicted for c in rep.checks[:2]] == [3, -3]

    rep = verify_witness(4, 2)
    assert rep.case_tag == "mu-star-minus-other"
    assert [c.predicted for c in rep.checks[:2]] == [1, -2]
    # inverse-family counterparts are the negations
    assert [c.predicted for c in rep.checks[2:]] == [-1, 2]
    assert rep.realized_unitary == (1, -2) and rep.realized_inverse == (-1, 2)


def test_verify_witness_grid_subset():
    for m, t in ((2, 5), (6, 2), (9, 3), (30, 1)):
        rep = verify_witness(m, t)
        assert rep.all_match
        assert rep.window_formula_ok and rep.reduction_ok
        assert rep.phi_star_oracle is not False
        assert rep.psi_star_oracle is not False


def test_verify_witness_refuses_bad_case_constants():
    # The second-smallest unitary divisor of 420 is 4, but 5 is also a unitary
    # divisor, so the surviving factor 1 - x^5 shifts the window coefficient at
    # p_t + 5 and the fixed case constants no longer apply.  The verifier must
    # report the discrepancy loudly rather than accept it.
    with pytest.raises(PredictionMismatch) as exc:
        verify_witness(420, 1)
    report = exc.value.report
    bad = [c for c in report.checks if not c.ok]
    assert bad and all(c.k == report.plan.primes[-1] + 4 for c in bad)
    assert report.window_formula_ok  # the window formula itself still holds

import pytest

from unicyclo.analysis import (
    CoeffRecord,
    PreconditionUnmet,
    RangeExhausted,
    congruence_transfer_check,
    height_jump_check,
    kaplan_flatness_check,
    minimal_n_table,
    psi_star_ternary_bound_check,
    ternary_consecutive_check,
)
from unicyclo.cyclotomic import family_polynomial


def test_minimal_n_table_first_rows():
    assert minimal_n_table("phi-star", 2, 100) == [CoeffRecord(2, 60, 24, 5, -2)]
    recs = minimal_n_table("phi", 2, 200)
    assert recs == [CoeffRecord(2, 105, 48, 7, -2)]
    recs = minimal_n_table("psi-star", 3, 500)
    assert recs == [CoeffRecord(2, 120, 64, 8, -2), CoeffRecord(3, 420, 276, 12, -3)]


def test_minimal_n_table_exhaustion():
    with pytest.raises(RangeExhausted) as exc:
        minimal_n_table("psi", 2, 500)
    assert exc.value.missing == (2,)
    assert exc.value.records == ()
    # partial completion: magnitude 2 found at 60, magnitude 3 needs 385
    with pytest.raises(RangeExhausted) as exc:
        minimal_n_table("phi-star", 3, 100)
    assert exc.value.missing == (3,)
    assert exc.value.records == (CoeffRecord(2, 60, 24, 5, -2),)


def test_minimal_n_table_validation():
    with pytest.raises(ValueError):
        minimal_n_table("phi", 1, 100)
    with pytest.raises(ValueError):
        minimal_n_table("phi", 2, 0)
    with pytest.raises(ValueError):
        minimal_n_table("quux", 2, 100)


def test_minimal_n_table_worker_count_invariance():
    serial = minimal_n_table("phi-star", 4, 800, jobs=1)
    parallel = minimal_n_table("phi-star", 4, 800, jobs=3)
    assert serial == parallel


def test_records_reproducible():
    for rec in minimal_n_table("phi-star", 4, 800):
        f = family_polynomial("phi-star", rec.n)
        assert f.degree == rec.degree
        assert f.coefficient(rec.k) == rec.value
        assert abs(rec.value) == rec.m
        assert all(abs(c) != rec.m for c in f.coeffs[: rec.k])  # k is minimal


def test_ternary_consecutive():
    rep = ternary_consecutive_check(27, 29, 31)
    assert rep.ok and rep.coeff_set == tuple(range(-8, 9))
    rep = ternary_consecutive_check(8, 11, 13)
    assert rep.ok and rep.minimum == -4 and rep.maximum == 3
    assert rep.coeff_set == tuple(range(-4, 4))
    with pytest.raises(PreconditionUnmet):
        ternary_consecutive_check(6, 5, 7)  # 6 is not a prime power
    with pytest.raises(PreconditionUnmet):
        ternary_consecutive_check(3, 9, 5)  # not coprime
    with pytest.raises(PreconditionUnmet):
        ternary_consecutive_check(2, 5, 7)  # below the minimum 3


def test_congruence_transfer():
    rep = congruence_transfer_check(5, 7, 81, 11)
    assert rep.ok and rep.relation == "same"
    rep = congruence_transfer_check(5, 7, 59, 11)
    assert rep.ok and rep.relation == "negated"
    assert set(rep.set_r) == {-v for v in rep.set_s}
    with pytest.raises(PreconditionUnmet):
        congruence_transfer_check(4, 5, 7, 3)  # s must exceed max(p, q)
    with pytest.raises(PreconditionUnmet):
        congruence_transfer_check(5, 7, 82, 11)  # 82 not a prime power
    with pytest.raises(PreconditionUnmet):
        congruence_transfer_check(5, 7, 13, 11)  # no congruence


def test_height_jump():
    rep = height_jump_check(4, 5, 3, 23)
    assert rep.ok and rep.height_s == rep.height_r == 2 and rep.lower_attained
    rep = height_jump_check(9, 7, 5, 131)
    assert rep.ok and rep.height_r == rep.height_s + 1 == 3 and rep.upper_attained
    with pytest.raises(PreconditionUnmet):
        height_jump_check(9, 7, 5, 68)  # 68 = 2^2 * 17 is not a prime power
    with pytest.raises(PreconditionUnmet):
        height_jump_check(9, 7, 11, 131)  # s not below max(p, q)


def test_kaplan_flatness():
    rep = kaplan_flatness_check(4, 3, 11, 1)
    assert rep.ok and rep.cases == ((1, -1, True),)
    rep = kaplan_flatness_check(4, 3, 13, 1)
    assert rep.ok and rep.cases == ((1, 1, True),)
    rep = kaplan_flatness_check(4, 3, 5, 2)
    assert rep.ok and rep.cases == ((2, 1, True),)  # 5^2 = 25 = 1 mod 12
    with pytest.raises(PreconditionUnmet):
        kaplan_flatness_check(4, 3, 9, 1)  # r must be prime
    with pytest.raises(PreconditionUnmet):
        kaplan_flatness_check(4, 6, 5, 1)


def test_psi_star_bound():
    rep = psi_star_ternary_bound_check(3, 5, 7)
    assert rep.ok and rep.bound == 2 and rep.height <= 2
    rep = psi_star_ternary_bound_check(4, 5, 7)
    assert rep.ok and rep.bound == 2 and rep.outer_bound == 3
    assert rep.factorization_ok and rep.convolution_ok
    with pytest.raises(PreconditionUnmet):
        psi_star_ternary_bound_check(5, 3, 7)  # not increasing
    with pytest.raises(PreconditionUnmet):
        psi_star_ternary_bound_check(3, 5, 25)  # 25 and 5 not coprime

import pytest

from tatefrob.curves import Curve
from tatefrob.errors import BadReductionPrime, SpecialN2Exclusion
from tatefrob.finite_field import is_prime, make_field
from tatefrob.frobenius import full_rationality, is_special
from tatefrob.oracle import frobenius_on_torsion
from tatefrob.reciprocity import (
    RationalCurve,
    reduce_at,
    splits_completely,
    survey,
)

CURVES = [RationalCurve(0, 1), RationalCurve(-1, 0), RationalCurve(-1, 1)]


def test_rational_curve_basics():
    assert RationalCurve(0, 1).discriminant == -432
    assert RationalCurve(-1, 0).discriminant == 64
    assert RationalCurve(-1, 1).discriminant == -368
    with pytest.raises(ValueError):
        RationalCurve(0, 0)
    with pytest.raises(ValueError):
        RationalCurve(-3, 2)


def test_reduce_at():
    E = RationalCurve(-1, 1)
    assert reduce_at(E, 5) == Curve.short(make_field(5), -1, 1)
    for p in (2, 3, 23):
        with pytest.raises(BadReductionPrime):
            reduce_at(E, p)
    with pytest.raises(ValueError):
        reduce_at(E, 9)


def test_level_one_always_splits():
    for E in CURVES:
        for p in range(5, 200):
            if is_prime(p) and E.discriminant % p:
                assert splits_completely(E, p, 1) == (True, True, True)


def test_special_level_two_excluded():
    with pytest.raises(SpecialN2Exclusion):
        splits_completely(RationalCurve(-1, 0), 7, 2)
    with pytest.raises(BadReductionPrime):
        splits_completely(RationalCurve(0, 1), 5, 5)


def test_rational_two_torsion_splits_everywhere():
    """x^3 - x has rational roots, so every admissible prime splits in Q(E[2])."""
    rep = survey(RationalCurve(-1, 0), 2, 300)
    assert rep.rows and all(r.splits for r in rep.rows)
    assert {s.reason for s in rep.skipped} == {"p <= 3", "special reduction with N = 2"}
    assert all(s.p % 4 == 3 for s in rep.skipped if s.reason.startswith("special"))


@pytest.mark.parametrize("E", CURVES, ids=lambda e: e.label())
@pytest.mark.parametrize("N", [2, 3, 4])
def test_survey_accounting_and_consistency(E, N):
    p_max = 150
    rep = survey(E, N, p_max, cross_check=True)
    primes = [p for p in range(2, p_max + 1) if is_prime(p)]
    assert len(primes) == len(rep.rows) + len(rep.skipped)
    assert not rep.mismatches()
    for row in rep.rows:
        Ep = reduce_at(E, row.p)
        assert row.splits == full_rationality(Ep, N)
        if row.splits:
            # the Weil pairing puts mu_N in F_p, and E[N] inside E(F_p)
            assert row.p % N == 1 and Ep.count % (N * N) == 0
    js = rep.to_json()
    assert [e["p"] for e in js] == primes


def test_cross_check_matches_oracle():
    E = RationalCurve(0, 1)
    rep = survey(E, 3, 100, cross_check=True)
    for row in rep.rows:
        assert row.cross_check == frobenius_on_torsion(reduce_at(E, row.p), 3).is_identity()
    assert any(row.splits for row in rep.rows)


def test_p_max_cap():
    with pytest.raises(ValueError):
        survey(RationalCurve(0, 1), 3, 10**5)


def test_special_reductions_are_j_1728():
    E = RationalCurve(-1, 0)
    for p in (7, 11, 19, 23):
        assert is_special(reduce_at(E, p))

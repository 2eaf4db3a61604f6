import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tatefrob.class_orders import (
    ALL,
    ReducedForm,
    class_number,
    is_discriminant,
    reduced_forms,
    square_part_divisors,
    superorders,
)
from tatefrob.errors import BadDiscriminant

discriminants = st.integers(3, 1000).map(lambda n: -n).filter(is_discriminant)


def exhaustive_forms(D):
    """Reduced primitive forms by scanning every (A, B) with A <= sqrt(|D|/3)."""
    out = []
    for A in range(1, math.isqrt(-D // 3) + 1):
        for B in range(-A, A + 1):
            num = B * B - D
            if num % (4 * A):
                continue
            C = num // (4 * A)
            reduced = abs(B) <= A <= C and not (B < 0 and (abs(B) == A or A == C))
            if reduced and math.gcd(A, B, C) == 1:
                out.append((A, B, C))
    return sorted(out)


def test_examples():
    assert reduced_forms(-3) == [ReducedForm(1, 1, 1)]
    assert reduced_forms(-4) == [ReducedForm(1, 0, 1)]
    assert sorted(reduced_forms(-23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]
    assert [class_number(D) for D in (-4, -15, -3)] == [1, 2, 1]
    assert superorders(-4) == [(1, -4)]
    assert superorders(-12) == [(1, -12), (2, -3)]
    assert superorders(-28) == [(1, -28), (2, -7)]
    assert square_part_divisors(-28) == [1, 2]
    assert square_part_divisors(-1372) == [1, 2, 7, 14]
    assert square_part_divisors(0) is ALL


def test_bad_discriminants():
    for D in (-5, -6, 0, 4, -1):
        with pytest.raises(BadDiscriminant):
            reduced_forms(D)
    with pytest.raises(BadDiscriminant):
        superorders(-7 * 4 + 1 - 2)


@given(discriminants)
def test_forms_match_oracle(D):
    forms = reduced_forms(D)
    assert sorted(map(tuple, forms)) == exhaustive_forms(D)
    for f in forms:
        assert f.discriminant == D


def _equivalent_under_sl2(f, g, bound=60):
    """Search the SL2(Z) orbit of f through S and T moves with bounded coefficients."""
    seen = {f}
    frontier = [f]
    while frontier:
        nxt = []
        for A, B, C in frontier:
            for h in ((C, -B, A), (A, B + 2 * A, A + B + C), (A, B - 2 * A, A - B + C)):
                if max(map(abs, h)) <= bound and h not in seen:
                    if h == g:
                        return True
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return g in seen


@pytest.mark.parametrize("D", [D for D in range(-3, -201, -1) if is_discriminant(D)][::3])
def test_forms_pairwise_inequivalent(D):
    forms = [tuple(f) for f in reduced_forms(D)]
    for i, f in enumerate(forms):
        for g in forms[i + 1 :]:
            assert not _equivalent_under_sl2(f, g)


def hurwitz_style_class_number(D):
    """Count primitive forms (A, B, C) with A <= C, |B| <= A under the boundary rule, by brute force."""
    n = 0
    for A in range(1, math.isqrt(-D) + 1):
        for C in range(A, -D + 1):
            disc_part = D + 4 * A * C
            if disc_part < 0:
                continue
            B = math.isqrt(disc_part)
            if B * B != disc_part:
                continue
            for b in {B, -B}:
                if abs(b) <= A and not (b < 0 and (-b == A or A == C)) and math.gcd(A, b, C) == 1:
                    n += 1
    return n


def test_class_numbers_against_brute_force():
    for D in range(-3, -1001, -1):
        if is_discriminant(D):
            assert class_number(D) == hurwitz_style_class_number(D), D


@given(discriminants)
def test_superorders(D):
    pairs = superorders(D)
    assert (1, D) in pairs
    for h, d in pairs:
        assert d * h * h == D and is_discriminant(d)


@given(st.integers(-5000, 0))
def test_square_part_divisors(delta):
    hs = square_part_divisors(delta)
    if delta == 0:
        assert hs is ALL and 7 in hs
        return
    assert hs == [h for h in range(1, -delta + 1) if delta % (h * h) == 0]

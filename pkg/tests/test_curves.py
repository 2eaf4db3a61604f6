import functools
import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tatefrob.curves import (
    Curve,
    combination_table,
    count_points,
    curve_literal,
    division_polynomial,
    enumerate_curves,
    gl2_order,
    parse_curve,
    torsion_basis,
    torsion_field_degree,
    trace_over_extension,
    weil_data,
)
from tatefrob.errors import BadTorsionLevel, Singular, TooLarge
from tatefrob.finite_field import Poly, make_field, poly_roots
from tatefrob.frobenius import frobenius_data

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (5, 2), (11, 1), (13, 1)]


@functools.lru_cache(maxsize=None)
def _family(p, r):
    return list(enumerate_curves(make_field(p, r)))


@st.composite
def curves(draw, fields=FIELDS):
    """A curve from the standard family, or a random full Weierstrass model."""
    p, r = draw(st.sampled_from(fields))
    if draw(st.booleans()):
        fam = _family(p, r)
        return fam[draw(st.integers(0, len(fam) - 1))]
    F = make_field(p, r)
    rng = random.Random(draw(st.integers(0, 2**32)))
    while True:
        try:
            return Curve(F, *(F.random_element(rng) for _ in range(5)))
        except Singular:
            continue


def brute_count(E):
    """Count (x, y) pairs satisfying the equation, plus infinity."""
    els = list(E.field.elements())
    return 1 + sum(1 for x in els for y in els if y * y + E.h(x) * y == E.rhs(x))


def test_count_examples():
    E = Curve.short(make_field(7), 1, 0)
    assert E.count == 8 and E.trace == 0
    E = Curve.short(make_field(5), 0, 1)
    assert E.count == 6 and E.trace == 0


@given(curves())
def test_count_matches_brute_force(E):
    assert count_points(E) == brute_count(E)


@given(curves([(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)]))
def test_count_over_quadratic_extension(E):
    a, q = E.trace, E.q
    E2 = E.base_change(make_field(E.p, 2 * E.field.r))
    assert E2.count == q * q + 1 - (a * a - 2 * q)


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)])
def test_trace_recurrence(p, r):
    F = make_field(p, r)
    rng = random.Random(p * r)
    all_curves = list(enumerate_curves(F))
    for E in rng.sample(all_curves, min(4, len(all_curves))):
        n = 1
        while (E.q**n) <= 2**16:
            En = E.base_change(make_field(p, r * n))
            assert En.trace == trace_over_extension(E.trace, E.q, n)
            n += 1


def test_bsgs_matches_exhaustive():
    from tatefrob.curves import _count_bsgs, _count_exhaustive

    rng = random.Random(5)
    for p, r in [(65537, 1), (70001, 1), (2, 17), (3, 11), (263, 2)]:
        F = make_field(p, r)
        for _ in range(2):
            try:
                E = Curve(F, *(F.random_element(rng) for _ in range(5)))
            except Singular:
                continue
            assert _count_bsgs(E) == _count_exhaustive(E)


def test_count_cap_and_singular():
    with pytest.raises(TooLarge):
        count_points(Curve.short(make_field(16777259), 1, 1))
    with pytest.raises(Singular):
        Curve.short(make_field(7), 0, 0)
    with pytest.raises(Singular):
        Curve(make_field(2), 0, 0, 0, 0, 0)


@given(curves())
def test_hasse(E):
    a = E.trace
    assert a * a <= 4 * E.q


def test_weil_data_examples():
    w = weil_data(Curve.short(make_field(7), 1, 0))
    assert w == (0, -28, (7, 0, 1))
    E = Curve.short(make_field(7, 2), 1, 0)
    w = weil_data(E)
    assert abs(w.a) == 14 and w.delta == 0
    for E in enumerate_curves(make_field(13)):
        w = weil_data(E)
        if w.a % 13:
            assert w.delta < 0


@given(curves(), st.data())
def test_group_law(E, data):
    pts = E.rational_points()
    P, Q, R = (pts[data.draw(st.integers(0, len(pts) - 1))] for _ in range(3))
    assert (P + Q) + R == P + (Q + R)
    assert P + Q == Q + P
    assert (P + (-P)).is_infinity
    assert (P * len(pts)).is_infinity


def test_division_polynomial_small_levels():
    F = make_field(11)
    a, b = F(3), F(5)
    E = Curve.short(F, a, b)
    assert division_polynomial(E, 1) == Poly(F, [1])
    assert division_polynomial(E, 2) == Poly(F, [4 * b, 4 * a, 0, 4])
    assert division_polynomial(E, 3) == Poly(F, [-a * a, 12 * b, 6 * a, 0, 3])
    with pytest.raises(BadTorsionLevel):
        division_polynomial(E, 11)


@pytest.mark.parametrize("p,N", [(7, 3), (7, 4), (7, 5), (7, 6), (5, 7)])
def test_division_polynomial_roots_are_torsion(p, N):
    F = make_field(p)
    for E in list(enumerate_curves(F))[:: 7 if N < 7 else 15]:
        psi = division_polynomial(E, N)
        expected = (N * N - 1) // 2 if N % 2 else (N * N + 2) // 2
        assert psi.degree == expected
        d = torsion_field_degree(E, N)
        ext = make_field(p, d)
        Ex = E.base_change(ext)
        roots = poly_roots(psi, ext)
        assert len(roots) == expected
        for x in roots:
            pts = Ex.lift_x(x)
            assert pts and all((P * N).is_infinity and not P.is_infinity for P in pts)


def test_division_polynomial_char_2_and_3():
    for p, r in [(2, 2), (3, 2)]:
        F = make_field(p, r)
        N = 5 if p != 5 else 3
        for E in list(enumerate_curves(F))[::13]:
            psi = division_polynomial(E, N)
            d = torsion_field_degree(E, N)
            if d > 6:
                continue
            Ex = E.base_change(make_field(p, r * d))
            for x in poly_roots(psi, Ex.field):
                assert all((P * N).is_infinity for P in Ex.lift_x(x))


def test_torsion_basis_examples():
    F = make_field(5)
    E = Curve.short(F, -1, 0)
    ext, P, Q = torsion_basis(E, 2)
    assert ext == F
    two_torsion = {(0, 0), (1, 0), (4, 0)}
    assert {(P.x.coeffs[0], P.y.coeffs[0]), (Q.x.coeffs[0], Q.y.coeffs[0])} <= two_torsion
    E = Curve.short(F, 0, 1)
    ext, P, Q = torsion_basis(E, 3)
    assert len(combination_table(P, Q, 3)) == 9
    with pytest.raises(BadTorsionLevel):
        torsion_basis(E, 5)


def _matrix_order_mod(M, N):
    I = ((1, 0), (0, 1))
    A, k = M, 1
    while A != I:
        A = (
            ((A[0][0] * M[0][0] + A[0][1] * M[1][0]) % N, (A[0][0] * M[0][1] + A[0][1] * M[1][1]) % N),
            ((A[1][0] * M[0][0] + A[1][1] * M[1][0]) % N, (A[1][0] * M[0][1] + A[1][1] * M[1][1]) % N),
        )
        k += 1
    return k


@pytest.mark.parametrize("p,N", [(5, 3), (7, 3), (7, 5), (11, 4), (13, 5)])
def test_torsion_degree_divides_tau_order(p, N):
    for E in list(enumerate_curves(make_field(p)))[::5]:
        data = frobenius_data(E)
        if data.classification.value == "SPECIAL" and N % 2 == 0:
            continue
        d = torsion_field_degree(E, N)
        tau = data.tau_mod(N)
        assert _matrix_order_mod(tau, N) % d == 0
        ext, P, Q = torsion_basis(E, N)
        assert ext.r == d
        assert (P * N).is_infinity and (Q * N).is_infinity
        assert len(combination_table(P, Q, N)) == N * N


@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_supersingular_iff_no_p_torsion(p, r):
    # p | a_E exactly when no extension of degree <= 12 has a point of order p;
    # extension counts are direct where feasible and by the trace recurrence beyond
    for E in list(enumerate_curves(make_field(p, r)))[::3]:
        a, q = E.trace, E.q
        has_p_torsion = False
        for d in range(1, 13):
            if q**d <= 2**12:
                n = E.base_change(make_field(p, r * d)).count
            else:
                n = q**d + 1 - trace_over_extension(a, q, d)
            has_p_torsion |= n % p == 0
        assert (a % p == 0) == (not has_p_torsion)


def test_gl2_order():
    assert [gl2_order(n) for n in (2, 3, 4, 5)] == [6, 48, 96, 480]
    brute = sum(
        1 for m in itertools.product(range(4), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % 2
    )
    assert brute == gl2_order(4)


def test_literal_round_trip():
    for text in ["7^1:1,0", "5^1:0,1", "3^2:0,12,0,1,2", "2^3:1,101,0,0,1", "13^2:12.3,0.5"]:
        E = parse_curve(text)
        assert parse_curve(curve_literal(E)) == E
    assert curve_literal(parse_curve("7^1:-1,0")) == "7^1:6,0"
    with pytest.raises(ValueError):
        parse_curve("5^2:7,1")
    with pytest.raises(ValueError):
        parse_curve("garbage")


def test_enumerate_curves_covers_all_j():
    for p, r in [(2, 2), (3, 2), (5, 1), (2, 3)]:
        F = make_field(p, r)
        js = {E.j_invariant.key() for E in enumerate_curves(F)}
        assert len(js) == F.order

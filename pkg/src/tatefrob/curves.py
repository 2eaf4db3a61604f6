"""Elliptic curves over finite fields.

Curves use the general Weierstrass model

    y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6

so characteristics 2 and 3 are handled by the same code as p > 3. Point
counting, Weil data, division polynomials and explicit N-torsion bases over
the minimal splitting extension live here.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import diagnostics
from .errors import BadTorsionLevel, BasisFailure, CapExceeded, InternalInconsistency, Singular, TooLarge
from .finite_field import (
    FieldElement,
    FiniteField,
    Poly,
    embedding,
    factor_squarefree,
    make_field,
    poly_roots,
    root_in_extension,
    solve_artin_schreier,
    sqrt,
    poly_xgcd,
    prime_factors,
)

EXHAUSTIVE_COUNT_LIMIT = 2**16
COUNT_CAP = 2**24
TORSION_CAP = 16


class Curve:
    def __init__(self, field: FiniteField, a1=0, a2=0, a3=0, a4=0, a6=0):
        F = field
        self.field = F
        self.a1, self.a2, self.a3, self.a4, self.a6 = (F(a) for a in (a1, a2, a3, a4, a6))
        a1, a2, a3, a4, a6 = self.coefficients
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        self.c4 = b2 * b2 - 24 * b4
        self.discriminant = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if self.discriminant.is_zero():
            raise Singular(f"singular curve {self!r}")
        self.j_invariant = self.c4 * self.c4 * self.c4 / self.discriminant

    @classmethod
    def short(cls, field: FiniteField, a, b) -> "Curve":
        """y^2 = x^3 + a x + b."""
        return cls(field, 0, 0, 0, a, b)

    @property
    def coefficients(self) -> tuple[FieldElement, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def q(self) -> int:
        return self.field.order

    def is_short(self) -> bool:
        return not (self.a1 or self.a2 or self.a3)

    def __eq__(self, other):
        return (
            isinstance(other, Curve)
            and self.field == other.field
            and all(x == y for x, y in zip(self.coefficients, other.coefficients))
        )

    def __hash__(self):
        return hash((self.field, tuple(c.key() for c in self.coefficients)))

    def __repr__(self):
        if self.is_short():
            return f"Curve({self.field}: y^2 = x^3 + ({self.a4})x + ({self.a6}))"
        return f"Curve({self.field}: [{', '.join(map(repr, self.coefficients))}])"

    # -- model helpers ---------------------------------------------------------
    def h(self, x):
        return self.a1 * x + self.a3

    def rhs(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def h_poly(self) -> Poly:
        return Poly(self.field, [self.a3, self.a1])

    def rhs_poly(self) -> Poly:
        return Poly(self.field, [self.a6, self.a4, self.a2, 1])

    def two_division_poly(self) -> Poly:
        """4x^3 + b2 x^2 + 2 b4 x + b6, the square of psi_2 = 2y + a1 x + a3."""
        return Poly(self.field, [self.b6, 2 * self.b4, self.b2, 4])

    def base_change(self, ext: FiniteField) -> "Curve":
        if ext == self.field:
            return self
        emb = embedding(self.field, ext)
        return _cached_base_change(self, ext, emb)

    def twist(self) -> "Curve":
        """A non-trivial quadratic twist."""
        F = self.field
        rng = random.Random(0)
        if F.p == 2:
            while True:
                eps = F.random_element(rng)
                if _abs_trace(eps) == 1:
                    break
            return Curve(F, self.a1, self.a2 + eps * self.a1 * self.a1, self.a3, self.a4,
                         self.a6 + eps * self.a3 * self.a3)
        while True:
            u = F.random_element(rng)
            if u and not is_square(u):
                break
        half = F(2).inverse()
        return Curve(F, 0, u * self.b2 * half * half, 0, u * u * self.b4 * half,
                     u * u * u * self.b6 * half * half)

    # -- points ------------------------------------------------------------------
    @property
    def infinity(self) -> "Point":
        return Point(self, None, None)

    def point(self, x, y) -> "Point":
        F = self.field
        x, y = F(x) if not isinstance(x, FieldElement) else x, F(y) if not isinstance(y, FieldElement) else y
        if y * y + self.h(x) * y != self.rhs(x):
            raise ValueError(f"({x}, {y}) is not on {self!r}")
        return Point(self, x, y)

    def lift_x(self, x: FieldElement) -> list["Point"]:
        """All points with the given x-coordinate, sorted by y index."""
        F = self.field
        h, rhs = self.h(x), self.rhs(x)
        if F.p != 2:
            s = sqrt(h * h + 4 * rhs)
            if s is None:
                return []
            half = F(2).inverse()
            ys = {y.key(): y for y in ((s - h) * half, (-s - h) * half)}.values()
        elif h.is_zero():
            ys = [sqrt(rhs)]
        else:
            z = solve_artin_schreier(rhs / (h * h))
            if z is None:
                return []
            ys = [z * h, (z + 1) * h]
        return [Point(self, x, y) for y in sorted(ys, key=lambda y: y.index())]

    def rational_points(self) -> list["Point"]:
        pts = [self.infinity]
        for x in self.field.elements():
            pts.extend(self.lift_x(x))
        return pts

    @functools.cached_property
    def count(self) -> int:
        return count_points(self)

    @property
    def trace(self) -> int:
        return self.q + 1 - self.count


@functools.lru_cache(maxsize=4096)
def _cached_base_change(E: Curve, ext: FiniteField, emb) -> Curve:
    return Curve(ext, *(emb(c) for c in E.coefficients))


class Point:
    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: Curve, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def key(self):
        if self.x is None:
            return None
        return (self.x.key(), self.y.key())

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.x is None:
            return "O"
        return f"({self.x}, {self.y})"

    def __neg__(self):
        if self.x is None:
            return self
        E = self.curve
        return Point(E, self.x, -self.y - E.a1 * self.x - E.a3)

    def __add__(self, other: "Point") -> "Point":
        if self.x is None:
            return other
        if other.x is None:
            return self
        E = self.curve
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        if x1 == x2:
            if y1 + y2 + E.a1 * x2 + E.a3 == 0:
                return E.infinity
            lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / (2 * y1 + E.a1 * x1 + E.a3)
        else:
            lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
        x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
        y3 = -(lam + E.a1) * x3 - nu - E.a3
        return Point(E, x3, y3)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n: int) -> "Point":
        n = int(n)
        if n < 0:
            return (-self) * (-n)
        result = self.curve.infinity
        addend = self
        while n:
            if n & 1:
                result = result + addend
            n >>= 1
            if n:
                addend = addend + addend
        return result

    __rmul__ = __mul__

    def frobenius(self, s: int) -> "Point":
        """Coordinate-wise p**s power map."""
        if self.x is None:
            return self
        return Point(self.curve, self.x.frobenius(s), self.y.frobenius(s))

    def has_order(self, n: int) -> bool:
        if not (self * n).is_infinity:
            return False
        return all(not (self * (n // l)).is_infinity for l in prime_factors(n))


# -- quadratic characters and traces --------------------------------------------

def is_square(u: FieldElement) -> bool:
    F = u.field
    if F.p == 2 or u.is_zero():
        return True
    return u ** ((F.order - 1) // 2) == 1


def _abs_trace(u: FieldElement) -> int:
    """Absolute trace F_{2^r} -> F_2 (also works for any p; returns an int mod p)."""
    acc = u
    t = u
    for _ in range(u.field.r - 1):
        t = t.frobenius(1)
        acc = acc + t
    return acc.coeffs[0]


# -- point counting ----------------------------------------------------------------

def count_points(E: Curve) -> int:
    """|E(k)| by exhaustive x-sweep (q <= 2^16) or baby-step/giant-step (q <= 2^24)."""
    q = E.q
    if q > COUNT_CAP:
        raise TooLarge(f"field of size {q} exceeds the counting cap 2^24")
    if q <= EXHAUSTIVE_COUNT_LIMIT:
        n = _count_exhaustive(E)
    else:
        n = _count_bsgs(E)
    a = q + 1 - n
    diagnostics.record("hasse_checks")
    if a * a > 4 * q:
        diagnostics.record("hasse_failures")
        raise InternalInconsistency(f"Hasse bound violated: a={a}, q={q}")
    return n


def _index_of(F: FiniteField, raw: np.ndarray) -> np.ndarray:
    w = np.array([F.p**i for i in range(F.r)], dtype=np.int64)
    return raw.astype(np.int64) @ w


@functools.lru_cache(maxsize=32)
def _log_tables(F: FiniteField) -> tuple[np.ndarray, np.ndarray]:
    """(exp, log): exp[k] is the index of g^k for a primitive g; log[index] inverts it (log[0] = -1)."""
    n = F.order - 1
    factors = prime_factors(n)
    rng = random.Random(F.order)
    while True:
        g = F.random_element(rng)
        if g and all(g ** (n // l) != 1 for l in factors):
            break
    powers = np.asarray(F.one()._v if F.r > 1 else [F.one()._v], dtype=F._dtype)[None, :]
    step = g
    while len(powers) < n:
        sv = np.asarray(step._v if F.r > 1 else [step._v], dtype=F._dtype)
        powers = np.concatenate([powers, F._bmul(powers, np.broadcast_to(sv, powers.shape))])
        step = step * step
    exp = _index_of(F, powers[:n])
    log = np.full(F.order, -1, dtype=np.int64)
    log[exp] = np.arange(n, dtype=np.int64)
    return exp, log


def _count_exhaustive(E: Curve) -> int:
    """Sweep every x; field arithmetic on element indices through discrete-log tables."""
    F = E.field
    p, n = F.p, F.order - 1
    exp, log = _log_tables(F)
    digits = F._all_raw().astype(np.int64)
    w = np.array([p**i for i in range(F.r)], dtype=np.int64)

    def add(a, b):
        return ((digits[a] + digits[b]) % p) @ w

    def mul(a, b):
        out = exp[(log[a] + log[b]) % n]
        return np.where((a == 0) | (b == 0), 0, out)

    def const(c):
        return np.int64(c.index())

    X = np.arange(F.order, dtype=np.int64)
    H = add(mul(X, const(E.a1)), np.full_like(X, const(E.a3)))
    R = add(mul(add(mul(add(X, np.full_like(X, const(E.a2))), X), np.full_like(X, const(E.a4))), X),
            np.full_like(X, const(E.a6)))
    if p != 2:
        four = np.full_like(X, const(F(4)))
        D = add(mul(H, H), mul(four, R))
        chi = np.where(D == 0, 0, np.where(log[D] % 2 == 0, 1, -1))
        return 1 + F.order + int(chi.sum())
    # y^2 + H y = R: one solution if H = 0, else two or none by the trace of R/H^2
    traces = (digits @ np.array([_abs_trace(F.from_index(p**i)) for i in range(F.r)])) % 2
    C = np.where(R == 0, 0, exp[(log[R] - 2 * log[H]) % n])
    per_x = np.where(H == 0, 1, np.where(traces[C] == 0, 2, 0))
    return 1 + int(per_x.sum())


def _random_point(E: Curve, rng: random.Random) -> Point:
    while True:
        pts = E.lift_x(E.field.random_element(rng))
        if pts:
            return pts[rng.randrange(len(pts))]


def _order_in_interval(P: Point, lo: int, hi: int) -> int:
    """Some m in [lo, hi] with mP = O (baby-step giant-step)."""
    width = hi - lo + 1
    s = math.isqrt(width) + 1
    baby = {}
    R = P.curve.infinity
    for j in range(s):
        baby.setdefault((-R).key(), j)
        R = R + P
    step = P * s
    G = P * lo
    for i in range(s + 1):
        j = baby.get(G.key())
        if j is not None:
            m = lo + i * s + j
            if m <= hi + s:
                return m
        G = G + step
    raise InternalInconsistency("no multiple of the point order in the Hasse interval")


def _point_order(P: Point, m: int) -> int:
    for l in prime_factors(m):
        while m % l == 0 and (P * (m // l)).is_infinity:
            m //= l
    return m


def _count_bsgs(E: Curve, max_rounds: int = 64) -> int:
    q = E.q
    w = math.isqrt(4 * q)
    lo, hi = q + 1 - w, q + 1 + w
    tw = E.twist()
    rng = random.Random(q)
    lcm_e, lcm_t = 1, 1
    for _ in range(max_rounds):
        P = _random_point(E, rng)
        lcm_e = math.lcm(lcm_e, _point_order(P, _order_in_interval(P, lo, hi)))
        cands = [m for m in range(lo - lo % lcm_e, hi + 1, lcm_e)
                 if m >= lo and (2 * q + 2 - m) % lcm_t == 0]
        if len(cands) == 1:
            return cands[0]
        T = _random_point(tw, rng)
        lcm_t = math.lcm(lcm_t, _point_order(T, _order_in_interval(T, lo, hi)))
        cands = [m for m in cands if (2 * q + 2 - m) % lcm_t == 0]
        if len(cands) == 1:
            return cands[0]
    raise InternalInconsistency("point count still ambiguous after twist sampling")


class WeilData(NamedTuple):
    a: int
    delta: int
    f: tuple[int, int, int]  # x^2 - a x + q, constant term first


def weil_data(E: Curve) -> WeilData:
    q = E.q
    a = q + 1 - E.count
    delta = a * a - 4 * q
    if delta > 0:
        raise InternalInconsistency(f"positive Weil discriminant {delta}")
    return WeilData(a, delta, (q, -a, 1))


def trace_over_extension(a: int, q: int, n: int) -> int:
    """alpha^n + beta^n for the roots of x^2 - a x + q."""
    s0, s1 = 2, a
    if n == 0:
        return 2
    for _ in range(n - 1):
        s0, s1 = s1, a * s1 - q * s0
    return s1


# -- division polynomials ------------------------------------------------------------

def _division_f(E: Curve, n: int, memo: dict) -> Poly:
    """f_n = psi_n for odd n and psi_n / psi_2 for even n, as a polynomial in x."""
    if n in memo:
        return memo[n]
    F = E.field
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    if n == 0:
        out = Poly(F, [])
    elif n in (1, 2):
        out = Poly(F, [1])
    elif n == 3:
        out = Poly(F, [b8, 3 * b6, 3 * b4, b2, 3])
    elif n == 4:
        out = Poly(F, [b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2])
    else:
        m = n // 2
        f = lambda k: _division_f(E, k, memo)
        if n % 2:
            FF = E.two_division_poly()
            FF = FF * FF
            if m % 2 == 0:
                out = FF * f(m + 2) * f(m) ** 3 - f(m - 1) * f(m + 1) ** 3
            else:
                out = f(m + 2) * f(m) ** 3 - FF * f(m - 1) * f(m + 1) ** 3
        else:
            out = f(m) * (f(m + 2) * f(m - 1) ** 2 - f(m - 2) * f(m + 1) ** 2)
    memo[n] = out
    return out


def division_polynomial(E: Curve, N: int) -> Poly:
    """Polynomial in x whose roots are the x-coordinates of E[N] minus O.

    For odd N this is psi_N, of degree (N^2 - 1)/2. For even N, with the
    convention psi_2 = 2y + a1 x + a3, it is (psi_N / psi_2) * psi_2^2, where
    psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 carries the 2-torsion x-coordinates.
    """
    N = int(N)
    if N < 1:
        raise BadTorsionLevel("torsion level must be positive")
    if N % E.p == 0:
        raise BadTorsionLevel(f"characteristic {E.p} divides N={N}")
    fN = _division_f(E, N, {})
    if N % 2:
        return fN
    return fN * E.two_division_poly()


# -- explicit torsion ---------------------------------------------------------------------

def gl2_order(N: int) -> int:
    out = N**4
    for l in prime_factors(N):
        out = out * (l - 1) * (l * l - 1) // (l**3)
    return out


@dataclass(frozen=True)
class TorsionOrbit:
    """Galois orbit of x-coordinates of N-torsion points over the base field."""

    factor: Poly
    degree: int  # field degree of the x-coordinates
    point_degree: int  # field degree of the points
    n_points: int


def _point_field_degree(E: Curve, g: Poly) -> tuple[int, bool]:
    """(degree of the field of definition of the points over a root of g, is_2_torsion)."""
    F = E.field
    e = g.degree
    size = F.order**e
    H = E.h_poly() % g
    R = E.rhs_poly() % g
    if F.p != 2:
        disc = (H * H + R * 4) % g
        if disc.is_zero():
            return e, True
        s = disc.powmod((size - 1) // 2, g)
        return (e if s == Poly(F, [1]) else 2 * e), False
    if H.is_zero():
        return e, True
    _, inv, _ = poly_xgcd(H, g)
    c = (R * inv * inv) % g
    acc, t = c, c
    for _ in range(F.r * e - 1):
        t = (t * t) % g
        acc = acc + t
    return (e if acc.is_zero() else 2 * e), False


def torsion_orbits(E: Curve, N: int) -> list[TorsionOrbit]:
    orbits = []
    polys = [_division_f(E, N, {})]
    if N % 2 == 0:
        polys.append(E.two_division_poly())
    for poly in polys:
        if poly.degree <= 0:
            continue
        for g in factor_squarefree(poly.monic()):
            pd, two = _point_field_degree(E, g)
            orbits.append(TorsionOrbit(g, g.degree, pd, g.degree if two else 2 * g.degree))
    if 1 + sum(o.n_points for o in orbits) != N * N:
        raise InternalInconsistency(f"division polynomial for N={N} does not account for N^2 points")
    return orbits


def rational_torsion_order(orbits: list[TorsionOrbit], d: int) -> int:
    """|E(F_{q^d})[N]| from the orbit data."""
    return 1 + sum(o.n_points for o in orbits if d % o.point_degree == 0)


def torsion_field_degree(E: Curve, N: int, orbits: list[TorsionOrbit] | None = None) -> int:
    """Least d with E[N] inside E(F_{q^d})."""
    if N == 1:
        return 1
    if orbits is None:
        orbits = torsion_orbits(E, N)
    cap = gl2_order(N)
    d = 1
    while rational_torsion_order(orbits, d) != N * N:
        d += 1
        if d > cap:
            raise CapExceeded(f"no torsion field of degree <= {cap}")
    return d


class TorsionBasis(NamedTuple):
    ext: FiniteField
    P: Point
    Q: Point


def _check_level(E: Curve, N: int):
    if N < 1 or N % E.p == 0:
        raise BadTorsionLevel(f"N={N} must be positive and prime to p={E.p}")
    if N > TORSION_CAP:
        raise CapExceeded(f"N={N} exceeds the torsion cap {TORSION_CAP}")


def _independent_mod_primes(P: Point, Q: Point, N: int) -> bool:
    for l in prime_factors(N):
        A, B = P * (N // l), Q * (N // l)
        R = A.curve.infinity
        for _ in range(l):
            if R == B:
                return False
            R = R + A
    return True


def combination_table(P: Point, Q: Point, N: int) -> dict:
    """{key(iP + jQ): (i, j)} over all N^2 pairs; BasisFailure if any collide."""
    table = {}
    jQ = P.curve.infinity
    for j in range(N):
        R = jQ
        for i in range(N):
            k = R.key()
            if k in table:
                raise BasisFailure(f"{(i, j)} and {table[k]} give the same point")
            table[k] = (i, j)
            R = R + P
        jQ = jQ + Q
    return table


def torsion_basis(E: Curve, N: int) -> TorsionBasis:
    """A basis (P, Q) of E[N] over the smallest extension containing it."""
    N = int(N)
    _check_level(E, N)
    if N == 1:
        return TorsionBasis(E.field, E.infinity, E.infinity)
    orbits = torsion_orbits(E, N)
    d = torsion_field_degree(E, N, orbits)
    F = E.field
    ext = make_field(F.p, F.r * d)
    Ex = E.base_change(ext)
    P = Q = None
    for orb in sorted(orbits, key=lambda o: (o.degree, o.point_degree)):
        alpha = root_in_extension(orb.factor, ext)
        for i in range(orb.degree):
            x = alpha.frobenius(F.r * i)
            for pt in Ex.lift_x(x):
                if not pt.has_order(N):
                    continue
                if P is None:
                    P = pt
                elif _independent_mod_primes(P, pt, N):
                    Q = pt
                    break
            if Q is not None:
                break
        if Q is not None:
            break
    if Q is None:
        raise BasisFailure(f"no basis of E[{N}] found over {ext}")
    combination_table(P, Q, N)
    return TorsionBasis(ext, P, Q)


# -- curve families for sweeps ---------------------------------------------------------

def enumerate_curves(field: FiniteField) -> Iterator[Curve]:
    """Every nonsingular curve of a standard family over the field, in index order.

    p > 3: y^2 = x^3 + a x + b.
    p = 3: y^2 = x^3 + a2 x^2 + a4 x + a6.
    p = 2: y^2 + x y = x^3 + a2 x^2 + a6, then y^2 + a3 y = x^3 + a4 x + a6.
    Together these reach every isomorphism class.
    """
    F = field
    els = list(F.elements())
    if F.p > 3:
        for a in els:
            for b in els:
                if not (4 * a * a * a + 27 * b * b).is_zero():
                    yield Curve.short(F, a, b)
    elif F.p == 3:
        for a2 in els:
            for a4 in els:
                for a6 in els:
                    try:
                        yield Curve(F, 0, a2, 0, a4, a6)
                    except Singular:
                        pass
    else:
        for a2 in els:
            for a6 in els:
                if a6:
                    yield Curve(F, 1, a2, 0, 0, a6)
        for a3 in els:
            if not a3:
                continue
            for a4 in els:
                for a6 in els:
                    yield Curve(F, 0, 0, a3, a4, a6)


# -- literals ------------------------------------------------------------------------

def format_element(e: FieldElement) -> str:
    F = e.field
    if F.r == 1:
        return str(e.coeffs[0])
    digits = [str(c) for c in reversed(e.coeffs)]
    return (".".join if F.p > 10 else "".join)(digits)


def parse_element(F: FiniteField, text: str) -> FieldElement:
    text = text.strip()
    if F.r == 1:
        return F(int(text))
    if F.p > 10:
        digits = [int(d) for d in text.split(".")]
    else:
        if not text.isdigit():
            raise ValueError(f"bad field element literal {text!r}")
        digits = [int(d) for d in text]
    if len(digits) > F.r or any(d >= F.p for d in digits):
        raise ValueError(f"{text!r} is not a base-{F.p} digit string of length <= {F.r}")
    return F(list(reversed(digits)))


def curve_literal(E: Curve) -> str:
    """`p^r:a,b` for short models, `p^r:a1,a2,a3,a4,a6` otherwise."""
    head = f"{E.p}^{E.field.r}"
    coeffs = (E.a4, E.a6) if E.is_short() else E.coefficients
    return head + ":" + ",".join(format_element(c) for c in coeffs)


def parse_curve(text: str) -> Curve:
    """Inverse of curve_literal; the field is make_field(p, r)."""
    try:
        head, body = text.split(":")
        p_s, r_s = head.split("^")
        p, r = int(p_s), int(r_s)
    except ValueError:
        raise ValueError(f"curve literal {text!r} does not match p^r:coefficients") from None
    if r < 1:
        raise ValueError("extension degree must be >= 1")
    F = make_field(p, r)
    parts = body.split(",")
    coeffs = [parse_element(F, s) for s in parts]
    if len(coeffs) == 2:
        return Curve.short(F, *coeffs)
    if len(coeffs) == 5:
        return Curve(F, *coeffs)
    raise ValueError(f"expected 2 or 5 coefficients, got {len(coeffs)}")

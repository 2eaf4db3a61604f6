"""The index b and the Frobenius matrix tau, with criteria for scalar action on E[N].

Given the Weil data (a, Delta = a^2 - 4q) and the j-invariant of a curve, b is
the largest h with h^2 | Delta whose class polynomial product for Delta/h^2
vanishes at j. The matrix

    [[(a b - Delta) / 2b,  Delta (b^2 - Delta) / 4b^3],
     [b,                   (a b + Delta) / 2b        ]]

(or the scalar a/2 when Delta = 0) then describes Frobenius on every E[N].
"""

from __future__ import annotations

import enum
import functools
import logging
from dataclasses import dataclass

from . import diagnostics
from .class_orders import square_part_divisors
from .curves import Curve, weil_data
from .errors import (
    BadTorsionLevel,
    InternalInconsistency,
    NoRowMatch,
    NonIntegralEntry,
    SpecialEvenTorsion,
    WrongIsogenyClass,
)
from .finite_field import poly_roots
from .hcp import script_p

log = logging.getLogger(__name__)

Matrix = tuple[tuple[int, int], tuple[int, int]]


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


class Classification(enum.Enum):
    ORDINARY = "ORDINARY"
    SUPERSINGULAR_STABLE = "SUPERSINGULAR_STABLE"
    SUPERSINGULAR_UNSTABLE = "SUPERSINGULAR_UNSTABLE"
    SPECIAL = "SPECIAL"


@dataclass(frozen=True)
class TableRow:
    """A supersingular unstable Weil polynomial family and its admissible b values."""

    row: int
    m: int
    b_values: tuple[int, ...]
    delta: int

    @property
    def tag(self) -> str:
        return f"row{self.row}(m={self.m})"


NOT_UNSTABLE = None


@dataclass(frozen=True)
class FrobeniusData:
    p: int
    r: int
    q: int
    a: int
    delta: int
    b: object  # int or INFINITE
    tau: Matrix
    classification: Classification
    table_row: TableRow | None = None
    sigma_prime: Matrix | None = None
    sigma_double_prime: Matrix | None = None

    def tau_mod(self, N: int) -> Matrix:
        return mat_mod(self.tau, N)

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "r": self.r,
            "q": str(self.q),
            "a_E": str(self.a),
            "delta_E": str(self.delta),
            "b": "INFINITE" if self.b is INFINITE else str(self.b),
            "tau": mat_json(self.tau),
            "classification": self.classification.value,
            "table_row": self.table_row.tag if self.table_row else None,
        }
        if self.sigma_prime is not None:
            out["sigma_prime"] = mat_json(self.sigma_prime)
            out["sigma_double_prime"] = mat_json(self.sigma_double_prime)
        return out


def mat_mod(M: Matrix, N: int) -> Matrix:
    return ((M[0][0] % N, M[0][1] % N), (M[1][0] % N, M[1][1] % N))


def mat_json(M: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in M]


def n_star(N: int) -> int:
    return N if N % 2 else 2 * N


def _exact(num: int, den: int) -> int:
    if num % den:
        raise NonIntegralEntry(f"{num}/{den} is not an integer")
    return num // den


def sigma_matrix(a: int, delta: int, b) -> Matrix:
    """The integral Frobenius matrix for Weil data (a, delta) and index b."""
    if delta > 0:
        raise NonIntegralEntry(f"positive discriminant {delta}")
    if delta == 0:
        if b is not INFINITE:
            raise NonIntegralEntry("delta = 0 requires b = INFINITE")
        s = _exact(a, 2)
        return ((s, 0), (0, s))
    if b is INFINITE or b < 1:
        raise NonIntegralEntry(f"delta = {delta} < 0 requires a finite positive b, got {b}")
    if delta % (b * b):
        raise NonIntegralEntry(f"b^2 = {b * b} does not divide {delta}")
    return (
        (_exact(a * b - delta, 2 * b), _exact(delta * (b * b - delta), 4 * b**3)),
        (b, _exact(a * b + delta, 2 * b)),
    )


def special_sigmas(p: int, m: int) -> tuple[Matrix, Matrix]:
    """(sigma', sigma'') for f = x^2 + p^(2m+1), i.e. b = p^m and b = 2p^m."""
    delta = -4 * p ** (2 * m + 1)
    return sigma_matrix(0, delta, p**m), sigma_matrix(0, delta, 2 * p**m)


def special_alpha(p: int) -> Matrix:
    """alpha with alpha sigma' = sigma'' alpha; invertible over Z[1/2]."""
    return ((1, -p), (0, 2))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _scriptp_vanishes(D: int, j) -> bool:
    return script_p(D).vanishes_at(j)


def compute_b(E: Curve):
    """Largest h with h^2 | Delta and the product polynomial for Delta/h^2 vanishing at j."""
    w = weil_data(E)
    hs = square_part_divisors(w.delta)
    if w.delta == 0:
        return INFINITE
    j = E.j_invariant
    best = None
    for h in hs:
        if _scriptp_vanishes(w.delta // (h * h), j):
            best = h
        elif h == 1:
            diagnostics.record("h1_failures")
            raise InternalInconsistency(f"product polynomial for {w.delta} does not vanish at j={j} on {E!r}")
    diagnostics.record("h1_checks")
    return best


def is_special(E: Curve) -> bool:
    p, r = E.p, E.field.r
    if p % 4 != 3 or r % 2 == 0:
        return False
    return weil_data(E).a == 0 and E.j_invariant == E.field(1728)


def classify_unstable(f: tuple[int, int, int], p: int, r: int):
    """Table row for a supersingular unstable Weil polynomial f (constant term first), else NOT_UNSTABLE."""
    q, minus_a, lead = f
    a = -minus_a
    if lead != 1 or q != p**r:
        raise ValueError(f"{f} is not x^2 - a x + {p}^{r}")
    delta = a * a - 4 * q
    if a % p or delta >= 0:
        return NOT_UNSTABLE
    m = r // 2
    if a == 0 and r % 2:
        return TableRow(1, m, (p**m, 2 * p**m), delta)
    if a == 0 and p % 4 != 1:
        return TableRow(2, m, (p**m,), delta)
    if r % 2 == 0 and abs(a) == p**m and p % 3 != 1:
        return TableRow(3, m, (p**m,), delta)
    if r % 2 and p in (2, 3) and abs(a) == p ** (m + 1):
        return TableRow(4, m, (p**m,), delta)
    raise NoRowMatch(f"x^2 - ({a})x + {p}^{r} is supersingular unstable but matches no row")


def _classification(E: Curve, a: int, delta: int) -> Classification:
    if a % E.p:
        return Classification.ORDINARY
    if delta == 0:
        return Classification.SUPERSINGULAR_STABLE
    if is_special(E):
        return Classification.SPECIAL
    return Classification.SUPERSINGULAR_UNSTABLE


@functools.lru_cache(maxsize=65536)
def frobenius_data(E: Curve) -> FrobeniusData:
    w = weil_data(E)
    p, r, q = E.p, E.field.r, E.q
    b = compute_b(E)
    tau = sigma_matrix(w.a, w.delta, b)
    cls = _classification(E, w.a, w.delta)
    row = None
    sp = spp = None
    if cls in (Classification.SUPERSINGULAR_UNSTABLE, Classification.SPECIAL):
        row = classify_unstable(w.f, p, r)
        if b not in row.b_values:
            raise InternalInconsistency(f"b={b} not allowed by {row.tag} for {E!r}")
    if cls is Classification.SPECIAL:
        sp, spp = special_sigmas(p, row.m)
        agrees = b == 2 * p**row.m
        diagnostics.record("special_b_is_2pm" if agrees else "special_b_is_pm")
        log.debug("special curve %r: b=%s, expected 2p^m=%s", E, b, 2 * p**row.m)
    tr = tau[0][0] + tau[1][1]
    det = tau[0][0] * tau[1][1] - tau[0][1] * tau[1][0]
    diagnostics.record("charpoly_checks")
    if tr != w.a or det != q:
        diagnostics.record("charpoly_failures")
        raise InternalInconsistency(f"tau {tau} has trace {tr}, det {det}; expected {w.a}, {q}")
    return FrobeniusData(p, r, q, w.a, w.delta, b, tau, cls, row, sp, spp)


def b_via_two_torsion(E: Curve) -> int:
    """p^m, or 2p^m exactly when all of E[2] is rational, for f = x^2 + p^(2m+1)."""
    p, r = E.p, E.field.r
    w = weil_data(E)
    if w.a != 0 or r % 2 == 0:
        raise WrongIsogenyClass(f"Weil polynomial x^2 - ({w.a})x + {p}^{r} is not x^2 + p^(2m+1)")
    if p == 2:
        raise BadTorsionLevel("2-torsion is not etale in characteristic 2")
    m = r // 2
    roots = poly_roots(E.two_division_poly())
    return 2 * p**m if len(roots) == 3 else p**m


def _check_torsion_args(E: Curve, N: int):
    if N < 1 or N % E.p == 0:
        raise BadTorsionLevel(f"N={N} must be positive and prime to p={E.p}")
    if N <= 2 and is_special(E):
        raise SpecialEvenTorsion(f"special curve {E!r} needs N > 2, got N={N}")


def scalar_action(E: Curve, N: int) -> bool:
    """Frobenius acts on E[N] as a scalar."""
    _check_torsion_args(E, N)
    w = weil_data(E)
    if w.delta == 0:
        return True
    if w.delta % (N * N):
        return False
    return _scriptp_vanishes(w.delta // (N * N), E.j_invariant)


def rationality_congruence(a: int, delta: int, N: int) -> bool:
    return (a - 2 - delta // N) % n_star(N) == 0


def full_rationality(E: Curve, N: int) -> bool:
    """All of E[N] is defined over the base field."""
    if not scalar_action(E, N):
        return False
    w = weil_data(E)
    return rationality_congruence(w.a, w.delta, N)

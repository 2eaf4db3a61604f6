"""Brute-force Frobenius matrices on explicit torsion bases, and GL2(Z/N) conjugacy."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from . import diagnostics
from .curves import Curve, Point, combination_table, curve_literal, torsion_basis, weil_data
from .errors import InternalInconsistency, SpecialEvenTorsion
from .finite_field import FiniteField
from .frobenius import Classification, Matrix, frobenius_data


@dataclass(frozen=True)
class TorsionMatrix:
    """Frobenius on E[N] in the basis (P, Q): Frob(P) = aP + bQ, Frob(Q) = cP + dQ gives [[a, c], [b, d]]."""

    N: int
    entries: Matrix
    ext: FiniteField
    P: Point
    Q: Point

    def is_scalar(self) -> bool:
        (a, c), (b, d) = self.entries
        return b == 0 and c == 0 and a == d

    def is_identity(self) -> bool:
        return self.is_scalar() and self.entries[0][0] == 1 % self.N


def frobenius_on_torsion(E: Curve, N: int) -> TorsionMatrix:
    N = int(N)
    ext, P, Q = torsion_basis(E, N)
    table = combination_table(P, Q, N)
    r = E.field.r
    a, b = table[P.frobenius(r).key()]
    c, d = table[Q.frobenius(r).key()]
    M = ((a, c), (b, d))
    w = weil_data(E)
    diagnostics.record("torsion_charpoly_checks")
    if (a + d - w.a) % N or (a * d - b * c - E.q) % N:
        raise InternalInconsistency(f"Frobenius matrix {M} mod {N} does not reduce f_E on {E!r}")
    return TorsionMatrix(N, M, ext, P, Q)


@functools.lru_cache(maxsize=None)
def _gl2(N: int) -> np.ndarray:
    """Every invertible 2x2 matrix mod N, shape (k, 2, 2), in lexicographic order."""
    r = np.arange(N)
    u = np.stack(np.meshgrid(r, r, r, r, indexing="ij"), axis=-1).reshape(-1, 2, 2)
    det = (u[:, 0, 0] * u[:, 1, 1] - u[:, 0, 1] * u[:, 1, 0]) % N
    ok = np.gcd(det, N) == 1
    return u[ok]


def _entries(A) -> np.ndarray:
    if isinstance(A, TorsionMatrix):
        A = A.entries
    return np.array(A, dtype=np.int64).reshape(2, 2)


def find_conjugator(A, B, N: int) -> Matrix | None:
    """The first U in GL2(Z/N) (lexicographic) with U A U^-1 = B mod N, or None."""
    A, B = _entries(A) % N, _entries(B) % N
    U = _gl2(N)
    lhs = np.einsum("kij,jl->kil", U, A) % N
    rhs = np.einsum("ij,kjl->kil", B, U) % N
    hit = np.nonzero((lhs == rhs).all(axis=(1, 2)))[0]
    if not len(hit):
        return None
    u = U[hit[0]]
    return ((int(u[0, 0]), int(u[0, 1])), (int(u[1, 0]), int(u[1, 1])))


def gl2_conjugate(A, B, N: int | None = None) -> bool:
    if N is None:
        N = A.N
    return find_conjugator(A, B, N) is not None


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    OUT_OF_CONTRACT = "OUT-OF-CONTRACT"


@dataclass(frozen=True)
class VerifyReport:
    curve: str
    N: int
    verdict: Verdict
    classification: Classification
    tau: Matrix | None
    frobenius_matrix: Matrix | None
    conjugator: Matrix | None

    def to_json(self) -> dict:
        def m(M):
            return None if M is None else [[str(x) for x in row] for row in M]

        out = {
            "curve": self.curve,
            "N": self.N,
            "verdict": self.verdict.value,
            "classification": self.classification.value,
            "tau": m(self.tau),
            "frobenius_matrix": m(self.frobenius_matrix),
        }
        if self.conjugator is not None:
            out["conjugator"] = m(self.conjugator)
        return out


def verify_curve(E: Curve, N: int, strict: bool = False) -> VerifyReport:
    """Compare tau mod N with the brute-force Frobenius matrix on E[N].

    Special curves with even N are outside what the theory covers: they get an
    OUT-OF-CONTRACT report, or SpecialEvenTorsion when `strict`.
    """
    data = frobenius_data(E)
    lit = curve_literal(E)
    if N % 2 == 0 and data.classification is Classification.SPECIAL:
        if strict:
            raise SpecialEvenTorsion(f"special curve {lit} with even N={N}")
        return VerifyReport(lit, N, Verdict.OUT_OF_CONTRACT, data.classification, None, None, None)
    tau = data.tau_mod(N)
    tm = frobenius_on_torsion(E, N)
    U = find_conjugator(tm, tau, N)
    verdict = Verdict.PASS if U is not None else Verdict.FAIL
    return VerifyReport(lit, N, verdict, data.classification, tau, tm.entries, U)


def rational_torsion_count(E: Curve, N: int) -> int:
    """|E(k)[N]| by enumerating E(k)."""
    return sum(1 for P in E.rational_points() if (P * N).is_infinity)


"""Complete splitting of primes in Q(E[N]) for rational curves y^2 = x^3 + a x + b.

A good prime p not dividing N splits completely exactly when Frobenius acts
trivially on E_p[N]; the criterion below decides that from the Weil data and
j-invariant of the reduction alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import Curve, weil_data
from .errors import BadReductionPrime, SpecialN2Exclusion
from .finite_field import is_prime, make_field
from .frobenius import _scriptp_vanishes, is_special, rationality_congruence

P_MAX_CAP = 10**4


@dataclass(frozen=True)
class RationalCurve:
    a: int
    b: int

    def __post_init__(self):
        if self.discriminant == 0:
            raise ValueError(f"y^2 = x^3 + {self.a}x + {self.b} is singular")

    @property
    def discriminant(self) -> int:
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    def label(self) -> str:
        return f"y^2=x^3+({self.a})x+({self.b})"


def reduce_at(E: RationalCurve, p: int) -> Curve:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= 3 or E.discriminant % p == 0:
        raise BadReductionPrime(f"p={p} is not a good prime > 3 for {E.label()}")
    return Curve.short(make_field(p), E.a, E.b)


def splits_completely(E: RationalCurve, p: int, N: int) -> tuple[bool, bool, bool]:
    """(splits, cond_i, cond_ii) for p in Q(E[N])."""
    if N % p == 0:
        raise BadReductionPrime(f"p={p} divides N={N}")
    Ep = reduce_at(E, p)
    if N == 2 and is_special(Ep):
        raise SpecialN2Exclusion(f"reduction of {E.label()} at {p} is special")
    w = weil_data(Ep)
    cond_i = w.delta % (N * N) == 0 and _scriptp_vanishes(w.delta // (N * N), Ep.j_invariant)
    cond_ii = rationality_congruence(w.a, w.delta, N) if w.delta % N == 0 else False
    return cond_i and cond_ii, cond_i, cond_ii


@dataclass(frozen=True)
class SplitRow:
    p: int
    splits: bool
    cond_i: bool
    cond_ii: bool
    cross_check: bool | None = None

    def to_json(self) -> dict:
        out = {"p": self.p, "splits": self.splits, "cond_i": self.cond_i, "cond_ii": self.cond_ii}
        if self.cross_check is not None:
            out["cross_check"] = self.cross_check
        return out


@dataclass(frozen=True)
class SkippedPrime:
    p: int
    reason: str

    def to_json(self) -> dict:
        return {"p": self.p, "skipped": self.reason}


@dataclass
class SplitReport:
    curve: RationalCurve
    N: int
    p_max: int
    rows: list[SplitRow] = field(default_factory=list)
    skipped: list[SkippedPrime] = field(default_factory=list)

    def mismatches(self) -> list[SplitRow]:
        return [r for r in self.rows if r.cross_check is not None and r.cross_check != r.splits]

    def to_json(self) -> list[dict]:
        entries = [r.to_json() for r in self.rows] + [s.to_json() for s in self.skipped]
        return sorted(entries, key=lambda e: e["p"])


def survey(E: RationalCurve, N: int, p_max: int, cross_check: bool = False) -> SplitReport:
    """Rows for every prime <= p_max; primes outside the hypotheses are recorded as skipped."""
    from .oracle import frobenius_on_torsion

    if p_max > P_MAX_CAP:
        raise ValueError(f"p_max={p_max} exceeds the cap {P_MAX_CAP}")
    report = SplitReport(E, N, p_max)
    for p in range(2, p_max + 1):
        if not is_prime(p):
            continue
        if p <= 3:
            report.skipped.append(SkippedPrime(p, "p <= 3"))
        elif E.discriminant % p == 0:
            report.skipped.append(SkippedPrime(p, "bad reduction"))
        elif N % p == 0:
            report.skipped.append(SkippedPrime(p, "p divides N"))
        else:
            try:
                splits, ci, cii = splits_completely(E, p, N)
            except SpecialN2Exclusion:
                report.skipped.append(SkippedPrime(p, "special reduction with N = 2"))
                continue
            cc = None
            if cross_check:
                cc = frobenius_on_torsion(reduce_at(E, p), N).is_identity()
            report.rows.append(SplitRow(p, splits, ci, cii, cc))
    return report

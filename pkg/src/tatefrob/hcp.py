"""Hilbert class polynomials via the q-expansion of the modular j-function.

Complex arithmetic runs in a private mpmath context per call, so precision
settings never leak between computations (or threads).
"""

from __future__ import annotations

import enum
import functools
import math
import os
from dataclasses import dataclass, field

import mpmath

from .class_orders import check_discriminant, reduced_forms, superorders
from .errors import BadDiscriminant, CapExceeded, PrecisionExhausted, PrecisionUnderflow
from .finite_field import FieldElement, Poly, make_field

HCP_CAP = 5 * 10**4
ROUNDING_GATE = 0.25
MAX_RETRIES = 3
DEFAULT_PREC_FLOOR = 256
TERM_GUARD = 32


def precision_floor() -> int:
    env = os.environ.get("TATEFROB_PREC_FLOOR")
    return int(env) if env else DEFAULT_PREC_FLOOR


def required_precision(D: int) -> int:
    D = check_discriminant(D)
    forms = reduced_forms(D)
    size = math.pi * math.sqrt(-D) * sum(1 / f.A for f in forms) / math.log(2)
    return math.ceil(size) + 64 * len(forms) + precision_floor()


def _context(prec: int) -> mpmath.ctx_mp.MPContext:
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def _sigma3_table(n: int) -> list[int]:
    s = [0] * (n + 1)
    for d in range(1, n + 1):
        d3 = d**3
        for m in range(d, n + 1, d):
            s[m] += d3
    return s


def _j_in_context(ctx, tau, prec: int):
    tau = ctx.mpc(tau)
    im = float(tau.imag)
    if im <= 0:
        raise ValueError("tau must lie in the upper half plane")
    log2_inv_q = 2 * math.pi * im / math.log(2)
    if prec <= log2_inv_q + 8:
        raise PrecisionUnderflow(f"{prec} bits cannot hold the 1/q term (~{log2_inv_q:.0f} bits)")
    n_terms = math.ceil((prec + TERM_GUARD) / log2_inv_q) + TERM_GUARD
    q = ctx.exp(2 * ctx.pi * ctx.mpc(0, 1) * tau)
    sig = _sigma3_table(n_terms)
    e4 = ctx.mpc(1)
    qn = ctx.mpc(1)
    for n in range(1, n_terms + 1):
        qn *= q
        e4 += 240 * sig[n] * qn
    # prod (1 - q^n) through the pentagonal number theorem
    eta = ctx.mpc(1)
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n_terms:
            break
        sign = -1 if k % 2 else 1
        eta += sign * (q**g1 + q ** (g1 + k))
        k += 1
    return e4**3 / (q * eta**24)


def j_value(tau, prec: int):
    """j(tau) as an mpmath complex number computed with `prec` bits."""
    ctx = _context(prec + TERM_GUARD)
    return _j_in_context(ctx, tau, prec)


@dataclass(frozen=True)
class ClassPoly:
    D: int
    coeffs: tuple[int, ...]  # constant term first, monic
    prec: int = field(compare=False, default=0)
    residual: float = field(compare=False, default=0.0)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def reduce(self, p: int) -> Poly:
        return Poly(make_field(p), self.coeffs)

    def __repr__(self):
        return f"ClassPoly(D={self.D}, coeffs={list(self.coeffs)})"


def _hcp_at(D: int, prec: int) -> tuple[tuple[int, ...], float]:
    ctx = _context(prec)
    forms = reduced_forms(D)
    sqrt_d = ctx.sqrt(ctx.mpf(-D)) * ctx.mpc(0, 1)
    poly = [ctx.mpc(1)]
    for f in forms:
        tau = (-f.B + sqrt_d) / (2 * f.A)
        j = _j_in_context(ctx, tau, prec)
        nxt = [ctx.mpc(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= j * c
        poly = nxt
    coeffs, worst = [], 0.0
    for c in poly:
        n = int(ctx.nint(c.real))
        worst = max(worst, float(abs(c - n)))
        coeffs.append(n)
    return tuple(coeffs), worst


@functools.lru_cache(maxsize=2048)
def hilbert_class_polynomial(D: int, prec: int | None = None) -> ClassPoly:
    """P_D over the integers, with precision doubling when rounding looks unsafe."""
    D = check_discriminant(D)
    if -D > HCP_CAP:
        raise CapExceeded(f"|D| = {-D} exceeds the cap {HCP_CAP}")
    prec = prec or required_precision(D)
    for _ in range(MAX_RETRIES + 1):
        coeffs, residual = _hcp_at(D, prec)
        if residual < ROUNDING_GATE and coeffs[-1] == 1:
            return ClassPoly(D, coeffs, prec, residual)
        prec *= 2
    raise PrecisionExhausted(f"P_{D}: rounding residual {residual} after {MAX_RETRIES} retries")


class ScriptKind(enum.Enum):
    ZERO = "ZERO"
    ONE = "ONE"
    PRODUCT = "PRODUCT"


@dataclass(frozen=True)
class ScriptP:
    """Product of P_{D'} over all orders containing the order of discriminant D."""

    D: int
    kind: ScriptKind
    factors: tuple[ClassPoly, ...] = ()

    def integer_coeffs(self) -> tuple[int, ...]:
        if self.kind is ScriptKind.ZERO:
            return ()
        out = [1]
        for f in self.factors:
            out = _int_poly_mul(out, f.coeffs)
        return tuple(out)

    def reduce(self, p: int) -> Poly:
        F = make_field(p)
        if self.kind is ScriptKind.ZERO:
            return Poly(F, [])
        out = Poly(F, [1])
        for f in self.factors:
            out = out * _reduced(f.D, p)
        return out

    def vanishes_at(self, j: FieldElement) -> bool:
        """Whether the reduction mod char(j) has j as a root."""
        if self.kind is ScriptKind.ZERO:
            return True
        if self.kind is ScriptKind.ONE:
            return False
        p = j.field.p
        return any(_eval_int_poly(_reduced_coeffs(f.D, p), j).is_zero() for f in self.factors)


def _int_poly_mul(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for k, y in enumerate(b):
            out[i + k] += x * y
    return out


@functools.lru_cache(maxsize=8192)
def _reduced_coeffs(D: int, p: int) -> tuple[int, ...]:
    return tuple(c % p for c in hilbert_class_polynomial(D).coeffs)


@functools.lru_cache(maxsize=8192)
def _reduced(D: int, p: int) -> Poly:
    return Poly(make_field(p), _reduced_coeffs(D, p))


def _eval_int_poly(coeffs, x: FieldElement) -> FieldElement:
    acc = x.field.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def script_p(D: int, modulo: int | None = None):
    """The product polynomial for any D <= 0; reduced to a Poly over F_p when `modulo` is given."""
    D = int(D)
    if D > 0:
        raise BadDiscriminant(f"{D} is positive")
    if D == 0:
        sp = ScriptP(D, ScriptKind.ZERO)
    elif D % 4 in (2, 3):
        sp = ScriptP(D, ScriptKind.ONE)
    else:
        sp = ScriptP(D, ScriptKind.PRODUCT,
                     tuple(hilbert_class_polynomial(d) for _, d in superorders(D)))
    return sp if modulo is None else sp.reduce(modulo)

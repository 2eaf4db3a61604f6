"""Reduced binary quadratic forms of negative discriminant and the orders above them."""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import BadDiscriminant


class _All:
    """Marker for 'every positive integer', returned when the discriminant is 0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL"

    def __contains__(self, h):
        return isinstance(h, int) and h >= 1


ALL = _All()


class ReducedForm(NamedTuple):
    A: int
    B: int
    C: int

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C


def is_discriminant(D: int) -> bool:
    return D < 0 and D % 4 in (0, 1)


def check_discriminant(D: int) -> int:
    D = int(D)
    if not is_discriminant(D):
        raise BadDiscriminant(f"{D} is not a negative integer congruent to 0 or 1 mod 4")
    return D


def reduced_forms(D: int) -> list[ReducedForm]:
    """One reduced primitive form per class, ordered by (A, B)."""
    D = check_discriminant(D)
    out = []
    a_max = math.isqrt(-D // 3)
    for A in range(1, a_max + 1):
        for B in range(-A + 1, A + 1):
            if (B * B - D) % (4 * A):
                continue
            C = (B * B - D) // (4 * A)
            if C < A or (B < 0 and A == C):
                continue
            if math.gcd(math.gcd(A, abs(B)), C) != 1:
                continue
            out.append(ReducedForm(A, B, C))
    return out


def class_number(D: int) -> int:
    return len(reduced_forms(D))


def superorders(D: int) -> list[tuple[int, int]]:
    """[(h, D')] with D' h^2 = D and D' a discriminant, ascending in h."""
    D = check_discriminant(D)
    return [(h, D // (h * h)) for h in square_part_divisors(D) if is_discriminant(D // (h * h))]


def square_part_divisors(delta: int):
    """Ascending h >= 1 with h^2 | delta, or ALL when delta == 0."""
    delta = int(delta)
    if delta > 0:
        raise ValueError("expected a non-positive integer")
    if delta == 0:
        return ALL
    n = -delta
    return [h for h in range(1, math.isqrt(n) + 1) if n % (h * h) == 0]

"""Process-wide counters for sanity checks (Hasse bound, characteristic polynomial, ...)."""

from collections import Counter

_counts: Counter = Counter()


def record(name: str, n: int = 1) -> None:
    _counts[name] += n


def snapshot() -> dict[str, int]:
    return dict(_counts)


def reset() -> None:
    _counts.clear()

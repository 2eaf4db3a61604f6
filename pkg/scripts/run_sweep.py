"""Compare tau mod N against brute-force Frobenius matrices over whole curve families.

    python3 scripts/run_sweep.py --primes 5 7 11 13 --levels 2 3 4 5
    python3 scripts/run_sweep.py --primes 2 3 --degree 3 --levels 5 --out sweep.json
"""

from __future__ import annotations

import argparse
import collections
import json
import time
from dataclasses import asdict, dataclass, field

from tatefrob.curves import curve_literal, enumerate_curves
from tatefrob.finite_field import make_field
from tatefrob.oracle import Verdict, verify_curve


@dataclass
class SweepConfig:
    primes: list[int] = field(default_factory=lambda: [5, 7, 11, 13])
    degree: int = 1
    levels: list[int] = field(default_factory=lambda: [2, 3, 4, 5])
    out: str | None = None


def run(cfg: SweepConfig) -> dict:
    summary = {"config": asdict(cfg), "fields": []}
    for p in cfg.primes:
        F = make_field(p, cfg.degree)
        t0 = time.perf_counter()
        tally = collections.Counter()
        failures = []
        for E in enumerate_curves(F):
            for N in cfg.levels:
                if N % p == 0:
                    continue
                rep = verify_curve(E, N)
                tally[rep.verdict.value] += 1
                if rep.verdict is Verdict.FAIL:
                    failures.append(rep.to_json())
        summary["fields"].append({
            "field": f"{p}^{cfg.degree}",
            "verdicts": dict(tally),
            "failures": failures,
            "seconds": round(time.perf_counter() - t0, 2),
        })
        print(f"F_{p}^{cfg.degree}: {dict(tally)} in {summary['fields'][-1]['seconds']}s", flush=True)
    return summary


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+")
    ap.add_argument("--degree", type=int)
    ap.add_argument("--levels", type=int, nargs="+")
    ap.add_argument("--out")
    args = {k: v for k, v in vars(ap.parse_args()).items() if v is not None}
    summary = run(SweepConfig(**args))
    if summary["config"]["out"]:
        with open(summary["config"]["out"], "w") as fh:
            json.dump(summary, fh, indent=1)
    for row in summary["fields"]:
        for bad in row["failures"]:
            print("FAIL", bad["curve"], bad["N"])


if __name__ == "__main__":
    main()

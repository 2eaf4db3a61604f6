"""Survey complete splitting of primes in Q(E[N]) and compare with the torsion oracle.

    python3 scripts/run_split_survey.py --curves 0,1 -1,0 -1,1 --levels 3 5 --p-max 500
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from tatefrob.reciprocity import RationalCurve, survey


@dataclass
class SurveyConfig:
    curves: list[str] = field(default_factory=lambda: ["0,1", "-1,0", "-1,1"])
    levels: list[int] = field(default_factory=lambda: [3, 5])
    p_max: int = 500
    cross_check: bool = True
    out: str | None = None


def run(cfg: SurveyConfig) -> list[dict]:
    results = []
    for text in cfg.curves:
        a, b = (int(t) for t in text.split(","))
        E = RationalCurve(a, b)
        for N in cfg.levels:
            t0 = time.perf_counter()
            rep = survey(E, N, cfg.p_max, cross_check=cfg.cross_check)
            split = [r.p for r in rep.rows if r.splits]
            res = {
                "curve": E.label(),
                "N": N,
                "rows": len(rep.rows),
                "skipped": len(rep.skipped),
                "split_primes": split,
                "mismatches": [r.p for r in rep.mismatches()],
                "seconds": round(time.perf_counter() - t0, 2),
            }
            results.append(res)
            print(f"{res['curve']} N={N}: {len(split)}/{res['rows']} split, "
                  f"{len(res['mismatches'])} mismatches, {res['seconds']}s", flush=True)
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--curves", nargs="+", help="a,b pairs for y^2 = x^3 + a x + b")
    ap.add_argument("--levels", type=int, nargs="+")
    ap.add_argument("--p-max", type=int)
    ap.add_argument("--no-cross-check", dest="cross_check", action="store_false", default=None)
    ap.add_argument("--out")
    cfg = SurveyConfig(**{k: v for k, v in vars(ap.parse_args()).items() if v is not None})
    results = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "results": results}, fh, indent=1)


if __name__ == "__main__":
    main()

"""Tabulate Hilbert class polynomials: degree, class number, precision, rounding residual.

    python3 scripts/hcp_table.py --max-abs-d 500 --check-doubled
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from tatefrob.class_orders import class_number, is_discriminant
from tatefrob.hcp import hilbert_class_polynomial, required_precision


@dataclass
class HcpConfig:
    max_abs_d: int = 500
    check_doubled: bool = False
    out: str | None = None


def rows(cfg: HcpConfig):
    for D in range(-3, -cfg.max_abs_d - 1, -1):
        if not is_discriminant(D):
            continue
        t0 = time.perf_counter()
        P = hilbert_class_polynomial(D)
        row = {
            "D": D,
            "h": class_number(D),
            "degree": P.degree,
            "prec": P.prec,
            "residual": f"{P.residual:.3e}",
            "max_coeff_digits": max(len(str(abs(c))) for c in P.coeffs),
            "seconds": round(time.perf_counter() - t0, 3),
        }
        if cfg.check_doubled:
            row["doubled_agrees"] = P.coeffs == hilbert_class_polynomial(D, prec=2 * required_precision(D)).coeffs
        yield row


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-abs-d", type=int)
    ap.add_argument("--check-doubled", action="store_true", default=None)
    ap.add_argument("--out")
    cfg = HcpConfig(**{k: v for k, v in vars(ap.parse_args()).items() if v is not None})
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    writer = None
    bad = 0
    for row in rows(cfg):
        if writer is None:
            writer = csv.DictWriter(fh, fieldnames=list(row))
            writer.writeheader()
        writer.writerow(row)
        bad += row["degree"] != row["h"] or row.get("doubled_agrees") is False
    if cfg.out:
        fh.close()
    print(f"{bad} rows with degree != h or precision disagreement", file=sys.stderr)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Scan D~_s and D~_c against their main terms and fit the error exponent.

    python scripts/error_scan.py --to 1e8 --points-per-decade 6 --outdir results/
"""
import argparse
import time
from pathlib import Path

from zmn_subgroups.analysis import error_scan, records_to_csv, slope_fit
from zmn_subgroups.constants import build_bank
from zmn_subgroups.residue import main_term_coefficients


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--from", dest="x_from", type=float, default=1e3)
    ap.add_argument("--to", dest="x_to", type=float, default=1e7)
    ap.add_argument("--points-per-decade", type=int, default=4)
    ap.add_argument("--outdir", type=Path, default=None)
    args = ap.parse_args()

    bank = build_bank(50)
    for variant in "sc":
        t0 = time.perf_counter()
        recs = error_scan(variant, args.x_from, args.x_to, args.points_per_decade,
                          main_term_coefficients(variant, 2, bank))
        print(f"variant {variant}: {len(recs)} points in {time.perf_counter() - t0:.1f}s")
        print(f"{'x':>14} {'delta':>14} {'|delta|/(sqrt(x) log x)':>24} {'rel_err':>10}")
        for r in recs:
            print(f"{r.x:14.1f} {r.delta:14.3f} {r.normalized:24.5f} {r.rel_err:10.2e}")
        print(f"fitted exponent of |delta|: {slope_fit(recs):.3f}")
        print(f"max normalized delta: {max(r.normalized for r in recs):.4f}\n")
        if args.outdir:
            args.outdir.mkdir(parents=True, exist_ok=True)
            (args.outdir / f"scan_{variant}.csv").write_text(records_to_csv(recs))


if __name__ == "__main__":
    main()

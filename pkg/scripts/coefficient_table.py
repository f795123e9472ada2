#!/usr/bin/env python3
"""Main-term coefficients for every (variant, weight order), plus the route audit."""
import argparse

import mpmath

from zmn_subgroups.constants import build_bank
from zmn_subgroups.residue import (
    closed_form_B_weighted_s,
    g_route_B,
    main_term_coefficients,
    relative_difference,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--precision", type=int, default=50)
    args = ap.parse_args()
    bank = build_bank(args.precision)

    for variant in "sc":
        for w in (1, 2):
            poly = main_term_coefficients(variant, w, bank)
            print(f"variant {variant}, weight order {w}")
            for r in range(4, -1, -1):
                print(f"  B_{r} = {mpmath.nstr(poly.coeffs[r], 30)}")

    series = main_term_coefficients("s", 2, bank)
    print("\nroute audit, variant s, weight order 2 (relative difference to SERIES)")
    for other in (closed_form_B_weighted_s(bank), g_route_B(bank)):
        with mpmath.workdps(bank.dps):
            diffs = [relative_difference(a, b) for a, b in zip(series.coeffs, other.coeffs)]
        print(f"  {other.route:<12}" + "  ".join(f"B_{r}:{mpmath.nstr(d, 2)}" for r, d in enumerate(diffs)))


if __name__ == "__main__":
    main()

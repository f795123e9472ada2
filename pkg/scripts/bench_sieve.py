#!/usr/bin/env python3
"""Timing of the tau(k)^2 sieve and the REDUCED weighted sum."""
import argparse
import resource
import time

from zmn_subgroups.summatory import summatory, tau_square_sum


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-exp", type=int, default=8)
    args = ap.parse_args()
    tau_square_sum(10)  # compile
    for e in range(5, args.max_exp + 1):
        t = time.perf_counter()
        v = tau_square_sum(10**e)
        a = time.perf_counter() - t
        t = time.perf_counter()
        w = summatory("s", True, 10**e).value
        b = time.perf_counter() - t
        print(f"1e{e}: T = {v:>16d} ({a:6.2f}s)   D~_s = {w:.10e} ({b:6.2f}s)")
    rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    print(f"peak RSS {rss:.0f} MB")


if __name__ == "__main__":
    main()

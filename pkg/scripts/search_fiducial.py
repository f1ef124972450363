#!/usr/bin/env python3
"""Run the numerical SIC fiducial search for a range of dimensions and print
the resulting max deviations. Usage:

    python3 scripts/search_fiducial.py [--dims 5 6 7] [--seed 0] [--tol 1e-8]
"""

import argparse
import time

from whsic.dims import Dimension
from whsic.sic import search_fiducial, verify_sic


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--dims", type=int, nargs="+", default=[5, 6, 7])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--restarts", type=int, default=50)
    args = ap.parse_args()

    for N in args.dims:
        t0 = time.time()
        f = search_fiducial(Dimension(N), rng_seed=args.seed,
                            max_restarts=args.restarts, tol=args.tol)
        dt = time.time() - t0
        if f is None:
            print(f"N={N:3d}  no fiducial within {args.restarts} restarts "
                  f"({dt:.1f}s)")
            continue
        cert = verify_sic(f, args.tol)
        print(f"N={N:3d}  max deviation {cert.max_abs_deviation:.3e}  "
              f"restart {f.provenance['restart']}  ({dt:.1f}s)")


if __name__ == "__main__":
    main()

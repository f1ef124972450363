#!/usr/bin/env python3
"""Emit the probability-simplex images of a full SIC orbit (all N^2 states)
for plotting. The monomial-basis projection collapses to exactly N distinct
points forming a regular simplex. Usage:

    python3 scripts/projection_data.py --dim 4 > points.csv
"""

import argparse

import numpy as np

from whsic.sic import basis_generators, fiducial_n4, fiducial_n9
from whsic.weyl import all_displacements


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--dim", type=int, choices=[4, 9], default=4)
    args = ap.parse_args()

    f = fiducial_n4(0, 0, 0, 0) if args.dim == 4 else fiducial_n9(1, 1, 1, 0, 0)
    dim = f.dim
    X, Z = basis_generators(dim, f.basis)
    D = all_displacements(dim, X, Z)
    seen = []
    for k in range(dim.N * dim.N):
        p = np.abs(D[k] @ f.amplitudes) ** 2
        if not any(np.max(np.abs(p - q)) < 1e-8 for q in seen):
            seen.append(p)
        print(",".join(f"{x:.12f}" for x in p))
    print(f"# {len(seen)} distinct points among {dim.N * dim.N} states")


if __name__ == "__main__":
    main()

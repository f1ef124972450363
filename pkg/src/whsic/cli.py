"""Command-line interface: construct, verify, and search, with JSON reports.

Exit codes: 0 when the requested check passes, 1 when it runs but fails,
2 on usage or parse errors. Reports are deterministic for fixed arguments
and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import fileio
from .clifford import (conjugation_check_batched, eigenspace_dims,
                       random_symplectic, zauner_unitary)
from .crt import verify_product_iso
from .dims import Dimension
from .errors import WhsicError
from .monomial import (is_phase_permutation, monomial_clifford,
                       monomial_weyl_generators)
from .mub import is_unbiased, prime_family
from .sic import (Fiducial, basis_generators, fiducial_n4, fiducial_n9,
                  fiducial_n16, search_fiducial, verify_sic)
from .weyl import all_displacements, standard_generators

SEARCH_DIM_CAP = 20


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _builtin_fiducial(args) -> Fiducial:
    if args.builtin == "n4":
        return fiducial_n4(args.slot, args.s, args.t, args.u)
    if args.builtin == "n9":
        return fiducial_n9(args.s0, args.s1, args.s2, args.m3, args.m4)
    if args.builtin == "n16":
        return fiducial_n16(args.t2_branch)
    raise ValueError(f"unknown builtin {args.builtin!r}")


def cmd_verify(args) -> int:
    metrics: dict = {}
    inputs = {k: v for k, v in vars(args).items()
              if k not in ("func", "out") and v is not None}
    if args.target == "sic":
        if args.file is not None:
            f = fileio.load_fiducial(args.file)
        else:
            f = _builtin_fiducial(args)
        cert = verify_sic(f, args.tol)
        metrics["max_abs_deviation"] = cert.max_abs_deviation
        metrics["N"] = f.dim.N
        passed = cert.passed
    elif args.target == "mub":
        bases = prime_family(args.p)
        worst = 0.0
        for i in range(len(bases)):
            for j in range(i + 1, len(bases)):
                worst = max(worst, is_unbiased(bases[i], bases[j], args.tol)
                            .max_abs_deviation)
        metrics["num_bases"] = len(bases)
        metrics["max_abs_deviation"] = worst
        passed = worst <= args.tol
    elif args.target == "monomial":
        dim = Dimension(args.dim)
        rng = np.random.default_rng(args.seed)
        X, Z = monomial_weyl_generators(dim)
        D = all_displacements(dim, X, Z)
        worst = 0.0
        ok = True
        for _ in range(args.samples):
            G = random_symplectic(dim, rng)
            U = monomial_clifford(G, dim)
            ok &= is_phase_permutation(U, 1e-10)
            worst = max(worst, conjugation_check_batched(G, dim, U, D))
        metrics["max_conjugation_residual"] = worst
        metrics["all_phase_permutation"] = bool(ok)
        passed = ok and worst <= max(args.tol, 1e-9)
    elif args.target == "crt":
        worst = verify_product_iso(args.dim, args.tol, rng_seed=args.seed)
        metrics["max_abs_deviation"] = worst
        passed = worst <= max(args.tol, 1e-9)
    elif args.target == "zauner":
        dim = Dimension(args.dim)
        U = zauner_unitary(dim)
        cube_dev = float(np.max(np.abs(U @ U @ U - np.eye(dim.N))))
        measured, predicted = eigenspace_dims(dim)
        metrics["cube_deviation"] = cube_dev
        metrics["measured_dims"] = [measured.d0, measured.d1, measured.d2]
        metrics["predicted_dims"] = [predicted.d0, predicted.d1, predicted.d2]
        passed = cube_dev <= max(args.tol, 1e-10) and measured == predicted
    else:
        raise ValueError(f"unknown verify target {args.target!r}")
    _emit({"command": f"verify {args.target}", "inputs": inputs,
           "pass": bool(passed), "metrics": metrics}, args.out)
    return 0 if passed else 1


def cmd_generate(args) -> int:
    inputs = {k: v for k, v in vars(args).items()
              if k not in ("func", "out") and v is not None}
    if args.target == "sic":
        if args.dim == 4:
            f = fiducial_n4(args.slot, args.s, args.t, args.u)
        elif args.dim == 9:
            f = fiducial_n9(args.s0, args.s1, args.s2, args.m3, args.m4)
        elif args.dim == 16:
            f = fiducial_n16(args.t2_branch)
        else:
            raise ValueError(f"no closed form for N={args.dim}; use search")
        cert = verify_sic(f, args.tol if args.dim != 16 else max(args.tol, 1e-8))
        report = {"command": "generate sic", "inputs": inputs,
                  "pass": bool(cert.passed),
                  "metrics": {"max_abs_deviation": cert.max_abs_deviation},
                  "artifacts": {"fiducial": fileio.fiducial_to_dict(f)}}
        _emit(report, args.out)
        return 0 if cert.passed else 1
    if args.target == "mub":
        bases = prime_family(args.p)
        payload = []
        for b in bases:
            payload.append({
                "label": b.label,
                "N": b.dim.N,
                "vectors": [[[float(z.real), float(z.imag)] for z in b.vectors[:, u]]
                            for u in range(b.dim.N)],
            })
        _emit({"command": "generate mub", "inputs": inputs, "pass": True,
               "metrics": {"num_bases": len(bases)},
               "artifacts": {"bases": payload}}, args.out)
        return 0
    if args.target == "projection":
        if args.dim == 4:
            f = fiducial_n4(0, 0, 0, 0)
        elif args.dim == 9:
            f = fiducial_n9(1, 1, 1, 0, 0)
        else:
            raise ValueError("projection data is available for N = 4 and 9")
        dim = f.dim
        X, Z = basis_generators(dim, f.basis)
        D = all_displacements(dim, X, Z)
        points = []
        for k in range(dim.N * dim.N):
            v = D[k] @ f.amplitudes
            points.append([float(p) for p in np.abs(v) ** 2])
        distinct = _distinct_points(points)
        _emit({"command": "generate projection", "inputs": inputs,
               "pass": bool(distinct == dim.N),
               "metrics": {"num_points": len(points),
                           "num_distinct": distinct,
                           "sum_p_squared": float(np.sum(np.array(points[0]) ** 2))},
               "artifacts": {"probability_vectors": points}}, args.out)
        return 0 if distinct == dim.N else 1
    if args.target == "operators":
        dim = Dimension(args.dim)
        X, Z = standard_generators(dim)
        art = {"standard": _mat_pair(X, Z)}
        if dim.is_square:
            Xm, Zm = monomial_weyl_generators(dim)
            art["monomial"] = _mat_pair(Xm, Zm)
        _emit({"command": "generate operators", "inputs": inputs, "pass": True,
               "metrics": {"N": dim.N}, "artifacts": art}, args.out)
        return 0
    raise ValueError(f"unknown generate target {args.target!r}")


def _mat_pair(X: np.ndarray, Z: np.ndarray) -> dict:
    enc = lambda M: [[[float(z.real), float(z.imag)] for z in row] for row in M]
    return {"X": enc(X), "Z": enc(Z)}


def _distinct_points(points: list, tol: float = 1e-8) -> int:
    reps: list[np.ndarray] = []
    for p in points:
        v = np.array(p)
        if not any(np.max(np.abs(v - r)) < tol for r in reps):
            reps.append(v)
    return len(reps)


def cmd_search(args) -> int:
    inputs = {k: v for k, v in vars(args).items()
              if k not in ("func", "out") and v is not None}
    if not (2 <= args.dim <= SEARCH_DIM_CAP):
        sys.stderr.write(f"search dimension must be in 2..{SEARCH_DIM_CAP}\n")
        return 2
    tol = args.tol if args.tol is not None else 1e-8
    f = search_fiducial(Dimension(args.dim), rng_seed=args.seed,
                        max_restarts=args.restarts, tol=tol)
    if f is None:
        _emit({"command": "search", "inputs": inputs, "pass": False,
               "metrics": {"found": False}}, args.out)
        return 1
    cert = verify_sic(f, tol)
    report = {"command": "search", "inputs": inputs, "pass": bool(cert.passed),
              "metrics": {"found": True,
                          "max_abs_deviation": cert.max_abs_deviation,
                          "restart": f.provenance["restart"],
                          "residual": f.provenance["residual"]},
              "artifacts": {"fiducial": fileio.fiducial_to_dict(f)}}
    if args.fiducial_out:
        fileio.save_fiducial(f, args.fiducial_out)
    _emit(report, args.out)
    return 0 if cert.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="whsic",
                                 description="Weyl-Heisenberg SIC toolkit")
    ap.add_argument("--tol", type=float, default=None,
                    help="tolerance (default 1e-10)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="report destination (default stdout)")
    # the same global flags are accepted after the subcommand; SUPPRESS keeps
    # the subparser from clobbering a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("target", choices=["sic", "mub", "monomial", "crt", "zauner"])
    v.add_argument("--builtin", choices=["n4", "n9", "n16"])
    v.add_argument("--file")
    v.add_argument("--dim", type=int, default=4)
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--p", type=int, default=2)
    _add_construction_flags(v)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("generate", parents=[common])
    g.add_argument("target", choices=["sic", "mub", "projection", "operators"])
    g.add_argument("--dim", type=int, default=4)
    g.add_argument("--p", type=int, default=2)
    _add_construction_flags(g)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("search", parents=[common])
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--restarts", type=int, default=50)
    s.add_argument("--fiducial-out", default=None,
                   help="also write the found fiducial to this file")
    s.set_defaults(func=cmd_search)
    return ap


def _add_construction_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--slot", type=int, default=0)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--u", type=int, default=0)
    p.add_argument("--s0", type=int, default=1)
    p.add_argument("--s1", type=int, default=1)
    p.add_argument("--s2", type=int, default=1)
    p.add_argument("--m3", type=int, default=0)
    p.add_argument("--m4", type=int, default=0)
    p.add_argument("--t2-branch", type=int, default=1, dest="t2_branch")


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.tol is None:
        args.tol = 1e-10
    if args.command != "search" and not _validate_ranges(args):
        return 2
    try:
        return args.func(args)
    except (WhsicError, ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def _validate_ranges(args) -> bool:
    checks = [("slot", 0, 3), ("s", 0, 3), ("t", 0, 3), ("u", 0, 3),
              ("m3", 0, 2), ("m4", 0, 2)]
    for name, lo, hi in checks:
        val = getattr(args, name, None)
        if val is not None and not (lo <= val <= hi):
            sys.stderr.write(f"--{name} must be in {lo}..{hi}\n")
            return False
    for name in ("s0", "s1", "s2", "t2_branch"):
        val = getattr(args, name, None)
        if val is not None and val not in (1, -1):
            sys.stderr.write(f"--{name.replace('_', '-')} must be +1 or -1\n")
            return False
    return True


if __name__ == "__main__":
    sys.exit(main())

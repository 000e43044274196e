"""Command-line entry point.

Exit codes: 0 success, 1 a checked property failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .complex import card, facets, format_face, ghost_vertices, vertices_of
from .fuzz import SUITES, RunConfig, VerificationReport, verify_theorems
from .hochster import SubcomplexHomology, default_jobs, double_homology, hochster_table
from .io import InputError, load_complex, render_subcomplex_homology, render_table
from .linalg import ConsistencyError
from .wedge import build_L, check_ses_all, find_wedge_decomposition, mayer_vietoris_failures


def _faces_text(fs) -> str:
    return " ".join(format_face(f) for f in fs)


def cmd_homology(args) -> int:
    K = load_complex(args.file)
    cache = SubcomplexHomology(K, jobs=args.jobs)
    entries = []
    for J in sorted(range(1 << K.m), key=lambda J: (card(J), J)):
        for n, g in cache[J].as_dict().items():
            entries.append((J, n, g))
    sys.stdout.write(render_subcomplex_homology(entries, args.format))
    return 0


def cmd_hochster(args) -> int:
    K = load_complex(args.file)
    sys.stdout.write(render_table(hochster_table(K, SubcomplexHomology(K, jobs=args.jobs)), args.format))
    return 0


def cmd_hh(args) -> int:
    K = load_complex(args.file)
    try:
        table = double_homology(K, jobs=args.jobs)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render_table(table, args.format))
    return 0


def cmd_wedge(args) -> int:
    K = load_complex(args.file)
    dec = find_wedge_decomposition(K)
    if dec is None:
        report = {"wedge_decomposable": False}
    else:
        report = {
            "wedge_decomposable": True,
            "sigma": list(vertices_of(dec.sigma)),
            "K1": [list(vertices_of(f)) for f in facets(dec.K1)],
            "K2": [list(vertices_of(f)) for f in facets(dec.K2)],
            "properness": dec.properness(),
        }
        if not ghost_vertices(K):
            report["L"] = [list(vertices_of(f)) for f in facets(build_L(dec))]
    if args.format == "json":
        print(json.dumps(report, indent=2))
    elif dec is None:
        print("not wedge-decomposable")
    else:
        print(f"sigma\t{format_face(dec.sigma)}")
        print(f"K1\t{_faces_text(facets(dec.K1))}")
        print(f"K2\t{_faces_text(facets(dec.K2))}")
        if "L" in report:
            print(f"L\t{_faces_text(facets(build_L(dec)))}")
        else:
            print(f"L\tundefined (ghost vertices {list(ghost_vertices(K))})")
    return 0


def cmd_ses_check(args) -> int:
    K = load_complex(args.file)
    if ghost_vertices(K):
        raise InputError(f"{args.file}: complex has ghost vertices {list(ghost_vertices(K))}")
    dec = find_wedge_decomposition(K)
    if dec is None:
        raise InputError(f"{args.file}: complex is not wedge-decomposable")
    bad = check_ses_all(dec)
    total = ((1 << K.m) - 1) * (K.m + 1)
    for J, n in bad:
        print(f"FAIL\tJ={format_face(J)}\tn={n}")
    print(f"{total - len(bad)}/{total} sequences exact")
    return 1 if bad else 0


def cmd_mv_check(args) -> int:
    K1 = load_complex(args.file1)
    K2 = load_complex(args.file2)
    if K1.m != K2.m:
        raise InputError(f"vertex counts differ: {K1.m} vs {K2.m}")
    bad = mayer_vietoris_failures(K1, K2)
    for msg in bad:
        print(f"FAIL\t{msg}")
    print("exact" if not bad else f"{len(bad)} failures")
    return 1 if bad else 0


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "counts": {k: {"passed": p, "total": t} for k, (p, t) in report.counts().items()},
            "failures": [vars(t) for t in report.failures],
        }, indent=2) + "\n"
    lines = []
    for t in report.failures:
        lines.append(f"FAIL\t{t.suite}\tseed={t.seed}\ttrial={t.index}\t{t.property}\t"
                     f"witness={t.witness}\t{t.facets}")
    for suite, (p, n) in report.counts().items():
        lines.append(f"{suite}\t{p}/{n} passed")
    return "\n".join(lines) + "\n"


def cmd_fuzz(args) -> int:
    try:
        config = RunConfig(suite=args.suite, trials=args.trials, seed=args.seed, m=args.m,
                           density=args.density, jobs=args.jobs, output_format=args.format)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = verify_theorems(config)
    sys.stdout.write(render_report(report, args.format))
    print(f"wall time {report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihochster",
        description="Bigraded (double) homology of moment-angle complexes over Z.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json", "md"), default="tsv")
    common.add_argument("--jobs", type=int, default=default_jobs(),
                        help="worker processes (default: $BIHOCHSTER_JOBS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in (
            ("homology", cmd_homology, "reduced homology of every full subcomplex"),
            ("hochster", cmd_hochster, "bigraded homology H_{-k,2l}(Z_K)"),
            ("hh", cmd_hh, "bigraded double homology HH_{-k,2l}(Z_K)"),
            ("wedge", cmd_wedge, "detect a face-sum decomposition and report L"),
            ("ses-check", cmd_ses_check, "check the face-sum short exact sequences")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("mv-check", parents=[common], help="check Mayer-Vietoris exactness")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_mv_check)

    p = sub.add_parser("fuzz", parents=[common], help="run randomized theorem checks")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=None, help="fixed vertex count (default: random per suite)")
    p.add_argument("--density", type=float, default=None)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    warnings.simplefilter("default")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

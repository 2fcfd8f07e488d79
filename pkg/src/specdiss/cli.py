"""Command-line interface.

Exit codes: 0 success / claim holds, 1 claim failed (counterexample written),
2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import graph6
from .dissociation import dissociation_number
from .enumeration import KINDS, CorpusError, cache_dir, generate
from .families import FamilySpec, InfeasibleSpec, build
from .graph import GraphError
from .quotient import PartitionError, parse_blocks, quotient_matrix, quotient_spectral_radius
from .spectral import alpha_matrix, spectral_radius
from .verify import CLAIMS, ClaimError, parse_alphas, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _graphs_from(arg: str):
    """One graph from a graph6 string, or every line of stdin for '-'."""
    if arg == "-":
        graphs = list(graph6.read_lines(sys.stdin))
        if not graphs:
            raise UsageError("no graph6 input on stdin")
        return graphs
    return [graph6.decode(arg)]


def _writer(args):
    return csv.writer(sys.stdout, lineterminator="\n") if args.csv else None


def cmd_tau(args) -> int:
    out = _writer(args)
    if out:
        out.writerow(["g6", "n", "tau", "witness"])
    for g in _graphs_from(args.graph):
        res = dissociation_number(g)
        verts = res.vertices()
        if out:
            out.writerow([graph6.encode(g), g.n, res.tau, " ".join(map(str, verts))])
        else:
            print(res.tau)
            print("witness:", " ".join(map(str, verts)))
    return EXIT_OK


def cmd_index(args) -> int:
    out = _writer(args)
    if out:
        out.writerow(["g6", "alpha", "lambda", "perron"])
    for g in _graphs_from(args.graph):
        res = spectral_radius(alpha_matrix(g, args.alpha))
        vec = " ".join(_fmt(v) for v in res.perron)
        if out:
            out.writerow([graph6.encode(g), args.alpha, _fmt(res.lam), vec])
        else:
            print(_fmt(res.lam))
            print("perron:", vec)
    return EXIT_OK


def cmd_family(args) -> int:
    src = args.spec
    if src == "-":
        text = sys.stdin.read()
    elif src.lstrip().startswith("{"):
        text = src
    else:
        try:
            text = Path(src).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {src}: {exc}") from None
    try:
        fs = FamilySpec.from_json(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad family spec JSON: {exc}") from None
    print(graph6.encode(build(fs)))
    return EXIT_OK


def cmd_quotient(args) -> int:
    g = graph6.decode(args.graph)
    qm = quotient_matrix(g, args.alpha, parse_blocks(args.blocks))
    rho = quotient_spectral_radius(qm)
    out = _writer(args)
    if out:
        out.writerow([f"block_{j}" for j in range(qm.t)])
        for row in qm.entries:
            out.writerow([_fmt(v) for v in row])
        out.writerow(["spectral_radius", _fmt(rho)])
    else:
        width = max(len(_fmt(v)) for v in qm.entries.ravel())
        for row in qm.entries:
            print("  ".join(_fmt(v).rjust(width) for v in row))
        print("spectral radius:", _fmt(rho))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    corpus = generate(args.kind, args.n)
    alphas = parse_alphas(args.alpha_grid)
    if args.csv:
        out = _writer(args)
        lams = [corpus.lambdas(a) for a in alphas]
        taus = corpus.tau_of()
        out.writerow(["g6", "n", "m", "tau"] + [f"lambda_at_{a:g}" for a in alphas])
        for i, g in enumerate(corpus.members):
            out.writerow([graph6.encode(g), g.n, g.m, taus[i]] + [_fmt(l[i]) for l in lams])
    else:
        print(f"{corpus.kind} n={corpus.n}: {len(corpus)} graphs (cache: {cache_dir()})")
        for tau, idx in corpus.by_tau.items():
            print(f"  tau={tau}: {len(idx)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    claim = args.claim.upper()
    if claim == "APPENDIX_GRID":
        params = {}
        if args.a_max is not None:
            params["a_max"] = args.a_max
        if args.bc_max is not None:
            params["bc_max"] = args.bc_max
        rep = verify(claim, params)
    else:
        params = {"n": args.n, "alpha_grid": args.alpha_grid}
        if args.tau is not None:
            params["tau"] = args.tau
        if args.samples is not None:
            params["samples"] = args.samples
        if args.seed is not None:
            params["seed"] = args.seed
        rep = verify(claim, {k: v for k, v in params.items() if v is not None})
    path = Path(args.out) if args.out else Path(f"{claim.lower()}.report.json")
    path.write_text(rep.to_json() + "\n")
    print(rep.summary_line(), f"-> {path}")
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specdiss",
                                description="A_alpha spectra, dissociation numbers and extremal checks.")
    p.add_argument("--csv", action="store_true", help="tabular output as CSV")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tau", help="dissociation number and a maximum dissociation set")
    s.add_argument("graph", help="graph6 string, or - to read lines from stdin")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("index", help="A_alpha spectral radius and Perron vector")
    s.add_argument("graph", help="graph6 string, or - to read lines from stdin")
    s.add_argument("--alpha", type=float, default=0.0)
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("family", help="named extremal graphs")
    fsub = s.add_subparsers(dest="action", required=True)
    b = fsub.add_parser("build", help="print the graph6 of a family spec")
    b.add_argument("spec", help='JSON file, inline JSON or -, e.g. {"family": "S_DAGGER", '
                                '"params": {"n": 8, "tau": 6}}')
    b.set_defaults(func=cmd_family)

    s = sub.add_parser("quotient", help="quotient matrix of an equitable partition")
    s.add_argument("graph", help="graph6 string")
    s.add_argument("--alpha", type=float, default=0.0)
    s.add_argument("--blocks", required=True, help='partition such as "0|1,2,3"')
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("enumerate", help="build (or load) a cached corpus")
    s.add_argument("kind", type=str.upper, choices=KINDS)
    s.add_argument("n", type=int)
    s.add_argument("--alpha-grid", default=None, help="alphas for the CSV lambda columns")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="check one claim and write a JSON report")
    s.add_argument("claim", type=str.upper, choices=CLAIMS)
    s.add_argument("--n", default=None, help='order(s): "8", "3-7" or "5,7"')
    s.add_argument("--alpha-grid", default=None, help='comma-separated alphas, e.g. "0,0.5,0.9"')
    s.add_argument("--tau", default=None, help="restrict to these dissociation numbers")
    s.add_argument("--samples", type=int, default=None, help="random suites: valid applications")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--a-max", type=int, default=None, help="APPENDIX_GRID: largest a")
    s.add_argument("--bc-max", type=int, default=None, help="APPENDIX_GRID: largest b and c")
    s.add_argument("--out", default=None, help="report path (default <claim>.report.json)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphError, graph6.Graph6Error, InfeasibleSpec, PartitionError,
            CorpusError, ClaimError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: analyze, solve and generate on edge-list graphs.

Output is deterministic JSON (sorted keys, no floats) except for
``generate``, which emits edge-list text.  Exit codes: 0 success, 1 domain
error (class mismatch, exhausted budget), 2 usage or parse error.  The
``MESP_BUDGET`` environment variable overrides both oracle enumeration caps
and the auto-mode window budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import generators
from .edgelist import format_edge_list, parse_edge_list
from .errors import BudgetExceededError, ClassMismatchError, GraphInputError
from .graph import all_pairs, metric_report
from .oracle import EnumerationBudget
from .solver import DEFAULT_WINDOW_BUDGET, solve
from .structure import (
    gamma_from_layering,
    hyperbolicity_x2,
    is_chordal,
    select_gamma,
)
from .distance_hereditary import is_distance_hereditary

_FAMILIES = {
    "path": lambda n, seed, density: generators.gen_path(n),
    "cycle": lambda n, seed, density: generators.gen_cycle(n),
    "tree": lambda n, seed, density: generators.gen_random_tree(n, seed),
    "chordal": lambda n, seed, density: generators.gen_random_chordal(
        n, density if density is not None else 0.5, seed
    ),
    "dh": lambda n, seed, density: generators.gen_random_dh(n, seed=seed),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mesp",
        description="Minimum-eccentricity shortest paths in unweighted graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", help="edge-list file (default: stdin)")

    p_analyze = sub.add_parser("analyze", help="report structural metrics")
    add_input(p_analyze)

    p_solve = sub.add_parser("solve", help="find a minimum-eccentricity shortest path")
    add_input(p_solve)
    p_solve.add_argument(
        "--algorithm",
        choices=["auto", "dh", "dp", "approx", "oracle"],
        default="auto",
    )
    p_solve.add_argument(
        "--gamma",
        default="auto",
        help="window width for dp: a nonnegative integer or 'auto'",
    )
    p_solve.add_argument(
        "--source", help="restrict to paths starting at this vertex label"
    )
    p_solve.add_argument("--threads", type=int, default=1)

    p_gen = sub.add_parser("generate", help="emit a generated graph as edge-list text")
    p_gen.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--density", type=float, default=None)
    return parser


def _read_graph(args):
    if args.input:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    return parse_edge_list(text)


def _budget_overrides():
    raw = os.environ.get("MESP_BUDGET")
    if raw is None:
        return None, DEFAULT_WINDOW_BUDGET
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise GraphInputError(f"MESP_BUDGET must be a positive integer, got {raw!r}")
    return EnumerationBudget(max_paths=value, max_total=value), value


def _emit(payload: dict):
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    sys.stdout.write("\n")


def _run_analyze(args) -> int:
    g, _labels = _read_graph(args)
    d = all_pairs(g)
    chordal = is_chordal(g).holds
    payload = {
        "command": "analyze",
        "n": g.n,
        "m": g.m,
        "diameter": metric_report(g, d).diameter,
        "chordal": chordal,
        "distance_hereditary": is_distance_hereditary(g, d).holds,
        "hyperbolicity_x2": hyperbolicity_x2(g, d),
        "gamma_layering": gamma_from_layering(g, d).value,
    }
    selected = select_gamma(g, d, "auto")
    payload["gamma_selected"] = selected.value
    payload["gamma_method"] = selected.method
    _emit(payload)
    return 0


def _certificate_json(cert, labels):
    out = {}
    if cert.source is not None:
        out["source"] = labels[cert.source]
    if cert.gamma is not None:
        out["gamma"] = cert.gamma.value
        out["gamma_method"] = cert.gamma.method
    if cert.diametral_pair is not None:
        out["diametral_pair"] = [labels[v] for v in cert.diametral_pair]
    if cert.mutually_furthest is not None:
        out["mutually_furthest"] = [labels[v] for v in cert.mutually_furthest]
    if cert.guarantee is not None:
        out["guarantee"] = cert.guarantee.kind
        if cert.guarantee.bound is not None:
            out["guarantee_bound"] = cert.guarantee.bound
    if cert.sweep is not None:
        out["sweep"] = [[labels[v], ecc] for v, ecc in cert.sweep]
    if cert.note is not None:
        out["note"] = cert.note
    return out


def _run_solve(args) -> int:
    g, labels = _read_graph(args)
    if args.gamma == "auto":
        gamma = "auto"
    else:
        try:
            gamma = int(args.gamma)
            if gamma < 0:
                raise ValueError
        except ValueError:
            raise GraphInputError(f"--gamma must be 'auto' or >= 0, got {args.gamma!r}")
    source = None
    if args.source is not None:
        if args.algorithm not in ("dp", "oracle"):
            raise GraphInputError("--source only applies to --algorithm dp or oracle")
        try:
            source = labels.index(args.source)
        except ValueError:
            raise GraphInputError(f"unknown vertex label {args.source!r}")
    budget, window_budget = _budget_overrides()
    result = solve(
        g,
        strategy=args.algorithm,
        gamma=gamma,
        source=source,
        budget=budget,
        window_budget=window_budget,
        threads=args.threads,
    )
    payload = {
        "command": "solve",
        "n": g.n,
        "m": g.m,
        "algorithm": result.algorithm,
        "eccentricity": result.eccentricity,
        "path": [labels[v] for v in result.path.vertices],
        "certificate": _certificate_json(result.certificate, labels),
    }
    _emit(payload)
    return 0


def _run_generate(args) -> int:
    if args.density is not None and args.family != "chordal":
        raise GraphInputError("--density only applies to --family chordal")
    try:
        g = _FAMILIES[args.family](args.n, args.seed, args.density)
    except ValueError as exc:
        raise GraphInputError(str(exc))
    sys.stdout.write(format_edge_list(g))
    return 0


def run(args) -> int:
    if args.command == "analyze":
        return _run_analyze(args)
    if args.command == "solve":
        return _run_solve(args)
    return _run_generate(args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ClassMismatchError, BudgetExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

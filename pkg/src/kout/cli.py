"""Command-line interface: sampling, analysis, thresholds, sweeps, bounds,
and exact-enumeration runs.

Single results go to stdout as JSON; sweeps write the CSV contract to a
file.  Exit codes: 0 success, 2 invalid parameters or unreadable input,
1 runtime failure.  Diagnostics are a single line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import components
from .deletion import DeletionSpec, delete_uniform
from .errors import InvalidParameterError
from .graphs import load_graph, sample_er, sample_kout, write_graph
from .montecarlo import ExperimentConfig, run_sweep
from .oracle import exact_probability
from .thresholds import ThresholdQuery, resolve_threshold, union_bound_pz


class _Parser(argparse.ArgumentParser):
    """argparse with single-line diagnostics on stderr."""

    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="kout",
        description="Random K-out graphs under node deletion: sampling, analysis, "
        "thresholds, Monte Carlo sweeps, bounds, and exact enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sample", help="sample a graph and write its JSON file")
    p.add_argument("--model", required=True, choices=["kout", "er"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", type=int, help="out-degree (kout)")
    p.add_argument("--p", type=float, help="edge probability (er)")
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--out", required=True)

    p = sub.add_parser("analyze", help="component summary of a graph file, optionally after deletion")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--delete", type=int, help="delete this many uniform nodes")
    p.add_argument("--delete-frac", type=float, help="delete round(alpha*n) uniform nodes")
    p.add_argument("--del-seed", type=int, help="seed for the deletion draw")

    p = sub.add_parser("threshold", help="threshold value and recommended K for a design goal")
    p.add_argument("--goal", required=True, choices=["connectivity", "giant"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--gamma", type=int)
    p.add_argument("--alpha", type=float)
    p.add_argument("--lambda", dest="lam", type=int, help="allowed nodes outside the giant")
    p.add_argument("--slack", type=int, default=0)

    p = sub.add_parser("sweep", help="run the Monte Carlo sweep described by a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("bound", help="union bound on disconnection probability")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--gamma", required=True, type=int)
    p.add_argument("--terms", action="store_true", help="include per-r summands")

    p = sub.add_parser("oracle", help="exact probability by exhaustive enumeration (tiny n)")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--gamma", required=True, type=int)
    p.add_argument("--lambda", dest="lam", type=int, help="check outside-giant < lambda instead of connectivity")

    return parser


def _cmd_sample(args) -> int:
    if args.model == "kout":
        if args.k is None or args.p is not None:
            raise InvalidParameterError("kout model needs --k (and no --p)")
        graph = sample_kout(args.n, args.k, args.seed)
    else:
        if args.p is None or args.k is not None:
            raise InvalidParameterError("er model needs --p (and no --k)")
        graph = sample_er(args.n, args.p, args.seed)
    write_graph(graph, args.out)
    return 0


def _cmd_analyze(args) -> int:
    graph = load_graph(args.infile)
    if args.delete is not None and args.delete_frac is not None:
        raise InvalidParameterError("--delete and --delete-frac are mutually exclusive")
    if args.delete is not None or args.delete_frac is not None:
        if args.del_seed is None:
            raise InvalidParameterError("deletion requires --del-seed")
        if args.delete is not None:
            spec = DeletionSpec(mode="count", value=args.delete, seed=args.del_seed)
        else:
            spec = DeletionSpec(mode="fraction", value=args.delete_frac, seed=args.del_seed)
        target = delete_uniform(graph, spec)
    else:
        target = graph
    print(json.dumps(components(target).to_dict()))
    return 0


def _cmd_threshold(args) -> int:
    query = ThresholdQuery(
        goal=args.goal, n=args.n, gamma=args.gamma, alpha=args.alpha, lam=args.lam, slack=args.slack
    )
    decision = resolve_threshold(query)
    print(
        json.dumps(
            {"threshold": decision.threshold, "min_k": decision.k, "regime": decision.regime}
        )
    )
    return 0


def _cmd_sweep(args) -> int:
    config = ExperimentConfig.load(args.config)
    result = run_sweep(config, workers=args.workers)
    result.write_csv(args.out)
    for row in result.rows:
        print(
            f"cell model={row.model} k={row.k} gamma={row.gamma}: "
            f"prob_connected={row.prob_connected} max_outside_giant={row.max_outside_giant}",
            file=sys.stderr,
        )
    return 0


def _cmd_bound(args) -> int:
    report = union_bound_pz(args.n, args.k, args.gamma, include_terms=args.terms)
    print(json.dumps(report.to_dict()))
    return 0


def _cmd_oracle(args) -> int:
    if args.lam is None:
        value = exact_probability(args.n, args.k, args.gamma, "connected")
    else:
        value = exact_probability(args.n, args.k, args.gamma, "outside_giant_lt", lam=args.lam)
    print(f"{value} = {float(value)}")
    return 0


_COMMANDS = {
    "sample": _cmd_sample,
    "analyze": _cmd_analyze,
    "threshold": _cmd_threshold,
    "sweep": _cmd_sweep,
    "bound": _cmd_bound,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SystemExit:
        raise
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        # invalid parameters, malformed or unreadable inputs
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime failure
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

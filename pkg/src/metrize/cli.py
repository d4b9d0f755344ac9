"""Command-line interface.

Exit codes: 0 affirmative verdict or success, 1 negative verdict, 2 usage or
input error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .completion import CompletionSpec, CompletionSpecError, complete_disconnected
from .graph import (
    DEFAULT_EPS,
    GraphError,
    graph_from_json,
    graph_to_json,
    matrix_from_tsv,
    matrix_to_json,
    matrix_to_tsv,
    parse_edge_list,
    to_edge_list,
)
from .metrization import (
    NotMetrizableError,
    bridges,
    check_metrizable,
    is_forest,
    metric_exists,
    validate_membership,
)
from .multipartite import (
    NotMultipartiteError,
    PreconditionError,
    TheoremViolation,
    analyze_quadrilateral,
    detect_partition,
    greatest_vs_least_interval,
    is_star,
    least_pseudometric,
    sandwich_sample,
    sandwich_validate,
)
from .oracle import (
    GRAPH_CLASSES,
    InstanceGenerator,
    OracleBoundError,
    cycle_condition_holds,
    enumerate_cycles,
    exhaustive_all_pairs,
    generate,
    rho0_path_sup,
)
from .shortest_path import all_pairs_distance

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_eps() -> float:
    raw = os.environ.get("METRIZE_EPS")
    if raw is None:
        return DEFAULT_EPS
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"METRIZE_EPS={raw!r} is not a number") from None


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args):
    if args.input and args.stdin:
        raise UsageError("give either --input or --stdin, not both")
    text = _read_text(args.input) if args.input else sys.stdin.read()
    if args.format == "json":
        return graph_from_json(text)
    return parse_edge_list(text)


def _emit(obj):
    sys.stdout.write(json.dumps(obj) + "\n")


def _emit_matrix(m, args):
    if args.tsv:
        sys.stdout.write(matrix_to_tsv(m))
    else:
        _emit(matrix_to_json(m))


def _verdict(flag: bool) -> int:
    return OK if flag else NEGATIVE


# -- subcommands ---------------------------------------------------------------------


def cmd_check(args):
    report = check_metrizable(_load_graph(args), args.eps)
    _emit(report.to_dict())
    return _verdict(report.metrizable)


def cmd_matrix(args):
    _emit_matrix(all_pairs_distance(_load_graph(args), dense=args.dense), args)
    return OK


def cmd_least(args):
    g = _load_graph(args)
    try:
        m = least_pseudometric(g, args.eps)
    except NotMultipartiteError as exc:
        reason = str(exc)
        if check_metrizable(g, args.eps).metrizable:
            reason = "least element does not exist for some metrizable weight on this graph: " + reason
        _emit({"least": None, "reason": reason})
        return NEGATIVE
    except NotMetrizableError as exc:
        _emit({"least": None, "reason": str(exc)})
        return NEGATIVE
    _emit_matrix(m, args)
    return OK


def cmd_interval(args):
    g = _load_graph(args)
    try:
        lo, hi = greatest_vs_least_interval(g, args.u, args.v, args.eps)
    except (NotMultipartiteError, NotMetrizableError) as exc:
        _emit({"interval": None, "reason": str(exc)})
        return NEGATIVE
    _emit({"u": args.u, "v": args.v, "interval": [lo, hi]})
    return OK


def cmd_partition(args):
    p = detect_partition(_load_graph(args))
    _emit(None if p is None else p.to_dict())
    return _verdict(p is not None)


def cmd_bridges(args):
    _emit({"bridges": [list(e) for e in sorted(bridges(_load_graph(args)))]})
    return OK


def cmd_forest(args):
    flag = is_forest(_load_graph(args))
    _emit({"forest": flag})
    return _verdict(flag)


def cmd_star(args):
    flag = is_star(_load_graph(args))
    _emit({"star": flag})
    return _verdict(flag)


def cmd_metric_exists(args):
    flag, why = metric_exists(_load_graph(args), args.eps)
    _emit({"metric_exists": flag, "explanation": why})
    return _verdict(flag)


def _membership_result(violation):
    _emit({"ok": violation is None, "violation": None if violation is None else violation.to_dict()})
    return _verdict(violation is None)


def cmd_validate(args):
    g = _load_graph(args)
    m = matrix_from_tsv(_read_text(args.matrix))
    try:
        return _membership_result(validate_membership(g, m, args.eps))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_sandwich_sample(args):
    g = _load_graph(args)
    try:
        m = sandwich_sample(g, args.seed, args.eps)
    except PreconditionError as exc:
        _emit({"sample": None, "precondition": str(exc)})
        return NEGATIVE
    _emit_matrix(m, args)
    return OK


def cmd_sandwich_validate(args):
    g = _load_graph(args)
    f = matrix_from_tsv(_read_text(args.matrix))
    try:
        violation = sandwich_validate(g, f, args.eps)
    except PreconditionError as exc:
        _emit({"ok": False, "precondition": str(exc), "violation": None})
        return NEGATIVE
    except TheoremViolation as exc:
        _emit({"ok": False, "theorem_violation": str(exc), "violation": None})
        return NEGATIVE
    return _membership_result(violation)


def cmd_complete(args):
    g = _load_graph(args)
    spec = CompletionSpec.from_json(_read_text(args.spec)) if args.spec else None
    try:
        m = complete_disconnected(g, spec, args.eps)
    except NotMetrizableError as exc:
        _emit({"completion": None, "reason": str(exc)})
        return NEGATIVE
    _emit_matrix(m, args)
    return OK


def cmd_quad(args):
    try:
        report = analyze_quadrilateral(args.a, args.b, args.c, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(report.to_dict())
    return _verdict(report.metrizable)


def cmd_oracle(args):
    g = _load_graph(args)
    if args.what == "cycles":
        _emit({"cycles": [list(c) for c in enumerate_cycles(g, args.max_len, force=args.force)]})
        return OK
    if args.what == "check":
        holds, cycle = cycle_condition_holds(g, args.eps, force=args.force)
        _emit({"holds": holds, "cycle": None if cycle is None else list(cycle)})
        return _verdict(holds)
    if args.what == "rho0":
        if len(args.pair) != 2:
            raise UsageError("oracle rho0 needs two vertices")
        u, v = args.pair
        try:
            value = rho0_path_sup(g, u, v, force=args.force)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        _emit({"u": u, "v": v, "rho0": value})
        return OK
    _emit_matrix(exhaustive_all_pairs(g, force=args.force), args)
    return OK


def cmd_generate(args):
    parts = tuple(int(x) for x in args.parts.split(",")) if args.parts else None
    spec = InstanceGenerator(
        seed=args.seed if args.seed is not None else 0,
        graph_class=args.graph_class,
        n_max=args.n,
        n_min=args.n,
        weight_max=args.weight_max,
        zero_fraction=args.zero_fraction,
        metrizable=args.metrizable,
        edge_prob=args.edge_prob,
        parts=parts,
    )
    g = generate(spec)
    if args.format == "json":
        _emit(graph_to_json(g))
    else:
        sys.stdout.write(to_edge_list(g))
    return OK


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="read the graph from PATH")
    common.add_argument("--stdin", action="store_true", help="read the graph from standard input (default)")
    common.add_argument("--format", choices=("edge-list", "json"), default="edge-list")
    common.add_argument("--eps", type=float, default=None, help="comparison tolerance (default $METRIZE_EPS or 1e-9)")
    common.add_argument("--tsv", action="store_true", help="print matrices as TSV instead of JSON")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--force", action="store_true", help="lift the oracle's vertex bound")

    parser = argparse.ArgumentParser(prog="metrize", description="Pseudometric extensions of weighted graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "decide whether the weight is metrizable")
    add("matrix", cmd_matrix, "shortest-path pseudometric").add_argument(
        "--dense", action="store_true", help="use triple-loop relaxation"
    )
    add("least", cmd_least, "least pseudometric (complete multipartite graphs)")
    p = add("interval", cmd_interval, "admissible range for a nonadjacent pair")
    p.add_argument("u")
    p.add_argument("v")
    add("partition", cmd_partition, "complete multipartite decomposition")
    add("bridges", cmd_bridges, "edges lying on no cycle")
    add("forest", cmd_forest, "is the graph acyclic")
    add("star", cmd_star, "is the graph a star")
    add("metric-exists", cmd_metric_exists, "does some metric extend the weight")
    add("validate", cmd_validate, "check a TSV matrix extends the weight").add_argument("matrix")
    add("sandwich-sample", cmd_sandwich_sample, "random member between least and greatest")
    add("sandwich-validate", cmd_sandwich_validate, "check a TSV matrix lies between least and greatest").add_argument(
        "matrix"
    )
    add("complete", cmd_complete, "extend across components").add_argument(
        "--spec", metavar="FILE", help="completion spec JSON"
    )
    p = add("quad", cmd_quad, "closed forms for the weighted 4-cycle")
    for name in ("a", "b", "c", "k"):
        p.add_argument(name, type=float)
    p = add("oracle", cmd_oracle, "exhaustive reference computations")
    p.add_argument("what", choices=("cycles", "check", "rho0", "matrix"))
    p.add_argument("pair", nargs="*", help="u v for rho0")
    p.add_argument("--max-len", type=int, default=None)
    p = add("generate", cmd_generate, "seeded random instance")
    p.add_argument("graph_class", choices=GRAPH_CLASSES)
    p.add_argument("--n", type=int, default=6, help="vertex count (ignored for multipartite)")
    p.add_argument("--parts", help="comma-separated part sizes for multipartite")
    p.add_argument("--metrizable", action="store_true")
    p.add_argument("--weight-max", type=float, default=10.0)
    p.add_argument("--zero-fraction", type=float, default=0.0)
    p.add_argument("--edge-prob", type=float, default=0.5)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        if args.eps is None:
            args.eps = _default_eps()
        if args.eps < 0:
            raise UsageError("--eps must be >= 0")
        return args.func(args)
    except (UsageError, GraphError, CompletionSpecError, OracleBoundError) as exc:
        print(f"metrize: error: {exc}", file=sys.stderr)
        return USAGE
    except KeyError as exc:
        print(f"metrize: error: {exc.args[0]}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        print(f"metrize: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: solve, oracle, generate, formula, experiment.  Exit codes:
0 success, 1 usage error, 2 input/parse error, 3 infeasible request
(no seed sets, oracle timeout).  All randomness is seed-pinned, so an
identical argv produces byte-identical output files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dimacs import GraphParseError, read_graph, write_graph
from .engine import EngineConfig, NoSeedSetsError, run_greedy
from .exact import exact_mis
from .experiments import (
    ExperimentConfig,
    OracleTimeout,
    emit_csv,
    emit_plot,
    log_base,
    parse_algorithms,
    run_accuracy_experiment,
    run_failure_experiment,
    run_workload_experiment,
    tau_edgeless,
    time_limit,
)
from .graph import GraphError, random_gnm
from .heuristics import Heuristic


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="greedymis", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_solve = sub.add_parser("solve", help="run one greedy family member on a graph file")
    p_solve.add_argument("--graph", required=True, help="edge-list graph file")
    p_solve.add_argument("--heuristic", choices=("a", "b"), required=True)
    p_solve.add_argument("--k", type=int, default=1, help="initial set cardinality")

    p_oracle = sub.add_parser("oracle", help="exact independence number of a graph file")
    p_oracle.add_argument("--graph", required=True)
    p_oracle.add_argument("--timeout", type=float, default=None, help="seconds")

    p_gen = sub.add_parser("generate", help="write a seeded uniform G(n,m) graph")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--m", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", help="output path (stdout if omitted)")

    p_formula = sub.add_parser(
        "formula", help="edgeless-graph evaluation count and its log-n form"
    )
    p_formula.add_argument("--n", type=int, required=True)
    p_formula.add_argument("--k", type=int, required=True)

    p_exp = sub.add_parser("experiment", help="run a seeded experiment grid")
    p_exp.add_argument(
        "kind", choices=("failure", "accuracy", "workload"), help="experiment protocol"
    )
    p_exp.add_argument("--n", type=_int_list, required=True, help="n values, comma-separated")
    p_exp.add_argument("--m", type=_int_list, default=None, help="m values, comma-separated")
    p_exp.add_argument(
        "--m-rule",
        choices=("explicit", "4n"),
        default="explicit",
        help="edge-count rule; 4n ignores --m",
    )
    p_exp.add_argument("--algos", required=True, help="e.g. a1,b1,a2,b2")
    p_exp.add_argument("--runs", type=int, default=1)
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--out", help="CSV output path")
    p_exp.add_argument("--plot", help="SVG output path (workload only)")
    p_exp.add_argument("--jobs", type=int, default=1)
    p_exp.add_argument("--timeout", type=float, default=None, help="oracle seconds per run")
    return parser


def _load_graph(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from exc
    return read_graph(data)


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    result = run_greedy(g, EngineConfig(Heuristic(args.heuristic), args.k))
    witness = ",".join(map(str, result.witness))
    print(
        f"size={result.size} witness={witness} rounds={result.stats.rounds} "
        f"heuristic_evals={result.stats.heuristic_evals} "
        f"adjacency_checks={result.stats.adjacency_checks}"
    )
    return 0


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    with time_limit(args.timeout):
        result = exact_mis(g)
    witness = ",".join(map(str, result.witness))
    print(f"alpha={result.alpha} witness={witness}")
    return 0


def _cmd_generate(args) -> int:
    g = random_gnm(args.n, args.m, args.seed)
    data = write_graph(g)
    if args.out:
        Path(args.out).write_bytes(data)
        print(f"graph n={g.n} m={g.m} seed={args.seed} -> {args.out}")
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def _cmd_formula(args) -> int:
    tau = tau_edgeless(args.n, args.k)
    lg = log_base(tau, args.n)
    log_text = "undefined" if lg is None else f"{lg:.2f}"
    print(f"tau={tau} log={log_text}")
    return 0


def _cmd_experiment(args) -> int:
    if args.plot and args.kind != "workload":
        raise UsageError("--plot is supported for workload experiments only")
    if args.kind == "workload" and args.timeout is not None:
        raise UsageError("--timeout applies to failure/accuracy experiments only")
    if args.m_rule == "4n":
        m_rule: int | str | tuple[int, ...] = "4n"
    elif args.m is None:
        raise UsageError("--m is required unless --m-rule 4n")
    else:
        m_rule = args.m if len(args.m) > 1 else args.m[0]
    try:
        algorithms = parse_algorithms(args.algos)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cfg = ExperimentConfig(
        n_values=args.n,
        m_rule=m_rule,
        algorithms=algorithms,
        runs=args.runs,
        base_seed=args.seed,
    )
    if args.kind == "failure":
        report = run_failure_experiment(cfg, jobs=args.jobs, oracle_timeout=args.timeout)
        for cell in report.cells:
            summary = " ".join(
                f"{name}={cell.failures[name]}/{cell.runs}" for name in report.algorithms
            )
            line = f"n={cell.n} m={cell.m} failures: {summary}"
            if cell.oracle_timeouts:
                line += f" oracle-timeouts={cell.oracle_timeouts}"
            print(line)
    elif args.kind == "accuracy":
        report = run_accuracy_experiment(cfg, jobs=args.jobs, oracle_timeout=args.timeout)
        for cell in report.cells:
            for name in report.algorithms:
                hist = " ".join(f"gap{g}={c}" for g, c in sorted(cell.gaps[name].items()))
                line = f"n={cell.n} m={cell.m} {name}: {hist}"
                if cell.oracle_timeouts:
                    line += f" oracle-timeouts={cell.oracle_timeouts}"
                print(line)
    else:
        report = run_workload_experiment(cfg, jobs=args.jobs)
        for cell in report.cells:
            counts = " ".join(
                f"{name}={cell.adjacency_checks[name]}" for name in report.algorithms
            )
            print(f"n={cell.n} m={cell.m} adjacency_checks: {counts}")
    if args.out:
        Path(args.out).write_bytes(emit_csv(report))
        print(f"csv -> {args.out}")
    if args.plot:
        Path(args.plot).write_bytes(emit_plot(report))
        print(f"plot -> {args.plot}")
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "generate": _cmd_generate,
    "formula": _cmd_formula,
    "experiment": _cmd_experiment,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphParseError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoSeedSetsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OracleTimeout:
        print("error: oracle timed out", file=sys.stderr)
        return 3
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())

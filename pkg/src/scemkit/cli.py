"""Command-line front end: ``solve``, ``table``, ``plot`` and ``calibrate``."""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import svg
from .bench import BENCHMARKS, Benchmark, calibrate, fmt, run_table, table_to_csv, table_to_json
from .config import load_problem
from .errors import ScemkitError
from .methods import METHODS, build
from .metrics import Grid, Norm

COMMANDS = ("solve", "table", "plot", "calibrate")
FORMATS = ("csv", "json", "svg")


@dataclass(frozen=True)
class RunConfig:
    command: str
    bench: Benchmark
    epsilons: tuple[float, ...]
    methods: tuple[str, ...]
    grid: int | None
    norm: Norm | None
    format: str
    output: Path | None = None
    workers: int | None = None

    def __post_init__(self):
        if any(not e > 0.0 for e in self.epsilons):
            raise ValueError("epsilon values must be positive")
        if self.grid is not None and self.grid < 2:
            raise ValueError("--grid must be at least 2")
        if not self.methods:
            raise ValueError("method set is empty")
        unknown = [m for m in self.methods if m not in METHODS]
        if unknown:
            raise ValueError(f"unknown method(s) {', '.join(unknown)}; choose from {', '.join(METHODS)}")

    @property
    def epsilon(self) -> float:
        return self.epsilons[0]


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _methods(text: str) -> list[str]:
    return [m.strip() for m in text.split(",") if m.strip()]


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scemkit",
        description="MMAE and SCEM approximations of singularly perturbed linear BVPs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--problem", help=f"built-in problem: {', '.join(BENCHMARKS)}")
        src.add_argument("--config", type=Path, help="problem file")
        p.add_argument("--epsilon", type=float)
        p.add_argument("--epsilons", type=_floats)
        p.add_argument("--methods", type=_methods, default=list(METHODS))
        p.add_argument("--grid", type=int)
        p.add_argument("--norm", choices=[n.value for n in Norm])
        p.add_argument("--format", choices=FORMATS)
        p.add_argument("--output", type=Path)
        if name == "table":
            p.add_argument("--workers", type=int)
    return parser


def _resolve(args, parser) -> RunConfig:
    if args.problem is not None:
        if args.problem not in BENCHMARKS:
            parser.error(f"unknown problem {args.problem!r}; valid ids: {', '.join(BENCHMARKS)}")
        bench = BENCHMARKS[args.problem]
    else:
        problem = load_problem(args.config)
        bench = Benchmark(args.config.stem, problem, grid=101)

    if args.epsilons is not None:
        epsilons = tuple(args.epsilons)
    elif args.epsilon is not None:
        epsilons = (args.epsilon,)
    elif args.command == "table" and bench.rows:
        epsilons = tuple(bench.epsilons)
    else:
        epsilons = (bench.base.epsilon,)
    default_format = "svg" if args.command == "plot" else "csv"
    return RunConfig(
        command=args.command,
        bench=bench,
        epsilons=epsilons,
        methods=tuple(args.methods),
        grid=args.grid,
        norm=Norm(args.norm) if args.norm else None,
        format=args.format or default_format,
        output=args.output,
        workers=getattr(args, "workers", None),
    )


def _columns(config: RunConfig, n_default: int):
    problem = config.bench.problem(config.epsilon)
    grid = Grid.for_problem(problem, config.grid or n_default)
    x = grid.points
    selected = [m for m in METHODS if m in config.methods]
    columns = {}
    for method in selected:
        try:
            columns[method] = np.asarray(build(problem, method)(x), dtype=float)
        except ScemkitError as exc:
            raise ScemkitError(f"method {method}: {exc}") from exc
    return x, columns


def run_solve(config: RunConfig) -> str:
    if config.format == "svg":
        return run_plot(config)
    x, columns = _columns(config, 101)
    names = ["x", *columns]
    if config.format == "json":
        records = [
            {"x": float(xi), **{m: float(v[i]) for m, v in columns.items()}} for i, xi in enumerate(x)
        ]
        return json.dumps(records, indent=2) + "\n"
    out = io.StringIO()
    out.write(",".join(names) + "\n")
    for i, xi in enumerate(x):
        out.write(",".join([fmt(xi), *(fmt(v[i]) for v in columns.values())]) + "\n")
    return out.getvalue()


def run_plot(config: RunConfig) -> str:
    x, columns = _columns(config, 201)
    title = f"{config.bench.id}, epsilon = {fmt(config.epsilon)}"
    return svg.render(x, columns, title)


def run_table_command(config: RunConfig) -> str:
    rows = run_table(config.bench, config.epsilons, config.grid, config.norm, workers=config.workers)
    if config.format == "json":
        return table_to_json(rows)
    if config.format == "svg":
        raise ValueError("table output supports csv or json")
    return table_to_csv(rows)


def run_calibrate(config: RunConfig) -> str:
    if not config.bench.rows:
        raise ValueError(f"problem {config.bench.id!r} has no published table to calibrate against")
    kwargs = {}
    if config.grid is not None:
        kwargs["grid_candidates"] = (config.grid,)
    if config.norm is not None:
        kwargs["norm_candidates"] = (config.norm,)
    result = calibrate(config.bench, **kwargs)
    if config.format == "json":
        return result.to_json()
    return f"problem: {config.bench.id}\n" + result.report()


RUNNERS = {
    "solve": run_solve,
    "table": run_table_command,
    "plot": run_plot,
    "calibrate": run_calibrate,
}


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve(args, parser)
        text = RUNNERS[config.command](config)
    except (ScemkitError, ValueError, ArithmeticError) as exc:
        print(f"scemkit: error: {exc}", file=sys.stderr)
        return 1
    if config.output is not None:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

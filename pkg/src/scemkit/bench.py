"""Built-in benchmark problems, error tables and grid/norm calibration."""

from __future__ import annotations

import dataclasses
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import RowError, ScemkitError
from .expr import Constant, Polynomial
from .methods import build
from .metrics import ErrorReport, Grid, Norm, error_report, l2_error
from .problem import TwoPointBVP

__all__ = [
    "Benchmark",
    "BENCHMARKS",
    "get_benchmark",
    "TableRow",
    "run_table",
    "Calibration",
    "calibrate",
    "DEFAULT_GRID_CANDIDATES",
    "CSV_HEADER",
    "table_to_csv",
    "table_to_json",
    "fmt",
]

# The first ten are the usual sweep; 10001 is needed for the example2 table.
DEFAULT_GRID_CANDIDATES = (11, 21, 51, 100, 101, 128, 201, 256, 501, 1001, 10001)
CALIBRATION_EPS_MAX = 0.01
CONVERGED_RTOL = 1e-3


@dataclass(frozen=True)
class Benchmark:
    """A problem family in epsilon plus its published error table.

    ``rows`` holds ``(epsilon, mmae_l2, scem_l2)`` strings exactly as
    printed; ``grid`` and ``norm`` are the discretisation that reproduces
    them (recovered with :func:`calibrate`).
    """

    id: str
    base: TwoPointBVP
    rows: tuple[tuple[str, str, str], ...] = ()
    grid: int = 101
    norm: Norm = Norm.RSS

    def problem(self, epsilon: float) -> TwoPointBVP:
        return self.base.with_epsilon(epsilon)

    @property
    def epsilons(self) -> list[float]:
        return [float(e) for e, _, _ in self.rows]

    @property
    def printed(self) -> list[tuple[float, float, float]]:
        return [(float(e), float(m), float(s)) for e, m, s in self.rows]


ILLUSTRATIVE = Benchmark(
    "illustrative",
    TwoPointBVP(0.1, p=Constant(2.0), q=Constant(2.0), r=Constant(0.0), a=0.0, b=1.0, alpha=0.0, beta=1.0),
    rows=(
        ("0.0001", "0.000624687980610", "0.000624687980610"),
        ("0.0005", "0.003124942983068", "0.003124942983068"),
        ("0.0010", "0.006253648308213", "0.006253648308213"),
        ("0.0050", "0.031287231692987", "0.031287231692987"),
        ("0.0100", "0.061951928162705", "0.061951928162705"),
        ("0.0500", "0.283794475853395", "0.283794475853395"),
        ("0.1000", "0.498739448296190", "0.498739403531008"),
        ("0.3000", "0.609196858399138", "0.582659431139973"),
        ("0.4000", "0.540710242114810", "0.416122748110290"),
        ("0.6000", "0.893536533505815", "0.302123969698791"),
        ("0.8000", "1.754202335976711", "0.240771410186466"),
        ("1.0000", "2.790418350467303", "0.212524676097187"),
    ),
    grid=101,
)

EXAMPLE1 = Benchmark(
    "example1",
    TwoPointBVP(0.1, p=Constant(1.0), q=Constant(0.0), r=Polynomial((1.0, 2.0)), a=0.0, b=1.0, alpha=0.0, beta=1.0),
    rows=(
        ("0.0001", "0.001146036648629", "0.001146036648629"),
        ("0.0005", "0.005730183242787", "0.005730183242787"),
        ("0.0010", "0.011460350798498", "0.011460350798498"),
        ("0.0050", "0.057047561195172", "0.057047561195172"),
        ("0.0100", "0.112864481039688", "0.112864481039688"),
        ("0.0500", "0.513159514418249", "0.513159531588828"),
        ("0.1000", "0.901557814477664", "0.901920266712351"),
        ("0.3000", "1.339243905573495", "1.569217796713238"),
        ("0.5000", "1.057355422358385", "1.719659382215715"),
        ("0.6000", "0.991379731889011", "1.750119945541900"),
        ("0.8000", "1.119711839328917", "1.782048657856496"),
        ("1.0000", "1.404221050193842", "1.797421134420320"),
    ),
    grid=101,
)

# Stated as -eps y'' + y' + y = 1; normalisation flips it to canonical form.
EXAMPLE2 = Benchmark(
    "example2",
    TwoPointBVP(
        0.1, p=Constant(1.0), q=Constant(1.0), r=Constant(1.0), a=0.0, b=1.0, alpha=0.0, beta=0.0, leading=-1
    ),
    rows=(
        ("0.0050", "0.138999385861808", "0.138999385861808"),
        ("0.0070", "0.192846875716269", "0.192846875716269"),
        ("0.0100", "0.271762063576098", "0.271762063576098"),
        ("0.0500", "1.121307087312208", "1.121307202107427"),
        ("0.0700", "1.413966007685341", "1.414000101581222"),
        ("0.1000", "1.703813183303206", "1.706213659924062"),
        ("0.2500", "1.129307299656383", "1.882651704001525"),
        ("0.5000", "4.188478595061564", "2.177262694969191"),
        ("0.7000", "7.946036759774072", "2.632927334749375"),
        ("0.8000", "9.570235541695139", "2.846650013414474"),
        ("0.9000", "11.023403578129694", "3.041045798307327"),
        ("1.0000", "12.321456684111308", "3.215647240288718"),
    ),
    grid=10001,
)

BENCHMARKS = {b.id: b for b in (ILLUSTRATIVE, EXAMPLE1, EXAMPLE2)}


def get_benchmark(name: str) -> Benchmark:
    try:
        return BENCHMARKS[name]
    except KeyError:
        raise KeyError(
            f"unknown problem {name!r}; valid ids: {', '.join(sorted(BENCHMARKS))}"
        ) from None


@dataclass(frozen=True)
class TableRow:
    epsilon: float
    mmae: ErrorReport
    scem: ErrorReport


def _as_grid(problem: TwoPointBVP, grid) -> Grid:
    if isinstance(grid, Grid):
        return grid
    return Grid.for_problem(problem, int(grid))


def _row(bench: Benchmark, epsilon: float, grid, norm: Norm) -> TableRow:
    try:
        problem = bench.problem(epsilon)
        g = _as_grid(problem, grid)
        approxs = [build(problem, method) for method in ("mmae", "scem")]
        exact = build(problem, "exact")
        reports = [error_report(approx, exact, problem, g, norm) for approx in approxs]
    except (ScemkitError, ArithmeticError, ValueError) as exc:
        raise RowError(epsilon, exc) from exc
    return TableRow(epsilon, *reports)


def run_table(
    bench: Benchmark,
    epsilons=None,
    grid=None,
    norm: Norm | str | None = None,
    workers: int | None = None,
) -> list[TableRow]:
    """One row per epsilon comparing MMAE and balanced SCEM against the exact solution.

    Rows are independent; with ``workers`` they are computed on a thread
    pool but always returned in input order.
    """
    epsilons = bench.epsilons if epsilons is None else list(epsilons)
    grid = bench.grid if grid is None else grid
    norm = bench.norm if norm is None else Norm(norm)
    for e in epsilons:
        if not e > 0.0:
            raise ValueError(f"epsilon must be positive, got {e}")
    if workers and workers > 1 and len(epsilons) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda e: _row(bench, e, grid, norm), epsilons))
    return [_row(bench, e, grid, norm) for e in epsilons]


def fmt(value: float) -> str:
    """15 significant digits, locale independent."""
    return f"{value:.15g}"


CSV_HEADER = ("epsilon", "l2_mmae", "l2_scem", "max_mmae", "max_scem", "bres_a", "bres_b")


def _row_values(row: TableRow) -> tuple[float, ...]:
    # Boundary residuals are reported for MMAE; SCEM's vanish by construction.
    return (
        row.epsilon,
        row.mmae.l2,
        row.scem.l2,
        row.mmae.max,
        row.scem.max,
        row.mmae.residual_a,
        row.mmae.residual_b,
    )


def table_to_csv(rows: list[TableRow]) -> str:
    out = io.StringIO()
    out.write(",".join(CSV_HEADER) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in _row_values(row)) + "\n")
    return out.getvalue()


def table_to_json(rows: list[TableRow]) -> str:
    records = [dict(zip(CSV_HEADER, _row_values(row))) for row in rows]
    return json.dumps(records, indent=2) + "\n"


@dataclass(frozen=True)
class Calibration:
    n: int
    norm: Norm
    max_rel_dev: float
    deviations: tuple[tuple[float, float, float], ...]
    converged: bool
    candidates: tuple[tuple[int, str, float], ...] = ()

    def report(self) -> str:
        status = "converged" if self.converged else "unconverged"
        lines = [f"best: N={self.n} norm={self.norm.value} max_rel_dev={self.max_rel_dev:.6e} {status}"]
        lines.append("epsilon,rel_dev_mmae,rel_dev_scem")
        lines.extend(f"{fmt(e)},{dm:.6e},{ds:.6e}" for e, dm, ds in self.deviations)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = dataclasses.asdict(self)
        payload["norm"] = self.norm.value
        payload["deviations"] = [
            {"epsilon": e, "rel_dev_mmae": dm, "rel_dev_scem": ds} for e, dm, ds in self.deviations
        ]
        payload["candidates"] = [
            {"n": n, "norm": v, "max_rel_dev": d} for n, v, d in self.candidates
        ]
        return json.dumps(payload, indent=2) + "\n"


def calibrate(
    bench: Benchmark,
    grid_candidates=DEFAULT_GRID_CANDIDATES,
    norm_candidates=tuple(Norm),
    eps_max: float = CALIBRATION_EPS_MAX,
) -> Calibration:
    """Find the grid size and norm that best reproduce the printed table.

    Only rows with ``epsilon <= eps_max`` take part. The score of a
    candidate is its largest relative deviation over both columns; the
    first candidate with the smallest score wins.
    """
    rows = [row for row in bench.printed if row[0] <= eps_max]
    if not rows:
        raise ValueError(f"benchmark {bench.id!r} has no printed rows with epsilon <= {eps_max}")
    grid_candidates = [int(n) for n in grid_candidates]
    norm_candidates = [Norm(v) for v in norm_candidates]
    if not grid_candidates or not norm_candidates:
        raise ValueError("calibration needs at least one grid and one norm candidate")

    methods = []
    for eps, _, _ in rows:
        problem = bench.problem(eps)
        methods.append((problem, build(problem, "exact"), build(problem, "mmae"), build(problem, "scem")))

    best = None
    scores = []
    for n in grid_candidates:
        for variant in norm_candidates:
            devs = []
            for (eps, mm_ref, sc_ref), (problem, exact, mmae, scem) in zip(rows, methods):
                grid = Grid.for_problem(problem, n)
                dm = abs(l2_error(mmae, exact, grid, variant) / mm_ref - 1.0)
                ds = abs(l2_error(scem, exact, grid, variant) / sc_ref - 1.0)
                devs.append((eps, dm, ds))
            score = max(max(dm, ds) for _, dm, ds in devs)
            scores.append((n, variant.value, score))
            if best is None or score < best[2]:
                best = (n, variant, score, tuple(devs))
    n, variant, score, devs = best
    return Calibration(
        n=n,
        norm=variant,
        max_rel_dev=score,
        deviations=devs,
        converged=math.isfinite(score) and score <= CONVERGED_RTOL,
        candidates=tuple(scores),
    )

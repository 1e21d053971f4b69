"""Evaluation grids, discrete L2 / max errors and boundary residuals."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteError
from .problem import TwoPointBVP

__all__ = [
    "Grid",
    "Norm",
    "ErrorReport",
    "l2_error",
    "max_error",
    "boundary_residual",
    "error_report",
]


@dataclass(frozen=True)
class Grid:
    a: float
    b: float
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("a grid needs at least 2 points")
        if not self.a < self.b:
            raise ValueError("grid needs a < b")

    @property
    def points(self) -> np.ndarray:
        # linspace pins the last point to b exactly.
        return np.linspace(self.a, self.b, self.n)

    @property
    def spacing(self) -> float:
        return (self.b - self.a) / (self.n - 1)

    @classmethod
    def for_problem(cls, problem: TwoPointBVP, n: int) -> Grid:
        return cls(problem.a, problem.b, n)


class Norm(enum.Enum):
    RSS = "rss"
    H_WEIGHTED = "hweighted"
    RMS = "rms"


def _errors(approx, exact, grid: Grid) -> np.ndarray:
    x = grid.points
    values = {}
    for name, fn in (("approximation", approx), ("reference", exact)):
        v = np.asarray(fn(x), dtype=float)
        bad = ~np.isfinite(v)
        if bad.any():
            where = float(x[bad][0])
            raise NonFiniteError(f"{name} is not finite at x = {where!r}", x=where)
        values[name] = v
    return values["approximation"] - values["reference"]


def _norm(e: np.ndarray, grid: Grid, variant: Norm) -> float:
    total = float(np.sum(e * e))
    if variant is Norm.RSS:
        return math.sqrt(total)
    if variant is Norm.H_WEIGHTED:
        return math.sqrt(grid.spacing * total)
    if variant is Norm.RMS:
        return math.sqrt(total / grid.n)
    raise ValueError(f"unknown norm variant {variant!r}")


def l2_error(approx, exact, grid: Grid, variant: Norm = Norm.RSS) -> float:
    return _norm(_errors(approx, exact, grid), grid, Norm(variant))


def max_error(approx, exact, grid: Grid) -> float:
    return float(np.max(np.abs(_errors(approx, exact, grid))))


def boundary_residual(approx, problem: TwoPointBVP) -> tuple[float, float]:
    return abs(float(approx(problem.a)) - problem.alpha), abs(float(approx(problem.b)) - problem.beta)


@dataclass(frozen=True)
class ErrorReport:
    epsilon: float
    kind: str
    l2: float
    max: float
    residual_a: float
    residual_b: float
    norm: Norm
    n: int


def error_report(approx, exact, problem: TwoPointBVP, grid: Grid, variant: Norm = Norm.RSS) -> ErrorReport:
    e = _errors(approx, exact, grid)
    res_a, res_b = boundary_residual(approx, problem)
    return ErrorReport(
        epsilon=problem.epsilon,
        kind=approx.kind.value,
        l2=_norm(e, grid, Norm(variant)),
        max=float(np.max(np.abs(e))),
        residual_a=res_a,
        residual_b=res_b,
        norm=Norm(variant),
        n=grid.n,
    )

"""Leading-order matched asymptotic expansion: inner solution, matching, composite."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .approx import Approximation, Kind
from .outer import OuterSolution, solve_reduced
from .problem import LayerInfo, Side, TwoPointBVP, classify_layer, normalize, require_end_layer

__all__ = [
    "InnerSolution",
    "CompositeApproximation",
    "matching_limit",
    "inner_leading",
    "composite",
    "build_mmae",
]


def matching_limit(outer: OuterSolution, layer: LayerInfo) -> float:
    """Common limit of outer and inner solutions at the layer.

    The outer solution is continuous on the closed interval, so its limit
    towards x0 is just its value there.
    """
    require_end_layer(layer)
    return float(outer(layer.x0))


@dataclass(frozen=True)
class InnerSolution:
    """``Y0(xbar) = m + (v - m) exp(-rate |xbar|)`` in the stretched variable."""

    limit: float
    boundary_value: float
    rate: float
    side: Side

    def __call__(self, xbar):
        xbar = np.asarray(xbar, dtype=float)
        # xbar >= 0 for a left layer, <= 0 for a right layer; both decay inward.
        decay = np.exp(-self.rate * np.abs(xbar))
        out = self.limit + (self.boundary_value - self.limit) * decay
        return out if out.ndim else float(out)


def inner_leading(problem: TwoPointBVP, layer: LayerInfo, limit: float) -> InnerSolution:
    """Solve ``Y0'' + p(x0) Y0' = 0`` with the layer-side boundary value, far field fixed by matching."""
    require_end_layer(layer)
    problem = normalize(problem)
    value = problem.alpha if layer.side is Side.LEFT else problem.beta
    return InnerSolution(limit, value, layer.rate, layer.side)


@dataclass(frozen=True)
class CompositeApproximation(Approximation):
    outer: OuterSolution
    inner: InnerSolution
    limit: float
    x0: float
    epsilon: float
    kind: Kind = Kind.MMAE

    @property
    def boundary_value(self) -> float:
        return self.inner.boundary_value

    @property
    def rate(self) -> float:
        return self.inner.rate

    def evaluate(self, x):
        xbar = (x - self.x0) / self.epsilon
        return self.outer.evaluate(x) + self.inner(xbar) - self.limit


def composite(
    outer: OuterSolution, inner: InnerSolution, limit: float, layer: LayerInfo, epsilon: float
) -> CompositeApproximation:
    """Outer plus inner minus their common limit."""
    require_end_layer(layer)
    return CompositeApproximation(outer, inner, limit, layer.x0, epsilon)


def build_mmae(problem: TwoPointBVP, layer: LayerInfo | None = None) -> CompositeApproximation:
    problem = normalize(problem)
    layer = layer or classify_layer(problem)
    outer = solve_reduced(problem, layer)
    m = matching_limit(outer, layer)
    return composite(outer, inner_leading(problem, layer, m), m, layer, problem.epsilon)

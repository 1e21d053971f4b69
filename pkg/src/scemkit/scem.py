"""One-term successive complementary expansion.

The approximation is ``y0(x) + Psi((x - x0) / eps)``: the outer solution plus
a complementary function in the stretched variable whose constants come
straight from the two original boundary conditions, with no matching step.

Two complementary functions are offered. The *balanced* one keeps only the
dominant order of the complementary equation, ``Psi'' + p(x0) Psi' = 0``.
The *full* one solves

    Psi'' + p Psi' + eps q Psi = -eps**2 y0''(x0 + eps xbar)

exactly (constant p, q), which for constant-coefficient problems gives back
the exact solution.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .approx import Approximation, Kind
from .errors import ClosedFormUnavailableError
from .expr import CoefExpr, Constant
from .linear import HomogeneousSolution, Roots, char_roots, fit_homogeneous, particular_solution
from .outer import OuterSolution, solve_reduced
from .problem import LayerInfo, Side, TwoPointBVP, classify_layer, normalize, require_end_layer, stretch

__all__ = [
    "Mode",
    "ComplementaryFn",
    "ScemApproximation",
    "complementary_balanced",
    "complementary_full",
    "scem_balanced",
    "scem_full",
    "build_scem",
]


class Mode(enum.Enum):
    BALANCED = "balanced"
    FULL = "full"


@dataclass(frozen=True)
class ComplementaryFn:
    """Psi(xbar). ``A``/``B`` are the constants of the two homogeneous modes.

    Balanced: ``Psi = A + B exp(-rate |xbar|)``; full: ``A phi1 + B phi2 + particular``
    with the shifted basis of :class:`~scemkit.linear.HomogeneousSolution`.
    """

    mode: Mode
    A: float
    B: float
    layer: LayerInfo
    epsilon: float
    roots: Roots
    particular: CoefExpr = field(default_factory=lambda: Constant(0.0))
    homogeneous: HomogeneousSolution | None = None

    def __call__(self, xbar):
        xbar = np.asarray(xbar, dtype=float)
        if self.mode is Mode.BALANCED:
            out = self.A + self.B * np.exp(-self.layer.rate * np.abs(xbar))
        else:
            out = self.homogeneous(xbar) + self.particular(xbar)
        return out if np.ndim(out) else float(out)

    def derivative(self, xbar, order: int = 1):
        xbar = np.asarray(xbar, dtype=float)
        if self.mode is Mode.BALANCED:
            # d/dxbar of exp(-p0 xbar), with p0 = p(x0) carrying the sign.
            p0 = self.layer.rate if self.layer.side is Side.LEFT else -self.layer.rate
            out = self.B * (-p0) ** order * np.exp(-self.layer.rate * np.abs(xbar))
        else:
            part = self.particular
            for _ in range(order):
                part = part.derivative()
            out = self.homogeneous(xbar, deriv=order) + part(xbar)
        return out if np.ndim(out) else float(out)


def _stretched_ends(problem: TwoPointBVP, layer: LayerInfo) -> tuple[float, float]:
    return stretch(problem.a, layer, problem.epsilon), stretch(problem.b, layer, problem.epsilon)


def complementary_balanced(
    problem: TwoPointBVP, layer: LayerInfo, outer: OuterSolution
) -> ComplementaryFn:
    """Dominant-order complementary function with both boundary values imposed."""
    require_end_layer(layer)
    problem = normalize(problem)
    rho = layer.rate
    if not rho > 0.0:
        raise ArithmeticError("balanced complementary function needs a positive decay rate")
    gap_a = problem.alpha - outer(problem.a)
    gap_b = problem.beta - outer(problem.b)
    if layer.side is Side.LEFT:
        at_layer, far = gap_a, gap_b
    else:
        at_layer, far = gap_b, gap_a
    # Value of the decaying mode at the far end; underflows harmlessly to 0.
    tail = math.exp(-rho * (problem.b - problem.a) / problem.epsilon)
    B = (at_layer - far) / (1.0 - tail)
    A = far - B * tail
    p0 = rho if layer.side is Side.LEFT else -rho
    roots = Roots("real", max(0.0, -p0), min(0.0, -p0))
    return ComplementaryFn(Mode.BALANCED, A, B, layer, problem.epsilon, roots)


def complementary_full(
    problem: TwoPointBVP, layer: LayerInfo, outer: OuterSolution
) -> ComplementaryFn:
    """Exact solve of the complementary equation for constant p, q."""
    require_end_layer(layer)
    problem = normalize(problem)
    if not problem.constant_coefficients:
        raise ClosedFormUnavailableError("full SCEM: closed form unavailable (p, q not constant)")
    eps = problem.epsilon
    p, q = problem.p.value, problem.q.value
    forcing = outer.second_derivative_expression.scale(-eps * eps).compose_affine(layer.x0, eps)
    try:
        particular = particular_solution(1.0, p, eps * q, forcing)
    except ClosedFormUnavailableError as exc:
        raise ClosedFormUnavailableError(f"full SCEM: closed form unavailable ({exc})") from None

    roots = char_roots(1.0, p, eps * q)
    xa, xb = _stretched_ends(problem, layer)
    gap_a = problem.alpha - outer(problem.a) - particular(xa)
    gap_b = problem.beta - outer(problem.b) - particular(xb)
    homogeneous = fit_homogeneous(roots, xa, xb, gap_a, gap_b)
    return ComplementaryFn(
        Mode.FULL, homogeneous.c1, homogeneous.c2, layer, eps, roots, particular, homogeneous
    )


@dataclass(frozen=True)
class ScemApproximation(Approximation):
    outer: OuterSolution
    complementary: ComplementaryFn
    kind: Kind

    def evaluate(self, x):
        comp = self.complementary
        return self.outer.evaluate(x) + comp(stretch(x, comp.layer, comp.epsilon))


def scem_balanced(outer: OuterSolution, comp: ComplementaryFn) -> ScemApproximation:
    if comp.mode is not Mode.BALANCED:
        raise ValueError("expected a balanced complementary function")
    return ScemApproximation(outer, comp, Kind.SCEM_BALANCED)


def scem_full(outer: OuterSolution, comp: ComplementaryFn) -> ScemApproximation:
    if comp.mode is not Mode.FULL:
        raise ValueError("expected a full complementary function")
    return ScemApproximation(outer, comp, Kind.SCEM_FULL)


def build_scem(
    problem: TwoPointBVP, mode: Mode = Mode.BALANCED, layer: LayerInfo | None = None
) -> ScemApproximation:
    problem = normalize(problem)
    layer = layer or classify_layer(problem)
    outer = solve_reduced(problem, layer)
    if mode is Mode.BALANCED:
        return scem_balanced(outer, complementary_balanced(problem, layer, outer))
    return scem_full(outer, complementary_full(problem, layer, outer))

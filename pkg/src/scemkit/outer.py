"""Leading-order outer solution of the reduced equation ``p y' + q y = r``."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .approx import Approximation, Kind
from .errors import ClosedFormUnavailableError
from .expr import CoefExpr, ExpLinear, Sum
from .linear import particular_solution
from .problem import LayerInfo, Side, TwoPointBVP, normalize, require_end_layer

__all__ = ["OuterSolution", "solve_reduced", "outer_second_derivative"]


@dataclass(frozen=True)
class OuterSolution(Approximation):
    """Closed-form y0 with the boundary condition opposite the layer imposed.

    ``bc_at`` is the abscissa where the condition was imposed.
    """

    expression: CoefExpr
    bc_at: float
    bc_value: float
    kind: Kind = Kind.OUTER

    def evaluate(self, x):
        return self.expression.evaluate(x)

    def derivative(self, x, order: int = 1):
        expr = self.expression
        for _ in range(order):
            expr = expr.derivative()
        return expr(x)

    @property
    def second_derivative_expression(self) -> CoefExpr:
        return self.expression.derivative().derivative()


def solve_reduced(problem: TwoPointBVP, layer: LayerInfo) -> OuterSolution:
    """Solve ``p y0' + q y0 = r`` with the far boundary value.

    Only constant p, q are handled; r may be any polynomial-plus-exponential.
    When q = 0 the particular part is the antiderivative of r / p.
    """
    require_end_layer(layer)
    problem = normalize(problem)
    if not problem.constant_coefficients:
        raise ClosedFormUnavailableError(
            "outer solver: closed form unavailable (p and q must be constant)"
        )
    p, q = problem.p.value, problem.q.value
    try:
        particular = particular_solution(0.0, p, q, problem.r)
    except ClosedFormUnavailableError as exc:
        raise ClosedFormUnavailableError(f"outer solver: closed form unavailable ({exc})") from None

    if layer.side is Side.LEFT:
        x_bc, target = problem.b, problem.beta
    else:
        x_bc, target = problem.a, problem.alpha
    gap = target - particular(x_bc)
    # Homogeneous part C exp(-(q/p)(x - x_bc)), written relative to x_bc.
    rate = -q / p
    if rate == 0.0:
        homogeneous = ExpLinear(gap, 0.0)
    else:
        homogeneous = ExpLinear(gap * math.exp(-rate * x_bc), rate)
    expression = Sum((particular, homogeneous)).simplify()
    return OuterSolution(expression, x_bc, target)


def outer_second_derivative(solution: OuterSolution, x):
    return solution.derivative(x, order=2)

"""Exact solutions of ``eps y'' + p y' + q y = r`` for constant p and q."""

from __future__ import annotations

from dataclasses import dataclass

from .approx import Approximation, Kind
from .errors import ClosedFormUnavailableError
from .expr import CoefExpr
from .linear import HomogeneousSolution, Roots, char_roots, fit_homogeneous, particular_solution
from .problem import TwoPointBVP, normalize

__all__ = ["ExactSolution", "characteristic_roots", "exact_solution"]


def characteristic_roots(epsilon: float, p: float, q: float) -> Roots:
    """Roots of ``eps m^2 + p m + q``; complex pairs come back as ``sigma +/- i omega``."""
    return char_roots(epsilon, p, q)


@dataclass(frozen=True)
class ExactSolution(Approximation):
    roots: Roots
    homogeneous: HomogeneousSolution
    particular: CoefExpr
    kind: Kind = Kind.EXACT

    @property
    def constants(self) -> tuple[float, float]:
        return self.homogeneous.c1, self.homogeneous.c2

    def evaluate(self, x):
        return self.homogeneous(x) + self.particular(x)

    def derivative(self, x, order: int = 1):
        part = self.particular
        for _ in range(order):
            part = part.derivative()
        out = self.homogeneous(x, deriv=order) + part(x)
        return out

    def residual(self, problem: TwoPointBVP, x):
        """``eps y'' + p y' + q y - r`` from closed-form derivatives."""
        problem = normalize(problem)
        return (
            problem.epsilon * self.derivative(x, 2)
            + problem.p(x) * self.derivative(x, 1)
            + problem.q(x) * self(x)
            - problem.r(x)
        )


def exact_solution(problem: TwoPointBVP) -> ExactSolution:
    problem = normalize(problem)
    if not problem.constant_coefficients:
        raise ClosedFormUnavailableError("exact oracle unavailable: p and q must be constant")
    eps, p, q = problem.epsilon, problem.p.value, problem.q.value
    try:
        particular = particular_solution(eps, p, q, problem.r)
    except ClosedFormUnavailableError as exc:
        raise ClosedFormUnavailableError(f"exact oracle unavailable ({exc})") from None
    roots = characteristic_roots(eps, p, q)
    homogeneous = fit_homogeneous(
        roots,
        problem.a,
        problem.b,
        problem.alpha - particular(problem.a),
        problem.beta - particular(problem.b),
    )
    return ExactSolution(roots, homogeneous, particular)

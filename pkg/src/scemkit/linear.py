"""Constant-coefficient kernel for ``a2 u'' + a1 u' + a0 u = f(s)``.

Shared by the outer solve (``a2 = 0``), the full complementary solve (in the
stretched variable) and the exact oracle (in x). Homogeneous solutions are
built from exponentials shifted to the end of the interval where they are
largest, so every basis function stays in ``[-1, 1]`` times a bounded
polynomial factor and nothing overflows regardless of how stiff the roots are.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ClosedFormUnavailableError
from .expr import CoefExpr, Polynomial, from_parts

__all__ = ["Roots", "char_roots", "particular_solution", "HomogeneousSolution", "fit_homogeneous"]

DOUBLE_ROOT_RTOL = 1e-12


@dataclass(frozen=True)
class Roots:
    """Roots of ``a2 m^2 + a1 m + a0``.

    ``kind`` is ``"real"`` (``first``, ``second`` distinct), ``"double"``
    (``first == second``) or ``"complex"`` (``sigma +/- i omega``).
    """

    kind: str
    first: float = math.nan
    second: float = math.nan
    sigma: float = math.nan
    omega: float = math.nan

    def as_complex(self) -> tuple[complex, complex]:
        if self.kind == "complex":
            return complex(self.sigma, self.omega), complex(self.sigma, -self.omega)
        return complex(self.first), complex(self.second)


def char_roots(a2: float, a1: float, a0: float) -> Roots:
    """Roots of the characteristic quadratic, cancellation-safe.

    The larger-magnitude root comes from ``-(a1 + sign(a1) sqrt(disc)) / 2``;
    the other is recovered from the product of roots, so a tiny root next to
    a huge one keeps full relative accuracy.
    """
    if a2 == 0.0:
        raise ValueError("leading coefficient must be nonzero")
    disc = a1 * a1 - 4.0 * a2 * a0
    scale = max(a1 * a1, abs(4.0 * a2 * a0))
    if abs(disc) <= DOUBLE_ROOT_RTOL * scale:
        m = -a1 / (2.0 * a2)
        return Roots("double", m, m)
    if disc < 0.0:
        return Roots("complex", sigma=-a1 / (2.0 * a2), omega=math.sqrt(-disc) / (2.0 * abs(a2)))
    t = -0.5 * (a1 + math.copysign(math.sqrt(disc), a1))
    big = t / a2
    small = a0 / t if t != 0.0 else 0.0
    # first is the root with the larger real part.
    return Roots("real", max(big, small), min(big, small))


def _poly_particular(a2: float, a1: float, a0: float, forcing: tuple[float, ...]):
    """Polynomial P with ``a2 P'' + a1 P' + a0 P = forcing``.

    A zero ``a0`` (and possibly ``a1``) is resonance: the degree is raised
    by working with P' (or P'') and integrating back.
    """
    if all(c == 0.0 for c in forcing):
        return Polynomial((0.0,))
    if a0 != 0.0:
        n = len(forcing)
        out = [0.0] * (n + 2)
        for k in range(n - 1, -1, -1):
            out[k] = (forcing[k] - a1 * (k + 1) * out[k + 1] - a2 * (k + 2) * (k + 1) * out[k + 2]) / a0
        return Polynomial(tuple(out[:n]))
    if a1 != 0.0:
        return _poly_particular(0.0, a2, a1, forcing).antiderivative()
    if a2 != 0.0:
        first = Polynomial(tuple(c / a2 for c in forcing)).antiderivative()
        return first.antiderivative()
    raise ClosedFormUnavailableError("degenerate operator: all coefficients vanish")


def particular_solution(a2: float, a1: float, a0: float, forcing: CoefExpr) -> CoefExpr:
    """Undetermined-coefficients particular solution for polynomial-plus-exponential forcing."""
    poly, exps = forcing.parts()
    terms = []
    for c, k in exps:
        denom = a2 * k * k + a1 * k + a0
        if denom == 0.0:
            raise ClosedFormUnavailableError(
                f"forcing exp({k:g} s) resonates with the homogeneous solution"
            )
        terms.append((c / denom, k))
    return from_parts(_poly_particular(a2, a1, a0, poly).coeffs, terms)


def _shift_for(rate: float, lo: float, hi: float) -> float:
    return hi if rate > 0.0 else lo


@dataclass(frozen=True)
class HomogeneousSolution:
    """``c1 * phi1(s) + c2 * phi2(s)`` on ``[lo, hi]`` with shifted basis functions."""

    roots: Roots
    lo: float
    hi: float
    c1: float = 0.0
    c2: float = 0.0

    def _basis(self, s, deriv: int):
        s = np.asarray(s, dtype=float)
        r = self.roots
        if r.kind == "real":
            out = []
            for m in (r.first, r.second):
                e = np.exp(m * (s - _shift_for(m, self.lo, self.hi)))
                out.append(m**deriv * e)
            return out
        if r.kind == "double":
            m = r.first
            ref = _shift_for(m, self.lo, self.hi)
            length = self.hi - self.lo
            t = (s - ref) / length
            e = np.exp(m * (s - ref))
            # phi2 = t e^{m (s - ref)}, t' = 1/length.
            if deriv == 0:
                return [e, t * e]
            if deriv == 1:
                return [m * e, (1.0 / length + m * t) * e]
            return [m * m * e, (2.0 * m / length + m * m * t) * e]
        sig, om = r.sigma, r.omega
        ref = _shift_for(sig, self.lo, self.hi)
        u = s - ref
        e = np.exp(sig * u)
        cos, sin = np.cos(om * u), np.sin(om * u)
        if deriv == 0:
            return [e * cos, e * sin]
        if deriv == 1:
            return [e * (sig * cos - om * sin), e * (sig * sin + om * cos)]
        a, b = sig * sig - om * om, 2.0 * sig * om
        return [e * (a * cos - b * sin), e * (a * sin + b * cos)]

    def __call__(self, s, deriv: int = 0):
        phi1, phi2 = self._basis(s, deriv)
        out = self.c1 * phi1 + self.c2 * phi2
        return out if np.ndim(out) else float(out)


def _solve2(m11, m12, m21, m22, r1, r2):
    """2x2 solve by elimination with partial pivoting."""
    if abs(m21) > abs(m11):
        m11, m12, r1, m21, m22, r2 = m21, m22, r2, m11, m12, r1
    if m11 == 0.0:
        raise ArithmeticError("singular boundary system")
    f = m21 / m11
    d = m22 - f * m12
    det = m11 * d
    if abs(det) < 1e-300:
        raise ArithmeticError(f"near-singular boundary system (det = {det:.3e})")
    x2 = (r2 - f * r1) / d
    x1 = (r1 - m12 * x2) / m11
    return x1, x2


def fit_homogeneous(roots: Roots, lo: float, hi: float, value_lo: float, value_hi: float):
    """Homogeneous solution taking ``value_lo`` at ``lo`` and ``value_hi`` at ``hi``."""
    basis = HomogeneousSolution(roots, lo, hi)
    (p1_lo, p2_lo) = (float(v) for v in basis._basis(lo, 0))
    (p1_hi, p2_hi) = (float(v) for v in basis._basis(hi, 0))
    c1, c2 = _solve2(p1_lo, p2_lo, p1_hi, p2_hi, value_lo, value_hi)
    return HomogeneousSolution(roots, lo, hi, c1, c2)

"""Problem statement, canonical form and boundary-layer location."""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InteriorLayerError, NotSingularlyPerturbedError
from .expr import CoefExpr, Polynomial, as_expr

__all__ = [
    "TwoPointBVP",
    "Side",
    "LayerInfo",
    "normalize",
    "classify_layer",
    "require_end_layer",
    "stretch",
    "unstretch",
    "DEFAULT_SAMPLES",
]

DEFAULT_SAMPLES = 257


@dataclass(frozen=True)
class TwoPointBVP:
    """``leading * eps * y'' + p y' + q y = r`` on ``[a, b]``, ``y(a)=alpha``, ``y(b)=beta``.

    ``leading`` is the sign of the second-derivative coefficient; the
    problem is canonical when it is ``+1`` (see :func:`normalize`).
    """

    epsilon: float
    p: CoefExpr
    q: CoefExpr
    r: CoefExpr
    a: float = 0.0
    b: float = 1.0
    alpha: float = 0.0
    beta: float = 0.0
    leading: int = 1

    def __post_init__(self):
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, as_expr(getattr(self, name)))
        for name in ("epsilon", "a", "b", "alpha", "beta"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not math.isfinite(self.epsilon) or self.epsilon <= 0.0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if not self.a < self.b:
            raise ValueError(f"interval needs a < b, got [{self.a}, {self.b}]")
        if self.leading not in (-1, 0, 1):
            raise ValueError("leading must be the sign of the y'' coefficient (-1, 0 or 1)")

    @property
    def canonical(self) -> bool:
        return self.leading == 1

    def with_epsilon(self, epsilon: float) -> TwoPointBVP:
        return dataclasses.replace(self, epsilon=epsilon)

    @property
    def constant_coefficients(self) -> bool:
        return self.p.is_constant and self.q.is_constant


def normalize(problem: TwoPointBVP) -> TwoPointBVP:
    """Return the equivalent problem whose y'' coefficient is ``+epsilon``.

    Solutions are unchanged: a ``-eps y''`` problem is multiplied through by -1.
    """
    if problem.leading == 0:
        raise NotSingularlyPerturbedError(
            "not singularly perturbed: second-derivative coefficient is zero"
        )
    if problem.leading == 1:
        return problem
    return dataclasses.replace(problem, p=-problem.p, q=-problem.q, r=-problem.r, leading=1)


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    INTERIOR = "interior"


@dataclass(frozen=True)
class LayerInfo:
    """Where the layer sits and how fast it decays.

    ``rate`` is ``|p(x0)|``; for interior results ``x0`` and ``rate`` are
    NaN and ``zeros`` lists the abscissae where p changes sign or vanishes.
    """

    side: Side
    x0: float
    rate: float
    zeros: tuple[float, ...] = ()

    @property
    def is_end_layer(self) -> bool:
        return self.side is not Side.INTERIOR

    def scale(self, epsilon: float) -> float:
        """Layer thickness; linear in epsilon for the problem class handled here."""
        return epsilon


def _polynomial_roots(p: CoefExpr, a: float, b: float) -> list[float]:
    coeffs = p.parts()[0]
    coeffs = Polynomial(coeffs).coeffs
    if len(coeffs) == 2:
        c0, c1 = coeffs
        roots = [-c0 / c1]
    elif len(coeffs) == 3:
        c0, c1, c2 = coeffs
        disc = c1 * c1 - 4.0 * c2 * c0
        if disc < 0.0:
            return []
        d = math.sqrt(disc)
        t = -0.5 * (c1 + math.copysign(d, c1))
        roots = [t / c2] + ([c0 / t] if t != 0.0 else [])
    else:
        return []
    return sorted({r for r in roots if a <= r <= b})


def _bisect(f, lo: float, hi: float, iterations: int = 80) -> float:
    flo = f(lo)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def classify_layer(problem: TwoPointBVP, samples: int = DEFAULT_SAMPLES) -> LayerInfo:
    """Locate the boundary layer from the sign of p on ``[a, b]``.

    p is sampled at ``samples`` uniform points; polynomial p of degree one
    or two additionally has its real roots located exactly, so a root
    falling between samples is not missed.
    """
    if samples < 2:
        raise ValueError("sample count must be at least 2")
    problem = normalize(problem)
    p, a, b = problem.p, problem.a, problem.b
    xs = np.linspace(a, b, samples)
    values = np.asarray(p(xs), dtype=float)
    signs = np.sign(values)

    zeros = set(float(x) for x in xs[signs == 0.0])
    poly, exps = p.parts()
    if not exps and len(poly) in (2, 3):
        zeros.update(_polynomial_roots(p, a, b))
    for i in np.flatnonzero(signs[:-1] * signs[1:] < 0.0):
        lo, hi = float(xs[i]), float(xs[i + 1])
        if not any(lo <= z <= hi for z in zeros):
            zeros.add(_bisect(lambda t: float(p(t)), lo, hi))

    if zeros or np.all(signs == 0.0):
        return LayerInfo(Side.INTERIOR, math.nan, math.nan, tuple(sorted(zeros)))
    if signs[0] > 0.0:
        return LayerInfo(Side.LEFT, a, abs(float(p(a))))
    return LayerInfo(Side.RIGHT, b, abs(float(p(b))))


def require_end_layer(layer: LayerInfo) -> None:
    if not layer.is_end_layer:
        zeros = ", ".join(f"{z:g}" for z in layer.zeros)
        raise InteriorLayerError(f"interior layer unsupported (p vanishes at x = {zeros})")


def _as_float(x):
    return np.asarray(x, dtype=float) if np.ndim(x) else float(x)


def stretch(x, layer: LayerInfo, epsilon: float):
    """Boundary-layer variable ``(x - x0) / epsilon``."""
    return (_as_float(x) - layer.x0) / layer.scale(epsilon)


def unstretch(xbar, layer: LayerInfo, epsilon: float):
    return layer.x0 + layer.scale(epsilon) * _as_float(xbar)

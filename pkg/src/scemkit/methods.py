"""Build any approximation of a problem by method name."""

from __future__ import annotations

from .approx import Approximation
from .exact import exact_solution
from .mmae import build_mmae
from .problem import TwoPointBVP, classify_layer, normalize
from .scem import Mode, build_scem

METHODS = ("exact", "mmae", "scem", "scemw")


def build(problem: TwoPointBVP, method: str) -> Approximation:
    """``exact``, ``mmae`` (composite), ``scem`` (balanced) or ``scemw`` (full)."""
    problem = normalize(problem)
    if method == "exact":
        return exact_solution(problem)
    layer = classify_layer(problem)
    if method == "mmae":
        return build_mmae(problem, layer)
    if method == "scem":
        return build_scem(problem, Mode.BALANCED, layer)
    if method == "scemw":
        return build_scem(problem, Mode.FULL, layer)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")

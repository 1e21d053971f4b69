"""Uniformly valid asymptotic approximations for singularly perturbed linear BVPs.

Compares the leading-order matched-asymptotics composite (MMAE) with
one-term successive complementary expansions (SCEM) against exact
solutions of ``eps y'' + p y' + q y = r``.
"""

from .approx import Approximation, Kind
from .bench import BENCHMARKS, Benchmark, calibrate, get_benchmark, run_table
from .errors import (
    ClosedFormUnavailableError,
    ConfigError,
    InteriorLayerError,
    NonFiniteError,
    NotSingularlyPerturbedError,
    ScemkitError,
)
from .exact import characteristic_roots, exact_solution
from .expr import Constant, ExpLinear, Polynomial, Sum
from .methods import METHODS, build
from .metrics import Grid, Norm, boundary_residual, l2_error, max_error
from .mmae import build_mmae
from .problem import LayerInfo, Side, TwoPointBVP, classify_layer, normalize, stretch, unstretch
from .scem import Mode, build_scem

__version__ = "0.1.0"

__all__ = [
    "Approximation",
    "Kind",
    "BENCHMARKS",
    "Benchmark",
    "calibrate",
    "get_benchmark",
    "run_table",
    "ClosedFormUnavailableError",
    "ConfigError",
    "InteriorLayerError",
    "NonFiniteError",
    "NotSingularlyPerturbedError",
    "ScemkitError",
    "characteristic_roots",
    "exact_solution",
    "Constant",
    "ExpLinear",
    "Polynomial",
    "Sum",
    "METHODS",
    "build",
    "Grid",
    "Norm",
    "boundary_residual",
    "l2_error",
    "max_error",
    "build_mmae",
    "LayerInfo",
    "Side",
    "TwoPointBVP",
    "classify_layer",
    "normalize",
    "stretch",
    "unstretch",
    "Mode",
    "build_scem",
]

"""Closed-form solution candidates that can be evaluated on a grid."""

from __future__ import annotations

import enum

import numpy as np


class Kind(enum.Enum):
    OUTER = "outer"
    MMAE = "mmae"
    SCEM_BALANCED = "scem"
    SCEM_FULL = "scemw"
    EXACT = "exact"


class Approximation:
    """Anything with a ``kind`` that maps x (scalar or array) to values."""

    kind: Kind

    def evaluate(self, x):
        raise NotImplementedError

    def __call__(self, x):
        out = self.evaluate(np.asarray(x, dtype=float))
        return out if np.ndim(out) else float(out)

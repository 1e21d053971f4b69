"""Symbolic scalar coefficient functions.

Every coefficient of a problem, and every closed-form piece built from
them, is a ``CoefExpr``: a constant, a polynomial (ascending coefficients),
an exponential ``c * exp(k * x)``, or a sum of those. Differentiation is
exact and evaluation is vectorised over numpy arrays.

    >>> f = Sum((Polynomial((1.0, 2.0)), ExpLinear(3.0, -1.0)))
    >>> f.derivative()(0.0)
    -1.0
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

__all__ = [
    "CoefExpr",
    "Constant",
    "Polynomial",
    "ExpLinear",
    "Sum",
    "from_parts",
    "as_expr",
]


class CoefExpr:
    """Common behaviour of all coefficient-function variants."""

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        raise NotImplementedError

    def derivative(self) -> CoefExpr:
        raise NotImplementedError

    def parts(self) -> tuple[tuple[float, ...], tuple[tuple[float, float], ...]]:
        """Split into ``(polynomial coefficients, ((c, k), ...))``.

        Exponentials with equal rates are merged and ``k == 0`` terms fold
        into the polynomial, so two equal functions give equal parts.
        """
        raise NotImplementedError

    def simplify(self) -> CoefExpr:
        return from_parts(*self.parts())

    @property
    def is_constant(self) -> bool:
        poly, exps = self.parts()
        return len(poly) == 1 and not exps

    @property
    def value(self) -> float:
        """The constant value; only for expressions with ``is_constant``."""
        if not self.is_constant:
            raise ValueError(f"{self!r} is not constant")
        return self.parts()[0][0]

    @property
    def is_polynomial(self) -> bool:
        return not self.parts()[1]

    def scale(self, factor: float) -> CoefExpr:
        poly, exps = self.parts()
        return from_parts(
            tuple(factor * c for c in poly), tuple((factor * c, k) for c, k in exps)
        )

    def compose_affine(self, shift: float, factor: float) -> CoefExpr:
        """Return ``t -> self(shift + factor * t)`` as a new expression."""
        poly, exps = self.parts()
        # Horner in the affine map keeps this exact for low degrees.
        line = np.array([shift, factor])
        acc = np.array([0.0])
        for c in reversed(poly):
            acc = npoly.polyadd(npoly.polymul(acc, line), [c])
        new_exps = tuple((c * math.exp(k * shift), k * factor) for c, k in exps)
        return from_parts(tuple(float(v) for v in acc), new_exps)

    def __neg__(self) -> CoefExpr:
        return self.scale(-1.0)

    def __add__(self, other) -> CoefExpr:
        other = as_expr(other)
        return Sum((self, other)).simplify()

    __radd__ = __add__

    def __sub__(self, other) -> CoefExpr:
        return self + (-as_expr(other))

    def __rsub__(self, other) -> CoefExpr:
        return as_expr(other) + (-self)

    def equals(self, other: CoefExpr) -> bool:
        return self.parts() == as_expr(other).parts()


@dataclass(frozen=True)
class Constant(CoefExpr):
    c: float

    def __post_init__(self):
        object.__setattr__(self, "c", float(self.c))

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        out = np.full(x.shape, self.c)
        return out if out.ndim else float(out)

    def derivative(self):
        return Constant(0.0)

    def parts(self):
        return (self.c,), ()


@dataclass(frozen=True)
class Polynomial(CoefExpr):
    """``coeffs[0] + coeffs[1] x + ...``; trailing zeros are trimmed."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = [float(c) for c in self.coeffs]
        if not coeffs:
            raise ValueError("polynomial coefficient list must be nonempty")
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        out = npoly.polyval(x, self.coeffs)
        if np.ndim(out) == 0:
            return float(out)
        return np.broadcast_to(out, x.shape).copy()

    def derivative(self):
        if self.degree == 0:
            return Polynomial((0.0,))
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def antiderivative(self) -> Polynomial:
        """Antiderivative vanishing at zero."""
        return Polynomial((0.0,) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))

    def parts(self):
        return self.coeffs, ()


@dataclass(frozen=True)
class ExpLinear(CoefExpr):
    """``c * exp(k * x)``."""

    c: float
    k: float

    def __post_init__(self):
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "k", float(self.k))

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        out = self.c * np.exp(self.k * x)
        return out if out.ndim else float(out)

    def derivative(self):
        return ExpLinear(self.c * self.k, self.k)

    def parts(self):
        if self.k == 0.0:
            return (self.c,), ()
        if self.c == 0.0:
            return (0.0,), ()
        return (0.0,), ((self.c, self.k),)


@dataclass(frozen=True)
class Sum(CoefExpr):
    terms: tuple[CoefExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(as_expr(t) for t in self.terms))

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        total = np.zeros(x.shape)
        for term in self.terms:
            total = total + term.evaluate(x)
        return total if np.ndim(total) else float(total)

    def derivative(self):
        return Sum(tuple(t.derivative() for t in self.terms))

    def parts(self):
        poly = np.array([0.0])
        rates: dict[float, float] = {}
        for term in self.terms:
            p, exps = term.parts()
            poly = npoly.polyadd(poly, p)
            for c, k in exps:
                rates[k] = rates.get(k, 0.0) + c
        trimmed = Polynomial(tuple(float(v) for v in poly)).coeffs
        exps = tuple((c, k) for k, c in sorted(rates.items()) if c != 0.0)
        return trimmed, exps


def from_parts(poly, exps=()) -> CoefExpr:
    """Rebuild the simplest variant for a polynomial plus exponentials."""
    poly = np.asarray(tuple(poly) or (0.0,), dtype=float)
    merged: dict[float, float] = {}
    for c, k in exps:
        if k == 0.0:
            poly = npoly.polyadd(poly, [c])
        else:
            merged[float(k)] = merged.get(float(k), 0.0) + float(c)
    poly = Polynomial(tuple(float(v) for v in poly))
    terms: list[CoefExpr] = []
    if poly.degree == 0:
        if poly.coeffs[0] != 0.0:
            terms.append(Constant(poly.coeffs[0]))
    else:
        terms.append(poly)
    terms.extend(ExpLinear(c, k) for k, c in sorted(merged.items()) if c != 0.0)
    if not terms:
        return Constant(0.0)
    if len(terms) == 1:
        return terms[0]
    return Sum(tuple(terms))


def as_expr(value) -> CoefExpr:
    if isinstance(value, CoefExpr):
        return value
    if isinstance(value, (int, float, np.floating, np.integer)):
        return Constant(float(value))
    raise TypeError(f"cannot interpret {value!r} as a coefficient function")

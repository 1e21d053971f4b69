import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from scemkit.bench import BENCHMARKS
from scemkit.errors import InteriorLayerError, NotSingularlyPerturbedError
from scemkit.expr import Constant, ExpLinear, Polynomial
from scemkit.problem import (
    LayerInfo,
    Side,
    TwoPointBVP,
    classify_layer,
    normalize,
    require_end_layer,
    stretch,
    unstretch,
)


def bvp(p, q=0.0, r=0.0, leading=1, **kw):
    return TwoPointBVP(0.1, p=p, q=q, r=r, leading=leading, **kw)


def test_normalize_flips_negative_leading_term():
    raw = bvp(Constant(1.0), Constant(1.0), Constant(1.0), leading=-1)
    n = normalize(raw)
    assert n.canonical
    assert (n.p.value, n.q.value, n.r.value) == (-1.0, -1.0, -1.0)
    assert (n.alpha, n.beta, n.a, n.b) == (raw.alpha, raw.beta, raw.a, raw.b)


def test_normalize_keeps_canonical_problem():
    raw = bvp(Constant(2.0), Constant(2.0), Constant(0.0))
    assert normalize(raw) is raw


def test_normalize_sign_flip_without_q():
    n = normalize(bvp(Constant(-2.0), Constant(0.0), Constant(4.0), leading=-1))
    assert (n.p.value, n.q.value, n.r.value) == (2.0, 0.0, -4.0)


def test_zero_leading_coefficient_rejected():
    with pytest.raises(NotSingularlyPerturbedError, match="not singularly perturbed"):
        normalize(bvp(Constant(1.0), leading=0))


@pytest.mark.parametrize("sign", [1, -1])
def test_normalize_idempotent(sign):
    raw = bvp(Polynomial((1.0, 2.0)), ExpLinear(1.0, 0.5), Constant(3.0), leading=sign)
    once = normalize(raw)
    assert normalize(once) == once


def test_invalid_problem_fields():
    with pytest.raises(ValueError):
        TwoPointBVP(0.0, p=1.0, q=0.0, r=0.0)
    with pytest.raises(ValueError):
        TwoPointBVP(0.1, p=1.0, q=0.0, r=0.0, a=1.0, b=1.0)


@pytest.mark.parametrize(
    "name, side, x0, rate",
    [("illustrative", Side.LEFT, 0.0, 2.0), ("example1", Side.LEFT, 0.0, 1.0), ("example2", Side.RIGHT, 1.0, 1.0)],
)
def test_benchmark_layer_sides(name, side, x0, rate):
    layer = classify_layer(BENCHMARKS[name].problem(0.1))
    assert layer == LayerInfo(side, x0, rate)


def test_sign_change_gives_interior():
    layer = classify_layer(bvp(Polynomial((-0.5, 1.0))))
    assert layer.side is Side.INTERIOR
    assert layer.zeros == (0.5,)
    with pytest.raises(InteriorLayerError, match="interior layer unsupported"):
        require_end_layer(layer)


def test_root_between_samples_is_found():
    # Roots at 0.5001 and 0.5002 fall between samples of a 257-point grid.
    p = Polynomial((0.5001 * 0.5002, -(0.5001 + 0.5002), 1.0))
    layer = classify_layer(bvp(p))
    assert layer.side is Side.INTERIOR
    np.testing.assert_allclose(layer.zeros, [0.5001, 0.5002], rtol=1e-12)


def test_touching_zero_gives_interior():
    layer = classify_layer(bvp(Polynomial((0.25, -1.0, 1.0))))
    assert layer.side is Side.INTERIOR
    assert layer.zeros[0] == pytest.approx(0.5)


def test_non_polynomial_sign_change_located_by_bisection():
    p = ExpLinear(1.0, 1.0) - 1.5
    layer = classify_layer(bvp(p))
    assert layer.side is Side.INTERIOR
    assert layer.zeros[0] == pytest.approx(math.log(1.5), abs=1e-12)


def test_classify_layer_needs_two_samples():
    with pytest.raises(ValueError):
        classify_layer(bvp(Constant(1.0)), samples=1)


def test_stretch_examples():
    left = LayerInfo(Side.LEFT, 0.0, 2.0)
    right = LayerInfo(Side.RIGHT, 1.0, 1.0)
    assert stretch(0.05, left, 0.1) == pytest.approx(0.5)
    assert stretch(0.0, left, 0.1) == 0.0
    assert stretch(1.0, right, 0.01) == 0.0
    np.testing.assert_allclose(stretch(np.array([0.0, 0.5]), right, 0.5), [-2.0, -1.0])


@given(
    st.floats(min_value=0.0, max_value=1.0),
    st.sampled_from([0.0, 1.0]),
    st.floats(min_value=1e-6, max_value=1.0),
)
def test_unstretch_inverts_stretch(x, x0, eps):
    layer = LayerInfo(Side.LEFT if x0 == 0.0 else Side.RIGHT, x0, 1.0)
    back = unstretch(stretch(x, layer, eps), layer, eps)
    assert abs(back - x) <= 2 * math.ulp(1.0)
    assert -math.ulp(1.0) <= back <= 1.0 + math.ulp(1.0)

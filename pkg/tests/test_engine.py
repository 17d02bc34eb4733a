import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lctkit.algebra import Sl2cMatrix
from lctkit.engine import (
    QuadratureConfig,
    grid_points,
    integrate_real_line,
    transform_analytic,
    transform_points,
    transform_sampled,
    trapezoid_plan,
    apply_degenerate,
)
from lctkit.errors import ComplexScaleOnSamples, NearDegenerate, NodeBudgetExceeded, NonConvergent
from lctkit.kernel import DegenerateAction, KernelSpec
from lctkit.signals import GaussianChirp, closed_form_lct, sample
from lctkit.special import gaussian_integral

# plain Fourier kernel exp(-2 pi i x u)
FOURIER = KernelSpec(Sl2cMatrix(0, 1, -1, 0), 1.0)


def test_config_validation():
    for bad in ({"env_tol": 0}, {"oversample": 1}, {"max_nodes": 3}):
        with pytest.raises(ValueError):
            QuadratureConfig(**bad)


def test_grid_points():
    assert np.allclose(grid_points(-1, 0.5, 5), [-1, -0.5, 0, 0.5, 1])


def test_plan_is_odd_and_centred():
    xc, r, n = trapezoid_plan(math.pi * 2, 3.0, 0, QuadratureConfig())
    assert n % 2 == 1 and n >= 17
    assert xc == pytest.approx(3.0 / (4 * math.pi))
    assert math.exp(-2 * math.pi * r * r) <= 1e-12 * 1.0001


def test_plan_budget_and_divergence():
    with pytest.raises(NodeBudgetExceeded):
        trapezoid_plan(0.01 + 50j, 0.0, 0, QuadratureConfig(max_nodes=64))
    with pytest.raises(NonConvergent):
        trapezoid_plan(-1.0, 0.0, 0, QuadratureConfig())


@given(st.floats(0.3, 3), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2))
@settings(max_examples=40)
def test_integrate_real_line(sr, si, br, bi):
    f = GaussianChirp(1.0, complex(sr, si), complex(br, bi))
    want = gaussian_integral(math.pi * f.sigma, f.beta)
    got = integrate_real_line(f)
    assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


def test_fourier_of_gaussian():
    u = np.linspace(-3, 3, 61)
    got = transform_points(FOURIER, GaussianChirp(), u)
    assert np.max(np.abs(got - np.exp(-math.pi * u * u))) <= 1e-10


def test_polynomial_input():
    f = GaussianChirp(1, 1.2 - 0.3j, 0.2)
    u = np.linspace(-1, 1, 9)
    # F{x f}(u) = (i / 2 pi) d/du F{f}(u)
    got = transform_points(FOURIER, f.moment(1), u)
    want = 1j / (2 * math.pi) * closed_form_lct(FOURIER.matrix, f, 1.0).derivative(1)(u)
    assert np.allclose(got, want, rtol=1e-9, atol=1e-12)


def test_transform_analytic_grid():
    s = transform_analytic(FOURIER, GaussianChirp(), (-1.0, 0.25, 9))
    assert len(s) == 9 and s.x0 == -1.0
    assert np.allclose(s.values, np.exp(-math.pi * s.grid**2), atol=1e-10)


def test_engine_errors():
    with pytest.raises(NonConvergent):
        transform_points(FOURIER, GaussianChirp(1, -0.5), [0.0])
    near = KernelSpec.lct(Sl2cMatrix(1, 0.01, 0, 1))
    with pytest.raises(NearDegenerate):
        transform_points(near, GaussianChirp(), [0.0])
    with pytest.raises(TypeError):
        transform_points(FOURIER, lambda x: x, [0.0])


def test_transform_sampled_gaussian():
    s = sample(GaussianChirp(), -6, 0.01, 1201)
    u = np.linspace(-2, 2, 21)
    assert np.allclose(transform_sampled(FOURIER, s, u), np.exp(-math.pi * u * u), atol=1e-10)


def test_apply_degenerate_samples():
    s = sample(GaussianChirp(), -3, 0.001, 6001)
    u = np.linspace(-1, 1, 5)
    got = apply_degenerate(DegenerateAction(2.0, 0.5), s, u)
    assert np.allclose(got, 0.5 * np.exp(-4 * math.pi * u * u), atol=1e-5)
    with pytest.raises(ComplexScaleOnSamples):
        apply_degenerate(DegenerateAction(1j), s, u)
    # beyond the sample range the signal is taken as zero
    assert apply_degenerate(DegenerateAction(10.0), s, [1.0])[0] == 0


def test_saddle_line_avoids_cancellation():
    # real-line envelope peaks near e^52 while the result is ~1e-4
    m = Sl2cMatrix(0, complex(math.cos(-0.663), math.sin(-0.663)), 0, 0)
    m = Sl2cMatrix(0, m.b, -1 / m.b, 0)
    spec = KernelSpec(m, 1.0)
    f = GaussianChirp(1.0, 1.21 - 0.23j, -0.005 - 0.014j)
    u = np.array([-7.3, 0.0, 7.25])
    want = closed_form_lct(m, f, 1.0)(u)
    got = transform_points(spec, f, u)
    assert np.allclose(got, want, rtol=1e-8, atol=0)


def test_saddle_shift_value():
    from lctkit.engine import saddle_shift

    assert saddle_shift(2.0, 4j) == pytest.approx(1.0)
    assert saddle_shift(1.0, 3.0) == 0.0


def test_transform_sampled_linearity():
    s = sample(GaussianChirp(1, 1.2, 0.3j), -5, 0.02, 501)
    s2 = type(s)(s.x0, s.dx, 2 * s.values)
    u = np.linspace(-1, 1, 11)
    assert np.allclose(transform_sampled(FOURIER, s2, u), 2 * transform_sampled(FOURIER, s, u), rtol=1e-12, atol=0)


def test_transform_sampled_refinement_monotone():
    # coarse grids alias; each halving of dx must reduce the error
    f = GaussianChirp(1, 1.0 - 0.8j, 0.5)
    spec = KernelSpec.lct(Sl2cMatrix(0.8, 0.6, -0.5, 0.875))
    u = np.linspace(-1, 1, 11)
    want = closed_form_lct(spec.matrix, f)(u)
    errs = []
    for dx in (0.4, 0.2, 0.1):
        n = int(round(12 / dx)) + 1
        errs.append(np.max(np.abs(transform_sampled(spec, sample(f, -6, dx, n), u) - want)))
    assert errs[0] > errs[1] > errs[2]


def test_determinism_and_oversample_self_convergence():
    spec = KernelSpec.lct(Sl2cMatrix(0.8, 0.6, -0.5, 0.875))
    f = GaussianChirp(0.9, 1.3 + 0.3j, 0.2 - 0.4j)
    u = np.linspace(-2, 2, 17)
    a = transform_points(spec, f, u)
    assert np.array_equal(a, transform_points(spec, f, u))
    b = transform_points(spec, f, u, QuadratureConfig(oversample=16))
    assert np.max(np.abs(a - b)) <= 1e-8


def test_scale_by_inverse_i_and_parity():
    u = np.linspace(-1, 1, 9)
    g = apply_degenerate(DegenerateAction(-1j), GaussianChirp(), u)
    assert np.allclose(g, np.exp(math.pi * u * u), rtol=1e-14)
    shifted = GaussianChirp().shifted(1.0)
    assert np.allclose(apply_degenerate(DegenerateAction(-1.0), shifted, u), np.exp(-math.pi * (u + 1) ** 2))

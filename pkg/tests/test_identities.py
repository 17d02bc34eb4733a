import json
import math

import numpy as np
import pytest

from lctkit import identities as idt
from lctkit import transforms as tr
from lctkit.algebra import Sl2cMatrix
from lctkit.errors import InadmissibleAuxiliary, NearDegenerate, NonConvergent, NotDegenerate
from lctkit.signals import GaussianChirp

FRFT = tr.make_frft(1.0)
F = GaussianChirp(1.0, 1.1 + 0.2j, 0.3 - 0.2j)
G = GaussianChirp(0.8j, 0.9 - 0.1j, -0.2 + 0.1j)

FIELDS_EXCEPT_FREQ = [
    "shift_in_quad", "shift_in_lin", "shift_in_arg", "shift_out_mod", "shift_out_quad",
    "shift_out_lin", "in_chirp", "out_chirp", "moment", "conv_time", "corr_time",
]


@pytest.mark.parametrize("theta", [0.4, 1.0, 2.0, -1.3, 2.9])
def test_frft_coefficients_match_lct(theta):
    t = tr.make_frft(theta)
    assert idt.frft_coefficients(theta).max_difference(idt.lct_coefficients(t)) <= 1e-12


@pytest.mark.parametrize("angles", [(0.2, 1.0, 0.4), (-0.7, 2.0, 1.3), (1.1, 0.5, -2.0)])
def test_versor_coefficients_agree_except_frequency_side(angles):
    t = tr.make_versor(angles)
    lct, ang = idt.lct_coefficients(t), idt.versor_coefficients(*angles)
    assert lct.max_difference(ang, FIELDS_EXCEPT_FREQ) <= 1e-12
    # angle-form frequency constant differs unless xi2 is a multiple of pi
    assert abs(lct.conv_freq - ang.conv_freq) > 1e-3


def test_versor_frequency_constants_agree_for_real_xi2():
    t = tr.make_versor((0.3, 1.2, math.pi))
    assert idt.lct_coefficients(t).max_difference(idt.versor_coefficients(0.3, 1.2, math.pi)) <= 1e-12


def test_coefficients_dispatch():
    with pytest.raises(ValueError):
        idt.coefficients(FRFT, "other")
    with pytest.raises(NotDegenerate):
        idt.lct_coefficients(tr.make_frft(0.0))


def test_shift_checks():
    assert idt.check_shift_input(FRFT, F, 0.4).verdict == idt.PASS
    assert idt.check_shift_output(FRFT, F, -0.3).verdict == idt.PASS


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_derivative_checks(n):
    assert idt.check_derivative_input(FRFT, F, n).residual <= idt.tolerance("deriv-in", n)
    assert idt.check_derivative_output(FRFT, F, n).residual <= idt.tolerance("deriv-out", n)


def test_derivative_output_finite_difference():
    r = idt.check_derivative_output(FRFT, F, 2, method="fd")
    assert r.verdict == idt.PASS
    with pytest.raises(ValueError):
        idt.check_derivative_output(FRFT, F, 4)


def test_parseval_real_and_complex():
    assert idt.check_parseval(FRFT, F, G).verdict == idt.PASS
    r = idt.check_parseval(tr.make_versor((0.2, 1.0, 0.4)), F, G)
    assert r.verdict == idt.REPORT_ONLY


def test_parseval_divergent_is_report_only():
    t = tr.make_frac_laplace(math.pi / 4)
    f = GaussianChirp(1, 2.0)
    r = idt.check_parseval(t, f, f)
    assert r.verdict == idt.REPORT_ONLY and r.residual is None
    json.dumps(r.to_json(), allow_nan=False)


@pytest.mark.parametrize("direction", ["time", "freq"])
def test_convolution_and_correlation_frft(direction):
    assert idt.check_convolution(FRFT, F, G, direction).verdict == idt.PASS
    assert idt.check_crosscorrelation(FRFT, F, G, direction).verdict == idt.PASS


def test_correlation_on_real_versor():
    # real matrix entries: the correlation identities hold
    t = tr.make_versor((math.pi, 1.0, math.pi))
    assert t.matrix.is_real()
    assert idt.check_crosscorrelation(t, F, G, "time").verdict == idt.PASS


def test_correlation_on_complex_versor_fails():
    # with complex d/b the conjugated side picks up |k(u)|^-2; documented failure
    t = tr.make_versor((0.2, 1.0, 0.4))
    assert idt.check_crosscorrelation(t, F, G, "time").verdict == idt.FAIL


def test_versor_frequency_convolution_constant():
    t = tr.make_versor((0.2, 1.0, 0.4))
    f, g = GaussianChirp(1, 1.5, 0.1), GaussianChirp(1, 1.8, -0.1)
    assert idt.check_convolution(t, f, g, "freq", formulas="lct").verdict == idt.PASS
    assert idt.check_convolution(t, f, g, "freq", formulas="angles").verdict == idt.FAIL


def test_bad_direction():
    with pytest.raises(ValueError):
        idt.check_convolution(FRFT, F, G, "sideways")


def test_nonconvergent_input():
    with pytest.raises(NonConvergent):
        idt.check_shift_input(tr.make_frac_laplace(math.pi / 4), GaussianChirp(1, 0.5), 0.1)


def test_inadmissible_auxiliary():
    # K_{pi/4} image of sigma = 2 grows, so the frequency side cannot be formed
    t = tr.make_frac_laplace(math.pi / 4)
    f = GaussianChirp(1, 2.0)
    with pytest.raises(InadmissibleAuxiliary):
        idt.check_convolution(t, f, f, "freq")


def test_draw_inputs_deterministic():
    a = idt.draw_inputs(FRFT, "conv-freq", 3)
    b = idt.draw_inputs(FRFT, "conv-freq", 3)
    assert a == b
    assert idt.draw_inputs(FRFT, "shift-in", 3) != a
    with pytest.raises(NearDegenerate):
        idt.draw_inputs(tr.make_frft(1e-4), "shift-in", 0)


def test_run_suite_order_and_json():
    reports = idt.run_suite(FRFT, ["shift-out", "shift-in"], seed=1)
    assert [r.identity for r in reports] == ["shift-in", "shift-out"]
    payload = [r.to_json() for r in reports]
    assert set(payload[0]) >= {"identity", "params", "residual", "tolerance", "verdict"}
    assert json.dumps(payload) == json.dumps([r.to_json() for r in idt.run_suite(FRFT, ["shift-in", "shift-out"], seed=1)])
    with pytest.raises(ValueError):
        idt.run_identity("nope", FRFT)


def test_residual_helper():
    assert idt.residual([0, 0], [0, 0]) == 0.0
    assert idt.residual([1, 2], [1, 2.2]) == pytest.approx(0.2 / 2.2)


@pytest.mark.parametrize("identity", ["shift-in", "shift-out", "deriv-in", "deriv-out", "conv-time", "corr-freq"])
def test_frft_residuals_same_under_both_formula_sets(identity):
    t = tr.make_frft(2 * math.pi / 3)
    a = idt.run_identity(identity, t, seed=2, formulas="lct")
    b = idt.run_identity(identity, t, seed=2, formulas="angles")
    assert abs(a.residual - b.residual) <= 1e-12


def test_versor_residuals_same_except_frequency_side():
    t = tr.make_versor((0.2, 1.0, 0.4))
    for identity in ("shift-in", "shift-out", "deriv-in", "deriv-out", "conv-time"):
        a = idt.run_identity(identity, t, seed=2, formulas="lct")
        b = idt.run_identity(identity, t, seed=2, formulas="angles")
        assert abs(a.residual - b.residual) <= 1e-12


def test_shift_residual_independent_of_oversample():
    from lctkit.engine import QuadratureConfig

    a = idt.check_shift_input(FRFT, F, 0.4)
    b = idt.check_shift_input(FRFT, F, 0.4, cfg=QuadratureConfig(oversample=16))
    assert abs(a.residual - b.residual) <= 1e-8


def test_plancherel_real_matrices():
    rng = np.random.default_rng(20)
    t = tr.make_raw(Sl2cMatrix(0.8, 0.6, -0.5, 0.875))
    for _ in range(20):
        f, g = idt.draw_chirp(rng), idt.draw_chirp(rng)
        assert idt.check_parseval(t, f, g).residual <= 1e-6


def test_classical_correlation_theorem():
    r = idt.check_crosscorrelation(tr.make_frft(math.pi / 2), F, G, "time")
    assert r.residual <= 1e-5


def test_autocorrelation_at_zero_is_norm():
    from lctkit.engine import integrate_real_line
    from lctkit.signals import correlate_chirps

    norm2 = integrate_real_line(F * F.conj())
    assert abs(correlate_chirps(F, F)(0.0) - norm2) <= 1e-6

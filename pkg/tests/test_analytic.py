import numpy as np
import pytest

from jcrevival.analytic import (
    AnalyticParams,
    VALIDITY_ALPHA,
    analytic_concurrence,
    peak_height,
    q_of_t,
    revival_center,
    saddle_integral,
)

from oracles import saddle_direct_sum


def test_params_validation():
    AnalyticParams(alpha=10.0)
    with pytest.raises(ValueError):
        AnalyticParams(alpha=0.0)
    with pytest.raises(ValueError):
        AnalyticParams(alpha=5.0, k_window=0)


def test_domain_flag():
    assert AnalyticParams(alpha=5.0).out_of_domain
    assert not AnalyticParams(alpha=VALIDITY_ALPHA).out_of_domain


def test_saddle_at_tau_zero():
    assert saddle_integral(0.0, 10.0) == 1.0 + 0.0j


def test_saddle_modulus_is_gaussian():
    for tau in (10.0, 50.0, 120.0):
        expected = np.exp(-(tau * tau) / (32.0 * 10.0**4))
        assert abs(abs(saddle_integral(tau, 10.0)) - expected) < 1e-15


@pytest.mark.parametrize("alpha,tol", [(10.0, 0.03), (5.0, 0.07)])
def test_saddle_against_direct_sum(alpha, tol):
    n_max = 6 * int(alpha * alpha) + 20
    for tau in np.linspace(0.0, 150.0, 151):
        ref = saddle_direct_sum(float(tau), alpha, n_max)
        assert abs(saddle_integral(float(tau), alpha) - ref) < tol


def test_revival_centers():
    assert abs(revival_center(1, 10.0) - 20.0 * np.pi) < 1e-12
    assert abs(revival_center(3, 5.0) - 30.0 * np.pi) < 1e-12
    with pytest.raises(ValueError):
        revival_center(0, 10.0)


def test_q_at_origin():
    # the closed form starts from 1/4, not the exact 1/2; the bracket is
    # exp(0) - 1 + exp(0) = 1 and the revival train contributes nothing
    p = AnalyticParams(alpha=10.0)
    assert abs(q_of_t(0.0, p) - 0.25) < 1e-6
    assert abs(analytic_concurrence(0.0, p) - 0.5) < 1e-5


@pytest.mark.parametrize("alpha", [7.0, 10.0])
def test_k_window_independence(alpha):
    narrow = AnalyticParams(alpha=alpha, k_window=1)
    wide = AnalyticParams(alpha=alpha, k_window=6)
    for tau in np.linspace(0.0, 25.0 * alpha, 200):
        assert abs(q_of_t(float(tau), narrow) - q_of_t(float(tau), wide)) < 1e-10


def test_k_window_near_independence_small_alpha():
    # neighbouring lobes overlap more at alpha=5; the residual window
    # dependence is finite but tiny
    narrow = AnalyticParams(alpha=5.0, k_window=1)
    wide = AnalyticParams(alpha=5.0, k_window=6)
    for tau in np.linspace(0.0, 125.0, 200):
        assert abs(q_of_t(float(tau), narrow) - q_of_t(float(tau), wide)) < 1e-5


def test_concurrence_clamped_nonnegative():
    p = AnalyticParams(alpha=10.0)
    taus = np.linspace(0.0, 200.0, 801)
    vals = np.array([analytic_concurrence(float(t), p) for t in taus])
    assert np.all(vals >= 0.0)
    assert np.all(vals <= 1.0)
    # long collapse intervals sit exactly at zero
    sel = (taus > 90.0) & (taus < 110.0)
    assert np.max(vals[sel]) == 0.0


def test_peak_heights_alpha_10():
    h1 = peak_height(1, 10.0)
    h2 = peak_height(2, 10.0)
    h3 = peak_height(3, 10.0)
    assert abs(h1.value - 0.30612) < 1e-4
    assert abs(h2.value - 0.11220) < 1e-4
    assert abs(h3.value - 0.00653) < 1e-4
    assert not h1.extinguished


def test_peak_extinguished_far_out():
    h = peak_height(8, 10.0)
    assert h.extinguished
    assert h.value == 0.0
    assert h.raw < 0.0


def test_peaks_decrease_with_k():
    vals = [peak_height(k, 10.0).value for k in range(1, 4)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert peak_height(4, 10.0).extinguished


def test_revival_lobe_peaks_near_centers():
    p = AnalyticParams(alpha=10.0)
    for k in (1, 2):
        center = revival_center(k, 10.0)
        taus = np.linspace(center - 8.0, center + 8.0, 1601)
        vals = [analytic_concurrence(float(t), p) for t in taus]
        best = taus[int(np.argmax(vals))]
        assert abs(best - center) < 1.0
        assert abs(max(vals) - peak_height(k, 10.0).value) < 0.02

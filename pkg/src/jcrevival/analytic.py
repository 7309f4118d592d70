"""Closed-form saddle-point results for the revival structure.

For moderately strong driving the doubly-truncated series collapse to a
compact formula for Q(tau) = |z| - sqrt(a d): a slowly decaying bracket
plus a train of Gaussian revival lobes centred at tau = 2 pi k alpha,
each modulated at the Rabi scale cos(4 alpha tau).  The analytic
concurrence is 2 max{0, Q}.  Validity is claimed for alpha >= 10;
smaller alpha is allowed but flagged.
"""

from dataclasses import dataclass

import numpy as np

VALIDITY_ALPHA = 10.0


@dataclass(frozen=True)
class AnalyticParams:
    """Coherent amplitude and half-width of the revival-index window."""

    alpha: float
    k_window: int = 2

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive for the analytic formulas")
        if self.k_window < 1:
            raise ValueError("k_window must be at least 1")

    @property
    def out_of_domain(self) -> bool:
        return self.alpha < VALIDITY_ALPHA


@dataclass(frozen=True)
class PeakHeight:
    """Predicted concurrence height of the k-th revival.

    `raw` is the unclamped bracket value; `value` is clamped at zero and
    `extinguished` marks revivals the envelope has killed.
    """

    value: float
    raw: float
    extinguished: bool


def saddle_integral(tau: float, alpha: float) -> complex:
    """Saddle-point value of the Poisson-weighted phase sum.

    exp(-tau^2 / 32 alpha^4) * exp(i tau / 2 alpha).
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    decay = np.exp(-(tau * tau) / (32.0 * alpha**4))
    return complex(decay * np.exp(1j * tau / (2.0 * alpha)))


def revival_center(k: int, alpha: float) -> float:
    """Centre of the k-th revival lobe, tau = 2 pi k alpha."""
    if k < 1:
        raise ValueError("revival index k starts at 1")
    return 2.0 * np.pi * k * alpha


def q_of_t(tau: float, params: AnalyticParams) -> float:
    """Analytic Q(tau) = |z| - sqrt(a d).

    The revival sum is restricted to indices within k_window of
    k0 = round(tau / 2 pi alpha); contributions from farther lobes decay
    exponentially with index distance.
    """
    alpha = params.alpha
    bracket = (
        np.exp(-(tau * tau) / (16.0 * alpha**4))
        - 1.0
        + np.exp(-(tau * tau) / 2.0) * np.cos(4.0 * alpha * tau)
    )
    k0 = int(round(tau / (2.0 * np.pi * alpha)))
    k_lo = max(1, k0 - params.k_window)
    k_hi = k0 + params.k_window
    total = 0.25 * bracket
    for k in range(k_lo, k_hi + 1):
        offset = tau - 2.0 * np.pi * k * alpha
        width = 1.0 + np.pi * np.pi * k * k
        total += (
            (1.0 / (2.0 * np.pi * k))
            * np.exp(-2.0 * offset * offset / width)
            * np.cos(4.0 * alpha * offset)
        )
    return float(total)


def analytic_concurrence(tau: float, params: AnalyticParams) -> float:
    """2 max{0, Q(tau)} from the saddle-point formula."""
    return 2.0 * max(0.0, q_of_t(tau, params))


def peak_height(k: int, alpha: float) -> PeakHeight:
    """Envelope prediction for the k-th revival's concurrence height.

    H_k = 1/2 [ 2/(pi k) - 1 + exp(-tau_k^2 / 16 alpha^4) ] evaluated at
    the centre tau_k = 2 pi k alpha.  Negative values mean the revival
    is extinguished and are clamped to zero.
    """
    tau_k = revival_center(k, alpha)
    raw = 0.5 * (
        2.0 / (np.pi * k) - 1.0 + np.exp(-(tau_k * tau_k) / (16.0 * alpha**4))
    )
    raw = float(raw)
    return PeakHeight(value=max(0.0, raw), raw=raw, extinguished=raw < 0.0)

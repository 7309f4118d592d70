"""Coherent-state amplitudes on a truncated Fock space.

A coherent state |alpha> has Poisson photon statistics with mean
alpha**2.  All dynamics here live on a finite photon ladder, so the
state is truncated once the discarded Poisson tail mass drops below a
tolerance, then renormalized so downstream trace checks are exact.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import stats
from scipy.special import gammaln

# Smallest photon ladder we ever use, even for the vacuum.
TRUNCATION_FLOOR = 4

DEFAULT_TAIL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Physical rates of the two-cavity model.

    Only the dimensionless time tau = g*t enters the dynamics; the
    frequencies are kept for bookkeeping and must be exactly resonant.
    """

    g: float = 1.0
    omega0: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if self.g <= 0:
            raise ValueError(f"coupling g must be positive, got {self.g}")
        if self.omega != self.omega0:
            raise ValueError(
                "only exact resonance is supported (omega must equal omega0)"
            )


@dataclass(frozen=True)
class CoherentCoefficients:
    """Truncated amplitude vector A_0..A_{n_max} of a coherent state."""

    alpha: float
    n_max: int
    coeffs: np.ndarray = field(repr=False)
    tail_mass: float = 0.0

    def __post_init__(self):
        self.coeffs.flags.writeable = False


def choose_truncation(alpha: float, tail_tolerance: float = DEFAULT_TAIL_TOLERANCE) -> int:
    """Smallest n_max whose Poisson tail mass (mean alpha**2) is below tolerance.

    Never returns less than TRUNCATION_FLOOR.
    """
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    if not 0 < tail_tolerance < 1:
        raise ValueError("tail_tolerance must lie in (0, 1)")
    mean = alpha * alpha
    n = TRUNCATION_FLOOR
    # stats.poisson.sf(n, mean) = P(N > n), monotone decreasing in n
    while stats.poisson.sf(n, mean) >= tail_tolerance:
        n += 1
    return n


def coherent_coefficients(
    alpha: float, n_max: int, renormalize: bool = True
) -> CoherentCoefficients:
    """Amplitudes A_n = exp(-alpha^2/2) alpha^n / sqrt(n!) for n <= n_max.

    Computed in log space so large n_max (~200) does not overflow n!.
    """
    if alpha < 0:
        raise ValueError("alpha must be non-negative (real positive convention)")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    n = np.arange(n_max + 1)
    if alpha == 0.0:
        coeffs = np.zeros(n_max + 1)
        coeffs[0] = 1.0
        tail = 0.0
    else:
        log_a = -0.5 * alpha * alpha + n * np.log(alpha) - 0.5 * gammaln(n + 1.0)
        coeffs = np.exp(log_a)
        total = float(np.sum(coeffs * coeffs))
        tail = max(0.0, 1.0 - total)
        if renormalize:
            coeffs = coeffs / np.sqrt(total)
    return CoherentCoefficients(alpha=alpha, n_max=n_max, coeffs=coeffs, tail_mass=tail)

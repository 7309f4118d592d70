"""Reduced two-qubit density matrix and its X-form elements.

Tracing both photon modes out of the joint pure state leaves a 4x4
matrix in the basis (|ee>, |eg>, |ge>, |gg>).  Under coherent driving
it is generically full, but projecting onto the X pattern (diagonal +
anti-diagonal) loses very little: the discarded magnitudes are recorded
so that loss is measurable.  The X elements z, a, d also admit an
independent evaluation as doubly-truncated series, used as a cross
check on the evolution/trace pipeline.
"""

from dataclasses import dataclass, field

import numpy as np

from .dynamics import JointState
from .fock import coherent_coefficients

# Flat indices into the (ee, eg, ge, gg) basis.
EE, EG, GE, GG = 0, 1, 2, 3


@dataclass(frozen=True)
class TwoQubitDensity:
    """4x4 reduced density matrix of the two atoms at time tau."""

    rho: np.ndarray = field(repr=False)
    tau: float = 0.0

    def __post_init__(self):
        self.rho.flags.writeable = False

    @property
    def trace_error(self) -> float:
        return abs(float(np.real(np.trace(self.rho))) - 1.0)

    @property
    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.rho - self.rho.conj().T)))


@dataclass(frozen=True)
class XState:
    """The seven X-pattern scalars of a two-qubit density matrix.

    Populations a..d sit on the diagonal; z couples |eg> and |ge|, w
    couples |ee> and |gg>.  max_offx is the largest magnitude discarded
    by the projection (zero for a matrix already in X form).
    """

    a: float
    b: float
    c: float
    d: float
    z: complex
    w: complex
    max_offx: float = 0.0

    def embed(self) -> np.ndarray:
        """The X-form 4x4 matrix holding exactly these seven elements."""
        rho = np.zeros((4, 4), dtype=complex)
        rho[EE, EE], rho[EG, EG], rho[GE, GE], rho[GG, GG] = self.a, self.b, self.c, self.d
        rho[EG, GE], rho[GE, EG] = self.z, np.conj(self.z)
        rho[EE, GG], rho[GG, EE] = self.w, np.conj(self.w)
        return rho


def partial_trace(state: JointState) -> TwoQubitDensity:
    """Trace out both photon modes of a joint pure state."""
    flat = state.psi.reshape(4, -1)
    rho = flat @ flat.conj().T
    return TwoQubitDensity(rho=rho, tau=state.tau)


def x_project(density: TwoQubitDensity) -> XState:
    """Keep the diagonal and anti-diagonal of rho, zeroing everything else.

    Idempotent and trace preserving.  The largest discarded magnitude is
    recorded so the quality of the approximation stays auditable.
    """
    rho = density.rho
    mask = np.ones((4, 4), dtype=bool)
    mask[np.arange(4), np.arange(4)] = False
    mask[np.arange(4), np.arange(4)[::-1]] = False
    max_offx = float(np.max(np.abs(rho[mask]))) if np.any(mask) else 0.0
    return XState(
        a=float(np.real(rho[EE, EE])),
        b=float(np.real(rho[EG, EG])),
        c=float(np.real(rho[GE, GE])),
        d=float(np.real(rho[GG, GG])),
        z=complex(rho[EG, GE]),
        w=complex(rho[EE, GG]),
        max_offx=max_offx,
    )


def x_elements_series(alpha: float, tau: float, n_max: int):
    """Series evaluation of the X elements (z, a, d).

    Each four-term double sum factorizes into products of single sums
    over the truncated coherent amplitudes (amplitudes with index outside
    0..n_max are zero), so the cost is linear in n_max.  Returns the
    tuple (z, a, d) with z real for the symmetric initial condition.
    """
    coeffs = coherent_coefficients(alpha, n_max).coeffs
    # padded two slots on both ends so A_{n-2}..A_{n+2} never index out
    A = np.zeros(n_max + 5)
    A[2 : n_max + 3] = coeffs

    k = np.arange(n_max + 3)
    C = np.cos(tau * np.sqrt(k))
    S = np.sin(tau * np.sqrt(k))

    def term(shift_left: int, shift_right: int, f_left: np.ndarray, f_right: np.ndarray):
        """sum over n of A_{n+shift_left} A_{n+shift_right} f_left[n] f_right[n]."""
        n = np.arange(n_max + 1)
        return float(
            np.sum(A[n + 2 + shift_left] * A[n + 2 + shift_right] * f_left[n] * f_right[n])
        )

    n = np.arange(n_max + 1)

    # z: 1/2 [ (sum A_n^2 C_n C_{n+1})^2
    #          - (sum A_n A_{n-1} S_n C_{n+1}) (sum A_m A_{m+1} C_m S_{m+1})
    #          + (sum A_n A_{n-2} S_n S_{n-1}) (sum A_m A_{m+2} S_{m+1} S_{m+2})
    #          - (sum A_n A_{n-1} S_n C_{n-1}) (sum A_m A_{m+1} S_{m+1} C_{m+2}) ]
    s_diag = term(0, 0, C[n], C[n + 1])
    u1 = term(0, -1, S[n], C[n + 1])
    v1 = term(0, 1, C[n], S[n + 1])
    p2 = term(0, -2, S[n], np.concatenate(([0.0], S[n[1:] - 1])))
    q2 = term(0, 2, S[n + 1], S[n + 2])
    u3 = term(0, -1, S[n], np.concatenate(([0.0], C[n[1:] - 1])))
    v3 = term(0, 1, S[n + 1], C[n + 2])
    z = 0.5 * (s_diag * s_diag - u1 * v1 + p2 * q2 - u3 * v3)

    # shared cross sums of the a and d series
    cross_up = term(0, 1, S[n + 1], C[n + 1])  # sum A_n A_{n+1} S_{n+1} C_{n+1}
    cross_dn = term(0, -1, S[n], C[n])  # sum A_n A_{n-1} S_n C_n
    cross = cross_up * cross_dn

    a_val = 0.5 * (
        term(0, 0, C[n + 1], C[n + 1]) * term(0, 0, S[n], S[n])
        + cross
        + term(0, 0, S[n], S[n]) * term(0, 0, C[n + 1], C[n + 1])
        + cross
    )
    d_val = 0.5 * (
        term(0, 0, S[n + 1], S[n + 1]) * term(0, 0, C[n], C[n])
        + cross
        + term(0, 0, C[n], C[n]) * term(0, 0, S[n + 1], S[n + 1])
        + cross
    )
    return z, a_val, d_val

"""Exact interaction-picture evolution of two remote Jaynes-Cummings sites.

Each atom sits in its own lossless cavity and exchanges one excitation
with the local mode at resonance.  The single-site propagator (with the
paper-convention sign exp(+i H_I t)) acts as

    |e;n> -> cos(tau sqrt(n+1)) |e;n> - i sin(tau sqrt(n+1)) |g;n+1>
    |g;n> -> cos(tau sqrt(n))   |g;n> - i sin(tau sqrt(n))   |e;n-1>

and the joint evolution is the tensor product of the two local
propagators applied to the t=0 state.
"""

from dataclasses import dataclass, field

import numpy as np

from .fock import CoherentCoefficients

EXCITED = 0
GROUND = 1

# Two-qubit amplitudes in basis order (|ee>, |eg>, |ge>, |gg>).
BELL_EG_GE = np.array([0.0, 1.0, 1.0, 0.0]) / np.sqrt(2.0)


@dataclass(frozen=True)
class JcCoefficients:
    """cos/sin pair of the n-photon Rabi rotation at dimensionless time tau."""

    c: float
    s: float


@dataclass(frozen=True)
class JointState:
    """Pure state psi[s_A, s_B, n, m] of both atoms and both cavity modes.

    Photon axes run one slot past the field truncation so the emission
    channel n_max -> n_max + 1 is always representable.
    """

    psi: np.ndarray = field(repr=False)
    tau: float = 0.0
    n_max_a: int = 0
    n_max_b: int = 0

    def __post_init__(self):
        self.psi.flags.writeable = False

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.psi) ** 2))


def jc_coefficients(n: int, tau: float) -> JcCoefficients:
    """Rotation coefficients c = cos(tau sqrt(n)), s = sin(tau sqrt(n))."""
    if n < 0:
        raise ValueError("photon number must be non-negative")
    root = np.sqrt(n)
    return JcCoefficients(c=float(np.cos(tau * root)), s=float(np.sin(tau * root)))


def single_site_propagate(level: int, n: int, tau: float):
    """Two-branch expansion of one atom-cavity basis state.

    Returns a list of (level, photon_number, amplitude).  The de-excited
    branch of |g;0> is dropped (its amplitude multiplies sin(0) = 0).
    """
    if n < 0:
        raise ValueError("photon number must be non-negative")
    if level == EXCITED:
        rot = jc_coefficients(n + 1, tau)
        return [(EXCITED, n, complex(rot.c)), (GROUND, n + 1, -1j * rot.s)]
    if level == GROUND:
        if n == 0:
            return [(GROUND, 0, 1.0 + 0.0j)]
        rot = jc_coefficients(n, tau)
        return [(GROUND, n, complex(rot.c)), (EXCITED, n - 1, -1j * rot.s)]
    raise ValueError(f"unknown atomic level {level!r}")


def _site_branches(coeffs: np.ndarray, tau: float) -> np.ndarray:
    """Propagated field amplitudes for an atom prepared in e or g.

    branches[start, out] is the photon amplitude vector (length n_max+2)
    of the |out>-level component when the site starts in level `start`
    with the field amplitude vector `coeffs`.
    """
    n_max = len(coeffs) - 1
    n = np.arange(n_max + 1)
    size = n_max + 2
    branches = np.zeros((2, 2, size), dtype=complex)
    c_up = np.cos(tau * np.sqrt(n + 1.0))
    s_up = np.sin(tau * np.sqrt(n + 1.0))
    c_dn = np.cos(tau * np.sqrt(n))
    s_dn = np.sin(tau * np.sqrt(n))
    # start excited: stay |e;n> or emit into |g;n+1>
    branches[EXCITED, EXCITED, : n_max + 1] = coeffs * c_up
    branches[EXCITED, GROUND, 1 : n_max + 2] = -1j * coeffs * s_up
    # start ground: stay |g;n> or absorb into |e;n-1> (absent at n=0)
    branches[GROUND, GROUND, : n_max + 1] = coeffs * c_dn
    branches[GROUND, EXCITED, :n_max] = -1j * coeffs[1:] * s_dn[1:]
    return branches


def evolve_joint(
    bell: np.ndarray,
    field_a: CoherentCoefficients,
    field_b: CoherentCoefficients,
    tau: float,
) -> JointState:
    """Evolve (two-qubit state) x |alpha_A> x |alpha_B> to dimensionless time tau.

    The initial two-qubit amplitudes are given in basis (ee, eg, ge, gg).
    Each product branch |s_A s_B; n, m> evolves locally at both sites, so
    the joint state is a sum of outer products of single-site branches.
    """
    bell = np.asarray(bell, dtype=complex).reshape(4)
    branches_a = _site_branches(field_a.coeffs, tau)
    branches_b = _site_branches(field_b.coeffs, tau)
    size_a = field_a.n_max + 2
    size_b = field_b.n_max + 2
    psi = np.zeros((2, 2, size_a, size_b), dtype=complex)
    for start_a in (EXCITED, GROUND):
        for start_b in (EXCITED, GROUND):
            amp = bell[2 * start_a + start_b]
            if amp == 0:
                continue
            for out_a in (EXCITED, GROUND):
                vec_a = branches_a[start_a, out_a]
                for out_b in (EXCITED, GROUND):
                    vec_b = branches_b[start_b, out_b]
                    psi[out_a, out_b] += amp * np.outer(vec_a, vec_b)
    return JointState(
        psi=psi, tau=tau, n_max_a=field_a.n_max + 1, n_max_b=field_b.n_max + 1
    )

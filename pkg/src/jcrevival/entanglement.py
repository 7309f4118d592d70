"""Concurrence of a two-qubit state.

Two routes are provided: the general spin-flip construction (valid for
any 4x4 density matrix, used as the exact reference) and the closed-form
shortcut for X-pattern matrices.  The spin-flip route needs eigenvalues
of a non-Hermitian 4x4 product, computed here by a self-contained
Hessenberg + shifted-QR iteration so no general eigensolver dependency
is required.
"""

from dataclasses import dataclass

import numpy as np

from .density import TwoQubitDensity, XState

# sigma_y (x) sigma_y in the (ee, eg, ge, gg) basis; real anti-diagonal.
SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)

_EIG_RESIDUAL_TOL = 1e-8
_QR_MAX_SWEEPS = 200


class InvalidStateError(ValueError):
    """Input violates density-matrix / X-state positivity constraints."""


class NumericalFailureError(RuntimeError):
    """An eigenvalue computation failed to converge or left its contract."""


@dataclass(frozen=True)
class ConcurrenceValue:
    """Concurrence plus the two X-branch diagnostics when available.

    branch_z = |z| - sqrt(a d) is the published shortcut branch;
    branch_w = |w| - sqrt(b c) is the partner branch, tracked to verify
    it never dominates for this initial condition.
    """

    value: float
    branch_z: float | None = None
    branch_w: float | None = None


def _hessenberg(matrix: np.ndarray) -> np.ndarray:
    """Reduce to upper Hessenberg form by complex Householder reflections."""
    h = np.array(matrix, dtype=complex)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k]
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        v = x.copy()
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v[0] += phase * norm_x
        v /= np.linalg.norm(v)
        h[k + 1 :, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1 :, k:])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v.conj())
    return h


def _eig_2x2(block: np.ndarray):
    """Both eigenvalues of a 2x2 complex block, closed form."""
    a, b = block[0, 0], block[0, 1]
    c, d = block[1, 0], block[1, 1]
    mean = 0.5 * (a + d)
    disc = np.sqrt(0.25 * (a - d) ** 2 + b * c + 0j)
    return mean + disc, mean - disc


def _wilkinson_shift(block: np.ndarray) -> complex:
    lam1, lam2 = _eig_2x2(block)
    corner = block[1, 1]
    return lam1 if abs(lam1 - corner) <= abs(lam2 - corner) else lam2


def eigenvalues_4x4(matrix: np.ndarray) -> np.ndarray:
    """All four eigenvalues of a complex 4x4 matrix.

    Hessenberg reduction followed by Wilkinson-shifted QR sweeps with
    deflation; deterministic and backward stable for entries of order
    unity.  Raises NumericalFailureError if the sweep budget is spent.
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    if not np.all(np.isfinite(matrix)):
        raise ValueError("matrix entries must be finite")
    h = _hessenberg(matrix)
    scale = max(float(np.max(np.abs(h))), 1.0)
    tiny = 1e-15
    eigs: list[complex] = []
    end = 4  # active block is h[:end, :end]
    for _ in range(_QR_MAX_SWEEPS):
        # deflate converged trailing eigenvalues
        while end > 1 and abs(h[end - 1, end - 2]) <= tiny * scale + 1e-15 * (
            abs(h[end - 2, end - 2]) + abs(h[end - 1, end - 1])
        ):
            eigs.append(complex(h[end - 1, end - 1]))
            end -= 1
        if end == 1:
            eigs.append(complex(h[0, 0]))
            end = 0
        if end == 0:
            break
        if end == 2:
            lam1, lam2 = _eig_2x2(h[:2, :2])
            eigs.extend([complex(lam2), complex(lam1)])
            end = 0
            break
        # one shifted QR sweep on the active block via Givens rotations
        mu = _wilkinson_shift(h[end - 2 : end, end - 2 : end])
        block = h[:end, :end] - mu * np.eye(end)
        rotations = []
        for i in range(end - 1):
            f, g = block[i, i], block[i + 1, i]
            r = np.hypot(abs(f), abs(g))
            if r == 0.0:
                c, s = 1.0, 0.0 + 0.0j
            elif f == 0:
                c, s = 0.0, g.conjugate() / r
            else:
                c = abs(f) / r
                s = (f / abs(f)) * g.conjugate() / r
            rotations.append((c, s))
            row_i = block[i, :].copy()
            row_j = block[i + 1, :].copy()
            block[i, :] = c * row_i + s * row_j
            block[i + 1, :] = -np.conj(s) * row_i + c * row_j
        for i, (c, s) in enumerate(rotations):
            col_i = block[:, i].copy()
            col_j = block[:, i + 1].copy()
            block[:, i] = c * col_i + np.conj(s) * col_j
            block[:, i + 1] = -s * col_i + c * col_j
        h[:end, :end] = block + mu * np.eye(end)
    if end != 0:
        raise NumericalFailureError("QR iteration did not converge on a 4x4 matrix")
    return np.array(eigs[::-1])


def concurrence_x(x: XState) -> ConcurrenceValue:
    """Closed-form concurrence of an X-pattern density matrix.

    C = 2 max{0, |z| - sqrt(a d), |w| - sqrt(b c)}.  The published
    shortcut keeps only the z branch; both are reported.
    """
    populations = (x.a, x.b, x.c, x.d)
    if min(populations) < -1e-8:
        raise InvalidStateError(f"negative population in X state: {populations}")
    a, b, c, d = (max(p, 0.0) for p in populations)
    branch_z = abs(x.z) - np.sqrt(a * d)
    branch_w = abs(x.w) - np.sqrt(b * c)
    value = 2.0 * max(0.0, branch_z, branch_w)
    return ConcurrenceValue(value=float(value), branch_z=float(branch_z), branch_w=float(branch_w))


def _psd_factor(rho: np.ndarray) -> np.ndarray:
    """Pivoted Cholesky-style factor P with rho = P P-dagger.

    Handles rank-deficient (pure or near-pure) matrices by stopping once
    the remaining diagonal mass is at rounding level.  A genuinely
    negative pivot means the input is not a density matrix.
    """
    residual = np.array(rho, dtype=complex)
    n = residual.shape[0]
    factor = np.zeros((n, n), dtype=complex)
    for k in range(n):
        diag = np.real(np.diag(residual))
        j = int(np.argmax(diag))
        pivot = diag[j]
        if pivot < -_EIG_RESIDUAL_TOL:
            raise InvalidStateError(f"density matrix has negative weight {pivot:.3e}")
        if pivot <= 1e-14:
            break
        column = residual[:, j] / np.sqrt(pivot)
        factor[:, k] = column
        residual -= np.outer(column, column.conj())
    return factor


def _singular_values_4x4(matrix: np.ndarray, max_sweeps: int = 60) -> np.ndarray:
    """Singular values of a complex 4x4 matrix by one-sided Jacobi.

    Columns are rotated pairwise until mutually orthogonal; the singular
    values are then the column norms.  Small singular values come out
    with absolute accuracy near machine epsilon (no squaring of the
    matrix is ever formed).
    """
    u = np.array(matrix, dtype=complex)
    n = u.shape[0]
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                x = u[:, p]
                y = u[:, q]
                hh = complex(np.vdot(x, y))
                norm_p = float(np.real(np.vdot(x, x)))
                norm_q = float(np.real(np.vdot(y, y)))
                if abs(hh) <= 1e-30 + 1e-13 * np.sqrt(norm_p * norm_q):
                    continue
                rotated = True
                phase = hh / abs(hh)
                zeta = (norm_p - norm_q) / (2.0 * abs(hh))
                if zeta == 0.0:
                    t = 1.0
                else:
                    t = -np.sign(zeta) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = phase * (t * c)
                xp = c * x - np.conj(s) * y
                yq = s * x + c * y
                u[:, p] = xp
                u[:, q] = yq
        if not rotated:
            break
    else:
        raise NumericalFailureError("one-sided Jacobi SVD did not converge")
    return np.sqrt(np.sum(np.abs(u) ** 2, axis=0))


def concurrence_wootters(density: TwoQubitDensity) -> ConcurrenceValue:
    """Spin-flip concurrence of an arbitrary two-qubit density matrix.

    C = max{0, l1 - l2 - l3 - l4}, the li being the decreasing square
    roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).  With
    rho = P P-dagger those li equal the singular values of P^T (sy x sy) P,
    which is how they are computed here: forming the spin-flip product
    explicitly would square the conditioning and bury the small li in
    O(sqrt(eps)) noise.
    """
    rho = density.rho
    if float(np.max(np.abs(rho - rho.conj().T))) > _EIG_RESIDUAL_TOL:
        raise InvalidStateError("density matrix is not Hermitian")
    factor = _psd_factor(rho)
    lams = np.sort(_singular_values_4x4(factor.T @ SPIN_FLIP @ factor))[::-1]
    value = max(0.0, float(lams[0] - lams[1] - lams[2] - lams[3]))
    return ConcurrenceValue(value=value)

"""Dense complex linear algebra for bipartite density matrices.

Matrices are plain 2-D numpy arrays (complex128, row-major). Math indices
in docstrings are 1-based, kets |k> run k = 1..d; storage is 0-based as
usual. A bipartite basis ket |np> sits at flat index (n-1)*db + (p-1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConvergenceError",
    "DensityMatrixCheck",
    "kron",
    "trace",
    "ptrace_a",
    "ptrace_b",
    "check_density",
    "eig_sym",
]

#: Off-diagonal convergence threshold of the Jacobi sweep, relative to the
#: Frobenius norm of the input.
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Raised when an iterative eigensolve exhausts its sweep budget."""


@dataclass(frozen=True)
class DensityMatrixCheck:
    """Validity report for a candidate density matrix (no thresholds applied)."""

    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    return a


def _as_square(a) -> np.ndarray:
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product; block (r,s) of the result is a[r,s]*b."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def trace(a) -> complex:
    """Sum of diagonal entries. Raises ValueError on non-square input."""
    return complex(np.trace(_as_square(a)))


def _as_bipartite(rho, da: int, db: int) -> np.ndarray:
    rho = _as_square(rho)
    if da < 1 or db < 1:
        raise ValueError(f"subsystem dimensions must be positive, got ({da}, {db})")
    if rho.shape[0] != da * db:
        raise ValueError(
            f"matrix of shape {rho.shape} does not match subsystem dims ({da}, {db})"
        )
    return rho


def ptrace_b(rho, da: int, db: int) -> np.ndarray:
    """Trace out subsystem b: rho_a[m,n] = sum_p rho[(m-1)db+p, (n-1)db+p]."""
    rho = _as_bipartite(rho, da, db)
    return np.trace(rho.reshape(da, db, da, db), axis1=1, axis2=3)


def ptrace_a(rho, da: int, db: int) -> np.ndarray:
    """Trace out subsystem a: rho_b[p,q] = sum_m rho[(m-1)db+p, (m-1)db+q]."""
    rho = _as_bipartite(rho, da, db)
    return np.trace(rho.reshape(da, db, da, db), axis1=0, axis2=2)


def check_density(rho) -> DensityMatrixCheck:
    """Report hermiticity defect, trace defect, and the smallest eigenvalue.

    The minimum eigenvalue is taken from the Hermitized input (rho+rho†)/2.
    Reporting only; callers decide what defects they tolerate.
    """
    rho = _as_square(rho)
    herm_defect = float(np.max(np.abs(rho - rho.conj().T)))
    trace_defect = float(abs(np.trace(rho) - 1.0))
    herm = (rho + rho.conj().T) / 2.0
    min_eig = float(np.linalg.eigvalsh(herm)[0])
    return DensityMatrixCheck(herm_defect, trace_defect, min_eig)


def eig_sym(m) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted non-increasing.

    Cyclic Jacobi rotations; converged when the off-diagonal Frobenius mass
    drops below JACOBI_TOL times the Frobenius norm of the input. Inputs with
    symmetry defect above 1e-10 are rejected; smaller defects are absorbed by
    symmetrizing as (m + m^t)/2.
    """
    m = _as_square(np.asarray(m, dtype=float))
    if np.max(np.abs(m - m.T), initial=0.0) > 1e-10:
        raise ValueError("matrix is not symmetric within 1e-10")
    a = (m + m.T) / 2.0
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()

    fro = np.linalg.norm(a)
    thresh = JACOBI_TOL * fro
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(JACOBI_MAX_SWEEPS):
        if np.linalg.norm(a[off_mask]) <= thresh:
            return np.sort(a.diagonal())[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-3 * thresh / n:
                    continue
                # Symmetric Schur rotation annihilating a[p,q].
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                a[:, [p, q]] = a[:, [p, q]] @ rot
                a[[p, q], :] = rot.T @ a[[p, q], :]
                a[p, q] = a[q, p] = 0.0
    if np.linalg.norm(a[off_mask]) <= thresh:
        return np.sort(a.diagonal())[::-1]
    raise ConvergenceError(
        f"Jacobi eigensolver did not converge in {JACOBI_MAX_SWEEPS} sweeps"
    )

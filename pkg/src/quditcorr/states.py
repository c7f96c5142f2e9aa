"""Constructors for test and benchmark states.

All randomized constructors are pure functions of their seed: they draw
from ``numpy.random.default_rng(seed)`` (the PCG64 generator), so a given
seed reproduces the same matrix bit for bit on any platform.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "swap_operator",
    "werner_state",
    "bell_state",
    "random_density",
    "random_cq_state",
]


def _check_dim(d: int) -> None:
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")


def swap_operator(d: int) -> np.ndarray:
    """Permutation F = sum_jk |jk><kj| on two d-dimensional systems; F|jk> = |kj>."""
    _check_dim(d)
    f = np.zeros((d * d, d * d), dtype=complex)
    for j in range(d):
        for k in range(d):
            f[j * d + k, k * d + j] = 1.0
    return f


def werner_state(d: int, w: float) -> np.ndarray:
    """Werner state ((d-w) I + (dw-1) F) / (d(d^2-1)) on d x d, for w in [-1, 1].

    Both marginals are maximally mixed, and Tr(F rho) = w.
    """
    _check_dim(d)
    if not -1.0 <= w <= 1.0:
        raise ValueError(f"Werner parameter must lie in [-1, 1], got {w}")
    norm = d * (d * d - 1)
    return ((d - w) * np.eye(d * d, dtype=complex) + (d * w - 1) * swap_operator(d)) / norm


def bell_state(d: int) -> np.ndarray:
    """Projector onto the maximally entangled ket sum_j |jj> / sqrt(d)."""
    _check_dim(d)
    psi = np.zeros(d * d, dtype=complex)
    psi[:: d + 1] = 1.0 / np.sqrt(d)
    return np.outer(psi, psi.conj())


def _ginibre_density(d: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_density(d: int, seed: int) -> np.ndarray:
    """Random full-rank density matrix G G†/Tr(G G†), G complex Gaussian."""
    _check_dim(d)
    return _ginibre_density(d, np.random.default_rng(seed))


def _haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    # QR of a Ginibre matrix; fixing the R-diagonal phases makes Q Haar.
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    ph = r.diagonal().copy()
    ph /= np.abs(ph)
    return q * ph


def random_cq_state(da: int, db: int, seed: int) -> np.ndarray:
    """Random classical-quantum state sum_j p_j |a_j><a_j| x rho_j.

    The |a_j> are the columns of a Haar-random unitary, p is a normalized
    uniform draw, and each rho_j is an independent Ginibre density matrix
    on side b. States of this form carry zero discord with respect to
    measurements on side a.
    """
    _check_dim(da)
    _check_dim(db)
    rng = np.random.default_rng(seed)
    basis = _haar_unitary(da, rng)
    p = rng.random(da)
    p /= p.sum()
    rho = np.zeros((da * db, da * db), dtype=complex)
    for j in range(da):
        proj = np.outer(basis[:, j], basis[:, j].conj())
        rho += p[j] * np.kron(proj, _ginibre_density(db, rng))
    return rho

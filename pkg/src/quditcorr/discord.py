"""Hilbert-Schmidt discord quantifiers for bipartite states.

The side-a quantifier is the eigenvalue sum

    D_hs = lambda_da + ... + lambda_(da^2-1),

where the lambda_j are the non-increasing eigenvalues of the symmetric
positive-semidefinite matrix

    Xi_a = (2/(da^2 db)) (a a^t + (2/db) C C^t)

built from the side-a Bloch vector and the correlation matrix. The
ameliorated quantifier divides by the purity of the opposite marginal,
D_hsa = D_hs / P(rho_b), which repairs the non-contractivity of the
Hilbert-Schmidt distance. Side b mirrors side a with C^t C in place of
C C^t. Both values vanish exactly on classical-quantum states
sum_j p_j |a_j><a_j| x rho_j.

The variational definition of the Hilbert-Schmidt discord (a minimum over
classical-quantum states) is not solved here; the closed-form eigenvalue
expression above is what this module computes and reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bloch import bloch_opt, corrmat_opt
from .linalg import eig_sym, ptrace_a, ptrace_b

__all__ = ["DiscordReport", "xi_matrix", "purity", "discord_hs", "discord_hsa"]


@dataclass(frozen=True)
class DiscordReport:
    """Eigenvalues of Xi plus both discord values for one side.

    hs_value is the eigenvalue tail sum (clamped at zero), purity_other the
    purity of the untouched marginal, and hsa_value = hs_value/purity_other.
    """

    side: str
    xi_eigenvalues: np.ndarray
    hs_value: float
    purity_other: float
    hsa_value: float


def purity(rho_s) -> float:
    """P(rho) = sum_jk |rho_jk|^2, which equals Tr(rho^2) for Hermitian rho."""
    rho_s = np.asarray(rho_s)
    if rho_s.ndim != 2 or rho_s.shape[0] != rho_s.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {np.shape(rho_s)}")
    return float(np.sum(np.abs(rho_s) ** 2))


def xi_matrix(a, c, d_other: int) -> np.ndarray:
    """Xi = (2/(d^2 d_other)) (a a^t + (2/d_other) C C^t) for the side owning a.

    For side b pass the side-b Bloch vector together with C transposed.
    """
    a = np.asarray(a, dtype=float).ravel()
    c = np.asarray(c, dtype=float)
    d = round(np.sqrt(a.size + 1))
    if d < 2 or d * d - 1 != a.size:
        raise ValueError(f"Bloch vector length {a.size} is not d^2-1 for any d >= 2")
    if d_other < 2:
        raise ValueError(f"opposite dimension must be >= 2, got {d_other}")
    if c.ndim != 2 or c.shape[0] != a.size:
        raise ValueError(f"correlation matrix shape {c.shape} does not match side dim {d}")
    return (2.0 / (d * d * d_other)) * (np.outer(a, a) + (2.0 / d_other) * (c @ c.T))


def _report(rho, da: int, db: int, side: str) -> DiscordReport:
    if side not in ("a", "b"):
        raise ValueError(f"side must be 'a' or 'b', got {side!r}")
    c = corrmat_opt(rho, da, db)
    if side == "a":
        vec = bloch_opt(ptrace_b(rho, da, db))
        xi = xi_matrix(vec, c, db)
        pur = purity(ptrace_a(rho, da, db))
        d_side = da
    else:
        vec = bloch_opt(ptrace_a(rho, da, db))
        xi = xi_matrix(vec, c.T, da)
        pur = purity(ptrace_b(rho, da, db))
        d_side = db
    lam = eig_sym(xi)
    # Tail sum over positions d_side..d_side^2-1 (1-based); noise can leave
    # it a hair negative, so clamp.
    hs = max(0.0, float(lam[d_side - 1 :].sum()))
    return DiscordReport(side, lam, hs, pur, hs / pur)


def discord_hs(rho, da: int, db: int, side: str = "a") -> DiscordReport:
    """Hilbert-Schmidt discord report for the given side; headline field hs_value."""
    return _report(rho, da, db, side)


def discord_hsa(rho, da: int, db: int, side: str = "a") -> DiscordReport:
    """Ameliorated Hilbert-Schmidt discord report; headline field hsa_value."""
    return _report(rho, da, db, side)

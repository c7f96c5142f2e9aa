"""Coherence (Bloch) vectors and correlation matrices of qudit states.

For a d-dimensional state rho_s the Bloch components are
s_j = (d/2) Tr(G_j rho_s); for a bipartite rho the correlation matrix is
c_jk = (da*db/4) Tr((G_j x G_k) rho). Components follow the flat index
order of :mod:`quditcorr.gellmann` (diagonal, symmetric, antisymmetric),
so a correlation matrix splits into nine blocks, one per group pair.

Every quantity comes in two forms. The naive form materializes each
generator (and each Kronecker product G_j x G_k) and evaluates the trace
by definition. The optimized form never builds an operator: each block is
assembled from density-matrix elements read through the bipartite flat map
|np> -> (n-1)*db + p, which drops the cost of the correlation matrix from
O(da^4 db^4) to O(da^2 db^2). Both forms agree to machine precision and
serve as mutual cross-checks.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .gellmann import gellmann_basis
from .linalg import ptrace_a, ptrace_b

__all__ = [
    "ReadCounter",
    "bloch_naive",
    "bloch_opt",
    "bloch_of_subsystem",
    "corrmat_naive",
    "corrmat_opt",
    "reconstruct",
]

# Largest imaginary residue tolerated when the naive path discards the
# imaginary part of a trace; larger values indicate a non-Hermitian input.
IMAG_TOL = 1e-10


class ReadCounter:
    """Tallies density-matrix element reads performed by the optimized paths."""

    def __init__(self):
        self.count = 0

    def add(self, n: int) -> None:
        self.count += int(n)


def _as_state(rho_s) -> np.ndarray:
    rho_s = np.asarray(rho_s)
    if rho_s.ndim != 2 or rho_s.shape[0] != rho_s.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {np.shape(rho_s)}")
    if rho_s.shape[0] < 2:
        raise ValueError("Bloch decomposition needs dimension >= 2")
    return rho_s


def _as_bipartite(rho, da: int, db: int) -> np.ndarray:
    rho = np.asarray(rho)
    if da < 2 or db < 2:
        raise ValueError(f"subsystem dimensions must be >= 2, got ({da}, {db})")
    if rho.shape != (da * db, da * db):
        raise ValueError(
            f"matrix of shape {np.shape(rho)} does not match subsystem dims ({da}, {db})"
        )
    return rho


def _dim_from_len(n: int) -> int:
    d = round(np.sqrt(n + 1))
    if d < 2 or d * d - 1 != n:
        raise ValueError(f"vector length {n} is not d^2-1 for any d >= 2")
    return d


@lru_cache(maxsize=None)
def _pairs(d: int):
    """Index pairs (k,l), k<l, 0-based, in lexicographic order."""
    kk, ll = np.triu_indices(d, 1)
    kk.setflags(write=False)
    ll.setflags(write=False)
    return kk, ll


@lru_cache(maxsize=None)
def _diag_weights(d: int) -> np.ndarray:
    """Row j-1 holds the diagonal-generator weights sqrt(2/(j(j+1)))*(1,..,1,-j,0,..)."""
    w = np.zeros((d - 1, d))
    for j in range(1, d):
        scale = np.sqrt(2.0 / (j * (j + 1)))
        w[j - 1, :j] = scale
        w[j - 1, j] = -j * scale
    w.setflags(write=False)
    return w


def bloch_naive(rho_s) -> np.ndarray:
    """Bloch vector via materialized generators: s_j = (d/2) Re Tr(G_j rho)."""
    rho_s = _as_state(rho_s)
    d = rho_s.shape[0]
    rho_t = rho_s.T
    comps = np.empty(d * d - 1)
    worst = 0.0
    for j, g in enumerate(gellmann_basis(d)):
        t = (g * rho_t).sum()
        worst = max(worst, abs(t.imag))
        comps[j] = 0.5 * d * t.real
    if worst > IMAG_TOL:
        raise ValueError(
            f"trace has imaginary residue {worst:.3e} > {IMAG_TOL}; input is not Hermitian"
        )
    return comps


def bloch_opt(rho_s) -> np.ndarray:
    """Bloch vector read directly from matrix elements, no generators built.

    Diagonal components are weighted sums of diagonal elements; the
    symmetric and antisymmetric components are d*Re<l|rho|k> and
    d*Im<l|rho|k> for k < l.
    """
    rho_s = _as_state(rho_s)
    d = rho_s.shape[0]
    kk, ll = _pairs(d)
    off = rho_s[ll, kk]
    s1 = 0.5 * d * (_diag_weights(d) @ rho_s.diagonal().real)
    return np.concatenate([s1, d * off.real, d * off.imag])


def bloch_of_subsystem(rho, da: int, db: int, side: str = "a") -> np.ndarray:
    """Bloch vector of one marginal: partial-trace, then the optimized path."""
    rho = _as_bipartite(rho, da, db)
    if side == "a":
        return bloch_opt(ptrace_b(rho, da, db))
    if side == "b":
        return bloch_opt(ptrace_a(rho, da, db))
    raise ValueError(f"side must be 'a' or 'b', got {side!r}")


def corrmat_naive(rho, da: int, db: int) -> np.ndarray:
    """Correlation matrix by definition: one Kronecker product per entry."""
    rho = _as_bipartite(rho, da, db)
    ga = gellmann_basis(da)
    gb = gellmann_basis(db)
    rho_t = rho.T
    sig = da * db / 4.0
    c = np.empty((da * da - 1, db * db - 1))
    worst = 0.0
    for j, gj in enumerate(ga):
        for k, gk in enumerate(gb):
            t = (np.kron(gj, gk) * rho_t).sum()
            worst = max(worst, abs(t.imag))
            c[j, k] = sig * t.real
    if worst > IMAG_TOL:
        raise ValueError(
            f"trace has imaginary residue {worst:.3e} > {IMAG_TOL}; input is not Hermitian"
        )
    return c


def _take(rho4, rows_a, rows_b, cols_a, cols_b, reads):
    """Gather <rows_a rows_b|rho|cols_a cols_b> and tally the elements read."""
    out = rho4[rows_a, rows_b, cols_a, cols_b]
    if reads is not None:
        reads.add(out.size)
    return out


def corrmat_opt(rho, da: int, db: int, reads: ReadCounter | None = None) -> np.ndarray:
    """Correlation matrix from matrix elements alone, block by block.

    Five element gathers feed all nine group blocks: the diagonal grid
    <mp|rho|mp>, the one-sided off-diagonals <mq|rho|mp> and <np|rho|mp>,
    and the two-sided off-diagonals <nq|rho|mp> and <np|rho|mq>
    (m < n on side a, p < q on side b). Hermiticity of rho makes any other
    element redundant. Pass a ReadCounter to tally the elements touched.
    """
    rho = _as_bipartite(rho, da, db)
    rho4 = rho.reshape(da, db, da, db)
    ma, na = _pairs(da)
    pb, qb = _pairs(db)
    ar = np.arange(da)[:, None]
    br = np.arange(db)[None, :]
    wa = _diag_weights(da)
    wb = _diag_weights(db)
    sig = da * db / 4.0

    diag = _take(rho4, ar, br, ar, br, reads).real
    g1 = _take(rho4, ar, qb[None, :], ar, pb[None, :], reads)
    g2 = _take(rho4, na[:, None], br, ma[:, None], br, reads)
    e1 = _take(rho4, na[:, None], qb[None, :], ma[:, None], pb[None, :], reads)
    e2 = _take(rho4, na[:, None], pb[None, :], ma[:, None], qb[None, :], reads)

    row1 = np.hstack([wa @ diag @ wb.T, 2.0 * (wa @ g1.real), 2.0 * (wa @ g1.imag)])
    row2 = np.hstack([2.0 * (g2.real @ wb.T), 2.0 * (e1.real + e2.real), 2.0 * (e1.imag - e2.imag)])
    row3 = np.hstack([2.0 * (g2.imag @ wb.T), 2.0 * (e1.imag + e2.imag), 2.0 * (e2.real - e1.real)])
    return sig * np.vstack([row1, row2, row3])


def reconstruct(a, b, c) -> np.ndarray:
    """Rebuild rho from its Bloch vectors and correlation matrix.

    rho = (I + sum_j a_j G_j x I + sum_k b_k I x G_k
             + sum_jk c_jk G_j x G_k) / (da*db)
    """
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    c = np.asarray(c, dtype=float)
    da = _dim_from_len(a.size)
    db = _dim_from_len(b.size)
    if c.shape != (a.size, b.size):
        raise ValueError(
            f"correlation matrix shape {c.shape} does not match vectors ({a.size}, {b.size})"
        )
    ga = np.stack(gellmann_basis(da))
    gb = np.stack(gellmann_basis(db))
    rho = np.eye(da * db, dtype=complex)
    rho += np.kron(np.tensordot(a, ga, axes=1), np.eye(db))
    rho += np.kron(np.eye(da), np.tensordot(b, gb, axes=1))
    for j in range(a.size):
        rho += np.kron(ga[j], np.tensordot(c[j], gb, axes=1))
    return rho / (da * db)

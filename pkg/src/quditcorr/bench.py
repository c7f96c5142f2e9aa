"""Timing benchmark and Werner sweep machinery behind the CLI.

The benchmark times the full naive pipeline (both Bloch vectors plus the
correlation matrix, all via materialized generators) against the optimized
pipeline on the same seeded random state, reporting median wall-clock
nanoseconds over a configurable number of trials with one discarded warmup.
Medians resist scheduler noise; timings are still hardware-dependent, so
only relative statements (speedups, monotone growth) are meaningful.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from statistics import median

import numpy as np

from .bloch import (
    ReadCounter,
    bloch_naive,
    bloch_opt,
    corrmat_naive,
    corrmat_opt,
)
from .discord import discord_hsa
from .linalg import ptrace_a, ptrace_b
from .states import random_density, werner_state

__all__ = [
    "BenchRecord",
    "bench_pair",
    "run_bench",
    "corrmat_read_count",
    "fit_exponent",
    "werner_analytic",
    "werner_sweep",
]

DEFAULT_TRIALS = 5
DEFAULT_CAP_SECONDS = 300.0


@dataclass(frozen=True)
class BenchRecord:
    """Median timings for one (da, db); censored means the naive side hit the cap."""

    da: int
    db: int
    trials: int
    t_naive_ns: int
    t_opt_ns: int
    speedup: float
    censored: bool = False


def _naive_pass(rho, da, db):
    bloch_naive(ptrace_b(rho, da, db))
    bloch_naive(ptrace_a(rho, da, db))
    corrmat_naive(rho, da, db)


def _opt_pass(rho, da, db):
    bloch_opt(ptrace_b(rho, da, db))
    bloch_opt(ptrace_a(rho, da, db))
    corrmat_opt(rho, da, db)


def _time_ns(func) -> int:
    t0 = time.perf_counter_ns()
    func()
    return time.perf_counter_ns() - t0


def bench_pair(
    da: int,
    db: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    cap_seconds: float = DEFAULT_CAP_SECONDS,
) -> BenchRecord:
    """Time both pipelines on one seeded random state of dimension da*db."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rho = random_density(da * db, seed)

    _opt_pass(rho, da, db)  # warmup, discarded
    t_opt = int(median(_time_ns(lambda: _opt_pass(rho, da, db)) for _ in range(trials)))

    first = _time_ns(lambda: _naive_pass(rho, da, db))  # warmup doubles as cap probe
    censored = first > cap_seconds * 1e9
    if censored:
        t_naive = first
    else:
        t_naive = int(
            median(_time_ns(lambda: _naive_pass(rho, da, db)) for _ in range(trials))
        )
    return BenchRecord(da, db, trials, t_naive, t_opt, t_naive / t_opt, censored)


def run_bench(
    dims: list[tuple[int, int]],
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    cap_seconds: float = DEFAULT_CAP_SECONDS,
) -> list[BenchRecord]:
    """Benchmark each (da, db) pair, sorted by total dimension ascending."""
    ordered = sorted(dims, key=lambda p: (p[0] * p[1], p))
    return [bench_pair(da, db, trials, seed, cap_seconds) for da, db in ordered]


def corrmat_read_count(da: int, db: int) -> int:
    """Density-matrix elements the optimized correlation matrix touches."""
    reads = ReadCounter()
    corrmat_opt(np.eye(da * db, dtype=complex) / (da * db), da, db, reads=reads)
    return reads.count


def fit_exponent(dims, counts) -> float:
    """Least-squares slope of log(count) against log(dim)."""
    return float(np.polyfit(np.log(np.asarray(dims, float)), np.log(np.asarray(counts, float)), 1)[0])


def werner_analytic(d: int, w: float) -> float:
    """Closed-form ameliorated discord of the Werner state: (dw-1)^2/((d-1)(d+1)^2)."""
    return (d * w - 1) ** 2 / ((d - 1) * (d + 1) ** 2)


def _sweep_point(point: tuple[int, float]) -> tuple[int, float, float, float, float]:
    d, w = point
    rep = discord_hsa(werner_state(d, w), d, d, "a")
    return d, w, rep.hs_value, rep.hsa_value, werner_analytic(d, w)


def werner_sweep(
    dmin: int, dmax: int, wsteps: int, parallel: bool = False
) -> list[tuple[int, float, float, float, float]]:
    """Rows (d, w, hs_numeric, hsa_numeric, hsa_analytic) over a uniform w grid."""
    if dmin < 2:
        raise ValueError(f"dmin must be >= 2, got {dmin}")
    if dmax < dmin:
        raise ValueError(f"dmax must be >= dmin, got {dmax} < {dmin}")
    if wsteps < 2:
        raise ValueError(f"wsteps must be >= 2, got {wsteps}")
    points = [(d, w) for d in range(dmin, dmax + 1) for w in np.linspace(-1.0, 1.0, wsteps)]
    if parallel:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            return list(pool.map(_sweep_point, points))
    return [_sweep_point(p) for p in points]

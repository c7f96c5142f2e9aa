import numpy as np
import pytest
from numpy.testing import assert_allclose

from quditcorr import (
    ReadCounter,
    bell_state,
    bloch_naive,
    bloch_of_subsystem,
    bloch_opt,
    corrmat_naive,
    corrmat_opt,
    kron,
    random_density,
    reconstruct,
    werner_state,
)

PAULIS = [
    np.diag([1.0, -1.0]).astype(complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
]


def _corrmat_2x2_oracle(rho):
    """Independent Kronecker-trace oracle for da=db=2 (prefactor da*db/4 = 1)."""
    c = np.zeros((3, 3))
    for j, sj in enumerate(PAULIS):
        for k, sk in enumerate(PAULIS):
            c[j, k] = np.trace(np.kron(sj, sk) @ rho).real
    return c


def _expected_reads(da, db):
    """Distinct upper-triangle elements the optimized block formulas touch."""
    na2 = da * (da - 1) // 2
    nb2 = db * (db - 1) // 2
    return da * db + da * nb2 + na2 * db + 2 * na2 * nb2


class TestBlochVector:
    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_maximally_mixed_vanishes(self, d):
        assert_allclose(bloch_naive(np.eye(d, dtype=complex) / d), np.zeros(d * d - 1), atol=1e-15)

    def test_first_basis_projector(self):
        rho = np.diag([1.0, 0.0]).astype(complex)
        assert_allclose(bloch_naive(rho), [1.0, 0.0, 0.0], atol=0)

    def test_plus_state(self):
        rho = np.full((2, 2), 0.5, dtype=complex)
        assert_allclose(bloch_opt(rho), [0.0, 1.0, 0.0], atol=1e-16)

    def test_circular_state(self):
        psi = np.array([1.0, 1.0j]) / np.sqrt(2)
        rho = np.outer(psi, psi.conj())
        assert_allclose(bloch_opt(rho), [0.0, 0.0, 1.0], atol=1e-16)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_naive_matches_opt(self, d):
        for seed in range(5):
            rho = random_density(d, 100 * d + seed)
            assert np.max(np.abs(bloch_naive(rho) - bloch_opt(rho))) <= 1e-13

    def test_rejects_dimension_one(self):
        with pytest.raises(ValueError):
            bloch_opt(np.eye(1, dtype=complex))

    def test_naive_rejects_non_hermitian(self):
        rho = np.array([[0.5, 1.0], [0.0, 0.5]], dtype=complex)
        with pytest.raises(ValueError, match="Hermitian"):
            bloch_naive(rho)


class TestSubsystemBloch:
    def test_product_state(self):
        ra = random_density(2, 4)
        rb = random_density(3, 5)
        got = bloch_of_subsystem(kron(ra, rb), 2, 3, "a")
        assert_allclose(got, bloch_opt(ra), atol=1e-15)

    def test_bell_marginals_vanish(self):
        rho = bell_state(2)
        assert_allclose(bloch_of_subsystem(rho, 2, 2, "a"), np.zeros(3), atol=1e-15)
        assert_allclose(bloch_of_subsystem(rho, 2, 2, "b"), np.zeros(3), atol=1e-15)

    @pytest.mark.parametrize("d", [2, 3, 4])
    @pytest.mark.parametrize("side", ["a", "b"])
    def test_werner_marginals_vanish(self, d, side):
        # Werner marginals are maximally mixed for every d and w.
        got = bloch_of_subsystem(werner_state(d, -0.7), d, d, side)
        assert np.max(np.abs(got)) <= 1e-15

    def test_rejects_bad_side(self):
        with pytest.raises(ValueError):
            bloch_of_subsystem(bell_state(2), 2, 2, "c")


class TestCorrMatrix:
    def test_product_state_is_outer_product(self):
        ra = random_density(2, 8)
        rb = random_density(3, 9)
        c = corrmat_naive(kron(ra, rb), 2, 3)
        expect = np.outer(bloch_opt(ra), bloch_opt(rb))
        assert np.max(np.abs(c - expect)) <= 1e-13

    def test_product_state_opt_path(self):
        ra = random_density(3, 10)
        rb = random_density(2, 11)
        c = corrmat_opt(kron(ra, rb), 3, 2)
        expect = np.outer(bloch_opt(ra), bloch_opt(rb))
        assert np.max(np.abs(c - expect)) <= 1e-13

    def test_bell_against_kron_oracle(self):
        rho = bell_state(2)
        expect = _corrmat_2x2_oracle(rho)
        assert_allclose(expect, np.diag([1.0, 1.0, -1.0]), atol=1e-15)
        assert_allclose(corrmat_naive(rho, 2, 2), expect, atol=1e-14)
        assert_allclose(corrmat_opt(rho, 2, 2), expect, atol=1e-14)

    def test_maximally_mixed_vanishes(self):
        assert_allclose(corrmat_naive(np.eye(4, dtype=complex) / 4, 2, 2), np.zeros((3, 3)), atol=0)

    @pytest.mark.parametrize("da,db", [(2, 2), (2, 3), (3, 2), (3, 4), (4, 4)])
    def test_naive_matches_opt(self, da, db):
        for seed in range(3):
            rho = random_density(da * db, 7 * da + db + seed)
            diff = np.abs(corrmat_naive(rho, da, db) - corrmat_opt(rho, da, db))
            assert np.max(diff) <= 1e-12

    def test_block_shape(self):
        c = corrmat_opt(random_density(6, 1), 2, 3)
        assert c.shape == (3, 8)

    def test_rejects_dimension_one(self):
        with pytest.raises(ValueError):
            corrmat_opt(np.eye(2, dtype=complex) / 2, 1, 2)

    def test_naive_rejects_non_hermitian(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 3] = 1.0
        with pytest.raises(ValueError, match="Hermitian"):
            corrmat_naive(rho, 2, 2)


class TestReadCounting:
    def test_frozen_counts(self):
        for d, expect in [(2, 10), (4, 136), (8, 2080)]:
            reads = ReadCounter()
            corrmat_opt(np.eye(d * d, dtype=complex) / (d * d), d, d, reads=reads)
            assert reads.count == expect
            assert reads.count == _expected_reads(d, d)

    def test_rectangular_counts(self):
        reads = ReadCounter()
        corrmat_opt(random_density(6, 0), 2, 3, reads=reads)
        assert reads.count == _expected_reads(2, 3) == 21

    def test_counter_accumulates(self):
        reads = ReadCounter()
        rho = np.eye(4, dtype=complex) / 4
        corrmat_opt(rho, 2, 2, reads=reads)
        corrmat_opt(rho, 2, 2, reads=reads)
        assert reads.count == 20


class TestReconstruct:
    def test_zero_components_give_maximally_mixed(self):
        rho = reconstruct(np.zeros(3), np.zeros(8), np.zeros((3, 8)))
        assert_allclose(rho, np.eye(6) / 6, atol=0)

    def test_bell_triple(self):
        rho = reconstruct(np.zeros(3), np.zeros(3), np.diag([1.0, 1.0, -1.0]))
        assert_allclose(rho, bell_state(2), atol=1e-15)

    @pytest.mark.parametrize("da,db", [(2, 4), (3, 2)])
    def test_round_trip(self, da, db):
        for seed in range(3):
            rho = random_density(da * db, 50 + seed)
            a = bloch_of_subsystem(rho, da, db, "a")
            b = bloch_of_subsystem(rho, da, db, "b")
            c = corrmat_opt(rho, da, db)
            assert np.max(np.abs(reconstruct(a, b, c) - rho)) <= 1e-12

    def test_rejects_mismatched_corrmat(self):
        with pytest.raises(ValueError):
            reconstruct(np.zeros(3), np.zeros(3), np.zeros((3, 8)))

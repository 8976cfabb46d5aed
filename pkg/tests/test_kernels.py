import numpy as np
import pytest
from scipy import sparse

from tracelink import _kernels
from tracelink._kernels import cosine_grid, cosine_grid_numpy, numba_enabled


def random_csr(rng, n_rows, n_cols, density=0.3, signed=False):
    dense = np.zeros((n_rows, n_cols))
    mask = rng.random((n_rows, n_cols)) < density
    values = rng.integers(1, 10, size=(n_rows, n_cols)).astype(float)
    if signed:
        values *= rng.choice([-1.0, 1.0], size=(n_rows, n_cols))
    dense[mask] = values[mask]
    return sparse.csr_matrix(dense)


@pytest.mark.skipif(not _kernels.HAS_NUMBA, reason="numba not installed")
class TestPathEquivalence:
    def test_random_grids_match(self, rng):
        for signed in (False, True):
            q = random_csr(rng, 7, 40, signed=signed)
            d = random_csr(rng, 11, 40, signed=signed)
            jit = _kernels.cosine_grid_numba(q, d)
            plain = cosine_grid_numpy(q, d)
            np.testing.assert_allclose(jit, plain, rtol=1e-12, atol=1e-15)

    def test_structural_zeros_are_exact_in_both(self, rng):
        # rows with disjoint supports must score exactly 0.0, not epsilon
        q = sparse.csr_matrix(np.array([[1.0, 2.0, 0.0, 0.0]]))
        d = sparse.csr_matrix(np.array([[0.0, 0.0, 3.0, 1.0]]))
        assert _kernels.cosine_grid_numba(q, d)[0, 0] == 0.0
        assert cosine_grid_numpy(q, d)[0, 0] == 0.0

    def test_zero_rows_score_zero(self, rng):
        q = sparse.csr_matrix(np.array([[0.0, 0.0], [1.0, 0.0]]))
        d = sparse.csr_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
        for grid in (_kernels.cosine_grid_numba(q, d), cosine_grid_numpy(q, d)):
            assert grid[0, 0] == 0.0 and grid[0, 1] == 0.0
            assert grid[1, 1] == 0.0


class TestDispatch:
    def test_env_flag_forces_numpy_path(self, monkeypatch, rng):
        q = random_csr(rng, 4, 20)
        d = random_csr(rng, 5, 20)
        default = cosine_grid(q, d)
        monkeypatch.setenv("TRACELINK_NO_NUMBA", "1")
        assert not numba_enabled()
        forced = cosine_grid(q, d)
        np.testing.assert_allclose(default, forced, rtol=1e-12, atol=1e-15)

    def test_env_flag_off_values(self, monkeypatch):
        monkeypatch.delenv("TRACELINK_NO_NUMBA", raising=False)
        assert numba_enabled() == _kernels.HAS_NUMBA
        monkeypatch.setenv("TRACELINK_NO_NUMBA", "true")
        assert not numba_enabled()
        monkeypatch.setenv("TRACELINK_NO_NUMBA", "0")
        assert numba_enabled() == _kernels.HAS_NUMBA

    def test_width_mismatch_rejected(self, rng):
        with pytest.raises(ValueError, match="width"):
            cosine_grid(random_csr(rng, 2, 5), random_csr(rng, 2, 6))

    def test_self_similarity_rows(self, rng):
        m = random_csr(rng, 6, 30, density=0.5)
        grid = cosine_grid(m, m)
        norms = np.sqrt(np.asarray(m.multiply(m).sum(axis=1)).ravel())
        for i in range(6):
            if norms[i] > 0:
                assert grid[i, i] == pytest.approx(1.0, abs=1e-12)

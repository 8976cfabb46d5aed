"""Similarity-grid kernels: numba-compiled inner loop with a pure-numpy fallback.

The all-pairs cosine grid between the query rows and the collection rows
is the hot spot of a run. By default the sparse two-pointer kernel is
JIT-compiled with numba; set ``TRACELINK_NO_NUMBA=1`` (or install without
numba) to use the vectorized scipy/numpy path instead. Both paths produce
the same grid up to floating-point roundoff; ``benchmarks/bench_similarity.py``
compares their speed.
"""

from __future__ import annotations

import os

import numpy as np
from scipy import sparse

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


_ENV_FLAG = "TRACELINK_NO_NUMBA"


def numba_enabled() -> bool:
    """True when the JIT path is available and not disabled via the environment."""
    if os.environ.get(_ENV_FLAG, "").strip().lower() in {"1", "true", "yes"}:
        return False
    return HAS_NUMBA


@njit(cache=True)
def _cosine_grid_csr(
    q_indptr, q_indices, q_data, d_indptr, d_indices, d_data, n_q, n_d
):  # pragma: no cover - measured through cosine_grid
    out = np.zeros((n_q, n_d), dtype=np.float64)

    q_norm = np.zeros(n_q, dtype=np.float64)
    for r in range(n_q):
        acc = 0.0
        for p in range(q_indptr[r], q_indptr[r + 1]):
            acc += q_data[p] * q_data[p]
        q_norm[r] = np.sqrt(acc)

    d_norm = np.zeros(n_d, dtype=np.float64)
    for r in range(n_d):
        acc = 0.0
        for p in range(d_indptr[r], d_indptr[r + 1]):
            acc += d_data[p] * d_data[p]
        d_norm[r] = np.sqrt(acc)

    for r in range(n_q):
        if q_norm[r] == 0.0:
            continue
        q_lo = q_indptr[r]
        q_hi = q_indptr[r + 1]
        for c in range(n_d):
            if d_norm[c] == 0.0:
                continue
            # two-pointer sparse dot; both index runs are sorted
            a = q_lo
            b = d_indptr[c]
            b_hi = d_indptr[c + 1]
            dot = 0.0
            while a < q_hi and b < b_hi:
                ia = q_indices[a]
                ib = d_indices[b]
                if ia == ib:
                    dot += q_data[a] * d_data[b]
                    a += 1
                    b += 1
                elif ia < ib:
                    a += 1
                else:
                    b += 1
            if dot != 0.0:
                out[r, c] = dot / (q_norm[r] * d_norm[c])
    return out


def cosine_grid_numpy(queries: sparse.csr_matrix, docs: sparse.csr_matrix) -> np.ndarray:
    """Vectorized fallback: dense dot grid normalized by row norms."""
    dots = (queries @ docs.T).toarray().astype(np.float64)
    q_norm = np.sqrt(np.asarray(queries.multiply(queries).sum(axis=1)).ravel())
    d_norm = np.sqrt(np.asarray(docs.multiply(docs).sum(axis=1)).ravel())
    denom = np.outer(q_norm, d_norm)
    out = np.zeros_like(dots)
    np.divide(dots, denom, out=out, where=denom > 0.0)
    return out


def cosine_grid_numba(queries: sparse.csr_matrix, docs: sparse.csr_matrix) -> np.ndarray:
    """JIT path over the raw CSR arrays."""
    queries = queries.tocsr()
    docs = docs.tocsr()
    queries.sort_indices()
    docs.sort_indices()
    return _cosine_grid_csr(
        queries.indptr,
        queries.indices,
        queries.data.astype(np.float64),
        docs.indptr,
        docs.indices,
        docs.data.astype(np.float64),
        queries.shape[0],
        docs.shape[0],
    )


def cosine_grid(queries: sparse.csr_matrix, docs: sparse.csr_matrix) -> np.ndarray:
    """All-pairs cosine similarity between the rows of two aligned CSR matrices.

    Rows with zero norm score 0 against everything.
    """
    if queries.shape[1] != docs.shape[1]:
        raise ValueError(f"vocabulary width mismatch: {queries.shape[1]} vs {docs.shape[1]}")
    if numba_enabled():
        return cosine_grid_numba(queries, docs)
    return cosine_grid_numpy(queries, docs)

"""Shared helpers: seeded random states and index-loop oracles."""

import numpy as np
import pytest

from qent.linalg import DensityMatrix, validate_density


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2.0


def random_density(rng, dims):
    n = int(np.prod(dims))
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    m = a @ a.conj().T
    return validate_density(m / np.trace(m).real, list(dims))


def random_pure(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


def random_product_density(rng, dims):
    """Random fully separable state: mixture of product pure states."""
    n = int(np.prod(dims))
    mat = np.zeros((n, n), dtype=complex)
    weights = rng.dirichlet(np.ones(4))
    for w in weights:
        v = np.array([1.0 + 0.0j])
        for d in dims:
            v = np.kron(v, random_pure(rng, d))
        mat += w * np.outer(v, v.conj())
    return validate_density(mat, list(dims))


def random_unitary(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


# ---------------------------------------------------------------------------
# Index-loop oracles (deliberately naive)
# ---------------------------------------------------------------------------

def oracle_tensor(a, b):
    na, nb = a.shape[0], b.shape[0]
    out = np.zeros((na * nb, na * nb), dtype=complex)
    for i in range(na):
        for j in range(nb):
            for k in range(na):
                for l in range(nb):
                    out[i * nb + j, k * nb + l] = a[i, k] * b[j, l]
    return out


def oracle_partial_transpose(mat, sys, dims):
    d0, d1 = dims
    out = np.zeros_like(mat)
    for i in range(d0):
        for j in range(d1):
            for k in range(d0):
                for l in range(d1):
                    if sys == 0:
                        out[i * d1 + j, k * d1 + l] = mat[k * d1 + j, i * d1 + l]
                    else:
                        out[i * d1 + j, k * d1 + l] = mat[i * d1 + l, k * d1 + j]
    return out


def oracle_partial_trace(mat, keep, dims):
    dims = list(dims)
    n_parties = len(dims)
    keep = list(keep)
    kept = [dims[i] for i in keep]
    nk = int(np.prod(kept))
    out = np.zeros((nk, nk), dtype=complex)
    full = mat.reshape(*(dims + dims))
    import itertools
    for idx in itertools.product(*[range(d) for d in dims]):
        for jdx in itertools.product(*[range(d) for d in dims]):
            if any(idx[t] != jdx[t] for t in range(n_parties) if t not in keep):
                continue
            ri = 0
            rj = 0
            for t in keep:
                ri = ri * dims[t] + idx[t]
                rj = rj * dims[t] + jdx[t]
            out[ri, rj] += full[idx + jdx]
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240824)

"""Structural physical approximation (SPA) of partial transposition.

The SPA of the (positive but not completely positive) partial-transpose map
mixes it with the fully depolarizing map just enough to make the result a
physical channel.  Applied to a state, the output ``rho_tilde`` is again a
density matrix whose minimum eigenvalue carries the entanglement information
of the original partial transpose.

This module provides the generic ``d (x) d`` and ``d1 (x) d2`` maps, the
closed-form two-qubit and qutrit-qubit element maps, the per-qubit map for
three qubits, and the SPA of witness operators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NotAWitness
from .linalg import (
    DensityMatrix,
    herm_eigenvalues,
    partial_transpose,
    partial_transpose_qubit,
    validate_density,
)


@dataclass(frozen=True)
class SpaState:
    """Output of an SPA-PT map.

    Attributes
    ----------
    rho_tilde : DensityMatrix
        The approximated state.
    mixing : float
        Mixing parameter actually used (weight of the depolarizing part).
    threshold : float
        Separability floor for this dimension pair: separable inputs give
        ``lambda_min(rho_tilde) >= threshold``.
    """

    rho_tilde: DensityMatrix
    mixing: float
    threshold: float


@dataclass(frozen=True)
class SpaWitness:
    """SPA of a witness operator: a physical (PSD, unit-trace) observable.

    Attributes
    ----------
    w_tilde : numpy.ndarray
        ``p W + ((1-p)/(d1 d2)) I``; positive semidefinite with unit trace.
    p : float
        Mixing weight kept on the witness.
    r_bound : float
        Detection threshold ``(1-p)/(d1 d2)``: entangled states detected by W
        give ``Tr(W_tilde rho) < r_bound``.
    """

    w_tilde: np.ndarray
    p: float
    r_bound: float


def spa_pt_dd(rho: DensityMatrix, d) -> SpaState:
    """SPA-PT for a ``d (x) d`` state.

    ``rho_tilde = (d/(d^3+1)) I + (1/(d^3+1)) rho^{T_B}``; separable states
    satisfy ``lambda_min(rho_tilde) >= d/(d^3+1)``.
    """
    d = int(d)
    if list(rho.dims) != [d, d]:
        raise DimensionError(f"expected dims [{d}, {d}], got {list(rho.dims)}")
    pt = partial_transpose(rho, 1)
    k = float(d ** 3 + 1)
    mat = (d / k) * np.eye(d * d) + pt / k
    out = validate_density(mat, [d, d])
    return SpaState(rho_tilde=out, mixing=d ** 3 / k, threshold=d / k)


def spa_pt_d1d2(rho: DensityMatrix, d1, d2) -> SpaState:
    """SPA-PT for a ``d1 (x) d2`` state with the minimal-lambda convention.

    With ``m = min(d1, d2)`` and ``lambda = 1/m``:
    ``p = lambda d1^3 d2 / (1 + lambda d1^3 d2)`` (dims ordered so the cube
    falls on the smaller factor) and
    ``rho_tilde = (1-p) rho^{T_B} + (p/(d1 d2)) I``.
    The reported threshold is ``lambda d1 d2 / (1 + lambda d1^3 d2)`` exactly
    as published; note it exceeds the maximally mixed state's eigenvalue for
    unequal dimensions (see package notes), so it is exposed, not enforced.
    """
    d1, d2 = int(d1), int(d2)
    if list(rho.dims) != [d1, d2]:
        raise DimensionError(f"expected dims [{d1}, {d2}], got {list(rho.dims)}")
    m, big = min(d1, d2), max(d1, d2)
    lam = 1.0 / m
    denom = 1.0 + lam * m ** 3 * big
    p = lam * m ** 3 * big / denom
    pt = partial_transpose(rho, 1)
    mat = (1.0 - p) * pt + (p / (d1 * d2)) * np.eye(d1 * d2)
    out = validate_density(mat, [d1, d2])
    return SpaState(rho_tilde=out, mixing=p, threshold=lam * m * big / denom)


def spa_pt_two_qubit(rho: DensityMatrix) -> SpaState:
    """Closed-form two-qubit SPA-PT element map.

    Equivalent to ``spa_pt_dd(rho, 2)``: diagonal ``(2 + e_ii)/9`` and
    off-diagonals ``e_12*/9, e_13/9, e_23/9, e_14/9, e_24/9, e_34*/9`` at the
    partially transposed positions.
    """
    if list(rho.dims) != [2, 2]:
        raise DimensionError(f"expected dims [2, 2], got {list(rho.dims)}")
    e = rho.mat
    t = np.zeros((4, 4), dtype=complex)
    for i in range(4):
        t[i, i] = (2.0 + e[i, i]) / 9.0
    t[0, 1] = np.conj(e[0, 1]) / 9.0
    t[0, 2] = e[0, 2] / 9.0
    t[0, 3] = e[1, 2] / 9.0
    t[1, 2] = e[0, 3] / 9.0
    t[1, 3] = e[1, 3] / 9.0
    t[2, 3] = np.conj(e[2, 3]) / 9.0
    for i in range(4):
        for j in range(i + 1, 4):
            t[j, i] = np.conj(t[i, j])
    out = validate_density(t, [2, 2])
    return SpaState(rho_tilde=out, mixing=8.0 / 9.0, threshold=2.0 / 9.0)


def spa_pt_qutrit_qubit(rho: DensityMatrix) -> SpaState:
    """Closed-form qutrit-qubit (3 x 2) SPA-PT element map.

    Implements the published element equations with the symmetric map
    parameters ``a = b = c = 1/sqrt(2)``.  The map is specified for states
    whose off-diagonal blocks satisfy the symmetry of the published family;
    outside that family the element equations do not preserve the trace
    (the excess is ``(3/16) Re[(t13+t24) - (t15+t26) + (t35+t46)]`` in
    1-indexed entries), and validation will reject the output.
    """
    if list(rho.dims) != [3, 2]:
        raise DimensionError(f"expected dims [3, 2], got {list(rho.dims)}")
    r = rho.mat

    def t(i, j):
        return r[i - 1, j - 1]

    # a = b = c = 1/sqrt(2): every product of two parameters is 1/2.
    half = 0.5
    c32 = 3.0 / 32.0
    out = np.zeros((6, 6), dtype=complex)

    br11 = c32 * (1.0 + half * (t(3, 3) + t(4, 4)) + half * (t(5, 5) + t(6, 6))
                  + half * (t(3, 5) + np.conj(t(3, 5)) + t(4, 6) + np.conj(t(4, 6))))
    out[0, 0] = br11 + 0.25 * ((2.0 / 3.0) * t(1, 1) + (1.0 / 3.0) * t(2, 2))
    out[1, 1] = br11 + 0.25 * ((1.0 / 3.0) * t(1, 1) + (2.0 / 3.0) * t(2, 2))

    br13 = c32 * (half * (1.0 + t(5, 5) + t(6, 6)) - half * (t(1, 3) + t(2, 4))
                  - half * (t(1, 5) + t(2, 6))
                  + half * (np.conj(t(3, 5)) + np.conj(t(4, 6))))
    out[0, 2] = br13 + 0.25 * ((2.0 / 3.0) * t(1, 3) + (1.0 / 3.0) * t(2, 4))
    out[1, 3] = br13 + 0.25 * ((1.0 / 3.0) * t(1, 3) + (2.0 / 3.0) * t(2, 4))

    br15 = c32 * (-half * (1.0 + t(3, 3) + t(4, 4)) - half * (t(1, 3) + t(2, 4))
                  - half * (t(1, 5) + t(2, 6)) - half * (t(3, 5) + t(4, 6)))
    out[0, 4] = br15 + 0.25 * ((2.0 / 3.0) * t(1, 5) + (1.0 / 3.0) * t(2, 6))
    out[1, 5] = br15 + 0.25 * ((1.0 / 3.0) * t(1, 5) + (2.0 / 3.0) * t(2, 6))

    br33 = c32 * (1.0 + half * (t(1, 1) + t(2, 2)) + half * (t(5, 5) + t(6, 6))
                  - half * (t(1, 5) + np.conj(t(1, 5)) + t(2, 6) + np.conj(t(2, 6))))
    out[2, 2] = br33 + 0.25 * ((2.0 / 3.0) * t(3, 3) + (1.0 / 3.0) * t(4, 4))
    out[3, 3] = br33 + 0.25 * ((1.0 / 3.0) * t(3, 3) + (2.0 / 3.0) * t(4, 4))

    br35 = c32 * (half * (1.0 + t(1, 1) + t(2, 2)) - half * (t(1, 5) + t(2, 6))
                  + half * (np.conj(t(1, 3)) + np.conj(t(2, 4)))
                  - half * (t(3, 5) + t(4, 6)))
    out[2, 4] = br35 + 0.25 * ((2.0 / 3.0) * t(3, 5) + (1.0 / 3.0) * t(4, 6))
    out[3, 5] = br35 + 0.25 * ((1.0 / 3.0) * t(3, 5) + (2.0 / 3.0) * t(4, 6))

    br55 = c32 * (1.0 + half * (t(1, 1) + t(2, 2)) + half * (t(3, 3) + t(4, 4))
                  + half * (t(1, 3) + np.conj(t(1, 3)) + t(2, 4) + np.conj(t(2, 4))))
    out[4, 4] = br55 + 0.25 * ((2.0 / 3.0) * t(5, 5) + (1.0 / 3.0) * t(6, 6))
    out[5, 5] = br55 + 0.25 * ((1.0 / 3.0) * t(5, 5) + (2.0 / 3.0) * t(6, 6))

    # Qubit-transpose-like entries, weight 1/12.
    out[0, 1] = np.conj(t(1, 2)) / 12.0
    out[0, 3] = t(2, 3) / 12.0
    out[0, 5] = t(2, 5) / 12.0
    out[1, 2] = t(1, 4) / 12.0
    out[1, 4] = t(1, 6) / 12.0
    out[2, 3] = np.conj(t(3, 4)) / 12.0
    out[2, 5] = t(4, 5) / 12.0
    out[3, 4] = t(3, 6) / 12.0
    out[4, 5] = np.conj(t(5, 6)) / 12.0

    for i in range(6):
        for j in range(i + 1, 6):
            out[j, i] = np.conj(out[i, j])
    dm = validate_density(out, [3, 2])
    # Published 2x3 floor; exposed for reference (see spa_pt_d1d2 notes).
    return SpaState(rho_tilde=dm, mixing=0.75, threshold=3.0 / 13.0)


def spa_pt_three_qubit(rho: DensityMatrix, qubit) -> SpaState:
    """SPA of single-qubit partial transposition for a three-qubit state.

    ``rho_tilde = (1/10) I_8 + (1/5) rho^{T_qubit}`` (mixing p = 4/5 is
    hard-coded: it is the minimal completely positive value and the 1/10
    classification threshold assumes it).
    """
    if list(rho.dims) != [2, 2, 2]:
        raise DimensionError(f"expected dims [2, 2, 2], got {list(rho.dims)}")
    pt = partial_transpose_qubit(rho, qubit)
    mat = 0.1 * np.eye(8) + 0.2 * pt
    out = validate_density(mat, [2, 2, 2])
    return SpaState(rho_tilde=out, mixing=0.8, threshold=0.1)


def spa_witness(w, d1, d2, p=None) -> SpaWitness:
    """SPA of a witness operator.

    ``W_tilde = p W + ((1-p)/(d1 d2)) I``.  When ``p`` is omitted it defaults
    to the largest value keeping ``W_tilde`` positive semidefinite,
    ``p = (1/(d1 d2)) / (1/(d1 d2) + |lambda_min(W)|)``.

    Parameters
    ----------
    w : array_like
        Hermitian witness; normalized to unit trace if necessary.
    d1, d2 : int
        Subsystem dimensions.
    p : float, optional
        Explicit mixing override in (0, 1].

    Returns
    -------
    SpaWitness

    Raises
    ------
    NotAWitness
        If ``w`` has no negative eigenvalue.
    """
    w = np.asarray(w, dtype=complex)
    dim = d1 * d2
    if w.shape != (dim, dim):
        raise DimensionError(f"witness shape {w.shape} does not match {d1}x{d2}")
    tr = complex(np.trace(w))
    if abs(tr - 1.0) > 1e-10:
        if abs(tr) < 1e-12:
            raise NotAWitness("witness has zero trace and cannot be normalized")
        w = w / tr
    lam_min = float(herm_eigenvalues(w).eigenvalues[0])
    if lam_min >= -1e-12:
        raise NotAWitness("operator is positive semidefinite, not a witness")
    if p is None:
        inv = 1.0 / dim
        p = inv / (inv + abs(lam_min))
    if not (0.0 <= p <= 1.0):
        raise DimensionError(f"mixing p must lie in [0, 1], got {p}")
    w_tilde = p * w + ((1.0 - p) / dim) * np.eye(dim)
    if float(herm_eigenvalues(w_tilde).eigenvalues[0]) < -1e-9:
        raise NotAWitness("chosen p leaves the approximated witness non-positive")
    return SpaWitness(w_tilde=w_tilde, p=float(p), r_bound=(1.0 - p) / dim)

"""Entanglement and coherence quantifiers.

Two-qubit concurrence (spin-flip construction), generalized pure-state
concurrence, negativity, structured negativity (the SPA-PT based measure),
the Chen-style concurrence lower bound, the pure-state three-tangle, the
three-pi measure, and the l1-norm of coherence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .linalg import (
    DensityMatrix,
    herm_eigenvalues,
    partial_trace,
    partial_transpose,
    realign,
    trace_norm,
    validate_density,
)
from .spa import spa_pt_dd

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


@dataclass(frozen=True)
class MeasureValue:
    """A nonnegative measure value with its name and dimension context."""

    value: float
    measure: str
    d: int

    def __post_init__(self):
        if self.value < -1e-9:
            raise DimensionError(f"{self.measure} produced a negative value {self.value}")
        object.__setattr__(self, "value", max(0.0, float(self.value)))


def concurrence_2q(rho: DensityMatrix) -> MeasureValue:
    """Two-qubit concurrence via the spin-flipped spectrum.

    ``max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4))`` where ``l_i`` are
    the descending eigenvalues of ``rho (sy (x) sy) rho* (sy (x) sy)``.
    """
    if list(rho.dims) != [2, 2]:
        raise DimensionError(f"concurrence_2q needs dims [2, 2], got {list(rho.dims)}")
    yy = np.kron(_SIGMA_Y, _SIGMA_Y)
    flipped = yy @ rho.mat.conj() @ yy
    # rho @ flipped is similar to the Hermitian PSD matrix
    # sqrt(rho) flipped sqrt(rho), so its spectrum can be taken Hermitianly.
    spec = herm_eigenvalues(rho.mat)
    root = spec.vectors @ np.diag(np.sqrt(np.clip(spec.eigenvalues, 0.0, None))) \
        @ spec.vectors.conj().T
    lam = herm_eigenvalues(root @ flipped @ root).eigenvalues
    lam = np.sqrt(np.clip(lam[::-1], 0.0, None))
    return MeasureValue(value=max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3])),
                        measure="concurrence", d=2)


def concurrence_pure(psi, d1, d2) -> MeasureValue:
    """Generalized concurrence of a bipartite pure state.

    ``sqrt(2 (1 - Tr(rho_A^2)))`` (unit prefactors), which reduces to the
    two-qubit concurrence on qubit pairs.
    """
    v = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise DimensionError("zero vector")
    v = v / norm
    rho_a = v.reshape(d1, d2) @ v.reshape(d1, d2).conj().T
    purity = float(np.trace(rho_a @ rho_a).real)
    return MeasureValue(value=float(np.sqrt(max(0.0, 2.0 * (1.0 - purity)))),
                        measure="concurrence_pure", d=min(d1, d2))


def negativity(rho: DensityMatrix, d=None) -> MeasureValue:
    """Negativity ``(|rho^{T_B}|_1 - 1)/(d - 1)``.

    Equals ``2/(d-1)`` times the absolute sum of negative partial-transpose
    eigenvalues.  For unequal subsystem dimensions ``d = min(d1, d2)``.
    """
    if len(rho.dims) != 2:
        raise DimensionError("negativity needs a bipartite state")
    if d is None:
        d = min(rho.dims)
    val = (trace_norm(partial_transpose(rho, 1)) - 1.0) / (d - 1.0)
    return MeasureValue(value=val, measure="negativity", d=int(d))


def structured_negativity(rho: DensityMatrix, d=None) -> MeasureValue:
    """Structured negativity ``K max(d/(d^3+1) - lambda_min(rho_tilde), 0)``.

    ``K = d (d^3 + 1)`` and ``rho_tilde`` is the SPA-PT of the state — an
    experimentally accessible analogue of negativity (they coincide for two
    qubits).
    """
    if len(rho.dims) != 2 or rho.dims[0] != rho.dims[1]:
        raise DimensionError("structured negativity needs dims [d, d]")
    if d is None:
        d = rho.dims[0]
    d = int(d)
    spa = spa_pt_dd(rho, d)
    lam = float(herm_eigenvalues(spa.rho_tilde.mat).eigenvalues[0])
    k = d * (d ** 3 + 1)
    return MeasureValue(value=k * max(spa.threshold - lam, 0.0),
                        measure="structured_negativity", d=d)


def concurrence_lb_chen(rho: DensityMatrix, d=None) -> MeasureValue:
    """Lower bound on the concurrence from PT and realignment trace norms.

    ``sqrt(2/(d(d-1))) (max(|rho^{T_B}|_1, |R(rho)|_1) - 1)``, clamped at 0.
    """
    if len(rho.dims) != 2 or rho.dims[0] != rho.dims[1]:
        raise DimensionError("concurrence bound needs dims [d, d]")
    if d is None:
        d = rho.dims[0]
    d = int(d)
    best = max(trace_norm(partial_transpose(rho, 1)), trace_norm(realign(rho)))
    val = np.sqrt(2.0 / (d * (d - 1.0))) * (best - 1.0)
    return MeasureValue(value=max(0.0, float(val)), measure="concurrence_lb", d=d)


def tangle_pure(psi) -> MeasureValue:
    """Three-tangle of a pure three-qubit state, ``4 |d1 - 2 d2 + 4 d3|``.

    Amplitudes ``a..h`` correspond to |000>..|111>; the ``d_i`` are the
    standard hyperdeterminant quartics.  Zero on W-class, 1 on standard GHZ.
    """
    v = np.asarray(psi, dtype=complex)
    if v.shape != (8,):
        raise DimensionError("tangle needs 8 amplitudes")
    norm = np.linalg.norm(v)
    if norm == 0:
        raise DimensionError("zero vector")
    a, b, c, d, e, f, g, h = v / norm
    d1 = a * a * h * h + b * b * g * g + c * c * f * f + d * d * e * e
    d2 = (a * h * d * e + a * h * f * c + a * h * g * b
          + d * e * f * c + d * e * g * b + f * c * g * b)
    d3 = a * d * f * g + b * c * e * h
    return MeasureValue(value=4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3),
                        measure="tangle", d=2)


def three_pi(psi) -> MeasureValue:
    """Three-pi measure of a pure three-qubit state.

    ``(pi_a + pi_b + pi_c)/3`` with
    ``pi_a = N_{A(BC)}^2 - N_{AB}^2 - N_{AC}^2``, where the pairwise
    negativities use two-qubit marginals and ``N_{A(BC)} = 2 sqrt(det rho_A)``.
    """
    v = np.asarray(psi, dtype=complex)
    if v.shape != (8,):
        raise DimensionError("three_pi needs a three-qubit vector")
    v = v / np.linalg.norm(v)
    rho = validate_density(np.outer(v, v.conj()), [2, 2, 2])

    def pair_negativity(i, j):
        marg = partial_trace(rho, [i, j])
        return (trace_norm(partial_transpose(marg, 0)) - 1.0) / 2.0

    def one_vs_rest(i):
        marg = partial_trace(rho, [i]).mat
        det = float(np.linalg.det(marg).real)
        return 2.0 * np.sqrt(max(0.0, det))

    pis = []
    for i in range(3):
        others = [j for j in range(3) if j != i]
        n_big = one_vs_rest(i)
        n_pair = [pair_negativity(i, j) for j in others]
        pis.append(n_big ** 2 - n_pair[0] ** 2 - n_pair[1] ** 2)
    return MeasureValue(value=sum(pis) / 3.0, measure="three_pi", d=2)


def l1_coherence(rho) -> MeasureValue:
    """l1-norm of coherence: sum of moduli of off-diagonal entries in the
    computational basis."""
    mat = rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionError("l1 coherence needs a square matrix")
    val = float(np.sum(np.abs(mat)) - np.sum(np.abs(np.diag(mat))))
    return MeasureValue(value=val, measure="l1_coherence", d=mat.shape[0])

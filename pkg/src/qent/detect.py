"""Bipartite entanglement detection.

Standard criteria (PPT, realignment, reduction) plus the SPA-based decision
procedures: witness construction from pure states, the physical Criterion-1
on SPA witnesses, eigenvalue bounds L/U for the SPA-PT state, and the
concurrence-linked Criteria 2-3.

All "iff" claims from the source material are implemented one-directionally:
an ``Entangled`` outcome is sound, anything else is ``Inconclusive`` (or a
plain condition flag) rather than a separability proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionError
from .linalg import (
    DensityMatrix,
    expectation,
    herm_eigenvalues,
    partial_transpose,
    partial_trace,
    realign,
    tensor,
    trace_norm,
)
from .spa import SpaState, SpaWitness

SLACK = 1e-9


class Outcome(Enum):
    """Result category of a detection or classification procedure."""

    Entangled = "Entangled"
    Inconclusive = "Inconclusive"
    ConditionSatisfied = "ConditionSatisfied"
    ConditionViolated = "ConditionViolated"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a criterion together with the scalar that produced it.

    Attributes
    ----------
    outcome : Outcome
    evidence : float
        The decision scalar (minimum eigenvalue, trace norm, trace value, ...).
    criterion : str
        Name of the criterion that was applied.
    """

    outcome: Outcome
    evidence: float
    criterion: str


def _rho_tilde_mat(rho_tilde):
    if isinstance(rho_tilde, SpaState):
        return rho_tilde.rho_tilde.mat
    if isinstance(rho_tilde, DensityMatrix):
        return rho_tilde.mat
    return np.asarray(rho_tilde, dtype=complex)


def ppt_check(rho: DensityMatrix, sys=1) -> Verdict:
    """PPT (Peres) criterion: a negative partial-transpose eigenvalue proves
    entanglement.

    Necessary and sufficient for 2x2 and 2x3; only necessary above.
    Evidence is ``lambda_min(rho^{T_sys})``.
    """
    if len(rho.dims) != 2:
        raise DimensionError("ppt_check needs a bipartite state")
    lam = float(herm_eigenvalues(partial_transpose(rho, sys)).eigenvalues[0])
    outcome = Outcome.Entangled if lam < -SLACK else Outcome.Inconclusive
    return Verdict(outcome=outcome, evidence=lam, criterion="ppt")


def realignment_check(rho: DensityMatrix) -> Verdict:
    """Realignment (CCNR) criterion: trace norm of the realigned matrix
    above 1 proves entanglement (catches some PPT-entangled states)."""
    lam = trace_norm(realign(rho))
    outcome = Outcome.Entangled if lam > 1.0 + SLACK else Outcome.Inconclusive
    return Verdict(outcome=outcome, evidence=lam, criterion="realignment")


def reduction_check(rho: DensityMatrix) -> Verdict:
    """Reduction criterion: a negative eigenvalue of ``rho_A (x) I - rho``
    proves entanglement."""
    if len(rho.dims) != 2:
        raise DimensionError("reduction_check needs a bipartite state")
    d0, d1 = rho.dims
    rho_a = partial_trace(rho, [0]).mat
    lam = float(herm_eigenvalues(tensor(rho_a, np.eye(d1)) - rho.mat).eigenvalues[0])
    outcome = Outcome.Entangled if lam < -SLACK else Outcome.Inconclusive
    return Verdict(outcome=outcome, evidence=lam, criterion="reduction")


def witness_from_pure(psi, sys, dims):
    """Witness operator from an entangled pure state.

    ``W = (|psi><psi|)^{T_sys}`` — Hermitian, trace 1, with a negative
    eigenvalue whenever ``psi`` is entangled across the cut.

    Parameters
    ----------
    psi : array_like
        Normalized bipartite state vector.
    sys : int
        Subsystem to transpose.
    dims : list of int
        Subsystem dimensions.

    Returns
    -------
    numpy.ndarray
    """
    v = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise DimensionError("zero vector cannot define a witness")
    v = v / norm
    return partial_transpose(np.outer(v, v.conj()), sys, dims=dims)


def criterion1(rho: DensityMatrix, w_tilde: SpaWitness) -> Verdict:
    """Physical witness criterion: ``Tr(W_tilde rho) < (1-p)/(d1 d2)``
    detects entanglement through a measurable observable."""
    val = expectation(w_tilde.w_tilde, rho)
    outcome = Outcome.Entangled if val < w_tilde.r_bound - SLACK else Outcome.Inconclusive
    return Verdict(outcome=outcome, evidence=val, criterion="criterion1")


def bounds_LU(rho: DensityMatrix, rho_tilde, w):
    """Eigenvalue bounds for the SPA-PT state.

    Returns ``(L, U)`` with ``L = Tr(rho_tilde rho) + Tr(W rho)`` and
    ``U = 1/2 + L``; the minimum eigenvalue of ``rho_tilde`` satisfies
    ``max(L, 0) <= lambda_min <= U`` when ``W`` detects ``rho``.
    """
    rt = _rho_tilde_mat(rho_tilde)
    val = expectation(rt, rho) + expectation(np.asarray(w, dtype=complex), rho)
    return float(val), float(0.5 + val)


@dataclass(frozen=True)
class ConcurrenceBounds:
    """Lower and upper bounds on the concurrence from measurable quantities."""

    lower: float
    upper: float


def concurrence_bounds(rho: DensityMatrix, w_tilde: SpaWitness, rho_tilde) -> ConcurrenceBounds:
    """Concurrence bounds from the SPA witness and SPA-PT state.

    ``lower = (1-p)/(p d1 d2) - Tr(W_tilde rho)/p`` and
    ``upper = Tr(rho_tilde rho)``.
    """
    if w_tilde.p == 0:
        raise DimensionError("witness mixing p must be nonzero")
    dim = rho.dim
    lower = (1.0 - w_tilde.p) / (w_tilde.p * dim) - expectation(w_tilde.w_tilde, rho) / w_tilde.p
    upper = expectation(_rho_tilde_mat(rho_tilde), rho)
    return ConcurrenceBounds(lower=float(lower), upper=float(upper))


def criterion2(rho: DensityMatrix, rho_tilde, c) -> Verdict:
    """Eigenvalue floor check: ``lambda_min(rho_tilde) >= Tr(rho_tilde rho) - C``.

    Evidence is the margin ``lambda_min - (Tr(rho_tilde rho) - C)``.
    """
    if c < 0:
        raise DimensionError("concurrence estimate must be nonnegative")
    rt = _rho_tilde_mat(rho_tilde)
    lam = float(herm_eigenvalues(rt).eigenvalues[0])
    margin = lam - (expectation(rt, rho) - c)
    outcome = Outcome.ConditionSatisfied if margin >= -SLACK else Outcome.ConditionViolated
    return Verdict(outcome=outcome, evidence=float(margin), criterion="criterion2")


def criterion3(rho: DensityMatrix, rho_tilde, c) -> Verdict:
    """Entanglement from the tightened upper bound:
    ``U_ent = 1/2 + Tr(rho_tilde rho) - C < 1/2`` detects entanglement."""
    if c < 0:
        raise DimensionError("concurrence estimate must be nonnegative")
    rt = _rho_tilde_mat(rho_tilde)
    u_ent = 0.5 + expectation(rt, rho) - c
    outcome = Outcome.Entangled if u_ent < 0.5 - SLACK else Outcome.Inconclusive
    return Verdict(outcome=outcome, evidence=float(u_ent), criterion="criterion3")

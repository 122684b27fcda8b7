"""Dense complex-matrix substrate for small multipartite quantum states.

Everything here operates on plain ``numpy`` arrays of ``complex128`` plus a
list of subsystem dimensions.  Subsystem 0 is the *leftmost* tensor factor and
the computational basis is big-endian (for three qubits, basis index 0 is
|000> and index 7 is |111>).

The eigensolver is a cyclic complex Jacobi iteration, which is robust and
exact enough for the matrix sizes this package targets (side length <= 16).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionError,
    HermiticityViolation,
    NegativityViolation,
    TraceViolation,
)

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_FLOOR = -1e-9

_JACOBI_OFF_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class DensityMatrix:
    """A validated density matrix with its subsystem dimension list.

    Instances should be created through :func:`validate_density`, which
    enforces hermiticity, unit trace, and positive semidefiniteness.

    Attributes
    ----------
    mat : numpy.ndarray
        Square complex matrix.
    dims : tuple of int
        Subsystem dimensions; their product equals the side length.
    """

    mat: np.ndarray
    dims: tuple

    @property
    def dim(self):
        """Total Hilbert-space dimension (side length of ``mat``)."""
        return self.mat.shape[0]

    def __post_init__(self):
        object.__setattr__(self, "mat", np.asarray(self.mat, dtype=complex))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of a Hermitian matrix, sorted ascending.

    Attributes
    ----------
    eigenvalues : numpy.ndarray
        Real eigenvalues in ascending order.
    residual : float
        max over returned pairs of ``|H v - lambda v|`` (infinity norm).
    vectors : numpy.ndarray
        Unit eigenvectors as columns, aligned with ``eigenvalues``.
    """

    eigenvalues: np.ndarray
    residual: float
    vectors: np.ndarray = field(repr=False, default=None)


def tensor(a, b):
    """Kronecker product of two matrices.

    Entry ``(i1*rb + i2, j1*cb + j2)`` equals ``a[i1, j1] * b[i2, j2]``.

    Parameters
    ----------
    a, b : array_like
        Input matrices.

    Returns
    -------
    numpy.ndarray
    """
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def _as_square(m):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def _mat_dims(rho, dims=None):
    """Accept a DensityMatrix or a (matrix, dims) pair."""
    if isinstance(rho, DensityMatrix):
        return rho.mat, list(rho.dims)
    if dims is None:
        raise DimensionError("subsystem dimensions required for a bare matrix")
    return _as_square(rho), [int(d) for d in dims]


def partial_transpose(rho, sys, dims=None):
    """Partial transpose over one factor of a bipartite matrix.

    Parameters
    ----------
    rho : DensityMatrix or array_like
        Bipartite state (pass ``dims`` for a bare matrix).
    sys : int
        Which subsystem to transpose, 0 or 1.
    dims : list of int, optional
        Subsystem dimensions when ``rho`` is a bare matrix.

    Returns
    -------
    numpy.ndarray
        The matrix with the chosen subsystem's indices transposed.
    """
    mat, d = _mat_dims(rho, dims)
    if len(d) != 2:
        raise DimensionError(f"partial transpose needs 2 subsystems, got {len(d)}")
    if sys not in (0, 1):
        raise DimensionError(f"sys must be 0 or 1, got {sys}")
    d0, d1 = d
    t = mat.reshape(d0, d1, d0, d1)
    if sys == 0:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(d0 * d1, d0 * d1)


def partial_transpose_qubit(rho, qubit):
    """Partial transpose of a three-qubit state over one named qubit.

    Parameters
    ----------
    rho : DensityMatrix or array_like
        8x8 three-qubit state.
    qubit : {'A', 'B', 'C'}
        Qubit to transpose (A is the leftmost factor).

    Returns
    -------
    numpy.ndarray
    """
    mat, d = _mat_dims(rho, [2, 2, 2] if not isinstance(rho, DensityMatrix) else None)
    if d != [2, 2, 2] or mat.shape != (8, 8):
        raise DimensionError("partial_transpose_qubit needs an 8x8 state with dims [2,2,2]")
    try:
        k = {"A": 0, "B": 1, "C": 2}[qubit]
    except KeyError:
        raise DimensionError(f"qubit must be 'A', 'B' or 'C', got {qubit!r}") from None
    t = mat.reshape(2, 2, 2, 2, 2, 2)
    axes = list(range(6))
    axes[k], axes[k + 3] = axes[k + 3], axes[k]
    return t.transpose(axes).reshape(8, 8)


def partial_trace(rho, keep, dims=None):
    """Reduced density matrix over a kept subset of subsystems.

    Parameters
    ----------
    rho : DensityMatrix or array_like
        Multipartite state.
    keep : iterable of int
        Indices of subsystems to keep, in ascending order of position.
    dims : list of int, optional
        Required when ``rho`` is a bare matrix.

    Returns
    -------
    DensityMatrix
        Valid reduced state over the kept subsystems.
    """
    mat, d = _mat_dims(rho, dims)
    keep = sorted(set(int(k) for k in keep))
    n = len(d)
    if not keep:
        raise DimensionError("keep set must be nonempty")
    if any(k < 0 or k >= n for k in keep):
        raise DimensionError(f"keep indices {keep} out of range for {n} subsystems")
    t = mat.reshape(d + d)
    traced = [k for k in range(n) if k not in keep]
    # Trace out highest-numbered subsystems first so axis numbers stay valid.
    nleft = n
    for k in reversed(traced):
        t = np.trace(t, axis1=k, axis2=k + nleft)
        nleft -= 1
    side = int(np.prod([d[k] for k in keep]))
    out = t.reshape(side, side)
    return validate_density(out, [d[k] for k in keep])


def realign(rho, dims=None):
    """Realignment of a bipartite matrix with square blocks.

    Each ``d x d`` block of the matrix is flattened into one row of the
    output, so for a state ``A (x) B`` the result is ``vec(A) vec(B)^T``.

    Parameters
    ----------
    rho : DensityMatrix or array_like
        State with dims ``[d, d]``.
    dims : list of int, optional

    Returns
    -------
    numpy.ndarray
        The realigned ``d^2 x d^2`` matrix.
    """
    mat, d = _mat_dims(rho, dims)
    if len(d) != 2 or d[0] != d[1]:
        raise DimensionError(f"realignment needs dims [d, d], got {d}")
    n = d[0]
    return mat.reshape(n, n, n, n).transpose(0, 2, 1, 3).reshape(n * n, n * n)


def _jacobi(h):
    """Cyclic complex Jacobi diagonalization of a Hermitian matrix."""
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            row = np.abs(a[p, p + 1:])
            if row.size:
                off = max(off, row.max())
        if off < _JACOBI_OFF_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mod = abs(apq)
                if mod < _JACOBI_OFF_TOL:
                    continue
                phase = apq / mod
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mod)
                if tau >= 0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # Rotation U: U[p,p]=c, U[p,q]=s*phase, U[q,p]=-s*conj(phase),
                # U[q,q]=c; update A <- U^dagger A U and accumulate V <- V U.
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p - s * np.conj(phase) * vcol_q
                v[:, q] = s * phase * vcol_p + c * vcol_q
    return np.real(np.diag(a)), v


def herm_eigenvalues(h):
    """Real spectrum of a Hermitian matrix via cyclic complex Jacobi rotations.

    Parameters
    ----------
    h : array_like
        Hermitian matrix (checked to 1e-10).

    Returns
    -------
    Spectrum
        Ascending eigenvalues, eigenvectors, and the achieved residual.

    Raises
    ------
    HermiticityViolation
        If the input is not Hermitian within tolerance.
    """
    m = _as_square(h)
    herm_dev = float(np.max(np.abs(m - m.conj().T)))
    if herm_dev > HERM_TOL:
        raise HermiticityViolation("eigensolver input is not Hermitian", herm_dev)
    lam, vec = _jacobi(m)
    order = np.argsort(lam)
    lam = lam[order]
    vec = vec[:, order]
    residual = float(np.max(np.abs(m @ vec - vec * lam[np.newaxis, :])))
    return Spectrum(eigenvalues=lam, residual=residual, vectors=vec)


def trace_norm(a):
    """Trace norm (sum of singular values) of a square matrix.

    For Hermitian input this is the sum of absolute eigenvalues; otherwise
    the singular values are obtained as square roots of the spectrum of
    ``A A^dagger``.

    Parameters
    ----------
    a : array_like
        Square matrix.

    Returns
    -------
    float
    """
    m = _as_square(a)
    if np.max(np.abs(m - m.conj().T)) <= HERM_TOL:
        return float(np.sum(np.abs(herm_eigenvalues(m).eigenvalues)))
    lam = herm_eigenvalues(m @ m.conj().T).eigenvalues
    return float(np.sum(np.sqrt(np.clip(lam, 0.0, None))))


def expectation(h, rho):
    """Expectation value ``Tr(h rho)`` of a Hermitian operator.

    Parameters
    ----------
    h : array_like
        Hermitian operator.
    rho : DensityMatrix or array_like
        State of matching dimension.

    Returns
    -------
    float
        The (real) trace value.
    """
    hm = _as_square(h)
    mat = rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if hm.shape != mat.shape:
        raise DimensionError(f"operator shape {hm.shape} != state shape {mat.shape}")
    val = complex(np.trace(hm @ mat))
    if abs(val.imag) > 1e-8:
        raise HermiticityViolation("expectation value has an imaginary part", abs(val.imag))
    return float(val.real)


def validate_density(m, dims):
    """Validate a matrix as a density matrix and wrap it.

    Parameters
    ----------
    m : array_like
        Candidate square matrix.
    dims : list of int
        Subsystem dimensions; product must equal the side length.

    Returns
    -------
    DensityMatrix

    Raises
    ------
    HermiticityViolation, TraceViolation, NegativityViolation
        With the offending magnitude attached.
    """
    mat = _as_square(m)
    dims = [int(d) for d in dims]
    if int(np.prod(dims)) != mat.shape[0]:
        raise DimensionError(f"dims {dims} do not multiply to side length {mat.shape[0]}")
    herm_dev = float(np.max(np.abs(mat - mat.conj().T)))
    if herm_dev > HERM_TOL:
        raise HermiticityViolation("density matrix is not Hermitian", herm_dev)
    trace_dev = abs(complex(np.trace(mat)) - 1.0)
    if trace_dev > TRACE_TOL:
        raise TraceViolation("density matrix trace differs from 1", trace_dev)
    lam_min = float(herm_eigenvalues(mat).eigenvalues[0])
    if lam_min < PSD_FLOOR:
        raise NegativityViolation("density matrix has a negative eigenvalue", -lam_min)
    return DensityMatrix(mat=mat, dims=tuple(dims))

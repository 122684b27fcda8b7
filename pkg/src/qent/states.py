"""Named state families used across the detection, measure, and
classification examples.

All constructors return validated :class:`~qent.linalg.DensityMatrix`
instances (or plain state vectors where noted).  Basis ordering is big-endian
computational, subsystem 0 leftmost.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError
from .linalg import DensityMatrix, tensor, validate_density


def ket(amplitudes, dims):
    """Normalized state vector from raw amplitudes.

    Parameters
    ----------
    amplitudes : array_like
        Complex amplitudes in the computational basis.
    dims : list of int
        Subsystem dimensions (checked against the vector length).

    Returns
    -------
    numpy.ndarray
    """
    v = np.asarray(amplitudes, dtype=complex)
    if v.ndim != 1 or v.size != int(np.prod(dims)):
        raise DimensionError(f"vector length {v.size} does not match dims {dims}")
    norm = np.linalg.norm(v)
    if norm == 0:
        raise DimensionError("zero vector")
    return v / norm


def projector(psi, dims):
    """Density matrix |psi><psi| of a (normalized) state vector."""
    v = ket(psi, dims)
    return validate_density(np.outer(v, v.conj()), dims)


def basis_ket(index, dim):
    """Computational basis vector |index> in a ``dim``-level system."""
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


# ---------------------------------------------------------------------------
# Two-qubit families
# ---------------------------------------------------------------------------

def bell_phi_plus():
    """|phi+> = (|00> + |11>)/sqrt(2) as a two-qubit vector."""
    return ket([1, 0, 0, 1], [2, 2])


def bell_psi_minus():
    """|psi-> = (|01> - |10>)/sqrt(2) as a two-qubit vector."""
    return ket([0, 1, -1, 0], [2, 2])


def werner_state(F):
    """Werner state ``F |psi-><psi-| + (1-F) I/4``.

    Entangled (NPT) exactly for F > 1/3.
    """
    v = bell_psi_minus()
    mat = F * np.outer(v, v.conj()) + (1.0 - F) * np.eye(4) / 4.0
    return validate_density(mat, [2, 2])


def x_state(a, b, f):
    """Two-qubit X-shaped state: diag(a, b, b, a) with coherence f between |01> and |10>.

    Requires ``a + b = 1/2``; positive semidefinite iff ``|f| <= b`` and
    entangled iff ``a < |f| <= b`` with concurrence ``|f| - a``.
    """
    if abs((a + b) - 0.5) > 1e-12:
        raise DimensionError("x_state needs a + b = 1/2")
    mat = np.diag([a, b, b, a]).astype(complex)
    mat[1, 2] = f
    mat[2, 1] = np.conj(f)
    return validate_density(mat, [2, 2])


def x_state_concurrence(a, f):
    """Closed-form concurrence parameter ``max(0, |f| - a)`` of the X family.

    This is the scale used by the family's witness and eigenvalue bounds;
    it is half the Wootters concurrence ``2(|f| - a)`` of the same state.
    """
    return max(0.0, abs(f) - a)


def mems_state(C):
    """Maximally entangled mixed state with target concurrence ``C``.

    The two-parameter family with ``h = C/2`` for ``C >= 2/3`` and ``h = 1/3``
    below.
    """
    h = C / 2.0 if C >= 2.0 / 3.0 else 1.0 / 3.0
    mat = np.zeros((4, 4), dtype=complex)
    mat[0, 0] = h
    mat[3, 3] = h
    mat[1, 1] = 1.0 - 2.0 * h
    mat[0, 3] = mat[3, 0] = C / 2.0
    return validate_density(mat, [2, 2])


# ---------------------------------------------------------------------------
# Qutrit-qubit family
# ---------------------------------------------------------------------------

def qutrit_qubit_alpha_state(alpha):
    """Qutrit-qubit mixture ``alpha P[(|01>+|21>)/sqrt2] + (1-alpha) P[(|02>... )]``.

    Concretely (6x6, qutrit first): weight ``alpha`` on the projector onto
    ``(|0>|1> + |2>|0>)/sqrt(2)`` and ``1 - alpha`` on the projector onto
    ``(|1>|0> + |2>|1>)/sqrt(2)``; entangled for every ``alpha`` in [0, 1].
    """
    mat = np.zeros((6, 6), dtype=complex)
    mat[1, 1] = mat[4, 4] = mat[1, 4] = mat[4, 1] = alpha / 2.0
    mat[2, 2] = mat[5, 5] = mat[2, 5] = mat[5, 2] = (1.0 - alpha) / 2.0
    return validate_density(mat, [3, 2])


# ---------------------------------------------------------------------------
# Two-qutrit families
# ---------------------------------------------------------------------------

def isotropic_two_qutrit(alpha):
    """Two-qutrit isotropic state ``alpha |phi+><phi+| + (1-alpha) I/9``.

    With ``|phi+> = (|00>+|11>+|22>)/sqrt(3)``; flagged by the reduction
    criterion for ``alpha > 1/4``.
    """
    v = ket([1, 0, 0, 0, 1, 0, 0, 0, 1], [3, 3])
    mat = alpha * np.outer(v, v.conj()) + (1.0 - alpha) * np.eye(9) / 9.0
    return validate_density(mat, [3, 3])


def horodecki_bound_entangled(a):
    """3x3 bound-entangled a-family flagged by the realignment criterion.

    PPT for every ``a`` in [0, 1] yet entangled for ``0 < a < 1``.
    """
    r = np.zeros((9, 9), dtype=complex)
    for i in range(9):
        r[i, i] = a
    r[6, 6] = (1.0 + a) / 2.0
    r[8, 8] = (1.0 + a) / 2.0
    s = np.sqrt(1.0 - a * a) / 2.0
    r[6, 8] = r[8, 6] = s
    for i, j in [(0, 4), (0, 8), (4, 8)]:
        r[i, j] = a
        r[j, i] = a
    return validate_density(r / (8.0 * a + 1.0), [3, 3])


def pptes_two_qutrit():
    """A fixed 9x9 PPT-entangled two-qutrit state (all PT eigenvalues >= 0)."""
    root5 = np.sqrt(5.0)
    a = (1.0 + root5) / (3.0 + 9.0 * root5)
    b = -2.0 / (3.0 + 9.0 * root5)
    c = (-1.0 + root5) / (3.0 + 9.0 * root5)
    mat = np.diag([a, c, a, a, a, c, c, a, a]).astype(complex)
    for i, j in [(0, 4), (0, 8), (5, 7)]:
        mat[i, j] = b
        mat[j, i] = b
    return validate_density(mat, [3, 3])


def two_qutrit_a_state(a):
    """Two-qutrit mixture of three unnormalized projectors, ``1/sqrt2 <= a <= 1``.

    ``(|psi1><psi1| + |psi2><psi2| + |psi3><psi3|)/(5 + 2a^2)`` with
    ``|psi_i> = |0i> - a|i0>`` (i = 1, 2) and ``|psi3> = sum_i |ii>``.
    """
    p1 = basis_ket(1, 9) - a * basis_ket(3, 9)      # |01> - a|10>
    p2 = basis_ket(2, 9) - a * basis_ket(6, 9)      # |02> - a|20>
    p3 = basis_ket(0, 9) + basis_ket(4, 9) + basis_ket(8, 9)
    mat = sum(np.outer(p, p.conj()) for p in (p1, p2, p3)) / (5.0 + 2.0 * a * a)
    return validate_density(mat, [3, 3])


def two_qutrit_alpha_state(alpha):
    """Two-qutrit alpha-family ``(2/7) phi+ + (alpha/7) s+ + ((5-alpha)/7) s-``.

    ``s+`` mixes |01>,|12>,|20>; ``s-`` mixes |10>,|21>,|02>.  NPT entangled
    for ``4 < alpha <= 5``, PPT (bound) entangled for ``3 < alpha <= 4``.
    """
    v = ket([1, 0, 0, 0, 1, 0, 0, 0, 1], [3, 3])
    phi = np.outer(v, v.conj())
    s_plus = np.zeros((9, 9), dtype=complex)
    for idx in (1, 5, 6):                           # |01>, |12>, |20>
        s_plus[idx, idx] = 1.0 / 3.0
    s_minus = np.zeros((9, 9), dtype=complex)
    for idx in (3, 7, 2):                           # |10>, |21>, |02>
        s_minus[idx, idx] = 1.0 / 3.0
    mat = (2.0 / 7.0) * phi + (alpha / 7.0) * s_plus + ((5.0 - alpha) / 7.0) * s_minus
    return validate_density(mat, [3, 3])


# ---------------------------------------------------------------------------
# Three-qubit vectors and families
# ---------------------------------------------------------------------------

def ghz_state(alpha=None, beta=None):
    """Generalized GHZ vector ``alpha|000> + beta|111>`` (defaults 1/sqrt2)."""
    if alpha is None:
        alpha = beta = 1.0 / np.sqrt(2.0)
    v = np.zeros(8, dtype=complex)
    v[0] = alpha
    v[7] = beta
    return ket(v, [2, 2, 2])


def w_state(l0=None, l1=None, l2=None):
    """Generalized W vector ``l0|001> + l1|010> + l2|100>`` (defaults 1/sqrt3)."""
    if l0 is None:
        l0 = l1 = l2 = 1.0 / np.sqrt(3.0)
    v = np.zeros(8, dtype=complex)
    v[1], v[2], v[4] = l0, l1, l2
    return ket(v, [2, 2, 2])


def w_tilde_state():
    """Flipped W vector ``(|110> + |101> + |011>)/sqrt(3)``."""
    v = np.zeros(8, dtype=complex)
    v[6] = v[5] = v[3] = 1.0
    return ket(v, [2, 2, 2])


def ghz_tilted_state(l0, l1, l2):
    """Pure vector ``l0|000> + l1|100> + l2|111>`` (genuine for generic params)."""
    v = np.zeros(8, dtype=complex)
    v[0], v[4], v[7] = l0, l1, l2
    return ket(v, [2, 2, 2])


def g2_state():
    """The fixed genuine five-term vector ``(|000>+|100>+|101>+|110>+|111>)/sqrt5``."""
    v = np.zeros(8, dtype=complex)
    for idx in (0, 4, 5, 6, 7):
        v[idx] = 1.0
    return ket(v, [2, 2, 2])


def bisep_a_bc_state(q):
    """Mixed state biseparable in the A-BC cut.

    ``q |0><0| (x) phi+ + (1-q) |1><1| (x) phi-`` with Bell states on BC.
    """
    phi_p = ket([1, 0, 0, 1], [2, 2])
    phi_m = ket([1, 0, 0, -1], [2, 2])
    mat = q * tensor(np.diag([1.0, 0.0]), np.outer(phi_p, phi_p.conj())) \
        + (1.0 - q) * tensor(np.diag([0.0, 1.0]), np.outer(phi_m, phi_m.conj()))
    return validate_density(mat, [2, 2, 2])


def bisep_ab_c_state(l0, l1, l2):
    """Pure vector ``l0|001> + l1|101> + l2|111>`` (biseparable AB-C for C fixed)."""
    v = np.zeros(8, dtype=complex)
    v[1], v[5], v[7] = l0, l1, l2
    return ket(v, [2, 2, 2])


def kay_state(a):
    """Kay's one-parameter 8x8 family, valid for ``a >= 2``.

    Separable for ``a >= 4`` and PPT-entangled for ``2 <= a < 2 sqrt(2)``.
    """
    diag = np.array([4.0 + a, a, a, a, a, a, a, 4.0 + a])
    anti = np.array([2.0, 2.0, -2.0, 2.0, 2.0, -2.0, 2.0, 2.0])
    mat = np.diag(diag).astype(complex)
    for i in range(8):
        mat[i, 7 - i] += anti[i]
    return validate_density(mat / (8.0 + 8.0 * a), [2, 2, 2])


def ghz_werner_state(alpha):
    """GHZ state mixed with white noise: ``(1-alpha) GHZ + alpha I/8``."""
    g = ghz_state()
    mat = (1.0 - alpha) * np.outer(g, g.conj()) + alpha * np.eye(8) / 8.0
    return validate_density(mat, [2, 2, 2])


def two_term_product_mixture(q):
    """Fully separable mixture ``q P[|+>|0>|1>] + (1-q) P[|111>]``."""
    plus01 = ket([0, 1, 0, 0, 0, 1, 0, 0], [2, 2, 2])    # (|001>+|101>)/sqrt2
    mat = q * np.outer(plus01, plus01.conj())
    mat[7, 7] += 1.0 - q
    return validate_density(mat, [2, 2, 2])


def ghz_corner_mixture(q):
    """Separable-boundary mixture ``q |000><000| + (1-q) GHZ``."""
    g = ghz_state()
    mat = (1.0 - q) * np.outer(g, g.conj())
    mat[0, 0] += q
    return validate_density(mat, [2, 2, 2])


def ghz_w_mixture(q):
    """Two-term mixture ``q GHZ + (1-q) W`` of the standard GHZ and W states."""
    g = ghz_state()
    w = w_state()
    mat = q * np.outer(g, g.conj()) + (1.0 - q) * np.outer(w, w.conj())
    return validate_density(mat, [2, 2, 2])


def ghz_w_wtilde_mixture(q1, q2):
    """Three-term mixture ``q1 GHZ + q2 W + (1-q1-q2) W~``."""
    if q1 < -1e-12 or q2 < -1e-12 or q1 + q2 > 1 + 1e-12:
        raise DimensionError("need q1, q2 >= 0 and q1 + q2 <= 1")
    g = ghz_state()
    w = w_state()
    wt = w_tilde_state()
    mat = q1 * np.outer(g, g.conj()) + q2 * np.outer(w, w.conj()) \
        + (1.0 - q1 - q2) * np.outer(wt, wt.conj())
    return validate_density(mat, [2, 2, 2])


def maximal_slice_state(c, d):
    """Maximal slice vector ``(|000> + c|110> + d|111>)/sqrt(2)``, c^2+d^2=1."""
    v = np.zeros(8, dtype=complex)
    v[0], v[6], v[7] = 1.0, c, d
    return ket(v, [2, 2, 2])


def two_slice_superposition(a, c, p):
    """Vector ``sqrt(p)(a|000> + b|111>) - sqrt(1-p)(c|110> + d|101>)``.

    With ``b = sqrt(1-a^2)`` and ``d = sqrt(1-c^2)``.
    """
    b = np.sqrt(1.0 - a * a)
    dd = np.sqrt(1.0 - c * c)
    v = np.zeros(8, dtype=complex)
    v[0] = np.sqrt(p) * a
    v[7] = np.sqrt(p) * b
    v[6] = -np.sqrt(1.0 - p) * c
    v[5] = -np.sqrt(1.0 - p) * dd
    return ket(v, [2, 2, 2])


# ---------------------------------------------------------------------------
# Coherence-example states (three-qubit, four-qubit, three-qutrit)
# ---------------------------------------------------------------------------

def embed_pair_product(single, single_pos, pair, n=3):
    """Product of a single-qubit state at ``single_pos`` with a two-qubit state
    on the remaining ordered positions of an ``n``-qubit register.

    Parameters
    ----------
    single : numpy.ndarray
        2x2 density matrix.
    single_pos : int
        Register position of the single qubit.
    pair : numpy.ndarray
        4x4 density matrix on the remaining qubits in ascending position order.
    n : int
        Register size (the pair part must have ``n - 1`` qubits; default 3).

    Returns
    -------
    numpy.ndarray
        The ``2^n x 2^n`` product matrix with factors routed to their positions.
    """
    rest = int(2 ** (n - 1))
    if pair.shape != (rest, rest):
        raise DimensionError("pair factor has the wrong size for this register")
    full = tensor(single, pair).reshape([2] * (2 * n))
    order = list(range(1, n))
    order.insert(single_pos, 0)
    # output axis k carries product-layout axis perm[k]
    perm = order + [o + n for o in order]
    return full.transpose(perm).reshape(2 ** n, 2 ** n)


def coherence_bisep_mixture(q):
    """Three-qubit ``q |0>_A<0| (x) phi+_BC + (1-q) |1>_B<1| (x) phi-_AC``."""
    phi_p = ket([1, 0, 0, 1], [2, 2])
    phi_m = ket([1, 0, 0, -1], [2, 2])
    term_a = tensor(np.diag([1.0, 0.0]), np.outer(phi_p, phi_p.conj()))
    term_b = embed_pair_product(np.diag([0.0, 1.0]).astype(complex), 1,
                                np.outer(phi_m, phi_m.conj()), n=3)
    return validate_density(q * term_a + (1.0 - q) * term_b, [2, 2, 2])


def coherence_bisep_four_qubit():
    """Four-qubit ``(1/2)|0>_A<0| (x) phi+_BCD + (1/2)|1>_B<1| (x) phi-_ACD``.

    With ``phi+- = (|100> +- |010>)/sqrt(2)`` on the three remaining qubits.
    """
    phi_p = ket([0, 0, 1, 0, 1, 0, 0, 0], [2, 2, 2])
    phi_m = ket([0, 0, -1, 0, 1, 0, 0, 0], [2, 2, 2])
    term_a = tensor(np.diag([1.0, 0.0]), np.outer(phi_p, phi_p.conj()))
    term_b = embed_pair_product(np.diag([0.0, 1.0]).astype(complex), 1,
                                np.outer(phi_m, phi_m.conj()), n=4)
    return validate_density(0.5 * term_a + 0.5 * term_b, [2, 2, 2, 2])


def diagonal_four_qubit():
    """Separable incoherent four-qubit mixture of |0000>, |0011>, |1000>, |1111>."""
    mat = np.zeros((16, 16), dtype=complex)
    for idx in (0, 3, 8, 15):
        mat[idx, idx] = 0.25
    return validate_density(mat, [2, 2, 2, 2])


def three_qutrit_bisep():
    """Three-qutrit vector ``|0>_A (x) (|12> + |01> + |20>)/sqrt(3)``."""
    pair = np.zeros(9, dtype=complex)
    pair[5] = pair[1] = pair[6] = 1.0      # |12>, |01>, |20>
    v = np.zeros(27, dtype=complex)
    v[:9] = pair / np.sqrt(3.0)
    return ket(v, [3, 3, 3])

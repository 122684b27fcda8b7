"""Three-qubit classification.

Two complementary toolsets:

* canonical-state machinery for pure states — the five-parameter normal
  form, correlation tensors, local-unitary invariants, and the family of
  GHZ-subclass witnesses ``H1..H8`` built from few-body observables;
* the SPA-PT eigenvalue-threshold SLOCC classifier for arbitrary (mixed)
  three-qubit states, comparing the minimum eigenvalues of the three
  single-qubit SPA partial transposes against the 1/10 floor.

The subclass witnesses assume phase ``theta = 0``; nonzero phases are
rejected rather than silently handled.  Witness signs are evidence about
the parametric form, not a SLOCC-inequivalence proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionError, NotGHZClass
from .linalg import DensityMatrix, expectation, herm_eigenvalues, tensor
from .spa import spa_pt_three_qubit

_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_I2 = np.eye(2, dtype=complex)
_PAULI = {"x": _SX, "y": _SY, "z": _SZ}

SLACK = 1e-9
THRESHOLD = 0.1

# Tangle boundary of the GHZ/W/W~ mixture regimes (quoted value).
_W_CLASS_MAX_Q1 = 0.6269


@dataclass(frozen=True)
class CanonicalThreeQubit:
    """Parameters of the five-parameter canonical pure three-qubit state.

    ``lambda0 |000> + lambda1 e^{i theta} |100> + lambda2 |101>
    + lambda3 |110> + lambda4 |111>`` with all lambdas in [0, 1] and
    squared norms summing to 1.
    """

    lambda0: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    theta: float = 0.0

    @property
    def lambdas(self):
        return (self.lambda0, self.lambda1, self.lambda2, self.lambda3, self.lambda4)

    def __post_init__(self):
        s = sum(l * l for l in self.lambdas)
        if abs(s - 1.0) > 1e-6:
            raise DimensionError(f"canonical lambdas have squared norm {s}, expected 1")
        if not (0.0 <= self.theta <= np.pi):
            raise DimensionError("theta must lie in [0, pi]")


def canonical_state(params: CanonicalThreeQubit):
    """Amplitude vector of the canonical state (basis |000>..|111>)."""
    l0, l1, l2, l3, l4 = params.lambdas
    v = np.zeros(8, dtype=complex)
    v[0] = l0
    v[4] = l1 * np.exp(1j * params.theta)
    v[5] = l2
    v[6] = l3
    v[7] = l4
    return v / np.linalg.norm(v)


def canonical_projector(params: CanonicalThreeQubit) -> DensityMatrix:
    """Density matrix of the canonical state."""
    v = canonical_state(params)
    return DensityMatrix(mat=np.outer(v, v.conj()), dims=(2, 2, 2))


@dataclass(frozen=True)
class CorrelationTensor:
    """Three-body correlation tensors of a three-qubit state.

    ``T_w[r, c] = Tr(rho sigma_w (x) sigma_c (x) sigma_r)`` for
    ``w in {x, y, z}`` and row/column indices running over (x, y, z) —
    the column picks the middle qubit's Pauli and the row the last one's.
    """

    Tx: np.ndarray
    Ty: np.ndarray
    Tz: np.ndarray


def correlation_tensors(rho: DensityMatrix) -> CorrelationTensor:
    """Correlation tensors of a three-qubit state."""
    if list(rho.dims) != [2, 2, 2]:
        raise DimensionError("correlation tensors need dims [2, 2, 2]")
    axes = ("x", "y", "z")
    out = {}
    for w in axes:
        t = np.zeros((3, 3))
        for r, pr in enumerate(axes):
            for c, pc in enumerate(axes):
                op = tensor(tensor(_PAULI[w], _PAULI[pc]), _PAULI[pr])
                t[r, c] = expectation(op, rho)
        out[w] = t
    return CorrelationTensor(Tx=out["x"], Ty=out["y"], Tz=out["z"])


@dataclass(frozen=True)
class LuInvariants:
    """Local-unitary invariants of a canonical three-qubit state."""

    tau: float
    c_ab: float
    c_ac: float
    c_bc: float
    i1: float
    i2: float
    i3: float
    i4: float
    i5: float


def lu_invariants(params: CanonicalThreeQubit) -> LuInvariants:
    """Tangle, pairwise concurrences, and the polynomial invariants I1..I5."""
    l0, l1, l2, l3, l4 = params.lambdas
    phase = np.exp(1j * params.theta)
    return LuInvariants(
        tau=4.0 * l0 ** 2 * l4 ** 2,
        c_ab=2.0 * l0 * l3,
        c_ac=2.0 * l0 * l2,
        c_bc=2.0 * abs(l2 * l3 - phase * l1 * l4),
        i1=1.0,
        i2=2.0 * (l1 * l2 + l3 * l4) ** 2,
        i3=2.0 * (l1 * l3 + l2 * l4) ** 2,
        i4=2.0 * l0 ** 2 * l1 ** 2,
        i5=4.0 * l0 ** 4 * l4 ** 4,
    )


# ---------------------------------------------------------------------------
# Few-body observables and GHZ-subclass witnesses
# ---------------------------------------------------------------------------

def observable(which):
    """The fixed observables ``O1..O6`` used by the subclass witnesses.

    ``O1 = 2 sx sx sx``, ``O2 = 2 sx sz sx``, ``O3 = 2 sx sx sz``,
    ``O4 = 2 sx I I``, ``O5 = |000><000|``, ``O6 = 2 I sy sy``.
    """
    table = {
        "O1": 2.0 * tensor(tensor(_SX, _SX), _SX),
        "O2": 2.0 * tensor(tensor(_SX, _SZ), _SX),
        "O3": 2.0 * tensor(tensor(_SX, _SX), _SZ),
        "O4": 2.0 * tensor(tensor(_SX, _I2), _I2),
        "O6": 2.0 * tensor(tensor(_I2, _SY), _SY),
    }
    if which == "O5":
        m = np.zeros((8, 8), dtype=complex)
        m[0, 0] = 1.0
        return m
    try:
        return table[which]
    except KeyError:
        raise DimensionError(f"unknown observable {which!r}") from None


def _require_theta_zero(params):
    if abs(params.theta) > 1e-12:
        raise DimensionError("subclass witnesses are defined for theta = 0 only")


def _witness_coefficient(params, which):
    """Scalar multiple of the identity subtracted from O1 in witness ``which``."""
    l0, l1, l2, l3, l4 = params.lambdas
    if which == "H1":
        return 4.0 * l0 ** 2 * l1 ** 2
    if which == "H2":
        return 4.0 * l0 ** 2 * (l2 ** 2 + l4 ** 2)
    if which == "H3":
        return 4.0 * l0 ** 2 * (l3 ** 2 + l4 ** 2)
    if which == "H4":
        t1 = (l2 ** 4 - 2.0 * l2 ** 2 * l3 ** 2 + 2.0 * l2 ** 2 * l4 ** 2
              + (l3 ** 2 + l4 ** 2) ** 2)
        return 2.0 * l0 ** 2 * (1.0 - l0 ** 2 + np.sqrt(t1))
    if which in ("H5", "H8"):
        li = l2
    elif which == "H6":
        li = l3
    elif which == "H7":
        t4 = (l1 ** 4 + l2 ** 4 + l3 ** 4 + l4 ** 4 + 8.0 * l1 * l2 * l3 * l4
              - 2.0 * l2 ** 2 * l3 ** 2 + 2.0 * l2 ** 2 * l4 ** 2
              + 2.0 * l1 ** 2 * l2 ** 2 + 2.0 * l1 ** 2 * l3 ** 2
              - 2.0 * l1 ** 2 * l4 ** 2 + 2.0 * l3 ** 2 * l4 ** 2)
        return 2.0 * l0 ** 2 * (l1 ** 2 + l2 ** 2 + l3 ** 2 + l4 ** 2 + np.sqrt(t4))
    else:
        raise DimensionError(f"unknown witness {which!r}")
    ti = l1 ** 4 + 2.0 * l1 ** 2 * (li ** 2 - l4 ** 2) + (li ** 2 + l4 ** 2) ** 2
    return 2.0 * l0 ** 2 * (l1 ** 2 + li ** 2 + l4 ** 2 + np.sqrt(ti))


def ghz_witness_operator(params: CanonicalThreeQubit, which):
    """Matrix form of subclass witness ``H1..H8`` for the given parameters.

    ``H_k = O1 - c_k(params) I`` (plus ``O4/2`` for ``H8``); the scalar
    ``c_k`` is built from the state's own parameters, so these witnesses are
    tuned per state.
    """
    _require_theta_zero(params)
    h = observable("O1") - _witness_coefficient(params, which) * np.eye(8)
    if which == "H8":
        h = h + observable("O4") / 2.0
    return h


def ghz_witness_value(params: CanonicalThreeQubit, which):
    """Closed-form expectation ``Tr(H_k rho)`` of a subclass witness.

    Agrees with ``expectation(ghz_witness_operator(params, which), rho)``
    for the canonical state of the same parameters.
    """
    _require_theta_zero(params)
    l0, l1, l2, l3, l4 = params.lambdas
    val = 4.0 * l0 * l4 - _witness_coefficient(params, which)
    if which == "H8":
        val += 2.0 * l0 * l1
    return float(val)


_IMPLICATIONS = {
    "H1": "separates the lambda1 single-extension (subclass-II) from subclass-I",
    "H2": "separates the lambda2 single-extension (subclass-II) from subclass-I",
    "H3": "separates the lambda3 single-extension (subclass-II) from subclass-I",
    "H4": "separates the lambda2,lambda3 double-extension (subclass-III) from subclass-I",
    "H5": "separates the lambda1,lambda2 double-extension (subclass-III) from subclass-I",
    "H6": "separates the lambda1,lambda3 double-extension (subclass-III) from subclass-I",
    "H7": "separates the full five-parameter form (subclass-IV) from subclass-I",
    "H8": "separates subclass-III from subclass-I and subclass-II",
}

_WITNESS_NAMES = tuple(f"H{k}" for k in range(1, 9))


def parametric_subclass(params: CanonicalThreeQubit):
    """Structural subclass S1..S4 from the zero pattern of lambda1..lambda3."""
    extras = sum(1 for l in params.lambdas[1:4] if l > 1e-12)
    return f"S{extras + 1}"


@dataclass(frozen=True)
class SubclassReport:
    """Witness table for a GHZ-class canonical state.

    Attributes
    ----------
    values : dict
        Expectation value of each witness H1..H8 plus the maximal-slice
        witness ``W_MS = O1 - I``.
    negative : tuple of str
        Witnesses with value below -1e-9.
    implications : dict
        What a negative value of each listed witness indicates.
    subclass : str
        Structural subclass S1..S4 read off the parameter zero pattern.
    """

    values: dict
    negative: tuple
    implications: dict
    subclass: str


def classify_ghz_subclass(params: CanonicalThreeQubit) -> SubclassReport:
    """Evaluate all subclass witnesses and report the sign pattern."""
    _require_theta_zero(params)
    l0, l4 = params.lambda0, params.lambda4
    if 4.0 * l0 ** 2 * l4 ** 2 < 1e-24:
        raise NotGHZClass("tangle is zero; subclass witnesses need lambda0, lambda4 > 0")
    values = {w: ghz_witness_value(params, w) for w in _WITNESS_NAMES}
    values["W_MS"] = 4.0 * l0 * l4 - 1.0
    negative = tuple(w for w in _WITNESS_NAMES if values[w] < -SLACK)
    return SubclassReport(
        values=values,
        negative=negative,
        implications={w: _IMPLICATIONS[w] for w in negative},
        subclass=parametric_subclass(params),
    )


def subclass_fidelities(params: CanonicalThreeQubit, subclass):
    """Maximal teleportation fidelities ``(F_A, F_B, F_C)`` per subclass.

    ``subclass`` is one of ``"S1".."S4"`` and must match the parameter zero
    pattern (S2 is the lambda1 variant, S3 the lambda1,lambda2 variant).
    """
    _require_theta_zero(params)
    l0, l1, l2, l3, l4 = params.lambdas
    need_zero = {"S1": (l1, l2, l3), "S2": (l2, l3), "S3": (l3,), "S4": ()}
    if subclass not in need_zero:
        raise DimensionError(f"unknown subclass {subclass!r}")
    if any(abs(l) > 1e-12 for l in need_zero[subclass]):
        raise DimensionError(f"parameters do not match the {subclass} zero pattern")
    base = 2.0 * (1.0 + l0 * l4) / 3.0
    if subclass == "S1":
        return (base, base, base)
    f_a = 2.0 * (1.0 + l4 * np.sqrt(l0 ** 2 + l1 ** 2)) / 3.0
    if subclass == "S2":
        return (f_a, base, base)
    f_b = 2.0 * (1.0 + l0 * np.sqrt(l2 ** 2 + l4 ** 2)) / 3.0
    if subclass == "S3":
        return (f_a, f_b, base)
    y = (l0 ** 2 * l4 ** 2 + l1 ** 2 * l4 ** 2 + l2 ** 2 * l3 ** 2
         - 4.0 * l1 * l2 * l3 * l4)
    f_a4 = 2.0 * (1.0 + np.sqrt(max(0.0, y))) / 3.0
    f_c = 2.0 * (1.0 + l0 * np.sqrt(l3 ** 2 + l4 ** 2)) / 3.0
    return (f_a4, f_b, f_c)


# ---------------------------------------------------------------------------
# SPA-PT threshold SLOCC classifier
# ---------------------------------------------------------------------------

class SloccOutcome(Enum):
    """SLOCC-level verdicts from the SPA-PT eigenvalue thresholds."""

    Genuine = "Genuine"
    BiseparableA_BC = "BiseparableA_BC"
    BiseparableB_AC = "BiseparableB_AC"
    BiseparableC_AB = "BiseparableC_AB"
    FullySeparableConsistent = "FullySeparableConsistent"
    Inconclusive = "Inconclusive"


@dataclass(frozen=True)
class SloccVerdict:
    """Classifier outcome with the three decision eigenvalues.

    ``lambdas`` holds ``lambda_min`` of the SPA-PT over qubits A, B, C.
    ``FullySeparableConsistent`` deliberately does not claim separability:
    the threshold test is necessary only and cannot see bound entanglement.
    """

    outcome: SloccOutcome
    lambdas: tuple


def slocc_classify(rho) -> SloccVerdict:
    """Classify a three-qubit state by its SPA-PT minimum eigenvalues.

    Accepts a :class:`DensityMatrix` or a pure-state amplitude vector.

    Decision order against the 1/10 floor (1e-9 slack): all three below
    gives Genuine; otherwise the first qubit (A, B, C order) at or above
    the floor names the biseparable cut when another qubit is below; all
    three at or above the floor gives FullySeparableConsistent.
    """
    if not isinstance(rho, DensityMatrix):
        v = np.asarray(rho, dtype=complex).reshape(-1)
        if v.size != 8:
            raise DimensionError("slocc_classify needs a three-qubit state")
        v = v / np.linalg.norm(v)
        rho = DensityMatrix(mat=np.outer(v, v.conj()), dims=(2, 2, 2))
    lams = tuple(
        float(herm_eigenvalues(spa_pt_three_qubit(rho, q).rho_tilde.mat).eigenvalues[0])
        for q in ("A", "B", "C")
    )
    below = [lam < THRESHOLD - SLACK for lam in lams]
    if all(below):
        return SloccVerdict(outcome=SloccOutcome.Genuine, lambdas=lams)
    if not any(below):
        return SloccVerdict(outcome=SloccOutcome.FullySeparableConsistent, lambdas=lams)
    cut = ("A", "B", "C")[below.index(False)]
    outcome = {
        "A": SloccOutcome.BiseparableA_BC,
        "B": SloccOutcome.BiseparableB_AC,
        "C": SloccOutcome.BiseparableC_AB,
    }[cut]
    return SloccVerdict(outcome=outcome, lambdas=lams)


@dataclass(frozen=True)
class MixtureReport:
    """Analysis of GHZ/W(/flipped-W) mixtures under the SPA-PT classifier.

    Attributes
    ----------
    q1, q2 : float
        GHZ and W weights (the flipped-W weight is ``1 - q1 - q2``).
    lambdas : tuple of float
        Computed minimum SPA-PT eigenvalues per qubit cut.
    predicted : float
        Closed-form eigenvalue branch for the mixture family.  For the
        two-term mixture this is ``min(Q1, Q2)`` and always equals
        ``min(lambdas)``; for the three-term mixture it is one exact
        branch of the SPA-PT spectrum, which coincides with the minimum
        only on part of the ``(q1, q2)`` region (another branch dips
        below it elsewhere).
    q_forms : tuple of float or None
        The two eigenvalue branches (Q1, Q2) for the two-term GHZ/W mixture.
    regime : str or None
        Tangle-regime label by GHZ weight: W-class for
        ``0.25 <= q1 <= 0.6269``, GHZ-class above, None below.
    verdict : SloccVerdict
        Full classifier output on the mixture.
    """

    q1: float
    q2: float
    lambdas: tuple
    predicted: float
    q_forms: tuple
    regime: str
    verdict: SloccVerdict


def ghz_w_mixture_analysis(q1, q2=None) -> MixtureReport:
    """Analyze ``q1 GHZ + q2 W + (1-q1-q2) W~`` (or the two-term GHZ/W
    mixture when ``q2`` is omitted) under the SPA-PT classifier."""
    from .states import ghz_w_mixture, ghz_w_wtilde_mixture

    two_term = q2 is None
    if two_term:
        q2 = 1.0 - q1
        rho = ghz_w_mixture(q1)
        r1 = 1.0 - 2.0 * q1 + 10.0 * q1 ** 2
        r2 = 32.0 - 64.0 * q1 + 41.0 * q1 ** 2
        q_forms = ((4.0 - q1 - np.sqrt(r1)) / 30.0,
                   (6.0 + 3.0 * q1 - np.sqrt(r2)) / 60.0)
        predicted = min(q_forms)
    else:
        rho = ghz_w_wtilde_mixture(q1, q2)
        rad = (1.0 - 2.0 * q1 + 10.0 * q1 ** 2 - 4.0 * q2 + 4.0 * q1 * q2
               + 4.0 * q2 ** 2)
        q_forms = None
        predicted = (4.0 - q1 - np.sqrt(rad)) / 30.0
    verdict = slocc_classify(rho)
    if q1 > _W_CLASS_MAX_Q1:
        regime = "GHZ-class"
    elif q1 >= 0.25:
        regime = "W-class"
    else:
        regime = None
    return MixtureReport(q1=float(q1), q2=float(q2), lambdas=verdict.lambdas,
                         predicted=float(predicted), q_forms=q_forms,
                         regime=regime, verdict=verdict)

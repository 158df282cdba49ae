"""Teleportation of one qubit to two receivers through the thermal ring.

Alice holds the input qubit S and ring site A; Bob holds B and Cindy holds C.
Alice measures (S, A) in the Bell basis, broadcasts the two-bit outcome ``j``
and both receivers apply the same Pauli correction ``U^j``:

====  ========  ==========
 j    outcome   correction
====  ========  ==========
 1    Phi+      X
 2    Phi-      Y
 3    Psi+      I
 4    Psi-      Z
====  ========  ==========

Each receiver ends with a single-qubit copy ``tau^j``; the figure of merit is
the branch fidelity ``tr(tau^j pi_in)`` averaged over outcomes and over the
Bloch sphere of pure inputs.  The classical ceiling for that average is 2/3.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .numkernel import (
    SIGMA0,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    dagger,
    kron,
    partial_trace,
    projector,
    real_trace,
    validate_density,
)
from .ring import check_exponent, partition_function, thermal_state

CORRECTIONS = (SIGMA1, SIGMA2, SIGMA0, SIGMA3)
_PAIR_CORRECTIONS = tuple(kron(u, u) for u in CORRECTIONS)
ZERO_PROBABILITY = 1e-12
QUADRATURE_NODES = 64
PHI_SAMPLES = (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)
CLASSICAL_LIMIT = 2.0 / 3.0

_S2 = 1 / math.sqrt(2)
BELL_STATES = (
    np.array([_S2, 0, 0, _S2], dtype=complex),
    np.array([_S2, 0, 0, -_S2], dtype=complex),
    np.array([0, _S2, _S2, 0], dtype=complex),
    np.array([0, _S2, -_S2, 0], dtype=complex),
)


@dataclass(frozen=True)
class TeleportOutcome:
    """One branch of the protocol.

    ``conditioned_pair`` and the outputs are ``None`` when the branch
    probability is below ``ZERO_PROBABILITY``.
    """

    j: int
    probability: float
    conditioned_pair: Optional[np.ndarray]
    output_B: Optional[np.ndarray]
    output_C: Optional[np.ndarray]

    @property
    def output_single(self):
        return self.output_B


def input_state(theta, phi):
    """Pure input ``cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>`` as a projector."""
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if not 0.0 <= phi <= 2 * math.pi:
        raise ValueError(f"phi must lie in [0, 2 pi], got {phi}")
    psi = np.array([math.cos(theta / 2), np.exp(1j * phi) * math.sin(theta / 2)])
    return projector(psi)


def bell_projectors():
    """Projectors onto Phi+, Phi-, Psi+, Psi- on (S, A), in outcome order j = 1..4."""
    return tuple(projector(v) for v in BELL_STATES)


_PROJECTORS = bell_projectors()
_PROJECTORS4 = tuple(P.reshape(2, 2, 2, 2) for P in _PROJECTORS)


def _check_j(j):
    if j not in (1, 2, 3, 4):
        raise ValueError(f"outcome index must be 1..4, got {j}")


def measure_branch(pi_S, chi, j, tol=1e-9):
    """Probability of Bell outcome ``j`` and the normalised state of (B, C) it leaves.

    Returns ``(p_j, rho_BC)``; ``rho_BC`` is ``None`` if ``p_j <= 1e-12``.
    """
    _check_j(j)
    if not (validate_density(pi_S, tol) and validate_density(chi, tol)):
        raise ValueError("measure_branch needs valid density matrices")
    return _branch(pi_S, chi, j)


def _branch(pi_S, chi, j):
    # tr_SA[(Pi x I)(pi x chi)] contracted index by index; same as building the
    # 16x16 product explicitly but without the intermediate.
    pi4 = _PROJECTORS4[j - 1]
    chi4 = np.asarray(chi).reshape(2, 4, 2, 4)
    unnormalised = np.einsum("satu,ts,uxay->xy", pi4, pi_S, chi4)
    p = real_trace(unnormalised, tol=1e-10)
    if p <= ZERO_PROBABILITY:
        return max(p, 0.0), None
    return p, unnormalised / p


def apply_correction(rho_BC, j):
    """Apply ``U^j`` to both receivers and return ``(tau_B, tau_C)``."""
    _check_j(j)
    uu = _PAIR_CORRECTIONS[j - 1]
    corrected = uu @ rho_BC @ dagger(uu)
    return partial_trace(corrected, [2, 2], [0]), partial_trace(corrected, [2, 2], [1])


def branch_fidelity(tau, pi_in):
    return real_trace(np.asarray(tau) @ np.asarray(pi_in), tol=1e-10)


def run_protocol(pi_S, chi, validate=True):
    """All four branches of the protocol for input ``pi_S`` and resource ``chi``."""
    if validate and not (validate_density(pi_S, 1e-9) and validate_density(chi, 1e-9)):
        raise ValueError("run_protocol needs valid density matrices")
    outcomes = []
    for j in (1, 2, 3, 4):
        p, rho = _branch(pi_S, chi, j)
        if rho is None:
            outcomes.append(TeleportOutcome(j, p, None, None, None))
            continue
        tau_b, tau_c = apply_correction(rho, j)
        outcomes.append(TeleportOutcome(j, p, rho, tau_b, tau_c))
    return outcomes


def mean_branch_fidelity(pi_S, chi, receiver="B", validate=True):
    """``sum_j p_j F^j`` for one input, skipping zero-probability branches."""
    total = 0.0
    for out in run_protocol(pi_S, chi, validate):
        if out.conditioned_pair is None:
            continue
        tau = out.output_B if receiver == "B" else out.output_C
        total += out.probability * branch_fidelity(tau, pi_S)
    return total


def _batched_weighted_fidelity(pis, chi):
    """``sum_j p_j F^j`` for a stack of pure inputs ``pis`` of shape (N, 2, 2).

    The same simulation as ``run_protocol`` followed by ``branch_fidelity``,
    with every input handled in one contraction.  Unnormalised branch states
    are used directly since ``p_j F^j = tr(U tr_SA[...] U^dag reduced, pi)``.
    """
    chi4 = np.asarray(chi).reshape(2, 4, 2, 4)
    total = np.zeros(len(pis))
    for j in range(4):
        unnormalised = np.einsum("satu,nts,uxay->nxy", _PROJECTORS4[j], pis, chi4)
        probs = np.einsum("nxx->n", unnormalised).real
        uu = _PAIR_CORRECTIONS[j]
        corrected = uu @ unnormalised @ dagger(uu)
        tau_b = np.einsum("najbj->nab", corrected.reshape(-1, 2, 2, 2, 2))
        weighted = np.einsum("nab,nba->n", tau_b, pis).real
        total += np.where(probs > ZERO_PROBABILITY, weighted, 0.0)
    return total


def average_fidelity_of_resource(chi, nodes=QUADRATURE_NODES, phis=PHI_SAMPLES):
    """Sphere-averaged teleportation fidelity for an arbitrary three-qubit resource.

    Gauss-Legendre in ``cos(theta)`` and a uniform average over ``phis``.
    Accumulation order is fixed, so the result is bitwise reproducible.
    """
    if not validate_density(chi, 1e-9):
        raise ValueError("resource is not a valid density matrix")
    u, w = np.polynomial.legendre.leggauss(nodes)
    thetas = np.arccos(np.clip(u, -1.0, 1.0))
    pis = np.array([input_state(t, phi) for t in thetas for phi in phis])
    per_node = _batched_weighted_fidelity(pis, chi).reshape(nodes, len(phis)).mean(axis=1)
    return 0.5 * float(np.dot(w, per_node))


def average_fidelity_quadrature(p, nodes=QUADRATURE_NODES):
    """Average fidelity from the simulated protocol on the thermal ring state."""
    return average_fidelity_of_resource(thermal_state(p), nodes)


def _branch_terms(p, c, c2):
    """Denominator ``f + g c`` and numerator ``h1 + h2 c2`` of the branch fidelity.

    ``c = +/- cos(theta)`` and ``c2 = cos(2 theta)``.  Both are regrouped into
    sums of non-negative terms, e.g. ``3(1 + e^{bB}) + c(1 - e^{bB})`` becomes
    ``(3 + c) + e^{bB}(3 - c)``; the textbook form cancels catastrophically
    when the branch probability is tiny.
    """
    b, J, B = p.beta, p.J, p.B
    check_exponent(3.5 * b * B + 2 * b * J, 2.5 * b * B + 3 * b * J, 0.5 * b * B + 3 * b * J, 1.5 * b * B)
    e15, eb, e05, e3b = math.exp(1.5 * b * B), math.exp(b * B), math.exp(0.5 * b * B), math.exp(3 * b * B)
    e3j, e2j = math.exp(3 * b * J), math.exp(2 * b * J)
    den = e15 * (1 + 2 * e3j) * ((3 + c) + eb * (3 - c)) + 3 * e05 * e2j * ((1 + c) + e3b * (1 - c))
    num = e15 * (1 + eb) * ((9 - c2) + 4 * e3j * (3 + c2)) + 3 * e05 * (1 + e3b) * e2j * (1 - c2)
    return den, num


def outcome_probabilities_closed(p, theta):
    """Closed-form ``(p1, p2, p3, p4)`` for the thermal resource and polar angle ``theta``."""
    p.require_finite()
    check_exponent(2 * p.beta * (p.B + p.J))
    pref = math.exp(-2 * p.beta * (p.B + p.J)) / (12 * partition_function(p))
    c = math.cos(theta)
    plus, minus = pref * _branch_terms(p, c, 0.0)[0], pref * _branch_terms(p, -c, 0.0)[0]
    return (plus, plus, minus, minus)


def branch_fidelity_closed(p, theta, j):
    """Closed-form ``F^j`` for the thermal resource; independent of the azimuth."""
    p.require_finite()
    _check_j(j)
    sign = 1.0 if j in (1, 2) else -1.0
    den, num = _branch_terms(p, sign * math.cos(theta), math.cos(2 * theta))
    return num / (4 * den)


def average_fidelity_closed(p):
    """Closed-form sphere- and outcome-averaged fidelity of the thermal resource."""
    p.require_finite()
    b, J, B = p.beta, p.J, p.B
    check_exponent(3 * b * J, 1.5 * b * B)
    e3j = math.exp(3 * b * J)
    ch, ch3 = math.cosh(0.5 * b * B), math.cosh(1.5 * b * B)
    return 1.0 / 3.0 + 2.0 / 9.0 * (2 + e3j) * ch / ((1 + 2 * e3j) * ch + math.exp(2 * b * J) * ch3)


def quantum_advantage(p):
    """True when the average fidelity strictly beats the classical 2/3."""
    p.require_finite()
    b, J, B = p.beta, p.J, p.B
    check_exponent(2 * b * J, b * J, 1.5 * b * B)
    lhs = (math.exp(-2 * b * J) - 4 * math.exp(b * J)) / 3.0
    return lhs > math.cosh(1.5 * b * B) / math.cosh(0.5 * b * B)


def average_fidelity_zero_T(J, B):
    """Exact zero-temperature limit of the average fidelity for ``B >= 0``.

    For J < 0: 7/9 below the level crossing ``B = -2J``, 5/9 at it and 1/3
    above.  For J > 0 the limit is 4/9 for ``B < J``, 11/27 at ``B = J`` and
    1/3 above, so there is never an advantage.
    """
    if J == 0:
        raise ValueError("zero-temperature case table needs J != 0")
    if B < 0:
        raise ValueError("average_fidelity_zero_T is defined for B >= 0")
    if J < 0:
        if B < -2 * J:
            return 7.0 / 9.0
        if B == -2 * J:
            return 5.0 / 9.0
        return 1.0 / 3.0
    if B < J:
        return 4.0 / 9.0
    if B == J:
        return 11.0 / 27.0
    return 1.0 / 3.0

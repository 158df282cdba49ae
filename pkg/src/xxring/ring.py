"""Three-qubit Heisenberg XX ring in a longitudinal field.

Hamiltonian (k = 1 throughout)::

    H = J/2 * sum_<ij> (X_i X_j + Y_i Y_j) + B/2 * sum_i Z_i

on the ring A-B-C.  The spectrum is known in closed form: the two fully
polarised states plus six W-type states with phase windings 1, q, q**2
(q = exp(2 pi i / 3)).
"""

import math
from dataclasses import dataclass

import numpy as np

from .numkernel import (
    SIGMA0,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    dagger,
    hermitian_eig,
    ket,
    kron,
    partial_trace,
    projector,
)

EXP_LIMIT = 700.0
LABELS = ("000", "W1", "W2", "W3", "W4", "W5", "W6", "111")
Q = np.exp(2j * np.pi / 3)
FLIP_ALL = kron(SIGMA1, SIGMA1, SIGMA1)


def check_exponent(*args):
    """Raise ``OverflowError`` if any exponent argument exceeds the range policy."""
    for x in args:
        if not abs(x) <= EXP_LIMIT:
            raise OverflowError(f"exponent argument {x:g} outside [-{EXP_LIMIT:g}, {EXP_LIMIT:g}]")


@dataclass(frozen=True)
class RingParams:
    """Coupling ``J``, field ``B`` and inverse temperature ``beta``.

    ``beta = math.inf`` marks the zero-temperature limit; most thermal
    functions reject it and the ``*_zero_T`` / ``ground_state_limit`` functions
    should be used instead.
    """

    J: float
    B: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.J) and math.isfinite(self.B)):
            raise ValueError("J and B must be finite")
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    @classmethod
    def from_temperature(cls, J, B, T):
        if T == 0:
            return cls(J, B, math.inf)
        if not T > 0:
            raise ValueError(f"temperature must be positive, got {T}")
        return cls(J, B, 1.0 / T)

    @property
    def T(self):
        return 0.0 if self.is_zero_temperature else 1.0 / self.beta

    @property
    def is_zero_temperature(self):
        return math.isinf(self.beta)

    def require_finite(self):
        if self.is_zero_temperature:
            raise ValueError("operation needs a finite beta; use the zero-temperature functions")


@dataclass(frozen=True)
class Level:
    label: str
    energy: float
    vector: np.ndarray


@dataclass(frozen=True)
class Spectrum:
    levels: tuple

    def energies(self):
        return np.array([lv.energy for lv in self.levels])

    def vectors(self):
        """Eigenvectors as the columns of an 8x8 unitary."""
        return np.column_stack([lv.vector for lv in self.levels])

    def __getitem__(self, label):
        for lv in self.levels:
            if lv.label == label:
                return lv
        raise KeyError(label)


def _w_state(bits, phases):
    return sum(ph * ket(b) for ph, b in zip(phases, bits)) / math.sqrt(3)


ONE_EXCITATION = ("001", "010", "100")
TWO_EXCITATIONS = ("011", "101", "110")

W_STATES = {
    "W1": _w_state(ONE_EXCITATION, (1, 1, 1)),
    "W2": _w_state(ONE_EXCITATION, (1, Q, Q**2)),
    "W3": _w_state(ONE_EXCITATION, (1, Q**2, Q)),
    "W4": _w_state(TWO_EXCITATIONS, (1, 1, 1)),
    "W5": _w_state(TWO_EXCITATIONS, (1, Q, Q**2)),
    "W6": _w_state(TWO_EXCITATIONS, (1, Q**2, Q)),
}
BASIS_STATES = {"000": ket("000"), **W_STATES, "111": ket("111")}


def build_hamiltonian(p):
    """8x8 ring Hamiltonian for ``p.J`` and ``p.B`` (``beta`` is ignored)."""
    J, B = p.J, p.B
    h = np.zeros((8, 8), dtype=complex)
    for s in (SIGMA1, SIGMA2):
        h += kron(s, s, SIGMA0) + kron(SIGMA0, s, s) + kron(s, SIGMA0, s)
    zeeman = kron(SIGMA3, SIGMA0, SIGMA0) + kron(SIGMA0, SIGMA3, SIGMA0) + kron(SIGMA0, SIGMA0, SIGMA3)
    return 0.5 * J * h + 0.5 * B * zeeman


def level_energies(J, B):
    """Closed-form energies keyed by level label."""
    return {
        "000": 1.5 * B,
        "W1": 0.5 * (B + 4 * J),
        "W2": 0.5 * (B - 2 * J),
        "W3": 0.5 * (B - 2 * J),
        "W4": -0.5 * (B - 4 * J),
        "W5": -0.5 * (B + 2 * J),
        "W6": -0.5 * (B + 2 * J),
        "111": -1.5 * B,
    }


def analytic_spectrum(p):
    energies = level_energies(p.J, p.B)
    return Spectrum(tuple(Level(lb, energies[lb], BASIS_STATES[lb]) for lb in LABELS))


def _log_cosh(x):
    x = abs(x)
    return x + math.log1p(math.exp(-2 * x)) - math.log(2)


def partition_function(p):
    p.require_finite()
    b, J, B = p.beta, p.J, p.B
    check_exponent(1.5 * b * B, 2 * b * J, b * J)
    return (
        2 * math.cosh(1.5 * b * B)
        + 2 * math.exp(-2 * b * J) * math.cosh(0.5 * b * B)
        + 4 * math.exp(b * J) * math.cosh(0.5 * b * B)
    )


def log_partition_function(p):
    """``log Z`` without overflow, for large ``beta``."""
    p.require_finite()
    b, J, B = p.beta, p.J, p.B
    terms = (
        math.log(2) + _log_cosh(1.5 * b * B),
        math.log(2) - 2 * b * J + _log_cosh(0.5 * b * B),
        math.log(4) + b * J + _log_cosh(0.5 * b * B),
    )
    return float(np.logaddexp.reduce(terms))


def boltzmann_weights(p):
    """Normalised thermal populations of the eight analytic levels, in ``LABELS`` order."""
    p.require_finite()
    energies = level_energies(p.J, p.B)
    e = np.array([energies[lb] for lb in LABELS])
    check_exponent(*(p.beta * e))
    w = np.exp(-p.beta * (e - e.min()))
    return w / w.sum()


def thermal_state(p):
    """Gibbs state assembled from the analytic eigenprojectors."""
    w = boltzmann_weights(p)
    chi = np.zeros((8, 8), dtype=complex)
    for weight, lb in zip(w, LABELS):
        chi += weight * projector(BASIS_STATES[lb])
    return chi


def thermal_state_oracle(p):
    """Gibbs state ``exp(-beta H) / Z`` from a numerical diagonalisation of ``H``."""
    p.require_finite()
    values, vectors = hermitian_eig(build_hamiltonian(p))
    check_exponent(*(p.beta * values))
    w = np.exp(-p.beta * (values - values.min()))
    w /= w.sum()
    return (vectors * w) @ dagger(vectors)


def ground_state_limit(J, B, rtol=1e-12):
    """Zero-temperature limit of the Gibbs state for ``J != 0`` and ``B >= 0``.

    The result is the equal-weight mixture over all levels tied for the lowest
    energy, which is what the ``beta -> inf`` limit of the Gibbs state gives.
    At the level crossings ``B = J`` (J > 0) and ``B = -2J`` (J < 0) this is a
    mixture of three and two levels respectively.  Nothing special happens at
    ``B = -4J`` for J < 0: ``|111>`` is the unique ground state there.
    """
    if J == 0:
        raise ValueError("ground-state case table needs J != 0")
    if B < 0:
        raise ValueError("ground_state_limit is defined for B >= 0")
    ground = ground_labels(J, B, rtol)
    chi = sum(projector(BASIS_STATES[lb]) for lb in ground)
    return chi / len(ground)


def ground_labels(J, B, rtol=1e-12):
    """Labels of the levels tied for the lowest energy (relative tolerance ``rtol``)."""
    energies = level_energies(J, B)
    e_min = min(energies.values())
    scale = max(abs(J), abs(B), 1e-300)
    return tuple(lb for lb in LABELS if energies[lb] - e_min <= rtol * scale)


def reduced_pair_state(chi):
    """Two-qubit state of sites A and B (trace over C)."""
    return partial_trace(chi, [2, 2, 2], [0, 1])


def flip_field(chi):
    """Conjugate by the global spin flip, which maps the ``B`` state onto the ``-B`` one."""
    return FLIP_ALL @ chi @ FLIP_ALL

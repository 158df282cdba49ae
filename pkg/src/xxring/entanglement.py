"""Pairwise concurrence of the ring.

Two independent routes are provided: Wootters' spin-flip construction applied
to any two-qubit density matrix, and the closed-form thermal expressions for
the XX ring.
"""

import math
from collections import namedtuple

import numpy as np

from .numkernel import SIGMA2, hermitian_eig, kron, psd_sqrt, validate_density
from .ring import _log_cosh, check_exponent

YY = kron(SIGMA2, SIGMA2)

ClosedLambdas = namedtuple("ClosedLambdas", "l1 l2 l3 l4")


def spin_flip_lambdas(rho):
    """Square roots of the eigenvalues of ``rho (Y x Y) rho* (Y x Y)``, non-increasing.

    They are obtained as the singular values of ``M = sqrt(rho) (Y x Y) sqrt(rho)*``,
    read off from the Hermitian matrix ``[[0, M], [M^dag, 0]]`` whose spectrum
    is ``+/- s_k``.  Working with ``s_k`` directly avoids the square root of
    near-zero eigenvalues, which would amplify round-off to ~1e-8.
    """
    rho = np.asarray(rho, dtype=complex)
    r = psd_sqrt(rho)
    m = r @ YY @ r.conj()
    z = np.zeros((4, 4), dtype=complex)
    values, _ = hermitian_eig(np.block([[z, m], [m.conj().T, z]]))
    lambdas = np.clip(values[:4], 0.0, None)
    return lambdas


def wootters_concurrence(rho, tol=1e-8):
    """Concurrence ``max(l1 - l2 - l3 - l4, 0)`` of a two-qubit density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4) or not validate_density(rho, tol):
        raise ValueError("wootters_concurrence needs a valid 4x4 density matrix")
    lam = spin_flip_lambdas(rho)
    return float(max(lam[0] - lam[1] - lam[2] - lam[3], 0.0))


def closed_form_lambdas(p):
    """The four spin-flip roots of the thermal pair state, unnormalised.

    Returned in their closed-form labelling (``l1`` is not necessarily the
    largest: for J > 0, ``l2 > l1``).  Dividing by the partition function gives
    the roots for the normalised pair state.
    """
    p.require_finite()
    b, J, B = p.beta, p.J, p.B
    check_exponent(2 * b * J, b * J, b * B)
    em2, e1 = math.exp(-2 * b * J), math.exp(b * J)
    ch = math.cosh(0.5 * b * B)
    l1 = 2.0 / 3.0 * (2 * em2 + e1) * ch
    l2 = 2 * e1 * ch
    a = (em2 + 2 * e1) / 3.0
    l3 = math.sqrt(a * a + 2 * a * math.cosh(b * B) + 1)
    return ClosedLambdas(l1, l2, l3, l3)


def thermal_concurrence(p):
    """Closed-form pairwise concurrence of the thermal ring state."""
    p.require_finite()
    b, J, B = p.beta, p.J, p.B
    check_exponent(2 * b * J, b * J, 1.5 * b * B)
    em2, e1 = math.exp(-2 * b * J), math.exp(b * J)
    ch = math.cosh(0.5 * b * B)
    a = em2 + 2 * e1
    num = 2 * abs(em2 - e1) * ch - math.sqrt(a * a + 6 * a * math.cosh(b * B) + 9)
    den = 3 * (math.cosh(1.5 * b * B) + em2 * ch + 2 * e1 * ch)
    return max(num / den, 0.0)


def _log_sinh(x):
    x = abs(x)
    return x + math.log(-math.expm1(-2 * x)) - math.log(2)


def _criterion_terms(J, B, T):
    # first**2 - root**2 as signed log-magnitude terms; see signed_concurrence
    b = 1.0 / T
    lc = _log_cosh(b * B)
    terms = [
        (1.0, -4 * b * J + float(np.logaddexp(math.log(2) + lc, 0.0))),
        (-1.0, math.log(4) - b * J + float(np.logaddexp(lc, math.log(2)))),
        (-1.0, math.log(6) - 2 * b * J + lc),
        (-1.0, math.log(12) + b * J + lc),
        (-1.0, math.log(9)),
    ]
    if B != 0:
        terms.append((1.0, math.log(4) + 2 * b * J + 2 * _log_sinh(0.5 * b * B)))
    top = max(lg for _, lg in terms)
    return math.fsum(sg * math.exp(lg - top) for sg, lg in terms), top


def entanglement_criterion(J, B, T):
    """Scale-free function of ``T`` with the same sign as the thermal concurrence numerator.

    Stays of order one at every ``T > 0`` (no underflow), which makes it the
    function of choice for locating the critical temperature.
    """
    return _criterion_terms(J, B, T)[0]


def signed_concurrence(J, B, T):
    """The closed-form concurrence before clipping at zero, evaluated in log space.

    Finite for any ``T > 0``; its zero crossing in ``T`` is the critical
    temperature beyond which the pair is unentangled.

    The numerator ``first - root`` is rewritten as
    ``(first**2 - root**2) / (first + root)`` with the difference of squares
    expanded by hand (u = e^{-2bJ}, v = e^{bJ}, C = cosh bB, s = sinh(bB/2))::

        4 v^2 s^2 + u^2 (2C + 1) - 4 u v (C + 2) - 6 u C - 12 v C - 9

    which removes the cancellation between the two leading ``2 v cosh(bB/2)``
    terms; without it the sign is lost to round-off once ``e^{b|J|}`` ~ 1e15.
    """
    b = 1.0 / T
    lc_half, lc = _log_cosh(0.5 * b * B), _log_cosh(b * B)
    diff_scaled, top = _criterion_terms(J, B, T)

    gap = 3 * b * abs(J)
    log_first = (
        math.log(2) + max(-2 * b * J, b * J) + math.log(-math.expm1(-gap)) + lc_half if gap > 0 else -math.inf
    )
    log_a = float(np.logaddexp(-2 * b * J, math.log(2) + b * J))
    log_root = 0.5 * float(np.logaddexp.reduce([2 * log_a, math.log(6) + log_a + lc, math.log(9)]))
    log_sum = float(np.logaddexp(log_first, log_root))
    log_den = float(np.logaddexp.reduce([_log_cosh(1.5 * b * B), -2 * b * J + lc_half, math.log(2) + b * J + lc_half]))
    return diff_scaled * math.exp(top - log_sum - log_den) / 3.0


def concurrence_zero_T(J, B):
    """Exact zero-temperature pairwise concurrence for ``B >= 0``."""
    if J == 0:
        raise ValueError("zero-temperature case table needs J != 0")
    if B < 0:
        raise ValueError("concurrence_zero_T is defined for B >= 0")
    if J > 0:
        if B == 0:
            return 0.0
        if B < J:
            return 1.0 / 3.0
        if B == J:
            return 2.0 / 9.0
        return 0.0
    if B == 0:
        return 1.0 / 3.0
    if B < -2 * J:
        return 2.0 / 3.0
    if B == -2 * J:
        return 1.0 / 3.0
    return 0.0

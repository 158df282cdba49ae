"""Critical temperatures of the ring.

``T1`` is where the pairwise thermal concurrence vanishes; ``T2`` is where the
average teleportation fidelity drops to the classical 2/3.  Temperatures are
returned in units of ``|J|``.  Field ratios follow the table convention:
``B = eta * |J|`` for either sign of ``J``, so ``B >= 0`` throughout.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .entanglement import entanglement_criterion
from .ring import _log_cosh

T_LOW = 1e-6
T_HIGH = 10.0
SCAN_POINTS = 400
DEFAULT_TOL = 1e-10

# x = exp(J/T), J > 0, large field
ANTIFERRO_POLY = (1, -6, 0, -2, -3, 0, 1)
# y = exp(-J/T), J < 0, large field
FERRO_POLY = (1, 0, -3, -2, 0, -6, 1)


class BracketError(ValueError):
    """The supplied interval does not bracket a sign change."""


class NoTransition(ValueError):
    """No critical temperature exists for the requested parameters."""


@dataclass(frozen=True)
class CriticalResult:
    value: float
    residual: float
    bracket: tuple
    iterations: int


def root_find(f, low, high, tol=DEFAULT_TOL):
    """Bracketed root of ``f`` on ``[low, high]`` (Brent's method).

    Converges once the bracket width is below ``tol * max(1, |root|)``.
    """
    def checked(x):
        y = f(x)
        if not math.isfinite(y):
            raise ArithmeticError(f"non-finite function value {y} at x={x}")
        return y

    f_low, f_high = checked(low), checked(high)
    if f_low == 0.0:
        return CriticalResult(low, 0.0, (low, high), 0)
    if f_high == 0.0:
        return CriticalResult(high, 0.0, (low, high), 0)
    if f_low * f_high > 0:
        raise BracketError(f"f({low}) and f({high}) have the same sign")
    x, info = brentq(checked, low, high, xtol=tol, rtol=max(tol, 4 * np.finfo(float).eps), full_output=True)
    return CriticalResult(x, checked(x), (low, high), info.iterations)


def _scan_bracket(f, low=T_LOW, high=T_HIGH, points=SCAN_POINTS):
    """Highest-temperature sign change of ``f`` on a geometric grid, scanning downward.

    Both defining functions are negative at high temperature; for J > 0 and
    ``B > J`` they are also negative at very low temperature, so the ends of
    ``[low, high]`` alone need not bracket the root.
    """
    grid = np.geomspace(high, low, points)
    prev_t, prev_v = grid[0], f(grid[0])
    for t in grid[1:]:
        v = f(t)
        if prev_v == 0.0:
            return prev_t, prev_t
        if v * prev_v < 0:
            return t, prev_t
        prev_t, prev_v = t, v
    return None


def fidelity_margin(J, B, T):
    """Advantage criterion ``(e^{-2bJ} - 4e^{bJ}) cosh(bB/2) - 3 cosh(3bB/2)``, rescaled.

    Divided by the sum of the magnitudes of its three terms, so it stays in
    [-1, 1] for every ``T > 0``; positive exactly when the average fidelity
    exceeds 2/3.
    """
    b = 1.0 / T
    lc = _log_cosh(0.5 * b * B)
    logs = (-2 * b * J + lc, math.log(4) + b * J + lc, math.log(3) + _log_cosh(1.5 * b * B))
    scale = float(np.logaddexp.reduce(logs))
    return math.exp(logs[0] - scale) - math.exp(logs[1] - scale) - math.exp(logs[2] - scale)


def _solve(f, tol):
    bracket = _scan_bracket(f)
    if bracket is None:
        raise NoTransition("no sign change of the defining function in the scanned range")
    low, high = bracket
    if low == high:
        res = CriticalResult(low, 0.0, bracket, 0)
    else:
        res = root_find(f, low, high, tol)
    return res


def solve_T1(J, B, tol=DEFAULT_TOL):
    """Temperature (units of ``|J|``) above which the pairwise concurrence is zero.

    Raises ``NoTransition`` when the concurrence is zero at every temperature,
    e.g. ``J > 0`` with ``B = 0``.
    """
    if J == 0:
        raise ValueError("critical temperatures need J != 0")
    sign, eta = math.copysign(1.0, J), abs(B / J)
    return _solve(lambda t: entanglement_criterion(sign, eta, t), tol)


def solve_T2(J, B, tol=DEFAULT_TOL):
    """Temperature (units of ``|J|``) above which the average fidelity is at most 2/3.

    Only ``J < 0`` has an advantage region.  At the level crossing ``B = -2J``
    the region shrinks to the single point T = 0, returned as ``value = 0``;
    beyond it ``NoTransition`` is raised.
    """
    if not J < 0:
        raise ValueError("the fidelity threshold is only reached for J < 0")
    eta = abs(B / J)
    if eta == 2.0:
        return CriticalResult(0.0, 0.0, (0.0, 0.0), 0)
    if eta > 2.0:
        raise NoTransition("no advantage at any temperature for B > -2J")
    return _solve(lambda t: fidelity_margin(-1.0, eta, t), tol)


def _poly_root_above_one(coeffs, low=1.01, high=10.0, points=2000):
    poly = np.polynomial.Polynomial(coeffs[::-1])
    xs = np.linspace(low, high, points)
    vals = poly(xs)
    changes = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
    if len(changes) != 1:
        raise ArithmeticError(f"expected one root in [{low}, {high}], found {len(changes)}")
    i = changes[0]
    res = root_find(poly, xs[i], xs[i + 1], tol=1e-15)
    return res.value, poly


def asymptotic_T1_antiferro():
    """Large-field limit of ``T1`` for J > 0, in units of J."""
    x, _ = _poly_root_above_one(ANTIFERRO_POLY)
    return 1.0 / math.log(x)


def asymptotic_T1_ferro():
    """Large-field limit of ``T1`` for J < 0, in units of ``|J|``."""
    y, _ = _poly_root_above_one(FERRO_POLY)
    return 1.0 / math.log(y)


def t2_small_T_approx(eta, J=-1.0):
    """Low-temperature estimate ``T2 = -(2 - eta) J / ln 3`` (J < 0, 0 < eta <= 2).

    Returned in the units of ``J``.
    """
    if not J < 0:
        raise ValueError("t2_small_T_approx needs J < 0")
    if not 0 < eta <= 2:
        raise ValueError(f"eta must lie in (0, 2], got {eta}")
    return -(2.0 - eta) * J / math.log(3)


@dataclass(frozen=True)
class ScanRow:
    eta: float
    T1: object
    T2: object


def phase_scan(J, eta_values, tol=DEFAULT_TOL):
    """``T1`` (and ``T2`` for J < 0) for each field ratio, in units of ``|J|``.

    Missing transitions are reported as ``None``.
    """
    if J == 0:
        raise ValueError("phase_scan needs J != 0")
    rows = []
    for eta in eta_values:
        B = eta * abs(J)
        try:
            t1 = solve_T1(J, B, tol).value
        except NoTransition:
            t1 = None
        t2 = None
        if J < 0:
            try:
                t2 = solve_T2(J, B, tol).value
            except NoTransition:
                t2 = None
        rows.append(ScanRow(eta, t1, t2))
    return rows

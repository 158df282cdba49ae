"""Cross-validation of every closed form against its numerical oracle.

Three pairs are checked over a (J, B, beta) grid:

* analytic Gibbs state vs. ``exp(-beta H)`` from a numerical diagonalisation
* closed-form concurrence vs. Wootters' construction on the reduced pair
* closed-form average fidelity vs. the simulated protocol under quadrature
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from .entanglement import thermal_concurrence, wootters_concurrence
from .ring import RingParams, reduced_pair_state, thermal_state, thermal_state_oracle
from .teleport import average_fidelity_closed, average_fidelity_quadrature

STANDARD_GRID = {
    "J": (-2.0, -1.0, -0.5, 0.5, 1.0),
    "B": (0.0, 0.5, 1.0, 2.0, 4.0),
    "beta": (0.2, 1.0, 5.0, 20.0),
}
SMALL_GRID = {
    "J": (-1.0, -0.5, 1.0),
    "B": (0.0, 1.0, 2.0),
    "beta": (0.5, 2.0, 5.0),
}
GRIDS = {"standard": STANDARD_GRID, "small": SMALL_GRID}

TOLERANCES = {"thermal_state": 1e-10, "concurrence": 1e-9, "avg_fidelity": 1e-8}


def grid_points(grid):
    for J, B, beta in itertools.product(grid["J"], grid["B"], grid["beta"]):
        yield RingParams(J, B, beta)


@dataclass
class PairReport:
    name: str
    tolerance: float
    max_deviation: float = 0.0
    worst: object = None
    failures: list = field(default_factory=list)

    def record(self, p, deviation):
        if deviation > self.max_deviation:
            self.max_deviation, self.worst = deviation, p
        if not deviation <= self.tolerance:
            self.failures.append((p, deviation))

    @property
    def passed(self):
        return not self.failures


def run_oracle_suites(grid=STANDARD_GRID, perturb=0.0):
    """Return one ``PairReport`` per closed-form/oracle pair.

    ``perturb`` is added to the constant term of the closed-form average
    fidelity, to show that the harness notices a wrong constant.
    """
    reports = {name: PairReport(name, tol) for name, tol in TOLERANCES.items()}
    for p in grid_points(grid):
        chi = thermal_state(p)
        dev = float(np.max(np.abs(chi - thermal_state_oracle(p))))
        reports["thermal_state"].record(p, dev)

        numeric = wootters_concurrence(reduced_pair_state(chi))
        reports["concurrence"].record(p, abs(thermal_concurrence(p) - numeric))

        closed = average_fidelity_closed(p) + perturb
        reports["avg_fidelity"].record(p, abs(closed - average_fidelity_quadrature(p)))
    return list(reports.values())

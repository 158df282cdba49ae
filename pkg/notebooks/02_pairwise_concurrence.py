"""
Pairwise thermal concurrence
============================

Two routes to the concurrence of one pair of the ring: Wootters' formula on
the reduced two-qubit state, and the closed-form thermal expression.
"""

# %%
import numpy as np

from xxring.entanglement import concurrence_zero_T, thermal_concurrence, wootters_concurrence
from xxring.ring import RingParams, reduced_pair_state, thermal_state

# %% [markdown]
# The two routes agree to round-off.

# %%
for J, B, beta in [(-1.0, 0.0, 2.0), (1.0, 0.5, 5.0), (-2.0, 1.0, 1.0)]:
    p = RingParams(J, B, beta)
    closed = thermal_concurrence(p)
    numeric = wootters_concurrence(reduced_pair_state(thermal_state(p)))
    print(f"J={J:+} B={B} beta={beta}:  C = {closed:.12f}  |diff| = {abs(closed - numeric):.1e}")

# %% [markdown]
# Temperature dependence for a ferromagnetic ring.  The concurrence dies at
# a finite temperature and stays zero above it.

# %%
temps = np.linspace(0.05, 2.0, 14)
for B in (0.0, 1.0, 3.0):
    row = [thermal_concurrence(RingParams.from_temperature(-1.0, B, t)) for t in temps]
    print(f"B={B}:", " ".join(f"{c:.3f}" for c in row))

# %% [markdown]
# Zero-temperature values jump at the level crossings B = J (J > 0) and
# B = -2J (J < 0).

# %%
for J in (1.0, -1.0):
    fields = (0.0, 0.5, 1.0, 1.5) if J > 0 else (0.0, 1.0, 2.0, 3.0)
    print(f"J={J:+}:", {B: round(concurrence_zero_T(J, B), 4) for B in fields})

# %% [markdown]
# Reversing the field leaves the concurrence unchanged; reversing J does not.

# %%
print(thermal_concurrence(RingParams(-1.0, 0.7, 3.0)), thermal_concurrence(RingParams(-1.0, -0.7, 3.0)))
print(thermal_concurrence(RingParams(1.0, 0.7, 3.0)))

"""
Critical temperatures
=====================

T1 is where the pairwise concurrence vanishes, T2 where the average fidelity
falls to 2/3.  Both are in units of |J| with B = eta |J|.
"""

# %%
import math

from xxring.criticality import (
    asymptotic_T1_antiferro,
    asymptotic_T1_ferro,
    phase_scan,
    solve_T1,
    solve_T2,
    t2_small_T_approx,
)

# %%
res = solve_T1(-1.0, 0.0)
print(f"J<0, B=0: T1 = {res.value:.10f} (residual {res.residual:.1e}, {res.iterations} iterations)")
print(f"          T2 = {solve_T2(-1.0, 0.0).value:.10f}")

# %% [markdown]
# Antiferromagnetic ring: T1 grows with the field and saturates.

# %%
for row in phase_scan(1.0, [0.1, 0.3, 1.0, 2.0, 10.0, 100.0]):
    print(f"eta={row.eta:>6}: T1 = {row.T1:.6f}")
print("large-field limit:", asymptotic_T1_antiferro())

# %% [markdown]
# Ferromagnetic ring: T2 closes at eta = 2, where the ground state changes;
# T1 keeps rising towards its own limit.

# %%
for row in phase_scan(-1.0, [0.0, 0.6, 1.2, 1.8, 1.9, 2.0, 10.0]):
    t2 = "-" if row.T2 is None else f"{row.T2:.6f}"
    print(f"eta={row.eta:>5}: T1 = {row.T1:.6f}  T2 = {t2}")
print("large-field limit:", asymptotic_T1_ferro())

# %% [markdown]
# Near eta = 2, T2 is close to (2 - eta) / ln 3.

# %%
for eta in (1.8, 1.9, 1.99):
    print(eta, solve_T2(-1.0, eta).value, t2_small_T_approx(eta), (2 - eta) / math.log(3))

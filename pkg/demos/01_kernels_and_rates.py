"""From a spectral density to time-dependent decay rates, step by step.

Run as:  python3 demos/01_kernels_and_rates.py

The model: a fermion hops between two sites with bare amplitude J; each
site's energy is shaken by its own phonon bath with spectral density
J(omega) = coupling * omega**s * exp(-omega**2/Omega**2).  Dressing the
fermion with its phonon cloud (the polaron frame) turns the strong local
coupling into (a) a renormalized hopping amplitude and (b) memory kernels
that drive time-dependent decay rates.
"""

import numpy as np

from polaronix import (
    BathSpec,
    compute_kernels,
    compute_rates,
    make_lag_grid,
    renormalized_hopping,
    spectral_density,
)

# --- 1. Two baths: one sub-Ohmic (s = 0.5), one super-Ohmic (s = 2) -------
bath1 = BathSpec(coupling=1.0, exponent=0.5)
bath2 = BathSpec(coupling=1.0, exponent=2.0)

print("Spectral densities at a few frequencies:")
for omega in (0.1, 0.5, 1.0, 2.0):
    print(f"  J1({omega:3.1f}) = {spectral_density(bath1, omega):8.4f}   "
          f"J2({omega:3.1f}) = {spectral_density(bath2, omega):8.4f}")

# --- 2. The hopping amplitude is exponentially suppressed by the dressing -
J = 1.0
jtilde = renormalized_hopping(J, bath1, bath2)
print(f"\nBare hopping J = {J},  dressed jtilde = {jtilde:.3e}")
print("(The sub-Ohmic bath dominates the suppression: its kernel diverges")
print(" logarithmically toward the infrared cutoff.)")

# --- 3. Lag kernels phi_c, phi_s on a uniform grid ------------------------
grid = make_lag_grid(0.01, 20.0)
kernels = compute_kernels(bath1, bath2, grid)
print(f"\nphi_c(0) = {kernels.phi_c0:.4f} "
      f"(so jtilde/J = exp(-phi_c(0)/2) = {np.exp(-kernels.phi_c0 / 2):.3e})")
for u in (1.0, 5.0, 20.0):
    i = int(round(u / kernels.spacing))
    print(f"  phi_c({u:4.1f}) = {kernels.phi_c[i]:9.4f}   "
          f"phi_s({u:4.1f}) = {kernels.phi_s[i]:9.4f}")

# --- 4. Decay rates from one cumulative pass over the kernels -------------
rates = compute_rates(kernels, jtilde)
print("\nRates (note Gamma_minus goes negative -- that is the memory")
print("talking; a time-local generator may have transiently negative rates):")
print(f"  {'t':>5} {'Gamma_plus':>12} {'Gamma_minus':>12} {'gamma0':>12}")
for t in (0.5, 1.0, 2.0, 5.0, 20.0):
    i = int(round(t / rates.spacing))
    print(f"  {t:5.1f} {rates.gamma_plus[i]:12.6f} "
          f"{rates.gamma_minus[i]:12.6f} {rates.gamma0[i]:12.6f}")

print("\nNext: demos/02_trajectories.py evolves the qubit under these rates.")

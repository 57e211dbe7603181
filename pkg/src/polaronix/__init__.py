"""Polaronix: dephasing and non-Markovianity of a dressed two-site qubit.

A spinless fermion hops between two sites, each strongly coupled to its own
phonon bath.  In the polaron frame the problem reduces to time-dependent
decay rates built from two bath lag kernels; this package computes the
kernels, rates, singlet-triplet dynamics, the l1-coherence backflow measure,
and coupling-plane sweeps, with slow brute-force validators alongside.
"""

__version__ = "0.1.0"

from .dynamics import (
    QubitState,
    Trajectory,
    default_initial_state,
    evolve_closed_form,
    evolve_ode,
    observables,
)
from .errors import (
    ConfigError,
    GridError,
    LengthError,
    PolaronixError,
    QuadratureError,
)
from .nonmarkov import SweepResult, nm_measure, sweep
from .oracle import DiscreteBath, brute_force_rates, discrete_kernels, discretize_bath
from .rates import RateTable, bath_correlation, compute_rates
from .spectral import (
    BathSpec,
    KernelTable,
    compute_kernels,
    make_lag_grid,
    renormalized_hopping,
    spectral_density,
)

__all__ = [
    "__version__",
    "BathSpec",
    "KernelTable",
    "RateTable",
    "QubitState",
    "Trajectory",
    "SweepResult",
    "DiscreteBath",
    "spectral_density",
    "compute_kernels",
    "renormalized_hopping",
    "make_lag_grid",
    "bath_correlation",
    "compute_rates",
    "evolve_ode",
    "evolve_closed_form",
    "observables",
    "default_initial_state",
    "nm_measure",
    "sweep",
    "discretize_bath",
    "discrete_kernels",
    "brute_force_rates",
    "PolaronixError",
    "ConfigError",
    "QuadratureError",
    "GridError",
    "LengthError",
]

"""Publication-style figures from polaronix CSV outputs.

This package consumes only the public CSV contract (headers below) plus the
JSON manifests written next to each file; it never imports the simulation
package. One script per figure family:

* ``polaronix-fig-trajectories`` — population/coherence panels from
  ``trajectory.csv`` files,
* ``polaronix-fig-hopping`` — the dressed-hopping surface from
  ``kernels.csv`` files and their manifests,
* ``polaronix-fig-heatmaps`` — backflow-measure heatmaps from
  ``sweep.csv`` files.
"""

__version__ = "0.1.0"

TRAJECTORY_COLUMNS = [
    "t", "rho_ss", "rho_tt", "re_rho_st", "im_rho_st", "p_diff", "coherence",
]
KERNEL_COLUMNS = ["t", "phi_c", "phi_s"]
SWEEP_COLUMNS = ["s", "s_prime", "alpha", "beta", "nm", "horizon", "valid"]

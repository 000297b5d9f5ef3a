"""Ionization of atoms and ions by high-energy photons through e+e- pair creation.

Energies are in units of the electron mass m (hbar = c = 1) and cross
sections in units of alpha r_e^2 unless a name says otherwise.
"""

__version__ = "0.1.0"

from .units import ALPHA, CONSTANTS, hydrogenlike_binding, kev_to_m, to_millibarn
from .fast_spectrum import t_fast, t_fast_oracle, w_distribution
from .slow_spectrum import k_slow, t_slow, t_slow_approx, phi_k_sq, g_factor
from .matching import overlap_report, t_fast_matched, default_eps0
from .cross_section import (
    CrossSectionBreakdown,
    big_c,
    compute_c_f,
    compute_c_s,
    sigma_kshell_ion,
    sigma_shell,
    sigma_split,
    sigma_state,
)
from .crossover import CrossoverResult, omega0_curve, omega0_for, sigma_compton
from .bh_oracle import coefficient_14_9, h_full, h_reduced

__all__ = [
    "ALPHA",
    "CONSTANTS",
    "CrossSectionBreakdown",
    "CrossoverResult",
    "big_c",
    "coefficient_14_9",
    "compute_c_f",
    "compute_c_s",
    "default_eps0",
    "g_factor",
    "h_full",
    "h_reduced",
    "hydrogenlike_binding",
    "k_slow",
    "kev_to_m",
    "omega0_curve",
    "omega0_for",
    "overlap_report",
    "phi_k_sq",
    "sigma_compton",
    "sigma_kshell_ion",
    "sigma_shell",
    "sigma_split",
    "sigma_state",
    "t_fast",
    "t_fast_matched",
    "t_fast_oracle",
    "t_slow",
    "t_slow_approx",
    "to_millibarn",
    "w_distribution",
]

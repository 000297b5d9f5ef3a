"""Photon energy above which pair-assisted ionization beats Compton scattering.

Both mechanisms leave an ion behind.  At omega >> m the Compton cross section
per electron falls like ln(omega)/omega while the pair-assisted one tends to
a constant, so they cross at a single energy omega0.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

from .cross_section import C_DEFAULT, ValidityWarning, sigma_kshell_ion, sigma_state
from .numerics import RootFindingError, find_root
from .units import ALPHA, hydrogenlike_binding, kev_to_m, m_to_mev

__all__ = [
    "CrossoverMode",
    "CrossoverResult",
    "sigma_compton",
    "omega0_for",
    "omega0_curve",
    "omega0_named_state",
    "OMEGA_BRACKET",
]

OMEGA_BRACKET = (10.0, 1e6)  # units of m


class CrossoverMode(str, enum.Enum):
    SINGLE_ELECTRON_ION = "single_electron_ion"
    NEUTRAL_ATOM = "neutral_atom_Z_electrons"
    NAMED_SHELL = "named_shell"

    @classmethod
    def parse(cls, value: "str | CrossoverMode") -> "CrossoverMode":
        aliases = {"ion": cls.SINGLE_ELECTRON_ION, "atom": cls.NEUTRAL_ATOM, "shell": cls.NAMED_SHELL}
        if isinstance(value, cls):
            return value
        if value in aliases:
            return aliases[value]
        return cls(value)


@dataclass(frozen=True)
class CrossoverResult:
    omega0: float               # MeV
    sigma_at_crossover: float   # alpha r_e^2
    mode: CrossoverMode
    electrons_for_compton: int = 1
    Z: int | None = None

    @property
    def y0(self) -> float:
        """omega0 in units of m."""
        return self.omega0 / m_to_mev(1.0)


def sigma_compton(omega: float) -> float:
    """High-energy Compton cross section per electron, in alpha r_e^2.

    pi r_e^2 (ln 2y + 1/2) / y with y = omega / m, i.e. (pi/alpha)(ln 2y + 1/2)/y.
    """
    if not omega > 1.0:
        raise ValueError(f"photon energy must exceed m, got {omega!r} m")
    if omega < 10.0:
        warnings.warn(
            f"omega={omega:.3g} m: the logarithmic Compton asymptote needs omega >> m",
            ValidityWarning,
            stacklevel=2,
        )
    return math.pi / ALPHA * (math.log(2.0 * omega) + 0.5) / omega


def _sigma_compton_quiet(omega: float) -> float:
    return math.pi / ALPHA * (math.log(2.0 * omega) + 0.5) / omega


def omega0_for(
    target: float,
    electrons_for_compton: int = 1,
    mode: "str | CrossoverMode" = CrossoverMode.NAMED_SHELL,
    Z: int | None = None,
) -> CrossoverResult:
    """Solve n_C sigma_C(omega0) = target for omega0 in [10 m, 10^6 m].

    Parameters
    ----------
    target : float
        Pair-assisted ionization cross section, alpha r_e^2.
    electrons_for_compton : int
        Number of electrons contributing to Compton scattering.

    Raises
    ------
    RootFindingError
        If the crossing is outside the bracket.
    """
    if not target > 0:
        raise ValueError(f"target cross section must be positive, got {target!r}")
    if electrons_for_compton < 1:
        raise ValueError("electrons_for_compton must be >= 1")
    n = electrons_for_compton
    lo, hi = OMEGA_BRACKET
    f = lambda y: n * _sigma_compton_quiet(y) - target
    try:
        y0 = find_root(f, lo, hi, tol=1e-13)
    except RootFindingError as exc:
        raise RootFindingError(
            f"no crossover for target={target:.6g} alpha r_e^2 with {n} electron(s) "
            f"in omega/m in [{lo:g}, {hi:g}]: {exc}"
        ) from None
    return CrossoverResult(
        omega0=m_to_mev(y0),
        sigma_at_crossover=n * _sigma_compton_quiet(y0),
        mode=CrossoverMode.parse(mode),
        electrons_for_compton=n,
        Z=Z,
    )


def omega0_curve(
    Z_range,
    mode: "str | CrossoverMode" = CrossoverMode.SINGLE_ELECTRON_ION,
    C: float = C_DEFAULT,
) -> list[CrossoverResult]:
    """omega0 versus Z.

    ``mode="ion"``: one-electron ion, Compton on one electron.
    ``mode="atom"``: hydrogenlike K shell (two electrons for Z >= 2) against
    Compton on all Z electrons.
    """
    mode = CrossoverMode.parse(mode)
    if mode is CrossoverMode.NAMED_SHELL:
        raise ValueError("use omega0_named_state for a named shell")
    out = []
    for Z in Z_range:
        if not 1 <= Z <= 50:
            raise ValueError(f"Z={Z} outside the supported range [1, 50]")
        if mode is CrossoverMode.SINGLE_ELECTRON_ION:
            target = sigma_kshell_ion(Z, C)
            n_c = 1
        else:
            target = sigma_state(hydrogenlike_binding(Z), 2 if Z >= 2 else 1, C)
            n_c = Z
        out.append(omega0_for(target, n_c, mode, Z=Z))
    return out


def omega0_named_state(I_b_keV: float, n_b: int = 1, electrons_for_compton: int | None = None,
                       C: float = C_DEFAULT) -> CrossoverResult:
    """omega0 for a shell given its binding energy, e.g. an alkali valence electron."""
    target = sigma_state(kev_to_m(I_b_keV), n_b, C)
    return omega0_for(target, n_b if electrons_for_compton is None else electrons_for_compton,
                      CrossoverMode.NAMED_SHELL)

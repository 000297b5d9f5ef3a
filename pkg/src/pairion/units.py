"""Constants and unit conversions.

Internally everything is dimensionless: hbar = c = 1 and energies are in units
of the electron rest mass m.  Cross sections are carried in units of
alpha * r_e**2 = alpha**3 / m**2.  Conversions to keV/MeV/millibarn are done
only at the I/O boundary.

Constant values are CODATA 2018.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "Constants",
    "CONSTANTS",
    "ALPHA",
    "M_KEV",
    "ShellSpec",
    "AtomSpec",
    "hydrogenlike_binding",
    "to_millibarn",
    "from_millibarn",
    "kev_to_m",
    "m_to_kev",
    "m_to_mev",
    "mev_to_m",
]


@dataclass(frozen=True)
class Constants:
    """Physical constants used throughout the package (CODATA 2018)."""

    alpha: float = 7.2973525693e-3
    m_keV: float = 510.99895000
    hbar_c_MeV_fm: float = 197.3269804

    @property
    def alpha_re2_mb(self) -> float:
        """The unit alpha * r_e**2 = alpha**3 / m**2 in millibarn."""
        m_MeV = self.m_keV * 1e-3
        fm2 = self.alpha**3 * (self.hbar_c_MeV_fm / m_MeV) ** 2
        return fm2 * 10.0  # 1 fm^2 = 10 mb

    def provenance(self) -> dict[str, object]:
        return {
            "source": "CODATA 2018",
            "alpha": self.alpha,
            "m_keV": self.m_keV,
            "hbar_c_MeV_fm": self.hbar_c_MeV_fm,
            "alpha_re2_mb": self.alpha_re2_mb,
        }


CONSTANTS = Constants()
ALPHA = CONSTANTS.alpha
M_KEV = CONSTANTS.m_keV


def kev_to_m(e_kev: float) -> float:
    return e_kev / M_KEV


def m_to_kev(e: float) -> float:
    return e * M_KEV


def mev_to_m(e_mev: float) -> float:
    return e_mev * 1e3 / M_KEV


def m_to_mev(e: float) -> float:
    return e * M_KEV * 1e-3


def to_millibarn(s: float) -> float:
    """Convert a cross section in units of alpha*r_e^2 to millibarn."""
    if not math.isfinite(s):
        raise ValueError(f"cross section must be finite, got {s!r}")
    return s * CONSTANTS.alpha_re2_mb


def from_millibarn(s_mb: float) -> float:
    return s_mb / CONSTANTS.alpha_re2_mb


def hydrogenlike_binding(Z: int) -> float:
    """K-shell binding energy (alpha Z)^2 / 2 of a hydrogenlike ion, in units of m."""
    if int(Z) != Z or Z < 1:
        raise ValueError(f"nuclear charge must be a positive integer, got {Z!r}")
    return 0.5 * (ALPHA * Z) ** 2


@dataclass(frozen=True)
class ShellSpec:
    """One bound state: occupancy ``n_b`` and binding energy ``I_b`` (units of m)."""

    label: str
    n_b: int
    I_b: float

    def __post_init__(self):
        if int(self.n_b) != self.n_b or self.n_b < 1:
            raise ValueError(f"shell {self.label}: occupancy must be >= 1, got {self.n_b!r}")
        if not self.I_b > 0:
            raise ValueError(f"shell {self.label}: binding energy must be > 0, got {self.I_b!r}")


@dataclass(frozen=True)
class AtomSpec:
    Z: int
    shells: tuple[ShellSpec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if int(self.Z) != self.Z or self.Z < 1:
            raise ValueError(f"nuclear charge must be a positive integer, got {self.Z!r}")
        object.__setattr__(self, "shells", tuple(self.shells))
        if sum(s.n_b for s in self.shells) > self.Z:
            raise ValueError(f"more electrons than Z={self.Z} in shell list")

"""Brute-force check of the 14/9 coefficient from the Bethe-Heitler distribution.

For pair creation on a nucleus with small recoil q << m the e+ and e- are
emitted almost back to back in the transverse plane.  Integrating the
Bethe-Heitler distribution over the lepton variables at fixed q leaves

    dsigma_BH = (14/9) alpha r_e^2 Z^2 dq^2 / q^2,

which is the coefficient shared by the slow- and fast-electron spectra.
Momenta are in units of m.

Phase space.  With the transverse momenta a = p_et, b = p_pt and their
sum q = a + b, the element a da b db dphi equals b db d^2q.  Writing
|a| - |b| = t q (t = |cos psi|, psi the angle of q to b) and counting the
four quadrants of psi gives

    a da b db dphi = 2 b db dq^2 dt / sqrt(1 - t^2),   0 <= t <= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import QuadratureConfig, integrate

__all__ = [
    "BHKinematics",
    "lambda_factor",
    "h_full",
    "h_reduced",
    "back_to_back_kinematics",
    "bh_weight",
    "coefficient_14_9",
    "BH_CONFIG",
]

BH_CONFIG = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-13)


@dataclass(frozen=True)
class BHKinematics:
    """Lepton kinematics of pair creation; energies and momenta in units of m."""

    delta_minus: float   # electron transverse momentum
    delta_plus: float    # positron transverse momentum
    phi: float           # angle between the transverse momenta
    E_p: float           # positron energy
    omega: float

    def __post_init__(self):
        if self.delta_minus < 0 or self.delta_plus < 0:
            raise ValueError("transverse momenta must be >= 0")
        if not (1.0 <= self.E_p <= self.omega - 1.0):
            raise ValueError(f"need m <= E_p <= omega - m, got E_p={self.E_p!r}, omega={self.omega!r}")

    @property
    def E_e(self) -> float:
        return self.omega - self.E_p

    @property
    def q(self) -> float:
        """Transverse recoil |p_et + p_pt|."""
        a, b = self.delta_minus, self.delta_plus
        return math.sqrt(max(a * a + b * b + 2.0 * a * b * math.cos(self.phi), 0.0))

    @property
    def t(self) -> float:
        q = self.q
        return abs(self.delta_minus - self.delta_plus) / q if q > 0 else 0.0


def lambda_factor(E_e, E_p):
    """(E_e^2 + E_p^2) / (2 E_e E_p)."""
    return (E_e * E_e + E_p * E_p) / (2.0 * E_e * E_p)


def h_full(k: BHKinematics) -> float:
    """Bethe-Heitler function H of the transverse momenta and energies."""
    dm2 = k.delta_minus**2
    dp2 = k.delta_plus**2
    Ee, Ep, w = k.E_e, k.E_p, k.omega
    return (
        -dm2 / (1.0 + dm2) ** 2
        - dp2 / (1.0 + dp2) ** 2
        + w * w / (2.0 * Ee * Ep) * (dm2 + dp2) / ((1.0 + dm2) * (1.0 + dp2))
        + (Ee / Ep + Ep / Ee) * k.delta_minus * k.delta_plus * math.cos(k.phi)
        / ((1.0 + dm2) * (1.0 + dp2))
    )


def h_reduced(delta_plus, t, q, E_e, E_p):
    """Leading small-q form of H: q^2 h^2 (Lambda + 4 delta^2 t^2 h^2), h = 1/(1+delta^2)."""
    h = 1.0 / (1.0 + np.asarray(delta_plus) ** 2)
    d2 = np.asarray(delta_plus) ** 2
    return q * q * h * h * (lambda_factor(E_e, E_p) + 4.0 * d2 * np.asarray(t) ** 2 * h * h)


def back_to_back_kinematics(delta_plus: float, t: float, q: float, E_p: float, omega: float,
                            sign: int = -1) -> BHKinematics:
    """Exact kinematics with |p_et| - |p_pt| = sign * t q and |p_et + p_pt| = q."""
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    dm = delta_plus + sign * t * q
    if dm <= 0:
        raise ValueError("q too large for this delta_plus")
    c = (q * q - dm * dm - delta_plus * delta_plus) / (2.0 * dm * delta_plus)
    return BHKinematics(dm, delta_plus, math.acos(min(1.0, max(-1.0, c))), E_p, omega)


def bh_weight(k: BHKinematics) -> float:
    """R / (alpha r_e^2 Z^2): 8 E_e E_p H / (pi q^4 omega^3)."""
    q = k.q
    return 8.0 * k.E_e * k.E_p * h_full(k) / (math.pi * q**4 * k.omega**3)


def _t_integral(delta_plus: float, E_e: float, E_p: float, cfg: QuadratureConfig) -> float:
    # t = sin(theta) absorbs the 1/sqrt(1 - t^2) endpoint singularity
    f = lambda th: h_reduced(delta_plus, np.sin(th), 1.0, E_e, E_p)
    return integrate(f, 0.0, 0.5 * math.pi, cfg, vectorized=True).value


def _p_integral(E_e: float, E_p: float, cfg: QuadratureConfig) -> float:
    f = lambda p: 2.0 * p * _t_integral(p, E_e, E_p, cfg)
    return integrate(f, 0.0, math.inf, cfg, points=[0.5, 1.0, 2.0, 5.0]).value


def coefficient_14_9(omega: float = 1e4, cfg: QuadratureConfig = BH_CONFIG) -> float:
    """Coefficient of alpha r_e^2 Z^2 dq^2/q^2 after integrating out the leptons.

    Triple quadrature of R dGamma' / dq^2 with the small-q form of H over
    E_p in (m, omega - m), p_pt in (0, inf) and t in (0, 1).  The energy
    variable is u = E_p / omega; the result tends to 14/9 as omega -> inf
    with an O(m / omega) shortfall from the kinematic limits on E_p.
    """
    if not omega > 2.0:
        raise ValueError(f"omega must exceed 2 m, got {omega!r}")
    u_lo, u_hi = 1.0 / omega, 1.0 - 1.0 / omega

    # after the substitution E = u omega, omega^3 cancels against dE E_e E_p
    def f(u):
        return 8.0 / math.pi * u * (1.0 - u) * _p_integral(1.0 - u, u, cfg)

    return integrate(f, u_lo, u_hi, cfg, points=[0.5]).value

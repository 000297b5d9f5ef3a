"""Joining the slow- and fast-electron descriptions of the spectrum.

T_f is accurate for eps2 >> I and T_s for eps2 << m.  Multiplying T_f by the
Coulomb factor g(eps2 / I) gives a single function that follows T_s down to
eps2 ~ I:

    T~_f(eps2) = T_f(eps2 / m) * eps / (eps + 1),   eps = eps2 / I.

On the slow side the comparison quantity is (m / I) T_s(eps2 / I), i.e. the
slow spectrum expressed per unit eps2/m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fast_spectrum import t_fast
from .numerics import DEFAULT_CONFIG, QuadratureConfig
from .slow_spectrum import g_factor, t_slow
from .units import ALPHA, hydrogenlike_binding

__all__ = [
    "MatchedPoint",
    "OverlapReport",
    "t_fast_matched",
    "t_slow_scaled",
    "overlap_report",
    "default_eps0",
    "OVERLAP_WINDOW",
]

OVERLAP_WINDOW = (0.1, 0.2)


@dataclass(frozen=True)
class MatchedPoint:
    eps2: float          # units of m
    t_f: float
    t_f_matched: float
    t_s_scaled: float

    @property
    def rel_gap(self) -> float:
        """|T_f - (m/I) T_s| / ((m/I) T_s): bare fast vs slow description."""
        return abs(self.t_f - self.t_s_scaled) / self.t_s_scaled

    @property
    def rel_gap_matched(self) -> float:
        return abs(self.t_f_matched - self.t_s_scaled) / self.t_s_scaled


@dataclass(frozen=True)
class OverlapReport:
    Z: int
    alpha_Z: float
    binding: float       # I in units of m
    points: tuple[MatchedPoint, ...]

    def best_in(self, lo: float, hi: float) -> MatchedPoint:
        inside = [p for p in self.points if lo <= p.eps2 <= hi]
        if not inside:
            raise ValueError(f"no grid points in [{lo}, {hi}]")
        return min(inside, key=lambda p: p.rel_gap)


def t_fast_matched(eps2: float, Z: int) -> float:
    """T~_f = T_f(eps2) * g(eps2 / I) with the hydrogenlike K-shell I."""
    I = hydrogenlike_binding(Z)
    return t_fast(eps2) * g_factor(eps2 / I)


def t_slow_scaled(eps2: float, Z: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """(m / I) T_s(eps2 / I)."""
    I = hydrogenlike_binding(Z)
    return t_slow(eps2 / I, cfg) / I


def overlap_report(Z: int, grid, cfg: QuadratureConfig = DEFAULT_CONFIG) -> OverlapReport:
    """Evaluate T_f, T~_f and (m/I) T_s on ``grid`` (values of eps2/m in (0, 1))."""
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0 or np.any(grid <= 0) or np.any(grid >= 1):
        raise ValueError("grid must lie inside (0, 1) in units of m")
    I = hydrogenlike_binding(Z)
    pts = []
    for e2 in grid:
        tf = t_fast(e2)
        pts.append(MatchedPoint(
            eps2=float(e2),
            t_f=tf,
            t_f_matched=tf * g_factor(e2 / I),
            t_s_scaled=t_slow(e2 / I, cfg) / I,
        ))
    return OverlapReport(Z=Z, alpha_Z=ALPHA * Z, binding=I, points=tuple(pts))


def default_eps0(Z: int) -> float:
    """Matching energy sqrt(I m), capped at the top of the overlap window.

    sqrt(I m) sits logarithmically halfway between I and m, where both
    descriptions hold; for Z >~ 40 it would exceed 0.2 m and is capped.
    """
    return min(math.sqrt(hydrogenlike_binding(Z)), OVERLAP_WINDOW[1])

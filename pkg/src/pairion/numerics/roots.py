"""Bracketed root finding (thin wrapper over Brent's method from scipy)."""

from __future__ import annotations

import math
import sys
from typing import Callable

from scipy.optimize import brentq

__all__ = ["RootFindingError", "find_root"]


class RootFindingError(ValueError):
    pass


def find_root(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12) -> float:
    """Root of ``f`` inside ``[lo, hi]``; ``f(lo)`` and ``f(hi)`` must differ in sign."""
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    flo, fhi = f(lo), f(hi)
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise RootFindingError(f"f not finite at the bracket ends: f({lo})={flo}, f({hi})={fhi}")
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise RootFindingError(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={flo!r}, f(hi)={fhi!r}"
        )
    root, info = brentq(f, lo, hi, xtol=tol, rtol=4 * sys.float_info.epsilon, maxiter=200, full_output=True)
    if not info.converged:
        raise RootFindingError(f"Brent iteration did not converge: {info.flag}")
    return root

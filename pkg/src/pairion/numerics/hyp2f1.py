"""Gauss hypergeometric function 2F1(2, 4; 7/2; z) for z <= 0.

Only these parameters are needed (the fast-electron spectrum evaluates it at
z = -x/2 for x up to ~1e4), so no general-parameter machinery is provided.

Near the origin the Gauss series is summed directly.  Further out the Pfaff
transformation

    2F1(2, 4; 7/2; z) = (1 - z)^-2 * 2F1(2, -1/2; 7/2; w),   w = z / (z - 1),

maps z in (-inf, -1/2) onto w in (1/3, 1).  The new function has
c - a - b = 2, an integer, so it is expanded about w = 1 with the
logarithmic connection formula (Abramowitz & Stegun 15.3.11), which
converges geometrically in 1 - w = 1 / (1 - z) <= 2/3.
"""

from __future__ import annotations

import math

__all__ = ["hyp2f1_24_72", "hyp2f1_24_72_series", "hyp2f1_24_72_transformed"]

_A, _B, _C = 2.0, 4.0, 3.5
_SERIES_RADIUS = 0.5
_EULER_GAMMA = 0.57721566490153286061
_MAXTERMS = 2000


def hyp2f1_24_72_series(z: float) -> float:
    """Direct Gauss series; use for |z| < 1 only (slow as |z| -> 1)."""
    if not abs(z) < 1.0:
        raise ValueError(f"series requires |z| < 1, got {z!r}")
    term = 1.0
    total = 1.0
    for n in range(_MAXTERMS):
        term *= (_A + n) * (_B + n) / ((_C + n) * (n + 1.0)) * z
        total += term
        if abs(term) <= 1e-17 * abs(total):
            return total
    raise ArithmeticError(f"2F1 series did not converge at z={z!r}")


def _digamma_int(k: int) -> float:
    # psi(k) for integer k >= 1
    return -_EULER_GAMMA + math.fsum(1.0 / j for j in range(1, k))


def hyp2f1_24_72_transformed(z: float) -> float:
    """Evaluate via the Pfaff transformation and the expansion about w = 1.

    Valid for all z < 0; accurate once 1/(1-z) is comfortably below 1.
    """
    if not z < 0.0:
        raise ValueError(f"transformed route needs z < 0, got {z!r}")
    # parameters of the transformed function F(a, b; a + b + m; w)
    a, b, m = 2.0, -0.5, 2
    s = 1.0 / (1.0 - z)  # = 1 - w
    log_s = math.log(s)

    # finite part: Gamma(m)Gamma(a+b+m)/(Gamma(a+m)Gamma(b+m)) * sum_{n<m} ...
    pre = math.gamma(m) * math.gamma(a + b + m) / (math.gamma(a + m) * math.gamma(b + m))
    finite = 0.0
    poch = 1.0
    for n in range(m):
        if n:
            poch *= (a + n - 1) * (b + n - 1) / (n * (1 - m + n - 1))
        finite += poch * s**n
    finite *= pre

    # logarithmic part: -(w-1)^m Gamma(a+b+m)/(Gamma(a)Gamma(b)) * sum_n ...
    lead = -((-s) ** m) * math.gamma(a + b + m) / (math.gamma(a) * math.gamma(b))
    psi_n1 = _digamma_int(1)          # psi(n + 1)
    psi_nm1 = _digamma_int(m + 1)     # psi(n + m + 1)
    psi_anm = _digamma_int(int(a) + m)  # psi(a + n + m), a integer here
    psi_bnm = -_EULER_GAMMA - 2.0 * math.log(2.0) + 2.0  # psi(3/2) = psi(b + m)
    coef = 1.0 / math.factorial(m)  # (a+m)_n (b+m)_n / (n! (n+m)!) at n = 0
    sn = 1.0
    total = 0.0
    for n in range(_MAXTERMS):
        term = coef * sn * (log_s - psi_n1 - psi_nm1 + psi_anm + psi_bnm)
        total += term
        if n > 2 and abs(term) <= 1e-17 * abs(total):
            break
        coef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0))
        sn *= s
        psi_n1 += 1.0 / (n + 1)
        psi_nm1 += 1.0 / (n + m + 1)
        psi_anm += 1.0 / (a + n + m)
        psi_bnm += 1.0 / (b + n + m)
    else:
        raise ArithmeticError(f"2F1 connection series did not converge at z={z!r}")
    return s**2 * (finite + lead * total)


def hyp2f1_24_72(z: float) -> float:
    """2F1(2, 4; 7/2; z) for real z <= 0."""
    z = float(z)
    if z > 0.0 or math.isnan(z):
        raise ValueError(f"hyp2f1_24_72 is only defined here for z <= 0, got {z!r}")
    if z >= -_SERIES_RADIUS:
        return hyp2f1_24_72_series(z)
    return hyp2f1_24_72_transformed(z)

"""Energy spectrum of fast ionized electrons (binding energy << eps2 << omega).

In this regime the bound electron behaves as a free electron at rest and the
spectrum is that of triplet production, integrated over the pair variables.
All energies are in units of m; ``x = eps2 / m``.

    dsigma/deps2 = n_e * alpha r_e^2 / m * T_f(x)

``t_fast`` evaluates T_f in closed form.  ``t_fast_oracle`` integrates the
double-differential distribution ``w_distribution`` over the pair invariant
mass squared, which is an independent route to the same function.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .numerics import DEFAULT_CONFIG, QuadratureConfig, hyp2f1_24_72, integrate

__all__ = [
    "DELTA2_MIN",
    "X_SERIES",
    "delta2_bounds",
    "delta2_of_angle",
    "beta_and_L",
    "w_distribution",
    "t_fast",
    "t_fast_closed",
    "t_fast_series",
    "t_fast_asymptotic",
    "t_fast_tail_integral",
    "t_fast_oracle",
    "integrate_t_fast",
]

DELTA2_MIN = 4.0

# Laurent coefficients of T_f about x = 0: T_f = sum_k c_k x^(k-1).
# Exact rationals obtained by expanding the closed form symbolically; the
# singularity nearest the origin is at x = -2.
_SERIES = [Fraction(s) for s in (
    "14/9", "-8/15", "68/315", "-88/945", "16/385", "-512/27027", "1184/135135",
    "-448/109395", "12032/6235515", "-1024/1119195", "512/1174173",
    "-31744/152108775", "137216/1368978975", "-16384/339319575",
    "315392/13524308775", "-335872/29753479305", "65536/11969790525",
    "-262144/98544132225", "12713984/9821565178425", "-4456448/7064634602025",
    "56098816/182267572732245", "-58720256/390573370140525",
    "1048576/14263363167525", "-127926272/3555298306061775",
)]
_SERIES_F = [float(c) for c in _SERIES]

# Below this the closed form loses ~x^-2 digits to cancellation; the
# truncated series is accurate to ~(x/2)^24 there.
X_SERIES = 0.1

# Large-x expansion T_f ~ sum_n (a_n ln(2x) + b_n) / x^n, n = 2..5.
_ASYMPTOTIC = (
    (2, 4.0 / 3.0, 2.0 / 3.0),
    (3, -2.0, 4.0 / 3.0),
    (4, 8.0 / 3.0, -3.0),
    (5, -13.0 / 3.0, 95.0 / 18.0),
)
X_TAIL = 1e3


def delta2_bounds(omega: float) -> tuple[float, float]:
    """Physical range ``(4, 2 omega)`` of the pair invariant mass squared."""
    if not omega >= 2.0:
        raise ValueError(f"photon energy {omega!r} m is below the pair threshold 2m")
    return DELTA2_MIN, 2.0 * omega


def delta2_of_angle(eps2: float, omega: float, t2: float) -> float:
    """Pair invariant mass squared from the ionized electron's energy and angle.

    ``t2`` is the cosine of the angle between the photon and the electron.
    """
    if not -1.0 <= t2 <= 1.0:
        raise ValueError(f"direction cosine must lie in [-1, 1], got {t2!r}")
    if not eps2 > 0:
        raise ValueError(f"kinetic energy must be positive, got {eps2!r}")
    p2 = math.sqrt(eps2 * eps2 + 2.0 * eps2)
    return -2.0 * eps2 * (omega + 1.0) + 2.0 * omega * p2 * t2


def beta_and_L(delta2: float) -> tuple[float, float]:
    """Pair velocity in its c.m. frame and ``L = ln((1+beta)/(1-beta)) / beta``."""
    if not delta2 >= DELTA2_MIN:
        raise ValueError(f"delta2 must be >= 4, got {delta2!r}")
    beta = math.sqrt((delta2 - DELTA2_MIN) / delta2)
    if beta < 1e-4:
        b2 = beta * beta
        return beta, 2.0 + 2.0 * b2 / 3.0 + 2.0 * b2 * b2 / 5.0
    return beta, 2.0 * math.atanh(beta) / beta


def w_distribution(eps2: float, delta2: float) -> float:
    """Double-differential distribution W(eps2, delta2) >= 0.

    dsigma / (deps2 ddelta2) = n_e alpha^3 W.
    """
    if not eps2 > 0:
        raise ValueError(f"kinetic energy must be positive, got {eps2!r}")
    beta, L = beta_and_L(delta2)
    B = (delta2 + 2.0 * eps2) ** 2
    inner = delta2 * (1.0 - 4.0 * eps2) + L * (2.0 * (2.0 * eps2 + 1.0) + delta2 * (eps2 - 1.0))
    A = 4.0 * beta * (L - 1.0 - 4.0 * inner / B)
    return A / (eps2 * B)


def _w_vec(eps2: float, delta2: np.ndarray) -> np.ndarray:
    beta = np.sqrt((delta2 - DELTA2_MIN) / delta2)
    small = beta < 1e-4
    bsafe = np.where(small, 0.5, beta)
    L = np.where(small, 2.0 + 2.0 * beta**2 / 3.0, 2.0 * np.arctanh(bsafe) / bsafe)
    B = (delta2 + 2.0 * eps2) ** 2
    inner = delta2 * (1.0 - 4.0 * eps2) + L * (2.0 * (2.0 * eps2 + 1.0) + delta2 * (eps2 - 1.0))
    return 4.0 * beta * (L - 1.0 - 4.0 * inner / B) / (eps2 * B)


def t_fast_series(x: float) -> float:
    """Truncated Laurent series of T_f; intended for 0 < x <= X_SERIES."""
    acc = 0.0
    for c in reversed(_SERIES_F[1:]):
        acc = acc * x + c
    return _SERIES_F[0] / x + acc


def t_fast_closed(x: float) -> float:
    """Closed form of T_f(x) in terms of asinh and 2F1(2, 4; 7/2; -x/2)."""
    x2 = x * x
    t1 = -(x2 * x + x2 + 2.0 * x - 1.0) / (x2 * (2.0 + x) ** 2)
    t2 = (
        2.0 * (2.0 * x2 * x2 + 7.0 * x2 * x + 16.0 * x2 + 5.0 * x - 3.0)
        / (3.0 * (x * (2.0 + x)) ** 2.5)
        * math.asinh(math.sqrt(0.5 * x))
    )
    t3 = -2.0 * (1.0 - 4.0 * x) / 15.0 * hyp2f1_24_72(-0.5 * x)
    return 2.0 / x * (t1 + t2 + t3)


def t_fast_asymptotic(x: float) -> float:
    """Large-x expansion of T_f through x^-5 (relative error ~ x^-4 ln x)."""
    lg = math.log(2.0 * x)
    return math.fsum((a * lg + b) / x**n for n, a, b in _ASYMPTOTIC)


def t_fast(x):
    """Fast-electron spectral function T_f(x), x = eps2/m > 0.

    Valid physically for I << eps2 << omega; the function itself is
    omega-independent.  Accepts scalars or arrays.
    """
    if np.ndim(x):
        return np.vectorize(t_fast, otypes=[float])(x)
    x = float(x)
    if not x > 0:
        raise ValueError(f"x must be positive, got {x!r}")
    if x <= X_SERIES:
        return t_fast_series(x)
    return t_fast_closed(x)


def t_fast_oracle(
    x: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    delta2_max: float = math.inf,
) -> float:
    """T_f(x) by direct quadrature of W(x, delta2) over delta2 in [4, delta2_max].

    The default upper limit is infinity (the omega -> inf leading term);
    pass ``2 * omega`` to study the finite-photon-energy cutoff.
    """
    if not x > 0:
        raise ValueError(f"x must be positive, got {x!r}")
    # structure sits near delta2 ~ 4 (sqrt edge) and delta2 ~ 2x (where B turns over)
    pts = sorted({4.0 + 1e-3, 5.0, 8.0, 4.0 + 2.0 * x, 4.0 + 20.0 * x, 100.0})
    res = integrate(lambda d: _w_vec(x, d), DELTA2_MIN, delta2_max, cfg, points=pts, vectorized=True)
    return res.value


def _tail_piece(X: float, n: int, a: float, b: float) -> float:
    # int_X^inf (a ln(2x) + b) x^-n dx
    k = n - 1
    return X ** (-k) * (a * (math.log(2.0 * X) / k + 1.0 / k**2) + b / k)


def t_fast_tail_integral(X: float, Y: float = math.inf) -> float:
    """int_X^Y T_f(x) dx from the large-x expansion (X >~ 1e3)."""
    upper = math.fsum(_tail_piece(X, n, a, b) for n, a, b in _ASYMPTOTIC)
    if math.isinf(Y):
        return upper
    return upper - math.fsum(_tail_piece(Y, n, a, b) for n, a, b in _ASYMPTOTIC)


def integrate_t_fast(
    lo: float,
    hi: float = math.inf,
    weight=None,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    points=(),
) -> float:
    """int_lo^hi T_f(x) * weight(x) dx.

    Beyond X_TAIL the integrand is replaced by its asymptotic expansion
    (``weight`` is taken as 1 there; callers pass weights that tend to 1).
    """
    if weight is None:
        f = t_fast
    else:
        f = lambda x: t_fast(x) * weight(x)
    top = min(hi, X_TAIL)
    total = 0.0
    if lo < top:
        pts = [p for p in (*points, 0.1, 1.0, 10.0, 100.0) if lo < p < top]
        total += integrate(f, lo, top, cfg, points=pts).value
    if hi > X_TAIL:
        total += t_fast_tail_integral(max(lo, X_TAIL), hi)
    return total

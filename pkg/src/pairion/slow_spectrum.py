"""Energy spectrum of slow ionized electrons (eps2 ~ binding energy).

The outgoing electron is a nonrelativistic Coulomb continuum state and the
bound electron is in the hydrogenlike K shell.  Momenta are in units of m,
``eta = alpha Z`` is the K-shell momentum, ``xi = eta / p2`` the Sommerfeld
parameter and ``eps = eps2 / I = xi**-2`` the energy in units of the binding
energy ``I = eta**2 / 2``.

    dsigma/deps2 = alpha r_e^2 / I * T_s(eps),    T_s = (14/9) K(eps)

K is evaluated by quadrature in the shifted variable ``y = x + nu``, where
``x = q^2 / eta^2`` is the squared momentum transfer to the atom in units of
the K-shell momentum.  In ``y`` the denominator is ``(y^2 + 4 eps)^3`` and the
integrand peaks at |y| ~ 2 sqrt(eps).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .numerics import DEFAULT_CONFIG, QuadratureConfig, integrate

__all__ = [
    "FOURTEEN_NINTHS",
    "n_squared",
    "gamma1",
    "phi_k_sq",
    "phi_k_sq_partial_waves",
    "x_angular",
    "k_slow",
    "k_zero_closed",
    "j_integral",
    "j1_closed",
    "t_slow",
    "t_slow_approx",
    "g_factor",
]

FOURTEEN_NINTHS = 14.0 / 9.0


def n_squared(xi: float) -> float:
    """Squared Coulomb normalization 2 pi xi / (1 - exp(-2 pi xi)) (Sommerfeld factor)."""
    if xi < 0:
        raise ValueError(f"Sommerfeld parameter must be >= 0, got {xi!r}")
    if xi == 0:
        return 1.0
    t = 2.0 * math.pi * xi
    return t / -math.expm1(-t)


def gamma1(x, eps: float):
    """Phase arg(x + nu + 2i sqrt(eps)) in (0, pi), nu = 1 - eps."""
    return np.arctan2(2.0 * math.sqrt(eps), np.asarray(x) + 1.0 - eps)


def _check_momenta(p2, q, eta):
    if not (p2 > 0 and q >= 0 and eta > 0):
        raise ValueError(f"need p2 > 0, q >= 0, eta > 0; got {p2!r}, {q!r}, {eta!r}")


def phi_k_sq(p2: float, q: float, eta: float, cos_theta: float) -> float:
    """|Phi_K(p2, q)|^2: K-shell to Coulomb-continuum form factor squared.

    ``cos_theta`` is the cosine of the angle between the electron momentum
    ``p2`` and the momentum transfer ``q`` absorbed by the electron.  The
    continuum state is normalized to a unit-amplitude plane wave.
    """
    _check_momenta(p2, q, eta)
    if not -1.0 <= cos_theta <= 1.0:
        raise ValueError(f"cos_theta must lie in [-1, 1], got {cos_theta!r}")
    xi = eta / p2
    pq = p2 * q * cos_theta
    a = p2 * p2 + q * q - 2.0 * pq + eta * eta
    b = complex(q * q - p2 * p2 + eta * eta, -2.0 * eta * p2)
    gamma = cmath.phase(b)  # in (-pi, 0) since Im b < 0
    num = (q * q - pq) ** 2 + (xi * pq) ** 2
    return (
        2.0**8 * math.pi * n_squared(xi) * math.exp(2.0 * xi * gamma)
        * eta**5 * num / (a**4 * abs(b) ** 2)
    )


def x_angular(p2: float, q: float, eta: float) -> float:
    """X(p2, q) defined by  int dOmega/(2 pi)^3 |Phi_K|^2 = q^2 X."""
    _check_momenta(p2, q, eta)
    xi = eta / p2
    gamma = math.atan2(-2.0 * eta * p2, q * q - p2 * p2 + eta * eta)
    u = eta**5 * (p2 * p2 + 3.0 * q * q + eta * eta)
    v = ((q * q - p2 * p2) ** 2 + 2.0 * eta**2 * (q * q + p2 * p2) + eta**4) ** 3
    return 2.0**7 / (3.0 * math.pi) * n_squared(xi) * math.exp(2.0 * xi * gamma) * u / v


def phi_k_sq_partial_waves(
    p2: float,
    q: float,
    eta: float,
    cos_theta: float,
    l_max: int | None = None,
    tol: float = 1e-12,
) -> float:
    """|Phi_K|^2 by brute force: partial-wave sum of radial overlap integrals.

    Expands the Coulomb continuum function and exp(i q.r) in partial waves;
    the 1s state is spherically symmetric, so each l contributes
    ``(2l+1) e^{i sigma_l} P_l(cos_theta) R_l`` with

        R_l = int_0^inf r^2 e^{-eta r} F_l(-xi, p2 r) / (p2 r) j_l(q r) dr.

    Slow (mpmath special functions); meant as an independent check.
    """
    import mpmath as mp

    _check_momenta(p2, q, eta)
    xi = eta / p2
    cut = [0, 1 / eta, 3 / eta, 8 / eta, 20 / eta, 50 / eta]
    total = mp.mpc(0)
    small = 0
    l_stop = l_max if l_max is not None else 80
    for l in range(l_stop + 1):
        sigma = mp.arg(mp.gamma(l + 1 + 1j * xi))

        def integrand(r, l=l):
            if r == 0:
                return mp.mpf(0)
            return (
                r * r * mp.exp(-eta * r) * mp.coulombf(l, -xi, p2 * r) / (p2 * r)
                * mp.sqrt(mp.pi / (2 * q * r)) * mp.besselj(l + 0.5, q * r)
            )

        radial = mp.quad(integrand, cut)
        term = (2 * l + 1) * mp.exp(1j * sigma) * mp.legendre(l, cos_theta) * radial
        total += term
        if l_max is None:
            small = small + 1 if abs(term) < tol * max(abs(total), 1e-300) else 0
            if small >= 3:
                break
    return float(eta**3 / mp.pi * (4 * mp.pi) ** 2 * abs(total) ** 2)


def _j_integrand(eps: float, scale: float = 1.0):
    """Integrand of J in y = x + nu, vectorized; includes the exp(-2 gamma1/sqrt eps)."""
    se = math.sqrt(eps)

    def f(y):
        expo = -2.0 * np.arctan2(2.0 * se, y) / se
        return scale * (4.0 * eps + 3.0 * y - 2.0) * np.exp(expo) / (y * y + 4.0 * eps) ** 3

    return f


def _j_breakpoints(eps: float) -> list[float]:
    se = math.sqrt(eps)
    return [k * se for k in (-40.0, -10.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 10.0, 40.0)]


def j_integral(eps: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """J(eps) = int_0^inf dx e^{-2 gamma1/sqrt(eps)} (mu + 3x) / (x^2 + 2 nu x + mu^2)^3."""
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    lo = 1.0 - eps
    pts = [p for p in _j_breakpoints(eps) if p > lo]
    # J ~ 3 / (64 (eps + 1)); integrate the O(1) rescaled integrand so that
    # abs_tol acts as a relative bound at every eps
    scale = eps + 1.0
    res = integrate(_j_integrand(eps, scale), lo, math.inf, cfg, points=pts, vectorized=True)
    return res.value / scale


def j1_closed(eps: float) -> float:
    """Closed form of J with the lower limit pushed to -inf: (3/64) e^{-pi xi} sinh(pi xi)/(eps+1)."""
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    pxi = math.pi / math.sqrt(eps)
    # e^{-a} sinh(a) = -expm1(-2a)/2
    return 3.0 / 64.0 * (-0.5 * math.expm1(-2.0 * pxi)) / (eps + 1.0)


def k_zero_closed() -> float:
    """K(0) = 1 - (7/3) e^-4."""
    return 1.0 - 7.0 / 3.0 * math.exp(-4.0)


def _k_zero(cfg: QuadratureConfig) -> float:
    # eps -> 0: exponent -> -4/(x+1), N^2/(pi xi) -> 2
    f = lambda x: np.exp(-4.0 / (x + 1.0)) * (1.0 + 3.0 * x) / (x + 1.0) ** 6
    return 2.0**7 / 3.0 * integrate(f, 0.0, math.inf, cfg, points=[1.0, 5.0], vectorized=True).value


def k_slow(eps: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Slow-electron spectral function K(eps), eps = eps2 / I >= 0.

    K(0) = 1 - (7/3) e^-4 and K(eps) -> 1/(eps+1) for eps >> 1.
    """
    if eps < 0:
        raise ValueError(f"eps must be >= 0, got {eps!r}")
    if eps == 0:
        return _k_zero(cfg)
    se = math.sqrt(eps)
    # 2^6/(3 pi xi) N^2 = 2^7 / (3 (1 - e^{-2 pi / sqrt eps}))
    return 2.0**7 / (3.0 * -math.expm1(-2.0 * math.pi / se)) * j_integral(eps, cfg)


def t_slow(eps: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    return FOURTEEN_NINTHS * k_slow(eps, cfg)


def t_slow_approx(eps: float) -> float:
    """(14/9) / (eps + 1): T_s with the leading Coulomb correction only."""
    if eps < 0:
        raise ValueError(f"eps must be >= 0, got {eps!r}")
    return FOURTEEN_NINTHS / (eps + 1.0)


def g_factor(eps: float) -> float:
    """Coulomb correction factor eps / (eps + 1)."""
    if eps < 0:
        raise ValueError(f"eps must be >= 0, got {eps!r}")
    return eps / (eps + 1.0)

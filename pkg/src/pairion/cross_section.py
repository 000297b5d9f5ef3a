"""Total cross sections for ionization accompanied by pair creation.

All cross sections are in units of alpha r_e^2 (see ``units.to_millibarn``).
At omega -> inf the cross section for a bound state b with n_b electrons and
binding energy I_b tends to the constant

    sigma = (14/9) n_b (ln(m / I_b) + C).

C = c_s + c_f collects the contributions of slow (eps2 ~ I) and fast
(eps2 ~ m) electrons.  Two assemblies are provided:

* the matched route integrates T~_f = T_f * g over all energies and adds the
  slow-electron correction c_s (``big_c``, ``compute_c_f``);
* the split route integrates T_s below a matching energy eps0 and T_f above
  it (``sigma_split``).

c_s is reported in the K-normalization, i.e. the (14/9) prefactor is taken
out, so that C = c_s + c_f holds with both terms in the same units.
"""

from __future__ import annotations

import functools
import json
import math
import os
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .fast_spectrum import integrate_t_fast
from .matching import default_eps0
from .numerics import DEFAULT_CONFIG, QuadratureConfig, integrate
from .slow_spectrum import FOURTEEN_NINTHS, k_slow
from .units import ALPHA, ShellSpec, hydrogenlike_binding, kev_to_m, to_millibarn

__all__ = [
    "C_DEFAULT",
    "Z_VALIDATED",
    "DATA_ENV_VAR",
    "ValidityWarning",
    "CrossSectionBreakdown",
    "compute_c_s",
    "c_s_conventions",
    "compute_c_f",
    "big_c",
    "sigma_kshell_ion",
    "sigma_state",
    "sigma_split",
    "load_binding_energies",
    "shell_states",
    "sigma_shell",
    "EXPERIMENT_1GEV",
    "PUBLISHED_PREDICTIONS_MB",
    "LITERATURE_HYDROGEN",
    "experimental_comparison",
]

C_DEFAULT = 1.3
Z_VALIDATED = 50
DATA_ENV_VAR = "PAIRION_BINDING_DATA"

# Measured K/L-shell ionization in coincidence with pair creation, 1 GeV photons (mb).
EXPERIMENT_1GEV = {
    ("Ag", "K"): (18.0, 6.0),
    ("Au", "K"): (8.3, 6.2),
    ("Au", "L"): (116.0, 76.0),
}
# Previously published predictions of the asymptotic formula, for comparison (mb).
PUBLISHED_PREDICTIONS_MB = {("Ag", "K"): 7.8, ("Au", "K"): 5.9, ("Au", "L"): 37.0}
# Totally inelastic cross section of hydrogen from an independent calculation.
LITERATURE_HYDROGEN = 19.0

_CS_CFG = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-13)
_CS_EDGES = (0.0, 0.25, 1.0, 4.0, 10.0, 100.0, 1e4)


class ValidityWarning(UserWarning):
    """Input lies outside the range where the asymptotic formulas were validated."""


@dataclass(frozen=True)
class CrossSectionBreakdown:
    sigma_s: float
    sigma_f: float
    c_s: float
    c_f: float
    eps0: float
    upper_limit: float
    Z: int
    fast: str = "bare"
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def sigma_total(self) -> float:
        return self.sigma_s + self.sigma_f

    @property
    def C(self) -> float:
        return self.c_s + self.c_f


@functools.lru_cache(maxsize=8)
def compute_c_s(cfg: QuadratureConfig = _CS_CFG) -> float:
    """c_s = int_0^inf (K(eps) - 1/(eps+1)) deps  (K-normalization).

    Multiply by 14/9 for the T-normalization, see ``c_s_conventions``.
    """
    f = lambda e: k_slow(e) - 1.0 / (e + 1.0)
    total = math.fsum(
        integrate(f, lo, hi, cfg).value for lo, hi in zip(_CS_EDGES[:-1], _CS_EDGES[1:])
    )
    # beyond 1e4 the integrand falls like eps^-7/2
    E = _CS_EDGES[-1]
    total += f(E) * E / 2.5
    return total


def c_s_conventions(cfg: QuadratureConfig = _CS_CFG) -> dict[str, float]:
    """c_s with and without the 14/9 prefactor of T_s."""
    k = compute_c_s(cfg)
    return {"K": k, "T": FOURTEEN_NINTHS * k}


def _check_Z(Z: int) -> list[str]:
    if int(Z) != Z or Z < 1:
        raise ValueError(f"nuclear charge must be a positive integer, got {Z!r}")
    notes = []
    if Z > Z_VALIDATED:
        msg = f"Z={Z} exceeds the validated range Z<={Z_VALIDATED}; (alpha Z)^2 is not small"
        warnings.warn(msg, ValidityWarning, stacklevel=3)
        notes.append(msg)
    return notes


def _matched_integral(Z: int, upper: float, cfg: QuadratureConfig) -> float:
    """int_0^upper T_f(x) g(x/I) dx."""
    I = hydrogenlike_binding(Z)
    pts = [I * k for k in (0.1, 1.0, 10.0, 100.0)]
    return integrate_t_fast(0.0, upper, weight=lambda x: x / (x + I), cfg=cfg, points=pts)


def _slow_integral(E: float, cfg: QuadratureConfig) -> float:
    """int_0^E T_s(eps) deps."""
    pts = [p for p in (0.25, 1.0, 4.0, 10.0, 100.0) if p < E]
    return FOURTEEN_NINTHS * integrate(lambda e: k_slow(e), 0.0, E, cfg, points=pts).value


def compute_c_f(
    Z: int,
    upper: float = math.inf,
    eps0: float | None = None,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Fast-electron constant c_f for the K shell of a hydrogenlike ion.

    ``upper`` is the upper limit of the eps2/m integration.  Without
    ``eps0`` the matched spectrum T~_f is integrated from zero and

        c_f = (9/14) int_0^upper T~_f dx - ln(m/I).

    With ``eps0`` the split assembly is used instead: T_s below eps0, bare
    T_f above, and c_f = C_split - c_s.
    """
    _check_Z(Z)
    I = hydrogenlike_binding(Z)
    if eps0 is None:
        return _matched_integral(Z, upper, cfg) / FOURTEEN_NINTHS - math.log(1.0 / I)
    b = sigma_split(Z, eps0=eps0, omega=upper, cfg=cfg)
    return b.C - compute_c_s()


def big_c(Z: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """C(Z) = c_s + c_f(Z, inf) from the matched spectrum."""
    return compute_c_s() + compute_c_f(Z, math.inf, cfg=cfg)


def sigma_kshell_ion(Z: int, C: float | None = None) -> float:
    """(14/9)(ln(2/(alpha Z)^2) + C) for the ground state of a one-electron ion.

    ``C`` defaults to the computed ``big_c(Z)``.
    """
    _check_Z(Z)
    if C is None:
        C = big_c(Z)
    return FOURTEEN_NINTHS * (math.log(2.0 / (ALPHA * Z) ** 2) + C)


def sigma_state(I_b: float, n_b: int, C: float = C_DEFAULT) -> float:
    """(14/9) n_b (ln(m/I_b) + C) for n_b electrons bound by I_b (units of m)."""
    if not 0.0 < I_b < 1.0:
        raise ValueError(f"binding energy must lie in (0, m), got {I_b!r}")
    if int(n_b) != n_b or n_b < 1:
        raise ValueError(f"occupancy must be a positive integer, got {n_b!r}")
    return FOURTEEN_NINTHS * n_b * (math.log(1.0 / I_b) + C)


def sigma_split(
    Z: int,
    eps0: float | None = None,
    omega: float = math.inf,
    fast: str = "bare",
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> CrossSectionBreakdown:
    """sigma = sigma_s + sigma_f with the spectrum split at ``eps0`` (units of m).

    sigma_s integrates T_s over [0, eps0]; sigma_f integrates T_f (``fast=
    "bare"``) or T~_f (``fast="matched"``) over [eps0, omega].
    """
    notes = _check_Z(Z)
    I = hydrogenlike_binding(Z)
    if eps0 is None:
        eps0 = default_eps0(Z)
    if not I < eps0 < 1.0:
        raise ValueError(f"eps0={eps0!r} must lie between I={I:.4g} and m")
    if not (5.0 * I <= eps0 <= 0.3):
        msg = f"eps0={eps0:.4g} m is outside the overlap region I << eps0 << m"
        warnings.warn(msg, ValidityWarning, stacklevel=2)
        notes.append(msg)
    if not omega > eps0:
        raise ValueError("omega must exceed eps0")
    sigma_s = _slow_integral(eps0 / I, cfg)
    if fast == "bare":
        sigma_f = integrate_t_fast(eps0, omega, cfg=cfg)
    elif fast == "matched":
        sigma_f = integrate_t_fast(eps0, omega, weight=lambda x: x / (x + I), cfg=cfg)
    else:
        raise ValueError(f"fast must be 'bare' or 'matched', got {fast!r}")
    return CrossSectionBreakdown(
        sigma_s=sigma_s,
        sigma_f=sigma_f,
        c_s=sigma_s / FOURTEEN_NINTHS - math.log(eps0 / I),
        c_f=sigma_f / FOURTEEN_NINTHS - math.log(1.0 / eps0),
        eps0=eps0,
        upper_limit=omega,
        Z=Z,
        fast=fast,
        warnings=tuple(notes),
    )


def _data_path(path: str | os.PathLike | None) -> Path | None:
    if path is not None:
        return Path(path)
    env = os.environ.get(DATA_ENV_VAR)
    return Path(env) if env else None


def load_binding_energies(path: str | os.PathLike | None = None) -> dict[str, dict[str, dict]]:
    """Read the binding-energy table ``{element: {shell: {n_b, I_b_keV, source}}}``.

    Lookup order: explicit ``path``, then $PAIRION_BINDING_DATA, then the
    table shipped with the package.
    """
    p = _data_path(path)
    if p is None:
        text = resources.files("pairion").joinpath("data/binding_energies.json").read_text()
    else:
        text = p.read_text()
    table = json.loads(text)
    for element, shells in table.items():
        for label, rec in shells.items():
            missing = {"n_b", "I_b_keV"} - rec.keys()
            if missing:
                raise ValueError(f"{element} {label}: missing fields {sorted(missing)}")
    return table


def shell_states(element: str, shell: str, data: dict | None = None) -> list[ShellSpec]:
    """Subshell states belonging to ``shell`` ("L" selects L1, L2, L3; "L3" just L3)."""
    data = load_binding_energies() if data is None else data
    try:
        shells = data[element]
    except KeyError:
        raise KeyError(f"no binding energies for element {element!r}") from None
    if shell in shells:
        labels = [shell]
    else:
        labels = [s for s in shells if s[:1] == shell and s[1:].isdigit()]
    if not labels:
        raise KeyError(f"no shell {shell!r} for {element}; have {sorted(shells)}")
    return [
        ShellSpec(label=lab, n_b=int(shells[lab]["n_b"]), I_b=kev_to_m(shells[lab]["I_b_keV"]))
        for lab in labels
    ]


def sigma_shell(element: str, shell: str, C: float = C_DEFAULT, data: dict | None = None) -> float:
    """Summed cross section over the subshells of ``shell`` (units of alpha r_e^2)."""
    return math.fsum(sigma_state(s.I_b, s.n_b, C) for s in shell_states(element, shell, data))


def experimental_comparison(C: float = C_DEFAULT, data: dict | None = None) -> list[dict]:
    """Computed vs measured cross sections at 1 GeV for the Ag/Au inner shells (mb)."""
    rows = []
    for (element, shell), (value, err) in EXPERIMENT_1GEV.items():
        rows.append({
            "element": element,
            "shell": shell,
            "computed_mb": to_millibarn(sigma_shell(element, shell, C, data)),
            "published_prediction_mb": PUBLISHED_PREDICTIONS_MB[(element, shell)],
            "experiment_mb": value,
            "experiment_err_mb": err,
        })
    return rows

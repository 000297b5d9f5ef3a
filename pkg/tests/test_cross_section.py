import json
import math
import warnings

import numpy as np
import pytest
from scipy import integrate as sci_integrate

from pairion.cross_section import (
    C_DEFAULT,
    DATA_ENV_VAR,
    EXPERIMENT_1GEV,
    LITERATURE_HYDROGEN,
    ValidityWarning,
    big_c,
    c_s_conventions,
    compute_c_f,
    compute_c_s,
    experimental_comparison,
    load_binding_energies,
    shell_states,
    sigma_kshell_ion,
    sigma_shell,
    sigma_split,
    sigma_state,
)
from pairion.slow_spectrum import FOURTEEN_NINTHS, k_slow, t_slow
from pairion.units import ALPHA, hydrogenlike_binding, kev_to_m, to_millibarn


def _cs_integrand(e):
    return k_slow(e) - 1.0 / (e + 1.0)


# -- c_s ---------------------------------------------------------------------

def test_c_s_integrand_at_zero():
    assert FOURTEEN_NINTHS * _cs_integrand(0.0) == pytest.approx(
        -FOURTEEN_NINTHS * 7.0 / 3.0 * math.exp(-4.0), rel=1e-10)
    assert t_slow(0.0) - FOURTEEN_NINTHS == pytest.approx(-0.0665, abs=1e-4)


def test_c_s_integrand_decays_faster_than_inverse_square():
    vals = [abs(_cs_integrand(e)) * e * e for e in (1e2, 1e3, 1e4)]
    assert vals[0] > vals[1] > vals[2]
    assert vals[2] < 1e-4


def test_c_s_against_scipy_quadrature():
    ref = sum(sci_integrate.quad(_cs_integrand, a, b, epsabs=1e-13, epsrel=1e-10, limit=200)[0]
              for a, b in ((0, 1), (1, 10), (10, 100), (100, 1e4)))
    assert compute_c_s() == pytest.approx(ref, abs=1e-9)


def test_c_s_is_saturated_by_low_energies():
    # eps < 1 gives about three quarters, eps < 3 over 90 percent
    head = sci_integrate.quad(_cs_integrand, 0, 3, epsrel=1e-10)[0]
    assert abs(head - compute_c_s()) < 0.1 * abs(compute_c_s())


def test_c_s_conventions():
    conv = c_s_conventions()
    assert conv["T"] == pytest.approx(FOURTEEN_NINTHS * conv["K"], rel=1e-15)
    assert conv["K"] == pytest.approx(-0.023757, abs=2e-6)


# -- C, c_f ------------------------------------------------------------------

def test_C_is_sum_of_slow_and_fast_constants():
    assert big_c(7) == pytest.approx(compute_c_s() + compute_c_f(7), rel=1e-14)


def test_C_nondecreasing_in_Z():
    vals = [big_c(Z) for Z in (1, 2, 5, 10, 20, 30, 40, 50)]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_c_f_values_for_Z20():
    assert compute_c_f(20) == pytest.approx(1.27, abs=0.02)
    assert compute_c_f(20, 5.0) == pytest.approx(0.67, abs=0.02)
    assert compute_c_f(20, 10.0) == pytest.approx(0.91, abs=0.02)


def test_split_route_c_f_depends_weakly_on_matching_energy():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        a = compute_c_f(20, eps0=0.12)
        b = compute_c_f(20, eps0=0.18)
    assert abs(a - b) < 0.02


# -- split assembly ----------------------------------------------------------

def test_split_breakdown_invariants():
    b = sigma_split(10)
    assert b.sigma_total == b.sigma_s + b.sigma_f
    assert b.C == b.c_s + b.c_f
    I = hydrogenlike_binding(10)
    assert b.sigma_total == pytest.approx(FOURTEEN_NINTHS * (math.log(1.0 / I) + b.C), rel=1e-13)


def test_split_total_independent_of_matching_energy():
    totals = [sigma_split(20, e0).sigma_total for e0 in (0.1, 0.125, 0.15, 0.175, 0.2)]
    assert (max(totals) - min(totals)) / min(totals) < 0.01


@pytest.mark.parametrize("Z,eps0", [(1, None), (5, None), (20, 0.03), (20, 0.05)])
def test_split_with_matched_fast_spectrum_reproduces_C(Z, eps0):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        b = sigma_split(Z, eps0, fast="matched")
    assert abs(b.C - big_c(Z)) < 0.02


@pytest.mark.parametrize("eps0", [0.02, 0.05, 0.1, 0.2])
def test_split_with_bare_fast_spectrum_gap_is_order_I_over_eps0(eps0):
    # the bare T_f overshoots by ~ (14/9) I / eps0 just above eps0 and
    # T~_f differs from T_s by O(eps0); both pieces shrink in the overlap
    I = hydrogenlike_binding(20)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        gap = sigma_split(20, eps0).C - big_c(20)
    assert 0 < gap < 1.5 * I / eps0 + eps0


def test_split_light_ion_agrees_with_closed_form():
    b = sigma_split(1)
    assert abs(b.C - big_c(1)) < 0.02


def test_cross_section_constant_at_high_energy():
    a = sigma_split(20, 0.15, omega=1e3).sigma_total
    b = sigma_split(20, 0.15, omega=1e6).sigma_total
    assert abs(b - a) / b < 0.01


def test_finite_upper_limit_difference():
    d = sigma_split(20, 0.15).sigma_total - sigma_split(20, 0.15, omega=5.0).sigma_total
    assert d == pytest.approx(FOURTEEN_NINTHS * (compute_c_f(20) - compute_c_f(20, 5.0)), rel=1e-3)
    assert d == pytest.approx(FOURTEEN_NINTHS * (1.27 - 0.67), abs=0.05)


def test_split_argument_checks():
    with pytest.raises(ValueError):
        sigma_split(20, eps0=1e-4)
    with pytest.raises(ValueError):
        sigma_split(20, eps0=0.15, omega=0.1)
    with pytest.raises(ValueError):
        sigma_split(20, eps0=0.15, fast="other")
    with pytest.warns(ValidityWarning):
        b = sigma_split(20, eps0=0.5)
    assert b.warnings


# -- closed forms ------------------------------------------------------------

def test_hydrogen_cross_section():
    s = sigma_kshell_ion(1)
    assert s == pytest.approx(18.0, abs=0.4)
    assert s == pytest.approx(FOURTEEN_NINTHS * (math.log(2.0 / ALPHA**2) + big_c(1)), rel=1e-14)
    assert LITERATURE_HYDROGEN == 19.0


def test_kshell_ion_validation():
    with pytest.raises(ValueError):
        sigma_kshell_ion(0)
    with pytest.warns(ValidityWarning):
        sigma_kshell_ion(60, C=1.3)


def test_sigma_state_linear_in_occupancy():
    I = kev_to_m(25.514)
    assert sigma_state(I, 4) == pytest.approx(2.0 * sigma_state(I, 2), rel=1e-15)
    assert sigma_state(I, 1, C=0.0) == pytest.approx(FOURTEEN_NINTHS * math.log(1.0 / I))


@pytest.mark.parametrize("I,n", [(0.0, 1), (1.0, 1), (0.01, 0), (0.01, 1.5)])
def test_sigma_state_domain(I, n):
    with pytest.raises(ValueError):
        sigma_state(I, n)


# -- binding-energy data -----------------------------------------------------

def test_bundled_table_has_required_shells():
    t = load_binding_energies()
    for el, sh in (("Ag", "K"), ("Au", "K"), ("Au", "L1"), ("Au", "L2"), ("Au", "L3"),
                   ("Na", "3s"), ("K", "4s"), ("H", "1s")):
        rec = t[el][sh]
        assert rec["n_b"] >= 1 and rec["I_b_keV"] > 0 and rec["source"]


def test_l_shell_aggregates_subshells():
    labels = [s.label for s in shell_states("Au", "L")]
    assert labels == ["L1", "L2", "L3"]
    assert sum(s.n_b for s in shell_states("Au", "L")) == 8
    total = sum(sigma_shell("Au", lab) for lab in labels)
    assert sigma_shell("Au", "L") == pytest.approx(total, rel=1e-14)


def test_missing_entries():
    with pytest.raises(KeyError):
        shell_states("Xx", "K")
    with pytest.raises(KeyError):
        shell_states("Ag", "M")


def test_data_file_override_via_environment(tmp_path, monkeypatch):
    p = tmp_path / "b.json"
    p.write_text(json.dumps({"Ag": {"K": {"n_b": 2, "I_b_keV": 25.0, "source": "test"}}}))
    monkeypatch.setenv(DATA_ENV_VAR, str(p))
    assert load_binding_energies()["Ag"]["K"]["I_b_keV"] == 25.0
    assert sigma_shell("Ag", "K") == pytest.approx(sigma_state(kev_to_m(25.0), 2))


def test_data_file_missing_field(tmp_path):
    p = tmp_path / "b.json"
    p.write_text(json.dumps({"Ag": {"K": {"n_b": 2}}}))
    with pytest.raises(ValueError):
        load_binding_energies(p)


def test_experimental_comparison_rows():
    rows = {(r["element"], r["shell"]): r for r in experimental_comparison()}
    assert set(rows) == set(EXPERIMENT_1GEV)
    assert rows[("Ag", "K")]["experiment_mb"] == 18.0 and rows[("Ag", "K")]["experiment_err_mb"] == 6.0
    assert rows[("Au", "L")]["computed_mb"] == pytest.approx(
        to_millibarn(sigma_shell("Au", "L", C_DEFAULT)))

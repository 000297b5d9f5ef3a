import math

import pytest

from pairion.units import (
    ALPHA,
    CONSTANTS,
    AtomSpec,
    ShellSpec,
    from_millibarn,
    hydrogenlike_binding,
    kev_to_m,
    m_to_kev,
    m_to_mev,
    mev_to_m,
    to_millibarn,
)

# CODATA 2018 classical electron radius and Rydberg energy, used as
# independent references for the derived quantities.
R_E_FM = 2.8179403262
RYDBERG_EV = 13.605693122994


def test_alpha_re2_in_millibarn_matches_classical_radius():
    expected = ALPHA * R_E_FM**2 * 10.0
    assert CONSTANTS.alpha_re2_mb == pytest.approx(expected, rel=1e-9)
    assert to_millibarn(1.0) == pytest.approx(0.57947, abs=1e-5)


def test_millibarn_round_trip():
    assert from_millibarn(to_millibarn(12.34)) == pytest.approx(12.34, rel=1e-15)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_to_millibarn_rejects_non_finite(bad):
    with pytest.raises(ValueError):
        to_millibarn(bad)


def test_energy_conversions_round_trip():
    assert m_to_kev(kev_to_m(25.514)) == pytest.approx(25.514, rel=1e-15)
    assert m_to_mev(1.0) == pytest.approx(0.51099895, rel=1e-15)
    assert mev_to_m(m_to_mev(144.0)) == pytest.approx(144.0, rel=1e-15)


@pytest.mark.parametrize("Z", [1, 20, 50])
def test_hydrogenlike_binding_is_rydberg_times_Z_squared(Z):
    assert m_to_kev(hydrogenlike_binding(Z)) * 1e3 == pytest.approx(RYDBERG_EV * Z * Z, rel=1e-9)


@pytest.mark.parametrize("Z", [0, -3, 2.5])
def test_hydrogenlike_binding_rejects_bad_charge(Z):
    with pytest.raises(ValueError):
        hydrogenlike_binding(Z)


def test_shell_and_atom_validation():
    k = ShellSpec("K", 2, kev_to_m(25.514))
    AtomSpec(47, (k,))
    with pytest.raises(ValueError):
        ShellSpec("K", 0, 0.1)
    with pytest.raises(ValueError):
        ShellSpec("K", 2, -0.1)
    with pytest.raises(ValueError):
        AtomSpec(1, (k,))


def test_provenance_lists_constants():
    p = CONSTANTS.provenance()
    assert p["source"] == "CODATA 2018"
    assert p["alpha"] == ALPHA

import math

import numpy as np
import pytest

from pairion.bh_oracle import (
    BHKinematics,
    back_to_back_kinematics,
    bh_weight,
    coefficient_14_9,
    h_full,
    h_reduced,
    lambda_factor,
)
from pairion.numerics import integrate


def h_retyped(dm, dp, phi, Ee, Ep, w):
    """Second, independent transcription: H = (h- - h+)^2 + Lambda h- h+ q^2."""
    hm, hp = 1.0 / (1.0 + dm * dm), 1.0 / (1.0 + dp * dp)
    q2 = dm * dm + dp * dp + 2.0 * dm * dp * math.cos(phi)
    return (hm - hp) ** 2 + (Ee * Ee + Ep * Ep) / (2.0 * Ee * Ep) * hm * hp * q2


@pytest.mark.parametrize("dm,dp,phi,Ep,w", [
    (0.3, 1.7, 2.0, 3.0, 10.0), (1.0, 1.0, math.pi, 50.0, 100.0), (2.5, 0.1, 0.4, 1.0, 4.0)])
def test_h_full_against_retyped_form(dm, dp, phi, Ep, w):
    k = BHKinematics(dm, dp, phi, Ep, w)
    assert h_full(k) == pytest.approx(h_retyped(dm, dp, phi, w - Ep, Ep, w), rel=1e-12, abs=1e-15)


def test_h_full_symmetric_under_lepton_exchange():
    a = BHKinematics(0.4, 1.3, 2.2, 7.0, 20.0)
    b = BHKinematics(1.3, 0.4, 2.2, 13.0, 20.0)
    assert h_full(a) == pytest.approx(h_full(b), rel=1e-14)


def test_h_full_back_to_back_equal_momenta():
    # delta- = delta+ and phi = pi: q = 0 and H vanishes
    k = BHKinematics(0.8, 0.8, math.pi, 5.0, 10.0)
    assert abs(h_full(k)) < 1e-15


def test_h_reduced_scaling_and_t_zero():
    args = (0.9, 0.3, 1.0, 6.0, 4.0)
    assert h_reduced(0.9, 0.3, 0.01, 6.0, 4.0) == pytest.approx(1e-4 * h_reduced(*args), rel=1e-14)
    lam = lambda_factor(6.0, 4.0)
    assert h_reduced(0.9, 0.0, 0.2, 6.0, 4.0) == pytest.approx(0.04 * lam / (1.0 + 0.81) ** 2)


@pytest.mark.parametrize("dp", [0.3, 1.0, 3.0])
def test_small_recoil_limit(dp):
    rels = []
    for q in (1e-2, 1e-3, 1e-4):
        k = back_to_back_kinematics(dp, 0.6, q, 3.0, 10.0)
        rels.append(abs(h_full(k) / h_reduced(dp, 0.6, q, k.E_e, k.E_p) - 1.0))
    assert rels[-1] < 1e-3
    # O(q) convergence: a tenfold smaller q gives ~tenfold smaller deviation
    assert 7.0 < rels[0] / rels[1] < 13.0 and 7.0 < rels[1] / rels[2] < 13.0


def test_back_to_back_kinematics_round_trip():
    k = back_to_back_kinematics(1.2, 0.35, 1e-3, 2.0, 9.0)
    assert k.q == pytest.approx(1e-3, rel=1e-8)
    assert k.t == pytest.approx(0.35, rel=1e-6)
    assert k.E_e + k.E_p == 9.0


def test_kinematics_validation():
    with pytest.raises(ValueError):
        BHKinematics(-0.1, 1.0, 0.0, 2.0, 5.0)
    with pytest.raises(ValueError):
        BHKinematics(1.0, 1.0, 0.0, 0.5, 5.0)
    with pytest.raises(ValueError):
        back_to_back_kinematics(1.0, 1.5, 0.1, 2.0, 5.0)


def test_distribution_nonnegative_on_samples():
    rng = np.random.default_rng(12345)
    for _ in range(2000):
        w = 10.0 ** rng.uniform(0.7, 4.0)
        Ep = rng.uniform(1.0, w - 1.0)
        k = BHKinematics(rng.exponential(1.5), rng.exponential(1.5), rng.uniform(0, math.pi), Ep, w)
        if k.q > 1e-6:
            assert bh_weight(k) >= 0.0


def test_t_weight_integral():
    # int_0^1 dt / (2 sqrt(1 - t^2)) = pi/4, with t = sin(theta)
    val = integrate(lambda th: 0.5 * np.ones_like(th), 0.0, math.pi / 2, vectorized=True).value
    assert val == pytest.approx(math.pi / 4, rel=1e-14)


def test_phase_space_jacobian_by_disc_area():
    # a da b db dphi = 2 b db dq^2 dt / sqrt(1 - t^2): the (a, phi) area with
    # |a + b| < Q must equal the (q^2, t) measure 2 * Q^2 * pi/2 = pi Q^2
    b, Q = 1.0, 0.05
    rng = np.random.default_rng(7)
    n = 400_000
    a = rng.uniform(b - Q, b + Q, n)
    phi = rng.uniform(math.pi - 2 * Q, math.pi + 2 * Q, n)
    q2 = a * a + b * b + 2 * a * b * np.cos(phi)
    box = (2 * Q) * (4 * Q)
    area = box * np.mean(a * (q2 < Q * Q))
    assert area * b == pytest.approx(math.pi * Q * Q * b, rel=0.01)


def test_coefficient_recovers_fourteen_ninths():
    c4 = coefficient_14_9(1e4)
    c5 = coefficient_14_9(1e5)
    assert c4 == pytest.approx(14.0 / 9.0, rel=5e-3)
    assert abs(c5 / c4 - 1.0) < 1e-3
    assert abs(c5 - 14.0 / 9.0) < abs(c4 - 14.0 / 9.0)


def test_coefficient_domain():
    with pytest.raises(ValueError):
        coefficient_14_9(1.5)

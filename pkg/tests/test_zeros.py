"""Bessel-J evaluation and zero finding."""

import math

import mpmath as mp
import numpy as np
import pytest

import oracle
from besselq import DomainError, bessel_j, bessel_j_zero, bessel_j_zeros
from besselq.checks import rayleigh_sneddon_sum

# first zero of J_0, from bisection on the naive series oracle
J0_ZERO1 = 2.404825557695772768622


def test_first_zero_of_j0():
    assert abs(bessel_j_zero(0.0, 1) - 2.404825557695773) < 1e-10
    assert abs(bessel_j_zero(0.0, 1) - J0_ZERO1) < 1e-12
    assert abs(float(oracle.first_zero_j0()) - J0_ZERO1) < 1e-12


def test_half_order_zeros_are_multiples_of_pi():
    # J_{1/2}(x) is proportional to sin(x)/sqrt(x)
    for k in range(1, 21):
        assert abs(bessel_j_zero(0.5, k) - k * math.pi) < 1e-10


def test_interlacing():
    for order in (0.0, 0.5, 2.0):
        a = [bessel_j_zero(order, k) for k in range(1, 22)]
        b = [bessel_j_zero(order + 1.0, k) for k in range(1, 22)]
        for k in range(20):
            assert a[k] < b[k] < a[k + 1]


def test_zero_has_verified_sign_change():
    for order in (-0.9, -0.5, 0.0, 1.0, 4.5):
        for k in (1, 2, 7):
            z = bessel_j_zero(order, k)
            delta = 1e-7 * max(1.0, z)
            assert bessel_j(order, z - delta) * bessel_j(order, z + delta) < 0.0


def test_scalar_zero_accuracy_against_mpmath():
    for order in (-0.9, -0.5, 0.0, 1.0, 2.5, 4.5, 6.0):
        for k in (1, 2, 3, 5, 10, 100):
            if order >= 0:
                ref = float(mp.besseljzero(order, k))
            else:
                ref = float(
                    mp.findroot(lambda t: mp.besselj(order, t), bessel_j_zero(order, k))
                )
            assert abs(bessel_j_zero(order, k) - ref) < 1e-10


def test_vectorized_zeros_match_scalar():
    zeros = bessel_j_zeros(2.0, 2000)
    assert np.all(np.diff(zeros) > 0.0)
    for k in (1, 5, 17, 200, 2000):
        assert abs(zeros[k - 1] - bessel_j_zero(2.0, k)) < 5e-10


def test_bessel_j_matches_mpmath_across_handover():
    for order in (-0.5, 0.0, 1.0, 2.5, 4.5):
        for x in (0.5, 5.0, 11.9, 12.1, 25.0, 300.0):
            ref = float(mp.besselj(order, x))
            amplitude = math.sqrt(2.0 / (math.pi * x))
            assert abs(bessel_j(order, x) - ref) < 5e-11 * amplitude + 1e-14


def test_rayleigh_sneddon_partial_sums_converge():
    # sum_k j_{nu,k}^(-2) = 1/(4(nu+1)); bare 1e4-term partial sum is close,
    # the trigamma-corrected version is used by the check suite
    zeros = bessel_j_zeros(0.0, 10_000)
    bare = float(np.sum(1.0 / zeros**2))
    # dropped tail is ~1/(pi^2 K) = 1.01e-5 absolute at K = 1e4
    assert abs(bare - 0.25) / 0.25 < 5e-5
    corrected = rayleigh_sneddon_sum(0.0, 10_000)
    assert abs(corrected - 0.25) / 0.25 < 1e-9


def test_domain_errors():
    with pytest.raises(DomainError):
        bessel_j_zero(-1.5, 1)
    with pytest.raises(DomainError):
        bessel_j_zero(0.0, 0)
    with pytest.raises(DomainError):
        bessel_j(0.0, -1.0)
    with pytest.raises(DomainError):
        bessel_j_zeros(0.0, 0)

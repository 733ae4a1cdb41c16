"""Special-function unit tests against frozen oracle values and identities.

Golden constants tagged "oracle" were produced by tests/oracle.py (naive
extended-precision summation) and frozen here; the acceptance suite
re-derives them live.
"""

import cmath
import math
import struct

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from besselq import (
    CancellationError,
    DomainError,
    OverflowRangeError,
    PoleError,
    SeriesPolicy,
    TruncationError,
    bessel_ratio_contiguous,
    fg_from_kelvin,
    fg_series,
    gamma_real,
    kelvin,
    kelvin_scaled,
    modified_bessel_i,
    tricomi_it,
)

# oracle: naive series at >= 40 digits
I0_2 = 2.279585302336067267437
RATIO_0_10 = 1.234141231476452401465
TRICOMI_1_I = complex(0.9947930229361946537142, 0.1248915043580619204717)
FG_0_1 = (0.9843817812130868839656, 0.2495660400366597214194)
FG_05_16 = (-1.078071389488113959132, 2.121389597658043780588)
KELVIN_0_1 = (0.9843817812130868839656, 0.2495660400366597214194)
GAMMA_7_5 = 1871.254305797788346476


def rel(a, b):
    return abs(a - b) / abs(b)


# ---------------------------------------------------------------- gamma


def test_gamma_at_one():
    assert gamma_real(1.0) == 1.0


def test_gamma_half_is_sqrt_pi():
    assert rel(gamma_real(0.5), math.sqrt(math.pi)) < 1e-14


def test_gamma_7_5_by_product_recursion():
    # independent oracle: Gamma(7.5) = 6.5 * 5.5 * ... * 0.5 * Gamma(0.5)
    expected = math.sqrt(math.pi)
    x = 0.5
    while x < 7.0:
        expected *= x
        x += 1.0
    assert rel(gamma_real(7.5), expected) < 1e-13
    assert rel(gamma_real(7.5), GAMMA_7_5) < 1e-13


def test_gamma_accuracy_across_range():
    worst = 0.0
    for i in range(400):
        x = -0.99 + 50.99 * i / 399.0
        if abs(x - round(x)) < 1e-9 and x <= 0.0:
            continue
        worst = max(worst, rel(gamma_real(x), float(mp.gamma(x))))
    assert worst < 1e-13


def test_gamma_poles():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            gamma_real(x)


def test_gamma_overflow():
    with pytest.raises(OverflowRangeError):
        gamma_real(200.0)


# ------------------------------------------------- modified Bessel series


def test_bessel_i_at_zero():
    assert modified_bessel_i(0.0, 0.0) == 1.0
    assert modified_bessel_i(1.0, 0.0) == 0.0


def test_bessel_i_golden():
    assert rel(modified_bessel_i(0.0, 2.0), I0_2) < 1e-13


def test_bessel_i_accuracy_to_30():
    for x in (0.25, 1.0, 5.0, 12.0, 19.0, 30.0):
        for order in (-0.5, 0.0, 1.0, 3.5):
            ref = float(oracle.bessel_i(order, x))
            assert rel(modified_bessel_i(order, x), ref) < 1e-12


def test_bessel_i_domain_and_overflow():
    with pytest.raises(DomainError):
        modified_bessel_i(-1.5, 1.0)
    with pytest.raises(DomainError):
        modified_bessel_i(0.0, -1.0)
    with pytest.raises(OverflowRangeError):
        modified_bessel_i(-0.5, 0.0)
    with pytest.raises((OverflowRangeError, TruncationError)):
        modified_bessel_i(0.0, 800.0, SeriesPolicy(max_terms=2000))


# ------------------------------------------------------------- tricomi


def test_tricomi_at_zero_is_reciprocal_gamma():
    for order in (-0.5, 0.0, 1.5, 7.0):
        assert rel(tricomi_it(order, 0j), 1.0 / gamma_real(order + 1.0)) < 1e-14


def test_tricomi_s4_reduces_to_i0_2():
    assert rel(tricomi_it(0.0, 4.0 + 0j), modified_bessel_i(0.0, 2.0)) < 1e-14


def test_tricomi_golden_complex():
    assert rel(tricomi_it(1.0, 1j), TRICOMI_1_I) < 1e-13


def test_tricomi_is_singlevalued_and_bitwise_deterministic():
    omega = 2.5
    variants = [complex(0.0, omega), 1j * omega, complex(0, 1) * omega]
    results = [tricomi_it(0.7, s) for s in variants]
    packed = {struct.pack("<dd", r.real, r.imag) for r in results}
    assert len(packed) == 1


def test_tricomi_cancellation_flag():
    with pytest.raises(CancellationError) as info:
        tricomi_it(0.0, complex(0.0, 4.0e4), SeriesPolicy(max_terms=4000))
    assert info.value.ratio > 1e12


def test_tricomi_truncation_error():
    with pytest.raises(TruncationError):
        tricomi_it(0.0, complex(0.0, 400.0), SeriesPolicy(max_terms=8))


# ------------------------------------------------------ contiguous ratio


def test_ratio_small_z_leading_term():
    z = 1e-3
    ratio = bessel_ratio_contiguous(0.0, complex(z, 0.0))
    # I_0/I_2 ~ 8/z^2 (1 + o(1)) for z -> 0
    assert abs(ratio * z * z / 8.0 - 1.0) < 1e-5


def test_ratio_golden_real_10():
    assert rel(bessel_ratio_contiguous(0.0, 10.0 + 0j), RATIO_0_10) < 1e-11


def test_ratio_matches_tricomi_reassembly():
    # I_a/I_{a+2} = (4/s) T_a(s) / T_{a+2}(s) with s = z^2
    for order in (0.0, 0.5, 2.0):
        for omega in (0.5, 5.0, 40.0):
            s = complex(0.0, omega)
            z = cmath.sqrt(s)
            lhs = bessel_ratio_contiguous(order, z)
            rhs = (4.0 / s) * tricomi_it(order, s) / tricomi_it(order + 2.0, s)
            assert rel(lhs, rhs) < 1e-10


@pytest.mark.parametrize("magnitude", [1e-3, 0.1, 3.0, 60.0, 500.0])
@pytest.mark.parametrize("arg", [0.0, math.pi / 4])
def test_ratio_accuracy_sweep(magnitude, arg):
    z = magnitude * cmath.exp(1j * arg)
    ref = complex(oracle.i_ratio(1.3, mp.mpc(z.real, z.imag)))
    assert rel(bessel_ratio_contiguous(1.3, z), ref) < 1e-11


def test_ratio_rejects_zero():
    with pytest.raises(DomainError):
        bessel_ratio_contiguous(0.0, 0j)


# ------------------------------------------------------------- f/g pair


def test_fg_small_omega_limits():
    for order in (-0.5, 0.0, 2.5):
        pair = fg_series(order, 1e-12)
        assert rel(pair.f, 1.0 / gamma_real(order + 1.0)) < 1e-12
        assert abs(pair.g) < 1e-11


def test_fg_golden():
    pair = fg_series(0.0, 1.0)
    assert rel(pair.f, FG_0_1[0]) < 1e-13
    assert rel(pair.g, FG_0_1[1]) < 1e-13


def test_fg_matches_tricomi_on_imaginary_axis():
    pair = fg_series(0.5, 4.0)
    t = tricomi_it(0.5, 4.0j)
    assert abs(complex(pair.f, pair.g) - t) < 1e-12 * abs(t)


def test_fg_guard_honesty():
    # whenever the series returns unflagged, it matches the oracle to
    # rel_tol * cancellation_guard of the pair norm
    policy = SeriesPolicy()
    bound = policy.rel_tol * policy.cancellation_guard
    for order in (0.0, 3.5):
        for omega in (1.0, 30.0, 324.0, 2000.0, 8000.0):
            try:
                pair = fg_series(order, omega, policy)
            except CancellationError:
                continue
            f_ref, g_ref = (float(v) for v in oracle.fg_pair(order, omega))
            norm = math.hypot(f_ref, g_ref)
            assert abs(pair.f - f_ref) < bound * norm
            assert abs(pair.g - g_ref) < bound * norm


# ------------------------------------------------------ Kelvin functions


def test_kelvin_at_zero():
    pair = kelvin(0.0, 0.0)
    assert (pair.ber, pair.bei) == (1.0, 0.0)


def test_kelvin_golden():
    pair = kelvin(0.0, 1.0)
    assert rel(pair.ber, KELVIN_0_1[0]) < 1e-13
    assert rel(pair.bei, KELVIN_0_1[1]) < 1e-13


def test_kelvin_rotation_reproduces_fg():
    # recombining ber/bei of order 2 at x=3 gives (f, g) at omega = 9
    direct = fg_series(2.0, 9.0)
    via_kelvin = fg_from_kelvin(2.0, 9.0)
    assert rel(via_kelvin.f, direct.f) < 1e-10
    assert rel(via_kelvin.g, direct.g) < 1e-10


def test_kelvin_large_argument_route():
    for order in (-0.5, 0.0, 2.0, 5.5):
        for x in (18.5, 30.0, 60.0):
            pair = kelvin(order, x)
            ber_ref, bei_ref = (float(v) for v in oracle.kelvin_pair(order, x))
            norm = math.hypot(ber_ref, bei_ref)
            assert abs(pair.ber - ber_ref) < 1e-10 * norm
            assert abs(pair.bei - bei_ref) < 1e-10 * norm


def test_kelvin_series_asymptotic_handover_consistency():
    # same point evaluated by the series (crossover pushed up) and by the
    # large-argument expansion (default crossover)
    for order in (0.0, 1.0, 3.5):
        series_pair = kelvin(order, 20.0, series_crossover=25.0)
        asym_pair = kelvin(order, 20.0)
        norm = math.hypot(series_pair.ber, series_pair.bei)
        assert abs(series_pair.ber - asym_pair.ber) < 2e-11 * norm
        assert abs(series_pair.bei - asym_pair.bei) < 2e-11 * norm


def test_kelvin_overflow():
    with pytest.raises(OverflowRangeError):
        kelvin(0.0, 1100.0)


def test_kelvin_scaled_matches_unscaled():
    ber_s, bei_s, log_scale, _ = kelvin_scaled(1.0, 40.0)
    pair = kelvin(1.0, 40.0)
    scale = math.exp(log_scale)
    assert rel(ber_s * scale, pair.ber) < 1e-14
    assert rel(bei_s * scale, pair.bei) < 1e-14


def test_fg_from_kelvin_golden_and_limits():
    pair = fg_from_kelvin(0.5, 16.0)
    assert rel(pair.f, FG_05_16[0]) < 1e-11
    assert rel(pair.g, FG_05_16[1]) < 1e-11
    small = fg_from_kelvin(0.0, 1e-8)
    assert rel(small.f, 1.0) < 1e-8
    assert abs(small.g) < 1e-7


def test_fg_from_kelvin_matches_fg_series():
    pair_a = fg_from_kelvin(1.0, 1.0)
    pair_b = fg_series(1.0, 1.0)
    assert rel(pair_a.f, pair_b.f) < 1e-10
    assert rel(pair_a.g, pair_b.g) < 1e-10


# ------------------------------------------------------ property checks


@settings(max_examples=40, deadline=None)
@given(
    order=st.floats(min_value=-0.99, max_value=12.0),
    omega=st.floats(min_value=1e-3, max_value=320.0),
)
def test_decomposition_identity_property(order, omega):
    pair = fg_series(order, omega)
    t = tricomi_it(order, complex(0.0, omega))
    assert abs(complex(pair.f, pair.g) - t) <= 1e-11 * abs(t)


@settings(max_examples=40, deadline=None)
@given(
    order=st.floats(min_value=-0.99, max_value=12.0),
    omega=st.floats(min_value=1e-3, max_value=320.0),
)
def test_kelvin_fg_rotation_property(order, omega):
    a = fg_series(order, omega)
    b = fg_from_kelvin(order, omega)
    norm = math.hypot(a.f, a.g)
    assert abs(a.f - b.f) <= 1e-9 * norm
    assert abs(a.g - b.g) <= 1e-9 * norm


def test_invariant_grids_decomposition_and_rotation():
    # frozen grid form of the two identities above
    omegas = [10.0 ** (-3 + 5 * i / 39) for i in range(40)]
    for order in (-0.5, 0.0, 1.0, 3.5, 10.0):
        for omega in omegas:
            pair = fg_series(order, omega)
            t = tricomi_it(order, complex(0.0, omega))
            assert abs(complex(pair.f, pair.g) - t) <= 1e-11 * abs(t)
            rot = fg_from_kelvin(order, omega)
            norm = math.hypot(pair.f, pair.g)
            assert abs(pair.f - rot.f) <= 1e-9 * norm
            assert abs(pair.g - rot.g) <= 1e-9 * norm

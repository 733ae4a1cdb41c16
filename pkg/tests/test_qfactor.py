"""Quality-factor routes: golden values, route equivalence, asymptotics,
dispatcher behavior, and the product identity linking the two closed forms."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from besselq import (
    CancellationError,
    DomainError,
    InconsistencyError,
    ModelOrder,
    OverflowRangeError,
    fg_series,
    frac_maxwell_q_inverse,
    kelvin_scaled,
    q_inverse,
    q_inverse_asymptotic,
    q_inverse_direct,
    q_inverse_fg,
    q_inverse_kelvin,
)
from besselq.policy import DEFAULT_CROSSOVER_OMEGA

# oracle: Theorem-style combination of naive extended-precision series,
# cross-validated against the ratio form inside the oracle itself
Q_1_0 = 6.006243342891924626984
Q_100_1 = 0.311653810173022234662

NUS = (-0.5, 0.0, 1.0, 3.5, 10.0)


def rel(a, b):
    return abs(a - b) / abs(b)


def log_grid(lo, hi, count):
    return [10.0 ** (math.log10(lo) + (math.log10(hi) - math.log10(lo)) * i / (count - 1)) for i in range(count)]


# ------------------------------------------------------- golden values


def test_three_routes_reproduce_golden_value():
    model = ModelOrder(0.0)
    for fn in (q_inverse_fg, q_inverse_kelvin, q_inverse_direct):
        assert rel(fn(model, 1.0).q_inverse, Q_1_0) < 1e-10


def test_golden_value_nu1_omega100():
    model = ModelOrder(1.0)
    assert rel(q_inverse_kelvin(model, 100.0).q_inverse, Q_100_1) < 1e-10


# ----------------------------------------------------- route behaviors


def test_fg_route_low_frequency():
    # Q^-1 -> 2(nu+1)(nu+3)/omega = 6/omega for nu = 0
    ev = q_inverse_fg(ModelOrder(0.0), 1e-3)
    assert abs(ev.q_inverse * 1e-3 / 6.0 - 1.0) < 1e-6


def test_fg_route_rejects_above_crossover():
    with pytest.raises(CancellationError):
        q_inverse_fg(ModelOrder(0.0), 400.0)


def test_fg_kelvin_consistency_nu2_omega10():
    a = q_inverse_fg(ModelOrder(2.0), 10.0).q_inverse
    b = q_inverse_kelvin(ModelOrder(2.0), 10.0).q_inverse
    assert rel(a, b) < 1e-9


def test_kelvin_route_low_frequency_negative_order():
    # 2(0.5)(2.5)/0.01 = 250 at nu = -1/2
    ev = q_inverse_kelvin(ModelOrder(-0.5), 0.01)
    assert abs(ev.q_inverse / 250.0 - 1.0) < 0.02


def test_kelvin_direct_consistency_nu1_omega100():
    a = q_inverse_kelvin(ModelOrder(1.0), 100.0).q_inverse
    b = q_inverse_direct(ModelOrder(1.0), 100.0).q_inverse
    assert rel(a, b) < 1e-9


def test_kelvin_route_overflow_guard():
    with pytest.raises(OverflowRangeError):
        q_inverse_kelvin(ModelOrder(0.0), 2.5e6)


def test_direct_route_high_frequency_asymptote_gap():
    # measured gap |Q/asym - 1| at (nu=3.5, omega=1e5) is 2.2514e-2 and it
    # shrinks like 1/sqrt(omega); the second-order correction scales with
    # (nu+1)^2, so a flat 2% expectation is slightly optimistic here
    model = ModelOrder(3.5)
    gap_1e5 = abs(
        q_inverse_direct(model, 1e5).q_inverse / q_inverse_asymptotic(model, 1e5, "high") - 1.0
    )
    assert gap_1e5 < 2.3e-2
    gap_1e6 = abs(
        q_inverse_direct(model, 1e6).q_inverse / q_inverse_asymptotic(model, 1e6, "high") - 1.0
    )
    assert gap_1e6 < gap_1e5 / 2.0


def test_direct_route_storage_modulus_positive_across_sweep():
    for nu in NUS:
        model = ModelOrder(nu)
        for omega in log_grid(1e-4, 1e7, 45):
            ev = q_inverse_direct(model, omega)  # raises if Re(sJ~) <= 0
            assert ev.q_inverse > 0.0


# ---------------------------------------------------------- dispatcher


def test_dispatcher_routes_and_overlap():
    model = ModelOrder(0.0)
    low = q_inverse(model, 1.0)
    assert low.route in ("fg_series", "kelvin")
    high = q_inverse(model, 1e5)
    assert high.route == "direct_ratio"
    in_band = q_inverse(model, DEFAULT_CROSSOVER_OMEGA)
    assert in_band.est_rel_error <= 1e-9  # measured ~3e-14, frozen bound


def test_dispatcher_overlap_discrepancy_bound_nu1():
    model = ModelOrder(1.0)
    band = log_grid(DEFAULT_CROSSOVER_OMEGA / math.sqrt(10.0), DEFAULT_CROSSOVER_OMEGA * math.sqrt(10.0), 9)
    for omega in band:
        ev = q_inverse(model, omega)
        assert ev.est_rel_error <= 1e-9


def test_dispatcher_inconsistency_on_forced_bad_crossover():
    # pushing the crossover far above its design point forces the Kelvin
    # series into heavy cancellation; the in-band cross-check must catch it
    with pytest.raises((InconsistencyError, CancellationError)):
        q_inverse(ModelOrder(0.0), 9.0e4, crossover_omega=1.0e5)


# ------------------------------------------------- invariant structure


def test_three_route_agreement_grids():
    for nu in NUS:
        model = ModelOrder(nu)
        for omega in log_grid(1e-3, DEFAULT_CROSSOVER_OMEGA, 40):
            a = q_inverse_fg(model, omega).q_inverse
            b = q_inverse_kelvin(model, omega).q_inverse
            c = q_inverse_direct(model, omega).q_inverse
            assert max(abs(a - b), abs(a - c), abs(b - c)) / abs(c) <= 1e-9
        for omega in log_grid(DEFAULT_CROSSOVER_OMEGA, 1e6, 40):
            b = q_inverse_kelvin(model, omega).q_inverse
            c = q_inverse_direct(model, omega).q_inverse
            assert abs(b - c) / abs(c) <= 1e-8


def test_monotonic_decrease_along_log_grid():
    for nu in NUS:
        model = ModelOrder(nu)
        values = [q_inverse(model, omega).q_inverse for omega in log_grid(1e-4, 1e5, 181)]
        assert all(x > y for x, y in zip(values, values[1:]))


def test_nu_ordering_at_fixed_omega():
    for omega in (0.1, 1.0, 10.0, 100.0):
        values = [q_inverse_kelvin(ModelOrder(nu), omega).q_inverse for nu in NUS]
        assert all(x < y for x, y in zip(values, values[1:]))


def test_asymptote_convergence_direction():
    # low side measured through the f/g route, whose roundoff floor stays
    # far below the omega^2 gap decay (the Kelvin form loses ~eps/omega
    # to product cancellation at small omega and would mask the trend)
    for nu in (0.0, 1.0):
        model = ModelOrder(nu)
        low_gaps = [
            abs(
                q_inverse_fg(model, 10.0**-k).q_inverse
                / q_inverse_asymptotic(model, 10.0**-k, "low")
                - 1.0
            )
            for k in range(2, 6)
        ]
        high_gaps = [
            abs(
                q_inverse_direct(model, 10.0**k).q_inverse
                / q_inverse_asymptotic(model, 10.0**k, "high")
                - 1.0
            )
            for k in range(2, 6)
        ]
        assert all(a > b for a, b in zip(low_gaps, low_gaps[1:]))
        assert all(a > b for a, b in zip(high_gaps, high_gaps[1:]))


def test_product_identity_between_closed_forms():
    # the oscillatory-pair numerator/denominator collapse onto the
    # Kelvin-form ones up to the common factor -(2/sqrt(omega))^(2 nu + 2)
    for nu in (-0.5, 0.0, 1.3, 3.5):
        for omega in (0.5, 4.0, 40.0, 250.0):
            f1, g1, _, _ = fg_series(nu, omega)
            f2, g2, _, _ = fg_series(nu + 2.0, omega)
            x = math.sqrt(omega)
            ber1, bei1, _, _ = kelvin_scaled(nu, x)
            ber2, bei2, _, _ = kelvin_scaled(nu + 2.0, x)
            prefactor = (2.0 / x) ** (2.0 * nu + 2.0)
            numer_fg = f1 * f2 + g1 * g2
            numer_kelvin = -prefactor * (bei2 * ber1 - bei1 * ber2)
            denom_fg = g1 * f2 - f1 * g2
            denom_kelvin = -prefactor * (bei1 * bei2 + ber1 * ber2)
            assert abs(numer_fg - numer_kelvin) <= 1e-10 * abs(numer_fg)
            assert abs(denom_fg - denom_kelvin) <= 1e-10 * abs(denom_fg)


@settings(max_examples=30, deadline=None)
@given(
    nu=st.floats(min_value=-0.9, max_value=10.0),
    omega=st.floats(min_value=1e-3, max_value=320.0),
)
def test_three_route_agreement_property(nu, omega):
    model = ModelOrder(nu)
    a = q_inverse_fg(model, omega).q_inverse
    b = q_inverse_kelvin(model, omega).q_inverse
    c = q_inverse_direct(model, omega).q_inverse
    assert a > 0.0
    assert max(abs(a - b), abs(a - c), abs(b - c)) / abs(c) <= 1e-9


# ------------------------------------------------- asymptotic formulas


def test_asymptotic_low_formula():
    assert rel(q_inverse_asymptotic(ModelOrder(0.0), 1e-3, "low"), 6000.0) < 1e-15


def test_asymptotic_high_leading_order():
    model = ModelOrder(0.0)
    omega = 1e10
    expected = math.sqrt(2.0) / math.sqrt(omega)
    assert abs(q_inverse_asymptotic(model, omega, "high") / expected - 1.0) < 1e-4


def test_asymptotic_regime_validation():
    with pytest.raises(DomainError):
        q_inverse_asymptotic(ModelOrder(0.0), 1.0, "mid")


def test_high_asymptote_is_half_order_fractional_maxwell():
    # the high-frequency form equals the half-order fractional Maxwell
    # dissipation with time scale tau = 1/(4 (nu+1)^2)
    for nu in (0.0, 1.0, 2.5):
        model = ModelOrder(nu)
        tau = 1.0 / (4.0 * (nu + 1.0) ** 2)
        for omega in (10.0, 1e4, 1e8):
            a = q_inverse_asymptotic(model, omega, "high")
            b = frac_maxwell_q_inverse(0.5, omega * tau)
            assert rel(a, b) < 1e-14


def test_oracle_agreement_spot_check():
    model = ModelOrder(3.5)
    ref = float(oracle.q_inverse(3.5, 7.0))
    assert rel(q_inverse_direct(model, 7.0).q_inverse, ref) < 1e-11

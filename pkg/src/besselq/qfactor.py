"""Quality factor of Bessel viscoelastic media by three independent routes.

The specific attenuation factor of a medium with Laplace-domain creep
response ``s J~(s)`` under harmonic excitation at frequency ``omega`` is

    Q^-1(omega) = -Im{ s J~(s) | s = i omega } / Re{ s J~(s) | s = i omega }.

For the Bessel class this admits three equivalent evaluations:

* ``q_inverse_fg``     -- the oscillatory-pair form
  ``(f_n f_{n+2} + g_n g_{n+2}) / (g_n f_{n+2} - f_n g_{n+2})`` built from
  the alternating series (reliable below the cancellation crossover);
* ``q_inverse_kelvin`` -- the Kelvin-function form
  ``(bei_{n+2} ber_n - bei_n ber_{n+2}) / (bei_n bei_{n+2} + ber_n ber_{n+2})``
  at argument ``sqrt(omega)`` (scaled internally, valid until ber/bei leave
  the double range near omega ~ 1e6);
* ``q_inverse_direct`` -- ``-Im/Re`` of the contiguous Bessel ratio at
  ``z = sqrt(i omega)``, uniformly valid in omega.

``q_inverse`` dispatches between them and cross-checks inside a one-decade
overlap band around the configured crossover.  Both asymptotic regimes are
available in closed form: ``2(nu+1)(nu+3)/omega`` as ``omega -> 0`` (an
ordinary Maxwell element) and
``sqrt(2)(nu+1)/(sqrt(omega) + sqrt(2)(nu+1))`` as ``omega -> inf`` (a
fractional Maxwell element of order 1/2 with time scale
``tau = 1/(4 (nu+1)^2)``).

All functions are pure and deterministic for fixed inputs and policy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

from .errors import CancellationError, DomainError, InconsistencyError
from .model import ModelOrder
from .policy import (
    DEFAULT_CROSSOVER_OMEGA,
    DEFAULT_POLICY,
    OVERLAP_TOLERANCE,
    SeriesPolicy,
)
from .errors import OverflowRangeError
from .specfun.kelvinfg import _KELVIN_OVERFLOW_X, fg_series, kelvin_scaled
from .specfun.modified import _ratio_next_order

Route = Literal["fg_series", "kelvin", "direct_ratio", "hybrid"]

_EPS = 2.3e-16
_DENOMINATOR_FLOOR = 1e-300


@dataclass(frozen=True)
class QEvaluation:
    """One quality-factor sample with provenance and an error estimate."""

    omega: float
    q_inverse: float
    route: Route
    est_rel_error: float

    def __post_init__(self) -> None:
        if not self.omega > 0.0:
            raise DomainError(f"omega must be positive, got {self.omega}")
        if not (math.isfinite(self.q_inverse) and self.q_inverse > 0.0):
            raise InconsistencyError(
                f"dissipativity violated: Q^-1 = {self.q_inverse} at "
                f"omega = {self.omega} (route {self.route})"
            )
        if not (math.isfinite(self.est_rel_error) and self.est_rel_error >= 0.0):
            raise InconsistencyError(
                f"error estimate must be finite and >= 0, got {self.est_rel_error}"
            )


def _check_omega(omega: float) -> float:
    omega = float(omega)
    if not (math.isfinite(omega) and omega > 0.0):
        raise DomainError(f"omega must be positive and finite, got {omega}")
    return omega


def q_inverse_fg(
    model: ModelOrder,
    omega: float,
    policy: SeriesPolicy = DEFAULT_POLICY,
    crossover_omega: float = DEFAULT_CROSSOVER_OMEGA,
) -> QEvaluation:
    """Q^-1 from the oscillatory pair (f, g) at orders nu and nu+2.

    Restricted to ``omega <= crossover_omega``; above that the alternating
    series cancel too strongly and CancellationError is raised.
    """
    omega = _check_omega(omega)
    if omega > crossover_omega:
        raise CancellationError(
            f"f/g route requested above the crossover "
            f"({omega:.3g} > {crossover_omega:.3g})"
        )
    nu = model.nu
    f1, g1, _, _ = fg_series(nu, omega, policy)
    f2, g2, _, _ = fg_series(nu + 2.0, omega, policy)
    numer = f1 * f2 + g1 * g2
    denom = g1 * f2 - f1 * g2
    norm1 = math.hypot(f1, g1)
    norm2 = math.hypot(f2, g2)
    if abs(denom) < _DENOMINATOR_FLOOR * norm1 * norm2:
        raise InconsistencyError(
            f"f/g denominator hazard at omega = {omega} (|denom| = {abs(denom):.3g})"
        )
    if denom <= 0.0:
        raise InconsistencyError(
            f"storage response lost positivity at omega = {omega} "
            f"(f/g denominator = {denom:.3g})"
        )
    est = _EPS * norm1 * norm2 * (1.0 / abs(numer) + 1.0 / abs(denom)) + 4.0 * policy.rel_tol
    return QEvaluation(omega, numer / denom, "fg_series", est)


def q_inverse_kelvin(
    model: ModelOrder,
    omega: float,
    policy: SeriesPolicy = DEFAULT_POLICY,
    crossover_omega: float = DEFAULT_CROSSOVER_OMEGA,
) -> QEvaluation:
    """Q^-1 from Kelvin functions of orders nu and nu+2 at ``sqrt(omega)``.

    Works with exponentially scaled ber/bei internally: the order-dependent
    power prefactors and the common ``e^{x/sqrt(2)}`` growth both cancel
    between numerator and denominator, so only representability of the
    unscaled pair limits the range (OverflowRangeError near omega ~ 1e6).
    """
    omega = _check_omega(omega)
    nu = model.nu
    x = math.sqrt(omega)
    if x > _KELVIN_OVERFLOW_X:
        raise OverflowRangeError(
            f"ber/bei are not representable at sqrt(omega) = {x:.4g}; "
            "use the direct-ratio route"
        )
    xover = math.sqrt(crossover_omega)
    ber1, bei1, scale1, e1 = kelvin_scaled(nu, x, policy, xover)
    ber2, bei2, scale2, e2 = kelvin_scaled(nu + 2.0, x, policy, xover)
    if scale1 != scale2:  # both routes share the same x, so scales agree
        raise InconsistencyError("internal scale mismatch in Kelvin route")
    numer = bei2 * ber1 - bei1 * ber2
    denom = bei1 * bei2 + ber1 * ber2
    norm1 = math.hypot(ber1, bei1)
    norm2 = math.hypot(ber2, bei2)
    if abs(denom) < _DENOMINATOR_FLOOR * max(norm1 * norm2, 1e-300):
        raise InconsistencyError(
            f"Kelvin denominator hazard at omega = {omega} "
            f"(|denom| = {abs(denom):.3g})"
        )
    est = (e1 + e2) * norm1 * norm2 * (1.0 / abs(numer) + 1.0 / abs(denom))
    return QEvaluation(omega, numer / denom, "kelvin", est)


def q_inverse_direct(
    model: ModelOrder, omega: float, policy: SeriesPolicy = DEFAULT_POLICY
) -> QEvaluation:
    """Q^-1 as ``-Im/Re`` of the contiguous ratio at ``z = sqrt(i omega)``.

    The principal square root is extracted once and shared by numerator and
    denominator of the ratio, so the evaluation is branch-consistent; valid
    across the whole frequency range (tested to omega = 1e7 and beyond).
    """
    omega = _check_omega(omega)
    nu = model.nu
    z = cmath.sqrt(complex(0.0, omega))
    r1, res1, _ = _ratio_next_order(nu + 1.0, z, policy.rel_tol)  # I_{nu+2}/I_{nu+1}
    s_j = 1.0 + (2.0 * (nu + 1.0) / z) / r1
    if not (math.isfinite(s_j.real) and math.isfinite(s_j.imag)):
        raise InconsistencyError(f"non-finite creep response at omega = {omega}")
    if s_j.real <= 0.0:
        # Numerically asserted storage-modulus positivity; a violation is
        # surfaced, never clamped.
        raise InconsistencyError(
            f"Re(s J~) = {s_j.real:.3g} <= 0 at omega = {omega}"
        )
    q = -s_j.imag / s_j.real
    mag = abs(s_j)
    est = (res1 + 8.0 * _EPS) * mag * (1.0 / abs(s_j.imag) + 1.0 / s_j.real)
    return QEvaluation(omega, q, "direct_ratio", est)


def q_inverse(
    model: ModelOrder,
    omega: float,
    policy: SeriesPolicy = DEFAULT_POLICY,
    crossover_omega: float = DEFAULT_CROSSOVER_OMEGA,
) -> QEvaluation:
    """Hybrid dispatcher over the Kelvin and direct-ratio routes.

    Uses the Kelvin form below ``crossover_omega`` and the direct ratio at
    or above it.  Inside the one-decade overlap band
    ``[crossover/sqrt(10), crossover*sqrt(10)]`` both routes are evaluated
    and the reported ``est_rel_error`` is their relative discrepancy; a
    discrepancy above ``OVERLAP_TOLERANCE`` raises InconsistencyError.  The
    route label always names the evaluation that produced the returned
    value, so a frequency sweep changes label exactly once.
    """
    omega = _check_omega(omega)
    band_lo = crossover_omega / math.sqrt(10.0)
    band_hi = crossover_omega * math.sqrt(10.0)
    if omega < band_lo:
        return q_inverse_kelvin(model, omega, policy, crossover_omega)
    if omega > band_hi:
        return q_inverse_direct(model, omega, policy)
    kelvin_eval = q_inverse_kelvin(model, omega, policy, crossover_omega)
    direct_eval = q_inverse_direct(model, omega, policy)
    discrepancy = abs(kelvin_eval.q_inverse - direct_eval.q_inverse) / abs(
        direct_eval.q_inverse
    )
    if discrepancy > OVERLAP_TOLERANCE:
        raise InconsistencyError(
            f"overlap-band routes disagree at omega = {omega}: "
            f"kelvin {kelvin_eval.q_inverse!r} vs direct "
            f"{direct_eval.q_inverse!r} (rel {discrepancy:.3e})"
        )
    chosen = kelvin_eval if omega < crossover_omega else direct_eval
    return QEvaluation(omega, chosen.q_inverse, chosen.route, discrepancy)


def q_inverse_asymptotic(
    model: ModelOrder, omega: float, regime: Literal["high", "low"]
) -> float:
    """Closed-form asymptotic Q^-1 in the requested regime.

    ``low``:  2(nu+1)(nu+3)/omega        (omega -> 0, Maxwell-like);
    ``high``: sqrt(2)(nu+1)/(sqrt(omega) + sqrt(2)(nu+1))  (omega -> inf).
    """
    omega = _check_omega(omega)
    nu = model.nu
    if regime == "low":
        return 2.0 * (nu + 1.0) * (nu + 3.0) / omega
    if regime == "high":
        c = math.sqrt(2.0) * (nu + 1.0)
        return c / (math.sqrt(omega) + c)
    raise DomainError(f"regime must be 'high' or 'low', got {regime!r}")

"""Material functions of the Bessel class of linear viscoelastic media.

A model of order ``nu > -1`` is defined by its rate of creep, the time
derivative of the creep compliance normalized by the glass compliance
(nondimensional units, relaxation time set to one):

    Psi(t; nu) = 4(nu+1)(nu+2) + 4(nu+1) sum_k exp(-j_{nu+2,k}^2 t),

a Dirichlet series over the squared positive zeros of ``J_{nu+2}``.  In the
Laplace domain the same information appears as ratios of modified Bessel
functions of contiguous order,

    Psi~(s; nu)   = 2(nu+1)/sqrt(s) * I_{nu+1}(sqrt(s)) / I_{nu+2}(sqrt(s)),
    s J~(s; nu)   = 1 + Psi~(s; nu) = I_{nu}(sqrt(s)) / I_{nu+2}(sqrt(s)),

which this module evaluates through the cancellation-free contiguous-ratio
scheme (a single internal square root shared by numerator and denominator,
so the two expressions above are consistent by construction of the branch).

The fractional Maxwell comparison model closes the module: the Bessel class
behaves like a fractional Maxwell element of order 1/2 at high frequency
and like an ordinary Maxwell element at low frequency.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

from .errors import DomainError, OverflowRangeError, TruncationError
from .policy import DEFAULT_POLICY, SeriesPolicy
from .specfun.modified import _ratio_next_order, bessel_ratio_contiguous
from .specfun.zeros import bessel_j_zeros


@dataclass(frozen=True)
class ModelOrder:
    """Order parameter ``nu > -1`` selecting one Bessel medium."""

    nu: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.nu) and self.nu > -1.0):
            raise DomainError(f"model order must be finite and > -1, got {self.nu}")


class DirichletTruncation(NamedTuple):
    """How a Dirichlet-series evaluation was truncated."""

    n_zeros: int
    tail_bound: float


def _check_s(s: complex) -> complex:
    s = complex(s)
    if s == 0:
        raise DomainError("Laplace frequency s must be nonzero")
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError("Laplace frequency s must be finite")
    return s


def creep_rate_laplace(
    model: ModelOrder, s: complex, policy: SeriesPolicy = DEFAULT_POLICY
) -> complex:
    """Laplace transform of the rate of creep, ``Psi~(s; nu)``.

    Evaluates ``2(nu+1)/z * I_{nu+1}(z)/I_{nu+2}(z)`` at ``z = sqrt(s)``
    (principal branch, extracted once).  Behaves like ``2(nu+1)/sqrt(s)``
    as ``s -> inf`` and like ``4(nu+1)(nu+2)/s`` as ``s -> 0``.
    """
    s = _check_s(s)
    nu = model.nu
    z = cmath.sqrt(s)
    # I_{nu+1}/I_{nu+2} is the reciprocal of the next-order CF ratio
    r, _, _ = _ratio_next_order(nu + 1.0, z, policy.rel_tol)
    return (2.0 * (nu + 1.0) / z) / r


def creep_compliance_laplace(
    model: ModelOrder, s: complex, policy: SeriesPolicy = DEFAULT_POLICY
) -> complex:
    """Laplace-domain creep compliance combination ``s J~(s; nu)``.

    Computed as the contiguous ratio ``I_nu(sqrt(s)) / I_{nu+2}(sqrt(s))``;
    equals ``1 + creep_rate_laplace(model, s)`` up to the accuracy of the
    two independent continued-fraction evaluations.  For real s > 0 the
    value is real and exceeds 1.
    """
    s = _check_s(s)
    return bessel_ratio_contiguous(model.nu, cmath.sqrt(s), policy)


def creep_rate_time(
    model: ModelOrder,
    t: float,
    policy: SeriesPolicy = DEFAULT_POLICY,
    max_zeros: int = 100_000,
) -> tuple[float, DirichletTruncation]:
    """Rate of creep ``Psi(t; nu)`` by summing the Dirichlet series.

    Zeros are consumed in blocks until the analytic tail bound drops below
    ``policy.rel_tol`` times the partial result.  Consecutive zeros of
    ``J_{nu+2}`` (order > 1) are separated by at least pi, so the dropped
    tail beyond the K-th zero j_K is bounded by the geometric sum

        sum_{m>=1} exp(-(j_K + m pi)^2 t) <= e^{-j_K^2 t} q/(1-q),
        q = e^{-2 pi j_K t}.

    Returns the value together with the truncation record.  The series
    diverges at ``t = 0+`` (like ``2(nu+1)/sqrt(pi t)``), hence ``t > 0``
    is required; the long-time limit is the constant ``4(nu+1)(nu+2)``.
    """
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    nu = model.nu
    const = 4.0 * (nu + 1.0) * (nu + 2.0)
    coeff = 4.0 * (nu + 1.0)
    block = 64
    zeros = bessel_j_zeros(nu + 2.0, block)
    partial = 0.0
    k = 0
    while True:
        if k >= len(zeros):
            if len(zeros) >= max_zeros:
                raise TruncationError(
                    f"Dirichlet series needs more than {max_zeros} zeros at t = {t}"
                )
            zeros = bessel_j_zeros(nu + 2.0, min(2 * len(zeros), max_zeros))
        j = zeros[k]
        partial += math.exp(-j * j * t)
        k += 1
        q = math.exp(-2.0 * math.pi * j * t)
        tail = coeff * math.exp(-j * j * t) * q / (1.0 - q)
        result = const + coeff * partial
        if tail <= policy.rel_tol * result:
            return result, DirichletTruncation(k, tail)


def creep_compliance_asymptotic(
    model: ModelOrder, s: complex, regime: Literal["high", "low"]
) -> complex:
    """Two-term expansions of ``s J~(s; nu)`` at the ends of the s-range.

    ``high`` (s -> inf):  1 + 2(nu+1) s^{-1/2}   (principal branch);
    ``low``  (s -> 0):    2(nu+2)/(nu+3) + 4(nu+1)(nu+2)/s.
    """
    s = _check_s(s)
    nu = model.nu
    if regime == "high":
        return 1.0 + 2.0 * (nu + 1.0) / cmath.sqrt(s)
    if regime == "low":
        return 2.0 * (nu + 2.0) / (nu + 3.0) + 4.0 * (nu + 1.0) * (nu + 2.0) / s
    raise DomainError(f"regime must be 'high' or 'low', got {regime!r}")


def frac_maxwell_q_inverse(beta: float, omega_tau: float) -> float:
    """Specific dissipation of the fractional Maxwell model of order beta.

        Q^-1_beta(omega tau) = sin(pi beta/2) / ((omega tau)^beta + cos(pi beta/2))

    for ``0 < beta <= 1``; beta = 1 is the ordinary Maxwell element with
    ``Q^-1 = 1/(omega tau)``.
    """
    beta = float(beta)
    omega_tau = float(omega_tau)
    if not (0.0 < beta <= 1.0):
        raise DomainError(f"beta must lie in (0, 1], got {beta}")
    if not omega_tau > 0.0:
        raise DomainError(f"omega*tau must be positive, got {omega_tau}")
    half = 0.5 * math.pi * beta
    try:
        denom = omega_tau**beta + math.cos(half)
    except OverflowError as exc:
        raise OverflowRangeError(str(exc)) from exc
    return math.sin(half) / denom

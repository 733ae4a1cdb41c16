"""besselq: quality factor and material functions of Bessel-type
viscoelastic media.

The package evaluates the specific attenuation factor Q^-1(omega; nu) of
the Bessel class of linear viscoelastic models through three independent
analytical routes (oscillatory-pair series, Kelvin functions, contiguous
modified-Bessel ratios), together with the special functions those routes
require and the time/Laplace-domain material functions of the class.

All public functions are pure and deterministic for fixed inputs and
policy; they are safe to call concurrently.
"""

from .errors import (
    BesselQError,
    CancellationError,
    DomainError,
    InconsistencyError,
    NonConvergenceError,
    OverflowRangeError,
    PoleError,
    RootIsolationError,
    TruncationError,
)
from .model import (
    DirichletTruncation,
    ModelOrder,
    creep_compliance_asymptotic,
    creep_compliance_laplace,
    creep_rate_laplace,
    creep_rate_time,
    frac_maxwell_q_inverse,
)
from .policy import (
    DEFAULT_CROSSOVER_OMEGA,
    DEFAULT_POLICY,
    OVERLAP_TOLERANCE,
    SeriesPolicy,
)
from .qfactor import (
    QEvaluation,
    q_inverse,
    q_inverse_asymptotic,
    q_inverse_direct,
    q_inverse_fg,
    q_inverse_kelvin,
)
from .specfun import (
    FGPair,
    KelvinPair,
    bessel_j,
    bessel_j_zero,
    bessel_j_zeros,
    bessel_ratio_contiguous,
    fg_from_kelvin,
    fg_series,
    gamma_real,
    kelvin,
    kelvin_scaled,
    modified_bessel_i,
    tricomi_it,
)

__version__ = "0.1.0"

__all__ = [
    "BesselQError",
    "CancellationError",
    "DEFAULT_CROSSOVER_OMEGA",
    "DEFAULT_POLICY",
    "DirichletTruncation",
    "DomainError",
    "FGPair",
    "InconsistencyError",
    "KelvinPair",
    "ModelOrder",
    "NonConvergenceError",
    "OVERLAP_TOLERANCE",
    "OverflowRangeError",
    "PoleError",
    "QEvaluation",
    "RootIsolationError",
    "SeriesPolicy",
    "TruncationError",
    "bessel_j",
    "bessel_j_zero",
    "bessel_j_zeros",
    "bessel_ratio_contiguous",
    "creep_compliance_asymptotic",
    "creep_compliance_laplace",
    "creep_rate_laplace",
    "creep_rate_time",
    "fg_from_kelvin",
    "fg_series",
    "frac_maxwell_q_inverse",
    "gamma_real",
    "kelvin",
    "kelvin_scaled",
    "modified_bessel_i",
    "q_inverse",
    "q_inverse_asymptotic",
    "q_inverse_direct",
    "q_inverse_fg",
    "q_inverse_kelvin",
    "tricomi_it",
]

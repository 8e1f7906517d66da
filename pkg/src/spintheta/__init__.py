"""Numerics and exact arithmetic for even spin curves.

Four layers:

* `theta` -- Riemann theta functions with half-integer characteristics and
  their derivatives up to order four, via truncated lattice sums;
* `jets` / `szego` -- Taylor jets at the origin, the quartic form
  (1/2) theta2^2 - theta0 * theta4 with polarization and rank tests, and the
  normalized kernel theta(u)/theta(0) with its genus-1 vanishing locus;
* `degenerations` -- exact stable-curve models of the limit correspondences
  over the boundary divisors, with arithmetic-genus bookkeeping;
* `picard` -- exact-rational divisor classes on the moduli space of even spin
  curves: test-curve pairings, the replayable first-Chern-class ledger, the
  pulled-back Hodge class and slope bounds.

`verify.run_all` executes the acceptance battery; the `spintheta` console
script exposes everything on the command line.
"""

from .degenerations import (
    Component,
    GenusTable,
    StableCurveModel,
    arithmetic_genus,
    genus_table,
    limit_model_A0,
    limit_model_Ai,
    limit_model_B0,
    limit_model_Bi,
    limit_model_T_thetanull,
    limit_model_thetanull,
    sym_square_cohomology,
)
from .errors import (
    DimensionMismatch,
    GenusMismatch,
    GenusTooSmall,
    InconsistentSystem,
    IndexOutOfRange,
    NonPositiveDefinite,
    NotFound,
    OrderTooHigh,
    SpinThetaError,
    ThetaNull,
)
from .jets import (
    QuarticForm,
    ThetaJet,
    beta_combination,
    beta_tensor,
    polarize,
    rank_defect,
    scorza_quartic,
    theta_jet,
)
from .picard import (
    UNDETERMINED,
    ChernEntry,
    ChernLedger,
    FreeCoefficient,
    SpinDivisorClass,
    TestCurve,
    chern_weight,
    fold_index,
    intersect,
    moving_slope_bound,
    pullback_delta0_prime,
    pullback_delta_i,
    slope,
    szego_hodge_class,
    test_curve,
    theta_null_full_class,
)
from .szego import EllipticSpinPoint, SzegoContext, elliptic_scorza_offset, on_scorza_locus, szego
from .theta import (
    PeriodMatrix,
    ThetaCharacteristic,
    Tolerance,
    all_characteristics,
    even_characteristics,
    parity,
    quasi_period_factor,
    theta,
    theta_batch,
    theta_deriv,
)

__version__ = "0.1.0"

"""Closed-form Euler-sum identities with independent numerical verification.

The package evaluates harmonic-number series (bilinear, window, and
reciprocal-binomial shapes, plus alternating variants) through closed forms
built from zeta values and shifted harmonic numbers, and checks every
identity against brute-force oracles: truncated summation with analytic tail
correction, alternating-series acceleration, and tanh-sinh quadrature.
"""

from .errors import ConvergenceError, DomainError, EulersumError, PoleError
from .harmonic import (
    HarmonicOrder,
    StirlingRow,
    alt_harmonic_num,
    gen_binomial,
    harmonic_num,
    param_harmonic,
    shifted_harmonic,
    stirling1,
    stirling_row,
    y_moment,
)
from .linear_sums import (
    GfKind,
    GfResult,
    WindowSumParams,
    cubic_stirling_window,
    gf_eval,
    gf_two_sided,
    polylog_moment,
    sum_H1_bilinear,
    sum_H1_power,
    sum_H1cubed_window,
    sum_H1H2_window,
    sum_H1sq_window,
    sum_Hm_window,
    sum_recip_shift,
    sum_shiftedH_over_nsq,
    sum_sq_diff_window,
)
from .alt_sums import (
    alt_polylog_moment,
    alt_recip_shift,
    alt_sum_H1_bilinear,
    alt_sum_H1_power,
    alt_sum_Hm_window,
)
from .oracle import (
    EvalResult,
    GridResult,
    IdentityCase,
    Integrand,
    Method,
    SeriesConfig,
    Status,
    TailParams,
    Variant,
    VerificationRecord,
    accelerated_alternating,
    grid_verify,
    quadrature,
    truncated_series,
    verify_identity,
)
from .specfun import (
    EULER_GAMMA,
    LN2,
    ShiftParam,
    alt_hurwitz_zeta,
    alt_zeta,
    digamma,
    gamma_fn,
    h_func,
    hurwitz_zeta,
    param_polylog,
    polygamma,
    polylog,
    riemann_zeta,
)
from .wsums import (
    PartialFractionCoeffs,
    WSumSpec,
    classical_w,
    classical_w110,
    classical_w111,
    pf_coeffs,
    pf_coeffs_window,
    w_1_p,
    w_11_0,
    w_111,
    w_alt_1_p,
    w_alt_m_0,
    w_alt_m_1,
    w_m_0,
    w_m_1,
)

__version__ = "0.1.0"

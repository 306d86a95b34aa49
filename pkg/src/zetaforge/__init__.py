"""zetaforge: a numerical laboratory for prime-sifting ratios, the base-m
eta series family, eta-based zeta evaluation on the critical strip,
power-sum asymptotics, critical-line zero scans, and prime-based
predictions of zero ordinates, with a claims-validation harness that
measures every testable statement against independently computed primes
and zeros."""

__version__ = "0.1.0"

from .errors import (
    CacheError,
    CompletenessError,
    DomainError,
    InsufficientSampleError,
    NonConvergenceError,
    NonFiniteError,
    PoleError,
    SelfCheckError,
    SingularDenominatorError,
    ZetaforgeError,
)
from .etazeta import (
    ClassicalZero,
    EtaSpec,
    EvalResult,
    classical_zeros,
    eta2_accelerated,
    eta_denominator,
    eta_m_partial,
    euler_product_partial,
    functional_equation_residual,
    odd_even_split_residual,
    tail_vanishing_probe,
    zeta_from_eta,
    zeta_partial_corrected,
)
from .numerics import complex_gamma, cpow_neg, rs_theta
from .powersum import (
    LambdaAsymptote,
    SiftedSumRatio,
    lambda_asymptote,
    lambda_partial,
    scaling_residual,
    sifted_sum_ratio,
    sigma_limit_probe,
)
from .predictions import (
    GapLawReport,
    LocationDiagnostic,
    PredictionRow,
    compare_to_actual,
    gap_law_report,
    predicted_y_asymptotic,
    predicted_y_gap_form,
    predicted_y_prime_pair,
    prime_location_condition,
)
from .sieve import (
    PrimeTable,
    RatioTerm,
    SiftedClass,
    empirical_sift,
    first_n_primes,
    gap_stats,
    pi_approx,
    ratio_partial_sum,
    removal_ratio,
    sieve_primes,
)
from .zeros import (
    ScanConfig,
    ZeroRecord,
    hardy_z,
    load_zero_cache,
    scan_zeros,
    write_zero_cache,
    zero_count_estimate,
)

__all__ = [name for name in dir() if not name.startswith("_")]

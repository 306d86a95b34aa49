"""Foundational complex arithmetic.

Complex values are plain Python ``complex`` (a pair of 64-bit floats).
NaN or infinity in a result is treated as an error state, never returned.
All functions here are pure; tolerances are documented per function.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, NonFiniteError, PoleError

TWO_PI = 2.0 * math.pi

# Lanczos approximation, g = 7, 9 coefficients.  Gives ~1e-13 relative
# accuracy over the right half plane, comfortably under the 1e-12 target
# for the strip |Im s| <= 50, 0 < Re s <= 10.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _require_finite(value: complex, where: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteError(where, f"non-finite result {value!r}")
    return value


def cpow_neg(n: int, s: complex) -> complex:
    """n**(-s) for a positive integer base, via exp(-s * ln n).

    The principal real logarithm of the positive base makes the branch
    canonical.  n = 1 returns exactly 1+0j.  The modulus of the result
    depends only on Re s: |n**-(x+iy)| = n**-x.
    """
    if n < 1:
        raise DomainError("numerics_core.cpow_neg", f"base must be >= 1, got {n}")
    if n == 1:
        return 1.0 + 0.0j
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError("numerics_core.cpow_neg", f"exponent must be finite, got {s!r}")
    return _require_finite(cmath.exp(-s * math.log(n)), "numerics_core.cpow_neg")


def _lanczos_gamma_positive(s: complex) -> complex:
    # Valid for Re s > 0.5; callers reflect the rest of the plane.
    z = s - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += coeff / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(TWO_PI) * t ** (z + 0.5) * cmath.exp(-t) * acc


def complex_gamma(s: complex) -> complex:
    """Gamma function on the complex plane, poles excluded.

    Lanczos rational approximation for Re s > 0.5, reflection formula
    elsewhere.  Relative error <= 1e-12 for 0 < Re s <= 10, |Im s| <= 50,
    the region the functional-equation check visits.
    """
    s = complex(s)
    if s.imag == 0.0 and s.real <= 0.0 and s.real == int(s.real):
        raise PoleError("numerics_core.complex_gamma", f"pole at s = {int(s.real)}")
    if s.real < 0.5:
        # Gamma(s) = pi / (sin(pi s) * Gamma(1 - s))
        sin_term = cmath.sin(cmath.pi * s)
        if sin_term == 0:
            raise PoleError("numerics_core.complex_gamma", f"pole at s = {s!r}")
        return _require_finite(
            cmath.pi / (sin_term * _lanczos_gamma_positive(1.0 - s)),
            "numerics_core.complex_gamma",
        )
    return _require_finite(_lanczos_gamma_positive(s), "numerics_core.complex_gamma")


def rs_theta(y: float) -> float:
    """Phase rotating zeta on the critical line to a real-valued function.

    Asymptotic form (y/2)ln(y/2pi) - y/2 - pi/8 + 1/(48y) + 7/(5760 y^3),
    accurate to <= 1e-7 for y >= 10; the next omitted term bounds the
    error.  Domain y >= 2.
    """
    if y < 2.0:
        raise DomainError("numerics_core.rs_theta", f"asymptotic series needs y >= 2, got {y}")
    half = 0.5 * y
    return (
        half * math.log(y / TWO_PI)
        - half
        - math.pi / 8.0
        + 1.0 / (48.0 * y)
        + 7.0 / (5760.0 * y**3)
    )

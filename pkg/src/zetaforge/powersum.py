"""Partial power sums sum(n**-s), their large-N asymptote
N**(1-s)/(1-s) on Re s < 1, the doubling/scaling law, sifted-class power
sums against exact removal-ratio predictions, and the boundary probe
(1-x)**(1-s) that separates the convergent from the divergent regime.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .series import CHUNK, power_sum
from .sieve import removal_ratio, sieve_primes

SIFT_LIMIT_MAX = 10**7


@dataclass(frozen=True)
class LambdaAsymptote:
    """Asymptote a * N**(1-s) with a = 1/(1-s), valid on Re s < 1."""

    s: complex
    a: complex
    n: int

    @property
    def value(self) -> complex:
        return self.a * cmath.exp((1.0 - self.s) * math.log(self.n))


@dataclass(frozen=True)
class SiftedSumRatio:
    """Measured power-sum share of one sifting class vs. its exact prediction."""

    p: int
    n: int
    lambda_p: complex
    lambda_full: complex
    predicted: Fraction
    ratio: complex
    rel_dev: float


def lambda_partial(s: complex, n: int) -> complex:
    """Exact partial power sum over 1..N, deterministic chunked reduction."""
    if n < 1:
        raise DomainError("lambda_asym.lambda_partial", f"need N >= 1, got {n}")
    return power_sum(complex(s), 1, n)


def lambda_asymptote(s: complex, n: int) -> complex:
    """N**(1-s)/(1-s), the growth law of the partial power sum for Re s < 1."""
    s = complex(s)
    if s.real >= 1:
        raise DomainError("lambda_asym.lambda_asymptote", f"valid only for Re s < 1, got {s!r}")
    if n < 1:
        raise DomainError("lambda_asym.lambda_asymptote", f"need N >= 1, got {n}")
    return LambdaAsymptote(s=s, a=1.0 / (1.0 - s), n=n).value


def scaling_residual(s: complex, n: int, k: int) -> float:
    """Relative defect of the scaling law lambda(kN) = k**(1-s) lambda(N)."""
    s = complex(s)
    if s.real >= 1:
        raise DomainError("lambda_asym.scaling_residual", f"valid only for Re s < 1, got {s!r}")
    if k < 2:
        raise DomainError("lambda_asym.scaling_residual", f"scale factor must be >= 2, got {k}")
    whole = lambda_partial(s, k * n)
    scaled = cmath.exp((1.0 - s) * math.log(k)) * lambda_partial(s, n)
    return abs(whole - scaled) / abs(whole)


def _class_power_sum(p: int, s: complex, limit: int, smaller_primes: np.ndarray) -> complex:
    # Members of the class are p*m for m <= limit//p with m free of any
    # prime below p; sum (p*m)**-s chunk by chunk in ascending m.
    s = complex(s)
    m_top = limit // p
    re_parts: list[float] = []
    im_parts: list[float] = []
    for lo in range(1, m_top + 1, CHUNK):
        hi = min(lo + CHUNK, m_top + 1)
        m = np.arange(lo, hi, dtype=np.int64)
        keep = np.ones(m.size, dtype=bool)
        for q in smaller_primes:
            keep &= m % int(q) != 0
        if not keep.any():
            continue
        members = (p * m[keep]).astype(np.float64)
        chunk = np.exp(-s * np.log(members)).sum()
        re_parts.append(chunk.real)
        im_parts.append(chunk.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def sifted_sum_ratio(p: int, s: complex, limit: int) -> SiftedSumRatio:
    """Power sum over one smallest-prime-factor class, divided by the full
    partial power sum and compared with the exact removal ratio."""
    s = complex(s)
    if s.real >= 1:
        raise DomainError("lambda_asym.sifted_sum_ratio", f"valid only for Re s < 1, got {s!r}")
    if not 2 <= p <= limit:
        raise DomainError("lambda_asym.sifted_sum_ratio", f"need prime p <= limit, got p={p} limit={limit}")
    if limit > SIFT_LIMIT_MAX:
        raise DomainError("lambda_asym.sifted_sum_ratio", f"limit capped at {SIFT_LIMIT_MAX}, got {limit}")
    small = sieve_primes(p).primes
    idx = int(np.searchsorted(small, p))
    if idx >= small.size or int(small[idx]) != p:
        raise DomainError("lambda_asym.sifted_sum_ratio", f"{p} is not prime")
    index = idx + 1  # 1-based order of p among the primes
    smaller = small[:idx]
    lam_p = _class_power_sum(p, s, limit, smaller)
    lam_full = lambda_partial(s, limit)
    predicted = removal_ratio(index).value
    ratio = lam_p / lam_full
    rel_dev = abs(ratio - float(predicted)) / float(predicted)
    return SiftedSumRatio(
        p=p, n=limit, lambda_p=lam_p, lambda_full=lam_full, predicted=predicted, ratio=ratio, rel_dev=rel_dev
    )


def sigma_limit_probe(s: complex, x: float) -> complex:
    """(1-x)**(1-s) for 0 < x < 1; drives the boundary limit x -> 1.

    The modulus is (1-x)**(1-Re s): it collapses to 0 for Re s < 1 and
    blows up for Re s > 1; a purely imaginary exponent only rotates.
    """
    if not 0.0 < x < 1.0:
        raise DomainError("lambda_asym.sigma_limit_probe", f"probe needs 0 < x < 1, got {x}")
    s = complex(s)
    return cmath.exp((1.0 - s) * math.log1p(-x))

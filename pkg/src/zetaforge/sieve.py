"""Exact prime generation, smallest-prime-factor sifting classes, removal
ratios in exact rational arithmetic, prime counting, and gap statistics.

The sifting classes formalize sequential removal: the class of a prime p
holds every integer in [2, N] whose smallest prime factor is p (multiples
of p not divisible by any smaller prime).  One survivor, the integer 1,
is outside every class, so 1 + sum of class sizes == N exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, InsufficientSampleError

SIEVE_LIMIT_MAX = 10**8
SIFT_LIMIT_MAX = 10**7
RATIO_INDEX_MAX = 10**4

# One-shot boolean sieve below this; segmented blocks above (memory budget).
_SEGMENT_THRESHOLD = 10**7
_SEGMENT_SIZE = 1 << 21


@dataclass(frozen=True)
class PrimeTable:
    """All primes <= limit, ascending, with their exact count."""

    limit: int
    primes: np.ndarray

    @property
    def count(self) -> int:
        return int(self.primes.size)

    def pi(self, x: int | float) -> int:
        """Exact count of primes <= x (x within the table's limit)."""
        if x > self.limit:
            raise DomainError("sieve_core.PrimeTable.pi", f"{x} exceeds table limit {self.limit}")
        return int(np.searchsorted(self.primes, x, side="right"))


@dataclass(frozen=True, slots=True)
class SiftedClass:
    """Exact census of one sifting class: integers with smallest prime factor p."""

    p: int
    members_count: int
    largest_member: int


@dataclass(frozen=True)
class RatioTerm:
    """Asymptotic removal ratio for the n-th prime, as an exact rational."""

    n: int
    prime: int
    value: Fraction


@dataclass(frozen=True)
class GapLawReport:
    """Gap statistics over a symmetric window of primes around a center."""

    center: int
    window: int
    sample_size: int
    mean_gap: float
    max_gap: int
    predicted_gap: float
    gap_ratio_statistic: float


def _simple_sieve(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _segmented_primes(limit: int) -> np.ndarray:
    base = _simple_sieve(math.isqrt(limit))
    odd_base = base[base > 2]
    chunks = [np.array([2], dtype=np.int64)] if limit >= 2 else []
    low = 3
    while low <= limit:
        high = min(low + _SEGMENT_SIZE, limit + 1)
        # odd numbers in [low, high)
        count = (high - low + 1) // 2
        mask = np.ones(count, dtype=bool)
        for p in odd_base:
            p = int(p)
            start = max(p * p, ((low + p - 1) // p) * p)
            if start >= high:
                continue
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - low) // 2 :: p] = False
        chunks.append(low + 2 * np.flatnonzero(mask).astype(np.int64))
        low = high
    return np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)


def sieve_primes(limit: int) -> PrimeTable:
    """Exact prime table for 2 <= limit <= 1e8."""
    if not 2 <= limit <= SIEVE_LIMIT_MAX:
        raise DomainError("sieve_core.sieve_primes", f"limit must be in [2, {SIEVE_LIMIT_MAX}], got {limit}")
    if limit <= _SEGMENT_THRESHOLD:
        primes = _simple_sieve(limit)
    else:
        primes = _segmented_primes(limit)
    return PrimeTable(limit=limit, primes=primes)


def first_n_primes(n: int) -> np.ndarray:
    """The first n primes, via a sieve sized from the nth-prime upper bound."""
    if n < 1:
        raise DomainError("sieve_core.first_n_primes", f"need n >= 1, got {n}")
    if n < 6:
        bound = 15
    else:
        bound = int(n * (math.log(n) + math.log(math.log(n)))) + 10
    primes = sieve_primes(bound).primes
    while primes.size < n:  # bound is proven for n >= 6; belt and braces
        bound *= 2
        primes = sieve_primes(bound).primes
    return primes[:n]


def sift_survival_product(n: int) -> Fraction:
    """Product over the first n primes of (1 - 1/p), exact."""
    out = Fraction(1)
    for p in first_n_primes(n):
        out *= Fraction(int(p) - 1, int(p))
    return out


def removal_ratio(n: int) -> RatioTerm:
    """Asymptotic fraction of integers removed by the n-th sifting step.

    value = (1/P_n) * prod_{k<n} (1 - 1/P_k), exact rational.  The
    denominators outgrow 64-bit words around n = 40, hence arbitrary
    precision; n is capped at 1e4 to keep the exact arithmetic bounded.
    """
    if not 1 <= n <= RATIO_INDEX_MAX:
        raise DomainError("sieve_core.removal_ratio", f"index must be in [1, {RATIO_INDEX_MAX}], got {n}")
    primes = first_n_primes(n)
    value = Fraction(1, int(primes[-1]))
    for p in primes[:-1]:
        value *= Fraction(int(p) - 1, int(p))
    return RatioTerm(n=n, prime=int(primes[-1]), value=value)


def ratio_partial_sum(n: int) -> Fraction:
    """Exact sum of the first n removal ratios.

    Telescopes: equals 1 - prod_{k<=n}(1 - 1/P_k) exactly, and therefore
    stays strictly below 1 for every finite n.
    """
    if not 1 <= n <= RATIO_INDEX_MAX:
        raise DomainError("sieve_core.ratio_partial_sum", f"index must be in [1, {RATIO_INDEX_MAX}], got {n}")
    total = Fraction(0)
    survival = Fraction(1)
    for p in first_n_primes(n):
        p = int(p)
        total += survival / p
        survival *= Fraction(p - 1, p)
    return total


def empirical_sift(limit: int) -> list[SiftedClass]:
    """Classify {2..N} by smallest prime factor, exactly.

    Returns one class per prime <= N, ascending.  Classes partition
    {2..N}: 1 + sum(members_count) == N with integer equality.
    """
    if not 2 <= limit <= SIFT_LIMIT_MAX:
        raise DomainError("sieve_core.empirical_sift", f"limit must be in [2, {SIFT_LIMIT_MAX}], got {limit}")
    unclaimed = np.ones(limit + 1, dtype=bool)
    unclaimed[:2] = False
    table = sieve_primes(limit)
    classes: list[SiftedClass] = []
    root = math.isqrt(limit)
    for p in table.primes:
        p = int(p)
        if p > root:
            break
        members = unclaimed[p::p]  # strided view over p, 2p, 3p, ...
        hits = np.flatnonzero(members)
        classes.append(SiftedClass(p=p, members_count=int(hits.size), largest_member=p * (int(hits[-1]) + 1)))
        members[hits] = False
    # Every composite is claimed by a prime <= sqrt(N); survivors are the
    # primes above sqrt(N), each the sole member of its own class.
    for p in table.primes[np.searchsorted(table.primes, root, side="right") :]:
        classes.append(SiftedClass(p=int(p), members_count=1, largest_member=int(p)))
    return classes


def pi_approx(n: int | float) -> float:
    """First-order prime-count approximation N / ln N."""
    if n < 2:
        raise DomainError("sieve_core.pi_approx", f"need N >= 2, got {n}")
    return n / math.log(n)


def gap_stats(center: int, window: int, table: PrimeTable | None = None) -> GapLawReport:
    """Consecutive-gap statistics over primes in [center-window, center+window].

    mean_gap tracks ln(center); gap_ratio_statistic is the mean of
    (gap/p) * pi(p) over left endpoints p, which tends to 1 when gaps
    track ln p.  pi(p) is the exact sieve count, not an approximation.
    """
    lo, hi = center - window, center + window
    if lo < 2:
        raise DomainError("sieve_core.gap_stats", f"window floor {lo} must be >= 2")
    if table is None:
        table = sieve_primes(hi)
    elif table.limit < hi:
        raise DomainError("sieve_core.gap_stats", f"table limit {table.limit} below window top {hi}")
    primes = table.primes
    start = int(np.searchsorted(primes, lo, side="left"))
    stop = int(np.searchsorted(primes, hi, side="right"))
    in_window = primes[start:stop]
    if in_window.size < 2:
        raise InsufficientSampleError("sieve_core.gap_stats", f"window [{lo}, {hi}] holds fewer than 2 primes")
    gaps = np.diff(in_window)
    left = in_window[:-1].astype(np.float64)
    pi_left = np.arange(start + 1, stop, dtype=np.float64)  # exact pi(p) for each left endpoint
    statistic = float(np.mean(gaps / left * pi_left))
    return GapLawReport(
        center=center,
        window=window,
        sample_size=int(gaps.size),
        mean_gap=float(np.mean(gaps)),
        max_gap=int(gaps.max()),
        predicted_gap=math.log(center),
        gap_ratio_statistic=statistic,
    )


def ratio_table_rows(count: int, empirical_limit: int | None = 10**6) -> list[dict[str, object]]:
    """Rows for the removal-ratio table: exact rationals beside measured densities."""
    classes = empirical_sift(empirical_limit) if empirical_limit else None
    rows: list[dict[str, object]] = []
    survival = Fraction(1)
    for i, p in enumerate(first_n_primes(count), start=1):
        p = int(p)
        value = survival / p
        survival *= Fraction(p - 1, p)
        row: dict[str, object] = {
            "n": i,
            "prime": p,
            "ratio_num": value.numerator,
            "ratio_den": value.denominator,
            "ratio_float": float(value),
        }
        if classes is not None:
            empirical = classes[i - 1].members_count / empirical_limit
            row["empirical_ratio"] = empirical
            row["abs_err"] = abs(empirical - float(value))
        else:
            row["empirical_ratio"] = ""
            row["abs_err"] = ""
        rows.append(row)
    return rows

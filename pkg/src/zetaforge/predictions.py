"""Predicted ordinates for critical-line zeros from prime data, the prime
gap laws feeding those predictions, and diagnostics comparing predictions
with scanned ground truth.

The prediction formulas claim validity only in the large-number limit,
so the comparison emits measured deviations without asserting smallness;
what is asserted (and tested) is internal consistency: the pair form and
the gap form agree once gaps are small relative to the prime, and every
form is exactly linear in the mode number k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numerics import TWO_PI
from .sieve import GapLawReport, PrimeTable, gap_stats
from .zeros import ZeroRecord

DEFAULT_K = 2
MIN_GAP_SAMPLE = 30


@dataclass(frozen=True)
class PredictionRow:
    """One predicted ordinate with deviations against the scanned zeros.

    gamma_by_index matches prediction n to the n-th zero (the ordering
    claim); gamma_nearest matches to whichever zero is closest.  Either
    match is absent when the zero list does not cover it.
    """

    n: int
    k_mode: int
    predicted_y: float
    gamma_by_index: float | None
    rel_dev_index: float | None
    gamma_nearest: float | None
    rel_dev_nearest: float | None


@dataclass(frozen=True)
class LocationDiagnostic:
    """How far gamma/2pi sits from the nearest integer (no claim attached)."""

    gamma: float
    ratio: float
    nearest_int: int
    distance: float


def predicted_y_prime_pair(p: int, q: int, k: int = DEFAULT_K) -> float:
    """k pi / ln(q/p) for consecutive primes p < q."""
    if q <= p:
        raise DomainError("prediction_eval.predicted_y_prime_pair", f"need q > p, got p={p} q={q}")
    if p < 2 or k < 1:
        raise DomainError("prediction_eval.predicted_y_prime_pair", f"need p >= 2 and k >= 1, got p={p} k={k}")
    return k * (math.pi / math.log(q / p))


def predicted_y_gap_form(p: int, gap: int, k: int = DEFAULT_K) -> float:
    """k pi p / gap, the small-gap limit of the pair form."""
    if gap < 1:
        raise DomainError("prediction_eval.predicted_y_gap_form", f"need gap >= 1, got {gap}")
    if p < 2 or k < 1:
        raise DomainError("prediction_eval.predicted_y_gap_form", f"need p >= 2 and k >= 1, got p={p} k={k}")
    return k * (math.pi * p / gap)


def predicted_y_asymptotic(n: int, k: int = DEFAULT_K) -> float:
    """k pi n / ln n, the all-integers form of the prediction."""
    if n < 2:
        raise DomainError("prediction_eval.predicted_y_asymptotic", f"need n >= 2, got {n}")
    if k < 1:
        raise DomainError("prediction_eval.predicted_y_asymptotic", f"need k >= 1, got {k}")
    return k * (math.pi * n / math.log(n))


def compare_to_actual(ns: range | list[int], k: int, zeros: list[ZeroRecord]) -> list[PredictionRow]:
    """Deviation table of predicted ordinates against scanned zeros.

    Absent matches are data (empty cells), not errors: the table stays
    complete and deterministic whatever the zero coverage.
    """
    gammas = np.array([record.gamma for record in zeros], dtype=np.float64)
    rows: list[PredictionRow] = []
    for n in sorted(set(int(v) for v in ns)):
        predicted = predicted_y_asymptotic(n, k)
        by_index = float(gammas[n - 1]) if 1 <= n <= gammas.size else None
        nearest = None
        if gammas.size:
            pos = int(np.searchsorted(gammas, predicted))
            candidates = [i for i in (pos - 1, pos) if 0 <= i < gammas.size]
            nearest = float(min((gammas[i] for i in candidates), key=lambda g: abs(predicted - g)))
        rows.append(
            PredictionRow(
                n=n,
                k_mode=k,
                predicted_y=predicted,
                gamma_by_index=by_index,
                rel_dev_index=abs(predicted - by_index) / by_index if by_index is not None else None,
                gamma_nearest=nearest,
                rel_dev_nearest=abs(predicted - nearest) / nearest if nearest is not None else None,
            )
        )
    return rows


def gap_law_report(center: int, window: int, table: PrimeTable | None = None) -> GapLawReport:
    """Gap-law statistics with the minimum-sample guard applied."""
    report = gap_stats(center, window, table=table)
    if report.sample_size < MIN_GAP_SAMPLE:
        raise DomainError(
            "prediction_eval.gap_law_report",
            f"window around {center} holds {report.sample_size} gaps; need >= {MIN_GAP_SAMPLE}",
        )
    return report


def prime_location_condition(gamma: float) -> LocationDiagnostic:
    """Distance of gamma/2pi from the nearest integer, as a raw diagnostic."""
    if gamma <= 0:
        raise DomainError("prediction_eval.prime_location_condition", f"need gamma > 0, got {gamma}")
    ratio = gamma / TWO_PI
    nearest = round(ratio)
    return LocationDiagnostic(gamma=gamma, ratio=ratio, nearest_int=int(nearest), distance=abs(ratio - nearest))

"""Deterministic chunked summation kernels for Dirichlet-type series.

Index ranges are cut into fixed-size chunks; each chunk is reduced with
numpy's pairwise summation and the chunk subtotals are combined with
math.fsum (exactly rounded compensated summation).  Chunk boundaries
depend only on the index range, never on thread count or caller, so
results are bit-identical across --jobs settings.
"""

from __future__ import annotations

import math

import numpy as np

CHUNK = 1 << 16


def power_sum(s: complex, start: int, stop: int) -> complex:
    """Sum of n**(-s) for n in [start, stop], deterministic order."""
    if stop < start:
        return 0.0 + 0.0j
    s = complex(s)
    re_parts: list[float] = []
    im_parts: list[float] = []
    for lo in range(start, stop + 1, CHUNK):
        hi = min(lo + CHUNK, stop + 1)
        n = np.arange(lo, hi, dtype=np.float64)
        chunk = np.exp(-s * np.log(n)).sum()
        re_parts.append(chunk.real)
        im_parts.append(chunk.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def block_coefficient_sum(m: int, s: complex, blocks: int) -> complex:
    """Sum of c_n * n**(-s) for n in [1, m*blocks], where c_n = 1 except
    c_n = 1 - m on multiples of m (each length-m block sums its first
    m-1 terms positively and weights the block end by -(m-1))."""
    s = complex(s)
    stop = m * blocks
    re_parts: list[float] = []
    im_parts: list[float] = []
    for lo in range(1, stop + 1, CHUNK):
        hi = min(lo + CHUNK, stop + 1)
        n = np.arange(lo, hi, dtype=np.int64)
        coeff = np.where(n % m == 0, 1.0 - m, 1.0)
        chunk = (coeff * np.exp(-s * np.log(n.astype(np.float64)))).sum()
        re_parts.append(chunk.real)
        im_parts.append(chunk.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def alternating_sum(s: complex, terms: int) -> complex:
    """Sum of (-1)**(n+1) * n**(-s) for n in [1, terms]."""
    s = complex(s)
    re_parts: list[float] = []
    im_parts: list[float] = []
    for lo in range(1, terms + 1, CHUNK):
        hi = min(lo + CHUNK, terms + 1)
        n = np.arange(lo, hi, dtype=np.int64)
        coeff = np.where(n % 2 == 0, -1.0, 1.0)
        chunk = (coeff * np.exp(-s * np.log(n.astype(np.float64)))).sum()
        re_parts.append(chunk.real)
        im_parts.append(chunk.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))

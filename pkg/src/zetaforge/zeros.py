"""Critical-line zero location by Hardy-Z sign changes.

The rotated value e^(i theta(y)) zeta(1/2 + iy) is real up to evaluation
noise, so zeros on the line are bracketed by sign changes on a grid and
refined by bisection.  Sign changes cannot hallucinate zeros; missed
close pairs are caught by the counting-formula cross-check, which
triggers step halving.  Records cache to a line-delimited file that is
re-validated by residual checks on load.
"""

from __future__ import annotations

import cmath
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .errors import CacheError, CompletenessError, DomainError, SelfCheckError
from .etazeta import ETA_IM_CEILING, zeta_from_eta
from .numerics import TWO_PI, complex_gamma, rs_theta

METHOD_SIGN_CHANGE = "sign-change-bisection"
CACHE_VERSION = 1
CACHE_ENV_VAR = "ZETAFORGE_CACHE"

_GRID_TASK = 512  # grid points per parallel task; fixed so results never depend on jobs
_MAX_STEP_HALVINGS = 3
_SELF_CHECK_HARD = 1e-5


@dataclass(frozen=True)
class ZeroRecord:
    """One located zero: 1-based index, ordinate, and residual |zeta(1/2+i gamma)|."""

    k: int
    gamma: float
    residual: float
    method: str = METHOD_SIGN_CHANGE


@dataclass(frozen=True)
class ScanConfig:
    """Scan window and refinement budget for the sign-change search."""

    t_min: float
    t_max: float
    step: float = 0.01
    tol: float = 1e-8
    refine_iters: int = 64

    def __post_init__(self) -> None:
        if self.t_min < 2:
            raise DomainError("zero_finder.ScanConfig", f"t_min must be >= 2, got {self.t_min}")
        if self.t_max <= self.t_min:
            raise DomainError("zero_finder.ScanConfig", f"need t_max > t_min, got {self.t_max}")
        if self.t_max > ETA_IM_CEILING:
            raise DomainError(
                "zero_finder.ScanConfig",
                f"t_max {self.t_max} exceeds the evaluator ceiling {ETA_IM_CEILING}",
            )
        if not 0 < self.step <= 0.05:
            raise DomainError("zero_finder.ScanConfig", f"step must be in (0, 0.05], got {self.step}")
        if self.tol < 1e-10:
            raise DomainError("zero_finder.ScanConfig", f"residual tolerance floor is 1e-10, got {self.tol}")
        if self.refine_iters < 8:
            raise DomainError("zero_finder.ScanConfig", f"refine_iters must be >= 8, got {self.refine_iters}")


_PHASE_SEAM = 6.0
_HALF_LOG_PI = 0.5 * math.log(math.pi)


def _phase(y: float) -> float:
    # The asymptotic series is the workhorse, but its remainder at the
    # bottom of the domain (~1e-3 at y=2) would break the self-check, so
    # small ordinates take the exact route arg Gamma(1/4+iy/2) - y ln(pi)/2.
    # No branch unwrapping needed: that argument stays inside (-pi, 0)
    # for y < 6, and at the seam the two routes agree to ~5e-8.
    if y >= _PHASE_SEAM:
        return rs_theta(y)
    return cmath.log(complex_gamma(complex(0.25, 0.5 * y))).imag - y * _HALF_LOG_PI


def hardy_z(y: float, zeta_tol: float = 1e-10) -> float:
    """Real rotation of zeta on the critical line; sign changes mark zeros.

    Self-check: the rotated imaginary part stays below 1e-6 across the
    domain (phase error plus evaluator error); a value above 1e-5 means
    an inconsistency between the phase and zeta evaluations.
    """
    if not 2.0 <= y <= ETA_IM_CEILING:
        raise DomainError("zero_finder.hardy_z", f"domain is 2 <= y <= {ETA_IM_CEILING}, got {y}")
    rotated = cmath.exp(1j * _phase(y)) * zeta_from_eta(complex(0.5, y), zeta_tol).value
    if abs(rotated.imag) > _SELF_CHECK_HARD:
        raise SelfCheckError(
            "zero_finder.hardy_z",
            f"rotated imaginary part {rotated.imag:.3e} exceeds {_SELF_CHECK_HARD} at y={y}",
        )
    return rotated.real


def zero_count_estimate(t: float) -> float:
    """Main-term count of zeros with ordinate in (0, T]; O(log T) error."""
    if t < 2:
        raise DomainError("zero_finder.zero_count_estimate", f"need T >= 2, got {t}")
    u = t / TWO_PI
    return u * math.log(u) - u + 7.0 / 8.0


def _grid(config: ScanConfig) -> list[float]:
    n_steps = int(math.floor((config.t_max - config.t_min) / config.step + 1e-9))
    points = [config.t_min + i * config.step for i in range(n_steps + 1)]
    if points[-1] < config.t_max - 1e-12:
        points.append(config.t_max)
    return points

def _z_values(points: list[float], jobs: int) -> list[float]:
    if jobs <= 1:
        return [hardy_z(y) for y in points]
    tasks = [points[i : i + _GRID_TASK] for i in range(0, len(points), _GRID_TASK)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        chunks = list(pool.map(lambda block: [hardy_z(y) for y in block], tasks))
    return [z for chunk in chunks for z in chunk]


def _bisect(lo: float, hi: float, z_lo: float, iters: int) -> float:
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # interval at float resolution
            break
        z_mid = hardy_z(mid)
        if z_mid == 0.0:
            return mid
        if (z_lo < 0) != (z_mid < 0):
            hi = mid
        else:
            lo, z_lo = mid, z_mid
    return 0.5 * (lo + hi)


def scan_zeros(config: ScanConfig, jobs: int = 1) -> list[ZeroRecord]:
    """All critical-line zeros in the window, residual-verified, count-checked.

    The found count must land within 1 of the counting-formula estimate
    for the window; on disagreement the scan retries with a halved step
    before failing, so a too-coarse grid degrades loudly, never silently.
    """
    step = config.step
    expected = zero_count_estimate(config.t_max) - zero_count_estimate(config.t_min)
    for _ in range(_MAX_STEP_HALVINGS + 1):
        attempt = ScanConfig(config.t_min, config.t_max, step, config.tol, config.refine_iters)
        records = _scan_once(attempt, jobs)
        if abs(len(records) - round(expected)) <= 1:
            return records
        step = step / 2.0
    raise CompletenessError(
        "zero_finder.scan_zeros",
        f"found {len(records)} zeros in ({config.t_min}, {config.t_max}] but the "
        f"counting formula expects {expected:.2f}; step {config.step} too coarse",
    )


def _scan_once(config: ScanConfig, jobs: int) -> list[ZeroRecord]:
    points = _grid(config)
    values = _z_values(points, jobs)
    eval_tol = max(1e-12, config.tol / 100.0)
    records: list[ZeroRecord] = []
    for i in range(len(points) - 1):
        z_lo, z_hi = values[i], values[i + 1]
        if z_lo == 0.0:
            gamma = points[i]
        elif (z_lo < 0) != (z_hi < 0):
            gamma = _bisect(points[i], points[i + 1], z_lo, config.refine_iters)
        else:
            continue
        residual = abs(zeta_from_eta(complex(0.5, gamma), eval_tol).value)
        if residual <= config.tol:
            records.append(ZeroRecord(k=len(records) + 1, gamma=gamma, residual=residual))
    return records


def cache_path_default(explicit: str | os.PathLike[str] | None = None) -> Path | None:
    """Resolve a cache path: explicit argument, else the environment default."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else None


def _record_line(record: ZeroRecord, tol: float) -> str:
    payload = {
        "k": record.k,
        "gamma": record.gamma,
        "residual": record.residual,
        "tol": tol,
        "method": record.method,
        "version": CACHE_VERSION,
    }
    return json.dumps(payload, separators=(",", ":"))


def write_zero_cache(records: list[ZeroRecord], path: str | os.PathLike[str], tol: float) -> int:
    """Append new records to the cache; existing entries are never rewritten.

    Only records with ordinates above the last cached one are appended,
    and their indices must continue the cached sequence contiguously.
    """
    path = Path(path)
    existing = load_zero_cache(path, revalidate=False) if path.exists() else []
    tail = [r for r in records if not existing or r.gamma > existing[-1].gamma]
    start_k = len(existing) + 1
    renumbered = [ZeroRecord(k=start_k + i, gamma=r.gamma, residual=r.residual, method=r.method) for i, r in enumerate(tail)]
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "a", encoding="utf-8", newline="\n") as fh:
        for record in renumbered:
            fh.write(_record_line(record, tol) + "\n")
    return len(renumbered)


def load_zero_cache(path: str | os.PathLike[str], revalidate: bool = True) -> list[ZeroRecord]:
    """Read cached zeros; optionally re-verify every residual before trusting them."""
    path = Path(path)
    records: list[ZeroRecord] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CacheError("zero_finder.load_zero_cache", f"{path}:{line_no}: bad record: {exc}") from exc
            if payload.get("version") != CACHE_VERSION or payload.get("method") != METHOD_SIGN_CHANGE:
                raise CacheError("zero_finder.load_zero_cache", f"{path}:{line_no}: unsupported record {payload!r}")
            record = ZeroRecord(k=int(payload["k"]), gamma=float(payload["gamma"]), residual=float(payload["residual"]))
            tol = float(payload["tol"])
            if revalidate:
                fresh = abs(zeta_from_eta(complex(0.5, record.gamma), max(1e-12, tol / 100.0)).value)
                if fresh > 2.0 * tol:
                    raise CacheError(
                        "zero_finder.load_zero_cache",
                        f"{path}:{line_no}: residual re-check {fresh:.3e} exceeds 2x cached tol {tol}",
                    )
            records.append(record)
    for i, record in enumerate(records, start=1):
        if record.k != i or (i > 1 and record.gamma <= records[i - 2].gamma):
            raise CacheError("zero_finder.load_zero_cache", f"{path}: records not contiguous/ascending at k={record.k}")
    return records

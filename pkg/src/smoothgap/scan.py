"""Desk-scale empirical scans: segmented sieving, smooth-gap pair counts,
consecutive-pair counts, and prime tuple-translate counts with
Hardy-Littlewood predictions."""

from __future__ import annotations

import bisect
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from ._sieve import SCAN_LIMIT, base_prime_flags, prime_flags, prime_flags_range
from .constants import hl_prediction
from .errors import CapacityError
from .smoothness import is_smooth, smooth_numbers_up_to
from .tuples import IntegerTuple, diameter, is_admissible

MAX_WITNESSES = 100

MODE_PAIRS = "pairs"
MODE_CONSECUTIVE = "consecutive-pairs"
MODE_TRANSLATES = "tuple-translates"
_PAIR_MODES = (MODE_PAIRS, MODE_CONSECUTIVE)


@dataclass(frozen=True)
class ScanRequest:
    x_max: int
    mode: str
    y: int | None = None  # smoothness bound, pair modes only
    tuple: IntegerTuple | None = None  # translate mode only
    checkpoints: tuple[int, ...] = ()
    include_gap_one: bool = True
    min_prime_count: int | None = None  # optional at-least-m census, translate mode

    def __post_init__(self):
        if self.x_max < 1:
            raise ValueError(f"x_max must be positive, got {self.x_max}")
        if self.x_max > SCAN_LIMIT:
            raise CapacityError(
                f"x_max {self.x_max} exceeds the desk-scale guard {SCAN_LIMIT}"
            )
        if self.mode in _PAIR_MODES:
            if self.y is None or self.tuple is not None:
                raise ValueError(f"mode {self.mode!r} takes y and no tuple")
            if self.y < 2:
                raise ValueError(f"y must be at least 2, got {self.y}")
        elif self.mode == MODE_TRANSLATES:
            if self.tuple is None or self.y is not None:
                raise ValueError(f"mode {self.mode!r} takes a tuple and no y")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        cps = self.checkpoints or (self.x_max,)
        if any(a >= b for a, b in zip(cps, cps[1:])):
            raise ValueError(f"checkpoints must be ascending: {cps}")
        if cps[-1] != self.x_max:
            raise ValueError("last checkpoint must equal x_max")
        object.__setattr__(self, "checkpoints", tuple(int(c) for c in cps))


@dataclass(frozen=True)
class CheckpointRecord:
    checkpoint: int
    count: int
    hl_ratio_prediction: float | None = None
    hl_integral_prediction: float | None = None
    ratio: float | None = None  # count / integral prediction
    at_least_m_count: int | None = None


@dataclass(frozen=True)
class ScanReport:
    request: ScanRequest
    records: tuple[CheckpointRecord, ...]
    witnesses: tuple[tuple[int, ...], ...] = field(default_factory=tuple)


def segmented_sieve(lo: int, hi: int, segment_size: int | None = None) -> Iterator[int]:
    """Stream the primes in [lo, hi) in order."""
    if lo < 0 or hi < lo:
        raise ValueError(f"bad range [{lo}, {hi})")
    if hi > SCAN_LIMIT:
        raise CapacityError(f"hi {hi} exceeds the desk-scale guard {SCAN_LIMIT}")
    if hi <= 2:
        return
    root = math.isqrt(hi - 1) + 1
    base = base_prime_flags(root)
    if segment_size is None:
        segment_size = max(root, 1 << 16)
    if segment_size > 10**9:
        raise CapacityError(f"segment_size {segment_size} is oversized")
    for seg_lo in range(lo, hi, segment_size):
        seg_hi = min(seg_lo + segment_size, hi)
        flags = prime_flags_range(seg_lo, seg_hi, base)
        for idx in np.flatnonzero(flags):
            yield seg_lo + int(idx)


def _gap_values(req: ScanRequest, limit: int) -> list[int]:
    start = 1 if req.include_gap_one else 2
    return [s for s in smooth_numbers_up_to(req.y, limit) if s >= start]


def _counts_from_positions(positions: np.ndarray, checkpoints, strict: bool):
    side = "left" if strict else "right"
    return np.searchsorted(positions, np.asarray(checkpoints), side=side)


def count_smooth_gap_pairs(
    req: ScanRequest,
    segment_size: int | None = None,
    threads: int = 1,
) -> ScanReport:
    """Ordered pairs of primes p > q <= checkpoint with p - q y-smooth.

    Iterates smooth offsets against a prime bitset rather than all prime
    pairs, so the work is O(pi(x) * |smooth gaps|).
    """
    if req.mode != MODE_PAIRS:
        raise ValueError(f"expected mode {MODE_PAIRS!r}")
    flags = prime_flags(req.x_max, segment_size)
    gaps = _gap_values(req, req.x_max - 2) if req.x_max > 2 else []
    checkpoints = req.checkpoints
    totals = np.zeros(len(checkpoints), dtype=np.int64)

    def count_gap(s: int) -> np.ndarray:
        # p runs over primes with p - s also prime
        hits = np.flatnonzero(flags[s:] & flags[: len(flags) - s]) + s
        return _counts_from_positions(hits, checkpoints, strict=False)

    for partial in _map_ordered(count_gap, gaps, threads):
        totals += partial
    witnesses = _pair_witnesses(flags, gaps)
    records = tuple(
        CheckpointRecord(c, int(n)) for c, n in zip(checkpoints, totals)
    )
    return ScanReport(req, records, witnesses)


def count_consecutive_smooth_gap_pairs(
    req: ScanRequest,
    segment_size: int | None = None,
    threads: int = 1,
) -> ScanReport:
    """Adjacent prime pairs (q, next prime) <= checkpoint with y-smooth gap."""
    if req.mode != MODE_CONSECUTIVE:
        raise ValueError(f"expected mode {MODE_CONSECUTIVE!r}")
    flags = prime_flags(req.x_max, segment_size)
    primes = np.flatnonzero(flags)
    gaps = np.diff(primes)
    smooth_gap = {int(g): bool(is_smooth(int(g), req.y)) for g in np.unique(gaps)}
    if not req.include_gap_one:
        smooth_gap[1] = False
    mask = np.array([smooth_gap[int(g)] for g in gaps], dtype=bool)
    upper = primes[1:][mask]  # pair counted once the larger member is in range
    records = tuple(
        CheckpointRecord(int(c), int(n))
        for c, n in zip(
            req.checkpoints, _counts_from_positions(upper, req.checkpoints, strict=False)
        )
    )
    witnesses = tuple(
        (int(q), int(p))
        for q, p in zip(primes[:-1][mask][:MAX_WITNESSES], upper[:MAX_WITNESSES])
    )
    return ScanReport(req, records, witnesses)


def count_tuple_translates(
    req: ScanRequest,
    segment_size: int | None = None,
    threads: int = 1,
) -> ScanReport:
    """Integers n < checkpoint with n + h prime for every h in the tuple,
    with Hardy-Littlewood predictions in ratio and integral form."""
    if req.mode != MODE_TRANSLATES:
        raise ValueError(f"expected mode {MODE_TRANSLATES!r}")
    H = req.tuple.canonical()
    x = req.x_max
    flags = prime_flags(x - 1 + diameter(H), segment_size)
    ok = np.ones(max(x - 1, 0), dtype=bool)  # index i covers n = i + 1
    for h in H:
        ok &= flags[1 + h : x + h]
    hits = np.flatnonzero(ok) + 1
    counts = _counts_from_positions(hits, req.checkpoints, strict=True)
    at_least = None
    if req.min_prime_count is not None:
        tallies = np.zeros(max(x - 1, 0), dtype=np.int16)
        for h in H:
            tallies += flags[1 + h : x + h]
        at_least_hits = np.flatnonzero(tallies >= req.min_prime_count) + 1
        at_least = _counts_from_positions(at_least_hits, req.checkpoints, strict=True)
    admissible = bool(is_admissible(H))
    records = []
    for i, c in enumerate(req.checkpoints):
        ratio_pred = integral_pred = ratio = None
        if c > 2:
            if admissible:
                ratio_pred = hl_prediction(H, float(c), "ratio-form")
                integral_pred = hl_prediction(H, float(c), "integral-form")
            else:
                ratio_pred = integral_pred = 0.0
            if integral_pred > 0:
                ratio = float(counts[i]) / integral_pred
        records.append(
            CheckpointRecord(
                int(c),
                int(counts[i]),
                ratio_pred,
                integral_pred,
                ratio,
                None if at_least is None else int(at_least[i]),
            )
        )
    witnesses = tuple((int(n),) for n in hits[:MAX_WITNESSES])
    return ScanReport(req, tuple(records), witnesses)


def run_scan(
    req: ScanRequest, segment_size: int | None = None, threads: int = 1
) -> ScanReport:
    if req.mode == MODE_PAIRS:
        return count_smooth_gap_pairs(req, segment_size, threads)
    if req.mode == MODE_CONSECUTIVE:
        return count_consecutive_smooth_gap_pairs(req, segment_size, threads)
    return count_tuple_translates(req, segment_size, threads)


def _map_ordered(fn, items, threads):
    if threads <= 1 or len(items) < 2:
        return [fn(s) for s in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _pair_witnesses(flags: np.ndarray, gaps: list[int]):
    """Earliest pairs (q, p) ordered by p then q ascending, capped."""
    out = []
    for p in np.flatnonzero(flags):
        p = int(p)
        hi = bisect.bisect_right(gaps, p - 2)
        for s in gaps[hi - 1 :: -1] if hi else ():  # descending gap: ascending q
            q = p - s
            if flags[q]:
                out.append((q, p))
                if len(out) == MAX_WITNESSES:
                    return tuple(out)
    return tuple(out)

"""Hardy-Littlewood singular series and the k_m / y_m table."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from ._sieve import prime_flags
from .primes import largest_prime_leq
from .tuples import IntegerTuple, diameter

DEFAULT_PRIME_CUTOFF = 10**6

# Lowest known tuple lengths guaranteeing m primes among n + H, plus the
# conditional m = 2 entry under Elliott-Halberstam.
_KM_UNCONDITIONAL = ((2, 50), (3, 35265), (4, 1624545), (5, 73807570), (6, 3340375663))
_KM_CONDITIONAL = ((2, 5),)


@dataclass(frozen=True)
class SingularSeriesEstimate:
    value: float
    k: int
    prime_cutoff: int
    tail_magnitude: float  # heuristic bound on |log| of the omitted tail product
    admissible: bool


@dataclass(frozen=True)
class KmEntry:
    m: int
    k_m: int
    y_m: int
    conditional: bool


def _coverage_counts(H: IntegerTuple, primes: np.ndarray) -> np.ndarray:
    """v_p for each prime; for p > diameter(H) the elements are distinct mod p."""
    k = len(H)
    d = diameter(H)
    v = np.full(primes.shape, k, dtype=np.int64)
    small = primes[primes <= d]
    for idx, p in enumerate(small):
        v[idx] = len({h % int(p) for h in H})
    return v


def _tail_magnitude(k: int, cutoff: int) -> float:
    # For p > cutoff each log-factor is ~ -(k^2 - k)/(2 p^2); summing over
    # primes via the density 1/log t gives the integral estimate below.
    # Heuristic only; the data model makes no rigor claim.
    return (k * k - k) / (2.0 * cutoff * math.log(cutoff))


def singular_series(H: IntegerTuple, prime_cutoff: int) -> SingularSeriesEstimate:
    """Partial Hardy-Littlewood product prod (1 - v_p/p) / (1 - 1/p)^k
    over primes p <= prime_cutoff, accumulated in log space.

    Exactly 0 (and admissible = False) when some v_p = p.
    """
    k = len(H)
    d = diameter(H)
    if prime_cutoff < k or prime_cutoff < d + 1:
        raise ValueError(
            f"prime_cutoff {prime_cutoff} must be >= k = {k} and >= diameter + 1 = {d + 1}"
        )
    primes = np.flatnonzero(prime_flags(prime_cutoff)).astype(np.float64)
    v = _coverage_counts(H, primes).astype(np.float64)
    tail = _tail_magnitude(k, prime_cutoff)
    if np.any(v == primes):
        return SingularSeriesEstimate(0.0, k, prime_cutoff, tail, False)
    log_terms = np.log1p(-v / primes) - k * np.log1p(-1.0 / primes)
    value = float(math.exp(float(np.sum(log_terms))))
    return SingularSeriesEstimate(value, k, prime_cutoff, tail, True)


@lru_cache(maxsize=128)
def _cached_series_value(elements: tuple[int, ...], prime_cutoff: int) -> float:
    return singular_series(IntegerTuple(elements), prime_cutoff).value


def hl_prediction(
    H: IntegerTuple,
    x: float,
    mode: str = "integral-form",
    prime_cutoff: int = DEFAULT_PRIME_CUTOFF,
) -> float:
    """Predicted count of n < x with n + H entirely prime.

    ratio-form is G * x / (log x)^k; integral-form is G * int_2^x dt/(log t)^k,
    asymptotically equivalent but far closer at desk scale.
    """
    if x <= 2:
        raise ValueError(f"x must exceed 2, got {x}")
    if mode not in ("ratio-form", "integral-form"):
        raise ValueError(f"unknown mode {mode!r}")
    k = len(H)
    cutoff = max(prime_cutoff, k, diameter(H) + 1)
    g = _cached_series_value(H.canonical().elements, cutoff)
    if g == 0.0:
        return 0.0
    if mode == "ratio-form":
        return g * x / math.log(x) ** k
    integral, _err = quad(lambda t: math.log(t) ** -k, 2.0, x, limit=200)
    return g * integral


def km_table() -> list[KmEntry]:
    """The tabulated k_m values with their derived prime bounds y_m."""
    entries = [
        KmEntry(m, k, largest_prime_leq(k), conditional=False)
        for m, k in _KM_UNCONDITIONAL
    ]
    entries.extend(
        KmEntry(m, k, largest_prime_leq(k), conditional=True)
        for m, k in _KM_CONDITIONAL
    )
    return entries

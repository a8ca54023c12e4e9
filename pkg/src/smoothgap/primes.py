"""Prime generation, primality testing, primorials, largest-prime-below queries."""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError

# is_prime is exact below this bound (fixed witness set); probabilistic above.
DETERMINISTIC_LIMIT = 1 << 64
DEFAULT_MR_ROUNDS = 40

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Sufficient witness set for all n < 2^64 (miller-rabin.appspot.com).
_WITNESSES_64 = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_DEFAULT_MEM_BUDGET = 4_000_000_000


def mem_budget() -> int:
    """Allocation budget in bytes, overridable via SMOOTHGAP_MEM_BUDGET."""
    raw = os.environ.get("SMOOTHGAP_MEM_BUDGET")
    if raw is None:
        return _DEFAULT_MEM_BUDGET
    return int(raw)


@dataclass(frozen=True)
class PrimeTable:
    """All primes in [2, limit], ascending. Immutable and shareable."""

    limit: int
    primes: tuple[int, ...]

    def __contains__(self, n: int) -> bool:
        if not 2 <= n <= self.limit:
            return False
        i = _bisect(self.primes, n)
        return i < len(self.primes) and self.primes[i] == n


def _bisect(seq, n):
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < n:
            lo = mid + 1
        else:
            hi = mid
    return lo


def sieve_primes(limit: int) -> PrimeTable:
    """Odd-only sieve of Eratosthenes up to `limit` inclusive."""
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    if limit // 2 + 1 > mem_budget():
        raise CapacityError(
            f"sieve to {limit} needs ~{limit // 2} bytes, over budget {mem_budget()}"
        )
    if limit < 2:
        return PrimeTable(limit, ())
    # flags[i] covers the odd number 2*i+1
    half = (limit + 1) // 2
    flags = bytearray([1]) * half
    flags[0] = 0  # 1 is not prime
    for i in range(1, min(half, (math.isqrt(limit) + 1) // 2 + 1)):
        if flags[i]:
            p = 2 * i + 1
            start = (p * p) // 2
            flags[start::p] = bytes(len(range(start, half, p)))
    primes = [2]
    primes.extend(2 * i + 1 for i in range(1, half) if flags[i])
    return PrimeTable(limit, tuple(primes))


@lru_cache(maxsize=64)
def _cached_table(limit: int) -> PrimeTable:
    return sieve_primes(limit)


def _mr_composite_witness(n: int, a: int, d: int, s: int) -> bool:
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Miller-Rabin primality test.

    Exact for n < 2^64; for larger n the answer is probabilistic with
    `rounds` pseudo-random bases (seeded by n, so calls are reproducible).
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < DETERMINISTIC_LIMIT:
        bases = _WITNESSES_64
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(rounds)]
    return not any(_mr_composite_witness(n, a, d, s) for a in bases)


def primorial(k: int) -> int:
    """Product of all primes <= k; 1 when no such prime exists."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return math.prod(_cached_table(k).primes) if k >= 2 else 1


def largest_prime_leq(k: int) -> int:
    """The maximal prime <= k. Requires k >= 2."""
    if k < 2:
        raise ValueError(f"no prime <= {k}")
    if k == 2:
        return 2
    n = k if k % 2 else k - 1
    while not is_prime(n):
        n -= 2
    return n

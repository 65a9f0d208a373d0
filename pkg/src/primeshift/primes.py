"""Prime generation, nth-prime lookup, and exact 64-bit primality testing.

Every other module sources its primes here.  ``nth_prime`` is 1-indexed
(p_1 = 2).  Sieving switches to a segmented strategy above
``SEGMENTED_THRESHOLD`` so working memory stays bounded by the segment
size instead of the limit; ``prime_flags`` sieves an arbitrary window
the same way.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .errors import BoundsError, DomainError, ResourceError

SIEVE_LIMIT_MAX = 2**40
SEGMENTED_THRESHOLD = 10**8
SEGMENT_SIZE = 2**20

# Largest value whose window can be sieved: the base sieve must reach
# sqrt of it, so this keeps the base table at or below 10^6.
WINDOW_VALUE_MAX = 10**12

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Deterministic Miller-Rabin witnesses covering all n < 2^64.
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit`` inclusive; immutable, safe to share."""

    limit: int
    primes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)


def sieve_flags(limit: int) -> bytearray:
    """0/1 primality flags for 0..limit (flags[n] == 1 iff n is prime)."""
    if limit < 0:
        raise BoundsError(f"flag sieve limit must be non-negative, got {limit}")
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00" * min(2, limit + 1)
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            step = len(range(p * p, limit + 1, p))
            flags[p * p :: p] = b"\x00" * step
    return flags


def _segment_flags(lo: int, hi: int, base_primes) -> bytearray:
    """Flags for the window lo..hi given base primes up to sqrt(hi)."""
    width = hi - lo + 1
    flags = bytearray([1]) * width
    for n in range(lo, min(hi, 1) + 1):
        flags[n - lo] = 0
    for p in base_primes:
        if p * p > hi:
            break
        start = max(p * p, p * ((max(lo, 2) + p - 1) // p))
        if start > hi:
            continue
        count = (hi - start) // p + 1
        flags[start - lo :: p] = b"\x00" * count
    return flags


_base_lock = threading.Lock()
_base_primes: PrimeTable | None = None


def _window_base(root: int) -> tuple[int, ...]:
    global _base_primes
    table = _base_primes
    if table is None or table.limit < root:
        with _base_lock:
            if _base_primes is None or _base_primes.limit < root:
                _base_primes = sieve(max(2 * root, 1000))
            table = _base_primes
    return table.primes


def prime_flags(lo: int, hi: int) -> bytearray:
    """Primality flags for the inclusive window lo..hi.

    Entries for n < 2 are 0, so negative windows are valid.  Requires
    hi <= WINDOW_VALUE_MAX (the base sieve must reach sqrt(hi)).
    """
    if lo > hi:
        raise DomainError(f"empty window: lo={lo} > hi={hi}")
    if hi > WINDOW_VALUE_MAX:
        raise ResourceError(f"window upper end {hi} exceeds {WINDOW_VALUE_MAX}")
    if hi < 2:
        return bytearray(hi - lo + 1)
    if lo < 2:
        return bytearray(2 - lo) + prime_flags(2, hi)
    return _segment_flags(lo, hi, _window_base(max(2, math.isqrt(hi))))


def sieve(limit: int, segment_size: int = SEGMENT_SIZE) -> PrimeTable:
    """Enumerate all primes in [2, limit].

    Plain byte sieve up to SEGMENTED_THRESHOLD, segmented above it.
    """
    if limit < 2 or limit > SIEVE_LIMIT_MAX:
        raise BoundsError(f"sieve limit must be in [2, 2^40], got {limit}")
    if limit <= SEGMENTED_THRESHOLD:
        flags = sieve_flags(limit)
        return PrimeTable(limit, tuple(i for i in range(2, limit + 1) if flags[i]))
    return _sieve_segmented(limit, segment_size)


def _sieve_segmented(limit: int, segment_size: int) -> PrimeTable:
    if segment_size < 2:
        raise BoundsError(f"segment size must be >= 2, got {segment_size}")
    root = math.isqrt(limit)
    base_flags = sieve_flags(root)
    base = [i for i in range(2, root + 1) if base_flags[i]]
    primes: list[int] = list(base)
    lo = root + 1
    while lo <= limit:
        hi = min(lo + segment_size - 1, limit)
        flags = _segment_flags(lo, hi, base)
        primes.extend(n for n in range(lo, hi + 1) if flags[n - lo])
        lo = hi + 1
    return PrimeTable(limit, tuple(primes))


# nth_prime keeps a shared table that grows on demand; growth is
# guarded by a lock, reads of a published table are safe without one.
_nth_lock = threading.Lock()
_nth_table: PrimeTable | None = None


def _nth_upper_bound(i: int) -> int:
    # p_i < i (ln i + ln ln i) for i >= 6; small cases hard-coded.
    if i < 6:
        return 13
    x = i * (math.log(i) + math.log(math.log(i)))
    return int(x) + 10


def nth_prime(i: int) -> int:
    """The i-th prime, 1-indexed (nth_prime(1) == 2)."""
    if i < 1:
        raise DomainError(f"prime index must be >= 1, got {i}")
    global _nth_table
    table = _nth_table
    if table is None or i > table.count:
        with _nth_lock:
            table = _nth_table
            if table is None or i > table.count:
                old_limit = table.limit if table is not None else 0
                table = sieve(max(_nth_upper_bound(i), 2 * old_limit, 1000))
                _nth_table = table
    return table.primes[i - 1]


def _is_prime_unchecked(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 41 * 41:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Exact primality for any 64-bit signed integer (n < 2 is composite).

    Deterministic Miller-Rabin with a witness set valid for all n < 2^64;
    larger inputs are rejected rather than answered probabilistically.
    """
    if n >= 2**64:
        raise DomainError(f"is_prime is exact only below 2^64, got {n}")
    return _is_prime_unchecked(n)

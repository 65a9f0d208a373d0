"""Independent reference implementations used as test oracles.

Nothing here may import from primeshift: these exist to check the
package against straight-line definitions.
"""

import math


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def trial_division_primes(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if trial_division_is_prime(n)]


def byte_sieve(limit: int) -> bytearray:
    """flags[n] == 1 iff n prime, for 0 <= n <= limit."""
    flags = bytearray([1]) * (limit + 1)
    flags[0] = 0
    if limit >= 1:
        flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return flags


def brute_rep_count(n: int, elements, flags: bytearray) -> int:
    """Double-loop representation count against a sieve table."""
    count = 0
    for a in elements:
        d = n - a
        if 2 <= d < len(flags) and flags[d]:
            count += 1
    return count


def residues_all_covered(elements, p: int) -> bool:
    return len({a % p for a in elements}) == p


def proxy_sequence(ell: int, primes) -> list[int]:
    """l_t = l_{t-1} - floor(l_{t-1} / p_t), seeded at ell."""
    seq = [ell]
    for p in primes:
        seq.append(seq[-1] - seq[-1] // p)
    return seq

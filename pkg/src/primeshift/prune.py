"""Greedy residue-class pruning down to an admissible survivor set.

At step t the survivors are bucketed modulo the t-th prime p_t and the
least-populated class is deleted (ties: the class with the largest
residue).  If some class mod p_t is already empty nothing needs to be
deleted, and the step records a removal count of zero with the smallest
empty residue.  Iteration stops at the first s where the survivor count
drops below p_{s+1}; from then on no prime can be fully covered, so the
survivors form an admissible set.

Each step also tracks the pessimistic survivor count
l_t = l_{t-1} - floor(l_{t-1} / p_t), seeded at the input size.  The
actual count always dominates it, which is what makes the exact product
lower bound of ``survivor_lower_bound`` valid for the real process.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .admissible import IntegerSet
from .primes import nth_prime


@dataclass(frozen=True)
class PruneStep:
    index: int
    prime: int
    removed_residue: int
    removed_count: int
    survivors_actual: int
    survivors_paper: int


@dataclass(frozen=True)
class PruneTrace:
    input_size: int
    steps: tuple[PruneStep, ...]
    s: int
    final_set: IntegerSet
    stop_prime: int

    @property
    def final_size(self) -> int:
        return self.final_set.size

    @property
    def last_prime(self) -> int | None:
        """p_s, the prime of the final step; None when no step ran."""
        return self.steps[-1].prime if self.steps else None


def greedy_prune(int_set: IntegerSet) -> PruneTrace:
    """Run the pruning loop and return the full step-by-step trace.

    Stopping uses the actual survivor count, never the pessimistic
    proxy, so the returned admissible set is as large as the greedy
    process allows.
    """
    arr = int_set.to_numpy()
    proxy = int_set.size
    steps: list[PruneStep] = []
    t = 0
    while True:
        p_next = nth_prime(t + 1)
        if arr.size < p_next:
            break
        t += 1
        p = p_next
        proxy -= proxy // p
        residues = arr % p
        counts = np.bincount(residues, minlength=p)
        empty = np.flatnonzero(counts == 0)
        if empty.size:
            removed_residue = int(empty[0])
            removed_count = 0
        else:
            smallest = counts.min()
            removed_residue = int(np.flatnonzero(counts == smallest)[-1])
            arr = arr[residues != removed_residue]
            removed_count = int(smallest)
        steps.append(
            PruneStep(t, p, removed_residue, removed_count, int(arr.size), proxy)
        )
    return PruneTrace(
        input_size=int_set.size,
        steps=tuple(steps),
        s=t,
        final_set=IntegerSet(tuple(int(a) for a in arr)),
        stop_prime=nth_prime(t + 1),
    )


def survivor_lower_bound(ell: int, s: int) -> Fraction:
    """Exact ell * prod_{i<=s} (1 - 1/p_i).

    Numerator and denominator are accumulated as raw integers and
    normalized once at the end; per-step Fraction reduction is far too
    slow when s runs into the thousands.
    """
    num = ell
    den = 1
    for i in range(1, s + 1):
        p = nth_prime(i)
        num *= p - 1
        den *= p
    return Fraction(num, den)

"""Admissibility checking with re-verifiable certificates.

A finite integer set is admissible when its elements miss at least one
residue class modulo every prime.  Only primes p <= len(set) can ever
be fully covered (a set of size ell occupies at most ell classes), so a
certificate enumerates exactly the primes p <= len(set); larger primes
are admissible for free and carry no witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError, ValidationError
from .primes import sieve

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

ADMISSIBLE = "admissible"
INADMISSIBLE = "inadmissible"


@dataclass(frozen=True)
class IntegerSet:
    """Strictly increasing, non-empty tuple of 64-bit signed integers."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.elements, tuple):
            object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValidationError("an IntegerSet needs at least one element")
        prev = None
        for a in self.elements:
            if not (INT64_MIN <= a <= INT64_MAX):
                raise ValidationError(f"element {a} outside the 64-bit range")
            if prev is not None and a <= prev:
                raise ValidationError(
                    f"elements must be strictly increasing; {a} follows {prev}"
                )
            prev = a

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "IntegerSet":
        """Sort arbitrary input; duplicates are an error, not a merge."""
        ordered = sorted(values)
        for x, y in zip(ordered, ordered[1:]):
            if x == y:
                raise ValidationError(f"duplicate value {x}")
        return cls(tuple(ordered))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def to_numpy(self) -> np.ndarray:
        return np.fromiter(self.elements, dtype=np.int64, count=len(self.elements))


@dataclass(frozen=True)
class AdmissibilityCertificate:
    """Verdict plus the evidence needed to re-check it directly.

    Admissible: ``missed_residues`` maps every prime p <= len(set) to the
    smallest residue in [0, p) hit by no element.  Inadmissible:
    ``covered_prime`` is the smallest prime whose classes are all hit,
    and the residue map is empty.
    """

    verdict: str
    missed_residues: dict[int, int] = field(default_factory=dict)
    covered_prime: int | None = None

    @property
    def admissible(self) -> bool:
        return self.verdict == ADMISSIBLE


def _primes_up_to_size(ell: int) -> tuple[int, ...]:
    if ell < 2:
        return ()
    return sieve(ell).primes


def check_admissible(int_set: IntegerSet) -> AdmissibilityCertificate:
    """Decide admissibility and produce a witness per examined prime.

    When several residues are missed mod p the smallest is reported, so
    certificates are deterministic.  Residues of negative elements are
    normalized into [0, p).
    """
    arr = int_set.to_numpy()
    missed: dict[int, int] = {}
    for p in _primes_up_to_size(int_set.size):
        counts = np.bincount(arr % p, minlength=p)
        empty = np.flatnonzero(counts == 0)
        if empty.size == 0:
            return AdmissibilityCertificate(INADMISSIBLE, {}, int(p))
        missed[int(p)] = int(empty[0])
    return AdmissibilityCertificate(ADMISSIBLE, missed, None)


def brute_force_admissible(int_set: IntegerSet, prime_bound: int) -> bool:
    """Admissibility by the covering definition, used as a test oracle.

    For each prime p <= prime_bound, checks literally whether p divides
    prod(n + a) for every n in [0, p).  ``prime_bound`` must be at least
    len(set), otherwise the oracle could miss a covered prime.
    """
    if prime_bound < int_set.size:
        raise DomainError(
            f"prime_bound {prime_bound} below set size {int_set.size}: oracle incomplete"
        )
    elements = int_set.elements
    for p in sieve(max(prime_bound, 2)).primes:
        if p > prime_bound:
            break
        if all(any((n + a) % p == 0 for a in elements) for n in range(p)):
            return False
    return True

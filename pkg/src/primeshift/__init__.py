"""Greedy admissible-subset extraction and shifted-prime representation tools.

The pipeline: prune an arbitrary set of distinct integers down to an
admissible subset, convert its size into a guaranteed representation
count, and verify every numeric constant that conversion relies on.
"""

from .admissible import (
    ADMISSIBLE,
    INADMISSIBLE,
    AdmissibilityCertificate,
    IntegerSet,
    brute_force_admissible,
    check_admissible,
)
from .bounds import (
    GuaranteeReport,
    LemmaReport,
    corollary_bound,
    final_inequality_check,
    guarantee,
    maynard_m,
    maynard_m_alt,
    prime_reciprocal_product,
    theorem1_bound,
    verify_mertens,
    verify_proof_constants,
)
from .errors import (
    BoundsError,
    DomainError,
    ParseError,
    PrimeShiftError,
    ResourceError,
    ValidationError,
)
from .primes import PrimeTable, is_prime, nth_prime, prime_flags, sieve
from .prune import PruneStep, PruneTrace, greedy_prune, survivor_lower_bound
from .representation import (
    RepresentationProfile,
    gen_sequence,
    rep_count,
    rep_search,
    romanoff_counts,
    romanoff_density,
)

__version__ = "0.1.0"

__all__ = [
    "ADMISSIBLE",
    "INADMISSIBLE",
    "AdmissibilityCertificate",
    "BoundsError",
    "DomainError",
    "GuaranteeReport",
    "IntegerSet",
    "LemmaReport",
    "ParseError",
    "PrimeShiftError",
    "PrimeTable",
    "PruneStep",
    "PruneTrace",
    "RepresentationProfile",
    "ResourceError",
    "ValidationError",
    "brute_force_admissible",
    "check_admissible",
    "corollary_bound",
    "final_inequality_check",
    "gen_sequence",
    "greedy_prune",
    "guarantee",
    "is_prime",
    "maynard_m",
    "maynard_m_alt",
    "nth_prime",
    "prime_flags",
    "prime_reciprocal_product",
    "rep_count",
    "rep_search",
    "romanoff_counts",
    "romanoff_density",
    "sieve",
    "survivor_lower_bound",
    "theorem1_bound",
    "verify_mertens",
    "verify_proof_constants",
]

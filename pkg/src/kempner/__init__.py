"""Digit-restricted integers and the arithmetic progressions they contain.

For a base b and a permitted digit set S containing 0, the Kempner set
K(S, b) holds every non-negative integer whose base-b digits lie in S.
This package computes the exact maximal progression length
ell(b) = (b - 1) * beta(b), constructs a progression achieving it,
certifies per-difference upper bounds, cross-validates everything with
brute-force window searches, and explores how beta(n)/n behaves on average.
"""

from ._kernels import active_backend
from .arith import BetaResult, beta, bulk_beta, ell, factorize, is_prime_power, radical
from .bounds import (
    CertificateRow,
    DifferenceCertificate,
    difference_certificate,
    normalize_difference,
    prime_power_bound,
    trivial_bound,
)
from .construct import ConstructionReport, explain_construction, max_progression
from .digits import (
    DigitSet,
    Progression,
    Violation,
    count_below_power,
    digit_at,
    digits_of,
    from_digits,
    is_member,
    to_base_str,
    verify_progression,
)
from .errors import CapacityError, DomainError
from .search import (
    SearchResult,
    SearchSpec,
    coverage_policy,
    longest_ap_base,
    longest_ap_in_window,
    longest_run_for_difference,
)

__version__ = "0.1.0"

__all__ = [
    "BetaResult",
    "CapacityError",
    "CertificateRow",
    "ConstructionReport",
    "DifferenceCertificate",
    "DigitSet",
    "DomainError",
    "Progression",
    "SearchResult",
    "SearchSpec",
    "Violation",
    "active_backend",
    "beta",
    "bulk_beta",
    "count_below_power",
    "coverage_policy",
    "difference_certificate",
    "digit_at",
    "digits_of",
    "ell",
    "explain_construction",
    "factorize",
    "from_digits",
    "is_member",
    "is_prime_power",
    "longest_ap_base",
    "longest_ap_in_window",
    "longest_run_for_difference",
    "max_progression",
    "normalize_difference",
    "prime_power_bound",
    "radical",
    "to_base_str",
    "trivial_bound",
    "verify_progression",
]

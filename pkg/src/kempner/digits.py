"""Base-b digit manipulation and Kempner-set membership.

A Kempner set is the set of non-negative integers whose base-b expansion
uses only digits from a permitted subset S. The digit 0 must always be
permitted (leading zeros would otherwise make membership ambiguous), and
a set is *proper* when at least one digit is excluded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .errors import DomainError

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


def check_base(b: int) -> int:
    if b < 2:
        raise DomainError(f"base must be at least 2, got {b}")
    return b


def _check_nonneg(n: int, what: str = "value") -> int:
    if n < 0:
        raise DomainError(f"{what} must be non-negative, got {n}")
    return n


@dataclass(frozen=True)
class DigitSet:
    """A base together with the permitted digits, stored as a bitmask.

    Bit d of ``mask`` is set iff digit d is permitted. Membership tests
    sit in the innermost search loops, hence the bitmask representation.
    """

    base: int
    mask: int

    def __post_init__(self) -> None:
        check_base(self.base)
        if self.mask <= 0 or self.mask >> self.base:
            raise DomainError("permitted digits must be a non-empty subset of [0, base-1]")
        if not self.mask & 1:
            raise DomainError("digit 0 must be permitted")

    @classmethod
    def from_digits(cls, base: int, digits) -> "DigitSet":
        mask = 0
        for d in digits:
            if not 0 <= d < base:
                raise DomainError(f"digit {d} out of range for base {base}")
            mask |= 1 << d
        return cls(base, mask)

    @classmethod
    def excluding(cls, base: int, *excluded: int) -> "DigitSet":
        """All digits of the base except the given ones."""
        check_base(base)
        mask = (1 << base) - 1
        for d in excluded:
            if not 0 <= d < base:
                raise DomainError(f"digit {d} out of range for base {base}")
            mask &= ~(1 << d)
        return cls(base, mask)

    @property
    def permitted(self) -> tuple[int, ...]:
        return tuple(d for d in range(self.base) if self.mask >> d & 1)

    @property
    def proper(self) -> bool:
        """True when at least one digit is excluded."""
        return self.mask != (1 << self.base) - 1

    @property
    def excluded(self) -> tuple[int, ...]:
        return tuple(d for d in range(self.base) if not self.mask >> d & 1)

    def allows(self, digit: int) -> bool:
        return 0 <= digit < self.base and bool(self.mask >> digit & 1)


@dataclass(frozen=True)
class Progression:
    """Arithmetic progression start + j*difference for j in [0, length).

    A length-1 progression canonicalizes its difference to 0, so two
    single-term progressions with equal start compare equal.
    """

    start: int
    difference: int
    length: int

    def __post_init__(self) -> None:
        _check_nonneg(self.start, "start")
        if self.length < 1:
            raise DomainError(f"length must be at least 1, got {self.length}")
        if self.length == 1:
            object.__setattr__(self, "difference", 0)
        elif self.difference < 1:
            raise DomainError("difference must be positive for length >= 2")

    def term(self, j: int) -> int:
        return self.start + j * self.difference

    def terms(self) -> Iterator[int]:
        for j in range(self.length):
            yield self.start + j * self.difference

    @property
    def last(self) -> int:
        return self.term(self.length - 1)


class Violation(NamedTuple):
    """First progression term carrying a forbidden digit."""

    index: int       # term index j within the progression
    term: int        # the offending value start + j*difference
    position: int    # least-significant digit position holding a forbidden digit


def digits_of(n: int, b: int) -> list[int]:
    """Base-b digits of n, least significant first; 0 is represented as [0]."""
    check_base(b)
    _check_nonneg(n)
    if n == 0:
        return [0]
    out = []
    while n:
        n, d = divmod(n, b)
        out.append(d)
    return out


def from_digits(ds, b: int) -> int:
    """Value of a least-significant-first digit list; the empty list is 0."""
    check_base(b)
    n = 0
    for d in reversed(list(ds)):
        if not 0 <= d < b:
            raise DomainError(f"digit {d} out of range for base {b}")
        n = n * b + d
    return n


def digit_at(n: int, b: int, k: int) -> int:
    """Digit of n at position k (coefficient of b**k); 0 beyond the expansion."""
    check_base(b)
    _check_nonneg(n)
    _check_nonneg(k, "position")
    return (n // b**k) % b


def is_member(n: int, s: DigitSet) -> bool:
    """True iff every base-b digit of n is permitted by s."""
    _check_nonneg(n)
    b, mask = s.base, s.mask
    if n == 0:
        return True  # 0 is always permitted by construction
    while n:
        if not mask >> (n % b) & 1:
            return False
        n //= b
    return True


def count_below_power(s: DigitSet, m: int) -> int:
    """Number of members of the Kempner set below base**m.

    Equals |permitted|**m: with 0 permitted, each of the m positions is a
    free choice, leading zeros included.
    """
    _check_nonneg(m, "exponent")
    return bin(s.mask).count("1") ** m


def verify_progression(p: Progression, s: DigitSet) -> Optional[Violation]:
    """None if every term of p lies in the Kempner set, else the first violation.

    The violation records the smallest failing term index and the
    least-significant digit position carrying a forbidden digit.
    """
    b, mask = s.base, s.mask
    for j in range(p.length):
        t = p.term(j)
        n = t
        pos = 0
        if n == 0:
            continue
        while n:
            if not mask >> (n % b) & 1:
                return Violation(j, t, pos)
            n //= b
            pos += 1
    return None


def to_base_str(n: int, b: int) -> str:
    """Digit-string rendering, 0-9 then a-z, for bases up to 36."""
    check_base(b)
    if b > len(_ALPHABET):
        raise DomainError(f"digit strings support bases up to {len(_ALPHABET)}, got {b}")
    return "".join(_ALPHABET[d] for d in reversed(digits_of(n, b)))


def parse_base_str(s: str, b: int) -> int:
    """Inverse of to_base_str."""
    check_base(b)
    if b > len(_ALPHABET):
        raise DomainError(f"digit strings support bases up to {len(_ALPHABET)}, got {b}")
    if not s:
        raise DomainError("empty digit string")
    ds = []
    for ch in s.lower():
        v = _ALPHABET.find(ch)
        if v < 0 or v >= b:
            raise DomainError(f"invalid digit {ch!r} for base {b}")
        ds.append(v)
    return from_digits(reversed(ds), b)

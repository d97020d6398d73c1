"""Shared pure-Python search for the largest smooth number below a bound."""

from __future__ import annotations

from typing import Sequence


def largest_smooth_below(n: int, primes: Sequence[int]) -> int:
    """Largest m < n whose prime support lies within ``primes``; 1 if none bigger.

    Depth-first over exponent vectors with exact integer comparison, pruning
    any partial product that reaches n. Works on arbitrary-precision ints.
    """
    best = 1
    k = len(primes)
    stack = [(0, 1)]
    while stack:
        level, prod = stack.pop()
        if level == k:
            if prod > best:
                best = prod
        else:
            p = primes[level]
            q = prod
            while q < n:
                stack.append((level + 1, q))
                q *= p
    return best

"""Exact integer combinatorics: binomials, falling factorials, Iverson bracket.

Everything here works on Python ints, so there is no overflow at any size.
"""

import math

__all__ = ["binomial", "falling_factorial", "factorial", "iverson"]


def binomial(m: int, r: int) -> int:
    """C(m, r) for m >= 0, with C(m, r) = 0 when r < 0 or r > m.

    The zero convention lets boundary terms such as C(j, -1) drop out of
    sums without special-casing.
    """
    if m < 0:
        raise ValueError(f"binomial upper index must be >= 0, got {m}")
    if r < 0 or r > m:
        return 0
    return math.comb(m, r)


def falling_factorial(x: int, m: int) -> int:
    """x (x-1) ... (x-m+1); the empty product (m = 0) is 1."""
    if m < 0:
        raise ValueError(f"falling factorial length must be >= 0, got {m}")
    if 0 <= m <= x:
        return math.perm(x, m)
    result = 1
    for i in range(m):
        result *= x - i
    return result


def factorial(n: int) -> int:
    return math.factorial(n)


def iverson(p: bool) -> int:
    return 1 if p else 0

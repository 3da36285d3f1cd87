"""Robbins numbers: ground-truth constants for the magma census.

The count of distance magmas with n nonzero elements equals the number of
n x n alternating sign matrices (equivalently, of Magog triangles of order
n).  The audit compares census output against the constants below.

Provenance: ROBBINS_NUMBERS holds literal values of the classical product
formula

    A(n) = prod_{j=0}^{n-1} (3j+1)! / (n+j)!

(the alternating-sign-matrix counting sequence 1, 2, 7, 42, 429, 7436,
218348, ...).  They are stored as literals so the audit's expectations are
inspectable data, and robbins_number() recomputes the product exactly so a
unit test can confirm the literals from an independent path.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

ROBBINS_NUMBERS: dict[int, int] = {
    1: 1,
    2: 2,
    3: 7,
    4: 42,
    5: 429,
    6: 7436,
    7: 218348,
    8: 10850216,
    9: 911835460,
}


def robbins_number(n: int) -> int:
    """A(n) via the product formula, exact."""
    if n < 1:
        raise ValueError("n must be >= 1")
    value = Fraction(1)
    for j in range(n):
        value *= Fraction(factorial(3 * j + 1), factorial(n + j))
    assert value.denominator == 1
    return value.numerator

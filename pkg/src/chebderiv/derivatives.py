"""Derivatives of Chebyshev polynomials expressed in their own basis.

The explicit formulas produce the s-th derivative of T_n or U_n directly as
a T- or U-expansion. Two independent routes are kept alongside for
cross-checking: the unsimplified double sum obtained by pushing the
monomial inversion through the power rule, and a plain monomial oracle.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .combinatorics import binomial, falling_factorial, iverson
from .polynomial import (
    ChebBasis,
    ChebExpansion,
    MonomialPoly,
    basis_monomial,
    format_rational,
    monomial_derivative,
    parse_rational,
)

__all__ = [
    "u_derivative_explicit",
    "t_derivative_explicit",
    "derivative_explicit",
    "u_derivative_triple_sum",
    "derivative_oracle",
    "InnerSumCase",
    "inner_sum_lhs",
    "inner_sum_rhs",
    "inner_sum_pair",
    "DiffMatrix",
    "diff_matrix",
    "apply_diff_matrix",
]


def _check_orders(n: int, s: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")


def u_derivative_explicit(n: int, s: int) -> ChebExpansion:
    """s-th derivative of U_n in the U basis, via the closed form.

    For s >= 1 the coefficient of U_(n-s-2j) is
    2^s (n-j)^(s-1 falling) C(s+j-1, s-1) (n-2j-s+1), for 0 <= j <= (n-s)/2.
    """
    _check_orders(n, s)
    if s == 0:
        return ChebExpansion(ChebBasis.SECOND, {n: 1})
    coeffs = {}
    for j in range((n - s) // 2 + 1 if n >= s else 0):
        coeffs[n - s - 2 * j] = (
            2**s
            * falling_factorial(n - j, s - 1)
            * binomial(s + j - 1, s - 1)
            * (n - 2 * j - s + 1)
        )
    return ChebExpansion(ChebBasis.SECOND, coeffs)


def t_derivative_explicit(n: int, s: int) -> ChebExpansion:
    """s-th derivative of T_n in the T basis.

    Main sum: 2^s n (n-1-j)^(s-1 falling) C(s+j-1, s-1) on T_(n-s-2j).
    When n-s is even a constant 2^(s-1) n ((n+s)/2-1)^(s-1 falling)
    C((n+s)/2-1, s-1) is taken off the T_0 coefficient.
    """
    _check_orders(n, s)
    if s == 0:
        return ChebExpansion(ChebBasis.FIRST, {n: 1})
    if s > n:
        return ChebExpansion(ChebBasis.FIRST)
    coeffs = {}
    for j in range((n - s) // 2 + 1):
        coeffs[n - s - 2 * j] = (
            2**s * n * falling_factorial(n - 1 - j, s - 1) * binomial(s + j - 1, s - 1)
        )
    if iverson((n - s) % 2 == 0):
        half = (n + s) // 2 - 1
        correction = 2 ** (s - 1) * n * falling_factorial(half, s - 1) * binomial(half, s - 1)
        coeffs[0] = coeffs.get(0, 0) - correction
    return ChebExpansion(ChebBasis.FIRST, coeffs)


def derivative_explicit(basis: Union[str, ChebBasis], n: int, s: int) -> ChebExpansion:
    if ChebBasis.parse(basis) is ChebBasis.FIRST:
        return t_derivative_explicit(n, s)
    return u_derivative_explicit(n, s)


def u_derivative_triple_sum(n: int, s: int) -> ChebExpansion:
    """s-th derivative of U_n from the unsimplified double sum over (k, j).

    Coefficient of U_(n-s-2j) is
    2^s sum_{0<=k<=j} (-1)^k C(n-k, k) (n-2k)^(s falling)
    [C(n-s-2k, j-k) - C(n-s-2k, j-k-1)].
    The derivation is valid for s = 0 as well, so that case is not rejected.
    """
    _check_orders(n, s)
    coeffs = {}
    for j in range((n - s) // 2 + 1 if n >= s else 0):
        coeffs[n - s - 2 * j] = 2**s * inner_sum_lhs(n, s, j)
    return ChebExpansion(ChebBasis.SECOND, coeffs)


def derivative_oracle(n: int, s: int, basis: Union[str, ChebBasis]) -> MonomialPoly:
    """Power-rule derivative of the monomial form of T_n or U_n."""
    _check_orders(n, s)
    return monomial_derivative(basis_monomial(basis, n), s)


@dataclass(frozen=True)
class InnerSumCase:
    n: int
    s: int
    j: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def inner_sum_lhs(n: int, s: int, j: int) -> int:
    """Alternating k-sum that collapses to the closed form (no range checks)."""
    total = 0
    for k in range(j + 1):
        top = n - s - 2 * k
        total += (
            (-1) ** k
            * binomial(n - k, k)
            * falling_factorial(n - 2 * k, s)
            * (binomial(top, j - k) - binomial(top, j - k - 1))
        )
    return total


def inner_sum_rhs(n: int, s: int, j: int) -> int:
    return falling_factorial(n - j, s - 1) * binomial(s + j - 1, s - 1) * (n - 2 * j - s + 1)


def inner_sum_pair(n: int, s: int, j: int) -> InnerSumCase:
    if not 1 <= s <= n:
        raise ValueError(f"need 1 <= s <= n, got n={n}, s={s}")
    if not 0 <= 2 * j <= n - s:
        raise ValueError(f"need 0 <= j <= (n-s)/2, got n={n}, s={s}, j={j}")
    return InnerSumCase(n, s, j, inner_sum_lhs(n, s, j), inner_sum_rhs(n, s, j))


@dataclass(frozen=True)
class DiffMatrix:
    """Sparse operator taking basis coefficients to those of the s-th derivative.

    ``entries[(i, j)]`` is the coefficient of P_i in the s-th derivative of P_j,
    so column j is exactly the explicit formula's output for n = j.
    """

    basis: ChebBasis
    order: int
    n_max: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def column(self, j: int) -> ChebExpansion:
        return ChebExpansion(self.basis, {i: v for (i, jj), v in self.entries.items() if jj == j})

    def to_dense(self) -> list[list[Fraction]]:
        size = self.n_max + 1
        grid = [[Fraction(0)] * size for _ in range(size)]
        for (i, j), v in self.entries.items():
            grid[i][j] = v
        return grid

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["row\\col", *range(self.n_max + 1)])
        for i, row in enumerate(self.to_dense()):
            writer.writerow([i, *(format_rational(v) for v in row)])
        return buf.getvalue()

    def to_json(self) -> dict:
        columns = {}
        for j in range(self.n_max + 1):
            col = self.column(j)
            columns[str(j)] = col.to_json()["coeffs"]
        return {
            "basis": self.basis.value,
            "order": self.order,
            "n_max": self.n_max,
            "columns": columns,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "DiffMatrix":
        entries = {
            (int(i), int(j)): parse_rational(v)
            for j, col in data["columns"].items()
            for i, v in col.items()
        }
        return cls(ChebBasis.parse(data["basis"]), int(data["order"]), int(data["n_max"]), entries)


def diff_matrix(basis: Union[str, ChebBasis], s: int, n_max: int) -> DiffMatrix:
    basis = ChebBasis.parse(basis)
    if s < 0 or n_max < 0:
        raise ValueError(f"s and n_max must be >= 0, got s={s}, n_max={n_max}")
    entries = {}
    for j in range(n_max + 1):
        for i, v in derivative_explicit(basis, j, s):
            entries[(i, j)] = v
    return DiffMatrix(basis, s, n_max, dict(sorted(entries.items())))


def apply_diff_matrix(m: DiffMatrix, e: ChebExpansion) -> ChebExpansion:
    if e.basis is not m.basis:
        raise ValueError(f"basis mismatch: matrix is {m.basis.value}, expansion is {e.basis.value}")
    if e.degree() > m.n_max:
        raise ValueError(f"expansion degree {e.degree()} exceeds matrix size n_max={m.n_max}")
    acc: dict[int, Fraction] = {}
    for (i, j), v in m.entries.items():
        c = e[j]
        if c:
            acc[i] = acc.get(i, Fraction(0)) + v * c
    return ChebExpansion(m.basis, acc)

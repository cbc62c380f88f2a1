"""Sparse exact polynomials in the monomial and Chebyshev (T/U) bases.

Coefficients are :class:`fractions.Fraction` throughout. Both container
types keep a canonical sparse form (no stored zeros, keys ascending), so
equality is plain map equality.
"""

from __future__ import annotations

import enum
import functools
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .combinatorics import binomial, falling_factorial

__all__ = [
    "ChebBasis",
    "MonomialPoly",
    "ChebExpansion",
    "parse_rational",
    "format_rational",
    "chebyshev_u_monomial",
    "chebyshev_t_monomial",
    "basis_monomial",
    "monomial_power_to_u",
    "monomial_to_u",
    "expansion_to_monomial",
    "monomial_derivative",
    "monomial_eval",
    "clenshaw_eval",
    "clear_caches",
]

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an int, Fraction or a ``"p"`` / ``"p/q"`` string exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(value.replace(" ", ""))
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Lowest-terms string, with integers printed without ``/1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _canonical(coeffs: Union[Mapping[int, RationalLike], Iterable[tuple[int, RationalLike]]]) -> dict[int, Fraction]:
    items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
    out: dict[int, Fraction] = {}
    for deg, c in items:
        deg = int(deg)
        if deg < 0:
            raise ValueError(f"negative degree {deg}")
        c = parse_rational(c)
        if c:
            out[deg] = out.get(deg, Fraction(0)) + c
    return {d: out[d] for d in sorted(out) if out[d]}


class ChebBasis(str, enum.Enum):
    FIRST = "T"
    SECOND = "U"

    @classmethod
    def parse(cls, value: Union[str, "ChebBasis"]) -> "ChebBasis":
        if isinstance(value, ChebBasis):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"unknown Chebyshev kind {value!r}, expected 'T' or 'U'") from None

    def __str__(self) -> str:
        return self.value


class _SparsePoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        self._coeffs = MappingProxyType(_canonical(coeffs))

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return self._coeffs

    def degree(self) -> int:
        """Largest stored degree; -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, deg: int) -> Fraction:
        return self._coeffs.get(deg, Fraction(0))

    def __iter__(self):
        return iter(self._coeffs.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def _coeff_json(self) -> dict[str, str]:
        # descending degree reads like a written polynomial
        return {str(d): format_rational(c) for d, c in sorted(self._coeffs.items(), reverse=True)}


class MonomialPoly(_SparsePoly):
    """Sum of c_d x^d."""

    __slots__ = ()

    def __eq__(self, other):
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        return dict(self._coeffs) == dict(other._coeffs)

    def __hash__(self):
        return hash(("monomial", tuple(self._coeffs.items())))

    def __repr__(self):
        return f"MonomialPoly({dict(self._coeffs)!r})"

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        merged = dict(self._coeffs)
        for d, c in other:
            merged[d] = merged.get(d, Fraction(0)) + c
        return MonomialPoly(merged)

    def scale(self, factor: RationalLike) -> "MonomialPoly":
        f = parse_rational(factor)
        return MonomialPoly({d: f * c for d, c in self})

    def to_json(self) -> dict:
        return {"coeffs": self._coeff_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "MonomialPoly":
        return cls({int(k): parse_rational(v) for k, v in data["coeffs"].items()})


class ChebExpansion(_SparsePoly):
    """Sum of c_d P_d(x) where P is T or U depending on ``basis``."""

    __slots__ = ("_basis",)

    def __init__(self, basis: Union[str, ChebBasis], coeffs=()):
        super().__init__(coeffs)
        self._basis = ChebBasis.parse(basis)

    @property
    def basis(self) -> ChebBasis:
        return self._basis

    def __eq__(self, other):
        if not isinstance(other, ChebExpansion):
            return NotImplemented
        return self._basis is other._basis and dict(self._coeffs) == dict(other._coeffs)

    def __hash__(self):
        return hash((self._basis.value, tuple(self._coeffs.items())))

    def __repr__(self):
        return f"ChebExpansion({self._basis.value!r}, {dict(self._coeffs)!r})"

    def to_json(self) -> dict:
        return {"basis": self._basis.value, "coeffs": self._coeff_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "ChebExpansion":
        return cls(data["basis"], {int(k): parse_rational(v) for k, v in data["coeffs"].items()})


@functools.lru_cache(maxsize=None)
def chebyshev_u_monomial(n: int) -> MonomialPoly:
    """U_n = sum_k (-1)^k C(n-k, k) (2x)^(n-2k)."""
    _check_nonneg("n", n)
    return MonomialPoly(
        {n - 2 * k: (-1) ** k * binomial(n - k, k) * 2 ** (n - 2 * k) for k in range(n // 2 + 1)}
    )


@functools.lru_cache(maxsize=None)
def chebyshev_t_monomial(n: int) -> MonomialPoly:
    """T_n = sum_k (-1)^k n/(n-k) C(n-k, k) 2^(n-1-2k) x^(n-2k); T_0 = 1."""
    _check_nonneg("n", n)
    if n == 0:
        # n/(n-k) is 0/0 here
        return MonomialPoly({0: 1})
    return MonomialPoly(
        {
            n - 2 * k: (-1) ** k * Fraction(n, n - k) * binomial(n - k, k) * Fraction(2) ** (n - 1 - 2 * k)
            for k in range(n // 2 + 1)
        }
    )


def basis_monomial(basis: Union[str, ChebBasis], n: int) -> MonomialPoly:
    if ChebBasis.parse(basis) is ChebBasis.FIRST:
        return chebyshev_t_monomial(n)
    return chebyshev_u_monomial(n)


@functools.lru_cache(maxsize=None)
def monomial_power_to_u(j: int) -> ChebExpansion:
    """x^j = 2^-j sum_h [C(j, h) - C(j, h-1)] U_(j-2h)."""
    _check_nonneg("j", j)
    scale = Fraction(1, 2**j)
    return ChebExpansion(
        ChebBasis.SECOND,
        {j - 2 * h: scale * (binomial(j, h) - binomial(j, h - 1)) for h in range(j // 2 + 1)},
    )


def monomial_to_u(p: MonomialPoly) -> ChebExpansion:
    acc: dict[int, Fraction] = {}
    for d, c in p:
        for k, u in monomial_power_to_u(d):
            acc[k] = acc.get(k, Fraction(0)) + c * u
    return ChebExpansion(ChebBasis.SECOND, acc)


def expansion_to_monomial(e: ChebExpansion) -> MonomialPoly:
    acc: dict[int, Fraction] = {}
    for n, c in e:
        for d, m in basis_monomial(e.basis, n):
            acc[d] = acc.get(d, Fraction(0)) + c * m
    return MonomialPoly(acc)


def monomial_derivative(p: MonomialPoly, s: int = 1) -> MonomialPoly:
    """s-th derivative by the power rule, d^s/dx^s x^d = d^(s falling) x^(d-s)."""
    _check_nonneg("s", s)
    return MonomialPoly({d - s: c * falling_factorial(d, s) for d, c in p if d >= s})


def monomial_eval(p: MonomialPoly, x: RationalLike) -> Fraction:
    x = parse_rational(x)
    return sum((c * x**d for d, c in p), Fraction(0))


def clenshaw_eval(e: ChebExpansion, x: RationalLike) -> Fraction:
    """Evaluate ``e`` at ``x`` by Clenshaw's backward recurrence.

    Both kinds share P_(k+1) = 2x P_k - P_(k-1) with P_0 = 1; they differ
    only in P_1 (x for T, 2x for U).
    """
    x = parse_rational(x)
    n = e.degree()
    if n < 0:
        return Fraction(0)
    b1 = b2 = Fraction(0)
    for k in range(n, 0, -1):
        b1, b2 = e[k] + 2 * x * b1 - b2, b1
    p1 = x if e.basis is ChebBasis.FIRST else 2 * x
    return e[0] + p1 * b1 - b2


def clear_caches() -> None:
    """Drop memoised basis polynomials and inversion expansions."""
    for fn in (chebyshev_u_monomial, chebyshev_t_monomial, monomial_power_to_u):
        fn.cache_clear()


def _check_nonneg(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")

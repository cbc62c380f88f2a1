"""Exhaustive identity sweeps with counterexample reports.

Each suite is an ordered case enumerator plus a checker returning
``(expected, actual)`` as JSON-ready values. All comparisons are exact.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping

from .derivatives import (
    derivative_oracle,
    inner_sum_lhs,
    inner_sum_rhs,
    t_derivative_explicit,
    u_derivative_explicit,
    u_derivative_triple_sum,
)
from .polynomial import ChebBasis, MonomialPoly, expansion_to_monomial, monomial_power_to_u

__all__ = [
    "Failure",
    "VerificationReport",
    "SUITES",
    "run_suite",
    "check_case",
    "verify_u_explicit",
    "verify_t_explicit",
    "verify_inversion",
    "verify_inner_sum",
    "verify_triple_sum",
    "verify_suite",
    "verify_all",
]

Params = Mapping[str, int]
Checker = Callable[..., tuple[Any, Any]]


@dataclass(frozen=True)
class Failure:
    params: dict[str, int]
    expected: Any
    actual: Any

    def to_json(self) -> dict:
        return {"params": dict(self.params), "expected": self.expected, "actual": self.actual}

    @classmethod
    def from_json(cls, data: Mapping) -> "Failure":
        return cls(dict(data["params"]), data["expected"], data["actual"])


@dataclass
class VerificationReport:
    suite_name: str
    cases_run: int
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite_name,
            "cases": self.cases_run,
            "failures": [f.to_json() for f in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: Mapping) -> "VerificationReport":
        return cls(
            data["suite"],
            int(data["cases"]),
            [Failure.from_json(f) for f in data["failures"]],
            float(data["elapsed_ms"]),
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite_name}: {self.cases_run} cases, {len(self.failures)} failures"


def _monomial_json(p: MonomialPoly) -> dict:
    return p.to_json()["coeffs"]


def _check_u(n: int, s: int):
    return (
        _monomial_json(derivative_oracle(n, s, ChebBasis.SECOND)),
        _monomial_json(expansion_to_monomial(u_derivative_explicit(n, s))),
    )


def _check_t(n: int, s: int):
    return (
        _monomial_json(derivative_oracle(n, s, ChebBasis.FIRST)),
        _monomial_json(expansion_to_monomial(t_derivative_explicit(n, s))),
    )


def _check_inversion(j: int):
    return {str(j): "1"}, _monomial_json(expansion_to_monomial(monomial_power_to_u(j)))


def _check_inner_sum(n: int, s: int, j: int):
    # the closed form is the claim under test; the k-sum is the reference
    return str(inner_sum_lhs(n, s, j)), str(inner_sum_rhs(n, s, j))


def _check_triple_sum(n: int, s: int):
    return (
        u_derivative_triple_sum(n, s).to_json()["coeffs"],
        u_derivative_explicit(n, s).to_json()["coeffs"],
    )


def _derivative_cases(n_max: int) -> Iterator[dict]:
    for n in range(n_max + 1):
        for s in range(n + 1):
            yield {"n": n, "s": s}


def _positive_order_cases(n_max: int) -> Iterator[dict]:
    for n in range(1, n_max + 1):
        for s in range(1, n + 1):
            yield {"n": n, "s": s}


def _inner_sum_cases(n_max: int) -> Iterator[dict]:
    for n, s in ((c["n"], c["s"]) for c in _positive_order_cases(n_max)):
        for j in range((n - s) // 2 + 1):
            yield {"n": n, "s": s, "j": j}


def _inversion_cases(j_max: int) -> Iterator[dict]:
    for j in range(j_max + 1):
        yield {"j": j}


# name -> (case enumerator, checker)
SUITES: dict[str, tuple[Callable[[int], Iterable[dict]], Checker]] = {
    "u": (_derivative_cases, _check_u),
    "t": (_derivative_cases, _check_t),
    "inversion": (_inversion_cases, _check_inversion),
    "inner-sum": (_inner_sum_cases, _check_inner_sum),
    "triple-sum": (_positive_order_cases, _check_triple_sum),
}


def run_suite(name: str, cases: Iterable[Params], checker: Checker) -> VerificationReport:
    start = time.perf_counter()
    count = 0
    failures = []
    for params in cases:
        count += 1
        expected, actual = checker(**params)
        if expected != actual:
            failures.append(Failure(dict(params), expected, actual))
    failures.sort(key=lambda f: tuple(f.params.values()))
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(name, count, failures, elapsed)


def check_case(suite: str, params: Params) -> tuple[Any, Any]:
    """Re-run one case of ``suite``; ``params`` as stored in a failure payload."""
    _, checker = SUITES[suite]
    return checker(**params)


def verify_suite(suite: str, limit: int) -> VerificationReport:
    if limit < 0:
        raise ValueError(f"sweep limit must be >= 0, got {limit}")
    enumerate_cases, checker = SUITES[suite]
    return run_suite(suite, enumerate_cases(limit), checker)


def verify_u_explicit(n_max: int) -> VerificationReport:
    return verify_suite("u", n_max)


def verify_t_explicit(n_max: int) -> VerificationReport:
    return verify_suite("t", n_max)


def verify_inversion(j_max: int) -> VerificationReport:
    return verify_suite("inversion", j_max)


def verify_inner_sum(n_max: int) -> VerificationReport:
    return verify_suite("inner-sum", n_max)


def verify_triple_sum(n_max: int) -> VerificationReport:
    return verify_suite("triple-sum", n_max)


def verify_all(n_max: int) -> list[VerificationReport]:
    return [verify_suite(name, n_max) for name in SUITES]

"""Exit criteria. Every check is exact: zero tolerance on rational values."""

import math
import time

from chebderiv.bench import run_bench
from chebderiv.derivatives import apply_diff_matrix, diff_matrix, t_derivative_explicit, u_derivative_explicit
from chebderiv.polynomial import ChebExpansion
from chebderiv.verification import (
    verify_inner_sum,
    verify_inversion,
    verify_t_explicit,
    verify_triple_sum,
    verify_u_explicit,
)


def _sweep(criterion, report, cases=None, budget_s=None):
    criterion["detail"] = (
        f"{report.cases_run} cases, {len(report.failures)} failures, {report.elapsed_ms / 1000:.2f}s"
    )
    if cases is not None:
        assert report.cases_run == cases
    assert report.failures == []
    if budget_s is not None:
        assert report.elapsed_ms < budget_s * 1000


def test_u_formula_oracle_equivalence(criterion):
    _sweep(criterion, verify_u_explicit(64), cases=2145, budget_s=30)


def test_t_formula_oracle_equivalence(criterion):
    report = verify_t_explicit(64)
    # both parities of n - s, including the Iverson-corrected class, are swept
    assert {(n - s) % 2 for n in range(2, 65) for s in range(1, n + 1)} == {0, 1}
    _sweep(criterion, report, cases=2145, budget_s=30)


def test_inversion_round_trip(criterion):
    _sweep(criterion, verify_inversion(64), cases=65)


def test_inner_sum_lemma(criterion):
    expected = sum((n - s) // 2 + 1 for n in range(1, 65) for s in range(1, n + 1))
    _sweep(criterion, verify_inner_sum(64), cases=expected)


def test_triple_sum_equivalence(criterion):
    _sweep(criterion, verify_triple_sum(48), cases=1176)


def test_golden_spot_values(criterion):
    checks = {
        "U4'": u_derivative_explicit(4, 1) == ChebExpansion("U", {3: 8, 1: 4}),
        "U5''": u_derivative_explicit(5, 2) == ChebExpansion("U", {3: 80, 1: 64}),
        "T3'": t_derivative_explicit(3, 1) == ChebExpansion("T", {2: 6, 0: 3}),
        "T4''": t_derivative_explicit(4, 2) == ChebExpansion("T", {2: 48, 0: 32}),
    }
    for n in range(11):
        checks[f"U{n}^({n})"] = u_derivative_explicit(n, n) == ChebExpansion(
            "U", {0: 2**n * math.factorial(n)}
        )
    bad = [k for k, ok in checks.items() if not ok]
    criterion["detail"] = f"{len(checks) - len(bad)}/{len(checks)} spot values match"
    assert not bad, bad


def test_operator_composition(criterion):
    n_max = 32
    d1 = diff_matrix("U", 1, n_max)
    d2 = diff_matrix("U", 2, n_max)
    # linearity: agreement on every basis vector covers all inputs of degree <= 32
    mismatched = [
        j
        for j in range(n_max + 1)
        if apply_diff_matrix(d1, apply_diff_matrix(d1, ChebExpansion("U", {j: 1})))
        != apply_diff_matrix(d2, ChebExpansion("U", {j: 1}))
    ]
    mixed = ChebExpansion("U", {j: (-1) ** j * (j + 1) for j in range(n_max + 1)})
    criterion["detail"] = f"D1*D1 vs D2 on {n_max + 1} basis vectors, {len(mismatched)} mismatches"
    assert not mismatched
    assert apply_diff_matrix(d1, apply_diff_matrix(d1, mixed)) == apply_diff_matrix(d2, mixed)


def test_bench_integrity(criterion):
    start = time.perf_counter()
    rows = run_bench(1024, 4)
    criterion["detail"] = (
        f"{len(rows)} rows up to n={rows[-1].n}, paths agree, {time.perf_counter() - start:.1f}s"
    )
    assert rows[-1].n == 1024
    assert all(r.explicit_ms >= 0 for r in rows)

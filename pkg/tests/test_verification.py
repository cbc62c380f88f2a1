import json

import pytest

from chebderiv.verification import (
    VerificationReport,
    check_case,
    run_suite,
    verify_inner_sum,
    verify_inversion,
    verify_suite,
    verify_t_explicit,
    verify_triple_sum,
    verify_u_explicit,
)


@pytest.mark.parametrize(
    "fn, limit, cases",
    [
        (verify_u_explicit, 8, 45),
        (verify_u_explicit, 0, 1),
        (verify_t_explicit, 8, 45),
        (verify_t_explicit, 0, 1),
        (verify_inversion, 16, 17),
        (verify_inversion, 0, 1),
        (verify_triple_sum, 8, 36),
        (verify_triple_sum, 1, 1),
        (verify_inner_sum, 1, 1),
    ],
)
def test_suite_case_counts(fn, limit, cases):
    report = fn(limit)
    assert report.cases_run == cases
    assert report.passed


def test_inner_sum_small():
    report = verify_inner_sum(8)
    # sum over 1<=s<=n<=8 of floor((n-s)/2)+1
    assert report.cases_run == sum((n - s) // 2 + 1 for n in range(1, 9) for s in range(1, n + 1))
    assert report.passed


def test_determinism():
    a, b = verify_t_explicit(10), verify_t_explicit(10)
    ja, jb = a.to_json(), b.to_json()
    ja.pop("elapsed_ms"), jb.pop("elapsed_ms")
    assert ja == jb


def test_failures_sorted_and_rerunnable():
    cases = [{"n": 3, "s": 1}, {"n": 1, "s": 0}, {"n": 2, "s": 2}]

    def flaky(n, s):
        return check_case("u", {"n": n, "s": s})[0], ({} if n != 2 else {"0": "8"})

    report = run_suite("u-broken", cases, flaky)
    assert report.cases_run == 3
    assert [f.params for f in report.failures] == [{"n": 1, "s": 0}, {"n": 3, "s": 1}]

    restored = VerificationReport.from_json(json.loads(report.dumps()))
    assert restored.failures == report.failures
    for failure in restored.failures:
        expected, actual = check_case("u", failure.params)
        assert expected == failure.expected
        assert expected == actual


def test_report_json_shape():
    data = verify_inversion(3).to_json()
    assert set(data) == {"suite", "cases", "failures", "elapsed_ms"}
    assert data["suite"] == "inversion" and data["cases"] == 4 and data["failures"] == []


def test_negative_limit_rejected():
    with pytest.raises(ValueError):
        verify_suite("u", -1)

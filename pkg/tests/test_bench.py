import pytest

from chebderiv import bench
from chebderiv.bench import BenchMismatchError, bench_ladder, format_bench, run_bench
from chebderiv.polynomial import ChebExpansion


def test_ladder():
    assert bench_ladder(256, 2) == [2, 4, 8, 16, 32, 64, 128, 256]
    assert bench_ladder(5, 5) == [5]
    assert bench_ladder(100, 3) == [3, 4, 8, 16, 32, 64, 100]
    assert bench_ladder(4, 0) == [0, 1, 2, 4]
    with pytest.raises(ValueError):
        bench_ladder(2, 3)


def test_single_row_when_degree_equals_order():
    rows = run_bench(6, 6)
    assert len(rows) == 1
    assert rows[0].n == 6 and rows[0].terms == 1


def test_256_two():
    rows = run_bench(256, 2)
    assert rows[-1].n == 256
    assert all(r.explicit_ms >= 0 and r.oracle_ms >= 0 for r in rows)
    assert len(format_bench(rows).splitlines()) == len(rows) + 1


def test_mismatch_refuses_timings(monkeypatch):
    monkeypatch.setattr(bench, "_oracle_path", lambda n, s: ChebExpansion("U", {0: 1}))
    with pytest.raises(BenchMismatchError):
        run_bench(8, 1)

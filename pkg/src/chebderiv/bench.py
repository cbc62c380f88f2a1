"""Wall-clock comparison of the closed form against differentiate-then-reexpand."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .derivatives import derivative_oracle, u_derivative_explicit
from .polynomial import ChebBasis, clear_caches, monomial_to_u

__all__ = ["BenchMismatchError", "BenchRow", "bench_ladder", "run_bench", "format_bench"]


class BenchMismatchError(RuntimeError):
    """The two differentiation paths disagreed; no timings are reported."""

    def __init__(self, n: int, s: int):
        super().__init__(f"explicit and oracle paths disagree at n={n}, s={s}")
        self.n = n
        self.s = s


@dataclass(frozen=True)
class BenchRow:
    n: int
    s: int
    terms: int
    explicit_ms: float
    oracle_ms: float


def bench_ladder(n_max: int, s: int) -> list[int]:
    """s, then each power of two above s, capped and terminated by n_max."""
    if s < 0 or n_max < s:
        raise ValueError(f"need 0 <= s <= n_max, got s={s}, n_max={n_max}")
    ladder = [s]
    p = 1
    while p <= s:
        p *= 2
    while p < n_max:
        ladder.append(p)
        p *= 2
    if ladder[-1] != n_max:
        ladder.append(n_max)
    return ladder


def _timed(fn, *args):
    clear_caches()
    start = time.perf_counter()
    out = fn(*args)
    return out, (time.perf_counter() - start) * 1000.0


def _oracle_path(n: int, s: int):
    return monomial_to_u(derivative_oracle(n, s, ChebBasis.SECOND))


def run_bench(n_max: int, s: int) -> list[BenchRow]:
    """Time both U-derivative paths on each ladder degree.

    Every row's outputs are compared before anything is returned; a single
    disagreement raises :class:`BenchMismatchError`.
    """
    rows = []
    for n in bench_ladder(n_max, s):
        explicit, t_explicit = _timed(u_derivative_explicit, n, s)
        oracle, t_oracle = _timed(_oracle_path, n, s)
        if explicit != oracle:
            raise BenchMismatchError(n, s)
        rows.append(BenchRow(n, s, len(explicit), t_explicit, t_oracle))
    return rows


def format_bench(rows: list[BenchRow]) -> str:
    lines = ["n,s,terms,explicit_ms,oracle_ms"]
    for r in rows:
        lines.append(f"{r.n},{r.s},{r.terms},{r.explicit_ms:.3f},{r.oracle_ms:.3f}")
    return "\n".join(lines) + "\n"

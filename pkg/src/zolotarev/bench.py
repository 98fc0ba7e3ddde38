"""Micro-benchmarks for the competing sign and symbol algorithms.

Each case runs every algorithm on identical inputs. Algorithms in the same
``group`` must produce the same checksum; a mismatch is reported as a
failure in the structured report, so benchmarking doubles as a check.

Timing is wall-clock (``time.perf_counter``), median/best/mean over at least
11 repetitions after one discarded warm-up. Runs are single-threaded.
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import asdict, dataclass
from math import gcd
from typing import Any, Callable

from . import __version__
from .deals import GridSpec, gamma
from .perms import (
    Permutation,
    count_inversions_fast,
    count_inversions_naive,
    random_permutation,
    reversal,
    sign_via_cycles,
    sign_via_inversions,
)
from .symbols import jacobi_factored, jacobi_reciprocity, multiplication_permutation, zolotarev_symbol

NAIVE_CUTOFF = 20_000
MIN_REPETITIONS = 11


@dataclass(frozen=True)
class BenchCase:
    name: str
    generator: str  # "random" | "reversal" | "gamma" | "multiplication"
    size: tuple[int, ...]
    repetitions: int = MIN_REPETITIONS
    seed: int = 0

    def __post_init__(self):
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")

    def build(self) -> Any:
        if self.generator == "random":
            return random_permutation(self.size[0], random.Random(self.seed))
        if self.generator == "reversal":
            return reversal(self.size[0])
        if self.generator == "gamma":
            return gamma(GridSpec(*self.size))
        if self.generator == "multiplication":
            return multiplication_permutation(*self.size)
        raise ValueError(f"unknown generator {self.generator!r}")


@dataclass
class BenchResult:
    case: str
    algorithm: str
    group: str
    median: float | None
    best: float | None
    mean: float | None
    checksum: int | None
    repetitions: int
    skipped: bool = False


def _time(fn: Callable[[], Any], repetitions: int) -> tuple[list[float], Any]:
    out = fn()  # warm-up, not timed
    times = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return times, out


def _measure(case: str, algorithm: str, group: str, fn, repetitions: int, checksum=lambda v: v) -> BenchResult:
    times, out = _time(fn, repetitions)
    return BenchResult(
        case=case,
        algorithm=algorithm,
        group=group,
        median=statistics.median(times),
        best=min(times),
        mean=statistics.fmean(times),
        checksum=checksum(out),
        repetitions=repetitions,
    )


def _skip(case: str, algorithm: str, group: str, repetitions: int) -> BenchResult:
    return BenchResult(case, algorithm, group, None, None, None, None, repetitions, skipped=True)


def run_case(case: BenchCase) -> list[BenchResult]:
    p: Permutation = case.build()
    reps = case.repetitions
    results = []
    if p.degree <= NAIVE_CUTOFF:
        results.append(_measure(case.name, "naive_inversions", "inversions", lambda: count_inversions_naive(p), reps))
    else:
        results.append(_skip(case.name, "naive_inversions", "inversions", reps))
    results.append(_measure(case.name, "merge_inversions", "inversions", lambda: count_inversions_fast(p), reps))
    results.append(_measure(case.name, "inversion_parity", "sign", lambda: sign_via_inversions(p), reps))
    results.append(_measure(case.name, "cycle_parity", "sign", lambda: sign_via_cycles(p), reps))
    return results


def bench_signs(
    sizes, seed: int = 0, repetitions: int = MIN_REPETITIONS, generator: str = "random"
) -> list[BenchResult]:
    """One permutation per size from ``generator``, timed under every sign algorithm."""
    if not sizes:
        raise ValueError("sizes must be nonempty")
    if generator not in ("random", "reversal"):
        raise ValueError(f"bench_signs takes a random or reversal generator, not {generator!r}")
    results = []
    for size in sizes:
        results += run_case(BenchCase(f"{generator}({size})", generator, (size,), repetitions, seed))
    return results


def sample_coprime_pairs(max_n: int, samples: int, seed: int) -> list[tuple[int, int]]:
    """Uniform odd ``n`` in ``[3, max_n]`` and ``a`` in ``[1, n)`` with ``gcd(a, n) = 1``."""
    if max_n < 3:
        raise ValueError("max_n must be >= 3")
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < samples:
        n = rng.randrange(3, max_n + 1, 2)
        a = rng.randrange(1, n)
        if gcd(a, n) == 1:
            pairs.append((a, n))
    return pairs


def _value_checksum(values: list[int]) -> int:
    # position-weighted so that permuted or shifted outputs do not collide
    return sum((k + 1) * v for k, v in enumerate(values))


def bench_jacobi(
    max_n: int,
    samples: int = 1000,
    seed: int = 0,
    repetitions: int = MIN_REPETITIONS,
    pairs: list[tuple[int, int]] | None = None,
) -> list[BenchResult]:
    if pairs is None:
        pairs = sample_coprime_pairs(max_n, samples, seed)
    case = f"jacobi(max_n={max_n}, samples={len(pairs)})"
    algorithms = {
        "zolotarev_permutation": zolotarev_symbol,
        "jacobi_factored": jacobi_factored,
        "jacobi_reciprocity": jacobi_reciprocity,
    }
    return [
        _measure(case, name, "symbol", lambda f=f: [f(a, n) for a, n in pairs], repetitions, _value_checksum)
        for name, f in algorithms.items()
    ]


def disagreements(results: list[BenchResult]) -> list[dict[str, Any]]:
    """Groups whose non-skipped members report different checksums."""
    groups: dict[tuple[str, str], list[BenchResult]] = {}
    for r in results:
        if not r.skipped:
            groups.setdefault((r.case, r.group), []).append(r)
    out = []
    for (case, group), rs in groups.items():
        values = {r.algorithm: r.checksum for r in rs}
        if len(set(values.values())) > 1:
            out.append({"suite": "bench", "parameters": {"case": case, "group": group}, "check": "checksums_agree",
                        "expected": rs[0].checksum, "actual": values, "failed_checks": ["checksums_agree"]})
        if group == "inversions":
            # signs of the same case must equal the inversion-count parity
            parity = -1 if rs[0].checksum & 1 else 1
            sign_rs = groups.get((case, "sign"), [])
            if any(r.checksum != parity for r in sign_rs):
                out.append({"suite": "bench", "parameters": {"case": case, "group": "sign"},
                            "check": "sign=inversion_parity", "expected": parity,
                            "actual": {r.algorithm: r.checksum for r in sign_rs},
                            "failed_checks": ["sign=inversion_parity"]})
    return out


def render_table(results: list[BenchResult]) -> str:
    """One row per case: median milliseconds per algorithm, then one checksum per group."""
    cases: dict[str, dict[str, BenchResult]] = {}
    algorithms: list[str] = []
    groups: list[str] = []
    for r in results:
        cases.setdefault(r.case, {})[r.algorithm] = r
        if r.algorithm not in algorithms:
            algorithms.append(r.algorithm)
        if r.group not in groups:
            groups.append(r.group)
    header = ["case"] + [f"{a}_ms" for a in algorithms] + [f"{g}_checksum" for g in groups]
    rows = [header]
    for case, by_alg in cases.items():
        row = [case]
        for a in algorithms:
            r = by_alg.get(a)
            row.append("-" if r is None else "skipped" if r.skipped else f"{r.median * 1e3:.3f}")
        for g in groups:
            sums = {r.checksum for r in by_alg.values() if r.group == g and not r.skipped}
            row.append(str(sums.pop()) if len(sums) == 1 else "MISMATCH" if sums else "-")
        rows.append(row)
    widths = [max(len(row[k]) for row in rows) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) if k == 0 else c.rjust(w) for k, (c, w) in enumerate(zip(row, widths))) for row in rows]
    return "\n".join(lines) + "\n"


def to_report(suite: str, ranges: dict[str, Any], results: list[BenchResult], elapsed: float) -> dict[str, Any]:
    """Structured report in the same object model as ``SweepReport.to_dict``."""
    failures = disagreements(results)
    return {
        "suite": f"bench:{suite}",
        "ranges": ranges,
        "checks_run": sum(1 for r in results if not r.skipped),
        "points": len({r.case for r in results}),
        "skipped": sum(1 for r in results if r.skipped),
        "failures": failures,
        "elapsed": elapsed,
        "version": __version__,
        "suites": [],
        "degenerate": not results,
        "results": [asdict(r) for r in results],
    }

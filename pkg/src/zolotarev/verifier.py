"""Exhaustive sweeps that check the card-dealing identities.

Every suite enumerates a rectangular set of *candidate* parameter points
whose size has a closed form. Candidates that fail a precondition (a shared
factor, a composite modulus) are counted as skipped; the rest are checked.
After the sweep the runner audits itself: ``points + skipped`` must equal the
closed-form candidate count, and each point must have run exactly the number
of checks its formula predicts. A silently dropped case therefore shows up
as an ``audit`` failure rather than as a green report.

Failures are data. Each failing point yields one record carrying the
parameters needed to reproduce it, the first failed check with its expected
and actual values, and the names of all failed checks at that point.

``Fault`` is a test hook: it perturbs one permutation image at one
parameter point so the harness itself can be tested.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb, gcd
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .deals import (
    GridSpec,
    column_deal,
    crt_card,
    deal_permutation,
    diagonal_deal,
    diagonal_deal_by_residues,
    gamma_inversion_pairs,
    gamma_sign_formula,
    gamma_sign_odd_formula,
    modified_zigzag_deal,
    row_deal,
    supplement_column_deal,
    supplement_row_deal,
    swap_rows,
    zigzag_deal,
)
from .perms import (
    Permutation,
    compose,
    count_inversions_naive,
    cycle_decomposition,
    inverse,
    sign_via_cycles,
    sign_via_inversions,
)
from .symbols import (
    is_prime,
    jacobi_factored,
    jacobi_reciprocity,
    legendre_bruteforce,
    legendre_euler,
    multiplication_permutation,
    primitive_root,
    zolotarev_symbol,
)

SUITES = (
    "gamma",
    "alpha_beta",
    "reciprocity_identity",
    "zolotarev_lemma",
    "quadratic_reciprocity",
    "supplements",
    "jacobi_generalization",
    "crt_structure",
)

ALIASES = {
    "reciprocity": "reciprocity_identity",
    "lemma": "zolotarev_lemma",
    "qr": "quadratic_reciprocity",
    "jacobi": "jacobi_generalization",
    "crt": "crt_structure",
}


def canonical_suite(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in SUITES and name != "all":
        raise ValueError(f"unknown suite {name!r}")
    return name


@dataclass(frozen=True)
class Fault:
    """Swap the images of points 0 and 1 of one permutation at one point.

    ``params`` matches the point's parameters (for ``zolotarev_lemma`` it is
    ``(p, a)``). ``target`` names the permutation; ``None`` picks the suite's
    default.
    """

    suite: str
    params: tuple[int, ...]
    target: str | None = None


_DEFAULT_TARGET = {
    "gamma": "gamma",
    "alpha_beta": "alpha",
    "reciprocity_identity": "mult",
    "zolotarev_lemma": "mult",
    "quadratic_reciprocity": None,
    "supplements": "zigzag",
    "jacobi_generalization": "mult",
    "crt_structure": "alpha",
}


@dataclass(frozen=True)
class SweepConfig:
    suite: str = "all"
    max_m: int = 31
    max_n: int = 31
    max_p: int = 199
    parallelism: int = 1
    seed: int = 0
    oracle_max: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "suite", canonical_suite(self.suite))
        if min(self.max_m, self.max_n, self.max_p) < 1:
            raise ValueError("sweep bounds must be >= 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


@dataclass
class SweepReport:
    suite: str
    ranges: dict[str, int]
    checks_run: int = 0
    points: int = 0
    skipped: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0
    version: str = __version__
    suites: list[SweepReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def degenerate(self) -> bool:
        return self.checks_run == 0

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["degenerate"] = self.degenerate
        d["suites"] = [s.to_dict() for s in self.suites]
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> SweepReport:
        d = dict(d)
        d.pop("degenerate", None)
        d["suites"] = [cls.from_dict(s) for s in d.get("suites", [])]
        return cls(**d)

    def to_json(self, *, include_timing: bool = True) -> str:
        d = self.to_dict()
        if not include_timing:
            _strip_timing(d)
        return json.dumps(d, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> SweepReport:
        return cls.from_dict(json.loads(text))

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.degenerate:
            status += " (degenerate: no checks)"
        ranges = ", ".join(f"{k}={v}" for k, v in self.ranges.items())
        return (
            f"{self.suite:<22} {status:<5} checks={self.checks_run} points={self.points} "
            f"skipped={self.skipped} failures={len(self.failures)} [{ranges}] {self.elapsed:.2f}s"
        )


def _strip_timing(d: dict[str, Any]) -> None:
    d.pop("elapsed", None)
    for sub in d.get("suites", []):
        _strip_timing(sub)


# -- per-point bookkeeping ---------------------------------------------------


class _Point:
    def __init__(self, suite: str, params: dict[str, int], fault: Fault | None):
        self.suite = suite
        self.params = params
        self.fault_target = None
        self.fault_sub: tuple[int, ...] = ()
        if fault is not None and fault.suite == suite:
            key = tuple(params.values())
            if fault.params[: len(key)] == key:
                self.fault_target = fault.target or _DEFAULT_TARGET[suite]
                self.fault_sub = fault.params[len(key):]
        self.checks = 0
        self.failed: list[tuple[str, Any, Any, dict[str, int]]] = []

    def check(self, name: str, expected: Any, actual: Any, **sub: int) -> None:
        self.checks += 1
        if expected != actual:
            self.failed.append((name, _jsonable(expected), _jsonable(actual), sub))

    def check_perm(self, name: str, expected: Permutation, actual: Permutation, **sub: int) -> None:
        self.checks += 1
        if expected != actual:
            x = next((x for x, (e, a) in enumerate(zip(expected.image, actual.image)) if e != a), None)
            self.failed.append(
                (name, {"point": x, "image": expected.image[x]}, {"point": x, "image": actual.image[x]}, sub)
            )

    def perm(self, name: str, p: Permutation, **sub: int) -> Permutation:
        """Return ``p``, perturbed if the fault hook targets it here."""
        if name == self.fault_target and tuple(sub.values()) == self.fault_sub and p.degree >= 2:
            image = list(p.image)
            image[0], image[1] = image[1], image[0]
            return Permutation._trusted(tuple(image))
        return p

    def result(self) -> tuple[int, dict[str, Any] | None]:
        if not self.failed:
            return self.checks, None
        name, expected, actual, sub = self.failed[0]
        record = {
            "suite": self.suite,
            "parameters": {**self.params, **sub},
            "check": name,
            "expected": expected,
            "actual": actual,
            "failed_checks": sorted({f[0] for f in self.failed}),
        }
        return self.checks, record


def _jsonable(v: Any) -> Any:
    if isinstance(v, Permutation):
        return list(v.image)
    if isinstance(v, (tuple, set, frozenset)):
        items = sorted(v) if isinstance(v, (set, frozenset)) else v
        return [_jsonable(x) for x in items]
    return v


def _odd_count(lo: int, hi: int) -> int:
    """Number of odd integers in ``[lo, hi]``."""
    if hi < lo:
        return 0
    return (hi + 1) // 2 - lo // 2


def _mult_sign(pt: _Point, factor: int, modulus: int, **sub: int) -> int:
    """Zolotarev symbol, routed through a permutation only when a fault targets it."""
    if pt.fault_target == "mult" and tuple(sub.values()) == pt.fault_sub:
        return sign_via_cycles(pt.perm("mult", multiplication_permutation(factor, modulus), **sub))
    return zolotarev_symbol(factor, modulus)


# -- suites ---------------------------------------------------------------------
# Each suite supplies: candidate count (closed form), the list of points to
# check plus a skip count, a per-point checker, and the check count per point.


def _gamma_points(b):
    return [(m, n) for m in range(1, b["max_m"] + 1) for n in range(1, b["max_n"] + 1)], 0


def _gamma_check(point, fault):
    m, n = point
    pt = _Point("gamma", {"m": m, "n": n}, fault)
    spec = GridSpec(m, n)
    g = pt.perm("gamma", deal_permutation(row_deal(spec), column_deal(spec)))
    formula = gamma_sign_formula(spec)
    brute = sign_via_inversions(g)
    if m % 2 and n % 2:
        # brute force must match both closed forms
        pt.check("sign=choose_formula=odd_formula", (formula, formula), (brute, gamma_sign_odd_formula(spec)))
    else:
        pt.check("sign=choose_formula", formula, brute)
    pt.check("cycle_sign=choose_formula", formula, sign_via_cycles(g))
    naive = count_inversions_naive(g)
    pt.check("inversions=below_left", (comb(m, 2) * comb(n, 2), naive), (gamma_inversion_pairs(spec), naive))
    return pt.result()


def _odd_coprime_points(b, lo=3):
    pts, skipped = [], 0
    for m in range(lo, b["max_m"] + 1, 2):
        for n in range(lo, b["max_n"] + 1, 2):
            if gcd(m, n) == 1:
                pts.append((m, n))
            else:
                skipped += 1
    return pts, skipped


def _odd_pair_candidates(b, lo=3):
    return _odd_count(lo, b["max_m"]) * _odd_count(lo, b["max_n"])


def _alpha_beta_check(point, fault):
    m, n = point
    pt = _Point("alpha_beta", {"m": m, "n": n}, fault)
    spec = GridSpec(m, n)
    R, C, D = row_deal(spec), column_deal(spec), diagonal_deal(spec)
    a = pt.perm("alpha", deal_permutation(R, D))
    b = pt.perm("beta", deal_permutation(D, C))
    g = deal_permutation(R, C)
    z_nm, z_mn = zolotarev_symbol(n, m), zolotarev_symbol(m, n)
    pt.check("sign_alpha=<n|m>", z_nm, sign_via_cycles(a))
    pt.check("sign_beta=<m|n>", z_mn, sign_via_cycles(b))
    pt.check_perm("beta*alpha=gamma", g, compose(b, a))
    pt.check("row_deal_closed_form", True, all(R[i, j] == n * i + j for i in range(m) for j in range(n)))
    pt.check(
        "diagonal_residue_law",
        True,
        all(D[i, j] % m == i and D[i, j] % n == j for i in range(m) for j in range(n)),
    )
    pt.check("alpha_column_stable", True, all(a.image[t] % n == t % n for t in range(m * n)))
    col_signs = []
    for j in range(n):
        rows = [a.image[n * i + j] // n for i in range(m)]
        try:
            col_signs.append(sign_via_cycles(Permutation(rows)))
        except ValueError:
            col_signs.append(0)
    pt.check("column_signs=<n|m>", [z_nm] * n, col_signs)
    pt.check_perm("alpha_inverse_closed_form", Permutation(n * (t % m) + t % n for t in range(m * n)), inverse(a))
    return pt.result()


def _reciprocity_check(point, fault):
    m, n = point
    pt = _Point("reciprocity_identity", {"m": m, "n": n}, fault)
    expected = -1 if ((m - 1) // 2) * ((n - 1) // 2) & 1 else 1
    pt.check("<m|n><n|m>=(-1)^((m-1)(n-1)/4)", expected, _mult_sign(pt, m, n) * zolotarev_symbol(n, m))
    return pt.result()


def _lemma_candidates(b):
    k = _odd_count(3, b["max_p"])
    return k


def _lemma_points(b):
    pts, skipped = [], 0
    for p in range(3, b["max_p"] + 1, 2):
        if is_prime(p):
            pts.append((p,))
        else:
            skipped += 1
    return pts, skipped


def _lemma_check(point, fault):
    (p,) = point
    pt = _Point("zolotarev_lemma", {"p": p}, fault)
    residues = set()
    for a in range(1, p):
        z = _mult_sign(pt, a, p, a=a)
        e = legendre_euler(a, p)
        pt.check("zolotarev=euler", e, z, a=a)
        pt.check("euler=bruteforce", legendre_bruteforce(a, p), e, a=a)
        if z == 1:
            residues.add(a)
    g = primitive_root(p)
    cycles = cycle_decomposition(multiplication_permutation(g, p))
    unit_cycles = [c for c in cycles if c != (0,)]
    pt.check(
        "primitive_root_single_cycle",
        (1, p - 1, -1),
        (len(unit_cycles), len(unit_cycles[0]), zolotarev_symbol(g, p)),
        g=g,
    )
    squares = {x * x % p for x in range(1, p)}
    pt.check("kernel=squares", squares, residues)
    return pt.result()


def _lemma_checks_for(point):
    (p,) = point
    return 2 * (p - 1) + 2


def _qr_points(b):
    odd = list(range(3, b["max_p"] + 1, 2))
    pts, skipped = [], 0
    for i, p in enumerate(odd):
        for q in odd[i + 1:]:
            if is_prime(p) and is_prime(q):
                pts.append((p, q))
            else:
                skipped += 1
    return pts, skipped


def _qr_candidates(b):
    return comb(_odd_count(3, b["max_p"]), 2)


def _qr_check(point, fault):
    p, q = point
    pt = _Point("quadratic_reciprocity", {"p": p, "q": q}, fault)
    expected = -1 if ((p - 1) // 2) * ((q - 1) // 2) & 1 else 1
    pt.check("(p|q)(q|p)", expected, legendre_euler(p, q) * legendre_euler(q, p))
    return pt.result()


def _supplement_points(b):
    return [(n,) for n in range(3, b["max_n"] + 1, 2)], 0


def _supplement_check(point, fault):
    (n,) = point
    pt = _Point("supplements", {"n": n}, fault)
    m = (n - 1) // 2
    R, C, Z, M = supplement_row_deal(n), supplement_column_deal(n), zigzag_deal(n), modified_zigzag_deal(n)
    alpha = pt.perm("zigzag", deal_permutation(R, Z))
    beta = pt.perm("zigzag_to_column", deal_permutation(Z, C))
    gamma = deal_permutation(R, C)
    delta = pt.perm("modified_zigzag", deal_permutation(R, M))
    # labels 1..n-1 are shifted to 0..n-2 inside permutations
    double = Permutation._trusted(tuple(2 * (x + 1) % n - 1 for x in range(n - 1)))
    negate = Permutation._trusted(tuple(n - (x + 1) - 1 for x in range(n - 1)))
    z2, zneg = zolotarev_symbol(2, n), zolotarev_symbol(-1, n)
    eighth = -1 if ((n * n - 1) // 8) & 1 else 1
    half = -1 if ((n - 1) // 2) & 1 else 1
    minus_one_m = -1 if m & 1 else 1

    pt.check("zigzag=swapped_column_deal", swap_rows(C).cells, Z.cells)
    pt.check_perm("zigzag_map=times_2", double, alpha)
    pt.check("sign_zigzag=<2|n>", z2, sign_via_cycles(alpha))
    pt.check("sign_zigzag_to_column=(-1)^m", minus_one_m, sign_via_cycles(beta))
    pt.check(
        "sign_chain=(-1)^((n^2-1)/8)",
        (eighth, eighth),
        (sign_via_cycles(beta) * sign_via_inversions(gamma), z2),
    )
    pt.check_perm("modified_zigzag_map=negation", negate, delta)
    pt.check("sign_modified_zigzag=(-1)^m=(-1)^((n-1)/2)", (minus_one_m, half, zneg), (sign_via_cycles(delta),) * 3)
    if is_prime(n):
        pt.check("legendre(2)=(-1)^((n^2-1)/8)", eighth, legendre_euler(2, n))
        pt.check("legendre(-1)=(-1)^((n-1)/2)", half, legendre_euler(-1, n))
    return pt.result()


def _supplement_checks_for(point):
    (n,) = point
    return 7 + (2 if is_prime(n) else 0)


def _jacobi_points(b):
    pts, skipped = [], 0
    for m in range(1, b["max_n"] + 1, 2):
        for n in range(1, b["max_n"] + 1, 2):
            if gcd(m, n) == 1:
                pts.append(("pair", m, n))
            else:
                skipped += 1
    for a in range(0, b["oracle_max"] + 1):
        for n in range(1, b["oracle_max"] + 2, 2):
            pts.append(("oracle", a, n))
    return pts, skipped


def _jacobi_candidates(b):
    return _odd_count(1, b["max_n"]) ** 2 + (b["oracle_max"] + 1) * _odd_count(1, b["oracle_max"] + 1)


def _jacobi_check(point, fault):
    kind, x, n = point
    if kind == "oracle":
        pt = _Point("jacobi_generalization", {"a": x, "n": n}, None)
        pt.check("reciprocity=factored", jacobi_factored(x, n), jacobi_reciprocity(x, n))
        return pt.result()
    m = x
    pt = _Point("jacobi_generalization", {"m": m, "n": n}, fault)
    z = _mult_sign(pt, m, n)
    jf = jacobi_factored(m, n)
    pt.check("zolotarev=jacobi_factored", jf, z)
    pt.check("jacobi_reciprocity=factored", jf, jacobi_reciprocity(m, n))
    expected = -1 if ((m - 1) // 2) * ((n - 1) // 2) & 1 else 1
    pt.check("jacobi_reciprocity_law", expected, jf * jacobi_factored(n, m))
    return pt.result()


def _jacobi_checks_for(point):
    return 1 if point[0] == "oracle" else 3


def _crt_points(b):
    pts, skipped = [], 0
    for m in range(1, b["max_m"] + 1):
        for n in range(1, b["max_n"] + 1):
            if gcd(m, n) == 1:
                pts.append((m, n))
            else:
                skipped += 1
    return pts, skipped


def _crt_check(point, fault):
    m, n = point
    pt = _Point("crt_structure", {"m": m, "n": n}, fault)
    spec = GridSpec(m, n)
    D = diagonal_deal(spec)
    pt.check("walk=residue_construction", diagonal_deal_by_residues(spec).cells, D.cells)
    pt.check(
        "card_at_(t mod m, t mod n)",
        True,
        all(D[t % m, t % n] == t == crt_card(t % m, t % n, m, n) for t in range(m * n)),
    )
    a = pt.perm("alpha", deal_permutation(row_deal(spec), D))
    pt.check_perm("alpha_inverse_closed_form", Permutation(n * (t % m) + t % n for t in range(m * n)), inverse(a))
    return pt.result()


@dataclass(frozen=True)
class _Suite:
    bounds: tuple[str, ...]
    candidates: Callable[[dict], int]
    points: Callable[[dict], tuple[list, int]]
    check: Callable
    checks_for: Callable[[tuple], int]


_SUITE_TABLE: dict[str, _Suite] = {
    "gamma": _Suite(("max_m", "max_n"), lambda b: b["max_m"] * b["max_n"], _gamma_points, _gamma_check, lambda p: 3),
    "alpha_beta": _Suite(("max_m", "max_n"), _odd_pair_candidates, _odd_coprime_points, _alpha_beta_check, lambda p: 8),
    "reciprocity_identity": _Suite(
        ("max_m", "max_n"), _odd_pair_candidates, _odd_coprime_points, _reciprocity_check, lambda p: 1
    ),
    "zolotarev_lemma": _Suite(("max_p",), _lemma_candidates, _lemma_points, _lemma_check, _lemma_checks_for),
    "quadratic_reciprocity": _Suite(("max_p",), _qr_candidates, _qr_points, _qr_check, lambda p: 1),
    "supplements": _Suite(
        ("max_n",), lambda b: _odd_count(3, b["max_n"]), _supplement_points, _supplement_check, _supplement_checks_for
    ),
    "jacobi_generalization": _Suite(
        ("max_n", "oracle_max"), _jacobi_candidates, _jacobi_points, _jacobi_check, _jacobi_checks_for
    ),
    "crt_structure": _Suite(
        ("max_m", "max_n"), lambda b: b["max_m"] * b["max_n"], _crt_points, _crt_check, lambda p: 3
    ),
}


def _run_suite(name: str, bounds: dict[str, int], parallelism: int = 1, fault: Fault | None = None) -> SweepReport:
    suite = _SUITE_TABLE[name]
    start = time.perf_counter()
    points, skipped = suite.points(bounds)
    faults = [fault] * len(points)
    if parallelism > 1 and len(points) > 1:
        chunk = max(1, len(points) // (parallelism * 8))
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(suite.check, points, faults, chunksize=chunk))
    else:
        results = list(map(suite.check, points, faults))

    report = SweepReport(suite=name, ranges=dict(bounds), points=len(points), skipped=skipped)
    for point, (checks, failure) in zip(points, results):
        report.checks_run += checks
        if failure is not None:
            report.failures.append(failure)
        expected_checks = suite.checks_for(point)
        if checks != expected_checks:
            report.failures.append(
                {
                    "suite": name,
                    "parameters": {"point": list(point)},
                    "check": "audit:checks_per_point",
                    "expected": expected_checks,
                    "actual": checks,
                    "failed_checks": ["audit:checks_per_point"],
                }
            )
    candidates = suite.candidates(bounds)
    if report.points + report.skipped != candidates:
        report.failures.append(
            {
                "suite": name,
                "parameters": dict(bounds),
                "check": "audit:candidates",
                "expected": candidates,
                "actual": report.points + report.skipped,
                "failed_checks": ["audit:candidates"],
            }
        )
    report.elapsed = time.perf_counter() - start
    return report


def verify_gamma(max_m: int, max_n: int, **kw) -> SweepReport:
    return _run_suite("gamma", {"max_m": max_m, "max_n": max_n}, **kw)


def verify_alpha_beta(max_m: int, max_n: int, **kw) -> SweepReport:
    return _run_suite("alpha_beta", {"max_m": max_m, "max_n": max_n}, **kw)


def verify_reciprocity_identity(max_m: int, max_n: int, **kw) -> SweepReport:
    return _run_suite("reciprocity_identity", {"max_m": max_m, "max_n": max_n}, **kw)


def verify_zolotarev_lemma(max_p: int, **kw) -> SweepReport:
    return _run_suite("zolotarev_lemma", {"max_p": max_p}, **kw)


def verify_quadratic_reciprocity(max_p: int, **kw) -> SweepReport:
    return _run_suite("quadratic_reciprocity", {"max_p": max_p}, **kw)


def verify_supplements(max_n: int, **kw) -> SweepReport:
    return _run_suite("supplements", {"max_n": max_n}, **kw)


def verify_jacobi_generalization(max_n: int, oracle_max: int | None = None, **kw) -> SweepReport:
    """Zolotarev vs. Jacobi on odd coprime pairs up to ``max_n``, plus a
    reciprocity-vs-factored sweep over ``0 <= a <= oracle_max`` and odd
    ``n <= oracle_max + 1`` (default ``oracle_max = max_n``)."""
    if oracle_max is None:
        oracle_max = max_n
    return _run_suite("jacobi_generalization", {"max_n": max_n, "oracle_max": oracle_max}, **kw)


def verify_crt_structure(max_m: int, max_n: int, **kw) -> SweepReport:
    return _run_suite("crt_structure", {"max_m": max_m, "max_n": max_n}, **kw)


def _suite_bounds(name: str, config: SweepConfig) -> dict[str, int]:
    avail = {
        "max_m": config.max_m,
        "max_n": config.max_n,
        "max_p": config.max_p,
        "oracle_max": config.max_n if config.oracle_max is None else config.oracle_max,
    }
    return {k: avail[k] for k in _SUITE_TABLE[name].bounds}


def run_suite(config: SweepConfig, fault: Fault | None = None) -> SweepReport:
    if config.suite == "all":
        return run_all(config, fault=fault)
    return _run_suite(config.suite, _suite_bounds(config.suite, config), config.parallelism, fault)


def run_all(config: SweepConfig, fault: Fault | None = None) -> SweepReport:
    start = time.perf_counter()
    subs = [_run_suite(name, _suite_bounds(name, config), config.parallelism, fault) for name in SUITES]
    return SweepReport(
        suite="all",
        ranges={"max_m": config.max_m, "max_n": config.max_n, "max_p": config.max_p},
        checks_run=sum(s.checks_run for s in subs),
        points=sum(s.points for s in subs),
        skipped=sum(s.skipped for s in subs),
        failures=[f for s in subs for f in s.failures],
        elapsed=time.perf_counter() - start,
        suites=subs,
    )

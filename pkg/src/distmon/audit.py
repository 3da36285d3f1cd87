"""Cross-check harness tying the census to the formulas and structural guarantees.

Every check compares an independently computed expectation against brute
force and is reported as a record; the harness never repairs a mismatch,
it only reports it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .analysis import (
    ap_profile,
    arch_complexity,
    arch_complexity_naive,
    decompose,
    idempotents,
)
from .builders import enumerate_complexity2
from .census import MAGMA_GUARD, CensusResult, SearchConfig, enumerate_tables
from .errors import scale_override_active
from .formulas import bell, dm_n_2, dm_near_top, lower_bound
from .robbins import ROBBINS_NUMBERS

DEEP_N = 9
DEEP_K = 2


@dataclass(frozen=True)
class CheckRecord:
    name: str
    parameters: dict
    expected: str
    actual: str
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "check": self.name,
            "parameters": self.parameters,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class AuditReport:
    records: tuple[CheckRecord, ...]

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> tuple[CheckRecord, ...]:
        return tuple(r for r in self.records if not r.passed)

    def to_json_dict(self) -> dict:
        return {
            "overall_pass": self.overall,
            "checks": [r.to_json_dict() for r in self.records],
        }


def run_audit(
    n_max: int,
    deep: bool = False,
    jobs: int = 1,
    scale_override: bool = False,
    census_hook: Callable[[CensusResult], CensusResult] | None = None,
) -> AuditReport:
    """Run the full battery of cross-checks up to n_max.

    census_hook is a test seam: it may transform each census result before
    the checks see it, so the harness itself can be shown to catch faults.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    records: list[CheckRecord] = []

    def add(name: str, parameters: dict, expected, actual) -> None:
        records.append(
            CheckRecord(name, parameters, str(expected), str(actual), str(expected) == str(actual))
        )

    def census(n: int, want_magmas: bool = False) -> CensusResult:
        result = enumerate_tables(
            SearchConfig(
                n=n,
                want_magmas=want_magmas,
                emit=not want_magmas,
                job_count=jobs if n >= 6 else 1,
                scale_override=scale_override,
            )
        )
        if census_hook is not None:
            result = census_hook(result)
        return result

    monoid_census = {n: census(n) for n in range(1, n_max + 1)}

    # (a) complexity-2 stratum vs formula vs Bell
    for n in range(2, n_max + 1):
        add(
            "dm2-census-vs-formula",
            {"n": n},
            dm_n_2(n),
            monoid_census[n].by_arch.get(2, 0),
        )
        add("dm2-formula-vs-bell", {"n": n}, bell(n) - 1, dm_n_2(n))

    # (b) complexity n-1 stratum vs 2n-2
    for n in range(3, n_max + 1):
        add(
            "near-top-1-vs-census",
            {"n": n},
            dm_near_top(n, 1),
            monoid_census[n].by_arch.get(n - 1, 0),
        )

    # (c) magma counts vs stored Robbins constants
    magma_top = n_max
    if not (scale_override or scale_override_active()):
        magma_top = min(n_max, MAGMA_GUARD)
    for n in range(1, magma_top + 1):
        add(
            "magma-count-vs-robbins",
            {"n": n},
            ROBBINS_NUMBERS[n],
            census(n, want_magmas=True).magma_count,
        )

    # (d) fast arch vs chain-enumeration oracle, exhaustive for small n
    for n in range(1, min(n_max, 5) + 1):
        mismatches = sum(
            1
            for t in monoid_census[n].emitted
            if arch_complexity(t) != arch_complexity_naive(t)
        )
        add("arch-dp-vs-naive", {"n": n}, 0, mismatches)

    # (e) progressions of length n-1 in every complexity n-1 monoid
    for n in range(5, n_max + 1):
        stratum = [t for t in monoid_census[n].emitted if arch_complexity(t) == n - 1]
        missing = sum(1 for t in stratum if ap_profile(t).longest < n - 1)
        add(
            "long-progression-guarantee",
            {"n": n, "stratum_size": len(stratum)},
            0,
            missing,
        )

    # (f) structured complexity-2 enumeration vs census stratum, both ways
    for n in range(2, min(n_max, 6) + 1):
        built = set(enumerate_complexity2(n))
        stratum = {t for t in monoid_census[n].emitted if arch_complexity(t) == 2}
        add(
            "complexity2-bijection",
            {"n": n},
            "built == census stratum",
            "built == census stratum"
            if built == stratum
            else f"built-only={len(built - stratum)} census-only={len(stratum - built)}",
        )

    # (g) lower-bound sandwich: C(n-2, k) <= census count at complexity n-k
    for n in range(5, n_max + 1):
        for k in range(1, min(3, n - 2) + 1):
            bound = lower_bound(n, k)
            actual = monoid_census[n].by_arch.get(n - k, 0)
            add(
                "lower-bound-sandwich",
                {"n": n, "k": k},
                f"count >= {bound}",
                f"count >= {bound}" if actual >= bound else f"count = {actual} < {bound}",
            )

    # (h) class decomposition agrees with idempotent splitting, per monoid
    for n in range(1, n_max + 1):
        bad = 0
        for t in monoid_census[n].emitted:
            try:
                dec = decompose(t)  # asserts the two splittings agree
            except AssertionError:
                bad += 1
                continue
            if dec.class_count != len(idempotents(t)):
                bad += 1
        add("class-splitting-agreement", {"n": n}, 0, bad)

    # (i) the one formula nothing smaller can reach: complexity n-2 at n = 9
    if deep:
        deep_census = enumerate_tables(
            SearchConfig(n=DEEP_N, job_count=jobs, scale_override=True)
        )
        if census_hook is not None:
            deep_census = census_hook(deep_census)
        add(
            "deep-near-top-2-vs-census",
            {"n": DEEP_N, "k": DEEP_K},
            dm_near_top(DEEP_N, DEEP_K),
            deep_census.by_arch.get(DEEP_N - DEEP_K, 0),
        )

    return AuditReport(tuple(records))

"""Batch verification suites and their JSON reports."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import __version__
from .alternating import an23_search, block_witness_an, non_vanishing_sweep
from .blocks import an_blocks, blocks_of
from .characters import degree, mn_value
from .partitions import (
    cores_of_size,
    format_partition,
    p_power_partitions,
    partitions_of,
    valuation,
)
from .sylow import BRUTE_FORCE_CAP, census, census_brute_force, class_size, perm_char_value, sylow_order
from .virtual import block_witness_sn, gdc_check, pprime_mult_check, sbc

THREADS_ENV = "SYLOWBRANCH_THREADS"

# caught per case and reported as a failing record
CASE_ERRORS = (AssertionError, ArithmeticError, ValueError, LookupError)


def thread_count() -> int:
    """Worker threads from SYLOWBRANCH_THREADS: unset means 1, 0 means one per CPU."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    n = int(raw)
    return (os.cpu_count() or 1) if n == 0 else max(1, n)


def ordered_map(fn: Callable, items: Sequence, threads: int | None = None) -> list:
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


@dataclass
class VerificationReport:
    suite: str
    parameters: dict[str, Any]
    records: list[dict[str, Any]] = field(default_factory=list)
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.records)

    def summary(self) -> dict[str, int]:
        ok = sum(1 for r in self.records if r["pass"])
        return {"total": len(self.records), "passed": ok, "failed": len(self.records) - ok}

    def to_json(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "suite": self.suite,
            "version": __version__,
            "parameters": self.parameters,
            "records": self.records,
            "summary": self.summary(),
            "pass": self.passed,
        }
        if timing and self.wall_time is not None:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out


def _guarded(fn: Callable[[Any], dict], describe: Callable[[Any], dict]) -> Callable[[Any], dict]:
    def run(case):
        try:
            rec = fn(case)
        except CASE_ERRORS as exc:
            rec = dict(describe(case))
            rec["pass"] = False
            rec["error"] = f"{type(exc).__name__}: {exc}"
        return rec

    return run


def _run(suite: str, params: dict, cases: list, fn, describe) -> VerificationReport:
    start = time.perf_counter()
    records = ordered_map(_guarded(fn, describe), cases)
    return VerificationReport(suite, params, records, time.perf_counter() - start)


# -- individual suites --------------------------------------------------------

def suite_gdc(max_m: int = 7, max_e: int = 5) -> VerificationReport:
    cases = [(lam, e) for m in range(max_m + 1) for lam in partitions_of(m) for e in range(1, max_e + 1)]

    def describe(case):
        return {"lambda": format_partition(case[0]), "e": case[1]}

    def check(case):
        lam, e = case
        return {**describe(case), "classes": gdc_check(lam, e), "pass": True}

    return _run("gdc", {"max_m": max_m, "max_e": max_e}, cases, check, describe)


DEFAULT_PPRIME_MAX_N = {2: 18, 3: 18, 5: 20}


def suite_pprime_mult(primes: Iterable[int] = (2, 3, 5), max_n: int | None = None) -> VerificationReport:
    primes = tuple(primes)
    limits = {p: max_n if max_n is not None else DEFAULT_PPRIME_MAX_N.get(p, 20) for p in primes}
    cases = [
        (p, core, n)
        for p in primes
        for n in range(limits[p] + 1)
        for m in range(n + 1)
        if (n - m) % p == 0
        for core in cores_of_size(m, p)
    ]

    def describe(case):
        p, core, n = case
        return {"p": p, "core": format_partition(core), "n": n}

    def check(case):
        p, core, n = case
        return pprime_mult_check(core, n, p).to_json()

    params = {"primes": list(primes), "max_n": {str(p): limits[p] for p in primes}}
    return _run("pprime-mult", params, cases, check, describe)


def suite_block_witnesses_sn(ns: Iterable[int] = range(16), primes: Iterable[int] = (2, 3, 5)) -> VerificationReport:
    ns, primes = list(ns), list(primes)
    cases = [b for p in primes for n in ns for b in blocks_of(n, p)]

    def describe(block):
        return {"block": block.to_json()}

    def check(block):
        w = block_witness_sn(block)
        ok = w.record.coprime and (block.w == 0 or w.from_v_support)
        return {**w.to_json(), "pass": ok}

    return _run("theorem-b-sn", {"n": ns, "primes": primes}, cases, check, describe)


def suite_block_witnesses_an(ns: Iterable[int] = range(2, 13), primes: Iterable[int] = (2, 3, 5)) -> VerificationReport:
    ns, primes = [n for n in ns if n >= 2], list(primes)
    cases = [b for p in primes for n in ns for b in an_blocks(n, p)]

    def describe(block):
        return {"group": "An", "block": block.to_json()}

    def check(block):
        w = block_witness_an(block)
        return {**w.to_json(), "pass": w.z % block.p != 0}

    return _run("theorem-b-an", {"n": ns, "primes": primes}, cases, check, describe)


def suite_nonvanishing(
    sn_ns: Iterable[int] = range(15), an_ns: Iterable[int] = range(2, 13), primes: Iterable[int] = (2, 3, 5)
) -> VerificationReport:
    sn_ns, an_ns, primes = list(sn_ns), [n for n in an_ns if n >= 2], list(primes)
    cases = [("Sn", n, p) for p in primes for n in sn_ns] + [("An", n, p) for p in primes for n in an_ns]

    def describe(case):
        group, n, p = case
        return {"group": group, "n": n, "p": p}

    def check(case):
        group, n, p = case
        return non_vanishing_sweep(n, p, group).to_json()

    params = {"sn_n": sn_ns, "an_n": an_ns, "primes": primes}
    return _run("nonvanishing", params, cases, check, describe)


def suite_an23(ns: Iterable[int] = range(5, 31), primes: Iterable[int] = (2, 3)) -> VerificationReport:
    ns, primes = list(ns), list(primes)
    cases = [(n, p) for p in primes for n in ns]

    def describe(case):
        return {"n": case[0], "p": case[1]}

    def check(case):
        return {**an23_search(*case).to_json(), "pass": True}

    return _run("an23", {"n": ns, "primes": primes}, cases, check, describe)


def suite_class_valuations(max_n: int = 20, primes: Iterable[int] = (2, 3, 5)) -> VerificationReport:
    primes = list(primes)
    cases = [(n, p) for p in primes for n in range(max_n + 1)]

    def describe(case):
        return {"n": case[0], "p": case[1]}

    def check(case):
        n, p = case
        cen = census(n, p)
        problems = []
        if sum(cen.counts.values()) != cen.group_order:
            problems.append("census does not sum to the group order")
        for mu in p_power_partitions(n, p):
            count = cen[mu]
            if valuation(count, p) != valuation(class_size(mu), p):
                problems.append(f"valuation mismatch at {format_partition(mu)}")
            value = perm_char_value(n, p, mu)
            if value % p == 0:
                problems.append(f"(1_P)^G({format_partition(mu)}) = {value} divisible by p")
        return {**describe(case), "types": len(cen.counts), "failures": problems, "pass": not problems}

    return _run("lemma-iv", {"max_n": max_n, "primes": primes}, cases, check, describe)


def suite_defect_zero_restriction(max_n: int = 16, primes: Iterable[int] = (2, 3, 5)) -> VerificationReport:
    primes = list(primes)
    cases = [(n, p, lam) for p in primes for n in range(max_n + 1) for lam in cores_of_size(n, p)]

    def describe(case):
        n, p, lam = case
        return {"n": n, "p": p, "lambda": format_partition(lam)}

    def check(case):
        n, p, lam = case
        nonzero = [
            format_partition(mu) for mu in p_power_partitions(n, p)
            if any(x > 1 for x in mu) and mn_value(lam, mu) != 0
        ]
        order = sylow_order(n, p)
        f, r = divmod(degree(lam), order)
        z = sbc(lam, p).z
        ok = not nonzero and r == 0 and f == z and f % p != 0
        return {**describe(case), "Z": str(z), "nonzero_types": nonzero, "pass": ok}

    return _run("defect-zero-restriction", {"max_n": max_n, "primes": primes}, cases, check, describe)


def census_oracle_cases(primes: Iterable[int], cap: int = BRUTE_FORCE_CAP) -> list[tuple[int, int]]:
    cases = []
    for p in primes:
        n = 0
        while sylow_order(n, p) <= cap:
            cases.append((n, p))
            n += 1
    return cases


def suite_census_oracle(primes: Iterable[int] = (2, 3, 5), cap: int = BRUTE_FORCE_CAP) -> VerificationReport:
    primes = list(primes)
    cases = census_oracle_cases(primes, cap)

    def describe(case):
        return {"n": case[0], "p": case[1]}

    def check(case):
        n, p = case
        fast, slow = census(n, p), census_brute_force(n, p, cap)
        return {
            **describe(case),
            "order": str(fast.group_order),
            "types": len(fast.counts),
            "pass": fast.counts == slow.counts and fast.group_order == slow.group_order,
        }

    return _run("census-oracle", {"primes": primes, "cap": cap}, cases, check, describe)


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "gdc": suite_gdc,
    "pprime-mult": suite_pprime_mult,
    "theorem-b-sn": suite_block_witnesses_sn,
    "theorem-b-an": suite_block_witnesses_an,
    "nonvanishing": suite_nonvanishing,
    "an23": suite_an23,
    "lemma-iv": suite_class_valuations,
    "defect-zero-restriction": suite_defect_zero_restriction,
    "census-oracle": suite_census_oracle,
}

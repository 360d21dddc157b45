"""Theorem/oracle equivalence sweeps.

Each suite compares a closed-form operation against an independent oracle
(brute-force powering, Berkowitz, exhaustive search) on every parameter
tuple up to a size bound.  Operations are looked up through a table so a
test harness can substitute a mutated one and watch the sweep fail.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import asm, enumerate as enum_mod, poly, theorems
from .forms import FINITE_TYPES, INFINITE_TYPES, PTType, parameter_tuples, standard_matrix
from .graph import classify_matrix
from .matrix import is_permutation_matrix
from .order import brute_force_order, possible_gl_orders

MIN_MAX_N, MAX_MAX_N = 4, 12

# Every operation the sweep must exercise at least once per run.
THEOREM_OPERATIONS = (
    "two_adic",
    "type1_order",
    "type1_charpoly",
    "type2b_charpoly",
    "type2c_order",
    "type2d_order",
    "type3c_order",
    "asm_permutable_theorem",
    "enumerate_finite_order",
    "exotic_orders",
)


def default_operations() -> dict[str, Callable]:
    return {
        "two_adic": poly.two_adic,
        "type1_order": theorems.type1_order,
        "type1_charpoly": theorems.type1_charpoly,
        "type2b_charpoly": theorems.type2b_charpoly,
        "type2c_order": theorems.type2c_order,
        "type2d_order": theorems.type2d_order,
        "type3c_order": theorems.type3c_order,
        "asm_permutable_theorem": asm.asm_permutable_theorem,
        "enumerate_finite_order": enum_mod.enumerate_finite_order,
        "exotic_orders": enum_mod.exotic_orders,
    }


ORDER_OPS = {
    PTType.TYPE1: "type1_order",
    PTType.TYPE2C: "type2c_order",
    PTType.TYPE2D: "type2d_order",
    PTType.TYPE3C: "type3c_order",
}


@dataclass
class SuiteResult:
    name: str
    n: int
    checked: int = 0
    cells: list[tuple] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)
    calls: Counter = field(default_factory=Counter)


class _Ops:
    """Operation table that counts every call."""

    def __init__(self, table: dict[str, Callable], calls: Counter):
        self._table = table
        self._calls = calls

    def __getattr__(self, name: str) -> Callable:
        fn = self._table[name]

        def counted(*args, **kwargs):
            self._calls[name] += 1
            return fn(*args, **kwargs)

        return counted


def _two_adic_oracle(t: int) -> int:
    out = 1
    while t % 2 == 0:
        t //= 2
        out *= 2
    return out


def suite_orders(n: int, ops: _Ops, res: SuiteResult) -> None:
    bound = max(possible_gl_orders(n))
    for tag in FINITE_TYPES:
        predicate = getattr(ops, ORDER_OPS[tag])
        for params in parameter_tuples(tag, n):
            expected = brute_force_order(standard_matrix(tag, params), bound)
            got = predicate(*params)
            res.checked += 1
            res.cells.append((tag.value, params))
            if got != expected:
                res.discrepancies.append(f"{tag.value} {params}: theorem {got}, brute force {expected}")


def suite_negative(n: int, ops: _Ops, res: SuiteResult) -> None:
    if n > 8:
        return
    bound = max(possible_gl_orders(n))
    for tag in INFINITE_TYPES:
        for params in parameter_tuples(tag, n):
            a = standard_matrix(tag, params)
            if is_permutation_matrix(a):
                continue
            res.checked += 1
            res.cells.append((tag.value, params))
            got = brute_force_order(a, bound)
            if got is not None:
                res.discrepancies.append(f"{tag.value} {params}: finite order {got}")


def suite_charpoly(n: int, ops: _Ops, res: SuiteResult) -> None:
    for d in range(1, n // 2 + 1):
        for j1 in range(1, n + 1):
            for j2 in range(1, n + 1):
                if j1 == j2:
                    continue
                a = standard_matrix(PTType.TYPE1, (n, d, j1, j2))
                res.checked += 1
                if ops.type1_charpoly(n, j1, j2, d) != poly.char_poly(a):
                    res.discrepancies.append(f"type1_charpoly {(n, j1, j2, d)}")
    for params in parameter_tuples(PTType.TYPE2B, n):
        a = standard_matrix(PTType.TYPE2B, params)
        res.checked += 1
        if ops.type2b_charpoly(*params) != poly.char_poly(a):
            res.discrepancies.append(f"type2b_charpoly {params}")
    for t in range(1, 4 * n + 1):
        res.checked += 1
        if ops.two_adic(t) != _two_adic_oracle(t):
            res.discrepancies.append(f"two_adic {t}")


def suite_enumeration(n: int, ops: _Ops, res: SuiteResult) -> None:
    records = ops.enumerate_finite_order(n)
    for rec in records:
        res.checked += 1
        res.cells.append((rec.type_tag.value, rec.params))
        if not enum_mod.check_record(rec):
            res.discrepancies.append(f"record {rec.type_tag.value} {rec.params}: order engine disagrees")
        if n <= asm.MAX_SEARCH_N - 1:
            theorem = ops.asm_permutable_theorem(classify_matrix(rec.standard_matrix))
            found = asm.find_asm_ordering(rec.standard_matrix) is not None
            if theorem != found:
                res.discrepancies.append(
                    f"asm {rec.type_tag.value} {rec.params}: theorem {theorem}, search {found}"
                )
    exotic = ops.exotic_orders(n)
    perm = set(enum_mod.permutation_orders(n))
    expected = sorted({r.order for r in records} - perm)
    res.checked += 1
    if exotic != expected:
        res.discrepancies.append(f"exotic_orders({n}) = {exotic}, expected {expected}")


SUITES = {
    "orders": suite_orders,
    "negative": suite_negative,
    "charpoly": suite_charpoly,
    "enumeration": suite_enumeration,
}


def _run_task(task: tuple[str, int, dict[str, Callable] | None]) -> SuiteResult:
    name, n, overrides = task
    table = default_operations()
    if overrides:
        table.update(overrides)
    res = SuiteResult(name, n)
    SUITES[name](n, _Ops(table, res.calls), res)
    return res


@dataclass
class VerificationReport:
    max_n: int
    suites: list[SuiteResult]
    calls: Counter
    missing: list[str]

    @property
    def discrepancies(self) -> list[str]:
        return [f"[{s.name} n={s.n}] {d}" for s in self.suites for d in s.discrepancies]

    @property
    def ok(self) -> bool:
        return not self.discrepancies and not self.missing

    def cells(self, suite: str) -> set[tuple]:
        return {c for s in self.suites if s.name == suite for c in s.cells}

    def summary_lines(self) -> list[str]:
        lines = []
        for name in SUITES:
            rows = [s for s in self.suites if s.name == name]
            checked = sum(s.checked for s in rows)
            bad = sum(len(s.discrepancies) for s in rows)
            lines.append(f"{name}: {checked} checks, {bad} discrepancies")
        lines.extend(self.discrepancies)
        if self.missing:
            lines.append("coverage: operations never exercised: " + ", ".join(self.missing))
        lines.append("OK" if self.ok else "FAILED")
        return lines


def run_verification(
    max_n: int = 10,
    jobs: int = 1,
    overrides: dict[str, Callable] | None = None,
) -> VerificationReport:
    """Run every suite for 2 <= n <= max_n and collect discrepancies and coverage."""
    if not MIN_MAX_N <= max_n <= MAX_MAX_N:
        raise ValueError(f"max_n must lie in {MIN_MAX_N}..{MAX_MAX_N}")
    unknown = set(overrides or ()) - set(THEOREM_OPERATIONS)
    if unknown:
        raise ValueError(f"unknown operations: {sorted(unknown)}")
    tasks = [(name, n, overrides) for n in range(2, max_n + 1) for name in SUITES]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    calls: Counter = Counter()
    for r in results:
        calls.update(r.calls)
    missing = [op for op in THEOREM_OPERATIONS if not calls[op]]
    return VerificationReport(max_n, results, calls, missing)

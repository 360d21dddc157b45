"""Exhaustive enumeration of finite-order elementary PT-matrices of a given size."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .asm import asm_permutable_theorem
from .forms import FINITE_TYPES, PTType, parameter_tuples, standard_matrix
from .graph import classify_matrix
from .matrix import IntMatrix, format_matrix
from .order import finite_order, permutation_orders
from .theorems import type1_order, type2c_order, type2d_order, type3c_order

MIN_N, MAX_N = 2, 14

PREDICATES = {
    PTType.TYPE1: type1_order,
    PTType.TYPE2C: type2c_order,
    PTType.TYPE2D: type2d_order,
    PTType.TYPE3C: type3c_order,
}


@dataclass(frozen=True)
class FiniteOrderRecord:
    type_tag: PTType
    params: tuple[int, ...]
    standard_matrix: IntMatrix
    order: int
    exotic: bool
    asm_permutable: bool

    @property
    def n(self) -> int:
        return self.standard_matrix.n

    def to_json(self) -> dict:
        return {
            "type": self.type_tag.value,
            "params": [str(p) for p in self.params],
            "n": str(self.n),
            "order": str(self.order),
            "exotic": self.exotic,
            "asm_permutable": self.asm_permutable,
            "matrix": [[str(x) for x in row] for row in self.standard_matrix.rows],
        }

    def csv_row(self) -> list[str]:
        return [
            self.type_tag.value,
            " ".join(str(p) for p in self.params),
            str(self.n),
            str(self.order),
            str(self.exotic).lower(),
            str(self.asm_permutable).lower(),
        ]


CSV_HEADER = ["type", "params", "n", "order", "exotic", "asm_permutable"]


def canonical_key(tag: PTType, a: IntMatrix) -> tuple:
    """(type, smallest parameter tuple of the matrix and its transpose)."""
    here = classify_matrix(a).elementary.params
    there = classify_matrix(a.transpose()).elementary.params
    return (tag.value, min(here, there))


def _check_n(n: int) -> None:
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"enumeration supports {MIN_N} <= n <= {MAX_N}, got {n}")


def _records_of_type(tag: PTType, n: int) -> list[tuple[tuple, FiniteOrderRecord]]:
    perm = set(permutation_orders(n))
    out = []
    for params in parameter_tuples(tag, n):
        order = PREDICATES[tag](*params)
        if order is None:
            continue
        a = standard_matrix(tag, params)
        c = classify_matrix(a)
        rec = FiniteOrderRecord(
            type_tag=tag,
            params=params,
            standard_matrix=a,
            order=order,
            exotic=order not in perm,
            asm_permutable=asm_permutable_theorem(c),
        )
        out.append((canonical_key(tag, a), rec))
    return out


def _job(args: tuple[PTType, int]):
    return _records_of_type(*args)


def enumerate_finite_order(n: int, jobs: int = 1) -> list[FiniteOrderRecord]:
    """Finite-order elementary PT-matrices of size n, one per conjugacy/transpose class.

    Records are ordered by type and canonical key; for each class the
    first parameter tuple in iteration order is kept.
    """
    _check_n(n)
    tasks = [(tag, n) for tag in FINITE_TYPES]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_job, tasks))
    else:
        chunks = [_job(t) for t in tasks]
    seen: dict[tuple, FiniteOrderRecord] = {}
    for chunk in chunks:
        for key, rec in chunk:
            seen.setdefault(key, rec)
    type_rank = {tag.value: i for i, tag in enumerate(FINITE_TYPES)}
    keys = sorted(seen, key=lambda k: (type_rank[k[0]], k[1]))
    return [seen[k] for k in keys]


def exotic_orders(n: int) -> list[int]:
    """Orders of finite-order PT-matrices of size n that no permutation of n points has."""
    perm = set(permutation_orders(n))
    return sorted({r.order for r in enumerate_finite_order(n)} - perm)


def check_record(rec: FiniteOrderRecord) -> bool:
    """Cross-module consistency: the algebraic order engine agrees with the theorem."""
    res = finite_order(rec.standard_matrix)
    return res.finite and res.order == rec.order


def describe(rec: FiniteOrderRecord) -> str:
    return f"type {rec.type_tag.value} {rec.params} order {rec.order}\n{format_matrix(rec.standard_matrix)}"

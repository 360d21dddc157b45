"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even
when output capture is on) or directly as ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time

import pytest

from ptasm.asm import asm_permutable_theorem, find_asm_ordering
from ptasm.enumerate import enumerate_finite_order, exotic_orders
from ptasm.fixtures import CYCLE10_ORDER40, CYCLE10_ORDER60, EXAMPLE_ORDER6, ORDER16_PT, TWO_T_BLOCKS_ORDER12
from ptasm.forms import FINITE_TYPES, INFINITE_TYPES, PTType, parameter_tuples, standard_matrix
from ptasm.graph import build_graph, classify_matrix, signed_walk_counts
from ptasm.matrix import (
    IntMatrix,
    Permutation,
    block_upper,
    conjugate,
    decompose_pt,
    enumerate_asms,
    is_asm,
    is_permutation_matrix,
    mat_pow,
    permutation_matrix,
)
from ptasm.order import block_diagonalizable, brute_force_order, finite_order, permutation_orders, possible_gl_orders
from ptasm.poly import (
    ONE,
    X,
    IntPolynomial,
    binomial_gcd,
    char_poly,
    cyclotomic,
    divisors,
    poly_from_factors,
    poly_gcd,
)
from ptasm.theorems import type1_charpoly, type1_order, type2b_charpoly, type2c_order, type2d_order, type3c_order

PREDICATES = {
    PTType.TYPE1: type1_order,
    PTType.TYPE2C: type2c_order,
    PTType.TYPE2D: type2d_order,
    PTType.TYPE3C: type3c_order,
}


_capture = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


def _emit(line: str) -> None:
    if _capture is None:
        print(line)
        return
    with _capture.disabled():
        print("\n" + line if line.startswith("criterion") else line)


def report(number: int, title: str, failures: list[str], detail: str = "") -> None:
    status = "PASS" if not failures else "FAIL"
    text = f"criterion {number} [{status}] {title}"
    if detail:
        text += f" ({detail})"
    _emit(text)
    for f in failures[:10]:
        _emit(f"    {f}")
    assert not failures, failures[:10]


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_golden_values():
    failures = []
    slow = []

    def check(name, fn, limit=1.0):
        ok, dt = _timed(fn)
        if not ok:
            failures.append(f"{name}: wrong value")
        if dt >= limit:
            slow.append(f"{name}: {dt:.2f}s")

    def example():
        r = finite_order(EXAMPLE_ORDER6)
        cp = (X - ONE) ** 2 * (X + ONE) * (X * X - X + ONE)
        mp = (X - ONE) * (X + ONE) * (X * X - X + ONE)
        return r.order == 6 and r.char_poly == cp and r.min_poly == mp and mat_pow(EXAMPLE_ORDER6, 6).is_identity()

    def order40():
        return finite_order(CYCLE10_ORDER40).order == 40

    def order60():
        return finite_order(CYCLE10_ORDER60).order == 60

    def order16():
        sigma = find_asm_ordering(ORDER16_PT)
        return finite_order(ORDER16_PT).order == 16 and sigma is not None and is_asm(conjugate(ORDER16_PT, sigma))

    def order12():
        r = finite_order(TWO_T_BLOCKS_ORDER12)
        mp = (X - ONE) * (X ** 4 - X ** 2 + ONE)
        not_pt = decompose_pt(TWO_T_BLOCKS_ORDER12) is None
        return r.order == 12 and r.min_poly == mp and not_pt

    for name, fn in [("example order 6", example), ("C10+T(1,9,6,1) order 40", order40),
                     ("C10+T(1,8,6,2) order 60", order60), ("order-16 matrix with ASM witness", order16),
                     ("two-T-block matrix order 12, not PT", order12)]:
        check(name, fn)
    report(1, "golden values", failures + slow, "5 checks, each under 1 s")


def test_criterion_2_order_menus():
    failures = []
    if possible_gl_orders(5) != [1, 2, 3, 4, 5, 6, 8, 10, 12]:
        failures.append(f"possible_gl_orders(5) = {possible_gl_orders(5)}")
    if permutation_orders(5) != [1, 2, 3, 4, 5, 6]:
        failures.append(f"permutation_orders(5) = {permutation_orders(5)}")
    ex = exotic_orders(10)
    if not {16, 40, 60} <= set(ex):
        failures.append(f"exotic_orders(10) = {ex}")
    report(2, "order menus", failures, f"exotic_orders(10) = {ex}")


def test_criterion_3_theorem_oracle_agreement():
    failures = []
    count = 0
    for n in range(2, 11):
        bound = max(possible_gl_orders(n))
        for tag in FINITE_TYPES:
            for params in parameter_tuples(tag, n):
                count += 1
                expected = brute_force_order(standard_matrix(tag, params), bound)
                got = PREDICATES[tag](*params)
                if got != expected:
                    failures.append(f"{tag.value} {params}: theorem {got}, brute force {expected}")
    report(3, "closed-form orders match brute force, n <= 10", failures, f"{count} tuples")


def test_criterion_4_negative_taxonomy():
    failures = []
    count = 0
    for n in range(2, 9):
        bound = max(possible_gl_orders(n))
        for tag in INFINITE_TYPES:
            for params in parameter_tuples(tag, n):
                a = standard_matrix(tag, params)
                if is_permutation_matrix(a):
                    continue
                count += 1
                got = brute_force_order(a, bound)
                if got is not None:
                    failures.append(f"{tag.value} {params}: order {got}")
    report(4, "types 2a/2b/3a/3b/4 never have finite order, n <= 8", failures, f"{count} matrices")


def test_criterion_5_formula_validation():
    failures = []
    count = 0
    for n in range(2, 11):
        for d in range(1, n // 2 + 1):
            for j1, j2 in itertools.permutations(range(1, n + 1), 2):
                count += 1
                a = standard_matrix(PTType.TYPE1, (n, d, j1, j2))
                if type1_charpoly(n, j1, j2, d) != char_poly(a):
                    failures.append(f"type1 {(n, j1, j2, d)}")
        for params in parameter_tuples(PTType.TYPE2B, n):
            count += 1
            if type2b_charpoly(*params) != char_poly(standard_matrix(PTType.TYPE2B, params)):
                failures.append(f"type2b {params}")
    report(5, "characteristic polynomial formulas match Berkowitz, n <= 10", failures, f"{count} tuples")


def test_criterion_6_asm_agreement():
    failures = []
    count = 0
    exceptions = 0
    for n in range(2, 10):
        for rec in enumerate_finite_order(n):
            count += 1
            theorem = asm_permutable_theorem(classify_matrix(rec.standard_matrix))
            sigma = find_asm_ordering(rec.standard_matrix)
            exceptions += not theorem
            if theorem != (sigma is not None):
                failures.append(f"{rec.type_tag.value} {rec.params}: theorem {theorem}, search {sigma is not None}")
            if sigma is not None and not is_asm(conjugate(rec.standard_matrix, sigma)):
                failures.append(f"{rec.type_tag.value} {rec.params}: invalid witness")
    report(6, "ASM-permutability rule matches exhaustive search, n <= 9", failures,
           f"{count} records, {exceptions} non-permutable")


def _alternating_rows(n: int) -> list[tuple[int, ...]]:
    rows = []
    for row in itertools.product((-1, 0, 1), repeat=n):
        nz = [x for x in row if x]
        if nz and nz[0] == 1 and nz[-1] == 1 and all(a != b for a, b in zip(nz, nz[1:])):
            rows.append(row)
    return rows


def _brute_force_asms(n: int) -> set[IntMatrix]:
    rows = _alternating_rows(n)
    out = set()
    for choice in itertools.product(rows, repeat=n):
        m = IntMatrix(choice)
        if is_asm(m):
            out.add(m)
    return out


def test_criterion_7_structural_properties():
    failures = []
    # group lemma: an ASM with an ASM inverse is a permutation matrix
    sizes = []
    for n in range(1, 5):
        brute = _brute_force_asms(n)
        listed = set(enumerate_asms(n))
        sizes.append(len(brute))
        if brute != listed:
            failures.append(f"ASM enumeration differs at n={n}")
        ident = IntMatrix.identity(n)
        for a in listed:
            for b in listed:
                if a @ b == ident and not (is_permutation_matrix(a) and is_permutation_matrix(b)):
                    failures.append(f"non-permutation inverse pair at n={n}")
    if sizes != [1, 2, 7, 42]:
        failures.append(f"ASM counts {sizes}")

    rng = random.Random(20240611)
    for _ in range(200):
        n = rng.randint(1, 6)
        a = IntMatrix([[rng.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)])
        k = rng.randint(1, 8)
        g = build_graph(a)
        power = mat_pow(a, k)
        for u in range(n):
            for v in range(n):
                plus, minus = signed_walk_counts(g, u, v, k)
                if power[u, v] != plus - minus:
                    failures.append(f"walk identity fails for {a.rows}, k={k}")

    for s in range(1, 21):
        for t in range(1, 21):
            for ss in (1, -1):
                for st in (1, -1):
                    generic = poly_gcd(X ** s + IntPolynomial.const(ss), X ** t + IntPolynomial.const(st))
                    if binomial_gcd(s, ss, t, st) != generic:
                        failures.append(f"binomial_gcd{(s, ss, t, st)}")

    for k in range(1, 31):
        prod = ONE
        for d in divisors(k):
            prod = prod * cyclotomic(d)
        if prod != X ** k - ONE:
            failures.append(f"cyclotomic product for k={k}")
    report(7, "structural properties", failures, f"ASM counts {sizes}, 200 walk checks, 1600 gcd pairs, k <= 30")


def _finite_block(rng: random.Random, size: int) -> IntMatrix:
    if size >= 4 and rng.random() < 0.5:
        recs = enumerate_finite_order(size)
        if recs:
            a = rng.choice(recs).standard_matrix
            p = list(range(size))
            rng.shuffle(p)
            return conjugate(a, Permutation(tuple(p)))
    p = list(range(size))
    rng.shuffle(p)
    return permutation_matrix(Permutation(tuple(p)))


def test_criterion_8_diagonalizability_consistency():
    failures = []
    rng = random.Random(8)
    verdicts = []
    for _ in range(100):
        p, q = rng.randint(1, 6), rng.randint(1, 6)
        pb, qb = _finite_block(rng, p), _finite_block(rng, q)
        x = [[rng.choice((-1, 0, 0, 1)) for _ in range(q)] for _ in range(p)]
        if rng.random() < 0.4:
            # M = P X - X Q makes the matrix similar to P + Q, hence diagonalizable
            m = [[sum(pb[i, k] * x[k][j] for k in range(p)) - sum(x[i][k] * qb[k, j] for k in range(q))
                  for j in range(q)] for i in range(p)]
        else:
            m = x
        lemma = block_diagonalizable(pb, qb, m)
        direct = finite_order(block_upper(pb, qb, m)).finite
        verdicts.append(lemma)
        if lemma != direct:
            failures.append(f"p={p} q={q}: lemma {lemma}, radical test {direct}")
    if all(verdicts) or not any(verdicts):
        failures.append("instances do not exercise both verdicts")
    report(8, "block diagonalizability lemma matches radical test", failures,
           f"100 instances, {sum(verdicts)} diagonalizable")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

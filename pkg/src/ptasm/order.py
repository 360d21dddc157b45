"""Deciding finite multiplicative order of integer matrices.

The main route is algebraic: a matrix has finite order iff its
characteristic polynomial is a product of cyclotomic polynomials and the
product of the distinct factors (the radical) annihilates it.  The
brute-force route simply multiplies until the identity appears.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .matrix import IntMatrix, block_upper
from .poly import (
    CyclotomicFactorization,
    IntPolynomial,
    char_poly,
    cyclotomic,
    cyclotomic_candidates,
    factor_into_cyclotomics,
    poly_eval_matrix,
    poly_gcd,
    totient,
)


@dataclass(frozen=True)
class OrderResult:
    finite: bool
    char_poly: IntPolynomial
    order: int | None = None
    min_poly: IntPolynomial | None = None
    char_factorization: CyclotomicFactorization | None = None
    min_factors: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "finite": self.finite,
            "order": None if self.order is None else str(self.order),
            "min_poly": None if self.min_poly is None else [str(c) for c in self.min_poly.coeffs],
            "char_poly": [str(c) for c in self.char_poly.coeffs],
            "char_factors": (
                None
                if self.char_factorization is None
                else [{"d": d, "mult": m} for d, m in self.char_factorization.factors]
            ),
        }


def _lcm(values) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def finite_order(a: IntMatrix) -> OrderResult:
    cp = char_poly(a)
    if cp[0] not in (1, -1):
        return OrderResult(False, cp)
    fac = factor_into_cyclotomics(cp)
    if fac is None:
        return OrderResult(False, cp)
    indices = fac.indices()
    radical = fac.radical()
    if not poly_eval_matrix(radical, a).is_zero():
        return OrderResult(False, cp, char_factorization=fac)
    # every Phi_d dividing the characteristic polynomial divides the minimum
    # polynomial; dropping any one must therefore break annihilation
    for d in indices:
        smaller = radical // cyclotomic(d)
        if poly_eval_matrix(smaller, a).is_zero():
            raise AssertionError(f"Phi_{d} is redundant in the radical; factorisation is inconsistent")
    return OrderResult(
        True,
        cp,
        order=_lcm(indices),
        min_poly=radical,
        char_factorization=fac,
        min_factors=tuple(indices),
    )


def _sparse_rows(a: IntMatrix) -> list[list[tuple[int, int]]]:
    return [[(j, x) for j, x in enumerate(row) if x] for row in a.rows]


def brute_force_order(a: IntMatrix, bound: int | None = None) -> int | None:
    """Smallest k <= bound with a^k = I, by repeated multiplication."""
    n = a.n
    if bound is None:
        bound = max(possible_gl_orders(n))
    if bound < 1:
        raise ValueError("bound must be positive")
    sparse = _sparse_rows(a)
    power = [list(row) for row in a.rows]
    for k in range(1, bound + 1):
        if all(power[i][j] == (i == j) for i in range(n) for j in range(n)):
            return k
        if k == bound:
            break
        # power <- power * a, using the sparsity of a
        new = []
        for row in power:
            out = [0] * n
            for t, x in enumerate(row):
                if x:
                    for j, y in sparse[t]:
                        out[j] += x * y
            new.append(out)
        power = new
    return None


@lru_cache(maxsize=None)
def _gl_orders(n: int) -> frozenset[int]:
    cands = [(d, totient(d)) for d in cyclotomic_candidates(n)]
    reach: list[set[int]] = [set() for _ in range(n + 1)]
    reach[0].add(1)
    for d, ph in cands:
        for s in range(ph, n + 1):
            if reach[s - ph]:
                reach[s] |= {L * d // math.gcd(L, d) for L in reach[s - ph]}
    return frozenset(reach[n])


def possible_gl_orders(n: int) -> list[int]:
    """Finite orders attained in GL(n, Q): lcm(d_i) over sum totient(d_i) = n."""
    if not 1 <= n <= 30:
        raise ValueError("possible_gl_orders supports 1 <= n <= 30")
    return sorted(_gl_orders(n))


@lru_cache(maxsize=None)
def _perm_orders(n: int) -> frozenset[int]:
    reach: list[set[int]] = [set() for _ in range(n + 1)]
    reach[0].add(1)
    for part in range(1, n + 1):
        for s in range(part, n + 1):
            if reach[s - part]:
                reach[s] |= {L * part // math.gcd(L, part) for L in reach[s - part]}
    return frozenset(reach[n])


def permutation_orders(n: int) -> list[int]:
    """Orders of elements of S_n: lcm of the parts of a partition of n."""
    if not 1 <= n <= 30:
        raise ValueError("permutation_orders supports 1 <= n <= 30")
    return sorted(_perm_orders(n))


# --- exact linear algebra over Q ---------------------------------------


def rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank by fraction-free (Bareiss) elimination; rationals are cleared first."""
    mat = []
    for row in rows:
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (Fraction(x).denominator for x in row), 1)
        mat.append([int(Fraction(x) * den) for x in row])
    if not mat or not mat[0]:
        return 0
    m, ncols = len(mat), len(mat[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(r + 1, m):
            for j in range(c + 1, ncols):
                mat[i][j] = (mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j]) // prev
            mat[i][c] = 0
        prev = mat[r][c]
        r += 1
        if r == m:
            break
    return r


def nullspace(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Basis of the right nullspace, via reduced row echelon form over Q."""
    mat = [[Fraction(x) for x in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fcol]
        basis.append(v)
    return basis


class BlockPreconditionError(ValueError):
    """A diagonal block of a block-triangular matrix is not of finite order."""


def block_diagonalizable(p_block: IntMatrix, q_block: IntMatrix, m_block: Sequence[Sequence[int]]) -> bool:
    """Diagonalizability of [[P, M], [0, Q]] via the column-space criterion.

    With g = gcd of the minimum polynomials of P and Q and N the upper
    right block of g(A), A is diagonalizable iff N v lies in the column space
    of g(P) for every v in the right nullspace of g(Q).
    """
    p, q = p_block.n, q_block.n
    if len(m_block) != p or any(len(r) != q for r in m_block):
        raise ValueError(f"off-diagonal block must be {p}x{q}")
    res_p = finite_order(p_block)
    if not res_p.finite:
        raise BlockPreconditionError("upper-left block is not diagonalizable of finite order")
    res_q = finite_order(q_block)
    if not res_q.finite:
        raise BlockPreconditionError("lower-right block is not diagonalizable of finite order")
    g = poly_gcd(res_p.min_poly, res_q.min_poly)
    a = block_upper(p_block, q_block, m_block)
    ga = poly_eval_matrix(g, a)
    n_block = ga.block(0, p, p, p + q)
    gp = ga.block(0, p, 0, p)
    gq = ga.block(p, p + q, p, p + q)
    kernel = nullspace(gq)
    if not kernel:
        return True
    images = [[sum(n_block[i][j] * v[j] for j in range(q)) for i in range(p)] for v in kernel]
    # columnspace test: appending the images must not raise the rank of g(P)
    base = rank(gp)
    augmented = [list(gp[i]) + [img[i] for img in images] for i in range(p)]
    return rank(augmented) == base

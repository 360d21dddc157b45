"""ASM-permutability: is a matrix permutation similar to an alternating sign matrix?

Two independent routes are provided: the closed-form exception lists for
the four finite-order types, and an exhaustive search over vertex orderings.
The search exploits the fact that the partial sums seen after placing a set
S of vertices depend only on S, so failed subsets are memoised and the
search is exact yet cheap for n <= 10.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import PTType, standard_matrix
from .graph import Classification
from .matrix import IntMatrix, Permutation

MAX_SEARCH_N = 10


class SearchCapacityError(ValueError):
    """The exhaustive ordering search was asked for a matrix that is too large."""


@dataclass(frozen=True)
class BetweennessConstraint:
    """In an ASM-ordering, ``middle`` must lie between ``left`` and ``right`` (1-based)."""

    middle: int
    left: int
    right: int

    @property
    def degenerate(self) -> bool:
        return len({self.middle, self.left, self.right}) < 3

    def holds(self, order: Permutation) -> bool:
        """Check against an ordering whose position i holds vertex order(i) (0-based)."""
        pos = order.inverse()
        m, a, b = pos(self.middle - 1), pos(self.left - 1), pos(self.right - 1)
        return min(a, b) < m < max(a, b)

    def __str__(self) -> str:
        return f"{self.middle} between {self.left} and {self.right}"


def constraints_of_matrix(a: IntMatrix) -> list[BetweennessConstraint]:
    """One constraint per row and column holding a -1 (rows first)."""
    out = []
    lines = [("row", i, a.rows[i]) for i in range(a.n)]
    lines += [("col", j, tuple(r[j] for r in a.rows)) for j in range(a.n)]
    for _, _, line in lines:
        negs = [k + 1 for k, x in enumerate(line) if x == -1]
        if not negs:
            continue
        poss = [k + 1 for k, x in enumerate(line) if x == 1]
        if len(negs) != 1 or len(poss) != 2:
            raise ValueError("constraint derivation needs lines of the form +1, -1, +1")
        out.append(BetweennessConstraint(negs[0], poss[0], poss[1]))
    return out


def _standard_of(c: Classification) -> IntMatrix:
    c = c.elementary
    if c.type_tag not in (PTType.TYPE1, PTType.TYPE2C, PTType.TYPE2D, PTType.TYPE3C):
        raise ValueError(f"betweenness constraints are defined for types 1, 2c, 2d, 3c, not {c.type_tag}")
    return standard_matrix(c.type_tag, c.params)


def betweenness_constraints(c: Classification) -> list[BetweennessConstraint]:
    """The four constraints of an ASM-ordering, in the standard-form vertex labels."""
    return constraints_of_matrix(_standard_of(c))


def find_asm_ordering(a: IntMatrix, max_n: int = MAX_SEARCH_N) -> Permutation | None:
    """An ordering p with is_asm(conjugate(a, p)), or None when none exists."""
    n = a.n
    if n > max_n:
        raise SearchCapacityError(f"exhaustive ordering search is limited to n <= {max_n} (got {n})")
    if not a.is_signed01():
        return None
    rows = a.rows
    if any(sum(r) != 1 for r in rows) or any(sum(col) != 1 for col in zip(*rows)):
        return None
    # vertices whose row or column has a -1 are the only ones that can fail
    rowsum = [0] * n
    colsum = [0] * n
    col_entries = [[(r, rows[r][x]) for r in range(n) if rows[r][x]] for x in range(n)]
    row_entries = [[(c, rows[x][c]) for c in range(n) if rows[x][c]] for x in range(n)]
    dead: set[int] = set()
    order: list[int] = []

    def place(x: int) -> bool:
        ok = True
        for r, v in col_entries[x]:
            rowsum[r] += v
            ok = ok and rowsum[r] in (0, 1)
        for c, v in row_entries[x]:
            colsum[c] += v
            ok = ok and colsum[c] in (0, 1)
        return ok

    def unplace(x: int) -> None:
        for r, v in col_entries[x]:
            rowsum[r] -= v
        for c, v in row_entries[x]:
            colsum[c] -= v

    def search(mask: int) -> bool:
        if len(order) == n:
            return True
        if mask in dead:
            return False
        for x in range(n):
            if mask >> x & 1:
                continue
            if place(x):
                order.append(x)
                if search(mask | 1 << x):
                    return True
                order.pop()
            unplace(x)
        dead.add(mask)
        return False

    if not search(0):
        return None
    return Permutation(tuple(order))


def asm_permutable_2c_graph(p: int, q: int, h: int, l: int) -> bool:
    """Graph-level rule for type 2c, independent of the order of the matrix."""
    return not ((p == 2 and l in (1, q - 1)) or (q == 2 and h in (1, p - 1)))


def asm_permutable_2c_matrix(p: int, q: int, h: int, l: int) -> bool:
    """Rule for finite-order type 2c matrices, with the parity side conditions."""
    if p == 2 and q % 2 == 1 and q >= 3 and l in (1, q - 1):
        return False
    if q == 2 and p % 2 == 1 and p >= 3 and h in (1, p - 1):
        return False
    return True


def asm_permutable_theorem(c: Classification) -> bool:
    """Closed-form ASM-permutability of a finite-order PT-matrix from its classification."""
    c = c.elementary
    tag = c.type_tag
    if tag is PTType.PERMUTATION or tag is PTType.TYPE1:
        return True
    if tag is PTType.TYPE2C:
        return asm_permutable_2c_graph(*c.params)
    if tag is PTType.TYPE2D:
        p, q, i1, i2 = c.params
        if q == 1 and i2 == 2 and i1 == p:
            return False
        # consecutive i1 = i2 - 1 with p = 3 forces 1 = i1 - 1 and i2 = p, which
        # leaves no room for i1 between 1 and i2, whatever q is
        if p == 3 and (i1, i2) == (2, 3):
            return False
        return True
    if tag is PTType.TYPE3C:
        p, q, m, i = c.params
        if p == 2 and i == 2 and 1 in (q, m):
            return False
        if q == 1 and m == 1 and i in (2, p):
            return False
        return True
    raise ValueError(f"no ASM-permutability rule for type {tag}")

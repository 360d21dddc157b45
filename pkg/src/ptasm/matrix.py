"""Exact integer matrices, permutations and T-blocks.

Matrices are immutable and stored as tuples of Python ints, so every
operation is exact.  Row/column/vertex indices in the Python API are
0-based; T-block specifications and standard-form parameters use the
1-based convention of the usual mathematical notation, e.g.
``TBlockSpec(1, 9, 6, 1)`` is T(1,9,6,1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class IntMatrix:
    """Dense square matrix of arbitrary-precision integers."""

    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(data)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for row in data:
            if len(row) != n:
                raise ValueError(f"matrix is not square: row of length {len(row)} in {n}x{n}")
        self._rows = data
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> IntMatrix:
        return cls([[0] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._rows]})"

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self._rows for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self._rows)

    def _check_same(self, other: IntMatrix) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix([-x for x in row] for row in self._rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix([c * x for x in row] for row in self._rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def is_identity(self) -> bool:
        return all(x == (i == j) for i, row in enumerate(self._rows) for j, x in enumerate(row))

    def is_signed01(self) -> bool:
        """True iff every entry lies in {-1, 0, 1}."""
        return all(x in (-1, 0, 1) for row in self._rows for x in row)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> list[list[int]]:
        """Rectangular sub-block rows[r0:r1], cols[c0:c1] as plain lists."""
        return [list(row[c0:c1]) for row in self._rows[r0:r1]]

    def entries(self, value: int) -> list[tuple[int, int]]:
        return [
            (i, j) for i, row in enumerate(self._rows) for j, x in enumerate(row) if x == value
        ]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n-1}; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> Permutation:
        return cls(tuple(x - 1 for x in images))

    def one_based(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self.images[x] for x in other.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


@dataclass(frozen=True)
class TBlockSpec:
    """T(i1,j1,i2,j2): +1 at (i1,j1),(i2,j2) and -1 at (i1,j2),(i2,j1); 1-based."""

    i1: int
    j1: int
    i2: int
    j2: int

    def __post_init__(self):
        if self.i1 == self.i2 or self.j1 == self.j2:
            raise ValueError(f"degenerate T-block {self}: need i1 != i2 and j1 != j2")
        if min(self.i1, self.j1, self.i2, self.j2) < 1:
            raise ValueError(f"T-block indices are 1-based: {self}")

    def __str__(self) -> str:
        return f"T({self.i1},{self.j1},{self.i2},{self.j2})"

    def swapped(self) -> TBlockSpec:
        return TBlockSpec(self.i2, self.j2, self.i1, self.j1)

    def canonical(self) -> TBlockSpec:
        """The representative with i1 < i2."""
        return self if self.i1 < self.i2 else self.swapped()


def permutation_matrix(p: Permutation) -> IntMatrix:
    """Matrix with a 1 at (i, p(i)) for every i."""
    n = len(p)
    return IntMatrix([[int(j == p(i)) for j in range(n)] for i in range(n)])


def cycle_companion(k: int) -> IntMatrix:
    """C_k, the companion matrix of x^k - 1 (a k-cycle permutation matrix)."""
    if k < 1:
        raise ValueError("cycle length must be positive")
    rows = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        rows[i + 1][i] = 1
    rows[0][k - 1] = 1
    return IntMatrix(rows)


def t_block(n: int, spec: TBlockSpec) -> IntMatrix:
    if max(spec.i1, spec.j1, spec.i2, spec.j2) > n:
        raise ValueError(f"{spec} does not fit in a {n}x{n} matrix")
    rows = [[0] * n for _ in range(n)]
    rows[spec.i1 - 1][spec.j1 - 1] = 1
    rows[spec.i2 - 1][spec.j2 - 1] = 1
    rows[spec.i1 - 1][spec.j2 - 1] = -1
    rows[spec.i2 - 1][spec.j1 - 1] = -1
    return IntMatrix(rows)


def direct_sum(*blocks: IntMatrix) -> IntMatrix:
    n = sum(b.n for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b.rows):
            rows[off + i][off:off + b.n] = row
        off += b.n
    return IntMatrix(rows)


def block_upper(p_block: IntMatrix, q_block: IntMatrix, m_block: Sequence[Sequence[int]]) -> IntMatrix:
    """Assemble [[P, M], [0, Q]]."""
    p, q = p_block.n, q_block.n
    if len(m_block) != p or any(len(r) != q for r in m_block):
        raise ValueError(f"off-diagonal block must be {p}x{q}")
    rows = [list(p_block.rows[i]) + list(m_block[i]) for i in range(p)]
    rows += [[0] * p + list(q_block.rows[i]) for i in range(q)]
    return IntMatrix(rows)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    a._check_same(b)
    cols = list(zip(*b.rows))
    return IntMatrix(
        [sum(x * y for x, y in zip(row, col) if x) for col in cols] for row in a.rows
    )


def mat_pow(a: IntMatrix, k: int) -> IntMatrix:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = IntMatrix.identity(a.n)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def conjugate(a: IntMatrix, p: Permutation) -> IntMatrix:
    """The matrix with (i, j) entry a(p(i), p(j)), i.e. P A P^T for P = permutation_matrix(p)."""
    if len(p) != a.n:
        raise ValueError(f"permutation of size {len(p)} cannot act on {a.n}x{a.n} matrix")
    rows = a.rows
    idx = p.images
    return IntMatrix([rows[pi][pj] for pj in idx] for pi in idx)


def is_permutation_matrix(a: IntMatrix) -> bool:
    if any(x not in (0, 1) for row in a.rows for x in row):
        return False
    return all(sum(row) == 1 for row in a.rows) and all(sum(col) == 1 for col in zip(*a.rows))


def _alternates(line: Sequence[int]) -> bool:
    s = 0
    for x in line:
        if x not in (-1, 0, 1):
            return False
        s += x
        if s not in (0, 1):
            return False
    return s == 1


def is_asm(a: IntMatrix) -> bool:
    """Alternating sign matrix test via partial sums of rows and columns."""
    return all(_alternates(row) for row in a.rows) and all(_alternates(col) for col in zip(*a.rows))


def decompose_pt(a: IntMatrix) -> tuple[Permutation, TBlockSpec | None] | None:
    """Split a (0,1,-1)-matrix as P + T with disjoint supports.

    Returns ``(P, None)`` for a permutation matrix, ``(P, T)`` when ``a`` has
    exactly two -1 entries in distinct rows and columns whose completing +1
    entries are present and the remainder is a permutation matrix, and
    ``None`` otherwise.
    """
    if not a.is_signed01():
        return None
    negs = a.entries(-1)
    if not negs:
        if not is_permutation_matrix(a):
            return None
        return Permutation(tuple(row.index(1) for row in a.rows)), None
    if len(negs) != 2:
        return None
    (r1, c1), (r2, c2) = negs
    if r1 == r2 or c1 == c2:
        return None
    # -1 at (i1, j2) and (i2, j1)
    spec = TBlockSpec(r1 + 1, c2 + 1, r2 + 1, c1 + 1)
    if a[r1, c2] != 1 or a[r2, c1] != 1:
        return None
    rest = a - t_block(a.n, spec)
    if not is_permutation_matrix(rest):
        return None
    return Permutation(tuple(row.index(1) for row in rest.rows)), spec.canonical()


def pt_overlap_decomposition(a: IntMatrix) -> tuple[Permutation, TBlockSpec] | None:
    """Find P + T = a where one -1 of T cancels a 1 of P (a has a single -1)."""
    if not a.is_signed01():
        return None
    negs = a.entries(-1)
    if len(negs) != 1:
        return None
    (r, c), = negs
    n = a.n
    for r2 in range(n):
        for c2 in range(n):
            if r2 == r or c2 == c:
                continue
            spec = TBlockSpec(r + 1, c2 + 1, r2 + 1, c + 1)
            rest = a - t_block(n, spec)
            if is_permutation_matrix(rest):
                return Permutation(tuple(row.index(1) for row in rest.rows)), spec.canonical()
    return None


def pt_status(a: IntMatrix) -> str:
    """Short description of why ``a`` is or is not usable as a PT-matrix."""
    if not a.is_signed01():
        return "entries outside {-1,0,1}"
    dec = decompose_pt(a)
    if dec is not None:
        return "permutation" if dec[1] is None else "pt"
    if pt_overlap_decomposition(a) is not None:
        return "singular by duplicated row"
    negs = len(a.entries(-1))
    if negs > 2:
        return f"{negs} negative entries"
    return "not of the form P + T"


def find_conjugation(a: IntMatrix, b: IntMatrix) -> Permutation | None:
    """A permutation p with conjugate(a, p) == b, by backtracking; None if none."""
    if a.n != b.n:
        return None
    n = a.n

    def signature(m: IntMatrix, v: int) -> tuple:
        return (m[v, v], tuple(sorted(m.rows[v])), tuple(sorted(r[v] for r in m.rows)))

    sig_a = [signature(a, v) for v in range(n)]
    sig_b = [signature(b, v) for v in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    images: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for x in range(n):
            if used[x] or sig_a[x] != sig_b[i]:
                continue
            if all(
                a[x, images[k]] == b[i, k] and a[images[k], x] == b[k, i] for k in range(i)
            ):
                used[x] = True
                images.append(x)
                if extend(i + 1):
                    return True
                images.pop()
                used[x] = False
        return False

    return Permutation(tuple(images)) if extend(0) else None


_MAX_ASM_ENUM = 5


def enumerate_asms(n: int) -> list[IntMatrix]:
    """Every n x n alternating sign matrix, row by row with column partial sums."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > _MAX_ASM_ENUM:
        raise ValueError(f"enumerate_asms is limited to n <= {_MAX_ASM_ENUM}")
    rows = [r for r in itertools.product((-1, 0, 1), repeat=n) if _alternates(r)]
    out: list[IntMatrix] = []

    def place(prefix: list[tuple[int, ...]], colsum: list[int]) -> None:
        if len(prefix) == n:
            if all(s == 1 for s in colsum):
                out.append(IntMatrix(prefix))
            return
        for r in rows:
            new = [s + x for s, x in zip(colsum, r)]
            if all(s in (0, 1) for s in new):
                prefix.append(r)
                place(prefix, new)
                prefix.pop()

    place([], [0] * n)
    return out


def parse_matrix(text: str) -> IntMatrix:
    """Read the text format: line 1 holds n, then n rows of n integers.

    Raises ``MatrixParseError`` carrying the offending 1-based line number.
    """
    lines = [ln for ln in text.splitlines()]
    content = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not content:
        raise MatrixParseError(1, "empty input")
    lineno, first = content[0]
    try:
        n = int(first)
    except ValueError:
        raise MatrixParseError(lineno, f"expected dimension, got {first!r}") from None
    if n < 1:
        raise MatrixParseError(lineno, "dimension must be positive")
    body = content[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else lineno + 1)
        raise MatrixParseError(where, f"expected {n} matrix rows, found {len(body)}")
    rows = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != n:
            raise MatrixParseError(lineno, f"expected {n} entries, found {len(parts)}")
        try:
            rows.append([int(x) for x in parts])
        except ValueError:
            raise MatrixParseError(lineno, f"non-integer entry in {ln!r}") from None
    return IntMatrix(rows)


def format_matrix(a: IntMatrix) -> str:
    return f"{a.n}\n" + "\n".join(" ".join(str(x) for x in row) for row in a.rows) + "\n"


class MatrixParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line

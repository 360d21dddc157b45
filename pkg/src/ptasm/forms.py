"""Graph types of PT-matrices and their standard-form matrices.

Every weakly connected PT-graph falls into one of the types below,
according to how its four T-vertices (the tails u1, u2 and heads v1, v2
of the two red arcs (u1,v1), (u2,v2)) are spread over the cycles of the
permutation part.  Each type has a standard vertex ordering; the functions
here build the matrix for that ordering from a parameter tuple.
Parameters are 1-based vertex positions and cycle lengths.
"""

from __future__ import annotations

import enum

from .matrix import IntMatrix, TBlockSpec, cycle_companion, direct_sum, t_block


class PTType(str, enum.Enum):
    PERMUTATION = "permutation"
    TYPE1 = "1"
    TYPE2A = "2a"
    TYPE2B = "2b"
    TYPE2C = "2c"
    TYPE2D = "2d"
    TYPE3A = "3a"
    TYPE3B = "3b"
    TYPE3C = "3c"
    TYPE4 = "4"
    NON_ELEMENTARY = "non-elementary"
    NOT_PT = "not-pt"

    def __str__(self) -> str:
        return self.value


FINITE_TYPES = (PTType.TYPE1, PTType.TYPE2C, PTType.TYPE2D, PTType.TYPE3C)
INFINITE_TYPES = (PTType.TYPE2A, PTType.TYPE2B, PTType.TYPE3A, PTType.TYPE3B, PTType.TYPE4)


def _cycles(*lengths: int) -> IntMatrix:
    return direct_sum(*(cycle_companion(k) for k in lengths))


def pt_matrix(lengths: tuple[int, ...], spec: TBlockSpec) -> IntMatrix:
    """(C_l1 + ... + C_lk) + T for the given block lengths."""
    base = _cycles(*lengths)
    return base + t_block(base.n, spec)


def standard_matrix(type_tag: PTType | str, params: tuple[int, ...]) -> IntMatrix:
    """Standard-form matrix for a type and its parameters.

    ======  ==================  ==============================================
    type    params              matrix
    ======  ==================  ==============================================
    1       (d, j)              C_2d + T(1, 2d-j, d+1, j)
    1       (n, d, j1, j2)      C_n + T(1, j1, d+1, j2)
    2a      (a, b, r, s)        (C_a + C_b) + T(1, r, a+1, a+s)
    2b      (m1, m2, k1, k2)    (C_m1 + C_m2) + T(1, m1+k2, m1+1, k1)
    2c      (p, q, h, l)        (C_p + C_q) + T(1, n, h+1, n-l)
    2d      (p, q, i1, i2)      (C_p + C_q) + T(i1, n, i2, p)
    3a      (a, b, c, r)        (C_a + C_b + C_c) + T(1, r, a+1, a+b+1)
    3b      (a, b, c, r)        (C_a + C_b + C_c) + T(1, a+b+1, a+1, r)
    3c      (p, q, m, i)        (C_p + C_q + C_m) + T(1, p+q, i, n)
    4       (a, b, c, e)        (C_a + ... + C_e) + T(1, a+b+c+1, a+1, a+b+1)
    ======  ==================  ==============================================
    """
    tag = PTType(type_tag)
    params = tuple(params)
    if tag is PTType.TYPE1:
        if len(params) == 2:
            d, j = params
            n = 2 * d
            return pt_matrix((n,), TBlockSpec(1, n - j, d + 1, j))
        n, d, j1, j2 = params
        return pt_matrix((n,), TBlockSpec(1, j1, d + 1, j2))
    if tag is PTType.TYPE2A:
        a, b, r, s = params
        return pt_matrix((a, b), TBlockSpec(1, r, a + 1, a + s))
    if tag is PTType.TYPE2B:
        m1, m2, k1, k2 = params
        return pt_matrix((m1, m2), TBlockSpec(1, m1 + k2, m1 + 1, k1))
    if tag is PTType.TYPE2C:
        p, q, h, l = params
        n = p + q
        return pt_matrix((p, q), TBlockSpec(1, n, h + 1, n - l))
    if tag is PTType.TYPE2D:
        p, q, i1, i2 = params
        return pt_matrix((p, q), TBlockSpec(i1, p + q, i2, p))
    if tag is PTType.TYPE3A:
        a, b, c, r = params
        return pt_matrix((a, b, c), TBlockSpec(1, r, a + 1, a + b + 1))
    if tag is PTType.TYPE3B:
        a, b, c, r = params
        return pt_matrix((a, b, c), TBlockSpec(1, a + b + 1, a + 1, r))
    if tag is PTType.TYPE3C:
        p, q, m, i = params
        return pt_matrix((p, q, m), TBlockSpec(1, p + q, i, p + q + m))
    if tag is PTType.TYPE4:
        a, b, c, e = params
        return pt_matrix((a, b, c, e), TBlockSpec(1, a + b + c + 1, a + 1, a + b + 1))
    raise ValueError(f"no standard form for type {tag}")


def dimension(type_tag: PTType | str, params: tuple[int, ...]) -> int:
    tag = PTType(type_tag)
    if tag is PTType.TYPE1:
        return 2 * params[0] if len(params) == 2 else params[0]
    if tag in (PTType.TYPE2A, PTType.TYPE2B, PTType.TYPE2C, PTType.TYPE2D):
        return params[0] + params[1]
    if tag in (PTType.TYPE3A, PTType.TYPE3B, PTType.TYPE3C):
        return params[0] + params[1] + params[2]
    if tag is PTType.TYPE4:
        return sum(params)
    raise ValueError(f"no standard form for type {tag}")


def _compositions(n: int, parts: int, minimum: tuple[int, ...]):
    if parts == 1:
        if n >= minimum[0]:
            yield (n,)
        return
    for first in range(minimum[0], n + 1):
        for rest in _compositions(n - first, parts - 1, minimum[1:]):
            yield (first,) + rest


def parameter_tuples(type_tag: PTType | str, n: int):
    """Every standard-form parameter tuple of the given type with dimension n.

    Types 1, 2c, 2d and 3c iterate the ranges of the finite-order theorems
    (type 1 uses the two-parameter (d, j) family).  The remaining types
    iterate all placements that give a PT-graph without multiple arcs, plus
    the cancelling placements of type 2b.
    """
    tag = PTType(type_tag)
    if tag is PTType.TYPE1:
        if n % 2 == 0:
            d = n // 2
            for j in range(1, d):
                yield (d, j)
    elif tag is PTType.TYPE2C:
        for p, q in _compositions(n, 2, (2, 2)):
            for h in range(1, p):
                for l in range(1, q):
                    yield (p, q, h, l)
    elif tag is PTType.TYPE2D:
        for p, q in _compositions(n, 2, (2, 1)):
            for i1 in range(1, p + 1):
                for i2 in range(1, p + 1):
                    if i1 != i2:
                        yield (p, q, i1, i2)
    elif tag is PTType.TYPE3C:
        for p, q, m in _compositions(n, 3, (2, 1, 1)):
            for i in range(2, p + 1):
                yield (p, q, m, i)
    elif tag is PTType.TYPE2A:
        for a, b in _compositions(n, 2, (1, 1)):
            # r = a (s = b) would double the permutation arc leaving vertex 1 (a+1)
            for r in range(1, a + 1):
                for s in range(1, b + 1):
                    if r != a and s != b:
                        yield (a, b, r, s)
    elif tag is PTType.TYPE2B:
        for m1, m2 in _compositions(n, 2, (1, 1)):
            for k1 in range(1, m1 + 1):
                for k2 in range(1, m2 + 1):
                    yield (m1, m2, k1, k2)
    elif tag is PTType.TYPE3A:
        for a, b, c in _compositions(n, 3, (1, 1, 1)):
            for r in range(1, a):
                yield (a, b, c, r)
    elif tag is PTType.TYPE3B:
        for a, b, c in _compositions(n, 3, (1, 1, 1)):
            for r in range(1, a + 1):
                yield (a, b, c, r)
    elif tag is PTType.TYPE4:
        yield from _compositions(n, 4, (1, 1, 1, 1))
    else:
        raise ValueError(f"no parameter family for type {tag}")

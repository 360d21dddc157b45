"""Closed-form finite-order criteria and characteristic polynomials."""

from __future__ import annotations

import math

from .poly import IntPolynomial, two_adic


def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def type1_order(d: int, j: int) -> int | None:
    """Order of C_2d + T(1, 2d-j, d+1, j), or None if infinite."""
    if d < 2 or not 1 <= j < d:
        raise ValueError(f"type 1 needs d >= 2 and 1 <= j < d, got d={d}, j={j}")
    if two_adic(j) == two_adic(d - j):
        return None
    return _lcm(2 * j, 2 * d - 2 * j, d)


def type1_charpoly(n: int, j1: int, j2: int, d: int) -> IntPolynomial:
    """Characteristic polynomial of C_n + T(1, j1, d+1, j2) for d <= n/2.

    x^n - x^(n-j1) + x^[n-j1+d] + x^(n-j2) - x^[n-j2+d] - 1 with [t] = t mod n.
    """
    if not (1 <= d and 2 * d <= n):
        raise ValueError("type 1 characteristic polynomial needs 1 <= d <= n/2")
    if j1 == j2 or not (1 <= j1 <= n and 1 <= j2 <= n):
        raise ValueError("need distinct column indices 1 <= j1, j2 <= n")
    return IntPolynomial.from_terms([
        (n, 1),
        (n - j1, -1),
        ((n - j1 + d) % n, 1),
        (n - j2, 1),
        ((n - j2 + d) % n, -1),
        (0, -1),
    ])


def type2b_charpoly(m1: int, m2: int, k1: int, k2: int) -> IntPolynomial:
    """Characteristic polynomial of (C_m1 + C_m2) + T(1, m1+k2, m1+1, k1)."""
    if not (1 <= k1 <= m1 and 1 <= k2 <= m2):
        raise ValueError("type 2b needs 1 <= k1 <= m1 and 1 <= k2 <= m2")
    s = m1 + m2
    return IntPolynomial.from_terms([
        (s, 1),
        (s - k1, 1),
        (s - k2, 1),
        (m1, -1),
        (m2, -1),
        (m1 - k1, -1),
        (m2 - k2, -1),
        (0, 1),
    ])


def type2c_order(p: int, q: int, h: int, l: int) -> int | None:
    """Order of (C_p + C_q) + T(1, n, h+1, n-l): lcm(p, q) iff gcd(p, q) divides h or l."""
    if p < 2 or q < 2 or not 1 <= h < p or not 1 <= l < q:
        raise ValueError(f"type 2c parameters out of range: {(p, q, h, l)}")
    g = math.gcd(p, q)
    if h % g == 0 or l % g == 0:
        return _lcm(p, q)
    return None


def type2d_order(p: int, q: int, i1: int, i2: int) -> int | None:
    """Order of (C_p + C_q) + T(i1, n, i2, p), or None if infinite."""
    if p < 2 or q < 1 or i1 == i2 or not (1 <= i1 <= p and 1 <= i2 <= p):
        raise ValueError(f"type 2d parameters out of range: {(p, q, i1, i2)}")
    if i1 + i2 != p + 2:
        return None
    if two_adic(i2 - 1) < two_adic(p - i2 + 1):
        return None
    g = math.gcd(q, p - i2 + 1)
    if p % g:
        return None
    if two_adic(q) > two_adic(i2 - 1):
        # q is even here since [i2-1]_2 >= 1
        d = math.gcd(q // 2, i2 - 1)
        if p % d or (p // d) % 2:
            return None
    return _lcm(p - i2 + 1, 2 * i2 - 2, q)


def type3c_order(p: int, q: int, m: int, i: int) -> int | None:
    """Order of (C_p + C_q + C_m) + T(1, p+q, i, n): lcm(p, q, m) iff gcd(p,q), gcd(p,m) | i-1."""
    if p < 2 or q < 1 or m < 1 or not 1 < i <= p:
        raise ValueError(f"type 3c parameters out of range: {(p, q, m, i)}")
    if (i - 1) % math.gcd(p, q) or (i - 1) % math.gcd(p, m):
        return None
    return _lcm(p, q, m)

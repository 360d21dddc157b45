"""Integer polynomials: characteristic and cyclotomic polynomials, gcds.

Polynomials are ``IntPolynomial`` values holding a coefficient tuple with the
constant term first and no trailing zeros (the zero polynomial is empty).
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .matrix import IntMatrix, mat_mul


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def const(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> IntPolynomial:
        """Sum of ``c * x**e`` over (e, c); colliding exponents accumulate."""
        acc: dict[int, int] = {}
        for e, c in terms:
            if e < 0:
                raise ValueError("negative exponent")
            acc[e] = acc.get(e, 0) + c
        if not acc:
            return cls()
        top = max(acc)
        return cls(tuple(acc.get(i, 0) for i in range(top + 1)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(m)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_exact(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Division by a divisor with leading coefficient +-1; stays in Z[x]."""
        if other.lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dq)
        lead = other.lead
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dq]))

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return self.divmod_exact(other)[0]

    def __mod__(self, other: IntPolynomial) -> IntPolynomial:
        return self.divmod_exact(other)[1]

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: IntPolynomial, var: str = "x") -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


X = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))


def char_poly(a: IntMatrix) -> IntPolynomial:
    """det(xI - a) by the division-free Berkowitz recursion."""
    m = a.rows
    n = a.n
    # coefficients highest degree first
    poly = [1]
    for r in range(n):
        # leading (r+1)x(r+1) block = [[A_r, col], [row, a_rr]]
        a_rr = m[r][r]
        col = [m[i][r] for i in range(r)]
        row = [m[r][j] for j in range(r)]
        toeplitz = [1, -a_rr]
        vec = col
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(m[i][j] * vec[j] for j in range(r) if m[i][j]) for i in range(r)]
        poly = [
            sum(toeplitz[k] * poly[i - k] for k in range(max(0, i - r), i + 1))
            for i in range(r + 2)
        ]
    return IntPolynomial(tuple(reversed(poly)))


def totient(n: int) -> int:
    result = n
    k = n
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPolynomial.monomial(d) - ONE
    for e in divisors(d)[:-1]:
        q, r = p.divmod_exact(cyclotomic(e))
        assert not r, "cyclotomic division left a remainder"
        p = q
    return p


def cyclotomic_candidates(degree: int) -> list[int]:
    """All d with totient(d) <= degree (uses totient(d) >= sqrt(d/2))."""
    bound = max(2 * degree * degree + 1, 6)
    return [d for d in range(1, bound + 1) if totient(d) <= degree]


@dataclass(frozen=True)
class CyclotomicFactorization:
    """``unit * prod(cyclotomic(d) ** mult)`` over ``factors``."""

    factors: tuple[tuple[int, int], ...]
    unit: int = 1

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def indices(self) -> list[int]:
        return [d for d, _ in self.factors]

    def expand(self) -> IntPolynomial:
        out = IntPolynomial.const(self.unit)
        for d, mult in self.factors:
            out = out * cyclotomic(d) ** mult
        return out

    def radical(self) -> IntPolynomial:
        out = ONE
        for d, _ in self.factors:
            out = out * cyclotomic(d)
        return out

    def __str__(self) -> str:
        return format_factorization(self)


def format_factorization(f: CyclotomicFactorization) -> str:
    body = " ".join(
        f"Phi_{d}" + (f"^{m}" if m > 1 else "") for d, m in f.factors
    ) or "1"
    return body if f.unit == 1 else f"-{body}"


def factor_into_cyclotomics(p: IntPolynomial) -> CyclotomicFactorization | None:
    """Factor ``p`` as +-(product of cyclotomics), or None if impossible."""
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    if p[0] not in (1, -1) or p.lead not in (1, -1):
        return None
    rest = p
    found: list[tuple[int, int]] = []
    for d in cyclotomic_candidates(p.degree):
        phi = cyclotomic(d)
        if phi.degree > rest.degree:
            continue
        mult = 0
        while rest.degree >= phi.degree:
            q, r = rest.divmod_exact(phi)
            if r:
                break
            rest = q
            mult += 1
        if mult:
            found.append((d, mult))
        if rest.degree == 0:
            break
    if rest.degree != 0 or rest[0] not in (1, -1):
        return None
    return CyclotomicFactorization(tuple(found), rest[0])


class Palindromy(str, enum.Enum):
    PALINDROMIC = "palindromic"
    SKEW = "skew_palindromic"
    NEITHER = "neither"


def palindrome_class(p: IntPolynomial) -> Palindromy:
    if not p:
        raise ValueError("zero polynomial has no palindrome class")
    c = p.coeffs
    rev = c[::-1]
    if c == rev:
        return Palindromy.PALINDROMIC
    if all(a == -b for a, b in zip(c, rev)):
        return Palindromy.SKEW
    return Palindromy.NEITHER


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x]."""
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(a.coeffs)
    db = b.degree
    lb = b.lead
    delta = len(r) - 1 - db
    if delta < 0:
        return a
    for k in range(delta, -1, -1):
        c = r[k + db]
        r = [lb * x for x in r]
        if c:
            for i, y in enumerate(b.coeffs):
                r[k + i] -= c * y
        r.pop()
    return IntPolynomial(tuple(r))


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """gcd over Q, normalised primitive with positive leading coefficient.

    Primitive pseudo-remainder sequence: every remainder has its content
    removed, so coefficients stay small.
    """
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = pseudo_remainder(a, b)
        a, b = b, r.primitive()
    if a.degree == 0:
        return ONE
    return a.primitive()


def two_adic(t: int) -> int:
    """[t]_2, the largest power of 2 dividing t."""
    if t < 1:
        raise ValueError("two_adic needs a positive integer")
    return t & -t


def binomial_gcd(s: int, sign_s: int, t: int, sign_t: int) -> IntPolynomial:
    """gcd(x^s + sign_s, x^t + sign_t) in closed form (signs are +1/-1)."""
    if s < 1 or t < 1 or sign_s not in (1, -1) or sign_t not in (1, -1):
        raise ValueError("need positive exponents and unit signs")
    g = math.gcd(s, t)
    minus = IntPolynomial.monomial(g) - ONE
    plus = IntPolynomial.monomial(g) + ONE
    if sign_s == -1 and sign_t == -1:
        return minus
    if sign_s == 1 and sign_t == 1:
        return plus if two_adic(s) == two_adic(t) else ONE
    if sign_s == 1:
        s, t = t, s
    # now x^s - 1 against x^t + 1
    return plus if two_adic(s) > two_adic(t) else ONE


def poly_eval_matrix(p: IntPolynomial, a: IntMatrix) -> IntMatrix:
    """p(a) by Horner's scheme."""
    n = a.n
    acc = IntMatrix.zeros(n)
    for c in reversed(p.coeffs):
        acc = mat_mul(acc, a)
        if c:
            acc = IntMatrix(
                [x + (c if i == j else 0) for j, x in enumerate(row)]
                for i, row in enumerate(acc.rows)
            )
    return acc


def parse_poly(text: str) -> IntPolynomial:
    """Space-separated coefficients, constant term first."""
    return IntPolynomial(tuple(int(x) for x in text.split()))


def dump_poly(p: IntPolynomial) -> str:
    return " ".join(str(c) for c in p.coeffs) if p.coeffs else "0"


def poly_from_factors(factors: dict[int, int] | Sequence[tuple[int, int]]) -> IntPolynomial:
    items = factors.items() if isinstance(factors, dict) else factors
    return CyclotomicFactorization(tuple(sorted(items))).expand()

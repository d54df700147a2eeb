"""Integer polynomials in q and their cyclotomic factorisations.

Polynomials are coefficient lists, constant term first.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_exact(a, b):
    """Quotient and remainder for a monic (or unit-leading) divisor b."""
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError
    lead = b[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have unit leading coefficient")
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] -= c * y
    return trim(q), trim(r)


def evaluate(p, x):
    out = 0
    for c in reversed(p):
        out = out * x + c
    return out


def substitute_neg(p):
    """p(-q)."""
    return [c if i % 2 == 0 else -c for i, c in enumerate(p)]


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple:
    """Coefficients of Phi_d(q)."""
    if d < 1:
        raise ValueError("d must be positive")
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num, r = divmod_exact(num, list(cyclotomic(e)))
            assert not r
    return tuple(num)


def interpolate(xs, ys):
    """Exact Lagrange interpolation; the result must have integer coefficients."""
    from fractions import Fraction

    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [
                (basis[k - 1] if k >= 1 else 0) - xs[j] * (basis[k] if k < len(basis) else 0)
                for k in range(len(basis) + 1)
            ]
            denom *= xs[i] - xs[j]
        for k in range(len(basis)):
            coeffs[k] += ys[i] * basis[k] / denom
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("interpolated polynomial is not integral")
        out.append(int(c))
    return trim(out)


@dataclass(frozen=True)
class FactoredPolynomial:
    """sign * q^q_power * prod Phi_d(q)^e over ``factors`` = ((d, e), ...)."""

    factors: tuple
    sign: int = 1
    q_power: int = 0

    def expand(self):
        p = [0] * self.q_power + [self.sign]
        for d, e in self.factors:
            for _ in range(e):
                p = mul(p, list(cyclotomic(d)))
        return p

    def __call__(self, q: int) -> int:
        return evaluate(self.expand(), q)

    def degree(self) -> int:
        return self.q_power + sum(len(cyclotomic(d)) - 1 for d, e in self.factors for _ in range(e))

    def __str__(self):
        return format_factored(self)


def _format_poly(p) -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += sign + body
    return out


def format_factored(fp: FactoredPolynomial) -> str:
    parts = []
    if fp.q_power:
        parts.append("q" if fp.q_power == 1 else f"q^{fp.q_power}")
    for d, e in sorted(fp.factors, key=lambda t: -t[0]):
        body = "(" + _format_poly(list(cyclotomic(d))) + ")"
        parts.append(body if e == 1 else f"{body}^{e}")
    text = "*".join(parts) if parts else "1"
    return ("-" if fp.sign < 0 else "") + text


def factor_cyclotomic(p, max_d: int | None = None) -> FactoredPolynomial:
    """Write p as +-q^k times a product of cyclotomic polynomials.

    Trial division by Phi_d for d up to ``max_d`` (default: twice the
    degree, which covers every cyclotomic factor). A leftover factor is an
    internal error.
    """
    p = trim(p)
    if not p:
        raise ValueError("zero polynomial")
    k = 0
    while p[0] == 0:
        p = p[1:]
        k += 1
    if max_d is None:
        max_d = max(2, 2 * len(p) * len(p))
    factors = []
    for d in range(1, max_d + 1):
        phi = list(cyclotomic(d))
        if len(phi) > len(p):
            if len(p) == 1:
                break
            continue
        e = 0
        while len(p) >= len(phi):
            quo, rem = divmod_exact(p, phi)
            if rem:
                break
            p = quo
            e += 1
        if e:
            factors.append((d, e))
    if len(p) != 1 or abs(p[0]) != 1:
        raise ArithmeticError(f"polynomial has a non-cyclotomic factor {p}")
    return FactoredPolynomial(tuple(factors), p[0], k)

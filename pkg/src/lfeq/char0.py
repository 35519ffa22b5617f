"""Products of algebraic conjugates over Q, via exact integer resultants.

gamma is a product of a conjugate of alpha and a conjugate of beta iff the
minimal polynomial of gamma divides the composed product

    C(y) = Res_x(m_alpha(x), x^deg(m_beta) m_beta(y / x)),

whose roots are all products alpha_i beta_j.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotSquarefree, ParseError, ZeroPolynomial


def _trim(a: Sequence[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _deg(a: list[int]) -> int:
    return len(a) - 1


def _content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _pp(a: list[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    a = _trim(a)
    if not a:
        return a
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of lc(b)^(deg a - deg b + 1) a by b."""
    r = list(a)
    db = _deg(b)
    lb = b[-1]
    e = _deg(a) - db + 1
    while r and _deg(r) >= db:
        c = r[-1]
        shift = _deg(r) - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        r = _trim(r)
        e -= 1
    return [x * lb**e for x in r] if e > 0 else r


def _exact_div(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient a / b in Z[x], or None if b does not divide a there."""
    r = _trim(a)
    db = _deg(b)
    if not r:
        return []
    if _deg(r) < db:
        return None
    q = [0] * (_deg(r) - db + 1)
    while r and _deg(r) >= db:
        c, rem = divmod(r[-1], b[-1])
        if rem:
            return None
        shift = _deg(r) - db
        q[shift] = c
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        r = _trim(r)
    return q if not r else None


def _derivative(a: list[int]) -> list[int]:
    return _trim([k * a[k] for k in range(1, len(a))])


def _gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[x] (content ignored), via the primitive PRS."""
    a, b = _pp(a), _pp(b)
    if not b:
        return a
    if not a:
        return b
    if _deg(a) < _deg(b):
        a, b = b, a
    while b and _deg(b) > 0:
        a, b = b, _pp(_prem(a, b))
    return a if not b else [1]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, ascending coefficients, non-zero."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(_trim(int(x) for x in self.coeffs))
        if not c:
            raise ZeroPolynomial("the zero polynomial is not allowed here")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return format_intpoly(self)

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        return parse_intpoly(text)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


_TERM = re.compile(r"^(\d*)\*?(?:([a-z])(?:\^(\d+))?)?$")


def parse_intpoly(text: str | Sequence[int]) -> IntPoly:
    """Accepts text like "x^2-2", "6x^2-12" or a JSON list of ascending coefficients."""
    if not isinstance(text, str):
        return IntPoly(tuple(int(c) for c in text))
    s = text.replace(" ", "")
    if s.startswith("["):
        try:
            return IntPoly(tuple(int(c) for c in json.loads(s)))
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise ParseError(f"bad coefficient list {text!r}: {exc}") from None
    if not s:
        raise ParseError("empty polynomial text")
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ParseError(f"cannot parse {text!r}")
    acc: dict[int, int] = {}
    var = None
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        m = _TERM.match(body)
        if not body or m is None or (not m.group(1) and not m.group(2)):
            raise ParseError(f"bad term {piece!r} in {text!r}")
        if m.group(2):
            if var is not None and m.group(2) != var:
                raise ParseError(f"mixed variables in {text!r}")
            var = m.group(2)
            k = int(m.group(3)) if m.group(3) else 1
        else:
            k = 0
        c = int(m.group(1)) if m.group(1) else 1
        acc[k] = acc.get(k, 0) + sign * c
    deg = max(acc)
    return IntPoly(tuple(acc.get(k, 0) for k in range(deg + 1)))


def format_intpoly(f: IntPoly, var: str = "x") -> str:
    out = ""
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if a == 1 else f"{a}*{power}"
        out += sign + body
    return out


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) = lc(f)^deg(g) * prod of g over the roots of f, by subresultant PRS."""
    A, B = list(f.coeffs), list(g.coeffs)
    if _deg(A) == 0:
        return A[0] ** _deg(B)
    if _deg(B) == 0:
        return B[0] ** _deg(A)
    a, b = _content(A), _content(B)
    if A[-1] < 0:
        a = -a
    if B[-1] < 0:
        b = -b
    A = [x // a for x in A]
    B = [x // b for x in B]
    t = a ** _deg(B) * b ** _deg(A)
    s = 1
    if _deg(A) < _deg(B):
        A, B = B, A
        if _deg(A) % 2 and _deg(B) % 2:
            s = -s
    g_, h = 1, 1
    while True:
        delta = _deg(A) - _deg(B)
        if _deg(A) % 2 and _deg(B) % 2:
            s = -s
        R = _prem(A, B)
        A = B
        div = g_ * h**delta
        B = [x // div for x in R]
        assert all(x % div == 0 for x in R)
        g_ = A[-1]
        if delta >= 1:
            h = g_**delta // h ** (delta - 1)
        if not B:
            return 0
        if _deg(B) == 0:
            dA = _deg(A)
            h = B[-1] ** dA // h ** (dA - 1) if dA >= 1 else h
            return s * t * h


def _interpolate(xs: list[int], ys: list[int]) -> list[int]:
    """Integer-valued Newton interpolation, exact over Q."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[-1]]
    for i in range(n - 2, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        nxt = [Fraction(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] += c
            nxt[k] -= c * xs[i]
        nxt[0] += coef[i]
        poly = nxt
    if any(c.denominator != 1 for c in poly):
        raise AssertionError("interpolated composed product is not integral")
    return _trim(int(c) for c in poly)


def composed_product(m_alpha: IntPoly, m_beta: IntPoly) -> IntPoly:
    """Integer polynomial whose roots are the products alpha_i * beta_j."""
    b = list(m_beta.coeffs)
    zeros = 0
    while b[0] == 0:
        b.pop(0)
        zeros += 1
    da, db = m_alpha.degree, len(b) - 1
    if db == 0:
        core = [b[0] ** da]
    else:
        D = da * db
        xs = list(range(D + 1))
        ys = []
        for y0 in xs:
            # x^db * b(y0 / x) = sum_j b_j y0^j x^(db - j)
            h = [0] * (db + 1)
            for j, c in enumerate(b):
                h[db - j] = c * y0**j
            ys.append(resultant(m_alpha, IntPoly(tuple(h))) if _trim(h) else 0)
        core = _interpolate(xs, ys)
    # each zero root of m_beta contributes deg(m_alpha) zero products
    return IntPoly(tuple([0] * (zeros * da) + core))


def squarefree_normalize(f: IntPoly) -> IntPoly:
    """Primitive part of f / gcd(f, f'), leading coefficient positive."""
    a = list(f.coeffs)
    g = _gcd(a, _derivative(a)) if f.degree > 0 else [1]
    q = _exact_div(_pp(a), _pp(g))
    assert q is not None
    return IntPoly(tuple(_pp(q)))


@dataclass(frozen=True)
class AlgebraicSpec:
    """An algebraic number given by its minimal polynomial over Q.

    Irreducibility is the caller's assertion; squarefreeness is verified and
    the polynomial is made primitive with positive leading coefficient.
    """

    minpoly: IntPoly

    def __post_init__(self):
        f = self.minpoly
        if f.degree < 1:
            raise ParseError("a minimal polynomial has degree >= 1")
        a = list(f.coeffs)
        if _deg(_gcd(a, _derivative(a))) > 0:
            raise NotSquarefree(f"{f} is not squarefree")
        object.__setattr__(self, "minpoly", IntPoly(tuple(_pp(a))))

    @classmethod
    def parse(cls, text) -> "AlgebraicSpec":
        return cls(parse_intpoly(text))

    @classmethod
    def rational(cls, r: Fraction | int) -> "AlgebraicSpec":
        r = Fraction(r)
        return cls(IntPoly((-r.numerator, r.denominator)))


def product_of_conjugates_decide(alpha: AlgebraicSpec, beta: AlgebraicSpec,
                                 gamma: AlgebraicSpec) -> bool:
    """True iff gamma = alpha' beta' for conjugates alpha' of alpha and beta' of beta."""
    C = composed_product(alpha.minpoly, beta.minpoly)
    return _exact_div(_pp(list(C.coeffs)), _pp(list(gamma.minpoly.coeffs))) is not None

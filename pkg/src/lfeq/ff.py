"""Exact arithmetic in GF(p^n).

Elements are encoded by their canonical integer index ``sum(c_i * p**i)``
where ``c_i`` are the coordinates in the basis ``1, a, ..., a^(n-1)`` and
``a`` is the class of ``x`` modulo the field's canonical modulus.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .config import limits
from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    IndexOutOfRange,
    NotPrime,
    ParseError,
    ZeroPolynomial,
)

# full q*q tables are only materialised up to this order
TABLE_LIMIT = 1024
LOG_LIMIT = 4096


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# --- dense polynomials over Z_p, ascending coefficient lists -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a, b, p):
    m = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(m)]
    return _trim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    a = list(a)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    quot = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv_lead % p
        if c:
            quot[k - db] = c
            for j, y in enumerate(b):
                a[k - db + j] = (a[k - db + j] - c * y) % p
    return _trim(quot), _trim(a[:db])


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _ppowmod(base, e, f, p):
    result = [1]
    base = _pdivmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), f, p)[1]
        base = _pdivmod(_pmul(base, base, p), f, p)[1]
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over Z_p.

    f is irreducible iff x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1
    for every prime l dividing n.
    """
    f = _trim([c % p for c in f])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    frob = {0: [0, 1]}
    cur = [0, 1]
    for k in range(1, n + 1):
        cur = _ppowmod(cur, p, f, p)
        frob[k] = cur
    if _psub(frob[n], [0, 1], p):
        return False
    for ell in prime_factors(n):
        h = _psub(frob[n // ell], [0, 1], p)
        if len(_pgcd(h, f, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    """First irreducible monic degree-n polynomial in the scan order.

    Candidates are ordered by the integer ``sum(c_i p^i)`` of their
    non-leading coefficients.
    """
    for code in range(p**n):
        low = [(code // p**i) % p for i in range(n)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# --- fields -------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """GF(p^n) presented as Z_p[a]/(modulus). Build through :func:`make_field`."""

    p: int
    n: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def prime_field(self) -> "FieldSpec":
        return make_field(self.p, 1)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def gen(self) -> "FieldElem":
        """The class ``a`` of x; equals the integer p in the prime field."""
        return FieldElem(self, self.p if self.n > 1 else 0)

    def __str__(self) -> str:
        return f"GF({self.q})"

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={format_poly_zp(self.modulus)})"

    def elem(self, x) -> "FieldElem":
        """Coerce an index, element text, or FieldElem into this field."""
        if isinstance(x, FieldElem):
            if x.spec != self:
                raise FieldMismatch(f"{x!r} is not in {self}")
            return x
        if isinstance(x, (int, np.integer)):
            x = int(x)
            if not 0 <= x < self.q:
                raise IndexOutOfRange(f"index {x} outside [0, {self.q})")
            return FieldElem(self, x)
        if isinstance(x, str):
            return parse_element(self, x)
        raise TypeError(f"cannot convert {type(x).__name__} to a field element")

    def elements(self) -> Iterator["FieldElem"]:
        check_enumerable(self.q)
        return (FieldElem(self, i) for i in range(self.q))

    def nonzero(self) -> Iterator["FieldElem"]:
        check_enumerable(self.q)
        return (FieldElem(self, i) for i in range(1, self.q))

    # integer-level arithmetic on canonical indices

    def digits(self, x: int) -> list[int]:
        p = self.p
        return [(x // p**i) % p for i in range(self.n)]

    def from_digits(self, ds: Sequence[int]) -> int:
        p = self.p
        return sum((int(c) % p) * p**i for i, c in enumerate(ds))

    def add(self, x: int, y: int) -> int:
        if self.n == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        return self.from_digits([a + b for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x: int) -> int:
        if self.n == 1:
            return -x % self.p
        if self.p == 2:
            return x
        return self.from_digits([-a for a in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.n == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        tables = _log_exp(self)
        if tables is not None:
            log, exp = tables
            return exp[(log[x] + log[y]) % (self.q - 1)]
        return self._polymul(x, y)

    def _polymul(self, x: int, y: int) -> int:
        prod = _pmul(self.digits(x), self.digits(y), self.p)
        return self.from_digits(_pdivmod(prod, list(self.modulus), self.p)[1])

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.n == 1:
            return pow(x, self.p - 2, self.p)
        tables = _log_exp(self)
        if tables is not None:
            log, exp = tables
            return exp[(-log[x]) % (self.q - 1)]
        return self.pow(x, self.q - 2)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        if e == 0:
            return 1
        if x == 0:
            return 0
        if self.n == 1:
            return pow(x, e, self.p)
        tables = _log_exp(self)
        if tables is not None:
            log, exp = tables
            return exp[(log[x] * e) % (self.q - 1)]
        result, base = 1, x
        while e:
            if e & 1:
                result = self._polymul(result, base)
            base = self._polymul(base, base)
            e >>= 1
        return result


def check_enumerable(size: int) -> None:
    bound = limits().max_enum
    if size > bound:
        raise FieldTooLarge(f"refusing to enumerate {size} elements (bound {bound})")


def make_field(p: int, n: int = 1) -> FieldSpec:
    """Canonical GF(p^n); for n=1 the modulus is x and arithmetic is plain Z_p."""
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DegreeOutOfRange(f"degree must be >= 1, got {n}")
    if p**n > limits().max_enum:
        raise DegreeOutOfRange(f"{p}^{n} exceeds the enumeration bound {limits().max_enum}")
    return _make_field(int(p), int(n))


@lru_cache(maxsize=None)
def _make_field(p: int, n: int) -> FieldSpec:
    return FieldSpec(p, n, canonical_modulus(p, n))


@lru_cache(maxsize=None)
def _log_exp(spec: FieldSpec):
    """Discrete log/exp tables w.r.t. a primitive element, for small fields."""
    q = spec.q
    if spec.n == 1 or q > LOG_LIMIT:
        return None
    g = _primitive_element(spec)
    exp = [0] * (q - 1)
    log = [0] * q
    cur = 1
    for k in range(q - 1):
        exp[k] = cur
        log[cur] = k
        cur = spec._polymul(cur, g)
    return log, exp


def _primitive_element(spec: FieldSpec) -> int:
    q = spec.q
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(_slow_pow(spec, g, (q - 1) // ell) != 1 for ell in factors):
            return g
    return 1  # q == 2


def _slow_pow(spec, x, e):
    result, base = 1, x
    while e:
        if e & 1:
            result = spec._polymul(result, base)
        base = spec._polymul(base, base)
        e >>= 1
    return result


# --- vectorised arithmetic ----------------------------------------------------

class VecOps:
    """Elementwise field arithmetic on integer numpy arrays of indices."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.prime = spec.n == 1
        self._add = self._mul = None
        if not self.prime and spec.q <= TABLE_LIMIT:
            q = spec.q
            idx = np.arange(q)
            add = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            for x in range(q):
                add[x] = [spec.add(x, y) for y in range(q)]
                mul[x] = [spec.mul(x, y) for y in range(q)]
            self._add, self._mul = add, mul
            self._neg = np.array([spec.neg(int(x)) for x in idx], dtype=np.int64)
            self._inv = np.array([0] + [spec.inv(int(x)) for x in idx[1:]], dtype=np.int64)

    def add(self, a, b):
        if self.prime:
            return (np.asarray(a) + b) % self.p
        if self._add is not None:
            return self._add[a, b]
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._from_digits(self._digits(a) + self._digits(b))

    def neg(self, a):
        if self.prime:
            return (-np.asarray(a)) % self.p
        if self._add is not None:
            return self._neg[a]
        if self.p == 2:
            return np.asarray(a)
        return self._from_digits(-self._digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.prime:
            return (np.asarray(a) * b) % self.p
        if self._mul is not None:
            return self._mul[a, b]
        return self._slow_mul(np.asarray(a), np.asarray(b))

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        if self.prime:
            return np.vectorize(lambda x: pow(int(x), self.p - 2, self.p), otypes=[np.int64])(a)
        if self._inv is not None:
            return self._inv[a]
        return np.vectorize(self.spec.inv, otypes=[np.int64])(a)

    def _digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        p, n = self.p, self.spec.n
        return np.stack([(a // p**i) % p for i in range(n)], axis=-1)

    def _from_digits(self, d):
        p = self.p
        d = d % p
        return sum(d[..., i] * p**i for i in range(d.shape[-1]))

    def _slow_mul(self, a, b):
        a, b = np.broadcast_arrays(a, b)
        da, db = self._digits(a), self._digits(b)
        n, p = self.spec.n, self.p
        prod = np.zeros(a.shape + (2 * n - 1,), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                prod[..., i + j] += da[..., i] * db[..., j]
        prod %= p
        mod = self.spec.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[..., k].copy()
            for j in range(n + 1):
                prod[..., k - n + j] = (prod[..., k - n + j] - c * mod[j]) % p
        return self._from_digits(prod[..., :n])


@lru_cache(maxsize=None)
def vec_ops(spec: FieldSpec) -> VecOps:
    return VecOps(spec)


# --- elements -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FieldElem:
    """An element of GF(p^n), stored by canonical index.

    Plain Python ints on either side of ``+``, ``-``, ``*`` are read as
    integers (multiples of 1), not as indices.
    """

    spec: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.spec.digits(self.value))

    @property
    def index(self) -> int:
        return self.value

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise FieldMismatch(f"{other.spec} vs {self.spec}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.spec.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.sub(o, self.value))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.mul(self.value, self.spec.inv(o)))

    def __pow__(self, e: int):
        return FieldElem(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"FieldElem({self.spec}, {format_element(self)})"


def _same(u: FieldElem, v: FieldElem) -> None:
    if u.spec != v.spec:
        raise FieldMismatch(f"{u.spec} vs {v.spec}")


def ff_add(u: FieldElem, v: FieldElem) -> FieldElem:
    _same(u, v)
    return u + v


def ff_sub(u: FieldElem, v: FieldElem) -> FieldElem:
    _same(u, v)
    return u - v


def ff_neg(u: FieldElem) -> FieldElem:
    return -u


def ff_mul(u: FieldElem, v: FieldElem) -> FieldElem:
    _same(u, v)
    return u * v


def ff_inv(u: FieldElem) -> FieldElem:
    return u.inverse()


def ff_pow(u: FieldElem, e: int) -> FieldElem:
    return u**e


def encode(u: FieldElem) -> int:
    return u.value


def decode(spec: FieldSpec, index: int) -> FieldElem:
    return spec.elem(int(index))


def frobenius(u: FieldElem, j: int = 1) -> FieldElem:
    """The automorphism u -> u^(p^j), 0 <= j < n."""
    n = u.spec.n
    if not 0 <= j < n:
        raise IndexOutOfRange(f"Frobenius index {j} outside [0, {n})")
    out = u
    for _ in range(j):
        out = out**u.spec.p
    return out


def frobenius_orbit(u: FieldElem) -> list[FieldElem]:
    orbit = [u]
    nxt = u**u.spec.p
    while nxt != u:
        orbit.append(nxt)
        nxt = nxt**u.spec.p
    return orbit


def minimal_poly(u: FieldElem) -> "PolyFF":
    """Monic minimal polynomial of u over Z_p, as the product over its Frobenius orbit."""
    spec = u.spec
    poly = PolyFF(spec, (1,))
    for c in frobenius_orbit(u):
        poly = poly * PolyFF(spec, ((-c).value, 1))
    prime = spec.prime_field
    # the coefficients lie in the prime subfield, whose indices are 0..p-1
    assert all(v < spec.p for v in poly.values)
    return PolyFF(prime, poly.values)


@dataclass(frozen=True)
class Subfield:
    """The unique subfield GF(p^d): the zeros of x^(p^d) - x."""

    spec: FieldSpec
    d: int

    @property
    def size(self) -> int:
        return self.spec.p**self.d

    def contains(self, u: FieldElem) -> bool:
        return u ** (self.spec.p**self.d) == u

    __contains__ = contains

    def elements(self) -> list[FieldElem]:
        return [u for u in self.spec.elements() if self.contains(u)]


def subfields(spec: FieldSpec) -> list[Subfield]:
    return [Subfield(spec, d) for d in range(1, spec.n + 1) if spec.n % d == 0]


# --- text syntax -------------------------------------------------------------

def format_element(u: FieldElem) -> str:
    if u.value == 0:
        return "0"
    terms = []
    for k, c in enumerate(u.coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            power = "a" if k == 1 else f"a^{k}"
            terms.append(power if c == 1 else f"{c}*{power}")
    return "+".join(terms)


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:a(?:\^(\d+))?)?$")


def parse_element(spec: FieldSpec, text: str) -> FieldElem:
    """Parse ``"1+a"``-style text or a bare canonical index."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty element text")
    if s.isdigit():
        return spec.elem(int(s))
    acc = spec.zero
    for term in s.split("+"):
        m = _TERM.match(term)
        if not term or m is None or (m.group(1) is None and "a" not in term):
            raise ParseError(f"bad element term {term!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if "a" in term:
            power = int(m.group(2)) if m.group(2) is not None else 1
        else:
            power = 0
        acc = acc + coeff * spec.gen**power if power else acc + coeff
    return acc


def format_poly_zp(coeffs: Sequence[int], var: str = "x") -> str:
    """Descending text of an ascending integer coefficient vector."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            power = var if k == 1 else f"{var}^{k}"
            terms.append(power if c == 1 else f"{c}*{power}")
    return "+".join(terms) if terms else "0"


# --- polynomials over a field ------------------------------------------------

@dataclass(frozen=True)
class PolyFF:
    """Dense univariate polynomial over a FieldSpec; ``values`` ascending, trimmed."""

    spec: FieldSpec
    values: tuple[int, ...]

    def __post_init__(self):
        vals = list(self.values)
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "values", tuple(int(v) for v in vals))

    @classmethod
    def from_coeffs(cls, spec: FieldSpec, coeffs) -> "PolyFF":
        return cls(spec, tuple(spec.elem(c).value for c in coeffs))

    @property
    def coeffs(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.spec, v) for v in self.values)

    @property
    def degree(self) -> int:
        return len(self.values) - 1

    def is_zero(self) -> bool:
        return not self.values

    def lead(self) -> FieldElem:
        return FieldElem(self.spec, self.values[-1]) if self.values else self.spec.zero

    def __call__(self, x: FieldElem) -> FieldElem:
        x = self.spec.elem(x)
        acc = 0
        for c in reversed(self.values):
            acc = self.spec.add(self.spec.mul(acc, x.value), c)
        return FieldElem(self.spec, acc)

    def _check(self, other: "PolyFF") -> None:
        if other.spec != self.spec:
            raise FieldMismatch(f"{other.spec} vs {self.spec}")

    def __add__(self, other: "PolyFF") -> "PolyFF":
        self._check(other)
        a, b = self.values, other.values
        m = max(len(a), len(b))
        add = self.spec.add
        return PolyFF(self.spec, tuple(add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                                       for i in range(m)))

    def __neg__(self) -> "PolyFF":
        return PolyFF(self.spec, tuple(self.spec.neg(v) for v in self.values))

    def __sub__(self, other: "PolyFF") -> "PolyFF":
        return self + (-other)

    def __mul__(self, other: "PolyFF") -> "PolyFF":
        self._check(other)
        a, b = self.values, other.values
        if not a or not b:
            return PolyFF(self.spec, ())
        sp = self.spec
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = sp.add(out[i + j], sp.mul(x, y))
        return PolyFF(sp, tuple(out))

    def scale(self, c: FieldElem) -> "PolyFF":
        c = self.spec.elem(c)
        return PolyFF(self.spec, tuple(self.spec.mul(v, c.value) for v in self.values))

    def __divmod__(self, other: "PolyFF"):
        self._check(other)
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        sp = self.spec
        rem = list(self.values)
        b = other.values
        db = len(b) - 1
        inv_lead = sp.inv(b[-1])
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = sp.mul(rem[k], inv_lead)
            if c:
                quot[k - db] = c
                for j, y in enumerate(b):
                    rem[k - db + j] = sp.sub(rem[k - db + j], sp.mul(c, y))
        return PolyFF(sp, tuple(quot)), PolyFF(sp, tuple(rem[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "PolyFF":
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no monic form")
        return self.scale(self.lead().inverse())

    def format(self, var: str = "x") -> str:
        sp = self.spec
        terms = []
        for k in range(len(self.values) - 1, -1, -1):
            v = self.values[k]
            if v == 0:
                continue
            txt = format_element(FieldElem(sp, v))
            if v >= sp.p:
                txt = f"({txt})"
            if k == 0:
                terms.append(txt)
            else:
                power = var if k == 1 else f"{var}^{k}"
                terms.append(power if v == 1 else f"{txt}*{power}")
        return "+".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.format()


_POLY_TERM = re.compile(r"^(?:(\d+|\([^()]*\))\*?)?(?:([a-z])(?:\^(\d+))?)?$")


def parse_poly(spec: FieldSpec, text: str, var: str | None = None) -> PolyFF:
    """Parse ``"x^2+x+1"`` (either order; ``(1+a)*x`` for non-prime coefficients)."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial text")
    pieces = []
    depth, start = 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            pieces.append(s[start:i])
            start = i
    pieces.append(s[start:])
    acc: dict[int, int] = {}
    for piece in pieces:
        sign = 1
        if piece.startswith("+"):
            piece = piece[1:]
        elif piece.startswith("-"):
            sign, piece = -1, piece[1:]
        m = _POLY_TERM.match(piece)
        if not piece or m is None or (m.group(1) is None and m.group(2) is None):
            raise ParseError(f"bad polynomial term {piece!r} in {text!r}")
        if m.group(2) is not None and var is not None and m.group(2) != var:
            raise ParseError(f"unexpected variable {m.group(2)!r} in {text!r}")
        if m.group(2) == "a":
            raise ParseError("'a' denotes the field generator, not a variable")
        raw = m.group(1)
        if raw is None:
            c = spec.one
        elif raw.startswith("("):
            c = parse_element(spec, raw[1:-1])
        else:
            c = int(raw) * spec.one
        if sign < 0:
            c = -c
        if m.group(2) is None:
            k = 0
        else:
            k = int(m.group(3)) if m.group(3) is not None else 1
        acc[k] = spec.add(acc.get(k, 0), c.value)
    deg = max(acc) if acc else -1
    return PolyFF(spec, tuple(acc.get(k, 0) for k in range(deg + 1)))

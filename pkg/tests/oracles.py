"""Independent brute-force oracles for the test suite.

Nothing here calls into lfeq arithmetic: fields are rebuilt from sympy's
galoistools, linear algebra is plain Python, and equation systems are
assembled directly from their definitions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import prod

from sympy import ZZ
from sympy.polys.galoistools import gf_add, gf_mul, gf_rem


class OracleField:
    """GF(p^n) as Z_p[x] / (modulus), elements as canonical indices."""

    def __init__(self, p: int, modulus_ascending):
        self.p = p
        self.n = len(modulus_ascending) - 1
        self.q = p**self.n
        self.mod = [int(c) for c in reversed(modulus_ascending)]

    def digits(self, x: int) -> list[int]:
        return [(x // self.p**k) % self.p for k in range(self.n)]

    def index(self, ds) -> int:
        return sum(int(d) % self.p * self.p**k for k, d in enumerate(ds))

    def _poly(self, x: int) -> list[int]:
        d = self.digits(x)[::-1]
        while d and d[0] == 0:
            d.pop(0)
        return d

    def _elem(self, poly) -> int:
        return self.index([int(c) for c in reversed(poly)])

    def add(self, x: int, y: int) -> int:
        return self._elem(gf_add(self._poly(x), self._poly(y), self.p, ZZ))

    def neg(self, x: int) -> int:
        return self.index([-d for d in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        prod_ = gf_mul(self._poly(x), self._poly(y), self.p, ZZ)
        return self._elem(gf_rem(prod_, self.mod, self.p, ZZ))

    def scal(self, c: int, x: int) -> int:
        """Integer multiple c * x."""
        return self.index([c * d for d in self.digits(x)])

    def elements(self):
        return range(self.q)


# --- determinants ---------------------------------------------------------------

def _sign(perm) -> int:
    s = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def leibniz_det(F: OracleField, A) -> int:
    n = len(A)
    acc = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term = F.mul(term, A[i][j])
        acc = F.add(acc, term if _sign(perm) > 0 else F.neg(term))
    return acc


def _padd(F, a, b):
    m = max(len(a), len(b))
    return [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(m)]


def _pmul(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def leibniz_charpoly(F: OracleField, A) -> list[int]:
    """det(tI - A) by the Leibniz formula with polynomial entries, ascending."""
    n = len(A)
    M = [[[F.neg(A[i][j]), 1] if i == j else [F.neg(A[i][j])] for j in range(n)]
         for i in range(n)]
    acc = [0]
    for perm in itertools.permutations(range(n)):
        term = [1]
        for i, j in enumerate(perm):
            term = _pmul(F, term, M[i][j])
        if _sign(perm) < 0:
            term = [F.neg(c) for c in term]
        acc = _padd(F, acc, term)
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    return acc


# --- semi-homogeneous maps by enumeration ----------------------------------------

def biadditive_solutions(F: OracleField, alpha: int, beta: int, gamma: int) -> list[tuple]:
    """All non-zero B in K^(n x n) whose bi-additive A(u, v) = sum u_k v_l B_kl
    satisfies A(alpha u, beta v) = gamma A(u, v) on K x K."""
    n = F.n
    pairs = [(k, l) for k in range(n) for l in range(n)]

    def value(B, u, v):
        du, dv = F.digits(u), F.digits(v)
        acc = 0
        for (k, l), b in zip(pairs, B):
            acc = F.add(acc, F.scal(du[k] * dv[l], b))
        return acc

    out = []
    for B in itertools.product(F.elements(), repeat=n * n):
        if not any(B):
            continue
        if all(value(B, F.mul(alpha, u), F.mul(beta, v)) == F.mul(gamma, value(B, u, v))
               for u in F.elements() for v in F.elements()):
            out.append(B)
    return out


def additive_solutions(F: OracleField, alpha: int, beta: int) -> list[tuple]:
    """All non-zero Z_p-matrices L with L(alpha x) = beta L(x) on K."""
    n, p = F.n, F.p

    def apply(L, x):
        d = F.digits(x)
        return F.index([sum(L[r * n + c] * d[c] for c in range(n)) % p for r in range(n)])

    out = []
    for L in itertools.product(range(p), repeat=n * n):
        if not any(L):
            continue
        if all(apply(L, F.mul(alpha, x)) == F.mul(beta, apply(L, x)) for x in F.elements()):
            out.append(L)
    return out


def frobenius_conjugate(F: OracleField, alpha: int, beta: int) -> bool:
    """beta = alpha^(p^j) for some j."""
    cur = alpha
    for _ in range(F.n):
        if cur == beta:
            return True
        nxt = 1
        for _ in range(F.p):
            nxt = F.mul(nxt, cur)
        cur = nxt
    return False


# --- equation systems over a prime field, s = t = 1 -------------------------------

def rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def prime_nullity(variant: str, p: int, alphas=(), betas=(), gammas=()) -> int:
    """Solution-space dimension over Z_p of a two-variable equation on Z_p x Z_p
    (or one-variable on Z_p), with every unknown pinned to 0 at the origin."""
    n = len(alphas) if alphas else 2
    one_var = variant == "OneVar"
    if one_var:
        names = ["f"] + [f"f{i}" for i in range(1, n + 1)]
    elif variant == "MultiUnknown":
        names = ["f"] + [f"f{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    elif variant == "CauchyXY":
        names = ["f", "g", "h"]
    else:
        names = ["f"]
    points = list(range(p)) if one_var else [(x, y) for x in range(p) for y in range(p)]
    points = [pt for pt in points if pt not in (0, (0, 0))]
    col = {(nm, pt): i for i, (nm, pt) in enumerate(itertools.product(names, points))}
    ncols = len(col)

    def row(terms):
        r = [0] * ncols
        for c, nm, pt in terms:
            if (nm, pt) in col:
                r[col[nm, pt]] = (r[col[nm, pt]] + c) % p
        return r

    rows = []
    if one_var:
        for xs in itertools.product(range(p), repeat=n):
            lhs = sum(a * x for a, x in zip(alphas, xs)) % p
            rows.append(row([(1, "f", lhs)] + [(-1, f"f{i + 1}", xs[i]) for i in range(n)]))
        return ncols - rank_mod_p(rows, p)
    half = pow(2, -1, p) if p != 2 else None
    for xs in itertools.product(range(p), repeat=n):
        for ys in itertools.product(range(p), repeat=n):
            if variant in ("MultiUnknown", "SingleUnknownWeighted"):
                lhs = (sum(a * x for a, x in zip(alphas, xs)) % p,
                       sum(b * y for b, y in zip(betas, ys)) % p)
                terms = [(1, "f", lhs)]
                for i in range(n):
                    for j in range(n):
                        if variant == "MultiUnknown":
                            terms.append((-1, f"f{i + 1}{j + 1}", (xs[i], ys[j])))
                        else:
                            terms.append((-gammas[i][j], "f", (xs[i], ys[j])))
            else:
                (x1, x2), (y1, y2) = xs, ys
                corners = [(x1, y1), (x1, y2), (x2, y1), (x2, y2)]
                s = ((x1 + x2) % p, (y1 + y2) % p)
                if variant == "BiAdditivity":
                    terms = [(1, "f", s)] + [(-1, "f", c) for c in corners]
                elif variant == "Rectangle" and p == 2:
                    terms = [(1, "f", c) for c in corners]
                elif variant == "Rectangle":
                    mid = (s[0] * half % p, s[1] * half % p)
                    terms = [(4, "f", mid)] + [(-1, "f", c) for c in corners]
                else:
                    terms = [(1, "f", s), (-1, "g", (x1, y1)), (-1, "h", (x2, y2))]
            rows.append(row(terms))
    return ncols - rank_mod_p(rows, p)


# --- char 0 ---------------------------------------------------------------------

def poly_from_roots(lead: int, roots) -> list[int]:
    """Ascending integer coefficients of lead * prod (x - r)."""
    out = [lead]
    for r in roots:
        nxt = [0] * (len(out) + 1)
        for k, c in enumerate(out):
            nxt[k + 1] += c
            nxt[k] -= r * c
        out = nxt
    return out


def resultant_from_roots(lf: int, rf, lg: int, rg) -> int:
    """Res(f, g) = lc(f)^deg g * lc(g)^deg f * prod (r_i - s_j)."""
    return lf ** len(rg) * lg ** len(rf) * prod(r - s for r in rf for s in rg)


def rational_minpoly(r: Fraction) -> list[int]:
    r = Fraction(r)
    return [-r.numerator, r.denominator]

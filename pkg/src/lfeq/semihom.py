"""Semi-homogeneous additive and bi-additive maps on GF(p^n).

An additive map a: K -> K is Z_p-linear, so it is a p-matrix ``L`` acting on
coordinates w.r.t. the basis 1, a, ..., a^(n-1).  A bi-additive map
A: K x K -> K is fixed by its values ``B[k][l] = A(b_k, b_l)``, and
A(alpha u, beta v) = gamma A(u, v) holds iff ``P_{alpha,beta}(B) = gamma B``
for the linear operator ``X -> sum_ij alpha_i beta_j (M^i)^T X M^j``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import la
from .errors import FieldMismatch, FieldTooLarge, NotASubfield, ZeroParameter
from .ff import FieldElem, FieldSpec, PolyFF, check_enumerable, make_field, minimal_poly, vec_ops
from .la import KernelBasis, MatFF


def _elem(spec: FieldSpec, x) -> FieldElem:
    if isinstance(x, FieldElem) and x.spec != spec:
        raise FieldMismatch(f"{x!r} is not in {spec}")
    return spec.elem(x)


def _nonzero(spec: FieldSpec, x, name: str) -> FieldElem:
    x = _elem(spec, x)
    if not x:
        raise ZeroParameter(f"{name} must be non-zero")
    return x


def translation_matrices(spec: FieldSpec) -> list[MatFF]:
    """M^(i): the Z_p-matrix of x -> a^i x; column k holds the coordinates of a^i a^k."""
    prime = spec.prime_field
    n = spec.n
    out = []
    for i in range(n):
        cols = [(spec.gen**i * spec.gen**k).coeffs if n > 1 else (1,) for k in range(n)]
        out.append(MatFF.from_array(prime, np.array(cols, dtype=np.int64).T))
    return out


def mult_matrix(alpha: FieldElem) -> np.ndarray:
    """Z_p-matrix of x -> alpha x, i.e. sum_i alpha_i M^(i)."""
    spec = alpha.spec
    n = spec.n
    cols = [(alpha * spec.gen**k).coeffs if n > 1 else (alpha.value,) for k in range(n)]
    return np.array(cols, dtype=np.int64).T


@dataclass(frozen=True)
class OperatorRep:
    """Matrix of P_{alpha,beta} on n x n matrices; B_kl sits at index k*n + l."""

    P: MatFF
    alpha: FieldElem
    beta: FieldElem

    @property
    def n(self) -> int:
        return self.alpha.spec.n

    def apply(self, X: MatFF) -> MatFF:
        n = self.n
        v = MatFF.from_array(X.spec, X.to_array().reshape(-1, 1))
        return MatFF.from_array(X.spec, (self.P @ v).to_array().reshape(n, n))


def operator_matrix(spec: FieldSpec, alpha, beta) -> OperatorRep:
    """Entry ((k,l),(r,s)) is sum_{i,j} alpha_i beta_j m^(i)_{rk} m^(j)_{sl}."""
    alpha, beta = _elem(spec, alpha), _elem(spec, beta)
    n, p = spec.n, spec.p
    ms = [m.to_array() for m in translation_matrices(spec)]
    a_c, b_c = alpha.coeffs, beta.coeffs
    # sum over i and j separately, then multiply
    left = sum(a_c[i] * ms[i] for i in range(n)) % p
    right = sum(b_c[j] * ms[j] for j in range(n)) % p
    P = np.zeros((n * n, n * n), dtype=np.int64)
    for k, l, r, s in itertools.product(range(n), repeat=4):
        P[k * n + l, r * n + s] = left[r, k] * right[s, l] % p
    # entries lie in Z_p, whose canonical indices coincide with their values
    return OperatorRep(MatFF.from_array(spec, P), alpha, beta)


def biadd_gammas(spec: FieldSpec, alpha, beta) -> list[tuple[FieldElem, int]]:
    """Non-zero eigenvalues of P_{alpha,beta} in K, with algebraic multiplicity."""
    alpha = _nonzero(spec, alpha, "alpha")
    beta = _nonzero(spec, beta, "beta")
    cp = la.char_poly(operator_matrix(spec, alpha, beta).P)
    return [(g, m) for g, m in la.roots_in_field(cp) if g]


def operator_char_poly(spec: FieldSpec, alpha, beta) -> PolyFF:
    return la.char_poly(operator_matrix(spec, alpha, beta).P)


@dataclass(frozen=True)
class BiAddWitness:
    B: MatFF
    alpha: FieldElem
    beta: FieldElem
    gamma: FieldElem

    @property
    def spec(self) -> FieldSpec:
        return self.alpha.spec

    def value(self, u: FieldElem, v: FieldElem) -> FieldElem:
        """Z_p-bilinear extension of the basis values."""
        sp = self.spec
        acc = sp.zero
        for k, uk in enumerate(u.coeffs):
            if uk:
                for l, vl in enumerate(v.coeffs):
                    if vl:
                        acc = acc + (uk * vl) * self.B[k, l]
        return acc

    def to_json(self) -> dict:
        sp = self.spec
        return {"p": sp.p, "n": sp.n, "modulus": list(sp.modulus),
                "alpha": self.alpha.value, "beta": self.beta.value,
                "gamma": self.gamma.value, "B": self.B.tolist()}

    @classmethod
    def from_json(cls, data: dict | str) -> "BiAddWitness":
        if isinstance(data, str):
            data = json.loads(data)
        spec = make_field(data["p"], data["n"])
        if tuple(data["modulus"]) != spec.modulus:
            raise FieldMismatch(f"modulus {data['modulus']} is not canonical for {spec}")
        return cls(MatFF.from_rows(spec, data["B"]), spec.elem(data["alpha"]),
                   spec.elem(data["beta"]), spec.elem(data["gamma"]))


def biadd_decide(spec: FieldSpec, alpha, beta, gamma) -> BiAddWitness | None:
    alpha = _nonzero(spec, alpha, "alpha")
    beta = _nonzero(spec, beta, "beta")
    gamma = _nonzero(spec, gamma, "gamma")
    space = la.eigenspace(operator_matrix(spec, alpha, beta).P, gamma)
    if not space.dimension:
        return None
    n = spec.n
    B = MatFF.from_array(spec, space[0].to_array().reshape(n, n))
    return BiAddWitness(B, alpha, beta, gamma)


def biadd_verify(w: BiAddWitness, s: int = 1, t: int = 1) -> bool:
    """Exhaustively check A(alpha u, beta v) = gamma A(u, v) on K^s x K^t.

    The map on K^s x K^t is the witness applied to the first coordinates,
    the coordinate-projection extension of a map on K x K.
    """
    sp = w.spec
    q = sp.q
    check_enumerable(q**s)
    check_enumerable(q**t)
    if q ** (s + t) > 2**24:
        raise FieldTooLarge(f"{q ** (s + t)} pairs is too many to enumerate")
    # values on K x K as a table, then test the relation on all pairs at once
    table = np.array([[w.value(sp.elem(u), sp.elem(v)).value for v in range(q)]
                      for u in range(q)], dtype=np.int64)
    if not table.any():
        return False
    ops = vec_ops(sp)
    mul_a = np.array([sp.mul(w.alpha.value, u) for u in range(q)])
    mul_b = np.array([sp.mul(w.beta.value, v) for v in range(q)])
    # u ranges over K^s; only its first coordinate (index mod q) enters
    us = np.arange(q**s) % q
    vs = np.arange(q**t) % q
    lhs = table[mul_a[us]][:, mul_b[vs]]
    rhs = ops.mul(table[us][:, vs], w.gamma.value)
    return bool(np.array_equal(lhs, rhs))


@dataclass(frozen=True)
class AddWitness:
    """Z_p-linear map on K (matrix over the prime field) with a(alpha x) = beta a(x)."""

    L: MatFF
    alpha: FieldElem
    beta: FieldElem

    @property
    def spec(self) -> FieldSpec:
        return self.alpha.spec

    def apply(self, x: FieldElem) -> FieldElem:
        sp = self.spec
        coords = (self.L.to_array() @ np.array(x.coeffs, dtype=np.int64)) % sp.p
        return FieldElem(sp, sp.from_digits(coords))

    def verify(self) -> bool:
        return not self.L.is_zero() and all(
            self.apply(self.alpha * x) == self.beta * self.apply(x) for x in self.spec.elements())

    def to_json(self) -> dict:
        sp = self.spec
        return {"p": sp.p, "n": sp.n, "modulus": list(sp.modulus),
                "alpha": self.alpha.value, "beta": self.beta.value, "L": self.L.tolist()}


def conjugate_exponent(alpha: FieldElem, beta: FieldElem) -> int | None:
    """Least j with beta = alpha^(p^j), if any."""
    cur = alpha
    for j in range(alpha.spec.n):
        if cur == beta:
            return j
        cur = cur**alpha.spec.p
    return None


def add_decide(spec: FieldSpec, alpha, beta) -> AddWitness | None:
    """Non-zero additive a with a(alpha x) = beta a(x), or None.

    One exists iff alpha and beta share a minimal polynomial.  The witness
    maps alpha^k -> beta^k on the Z_p-basis of Z_p(alpha), and is extended by
    zero on a complement of that subfield's span, chosen greedily among the
    standard basis vectors.
    """
    alpha = _nonzero(spec, alpha, "alpha")
    beta = _nonzero(spec, beta, "beta")
    if minimal_poly(alpha) != minimal_poly(beta):
        return None
    prime = spec.prime_field
    p, n = spec.p, spec.n
    d = minimal_poly(alpha).degree
    powers = [alpha**k for k in range(d)]
    gens = [spec.one]
    span = [(g * a).coeffs for g in gens for a in powers]
    for j in range(n):
        if len(span) == n:
            break
        e = spec.gen**j if n > 1 else spec.one
        cand = span + [(e * a).coeffs for a in powers]
        if la.rank(MatFF.from_rows(prime, cand)) == len(cand):
            gens.append(e)
            span = cand
    W = MatFF.from_array(prime, np.array(span, dtype=np.int64).T)
    images = [(beta**k).coeffs for k in range(d)] + [(0,) * n] * (n - d)
    V = MatFF.from_array(prime, np.array(images, dtype=np.int64).T)
    L = V @ la.inverse(W)
    witness = AddWitness(L, alpha, beta)
    ma, mb = mult_matrix(alpha), mult_matrix(beta)
    Lx = L.to_array()
    assert not L.is_zero() and np.array_equal(Lx @ ma % p, mb @ Lx % p)
    return witness


def add_space(spec: FieldSpec, constraints: Sequence[tuple]) -> KernelBasis:
    """K-valued additive maps on K with a(alpha x) = c a(x) for each (alpha, c).

    A map is given by its values v on the Z_p-basis; the relation reads
    M_alpha^T v = c v.  The returned basis is over K.
    """
    n = spec.n
    blocks = []
    for alpha, c in constraints:
        alpha = _nonzero(spec, alpha, "alpha")
        c = _elem(spec, c)
        mt = MatFF.from_array(spec, mult_matrix(alpha).T)
        blocks.append(mt - la.scalar_mul(c, la.identity(spec, n)))
    if not blocks:
        return la.kernel(MatFF.zeros(spec, 1, n))
    return la.kernel(la.stack(blocks))


@dataclass(frozen=True)
class HomogeneityField:
    d: int
    members: tuple[FieldElem, ...]


def homogeneity_field(spec: FieldSpec, L: MatFF) -> HomogeneityField:
    """The set of alpha with a(alpha x) = alpha a(x) for all x, which is GF(p^d)."""
    check_enumerable(spec.q)
    Lx = L.to_array()
    p = spec.p
    members = [u for u in spec.elements()
               if np.array_equal(Lx @ mult_matrix(u) % p, mult_matrix(u) @ Lx % p)]
    mset = set(members)
    for u in members:
        for v in members:
            if u - v not in mset or (v and u / v not in mset):
                raise NotASubfield("homogeneity set is not closed")
    size = len(members)
    d = 0
    while p**d < size:
        d += 1
    if p**d != size or spec.n % d:
        raise NotASubfield(f"homogeneity set has {size} elements")
    sub = [u for u in spec.elements() if u ** (p**d) == u]
    if set(sub) != mset:
        raise NotASubfield("homogeneity set differs from GF(p^d)")
    return HomogeneityField(d, tuple(members))


def intersect_constraints(spec: FieldSpec, constraints: Sequence[tuple]) -> tuple[int, list[MatFF]]:
    """Bi-additive B with B(alpha_i u, beta_i v) = gamma_i B(u, v) for every constraint.

    gamma_i may be zero here (a relation forcing A(alpha x, beta y) = 0).
    """
    n = spec.n
    blocks = []
    for alpha, beta, gamma in constraints:
        alpha = _nonzero(spec, alpha, "alpha")
        beta = _nonzero(spec, beta, "beta")
        gamma = _elem(spec, gamma)
        P = operator_matrix(spec, alpha, beta).P
        blocks.append(P - la.scalar_mul(gamma, la.identity(spec, n * n)))
    if not blocks:
        blocks = [MatFF.zeros(spec, 1, n * n)]
    ker = la.kernel(la.stack(blocks))
    return ker.dimension, [MatFF.from_array(spec, v.to_array().reshape(n, n)) for v in ker]

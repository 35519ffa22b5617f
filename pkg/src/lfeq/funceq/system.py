"""Compile an equation into an exact linear system and compute its solution space.

Unknowns are the values of every unknown function on its finite domain,
except the value at the origin, which is pinned to 0.  There is one row per
tuple (x_1..x_n, y_1..y_n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config import limits
from ..errors import TooLarge
from ..ff import vec_ops
from ..la import RowReducer
from .spec import EquationSpec, Variant

CHUNK = 256
EVAL_CHUNK = 1 << 15


@dataclass(frozen=True)
class Term:
    """One summand ``coeff * name(point)`` of every row."""

    name: str
    points: np.ndarray
    coeff: int


def instance_count(eq: EquationSpec) -> int:
    n = eq.arity
    if eq.variant == Variant.ONE_VAR:
        return eq.X.size**n
    return eq.X.size**n * eq.Y.size**n


def unknown_count(eq: EquationSpec) -> int:
    return len(eq.unknown_names()) * (eq.domain_size() - 1)


def _scaled_sum(space, coeffs, pts):
    acc = np.zeros_like(pts[0])
    for c, x in zip(coeffs, pts):
        acc = space.add(acc, space._scale(c.value)[x])
    return acc


def terms(eq: EquationSpec, xs: list[np.ndarray], ys: list[np.ndarray]) -> list[Term]:
    """Row terms for the instances given by the coordinate arrays xs, ys."""
    sp = eq.field
    X, Y = eq.X, eq.Y
    n = eq.arity
    neg1 = sp.neg(1)
    v = eq.variant
    if v == Variant.ONE_VAR:
        out = [Term("f", _scaled_sum(X, eq.alphas, xs), 1)]
        out += [Term(f"f{i + 1}", xs[i], neg1) for i in range(n)]
        return out
    ny = Y.size

    def pt(x, y):
        return x * ny + y

    if v in (Variant.MULTI, Variant.WEIGHTED):
        lhs = pt(_scaled_sum(X, eq.alphas, xs), _scaled_sum(Y, eq.betas, ys))
        out = [Term("f", lhs, 1)]
        for i in range(n):
            for j in range(n):
                if v == Variant.MULTI:
                    out.append(Term(f"f{i + 1}{j + 1}", pt(xs[i], ys[j]), neg1))
                else:
                    g = eq.gammas[i][j].value
                    if g:
                        out.append(Term("f", pt(xs[i], ys[j]), sp.neg(g)))
        return out
    corners = [pt(xs[i], ys[j]) for i in range(2) for j in range(2)]
    if v == Variant.BI_ADDITIVITY:
        lhs = pt(X.add(xs[0], xs[1]), Y.add(ys[0], ys[1]))
        return [Term("f", lhs, 1)] + [Term("f", c, neg1) for c in corners]
    if v == Variant.RECTANGLE:
        if sp.p == 2:
            return [Term("f", c, 1) for c in corners]
        half = sp.inv(2 % sp.p)
        mx = X._scale(half)[X.add(xs[0], xs[1])]
        my = Y._scale(half)[Y.add(ys[0], ys[1])]
        return [Term("f", pt(mx, my), 4 % sp.p)] + [Term("f", c, neg1) for c in corners]
    if v == Variant.CAUCHY_XY:
        lhs = pt(X.add(xs[0], xs[1]), Y.add(ys[0], ys[1]))
        return [Term("f", lhs, 1), Term("g", pt(xs[0], ys[0]), neg1),
                Term("h", pt(xs[1], ys[1]), neg1)]
    raise AssertionError(v)  # pragma: no cover


def _all_instances(eq: EquationSpec):
    n = eq.arity
    sizes = [eq.X.size] * n + ([eq.Y.size] * n if eq.two_var else [])
    grids = np.indices(sizes).reshape(len(sizes), -1)
    return list(grids[:n]), list(grids[n:])


def random_instances(eq: EquationSpec, count: int, rng: np.random.Generator):
    n = eq.arity
    xs = [rng.integers(0, eq.X.size, count) for _ in range(n)]
    ys = [rng.integers(0, eq.Y.size, count) for _ in range(n)] if eq.two_var else []
    return xs, ys


@dataclass(frozen=True)
class LinearSystem:
    eq: EquationSpec
    names: tuple[str, ...]
    domain: int
    terms: tuple[Term, ...]
    nrows: int

    @property
    def ncols(self) -> int:
        return len(self.names) * (self.domain - 1)

    def offset(self, name: str) -> int:
        return self.names.index(name) * (self.domain - 1)

    def columns(self, term: Term, rows=slice(None)) -> np.ndarray:
        """Column of each row's unknown; -1 where the point is the pinned origin."""
        pts = term.points[rows]
        return np.where(pts > 0, self.offset(term.name) + pts - 1, -1)

    def dense(self, rows: np.ndarray) -> np.ndarray:
        ops = vec_ops(self.eq.field)
        out = np.zeros((len(rows), self.ncols), dtype=np.int64)
        r = np.arange(len(rows))
        for term in self.terms:
            cols = self.columns(term, rows)
            keep = cols >= 0
            out[r[keep], cols[keep]] = ops.add(out[r[keep], cols[keep]], term.coeff)
        return out


def build_system(eq: EquationSpec) -> LinearSystem:
    lim = limits()
    nu, nr = unknown_count(eq), instance_count(eq)
    if nu > lim.max_unknowns:
        raise TooLarge(f"{nu} unknowns exceeds the bound {lim.max_unknowns}")
    if nr > lim.max_instances:
        raise TooLarge(f"{nr} equation instances exceeds the bound {lim.max_instances}")
    xs, ys = _all_instances(eq)
    return LinearSystem(eq, eq.unknown_names(), eq.domain_size(), tuple(terms(eq, xs, ys)), nr)


def residuals(eq: EquationSpec, tables: np.ndarray, names, term_list) -> np.ndarray:
    """Row residuals for k candidate solutions at once.

    ``tables`` has shape (k, len(names), domain) of full function tables.
    """
    ops = vec_ops(eq.field)
    acc = None
    for term in term_list:
        vals = tables[:, names.index(term.name), term.points]
        contrib = ops.mul(vals, term.coeff)
        acc = contrib if acc is None else ops.add(acc, contrib)
    return acc


def vectors_to_tables(system: LinearSystem, vecs: np.ndarray) -> np.ndarray:
    """(k, N) unknown vectors -> (k, #names, domain) tables with zeros at the origin."""
    k = vecs.shape[0]
    m = len(system.names)
    tables = np.zeros((k, m, system.domain), dtype=np.int64)
    tables[:, :, 1:] = vecs.reshape(k, m, system.domain - 1)
    return tables


def assignment_tables(eq: EquationSpec, assignment: dict) -> np.ndarray:
    names = eq.unknown_names()
    return np.stack([np.asarray(assignment[nm], dtype=np.int64) for nm in names])[None]


def violations(system: LinearSystem, tables: np.ndarray) -> np.ndarray:
    """Indices of rows not satisfied by every given solution."""
    bad = []
    for start in range(0, system.nrows, EVAL_CHUNK):
        sl = slice(start, start + EVAL_CHUNK)
        chunk = [Term(t.name, t.points[sl], t.coeff) for t in system.terms]
        res = residuals(system.eq, tables, system.names, chunk)
        bad.append(start + np.flatnonzero(res.any(axis=0)))
    return np.concatenate(bad) if bad else np.zeros(0, dtype=np.int64)


def satisfies(eq: EquationSpec, assignment: dict, system: LinearSystem | None = None) -> bool:
    """Exhaustive check of every equation instance."""
    system = system or build_system(eq)
    tables = assignment_tables(eq, assignment)
    if tables[:, :, 0].any():
        return False
    return violations(system, tables).size == 0


@dataclass(frozen=True)
class SolutionSpace:
    eq: EquationSpec
    dimension: int
    vectors: np.ndarray
    names: tuple[str, ...]
    domain: int

    @property
    def basis(self) -> list[dict[str, np.ndarray]]:
        k = self.vectors.shape[0]
        m = len(self.names)
        out = []
        for b in range(k):
            tab = np.zeros((m, self.domain), dtype=np.int64)
            tab[:, 1:] = self.vectors[b].reshape(m, self.domain - 1)
            out.append({nm: tab[i] for i, nm in enumerate(self.names)})
        return out


def solution_space(eq: EquationSpec, seed: int = 0) -> SolutionSpace:
    """Kernel of the full system, computed exactly.

    Rows are fed to the eliminator in a shuffled order until the kernel of the
    rows seen so far is annihilated by every row; rows that still violate it
    are added and the check repeats.  The result is the kernel of the whole
    system, and the canonical basis does not depend on the row order.
    """
    system = build_system(eq)
    red = RowReducer(eq.field, system.ncols)
    rng = np.random.default_rng(seed)
    order = rng.permutation(system.nrows)
    pending = order[: 2 * system.ncols + CHUNK]
    while True:
        for start in range(0, len(pending), CHUNK):
            red.add(system.dense(pending[start:start + CHUNK]))
        kern = red.kernel()
        if kern.shape[0] == 0:
            break
        bad = violations(system, vectors_to_tables(system, kern))
        if bad.size == 0:
            break
        pending = bad[: 2 * system.ncols + CHUNK]
    space = SolutionSpace(eq, kern.shape[0], kern, system.names, system.domain)
    _spot_check(eq, space, rng)
    return space


def _spot_check(eq: EquationSpec, space: SolutionSpace, rng, count: int = 100) -> None:
    if not space.dimension:
        return
    xs, ys = random_instances(eq, count, rng)
    tables = np.zeros((space.dimension, len(space.names), space.domain), dtype=np.int64)
    tables[:, :, 1:] = space.vectors.reshape(space.dimension, len(space.names), -1)
    res = residuals(eq, tables, space.names, terms(eq, xs, ys))
    assert not res.any(), "basis element violates a sampled equation instance"

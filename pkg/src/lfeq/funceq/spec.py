"""Equation specifications and finite module spaces X = GF(q)^s."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence

import numpy as np

from ..errors import BadParameterShape, LfeqError, ParseError
from ..ff import FieldElem, FieldSpec, check_enumerable, make_field, vec_ops


class Variant(str, Enum):
    ONE_VAR = "OneVar"
    MULTI = "MultiUnknown"
    WEIGHTED = "SingleUnknownWeighted"
    BI_ADDITIVITY = "BiAdditivity"
    RECTANGLE = "Rectangle"
    CAUCHY_XY = "CauchyXY"


PRESETS = (Variant.BI_ADDITIVITY, Variant.RECTANGLE, Variant.CAUCHY_XY)


@dataclass(frozen=True, eq=False)
class ModuleSpace:
    """GF(q)^dim; points are indexed by sum(c_k q^k) over their coordinates."""

    spec: FieldSpec
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise BadParameterShape("module dimension must be >= 1")
        check_enumerable(self.size)

    def __eq__(self, other):
        return isinstance(other, ModuleSpace) and (self.spec, self.dim) == (other.spec, other.dim)

    def __hash__(self):
        return hash((self.spec, self.dim))

    @property
    def size(self) -> int:
        return self.spec.q**self.dim

    @property
    def zp_dim(self) -> int:
        """Dimension over the prime field."""
        return self.dim * self.spec.n

    @cached_property
    def coords(self) -> np.ndarray:
        """(size, dim) array of K-coordinates."""
        q = self.spec.q
        idx = np.arange(self.size)
        return np.stack([(idx // q**k) % q for k in range(self.dim)], axis=1)

    @cached_property
    def zp_coords(self) -> np.ndarray:
        """(size, dim*n) array of Z_p-coordinates; column r is the r-th base-p digit."""
        p = self.spec.p
        idx = np.arange(self.size)
        return np.stack([(idx // p**r) % p for r in range(self.zp_dim)], axis=1)

    @property
    def zp_basis(self) -> np.ndarray:
        """Indices of the Z_p-basis vectors (a digit 1 in position r)."""
        return self.spec.p ** np.arange(self.zp_dim)

    def from_coords(self, c: np.ndarray) -> np.ndarray:
        q = self.spec.q
        return sum(c[..., k] * q**k for k in range(self.dim))

    def add(self, x, y):
        ops = vec_ops(self.spec)
        return self.from_coords(ops.add(self.coords[x], self.coords[y]))

    def scale_perm(self, alpha) -> np.ndarray:
        """Index array mapping x to alpha * x."""
        alpha = self.spec.elem(alpha)
        return self._scale(alpha.value)

    def _scale(self, a: int) -> np.ndarray:
        cache = self.__dict__.setdefault("_scale_cache", {})
        if a not in cache:
            ops = vec_ops(self.spec)
            cache[a] = self.from_coords(ops.mul(self.coords, a))
        return cache[a]


_NAMES = {
    Variant.BI_ADDITIVITY: ("f",),
    Variant.RECTANGLE: ("f",),
    Variant.CAUCHY_XY: ("f", "g", "h"),
    Variant.WEIGHTED: ("f",),
}


@dataclass(frozen=True)
class EquationSpec:
    """A fully parametrised linear functional equation over X = K^s, Y = K^t.

    OneVar:     f(sum alpha_i x_i) = sum f_i(x_i)                (X only)
    Multi:      f(sum alpha_i x_i, sum beta_j y_j) = sum_ij f_ij(x_i, y_j)
    Weighted:   f(sum alpha_i x_i, sum beta_j y_j) = sum_ij gamma_ij f(x_i, y_j)
    BiAdditivity, Rectangle, CauchyXY: fixed two-variable forms.
    """

    variant: Variant
    field: FieldSpec
    s: int
    t: int = 1
    arity: int = 2
    alphas: tuple[FieldElem, ...] = ()
    betas: tuple[FieldElem, ...] = ()
    gammas: tuple[tuple[FieldElem, ...], ...] = ()

    def __post_init__(self):
        v = self.variant
        n = self.arity
        if n < 2:
            raise BadParameterShape("arity must be >= 2")
        if v in (Variant.ONE_VAR, Variant.MULTI, Variant.WEIGHTED):
            if len(self.alphas) != n:
                raise BadParameterShape(f"expected {n} alphas, got {len(self.alphas)}")
        if v in (Variant.MULTI, Variant.WEIGHTED) and len(self.betas) != n:
            raise BadParameterShape(f"expected {n} betas, got {len(self.betas)}")
        if v == Variant.WEIGHTED:
            if n != 2 or len(self.gammas) != 2 or any(len(r) != 2 for r in self.gammas):
                raise BadParameterShape("weighted equation needs arity 2 and a 2x2 gamma matrix")
        if v == Variant.MULTI and n > 9:
            raise BadParameterShape("arity above 9 is not supported")
        if v in PRESETS and n != 2:
            raise BadParameterShape("presets have arity 2")
        for e in self.alphas + self.betas + tuple(g for r in self.gammas for g in r):
            if e.spec != self.field:
                raise BadParameterShape("coefficient from a different field")

    @classmethod
    def create(cls, variant, p: int, n_field: int = 1, s: int = 1, t: int = 1, arity: int = 2,
               alphas: Sequence = (), betas: Sequence = (), gammas: Sequence[Sequence] = ()):
        spec = make_field(p, n_field)
        variant = Variant(variant)
        return cls(variant, spec, s, t if variant != Variant.ONE_VAR else 1,
                   arity if variant not in PRESETS else 2,
                   tuple(spec.elem(a) for a in alphas), tuple(spec.elem(b) for b in betas),
                   tuple(tuple(spec.elem(g) for g in row) for row in gammas))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def X(self) -> ModuleSpace:
        return _module(self.field, self.s)

    @property
    def Y(self) -> ModuleSpace:
        return _module(self.field, self.t)

    @property
    def two_var(self) -> bool:
        return self.variant != Variant.ONE_VAR

    def unknown_names(self) -> tuple[str, ...]:
        n = self.arity
        if self.variant == Variant.ONE_VAR:
            return ("f",) + tuple(f"f{i}" for i in range(1, n + 1))
        if self.variant == Variant.MULTI:
            return ("f",) + tuple(f"f{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1))
        return _NAMES[self.variant]

    def domain_size(self) -> int:
        return self.X.size * (self.Y.size if self.two_var else 1)

    def to_json(self) -> dict:
        out = {"variant": self.variant.value, "p": self.field.p, "n_field": self.field.n,
               "s": self.s, "t": self.t, "arity": self.arity,
               "alphas": [a.value for a in self.alphas], "betas": [b.value for b in self.betas]}
        if self.gammas:
            out["gammas"] = [[g.value for g in row] for row in self.gammas]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict | str) -> "EquationSpec":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}") from None
        try:
            return cls.create(data["variant"], data["p"], data.get("n_field", 1), data.get("s", 1),
                              data.get("t", 1), data.get("arity", 2), data.get("alphas", ()),
                              data.get("betas", ()), data.get("gammas", ()))
        except KeyError as exc:
            raise ParseError(f"missing key {exc}") from None
        except ValueError as exc:
            if isinstance(exc, LfeqError):
                raise
            raise ParseError(str(exc)) from None

    def replace(self, **kw) -> "EquationSpec":
        from dataclasses import replace
        return replace(self, **kw)


def _module(spec: FieldSpec, dim: int) -> ModuleSpace:
    key = (spec, dim)
    if key not in _MODULES:
        _MODULES[key] = ModuleSpace(spec, dim)
    return _MODULES[key]


_MODULES: dict = {}

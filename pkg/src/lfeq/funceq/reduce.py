"""Reduce an n-variable MultiUnknown equation to a two-variable one.

Setting x_i = 0 for i outside {lam, kap} and y_j = 0 for j outside {mu, nu}
leaves a two-variable equation in which the discarded one-variable terms are
absorbed into the (lam, mu) and (kap, nu) unknowns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import BadIndices
from ..ff import vec_ops
from .spec import EquationSpec, Variant


@dataclass(frozen=True)
class Reduction:
    full: EquationSpec
    lam: int
    kap: int
    mu: int
    nu: int
    reduced: EquationSpec

    def transform(self, assignment: dict) -> dict[str, np.ndarray]:
        """Map a solution of the full equation to one of the reduced equation.

        f~_{lam,mu}(x, y) = f_{lam,mu}(x, y) + sum_{j not in {mu,nu}} f_{lam,j}(x, 0)
                            + sum_{i not in {lam,kap}} f_{i,mu}(0, y)
        and symmetrically for f~_{kap,nu}; the other two unknowns are kept.
        """
        eq = self.full
        ops = vec_ops(eq.field)
        nx, ny = eq.X.size, eq.Y.size
        n = eq.arity
        g = {k: np.asarray(v, dtype=np.int64).reshape(nx, ny) for k, v in assignment.items()}
        rest_i = [i for i in range(1, n + 1) if i not in (self.lam, self.kap)]
        rest_j = [j for j in range(1, n + 1) if j not in (self.mu, self.nu)]

        def tilde(i0, j0):
            acc = g[f"f{i0}{j0}"].copy()
            for j in rest_j:
                acc = ops.add(acc, g[f"f{i0}{j}"][:, 0][:, None])
            for i in rest_i:
                acc = ops.add(acc, g[f"f{i}{j0}"][0, :][None, :])
            return acc

        out = {
            "f": g["f"],
            "f11": tilde(self.lam, self.mu),
            "f12": g[f"f{self.lam}{self.nu}"],
            "f21": g[f"f{self.kap}{self.mu}"],
            "f22": tilde(self.kap, self.nu),
        }
        return {k: v.ravel().copy() for k, v in out.items()}


def reduce_to_two(eq: EquationSpec, lam: int, kap: int, mu: int, nu: int) -> Reduction:
    """Indices are 1-based, as in f_{1,1}, ..., f_{n,n}."""
    if eq.variant != Variant.MULTI or eq.arity <= 2:
        raise BadIndices("reduction applies to MultiUnknown equations with arity > 2")
    n = eq.arity
    if not all(1 <= k <= n for k in (lam, kap, mu, nu)):
        raise BadIndices(f"indices must lie in 1..{n}")
    if lam == kap or mu == nu:
        raise BadIndices("need lam != kap and mu != nu")
    reduced = eq.replace(arity=2, alphas=(eq.alphas[lam - 1], eq.alphas[kap - 1]),
                         betas=(eq.betas[mu - 1], eq.betas[nu - 1]))
    return Reduction(eq, lam, kap, mu, nu, reduced)

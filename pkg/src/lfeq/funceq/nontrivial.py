"""Non-trivial solutions of f(a1 x1 + a2 x2, b1 y1 + b2 y2) = sum gamma_ij f(x_i, y_j).

For each coefficient pattern the solution is a sum of structural pieces
(bi-additive, additive, or arbitrary vanishing-at-zero functions), each
subject to its own semi-homogeneity relations.  The report gives the
dimension of every piece, computed from those relations, next to the
brute-force dimension of the whole linear system.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import la, semihom
from ..errors import BadParameterShape
from ..ff import FieldElem, FieldSpec, vec_ops
from .spec import EquationSpec, ModuleSpace, Variant
from .structure import canonical_form
from .system import solution_space


def orbit_dim(perm: np.ndarray, c: FieldElem) -> int:
    """Dimension of {g vanishing at 0 : g(perm(z)) = c g(z)}.

    Along an orbit O of perm, g(perm^k z) = c^k g(z), which closes up
    consistently iff c^|O| = 1; each such orbit contributes one dimension.
    """
    seen = np.zeros(len(perm), dtype=bool)
    seen[0] = True
    dim = 0
    for z in range(1, len(perm)):
        if seen[z]:
            continue
        size = 0
        cur = z
        while not seen[cur]:
            seen[cur] = True
            cur = int(perm[cur])
            size += 1
        if c**size == c.spec.one:
            dim += 1
    return dim


def additive_dim(space: ModuleSpace, relations) -> int:
    """K-dimension of additive a on K^s with a(alpha x) = c a(x) for all relations."""
    return space.dim * semihom.add_space(space.spec, relations).dimension


def first_additive_dim(spec: FieldSpec, X: ModuleSpace, Y: ModuleSpace, beta: FieldElem,
                       relations) -> int:
    """Maps A additive in x with A(x, 0) = 0 and A(alpha x, beta y) = c A(x, y).

    Writing A(u, y) = sum_r u_r V[y, r] on each coordinate of X, a relation
    reads M_alpha^T V[beta y] = c V[y] for every y != 0.
    """
    n = spec.n
    ny = Y.size
    nunk = (ny - 1) * n
    sb = Y.scale_perm(beta)
    rows = []
    ops = vec_ops(spec)
    for alpha, c in relations:
        mt = semihom.mult_matrix(alpha).T
        eye_c = _scaled_eye(spec, n, c)
        for y in range(1, ny):
            block = np.zeros((n, nunk), dtype=np.int64)
            by = int(sb[y])
            block[:, (by - 1) * n:by * n] = mt
            block[:, (y - 1) * n:y * n] = ops.sub(block[:, (y - 1) * n:y * n], eye_c)
            rows.append(block)
    if not rows:
        return X.dim * nunk
    kern = la.kernel_array(spec, np.vstack(rows), nunk)
    return X.dim * kern.shape[0]


def _scaled_eye(spec: FieldSpec, n: int, c: FieldElem) -> np.ndarray:
    out = np.zeros((n, n), dtype=np.int64)
    out[np.arange(n), np.arange(n)] = c.value
    return out


@dataclass
class NontrivialReport:
    eq: EquationSpec
    case: str
    gammas: tuple  # in the canonical frame
    components: dict[str, int]
    brute_dim: int
    supported: bool = True
    free_case: bool = False
    relations: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def structural_dim(self) -> int | None:
        return sum(self.components.values()) if self.supported else None

    @property
    def A_dim(self) -> int:
        return self.components.get("A", 0)

    @property
    def chi_exists(self) -> bool:
        return self.components.get("chi", 0) > 0

    @property
    def zeta_exists(self) -> bool:
        return self.components.get("zeta", 0) > 0

    @property
    def nontrivial(self) -> bool:
        return self.brute_dim > 0

    @property
    def consistent(self) -> bool | None:
        if not self.supported:
            return None
        return self.structural_dim == self.brute_dim and \
            (self.brute_dim > 0) == any(d > 0 for d in self.components.values())

    def to_json(self) -> dict:
        return {
            "equation": self.eq.to_json(), "case": self.case,
            "canonical_gammas": [[g.value for g in r] for r in self.gammas],
            "supported": self.supported, "free_case": self.free_case,
            "components": self.components, "A_dim": self.A_dim,
            "chi_exists": self.chi_exists, "zeta_exists": self.zeta_exists,
            "structural_dim": self.structural_dim, "brute_dim": self.brute_dim,
            "consistent": self.consistent, "relations": self.relations, "notes": self.notes,
        }

    def table(self) -> str:
        lines = [f"case            {self.case}",
                 "gamma (canon.)  " + "; ".join(",".join(str(g) for g in r) for r in self.gammas)]
        for name, d in self.components.items():
            lines.append(f"{name:<15} dim {d}")
        for rel in self.relations:
            verdict = {True: "exists", False: "none", None: "-"}[rel["add_decide"]]
            lines.append(f"  {rel['component']}: {rel['relation']}  [{verdict}]")
        lines.append(f"structural dim  {self.structural_dim if self.supported else 'n/a'}")
        lines.append(f"brute-force dim {self.brute_dim}")
        lines.append(f"consistent      {self.consistent if self.supported else 'n/a'}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def _rel(component: str, text: str, alpha: FieldElem | None, c: FieldElem | None) -> dict:
    """Record a relation with the single-relation add_decide verdict when it applies."""
    verdict = None
    if alpha is not None and c is not None and alpha and c:
        verdict = semihom.add_decide(alpha.spec, alpha, c) is not None
    elif alpha is not None and c is not None:
        verdict = False
    return {"component": component, "relation": text, "add_decide": verdict}


def nontrivial_report(eq: EquationSpec) -> NontrivialReport:
    if eq.variant != Variant.WEIGHTED:
        raise BadParameterShape("nontrivial_report needs a SingleUnknownWeighted equation")
    brute = solution_space(eq).dimension
    label, _, ceq = canonical_form(eq)
    sp = ceq.field
    X, Y = ceq.X, ceq.Y
    (g11, g12), (g21, g22) = ceq.gammas
    a1, a2 = ceq.alphas
    b1, b2 = ceq.betas
    r1, r2 = g11 + g12, g21 + g22  # row sums
    k1, k2 = g11 + g21, g12 + g22  # column sums
    Dx, Dy = X.size - 1, Y.size - 1
    F = X.size * Y.size - 1
    all_zero = not any((g11, g12, g21, g22))
    rep = NontrivialReport(eq, label, ceq.gammas, {}, brute)
    comps = rep.components
    rels = rep.relations

    def sum_form(chi_ok: bool, zeta_dim: int):
        comps["chi"] = Dx if chi_ok else 0
        comps["zeta"] = zeta_dim

    if label == "all_zero":
        if all_zero:
            comps["f"] = F
            rep.free_case = True
            rep.notes.append("all coefficients vanish: every f with f(0,0)=0 solves")
        else:
            sum_form(not r1 and not r2, Dy if not k1 and not k2 else 0)
            rels.append({"component": "chi", "relation": f"g11+g12={r1}, g21+g22={r2} must vanish",
                         "add_decide": None})
            rels.append({"component": "zeta", "relation": f"g11+g21={k1}, g12+g22={k2} must vanish",
                         "add_decide": None})
    elif label == "one_nonzero":
        if all_zero:
            comps["f"] = F - Dy
            rep.free_case = True
            rep.notes.append("all gamma vanish: f(0, y) = 0, f free elsewhere")
        else:
            zeta = orbit_dim(Y.scale_perm(b2), k2) if not k1 else 0
            sum_form(not r1 and not r2, zeta)
            rels.append({"component": "zeta", "relation": f"zeta(b2 y) = {k2} zeta(y), g11+g21={k1}",
                         "add_decide": None})
    elif label == "alphas_only":
        if all_zero:
            comps["f"] = F - Dx
            rep.free_case = True
            rep.notes.append("all gamma vanish: f(x, 0) = 0, f free elsewhere")
        else:
            comps["a"] = additive_dim(X, [(a1, r1), (a2, r2)])
            comps["zeta"] = Dy if not k1 and not k2 else 0
            rels.append(_rel("a", f"a({a1} x) = {r1} a(x)", a1, r1))
            rels.append(_rel("a", f"a({a2} x) = {r2} a(x)", a2, r2))
    elif label == "diagonal_pair":
        if not any((g12, g21, g22)):
            sxy = (X.scale_perm(a1)[:, None] * Y.size + Y.scale_perm(b1)[None, :]).ravel()
            comps["f"] = orbit_dim(sxy, g11)
            rep.notes.append(f"f arbitrary subject to f({a1} x, {b1} y) = {g11} f(x, y)")
        else:
            comps["chi"] = orbit_dim(X.scale_perm(a1), r1) if not r2 else 0
            comps["zeta"] = orbit_dim(Y.scale_perm(b1), k1) if not k2 else 0
            rels.append({"component": "chi", "relation": f"chi({a1} x) = {r1} chi(x), g21+g22={r2}",
                         "add_decide": None})
            rels.append({"component": "zeta", "relation": f"zeta({b1} y) = {k1} zeta(y), g12+g22={k2}",
                         "add_decide": None})
    elif label == "three_nonzero":
        if g12 or g22:
            comps["A"] = 0
        else:
            comps["A"] = first_additive_dim(sp, X, Y, b1, [(a1, g11), (a2, g21)])
        comps["chi"] = additive_dim(X, [(a1, r1), (a2, r2)])
        comps["zeta"] = orbit_dim(Y.scale_perm(b1), k1) if not k2 else 0
        rels.append({"component": "A", "relation": f"A({a1} x, {b1} y) = {g11} A, "
                     f"A({a2} x, {b1} y) = {g21} A, g12={g12}, g22={g22}", "add_decide": None})
        rels.append(_rel("chi", f"chi({a1} x) = {r1} chi(x)", a1, r1))
        rels.append(_rel("chi", f"chi({a2} x) = {r2} chi(x)", a2, r2))
    elif label == "nondegenerate":
        if sp.p == 2:
            rep.supported = False
            rep.notes.append("characteristic 2: structural analysis unavailable, brute force only")
        else:
            cons = [(a, b, g) for a, row in zip((a1, a2), ceq.gammas)
                    for b, g in zip((b1, b2), row)]
            d, _ = semihom.intersect_constraints(sp, cons)
            comps["A"] = X.dim * Y.dim * d
            comps["chi"] = additive_dim(X, [(a1, r1), (a2, r2)])
            comps["zeta"] = additive_dim(Y, [(b1, k1), (b2, k2)])
            for a, b, g in cons:
                rels.append({"component": "A", "relation": f"A({a} x, {b} y) = {g} A(x, y)",
                             "add_decide": None})
            rels.append(_rel("chi", f"chi({a1} x) = {r1} chi(x)", a1, r1))
            rels.append(_rel("chi", f"chi({a2} x) = {r2} chi(x)", a2, r2))
            rels.append(_rel("zeta", f"zeta({b1} y) = {k1} zeta(y)", b1, k1))
            rels.append(_rel("zeta", f"zeta({b2} y) = {k2} zeta(y)", b2, k2))
    return rep

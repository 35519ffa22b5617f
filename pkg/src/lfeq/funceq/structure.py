"""Closed-form solution families: predicted dimensions, synthesis and decomposition.

Every supported equation is first brought to a canonical coefficient
arrangement by swapping the roles of X and Y and permuting indices.  In
that frame each case has a list of free parameters, each of one of the
kinds below; the predicted dimension is the sum of their dimensions.

Parameter kinds (K = GF(q), arrays hold canonical element indices):
  fn_X, fn_Y   arbitrary function vanishing at 0, full table
  fn_XY        arbitrary function on X x Y vanishing at the origin
  fn_XY_x0     function on X x Y vanishing on {0} x Y
  fn_XY_y0     function on X x Y vanishing on X x {0}
  add_X, add_Y additive map, values on the Z_p-basis
  biadd        bi-additive map, values on pairs of Z_p-basis vectors
  add1_XY      additive in x for each y, zero at y = 0: table [y, r]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ..errors import BadParameterShape, NotASolution, UnsupportedCase
from ..ff import vec_ops
from .spec import EquationSpec, ModuleSpace, Variant
from .system import satisfies


# --- canonical frames -------------------------------------------------------

PATTERNS = {
    (0, 0, 0, 0): "all_zero",
    (0, 0, 0, 1): "one_nonzero",
    (1, 1, 0, 0): "alphas_only",
    (1, 0, 1, 0): "diagonal_pair",
    (1, 1, 1, 0): "three_nonzero",
    (1, 1, 1, 1): "nondegenerate",
}


@dataclass(frozen=True)
class Transform:
    """swap X/Y, then reverse the alpha indices, then reverse the beta indices."""

    swap: bool = False
    perm_x: bool = False
    perm_y: bool = False
    # OneVar: order of the original indices in the canonical frame
    order: tuple[int, ...] = ()

    def apply_eq(self, eq: EquationSpec) -> EquationSpec:
        if eq.variant == Variant.ONE_VAR:
            return eq.replace(alphas=tuple(eq.alphas[i] for i in self.order))
        if eq.variant not in (Variant.MULTI, Variant.WEIGHTED):
            return eq
        s, t, al, be, ga = eq.s, eq.t, eq.alphas, eq.betas, eq.gammas
        if self.swap:
            s, t, al, be = t, s, be, al
            ga = tuple(zip(*ga)) if ga else ga
        if self.perm_x:
            al = al[::-1]
            ga = ga[::-1]
        if self.perm_y:
            be = be[::-1]
            ga = tuple(r[::-1] for r in ga)
        return eq.replace(s=s, t=t, alphas=tuple(al), betas=tuple(be),
                          gammas=tuple(tuple(r) for r in ga))

    def to_canonical(self, eq: EquationSpec, assignment: dict) -> dict:
        """Assignment in eq's frame -> assignment for apply_eq(eq)."""
        if eq.variant == Variant.ONE_VAR:
            out = {"f": assignment["f"]}
            for new, old in enumerate(self.order):
                out[f"f{new + 1}"] = assignment[f"f{old + 1}"]
            return out
        if eq.variant not in (Variant.MULTI, Variant.WEIGHTED):
            return dict(assignment)
        nx, ny = eq.X.size, eq.Y.size
        out = dict(assignment)
        if self.swap:
            out = {_swap_name(k): v.reshape(nx, ny).T.ravel() for k, v in out.items()}
        if self.perm_x:
            out = {_perm_name(k, 0): v for k, v in out.items()}
        if self.perm_y:
            out = {_perm_name(k, 1): v for k, v in out.items()}
        return out

    def from_canonical(self, eq: EquationSpec, assignment: dict) -> dict:
        """Inverse of to_canonical; eq is the original (non-canonical) equation."""
        if eq.variant == Variant.ONE_VAR:
            out = {"f": assignment["f"]}
            for new, old in enumerate(self.order):
                out[f"f{old + 1}"] = assignment[f"f{new + 1}"]
            return out
        if eq.variant not in (Variant.MULTI, Variant.WEIGHTED):
            return dict(assignment)
        out = dict(assignment)
        if self.perm_y:
            out = {_perm_name(k, 1): v for k, v in out.items()}
        if self.perm_x:
            out = {_perm_name(k, 0): v for k, v in out.items()}
        if self.swap:
            nx, ny = eq.X.size, eq.Y.size
            out = {_swap_name(k): v.reshape(ny, nx).T.ravel() for k, v in out.items()}
        return out


def _swap_name(name: str) -> str:
    return name if len(name) == 1 else f"f{name[2]}{name[1]}"


def _perm_name(name: str, pos: int) -> str:
    if len(name) == 1:
        return name
    idx = [name[1], name[2]]
    idx[pos] = "2" if idx[pos] == "1" else "1"
    return "f" + "".join(idx)


def canonical_form(eq: EquationSpec) -> tuple[str, Transform, EquationSpec]:
    """Case label, the transform used, and the equation in the canonical frame."""
    v = eq.variant
    if v == Variant.ONE_VAR:
        nz = [i for i, a in enumerate(eq.alphas) if a]
        order = tuple(nz + [i for i in range(eq.arity) if i not in nz])
        k = len(nz)
        label = "one_var_zero" if k == 0 else "one_var_single" if k == 1 else "one_var_additive"
        tr = Transform(order=order)
        return label, tr, tr.apply_eq(eq)
    if v in (Variant.BI_ADDITIVITY, Variant.CAUCHY_XY):
        return v.name.lower(), Transform(), eq
    if v == Variant.RECTANGLE:
        return ("rectangle_char2" if eq.field.p == 2 else "rectangle"), Transform(), eq
    if eq.arity != 2:
        raise UnsupportedCase("structure is only available for arity 2; use reduce_to_two")
    pattern = tuple(int(bool(c)) for c in eq.alphas + eq.betas)
    for swap, px, py in itertools.product((False, True), repeat=3):
        a1, a2, b1, b2 = pattern
        if swap:
            a1, a2, b1, b2 = b1, b2, a1, a2
        if px:
            a1, a2 = a2, a1
        if py:
            b1, b2 = b2, b1
        label = PATTERNS.get((a1, a2, b1, b2))
        if label is not None:
            tr = Transform(swap, px, py)
            return label, tr, tr.apply_eq(eq)
    raise AssertionError(pattern)  # pragma: no cover


# --- parameter kinds ----------------------------------------------------------

def kind_shape(kind: str, X: ModuleSpace, Y: ModuleSpace | None) -> tuple[int, ...]:
    nx = X.size
    ny = Y.size if Y is not None else 1
    return {
        "fn_X": (nx,), "fn_Y": (ny,), "fn_XY": (nx * ny,), "fn_XY_x0": (nx * ny,),
        "fn_XY_y0": (nx * ny,), "add_X": (X.zp_dim,), "add_Y": (Y.zp_dim if Y else 0,),
        "biadd": (X.zp_dim, Y.zp_dim if Y else 0), "add1_XY": (ny, X.zp_dim),
    }[kind]


def kind_dim(kind: str, X: ModuleSpace, Y: ModuleSpace | None) -> int:
    nx = X.size
    ny = Y.size if Y is not None else 1
    return {
        "fn_X": nx - 1, "fn_Y": ny - 1, "fn_XY": nx * ny - 1, "fn_XY_x0": (nx - 1) * ny,
        "fn_XY_y0": nx * (ny - 1), "add_X": X.zp_dim, "add_Y": Y.zp_dim if Y else 0,
        "biadd": X.zp_dim * (Y.zp_dim if Y else 0), "add1_XY": (ny - 1) * X.zp_dim,
    }[kind]


def _free_mask(kind: str, X: ModuleSpace, Y: ModuleSpace | None) -> np.ndarray:
    """Entries that may be non-zero."""
    mask = np.ones(kind_shape(kind, X, Y), dtype=bool)
    ny = Y.size if Y is not None else 1
    if kind in ("fn_X", "fn_Y", "fn_XY"):
        mask[0] = False
    elif kind == "fn_XY_x0":
        mask.reshape(X.size, ny)[0, :] = False
    elif kind == "fn_XY_y0":
        mask.reshape(X.size, ny)[:, 0] = False
    elif kind == "add1_XY":
        mask[0, :] = False
    return mask


SCHEMAS = {
    "one_var_zero": {"f": "fn_X"},
    "one_var_single": {"f": "fn_X"},
    "one_var_additive": {"chi": "add_X"},
    "all_zero": {"f": "fn_XY", "chi11": "fn_X", "chi21": "fn_X",
                 "zeta11": "fn_Y", "zeta12": "fn_Y"},
    "one_nonzero": {"f_rest": "fn_XY_x0", "chi11": "fn_X", "chi21": "fn_X",
                    "zeta11": "fn_Y", "zeta12": "fn_Y", "zeta22": "fn_Y"},
    "alphas_only": {"f_rest": "fn_XY_y0", "chi": "add_X", "g11": "fn_X", "g21": "fn_X",
                    "zeta11": "fn_Y", "zeta12": "fn_Y"},
    "diagonal_pair": {"f": "fn_XY", "chi12": "fn_X", "chi21": "fn_X",
                      "zeta12": "fn_Y", "zeta21": "fn_Y"},
    "three_nonzero": {"A": "add1_XY", "chi": "add_X", "c1": "fn_Y", "c2": "fn_Y",
                      "chi12": "fn_X", "chi22": "fn_X", "zeta12": "fn_Y"},
    "nondegenerate": {"A": "biadd", "chi": "add_X", "zeta": "add_Y",
                      "chi11": "fn_X", "chi21": "fn_X", "zeta11": "fn_Y", "zeta12": "fn_Y"},
    "bi_additivity": {"A": "biadd"},
    "rectangle": {"A": "biadd", "chi": "add_X", "zeta": "add_Y"},
    "rectangle_char2": {"chi": "fn_X", "zeta": "fn_Y"},
    "cauchy_xy": {"chi": "add_X", "zeta": "add_Y"},
}


def _check_supported(label: str, eq: EquationSpec) -> None:
    if eq.variant == Variant.WEIGHTED:
        raise UnsupportedCase("weighted equations are analysed by nontrivial_report")
    if label == "nondegenerate" and eq.field.p == 2:
        raise UnsupportedCase("the nondegenerate structure theorem needs characteristic != 2")


def schema(eq: EquationSpec) -> tuple[str, dict[str, str]]:
    label, _, _ = canonical_form(eq)
    _check_supported(label, eq)
    return label, SCHEMAS[label]


def predicted_dim(eq: EquationSpec) -> tuple[int, str]:
    label, tr, ceq = canonical_form(eq)
    _check_supported(label, eq)
    Y = ceq.Y if ceq.two_var else None
    return sum(kind_dim(k, ceq.X, Y) for k in SCHEMAS[label].values()), label


def random_params(eq: EquationSpec, rng: np.random.Generator) -> dict[str, np.ndarray]:
    label, _, ceq = canonical_form(eq)
    _check_supported(label, eq)
    Y = ceq.Y if ceq.two_var else None
    out = {}
    for name, kind in SCHEMAS[label].items():
        arr = rng.integers(0, eq.q, kind_shape(kind, ceq.X, Y))
        out[name] = np.where(_free_mask(kind, ceq.X, Y), arr, 0).astype(np.int64)
    return out


def zero_params(eq: EquationSpec) -> dict[str, np.ndarray]:
    label, _, ceq = canonical_form(eq)
    _check_supported(label, eq)
    Y = ceq.Y if ceq.two_var else None
    return {name: np.zeros(kind_shape(kind, ceq.X, Y), dtype=np.int64)
            for name, kind in SCHEMAS[label].items()}


# --- evaluation helpers ---------------------------------------------------------

def eval_additive(space: ModuleSpace, values) -> np.ndarray:
    """Table of the Z_p-linear map with the given values on the Z_p-basis."""
    ops = vec_ops(space.spec)
    acc = np.zeros(space.size, dtype=np.int64)
    for r, v in enumerate(np.asarray(values)):
        if v:
            acc = ops.add(acc, ops.mul(space.zp_coords[:, r], int(v)))
    return acc


def eval_biadditive(X: ModuleSpace, Y: ModuleSpace, V) -> np.ndarray:
    ops = vec_ops(X.spec)
    V = np.asarray(V)
    acc = np.zeros((X.size, Y.size), dtype=np.int64)
    for c in range(V.shape[1]):
        a = eval_additive(X, V[:, c])
        acc = ops.add(acc, ops.mul(a[:, None], Y.zp_coords[None, :, c]))
    return acc


def eval_first_additive(X: ModuleSpace, Y: ModuleSpace, V) -> np.ndarray:
    """A[x, y] = sum_r x_r V[y, r]."""
    ops = vec_ops(X.spec)
    V = np.asarray(V)
    acc = np.zeros((X.size, Y.size), dtype=np.int64)
    for r in range(V.shape[1]):
        acc = ops.add(acc, ops.mul(X.zp_coords[:, r:r + 1], V[None, :, r]))
    return acc


def additive_values(space: ModuleSpace, table) -> np.ndarray:
    return np.asarray(table)[space.zp_basis].copy()


# --- synthesis ----------------------------------------------------------------

def _validate(eq: EquationSpec, ceq: EquationSpec, label: str, params: dict) -> dict:
    spec_ = SCHEMAS[label]
    if set(params) != set(spec_):
        raise BadParameterShape(f"{label} expects parameters {sorted(spec_)}, got {sorted(params)}")
    Y = ceq.Y if ceq.two_var else None
    out = {}
    for name, kind in spec_.items():
        arr = np.asarray(params[name], dtype=np.int64)
        shape = kind_shape(kind, ceq.X, Y)
        if arr.shape != shape:
            raise BadParameterShape(f"{name}: shape {arr.shape}, expected {shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= eq.q):
            raise BadParameterShape(f"{name}: entries must be element indices in [0, {eq.q})")
        if np.any(arr[~_free_mask(kind, ceq.X, Y)]):
            raise BadParameterShape(f"{name}: must vanish where a {kind} parameter vanishes")
        out[name] = arr
    return out


def _canonical_tables(label: str, ceq: EquationSpec, P: dict) -> dict[str, np.ndarray]:
    """Tables of every unknown in the canonical frame (2-D for two-variable equations)."""
    sp = ceq.field
    ops = vec_ops(sp)
    X = ceq.X
    add, sub, neg = ops.add, ops.sub, ops.neg
    if label.startswith("one_var"):
        n = ceq.arity
        zero = np.zeros(X.size, dtype=np.int64)
        if label == "one_var_zero":
            return {"f": P["f"], **{f"f{i + 1}": zero for i in range(n)}}
        if label == "one_var_single":
            out = {"f": P["f"], "f1": P["f"][X.scale_perm(ceq.alphas[0])]}
            out.update({f"f{i + 1}": zero for i in range(1, n)})
            return out
        chi = eval_additive(X, P["chi"])
        return {"f": chi, **{f"f{i + 1}": chi[X.scale_perm(a)] for i, a in enumerate(ceq.alphas)}}

    Y = ceq.Y
    nx, ny = X.size, Y.size

    def cx(g):
        return np.broadcast_to(np.asarray(g)[:, None], (nx, ny))

    def cy(g):
        return np.broadcast_to(np.asarray(g)[None, :], (nx, ny))

    def grid(g):
        return np.asarray(g).reshape(nx, ny)

    if label == "bi_additivity":
        return {"f": eval_biadditive(X, Y, P["A"])}
    if label == "rectangle":
        f = add(eval_biadditive(X, Y, P["A"]),
                add(cx(eval_additive(X, P["chi"])), cy(eval_additive(Y, P["zeta"]))))
        return {"f": f}
    if label == "rectangle_char2":
        return {"f": add(cx(P["chi"]), cy(P["zeta"]))}
    if label == "cauchy_xy":
        f = add(cx(eval_additive(X, P["chi"])), cy(eval_additive(Y, P["zeta"])))
        return {"f": f, "g": f, "h": f}

    a1, a2 = ceq.alphas
    b1, b2 = ceq.betas
    if label == "all_zero":
        return {
            "f": grid(P["f"]),
            "f11": add(cx(P["chi11"]), cy(P["zeta11"])),
            "f12": add(cx(neg(P["chi11"])), cy(P["zeta12"])),
            "f21": sub(cx(P["chi21"]), cy(P["zeta11"])),
            "f22": sub(cx(neg(P["chi21"])), cy(P["zeta12"])),
        }
    if label == "one_nonzero":
        f = grid(P["f_rest"]).copy()
        inv_b2 = Y.scale_perm(b2.inverse())
        f[0, :] = add(P["zeta12"], P["zeta22"])[inv_b2]
        return {
            "f": f,
            "f11": add(cx(P["chi11"]), cy(P["zeta11"])),
            "f12": add(cx(neg(P["chi11"])), cy(P["zeta12"])),
            "f21": sub(cx(P["chi21"]), cy(P["zeta11"])),
            "f22": add(cx(neg(P["chi21"])), cy(P["zeta22"])),
        }
    if label == "alphas_only":
        chi = eval_additive(X, P["chi"])
        f = grid(P["f_rest"]).copy()
        f[:, 0] = chi
        return {
            "f": f,
            "f11": add(cx(P["g11"]), cy(P["zeta11"])),
            "f12": add(cx(sub(chi[X.scale_perm(a1)], P["g11"])), cy(P["zeta12"])),
            "f21": sub(cx(P["g21"]), cy(P["zeta11"])),
            "f22": sub(cx(sub(chi[X.scale_perm(a2)], P["g21"])), cy(P["zeta12"])),
        }
    if label == "diagonal_pair":
        f = grid(P["f"])
        scaled = f[X.scale_perm(a1)][:, Y.scale_perm(b1)]
        return {
            "f": f,
            "f11": sub(sub(scaled, cx(P["chi12"])), cy(P["zeta21"])),
            "f12": add(cx(P["chi12"]), cy(P["zeta12"])),
            "f21": add(cx(P["chi21"]), cy(P["zeta21"])),
            "f22": sub(cx(neg(P["chi21"])), cy(P["zeta12"])),
        }
    if label == "three_nonzero":
        A = eval_first_additive(X, Y, P["A"])
        chi = eval_additive(X, P["chi"])
        c1, c2 = P["c1"], P["c2"]
        sx1, sx2, sy1 = X.scale_perm(a1), X.scale_perm(a2), Y.scale_perm(b1)
        f = add(add(A, cx(chi)), cy(add(c1, c2)))
        f11 = sub(add(add(A[sx1][:, sy1], cx(chi[sx1])), cy(c1[sy1])), cx(P["chi12"]))
        f21 = sub(add(add(A[sx2][:, sy1], cx(chi[sx2])), cy(c2[sy1])), cx(P["chi22"]))
        return {
            "f": f, "f11": f11, "f21": f21,
            "f12": add(cx(P["chi12"]), cy(P["zeta12"])),
            "f22": sub(cx(P["chi22"]), cy(P["zeta12"])),
        }
    if label == "nondegenerate":
        A = eval_biadditive(X, Y, P["A"])
        chi = eval_additive(X, P["chi"])
        zeta = eval_additive(Y, P["zeta"])
        sx = {1: X.scale_perm(a1), 2: X.scale_perm(a2)}
        sy = {1: Y.scale_perm(b1), 2: Y.scale_perm(b2)}
        chi_ij = {(1, 1): P["chi11"], (2, 1): P["chi21"],
                  (1, 2): sub(chi[sx[1]], P["chi11"]), (2, 2): sub(chi[sx[2]], P["chi21"])}
        zeta_ij = {(1, 1): P["zeta11"], (1, 2): P["zeta12"],
                   (2, 1): sub(zeta[sy[1]], P["zeta11"]), (2, 2): sub(zeta[sy[2]], P["zeta12"])}
        out = {"f": add(add(A, cx(chi)), cy(zeta))}
        for i, j in itertools.product((1, 2), repeat=2):
            out[f"f{i}{j}"] = add(add(A[sx[i]][:, sy[j]], cx(chi_ij[i, j])), cy(zeta_ij[i, j]))
        return out
    raise AssertionError(label)  # pragma: no cover


def _flatten(tables: dict) -> dict[str, np.ndarray]:
    return {k: np.ascontiguousarray(v).ravel().astype(np.int64) for k, v in tables.items()}


def synthesize_solution(eq: EquationSpec, params: dict) -> dict[str, np.ndarray]:
    """Assignment (name -> table over the domain) built from canonical-frame parameters."""
    label, tr, ceq = canonical_form(eq)
    _check_supported(label, eq)
    P = _validate(eq, ceq, label, params)
    canon = _flatten(_canonical_tables(label, ceq, P))
    out = tr.from_canonical(eq, canon)
    if not satisfies(eq, out):
        raise AssertionError(f"synthesized {label} assignment violates the equation")
    return out


# --- decomposition --------------------------------------------------------------

@dataclass(frozen=True)
class StructuredSolution:
    """A solution split into its structural components (canonical frame)."""

    eq: EquationSpec
    case: str
    transform: Transform
    params: dict
    components: dict = field(default_factory=dict)

    @property
    def A(self):
        return self.components.get("A")

    @property
    def chi(self):
        return self.components.get("chi")

    @property
    def zeta(self):
        return self.components.get("zeta")

    @property
    def chi_ij(self) -> dict:
        return {k: v for k, v in self.components.items() if k.startswith("chi") and len(k) == 5}

    @property
    def zeta_ij(self) -> dict:
        return {k: v for k, v in self.components.items() if k.startswith("zeta") and len(k) == 6}

    def recombine(self) -> dict[str, np.ndarray]:
        return synthesize_solution(self.eq, self.params)


def _extract(label: str, ceq: EquationSpec, T: dict) -> dict[str, np.ndarray]:
    X = ceq.X
    if label.startswith("one_var"):
        if label == "one_var_additive":
            return {"chi": additive_values(X, T["f"])}
        return {"f": T["f"].copy()}
    Y = ceq.Y
    nx, ny = X.size, Y.size
    g = {k: v.reshape(nx, ny) for k, v in T.items()}
    ops = vec_ops(ceq.field)

    def row0(name):  # x -> h(x, 0)
        return g[name][:, 0].copy()

    def col0(name):  # y -> h(0, y)
        return g[name][0, :].copy()

    if label == "bi_additivity":
        return {"A": g["f"][np.ix_(X.zp_basis, Y.zp_basis)].copy()}
    if label in ("rectangle", "nondegenerate"):
        chi, zeta = row0("f"), col0("f")
        A = ops.sub(ops.sub(g["f"], chi[:, None]), zeta[None, :])
        out = {"A": A[np.ix_(X.zp_basis, Y.zp_basis)].copy(),
               "chi": additive_values(X, chi), "zeta": additive_values(Y, zeta)}
        if label == "nondegenerate":
            out.update(chi11=row0("f11"), chi21=row0("f21"),
                       zeta11=col0("f11"), zeta12=col0("f12"))
        return out
    if label == "rectangle_char2":
        return {"chi": row0("f"), "zeta": col0("f")}
    if label == "cauchy_xy":
        return {"chi": additive_values(X, row0("f")), "zeta": additive_values(Y, col0("f"))}
    b1 = ceq.betas[0]
    if label == "all_zero":
        return {"f": T["f"].copy(), "chi11": row0("f11"), "chi21": row0("f21"),
                "zeta11": col0("f11"), "zeta12": col0("f12")}
    if label == "one_nonzero":
        rest = g["f"].copy()
        rest[0, :] = 0
        return {"f_rest": rest.ravel(), "chi11": row0("f11"), "chi21": row0("f21"),
                "zeta11": col0("f11"), "zeta12": col0("f12"), "zeta22": col0("f22")}
    if label == "alphas_only":
        rest = g["f"].copy()
        rest[:, 0] = 0
        return {"f_rest": rest.ravel(), "chi": additive_values(X, row0("f")),
                "g11": row0("f11"), "g21": row0("f21"),
                "zeta11": col0("f11"), "zeta12": col0("f12")}
    if label == "diagonal_pair":
        return {"f": T["f"].copy(), "chi12": row0("f12"), "chi21": row0("f21"),
                "zeta12": col0("f12"), "zeta21": col0("f21")}
    if label == "three_nonzero":
        chi = row0("f")
        A = ops.sub(ops.sub(g["f"], chi[:, None]), g["f"][0, :][None, :])
        inv_b1 = Y.scale_perm(b1.inverse())
        return {"A": A[X.zp_basis, :].T.copy(), "chi": additive_values(X, chi),
                "c1": col0("f11")[inv_b1], "c2": col0("f21")[inv_b1],
                "chi12": row0("f12"), "chi22": row0("f22"), "zeta12": col0("f12")}
    raise AssertionError(label)  # pragma: no cover


def _components(label: str, ceq: EquationSpec, P: dict) -> dict[str, np.ndarray]:
    """Evaluated tables of the named structural pieces."""
    X = ceq.X
    comps = {}
    if "A" in P:
        if label == "three_nonzero":
            comps["A"] = eval_first_additive(X, ceq.Y, P["A"])
        else:
            comps["A"] = eval_biadditive(X, ceq.Y, P["A"])
    for name in ("chi", "zeta"):
        if name in P:
            kind = SCHEMAS[label][name]
            space = X if name == "chi" else ceq.Y
            comps[name] = eval_additive(space, P[name]) if kind.startswith("add") else P[name]
    for name, arr in P.items():
        if (name.startswith("chi") or name.startswith("zeta")) and name not in comps:
            comps[name] = arr
    return comps


def decompose(assignment: dict, eq: EquationSpec) -> StructuredSolution:
    label, tr, ceq = canonical_form(eq)
    _check_supported(label, eq)
    names = eq.unknown_names()
    if set(assignment) != set(names):
        raise BadParameterShape(f"assignment must define {list(names)}")
    assignment = {k: np.asarray(v, dtype=np.int64) for k, v in assignment.items()}
    if any(v.shape != (eq.domain_size(),) for v in assignment.values()):
        raise BadParameterShape(f"tables must have length {eq.domain_size()}")
    if not satisfies(eq, assignment):
        raise NotASolution("assignment does not satisfy the equation")
    canon = tr.to_canonical(eq, assignment)
    params = _extract(label, ceq, canon)
    sol = StructuredSolution(eq, label, tr, params, _components(label, ceq, params))
    back = synthesize_solution(eq, params)
    if any(not np.array_equal(back[k], assignment[k]) for k in names):
        raise AssertionError("recombination does not reproduce the solution")
    return sol


__all__ = [
    "Transform", "canonical_form", "predicted_dim", "schema", "synthesize_solution",
    "decompose", "StructuredSolution", "random_params", "zero_params",
]

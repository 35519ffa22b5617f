"""Command-line front end: ``lfeq <command> ...``.

Every command prints a deterministic text report, or a JSON document with
``--json``.  Exit status is 0 whenever a decision was computed and 2 on
any input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import char0, la, semihom
from .errors import LfeqError, ParseError, UnsupportedCase
from .ff import (
    FieldElem,
    FieldSpec,
    PolyFF,
    _pdivmod,
    format_element,
    format_poly_zp,
    is_irreducible,
    make_field,
    minimal_poly,
    parse_element,
)
from .la import MatFF

TABLE_MAX = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


# --- formatting helpers ---------------------------------------------------------

def factor_prime_field(f: PolyFF) -> list[tuple[tuple[int, ...], int]]:
    """Factor a monic polynomial with prime-field coefficients by trial division.

    Divisors are the monic irreducibles over Z_p in order of degree, then of
    coefficient index.  Meant for the small operator polynomials shown here.
    """
    p = f.spec.p
    if any(v >= p for v in f.values):
        raise UnsupportedCase("coefficients are not in the prime field")
    rest = list(f.values)
    out = []
    d = 1
    while len(rest) - 1 >= 2 * d:
        for idx in range(p**d):
            cand = [(idx // p**k) % p for k in range(d)] + [1]
            if not is_irreducible(cand, p):
                continue
            mult = 0
            while True:
                quo, rem = _pdivmod(rest, cand, p)
                if rem:
                    break
                rest, mult = quo, mult + 1
            if mult:
                out.append((tuple(cand), mult))
        d += 1
    if len(rest) > 1:
        out.append((tuple(rest), 1))
    out.sort(key=lambda fm: (len(fm[0]), fm[0][::-1]))
    return out


def format_factored(factors, var: str = "t") -> str:
    parts = []
    for coeffs, mult in factors:
        body = f"({format_poly_zp(coeffs, var)})"
        parts.append(body if mult == 1 else f"{body}^{mult}")
    return "*".join(parts) if parts else "1"


def _table(spec: FieldSpec, op: str, fn) -> list[str]:
    names = [format_element(u) for u in spec.elements()]
    width = max(len(x) for x in names + [op])
    lines = [" ".join([op.rjust(width)] + [x.rjust(width) for x in names])]
    for u in spec.elements():
        row = [format_element(fn(u, v)).rjust(width) for v in spec.elements()]
        lines.append(" ".join([format_element(u).rjust(width)] + row))
    return lines


def _bits(m: MatFF) -> str:
    """Rows of a matrix, entries by their text form."""
    return "\n".join("  [" + " ".join(str(x) for x in row) + "]"
                     for row in ([str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)))


def _elem(spec: FieldSpec, text: str, name: str) -> FieldElem:
    try:
        return parse_element(spec, text)
    except LfeqError as exc:
        raise ParseError(f"--{name}: {exc}") from None


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


# --- commands -------------------------------------------------------------------

def cmd_field_info(args) -> None:
    spec = make_field(args.p, args.n)
    data = {"p": spec.p, "n": spec.n, "q": spec.q, "modulus": list(spec.modulus)}
    lines = [f"field    GF({spec.q}) = GF({spec.p}^{spec.n})",
             f"modulus  {format_poly_zp(spec.modulus)}"]
    if spec.q <= TABLE_MAX:
        els = list(spec.elements())
        data["elements"] = [format_element(u) for u in els]
        data["add"] = [[(u + v).value for v in els] for u in els]
        data["mul"] = [[(u * v).value for v in els] for u in els]
        lines.append("elements " + ", ".join(f"{u.value}={format_element(u)}" for u in els))
        lines += ["", "addition"] + _table(spec, "+", lambda u, v: u + v)
        lines += ["", "multiplication"] + _table(spec, "*", lambda u, v: u * v)
    else:
        lines.append(f"(tables are printed for q <= {TABLE_MAX})")
    _emit(args, "\n".join(lines), data)


def _charpoly_info(spec: FieldSpec, alpha, beta) -> tuple[MatFF, PolyFF, list, list]:
    rep = semihom.operator_matrix(spec, alpha, beta)
    cp = la.char_poly(rep.P)
    factors = factor_prime_field(cp)
    gammas = semihom.biadd_gammas(spec, alpha, beta)
    return rep.P, cp, factors, gammas


def cmd_semihom_charpoly(args) -> None:
    spec = make_field(args.p, args.n)
    alpha, beta = _elem(spec, args.alpha, "alpha"), _elem(spec, args.beta, "beta")
    P, cp, factors, gammas = _charpoly_info(spec, alpha, beta)
    data = {"alpha": alpha.value, "beta": beta.value, "P": P.tolist(),
            "charpoly": list(cp.values), "factors": [[list(c), m] for c, m in factors],
            "gammas": [[g.value, m] for g, m in gammas]}
    lines = [f"operator matrix P for alpha={alpha}, beta={beta}", _bits(P),
             f"char poly  {cp.format('t')}",
             f"factored   {format_factored(factors)}",
             "gamma      " + (", ".join(f"{g} (mult {m})" for g, m in gammas) or "none")]
    _emit(args, "\n".join(lines), data)


def cmd_semihom_biadd(args) -> None:
    spec = make_field(args.p, args.n)
    alpha, beta = _elem(spec, args.alpha, "alpha"), _elem(spec, args.beta, "beta")
    if args.gamma is None:
        gammas = [g for g, _ in semihom.biadd_gammas(spec, alpha, beta)]
    else:
        gammas = [_elem(spec, args.gamma, "gamma")]
    results, lines = [], []
    for g in gammas:
        w = semihom.biadd_decide(spec, alpha, beta, g)
        if w is None:
            results.append({"gamma": g.value, "exists": False})
            lines.append(f"gamma={g}: ABSENT")
            continue
        ok = semihom.biadd_verify(w)
        results.append({"gamma": g.value, "exists": True, "witness": w.to_json(), "verified": ok})
        lines += [f"gamma={g}: EXISTS", "witness B (B_kl = A(a^k, a^l))", _bits(w.B),
                  f"verified {ok}"]
    if not gammas:
        lines.append("no gamma admits a non-zero semi-homogeneous bi-additive map")
    _emit(args, "\n".join(lines), {"alpha": alpha.value, "beta": beta.value, "results": results})


def cmd_semihom_add(args) -> None:
    spec = make_field(args.p, args.n)
    alpha, beta = _elem(spec, args.alpha, "alpha"), _elem(spec, args.beta, "beta")
    w = semihom.add_decide(spec, alpha, beta)
    ma, mb = minimal_poly(alpha), minimal_poly(beta)
    data = {"alpha": alpha.value, "beta": beta.value, "exists": w is not None,
            "minpoly_alpha": list(ma.values), "minpoly_beta": list(mb.values)}
    lines = [f"minimal polynomial of alpha  {ma}", f"minimal polynomial of beta   {mb}"]
    if w is None:
        lines.append("ABSENT")
    else:
        data["witness"] = w.to_json()
        lines += ["EXISTS", "witness L (Z_p-matrix, columns are images of 1, a, ...)",
                  _bits(w.L), f"verified {w.verify()}"]
    _emit(args, "\n".join(lines), data)


def _load_eq(path: str):
    from .funceq import EquationSpec
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return EquationSpec.from_json(text)


def cmd_eqsolve(args) -> None:
    from .funceq import Variant, decompose, nontrivial_report, predicted_dim, solution_space
    eq = _load_eq(args.spec)
    space = solution_space(eq)
    data = {"equation": eq.to_json(), "dimension": space.dimension}
    lines = [f"equation   {eq.variant.value} over GF({eq.q}), s={eq.s}, t={eq.t}, n={eq.arity}",
             f"unknowns   {', '.join(eq.unknown_names())}",
             f"dimension  {space.dimension}"]
    if eq.variant == Variant.WEIGHTED:
        rep = nontrivial_report(eq)
        data.update(predicted=rep.structural_dim, case=rep.case, match=rep.consistent,
                    components=rep.components)
        lines += [f"case       {rep.case}",
                  f"predicted  {rep.structural_dim if rep.supported else 'n/a'}",
                  "components " + ", ".join(f"{k}:{v}" for k, v in rep.components.items())]
        _emit(args, "\n".join(lines), data)
        return
    try:
        pred, label = predicted_dim(eq)
    except UnsupportedCase as exc:
        data.update(predicted=None, case=None, note=str(exc))
        lines += ["predicted  n/a", f"note       {exc}"]
    else:
        data.update(predicted=pred, case=label, match=pred == space.dimension)
        lines += [f"case       {label}", f"predicted  {pred}",
                  f"match      {pred == space.dimension}"]
        comps = []
        for b in space.basis:
            sol = decompose(b, eq)
            comps.append({k: v.ravel().tolist() for k, v in sol.components.items()})
        data["decomposition"] = comps
        names = sorted({k for c in comps for k in c})
        lines.append(f"decomposed {len(comps)} basis solutions into: {', '.join(names) or '-'}")
    _emit(args, "\n".join(lines), data)


def cmd_nontrivial(args) -> None:
    from .funceq import nontrivial_report
    rep = nontrivial_report(_load_eq(args.spec))
    _emit(args, rep.table(), rep.to_json())


def cmd_char0_decide(args) -> None:
    specs = []
    for name in ("malpha", "mbeta", "mgamma"):
        try:
            specs.append(char0.AlgebraicSpec.parse(getattr(args, name)))
        except LfeqError as exc:
            raise type(exc)(f"--{name}: {exc}") from None
    a, b, g = specs
    C = char0.composed_product(a.minpoly, b.minpoly)
    yes = char0.product_of_conjugates_decide(a, b, g)
    data = {"malpha": a.minpoly.to_json(), "mbeta": b.minpoly.to_json(),
            "mgamma": g.minpoly.to_json(), "composed_product": C.to_json(), "decision": yes}
    lines = [f"composed product  {C}", "YES" if yes else "NO"]
    _emit(args, "\n".join(lines), data)


def reproduce_gf4() -> tuple[str, dict]:
    spec = make_field(2, 2)
    alpha, beta = spec.elem("1+a"), spec.elem("a")
    ms = semihom.translation_matrices(spec)
    P, cp, factors, gammas = _charpoly_info(spec, alpha, beta)
    witnesses = [semihom.biadd_decide(spec, alpha, beta, g) for g, _ in gammas]
    lines = [f"GF(4) = Z_2[a] / ({format_poly_zp(spec.modulus, 'a')})", "",
             "addition"] + _table(spec, "+", lambda u, v: u + v)
    lines += ["", "multiplication"] + _table(spec, "*", lambda u, v: u * v)
    for i, m in enumerate(ms):
        lines += ["", f"M^{i}", _bits(m)]
    lines += ["", f"operator matrix P for alpha={alpha}, beta={beta}", _bits(P), "",
              f"char poly  {cp.format('t')}",
              f"factored   {format_factored(factors)}",
              "gamma set  {" + ", ".join(str(g) for g, _ in gammas) + "}"]
    for w in witnesses:
        lines += ["", f"witness for gamma={w.gamma}", _bits(w.B),
                  f"verified {semihom.biadd_verify(w)}"]
    data = {"add": [[(u + v).value for v in spec.elements()] for u in spec.elements()],
            "mul": [[(u * v).value for v in spec.elements()] for u in spec.elements()],
            "M": [m.tolist() for m in ms], "P": P.tolist(), "charpoly": list(cp.values),
            "factors": [[list(c), m] for c, m in factors],
            "gammas": [g.value for g, _ in gammas],
            "witnesses": [w.to_json() for w in witnesses]}
    return "\n".join(lines), data


def cmd_reproduce(args) -> None:
    text, data = reproduce_gf4()
    _emit(args, text, data)


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = _Parser(prog="lfeq", description=__doc__.splitlines()[0], parents=[common])
    parser.set_defaults(json=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    field = sub.add_parser("field", help="finite field information")
    fsub = field.add_subparsers(dest="action", required=True, parser_class=_Parser)
    info = fsub.add_parser("info", parents=[common])
    info.add_argument("-p", type=int, required=True)
    info.add_argument("-n", type=int, default=1)
    info.set_defaults(func=cmd_field_info)

    sh = sub.add_parser("semihom", help="semi-homogeneity decisions")
    ssub = sh.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func, gamma in (("biadd", cmd_semihom_biadd, True),
                              ("add", cmd_semihom_add, False),
                              ("charpoly", cmd_semihom_charpoly, False)):
        sp = ssub.add_parser(name, parents=[common])
        sp.add_argument("-p", type=int, required=True)
        sp.add_argument("-n", type=int, default=1)
        sp.add_argument("--alpha", required=True)
        sp.add_argument("--beta", required=True)
        if gamma:
            sp.add_argument("--gamma")
        sp.set_defaults(func=func)

    eqs = sub.add_parser("eqsolve", parents=[common], help="solve an equation given as JSON")
    eqs.add_argument("--spec", required=True)
    eqs.set_defaults(func=cmd_eqsolve)

    nt = sub.add_parser("nontrivial", parents=[common], help="non-trivial solution report")
    nt.add_argument("--spec", required=True)
    nt.set_defaults(func=cmd_nontrivial)

    c0 = sub.add_parser("char0", help="products of algebraic conjugates")
    csub = c0.add_subparsers(dest="action", required=True, parser_class=_Parser)
    dec = csub.add_parser("decide", parents=[common])
    for flag in ("--malpha", "--mbeta", "--mgamma"):
        dec.add_argument(flag, required=True)
    dec.set_defaults(func=cmd_char0_decide)

    rep = sub.add_parser("reproduce", parents=[common], help="reproduce a worked example")
    rep.add_argument("example", choices=["gf4"])
    rep.set_defaults(func=cmd_reproduce)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except LfeqError as exc:
        print(f"lfeq: error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())

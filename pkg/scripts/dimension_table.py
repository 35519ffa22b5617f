"""Solution-space dimensions against the closed-form prediction.

Sweeps every zero pattern of (alpha_1, alpha_2, beta_1, beta_2) for the
two-variable MultiUnknown equation, plus the fixed presets, and prints one
row per equation.
"""

import argparse
import itertools
import time

import numpy as np

from lfeq.errors import UnsupportedCase
from lfeq.funceq import EquationSpec, predicted_dim, solution_space


def equations(p, n_field, s, t, rng):
    q = p**n_field
    for mask in itertools.product((0, 1), repeat=4):
        vals = [int(rng.integers(1, q)) if m else 0 for m in mask]
        yield EquationSpec.create("MultiUnknown", p, n_field, s, t, 2, vals[:2], vals[2:])
    for v in ("BiAdditivity", "Rectangle", "CauchyXY"):
        yield EquationSpec.create(v, p, n_field, s, t)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-p", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("-n", type=int, default=1, help="field degree")
    ap.add_argument("-s", type=int, default=1)
    ap.add_argument("-t", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'q':>4} {'variant':<14} {'alphas':<8} {'betas':<8} {'case':<16} "
          f"{'dim':>5} {'pred':>5} {'secs':>6}")
    for p in args.p:
        for eq in equations(p, args.n, args.s, args.t, rng):
            t0 = time.perf_counter()
            dim = solution_space(eq).dimension
            secs = time.perf_counter() - t0
            try:
                pred, label = predicted_dim(eq)
            except UnsupportedCase:
                pred, label = "n/a", "unsupported"
            al = ",".join(str(a) for a in eq.alphas) or "-"
            be = ",".join(str(b) for b in eq.betas) or "-"
            print(f"{eq.q:>4} {eq.variant.value:<14} {al:<8} {be:<8} {label:<16} "
                  f"{dim:>5} {pred:>5} {secs:>6.2f}")


if __name__ == "__main__":
    main()

"""Exhaustive sweep of the weighted equation over a small field.

For every gamma matrix and every choice of non-zero alphas and betas, the
structural dimension is compared with the brute-force one.  Prints a
summary per case and lists any disagreement.
"""

import argparse
import itertools
from collections import Counter

from lfeq.funceq import EquationSpec, nontrivial_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-p", type=int, default=3)
    ap.add_argument("-n", type=int, default=1, help="field degree")
    ap.add_argument("--zeros", action="store_true", help="also allow zero alphas and betas")
    args = ap.parse_args()
    q = args.p**args.n
    coeffs = range(q) if args.zeros else range(1, q)
    total, nontrivial, unsupported = Counter(), Counter(), Counter()
    bad = []
    for ab in itertools.product(coeffs, repeat=4):
        for g in itertools.product(range(q), repeat=4):
            eq = EquationSpec.create("SingleUnknownWeighted", args.p, args.n, 1, 1, 2,
                                     ab[:2], ab[2:], (g[:2], g[2:]))
            rep = nontrivial_report(eq)
            total[rep.case] += 1
            nontrivial[rep.case] += rep.nontrivial
            if not rep.supported:
                unsupported[rep.case] += 1
            elif not rep.consistent:
                bad.append((ab, g, rep.components, rep.brute_dim))
    print(f"{'case':<16} {'equations':>9} {'nontrivial':>10} {'brute only':>10}")
    for case in sorted(total):
        print(f"{case:<16} {total[case]:>9} {nontrivial[case]:>10} {unsupported[case]:>10}")
    print(f"disagreements: {len(bad)}")
    for row in bad[:20]:
        print("  ", row)


if __name__ == "__main__":
    main()

"""Trace the residual chains of the unary fixtures.

For fig5, prints the exact empty-word value of each residual along a^n and
its distance to the irrational limit (3 - sqrt 5)/4, showing why the chain
never cycles. For example1_p, prints the mixture coefficients of each
residual over the two geometric generators.

Usage: python scripts/residual_chain.py [depth]
"""

import math
import sys

from stochlang import express_combination, fixtures, residual_automaton


def main(depth=12):
    limit = (3 - math.sqrt(5)) / 4
    print(f"fig5 residual values along a^n (limit {limit:.6f})")
    a = fixtures.build("fig5")
    for n in range(depth + 1):
        g = residual_automaton(a, ("a",) * n).evaluate(())
        assert g == fixtures.oracle_gamma(n)
        print(f"  n={n:2d}  gamma = {str(g):>12}  |gamma - limit| = {abs(float(g) - limit):.2e}")

    print()
    print("example1_p residual mixtures over (p1, p2)")
    p = fixtures.build("example1_p")
    p1 = fixtures.build("example1_p1")
    p2 = fixtures.build("example1_p2")
    for n in range(depth + 1):
        res = residual_automaton(p, ("a",) * n)
        out = express_combination(res, [p1, p2], nonneg=True)
        print(f"  n={n:2d}  coefficients = ({out.coefficients[0]}, {out.coefficients[1]})")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 12)

"""Encode DFA union universality into the residual-automaton question.

Builds the hardness instance for two families over {a, b}: a complementary
parity pair (union covers everything) and a single parity automaton (it does
not). The residual-automaton verdict flips accordingly, and the brute-force
union check over short words agrees.

Usage: python scripts/union_universality_demo.py
"""

import itertools

from stochlang import Dfa, is_pra_reduced, pra_hardness_instance


def parity_dfa(final):
    delta = {}
    for x in ("a", "b"):
        delta[("e", x)] = "o" if x == "a" else "e"
        delta[("o", x)] = "e" if x == "a" else "o"
    return Dfa(("a", "b"), ("e", "o"), "e", frozenset({final}), delta)


def union_covers_all(dfas, max_len):
    for k in range(max_len + 1):
        for w in itertools.product(("a", "b"), repeat=k):
            if not any(d.accepts(w) for d in dfas):
                return False, w
    return True, None


def main():
    for label, family in [("complementary parity pair", [parity_dfa("e"), parity_dfa("o")]),
                          ("single parity automaton", [parity_dfa("e")])]:
        instance = pra_hardness_instance(family)
        verdict, witnesses = is_pra_reduced(instance)
        total, gap = union_covers_all(family, 6)
        print(f"{label}:")
        print(f"  union covers all words up to length 6: {total}"
              + (f" (gap: {''.join(gap) or 'empty word'})" if gap is not None else ""))
        print(f"  instance states: {instance.n_states}, letters: {len(instance.alphabet)}")
        print(f"  residual-automaton verdict: {verdict}")
        if witnesses:
            shown = list(witnesses.items())[:4]
            pretty = ", ".join(f"{q}<-{'.'.join(w) or 'eps'}" for q, w in shown)
            print(f"  sample witnesses: {pretty}, ...")
        print()


if __name__ == "__main__":
    main()

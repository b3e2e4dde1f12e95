"""Catalog of small reference automata with known closed forms.

Every fixture is an exact rational automaton whose series has an independent
closed-form description, which the test suite uses as an oracle:

* ``example1_p1``: unary, value 2^-(n+1) on a^n.
* ``example1_p2``: unary, value 3 * 2^-(2n+2) on a^n.
* ``example1_p``: the even mixture of the two; its residuals form an
  infinite strictly-moving family, so it has no deterministic presentation.
* ``fig2_A``: two-state deterministic PA over {a, b} concentrating mass on
  the words b^n a.
* ``fig3_App``: two-state automaton over {a, b} with some negative weights
  whose series is nonnegative with total mass 1; the value on w is
  L(2|d|) / 2^(2|w|+3) where d is the a-count minus the b-count and L is the
  Lucas sequence. No nonnegative-weight automaton generates it.
* ``fig5``: two-state unary PA whose residual values at the empty word obey
  g' = (1 - 2g) / (4(1 - g)) and converge to an irrational limit, so its
  residuals are pairwise distinct.
* ``prop10_t``: three-state automaton over {a, b} with value
  (|w|_a - |w|_b)^2 / 2^(2|w|+1); its support is not a regular language.
"""

from __future__ import annotations

from fractions import Fraction

from .automata import (MultiplicityAutomaton, from_linear_representation,
                       rep_from_generator_relations)

F = Fraction


def example1_p1() -> MultiplicityAutomaton:
    return MultiplicityAutomaton(
        ("a",), ("q0",), {"q0": 1}, {"q0": F(1, 2)}, {("q0", "a", "q0"): F(1, 2)})


def example1_p2() -> MultiplicityAutomaton:
    return MultiplicityAutomaton(
        ("a",), ("q0",), {"q0": 1}, {"q0": F(3, 4)}, {("q0", "a", "q0"): F(1, 4)})


def example1_p() -> MultiplicityAutomaton:
    return MultiplicityAutomaton(
        ("a",), ("q0", "q1"),
        {"q0": F(1, 2), "q1": F(1, 2)},
        {"q0": F(1, 2), "q1": F(3, 4)},
        {("q0", "a", "q0"): F(1, 2), ("q1", "a", "q1"): F(1, 4)})


def fig2_A() -> MultiplicityAutomaton:
    return MultiplicityAutomaton(
        ("a", "b"), ("q0", "q1"),
        {"q0": 1}, {"q1": 1},
        {("q0", "b", "q0"): F(1, 2), ("q0", "a", "q1"): F(1, 2)})


def fig3_App() -> MultiplicityAutomaton:
    # Basis: the series itself and its a-residual. The shift relations below
    # are forced by the closed form and are re-derived in the test suite.
    rep = rep_from_generator_relations(
        (1, 0),
        {"a": [[0, F(3, 8)], [F(-1, 6), F(3, 4)]],
         "b": [[F(3, 4), F(-3, 8)], [F(1, 6), 0]]},
        (F(1, 4), F(1, 4)))
    return from_linear_representation(rep)


def fig5() -> MultiplicityAutomaton:
    return MultiplicityAutomaton(
        ("a",), ("q0", "q1"),
        {"q0": 1},
        {"q0": F(1, 2)},
        {("q0", "a", "q1"): F(1, 2),
         ("q1", "a", "q0"): F(1, 2), ("q1", "a", "q1"): F(1, 2)})


def prop10_t() -> MultiplicityAutomaton:
    # Basis: d^2 g, d g, g with d the letter-count difference and
    # g(w) = 1 / (2 * 4^|w|).
    rep = rep_from_generator_relations(
        (1, 0, 0),
        {"a": [[F(1, 4), F(2, 4), F(1, 4)],
               [0, F(1, 4), F(1, 4)],
               [0, 0, F(1, 4)]],
         "b": [[F(1, 4), F(-2, 4), F(1, 4)],
               [0, F(1, 4), F(-1, 4)],
               [0, 0, F(1, 4)]]},
        (0, 0, F(1, 2)))
    return from_linear_representation(rep)


FIXTURES = {
    "example1_p1": example1_p1,
    "example1_p2": example1_p2,
    "example1_p": example1_p,
    "fig2_A": fig2_A,
    "fig3_App": fig3_App,
    "fig5": fig5,
    "prop10_t": prop10_t,
}

FIXTURE_NAMES = tuple(FIXTURES)


def build(name: str) -> MultiplicityAutomaton:
    """Construct a fixture by catalog name."""
    try:
        return FIXTURES[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def oracle_gamma(n: int) -> Fraction:
    """Empty-word value of the n-th residual of the ``fig5`` series.

    Starts at 1/2 and follows g' = (1 - 2g) / (4(1 - g)), exactly.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    g = F(1, 2)
    for _ in range(n):
        g = (1 - 2 * g) / (4 * (1 - g))
    return g

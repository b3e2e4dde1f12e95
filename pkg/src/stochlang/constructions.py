"""Constructive normal forms: PA synthesis, determinization, prefixial form.

These operations turn semantic facts about a series (membership in a convex
stable family, finitely many residuals, residual witnesses per state) into
concrete probabilistic automata, discovering all coefficients by exact
solving. Failures are honest: a returned None means the required nonnegative
coefficients do not exist at this level, and a bound report means the search
was cut off, never that the answer is known to be negative.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .analysis import prefix_weight, residual_automaton, total_sum
from .automata import (MultiplicityAutomaton, Word, format_word,
                       letter_shift_automaton, length_lex_key,
                       state_series_automaton, words_up_to)
from .classify import is_pa, is_pda
from .equivalence import are_equivalent, express_combination


def synthesize_pa(target: MultiplicityAutomaton,
                  generators: Sequence[MultiplicityAutomaton]
                  ) -> MultiplicityAutomaton | None:
    """Probabilistic automaton for the target series over the given generators.

    Requires every generator series to have total mass exactly 1. Finds
    nonnegative coefficients expressing the target over the generators and,
    for every generator and letter, nonnegative coefficients expressing the
    letter shift over the generators. Absent if any of those systems is
    infeasible; otherwise the assembled automaton (one state per generator)
    is trimmed and returned.
    """
    generators = list(generators)
    if not generators:
        return None
    if any(g.alphabet != target.alphabet for g in generators):
        raise ValueError("alphabet mismatch")
    for i, g in enumerate(generators):
        outcome = total_sum(g)
        if not outcome.converges or outcome.value != 1:
            raise ValueError(f"generator {i} does not have total mass 1")

    mix = express_combination(target, generators, nonneg=True)
    if not mix.expressible:
        return None
    stability: dict[tuple[int, str], tuple[Fraction, ...]] = {}
    for i, g in enumerate(generators):
        for x in target.alphabet:
            shifted = letter_shift_automaton(g, (x,))
            outcome = express_combination(shifted, generators, nonneg=True)
            if not outcome.expressible:
                return None
            stability[(i, x)] = outcome.coefficients

    states = [f"s{i}" for i in range(len(generators))]
    iota = {states[i]: mix.coefficients[i] for i in range(len(generators))}
    tau = {states[i]: generators[i].evaluate(()) for i in range(len(generators))}
    phi = {}
    for (i, x), coeffs in stability.items():
        for j, c in enumerate(coeffs):
            if c:
                phi[(states[i], x, states[j])] = c
    built = MultiplicityAutomaton(target.alphabet, states, iota, tau, phi).trim()
    if not is_pa(built):
        raise RuntimeError("assembled automaton fails the probabilistic weight checks; "
                           "a generator is not a bounded stochastic series")
    return built


@dataclass(frozen=True)
class DeterminizationOutcome:
    """A deterministic PA over the residuals, or a report that the bound was hit."""
    pda: MultiplicityAutomaton | None
    discovered_residuals: int

    @property
    def bound_exceeded(self) -> bool:
        return self.pda is None


def determinize_to_pda(a: MultiplicityAutomaton, max_states: int) -> DeterminizationOutcome:
    """Explore residuals breadth-first and assemble a deterministic PA from them.

    Two words whose residual series coincide share a state; each state keeps
    its smallest witness word as its name. Exceeding ``max_states`` distinct
    residuals aborts with the count discovered so far, which is not a proof
    that infinitely many exist. The input series must have total mass 1.
    """
    outcome = total_sum(a)
    if not outcome.converges:
        raise ValueError("the series diverges")
    if outcome.value != 1:
        raise ValueError("the series must have total mass 1")

    discovered: list[tuple[Word, MultiplicityAutomaton]] = [((), residual_automaton(a, ()))]
    transitions: dict[tuple[int, str], tuple[Fraction, int]] = {}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        _, res = discovered[i]
        for x in a.alphabet:
            mass = prefix_weight(res, (x,))
            if mass == 0:
                continue
            child = residual_automaton(res, (x,))
            match = next((j for j, (_, known) in enumerate(discovered)
                          if are_equivalent(child, known).equal), None)
            if match is None:
                if len(discovered) == max_states:
                    return DeterminizationOutcome(None, len(discovered) + 1)
                match = len(discovered)
                discovered.append((discovered[i][0] + (x,), child))
                queue.append(match)
            transitions[(i, x)] = (mass, match)

    names = [format_word(word, a.alphabet) for word, _ in discovered]
    iota = {names[0]: Fraction(1)}
    tau = {names[i]: res.evaluate(()) for i, (_, res) in enumerate(discovered)}
    phi = {(names[i], x, names[j]): mass
           for (i, x), (mass, j) in transitions.items()}
    pda = MultiplicityAutomaton(a.alphabet, names, iota, tau, phi)
    if not is_pda(pda):
        raise RuntimeError("residual exploration produced a non-deterministic or "
                           "non-probabilistic automaton; the input series is not "
                           "a probability distribution")
    return DeterminizationOutcome(pda, len(discovered))


def to_prefixial_pra(a: MultiplicityAutomaton,
                     witnesses: Mapping[str, Sequence[str]]) -> MultiplicityAutomaton:
    """Rebuild a PA over the prefix closure of its residual witness words.

    Each state q must come with a word w_q whose residual equals the state's
    series (verified exactly; distinct words per state). States of the result
    are the prefixes of the witness set: the empty word carries all initial
    mass, tree edges carry residual prefix weights, and each witness state
    routes its remaining letters through the original transitions.
    """
    if not is_pa(a):
        raise ValueError("input is not a probabilistic automaton")
    witness_words: dict[str, Word] = {}
    for q in a.states:
        if q not in witnesses:
            raise ValueError(f"missing witness for state {q!r}")
        witness_words[q] = tuple(witnesses[q])
    if len(set(witness_words.values())) != len(witness_words):
        raise ValueError("witness words must be distinct")
    for q, w in witness_words.items():
        check = are_equivalent(residual_automaton(a, w), state_series_automaton(a, q))
        if not check.equal:
            raise ValueError(
                f"witness verification failure for state {q!r}: the residual at "
                f"{format_word(w, a.alphabet)} differs at "
                f"{format_word(check.witness, a.alphabet)}")

    word_of = {w: q for q, w in witness_words.items()}
    closure = {w[:i] for w in witness_words.values() for i in range(len(w) + 1)}
    ordered = sorted(closure, key=lambda w: length_lex_key(w, a.alphabet))
    names = {w: format_word(w, a.alphabet) for w in ordered}
    residuals = {w: residual_automaton(a, w) for w in ordered}

    iota = {names[()]: Fraction(1)}
    tau = {names[w]: residuals[w].evaluate(()) for w in ordered}
    phi: dict[tuple[str, str, str], Fraction] = {}
    for w in ordered:
        for x in a.alphabet:
            extended = w + (x,)
            if extended in closure:
                mass = prefix_weight(residuals[w], (x,))
                if mass:
                    phi[(names[w], x, names[extended])] = mass
            elif w in word_of:
                q = word_of[w]
                for r in a.states:
                    weight = a.weight(q, x, r)
                    if weight:
                        phi[(names[w], x, names[witness_words[r]])] = weight

    built = MultiplicityAutomaton(a.alphabet, [names[w] for w in ordered], iota, tau, phi)
    if not is_pa(built):
        raise ValueError("witness set does not induce a probabilistic automaton; "
                         "an interior prefix loses mass outside the closure")
    check = are_equivalent(a, built)
    if not check.equal:
        raise ValueError("prefixial rebuild changed the series at "
                         f"{format_word(check.witness, a.alphabet)}")
    return built


def minimal_residual_generators(a: MultiplicityAutomaton, depth: int
                                ) -> list[Word] | None:
    """Smallest residual set (by witness words) that is stable and covers the series.

    Collects residuals of all words up to ``depth``, drops any residual that
    is a nonnegative combination of the remaining ones, then verifies the
    survivors form a stable family containing the series. None means the
    check failed at this depth and is inconclusive, not that no finite
    generating set exists.
    """
    outcome = total_sum(a)
    if not outcome.converges:
        raise ValueError("the series diverges")
    if outcome.value != 1:
        raise ValueError("the series must have total mass 1")

    survivors: list[tuple[Word, MultiplicityAutomaton]] = []
    for u in words_up_to(a.alphabet, depth):
        try:
            res = residual_automaton(a, u)
        except ValueError:
            continue
        if not any(are_equivalent(res, known).equal for _, known in survivors):
            survivors.append((u, res))

    changed = True
    while changed:
        changed = False
        for i in reversed(range(len(survivors))):
            if len(survivors) == 1:
                break
            rest = [res for j, (_, res) in enumerate(survivors) if j != i]
            if express_combination(survivors[i][1], rest, nonneg=True).expressible:
                del survivors[i]
                changed = True
                break

    generators = [res for _, res in survivors]
    for _, res in survivors:
        for x in a.alphabet:
            shifted = letter_shift_automaton(res, (x,))
            if not express_combination(shifted, generators, nonneg=True).expressible:
                return None
    if not express_combination(a, generators, nonneg=True).expressible:
        return None
    return [w for w, _ in survivors]

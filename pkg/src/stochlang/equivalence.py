"""Equivalence of multiplicity automata and linear-combination expression.

Equivalence is decided by closing a word basis under letter extension while
tracking, for each word, the pair of forward vectors (lam . mu(w) on both
sides). The pair extends linearly on the right, so the closure computes the
span of all reachable pairs; the two series agree iff the final-weight
functional vanishes on that span. A failing basis word is a counterexample
and its length never exceeds the combined state count.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .automata import (MultiplicityAutomaton, Word, empty_automaton,
                       merge_alphabets, replace_iota, weighted_sum,
                       with_alphabet)
from .linalg import (Constraint, Matrix, SpanBasis, Vector, dot, lp_feasible,
                     solve_affine, vec_mat)


@dataclass(frozen=True)
class EquivalenceOutcome:
    """Equal, or a witness word on which the two series differ."""
    equal: bool
    witness: Word | None = None
    left_value: Fraction | None = None
    right_value: Fraction | None = None


def _word_basis(a: MultiplicityAutomaton, b: MultiplicityAutomaton):
    """Basis words with their forward vector pairs, spanning all reachable pairs."""
    alphabet = a.alphabet
    index = {x: i for i, x in enumerate(alphabet)}
    ra = a.to_linear_representation()
    rb = b.to_linear_representation()
    dim = ra.dim + rb.dim

    span = SpanBasis(dim)
    basis: list[tuple[Word, Vector, Vector]] = [((), ra.lam, rb.lam)]
    span.add(ra.lam + rb.lam)
    frontier: list[tuple[int, tuple[int, ...], Word, Vector, Vector]] = []

    def push_children(word: Word, va: Vector, vb: Vector) -> None:
        for x in alphabet:
            child = word + (x,)
            key = tuple(index[y] for y in child)
            heapq.heappush(frontier, (len(child), key,
                                      child, vec_mat(va, ra.mu[x]), vec_mat(vb, rb.mu[x])))

    push_children((), ra.lam, rb.lam)
    while frontier:
        _, _, word, va, vb = heapq.heappop(frontier)
        if span.add(va + vb):
            basis.append((word, va, vb))
            push_children(word, va, vb)
    return basis, ra.gamma, rb.gamma


def are_equivalent(a: MultiplicityAutomaton, b: MultiplicityAutomaton) -> EquivalenceOutcome:
    """Decide whether two automata generate the same series.

    On a mismatch the returned witness is the length-lex smallest basis word
    whose values differ, with both values re-evaluated on the inputs.

    Alphabets may differ as long as their shared letters agree in order; the
    comparison then runs over the union, missing letters meaning weight zero.
    """
    alphabet = merge_alphabets(a.alphabet, b.alphabet)
    a = with_alphabet(a, alphabet)
    b = with_alphabet(b, alphabet)
    basis, gamma_a, gamma_b = _word_basis(a, b)
    for word, va, vb in basis:
        if dot(va, gamma_a) != dot(vb, gamma_b):
            return EquivalenceOutcome(False, word, a.evaluate(word), b.evaluate(word))
    return EquivalenceOutcome(True)


@dataclass(frozen=True)
class CombinationOutcome:
    """Expressible with the given coefficients, or infeasible."""
    expressible: bool
    coefficients: tuple[Fraction, ...] | None = None


def _shares_structure(target: MultiplicityAutomaton,
                      generators: Sequence[MultiplicityAutomaton]) -> bool:
    return all(g.states == target.states and g.tau == target.tau
               and g.phi == target.phi for g in generators)


def _counterexample(target: MultiplicityAutomaton,
                    generators: Sequence[MultiplicityAutomaton],
                    coeffs: Sequence[Fraction],
                    shared: bool) -> Word | None:
    """Word where the candidate combination misses the target, or None."""
    if shared:
        # All series live in one automaton; compare the combined initial
        # vector against the zero series instead of building a disjoint sum.
        lam_t = target.to_linear_representation().lam
        lam = list(lam_t)
        for c, g in zip(coeffs, generators):
            lam_g = g.to_linear_representation().lam
            for i in range(len(lam)):
                lam[i] -= c * lam_g[i]
        diff = replace_iota(target, tuple(lam))
        outcome = are_equivalent(diff, empty_automaton(target.alphabet))
    elif generators:
        outcome = are_equivalent(target, weighted_sum(generators, coeffs))
    else:
        outcome = are_equivalent(target, empty_automaton(target.alphabet))
    return None if outcome.equal else outcome.witness


def express_combination(target: MultiplicityAutomaton,
                        generators: Sequence[MultiplicityAutomaton],
                        nonneg: bool) -> CombinationOutcome:
    """Coefficients expressing the target series over the generators' series.

    Starts from the empty-word equation and alternates exact solving with
    counterexample search: any solution of the current equations that still
    misses the target contributes the smallest word where it fails as a new
    equation. With ``nonneg`` the coefficients are additionally constrained
    to be >= 0 and solved by exact linear feasibility.
    """
    generators = list(generators)
    if any(g.alphabet != target.alphabet for g in generators):
        raise ValueError("alphabet mismatch")
    n = len(generators)
    shared = _shares_structure(target, generators) if generators else False
    probes: list[Word] = [()]
    for _ in range(n + 2):
        rows = [[g.evaluate(u) for g in generators] for u in probes]
        rhs = [target.evaluate(u) for u in probes]
        if nonneg:
            constraints = [Constraint.eq(row, -value) for row, value in zip(rows, rhs)]
            constraints += [Constraint.ge([1 if j == i else 0 for j in range(n)], 0)
                            for i in range(n)]
            coeffs = lp_feasible(constraints, n)
        else:
            sol = solve_affine(Matrix(rows, n), rhs)
            coeffs = None if sol is None else sol.particular
        if coeffs is None:
            return CombinationOutcome(False)
        witness = _counterexample(target, generators, coeffs, shared)
        if witness is None:
            for u in probes:
                assert target.evaluate(u) == sum(
                    (c * g.evaluate(u) for c, g in zip(coeffs, generators)), Fraction(0))
            return CombinationOutcome(True, tuple(coeffs))
        probes.append(witness)
    raise RuntimeError("combination search exceeded its iteration bound")

"""Series sums, prefix weights and residual automata.

The central decision is whether the sum of a rational series over all words
converges, and if so what its exact value is. Everything reduces to the
letter-summed transition matrix M: the sum over words of length k equals
iota . M^k . tau. Convergence is decided on an invariant subspace
decomposition rather than on M itself, because directions that the initial
vector never observes, or that the final vector never feeds, must not count
against convergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .automata import MultiplicityAutomaton, replace_iota
from .linalg import (Matrix, SpanBasis, Vector, dot, invert, linear_combination,
                     mat_vec, solve_affine, spectral_radius_lt_one, unit_vector,
                     vec_mat)


@dataclass(frozen=True)
class SumOutcome:
    """Either divergent, or convergent with the exact value of the sum."""
    converges: bool
    value: Fraction | None = None

    @staticmethod
    def divergent() -> "SumOutcome":
        return SumOutcome(False, None)

    @staticmethod
    def converged(value: Fraction) -> "SumOutcome":
        return SumOutcome(True, value)


def letter_sum_matrix(a: MultiplicityAutomaton) -> Matrix:
    """M[i, j] = total transition weight from state i to state j over all letters."""
    rep = a.to_linear_representation()
    n = rep.dim
    m = Matrix.zeros(n, n)
    for grid in rep.mu.values():
        m = m + grid
    return m


def _convergent_sum(m: Matrix, iota: Vector, tau: Vector,
                    reverse_complement: bool = False) -> SumOutcome:
    """Decide and evaluate sum_k iota . M^k . tau.

    E is the smallest M-invariant space containing tau; H collects the part
    of E invisible to every iota . M^k; G is a complement of H inside E.
    The sum converges iff the compression of M to G is a contraction, and
    then equals iota . (Id - P M P)^{-1} . tau for the projection P onto G.
    The complement choice does not affect the outcome; ``reverse_complement``
    exists so tests can exercise a second pivot order.
    """
    n = m.nrows
    if n == 0:
        return SumOutcome.converged(Fraction(0))

    e_vecs: list[Vector] = []
    span = SpanBasis(n)
    v = tau
    while span.add(v):
        e_vecs.append(v)
        v = mat_vec(m, v)

    o_vecs: list[Vector] = []
    ospan = SpanBasis(n)
    r = iota
    while ospan.add(r):
        o_vecs.append(r)
        r = vec_mat(r, m)

    h_vecs: list[Vector] = []
    if e_vecs:
        pairing = Matrix([[dot(o, e) for e in e_vecs] for o in o_vecs], len(e_vecs))
        sol = solve_affine(pairing, [Fraction(0)] * len(o_vecs))
        assert sol is not None
        h_vecs = [linear_combination(e_vecs, c, n) for c in sol.nullspace]

    basis = SpanBasis(n)
    for h in h_vecs:
        basis.add(h)
    candidates = list(reversed(e_vecs)) if reverse_complement else e_vecs
    g_vecs = [e for e in candidates if basis.add(e)]
    unit_order = reversed(range(n)) if reverse_complement else range(n)
    f_vecs = [u for u in (unit_vector(n, i) for i in unit_order) if basis.add(u)]

    columns = g_vecs + h_vecs + f_vecs
    b = Matrix.from_columns(columns, n)
    d = Matrix.diagonal([1 if i < len(g_vecs) else 0 for i in range(n)])
    p_g = b @ d @ invert(b)
    compressed = p_g @ m @ p_g
    if not spectral_radius_lt_one(compressed):
        return SumOutcome.divergent()
    sol = solve_affine(Matrix.identity(n) - compressed, tau)
    assert sol is not None and not sol.nullspace
    return SumOutcome.converged(dot(iota, sol.particular))


def total_sum(a: MultiplicityAutomaton, *, reverse_complement: bool = False) -> SumOutcome:
    """Convergence decision and exact value of the sum of the series over all words."""
    rep = a.to_linear_representation()
    return _convergent_sum(letter_sum_matrix(a), rep.lam, rep.gamma, reverse_complement)


def state_sums(a: MultiplicityAutomaton) -> dict[str, Fraction] | None:
    """Per-state series sums; None as soon as any state's sum diverges."""
    rep = a.to_linear_representation()
    m = letter_sum_matrix(a)
    sums: dict[str, Fraction] = {}
    for i, q in enumerate(a.states):
        outcome = _convergent_sum(m, unit_vector(a.n_states, i), rep.gamma)
        if not outcome.converges:
            return None
        sums[q] = outcome.value
    return sums


def _state_sum_vector(a: MultiplicityAutomaton) -> Vector:
    sums = state_sums(a)
    if sums is None:
        raise ValueError("state sums diverge")
    return tuple(sums[q] for q in a.states)


def prefix_weight(a: MultiplicityAutomaton, u: Sequence[str]) -> Fraction:
    """Total series mass of the words starting with u."""
    rep = a.to_linear_representation()
    s = _state_sum_vector(a)
    v = rep.lam
    for x in u:
        if x not in rep.mu:
            raise ValueError(f"letter {x!r} is not in the alphabet")
        v = vec_mat(v, rep.mu[x])
    return dot(v, s)


def residual_automaton(a: MultiplicityAutomaton, u: Sequence[str]) -> MultiplicityAutomaton:
    """Automaton for the residual series w -> value(u w) / prefix mass of u.

    Only the initial vector changes: it is pushed through mu(u) and divided
    by the prefix weight, which must be nonzero (and finite).
    """
    rep = a.to_linear_representation()
    s = _state_sum_vector(a)
    v = rep.lam
    for x in u:
        if x not in rep.mu:
            raise ValueError(f"letter {x!r} is not in the alphabet")
        v = vec_mat(v, rep.mu[x])
    mass = dot(v, s)
    if mass == 0:
        raise ValueError(f"prefix weight of {''.join(u) or 'the empty word'} is zero")
    return replace_iota(a, tuple(x / mass for x in v))

"""State elimination, reducedness and the rank of the series.

A state whose series is a combination of the other states' series can be
eliminated without changing any remaining state series. Over the field the
iteration bottoms out at the rank of the series, which is computed
independently from the pairing of the two one-sided closures.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .automata import MultiplicityAutomaton, state_series_automaton
from .equivalence import express_combination
from .linalg import Matrix, SpanBasis, dot, mat_vec, rref, vec_mat


class ReductionMode(enum.Enum):
    """Coefficient domain for eliminations: the rationals or their nonnegative cone."""
    FIELD = "field"
    CONE = "cone"


class ReductionStallError(RuntimeError):
    """Field-mode elimination stopped above the series rank."""


def _expressible_over_others(a: MultiplicityAutomaton, q: str, mode: ReductionMode):
    others = [s for s in a.states if s != q]
    outcome = express_combination(
        state_series_automaton(a, q),
        [state_series_automaton(a, s) for s in others],
        nonneg=(mode is ReductionMode.CONE))
    if not outcome.expressible:
        return None
    return dict(zip(others, outcome.coefficients))


def is_reduced(a: MultiplicityAutomaton, mode: ReductionMode) -> bool:
    """True iff no state's series is a mode-valid combination of the others'."""
    return all(_expressible_over_others(a, q, mode) is None for q in a.states)


def _eliminate(a: MultiplicityAutomaton, q: str,
               coeffs: dict[str, Fraction]) -> MultiplicityAutomaton:
    keep = [s for s in a.states if s != q]
    iota = {r: a.iota_weight(r) + coeffs[r] * a.iota_weight(q) for r in keep}
    tau = {r: a.tau_weight(r) for r in keep}
    phi = {}
    for r in keep:
        for x in a.alphabet:
            for s in keep:
                w = a.weight(r, x, s) + coeffs[s] * a.weight(r, x, q)
                if w:
                    phi[(r, x, s)] = w
    return MultiplicityAutomaton(a.alphabet, keep, iota, tau, phi)


def reduce(a: MultiplicityAutomaton, mode: ReductionMode) -> MultiplicityAutomaton:
    """Eliminate combination states until none remains; the series is preserved.

    States are examined in declared order and the first reducible one is
    removed each round. In field mode the final state count must match
    ``hankel_rank``; a mismatch raises :class:`ReductionStallError` instead
    of returning silently.
    """
    target_rank = hankel_rank(a) if mode is ReductionMode.FIELD else None
    current = a
    changed = True
    while changed:
        changed = False
        for q in current.states:
            coeffs = _expressible_over_others(current, q, mode)
            if coeffs is not None:
                current = _eliminate(current, q, coeffs)
                changed = True
                break
    if mode is ReductionMode.FIELD and current.n_states != target_rank:
        raise ReductionStallError(
            f"elimination stopped at {current.n_states} states but the series "
            f"rank is {target_rank}")
    return current


def hankel_rank(a: MultiplicityAutomaton) -> int:
    """Dimension of the span of all shifted versions of the series.

    Computed as the rank of the pairing between the forward closure of the
    initial vector (under right letter action) and the backward closure of
    the final vector (under left letter action). This equals the dimension
    of every minimal presentation of the series over the field.
    """
    rep = a.to_linear_representation()
    n = rep.dim
    if n == 0:
        return 0

    forward = []
    fspan = SpanBasis(n)
    stack = [rep.lam]
    while stack:
        v = stack.pop()
        if fspan.add(v):
            forward.append(v)
            stack.extend(vec_mat(v, rep.mu[x]) for x in a.alphabet)

    backward = []
    bspan = SpanBasis(n)
    stack = [rep.gamma]
    while stack:
        v = stack.pop()
        if bspan.add(v):
            backward.append(v)
            stack.extend(mat_vec(rep.mu[x], v) for x in a.alphabet)

    if not forward or not backward:
        return 0
    pairing = Matrix([[dot(f, b) for b in backward] for f in forward], len(backward))
    _, pivots = rref(pairing)
    return len(pivots)

"""Shared oracles and random instance generators for the test suite.

Oracles here are deliberately independent of the library code paths they
check: closed forms are evaluated from first principles, series values are
recomputed from the inductive definition or by full path enumeration, and
the 2x2 spectral test uses the characteristic polynomial.
"""

import itertools
import random
from fractions import Fraction

from stochlang import MultiplicityAutomaton

F = Fraction


# ---------------------------------------------------------------- closed forms

def lucas(k):
    """Lucas numbers: 2, 1, 3, 4, 7, ..."""
    if k < 0:
        raise ValueError
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fig3_value(word):
    """Closed form for the fig3_App series via the Lucas sequence."""
    d = sum(1 for x in word if x == "a") - sum(1 for x in word if x == "b")
    return F(lucas(2 * abs(d)), 2 ** (2 * len(word) + 3))


def t_value(word):
    """Closed form for the prop10_t series."""
    d = sum(1 for x in word if x == "a") - sum(1 for x in word if x == "b")
    return F(d * d, 2 ** (2 * len(word) + 1))


def p1_value(n):
    return F(1, 2 ** (n + 1))


def p2_value(n):
    return F(3, 2 ** (2 * n + 2))


def p_value(n):
    return (p1_value(n) + p2_value(n)) / 2


def example1_residual_value(n, m):
    """Value of the a^n residual of example1_p on a^m."""
    return (2 ** n * p1_value(m) + p2_value(m)) / (2 ** n + 1)


# ------------------------------------------------------- independent evaluators

def eval_by_definition(a, word):
    """Series value from the inductive per-state definition, no matrices."""
    memo = {}

    def from_state(q, i):
        if i == len(word):
            return a.tau_weight(q)
        if (q, i) not in memo:
            memo[(q, i)] = sum(
                (a.weight(q, word[i], r) * from_state(r, i + 1) for r in a.states),
                F(0))
        return memo[(q, i)]

    return sum((a.iota_weight(q) * from_state(q, 0) for q in a.states), F(0))


def eval_by_paths(a, word):
    """Series value by brute enumeration of all state paths."""
    total = F(0)
    for path in itertools.product(a.states, repeat=len(word) + 1):
        weight = a.iota_weight(path[0])
        for i, x in enumerate(word):
            if not weight:
                break
            weight *= a.weight(path[i], x, path[i + 1])
        total += weight * a.tau_weight(path[-1])
    return total


def series_equal_up_to(a, b, max_len):
    """Exhaustive exact comparison of two series on all words up to a length."""
    alphabet = a.alphabet
    for k in range(max_len + 1):
        for w in itertools.product(alphabet, repeat=k):
            if a.evaluate(w) != b.evaluate(w):
                return False, w
    return True, None


def jury_lt_one_2x2(m):
    """Both eigenvalues of a 2x2 matrix inside the unit circle, exactly.

    Characteristic polynomial x^2 - t x + d: stability holds iff |d| < 1,
    1 - t + d > 0 and 1 + t + d > 0.
    """
    t = m[0, 0] + m[1, 1]
    d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return abs(d) < 1 and 1 - t + d > 0 and 1 + t + d > 0


# ------------------------------------------------------------ random instances

def random_fraction(rng, max_num=3, max_den=3, signed=True):
    num = rng.randint(1, max_num)
    if signed and rng.random() < 0.5:
        num = -num
    return F(num, rng.randint(1, max_den))


def random_ma(rng, n_states, alphabet, density=0.7, signed=True):
    """Random automaton with small rational weights."""
    states = [f"q{i}" for i in range(n_states)]
    iota = {q: random_fraction(rng, signed=signed)
            for q in states if rng.random() < density}
    tau = {q: random_fraction(rng, signed=signed)
           for q in states if rng.random() < density}
    phi = {}
    for q in states:
        for x in alphabet:
            for r in states:
                if rng.random() < density:
                    phi[(q, x, r)] = random_fraction(rng, signed=signed)
    return MultiplicityAutomaton(alphabet, states, iota, tau, phi)


def random_dense_ma(rng, n_states, alphabet):
    """Fully dense automaton with nonzero generic weights."""
    return random_ma(rng, n_states, alphabet, density=1.0, signed=True)


def random_pa(rng, n_states, alphabet):
    """Random probabilistic automaton, trimmed by construction.

    Every state gets positive initial and final mass, which forces
    accessibility and co-accessibility; rows are normalised exactly.
    """
    states = [f"q{i}" for i in range(n_states)]
    raw = [rng.randint(1, 5) for _ in states]
    total = sum(raw)
    iota = {q: F(w, total) for q, w in zip(states, raw)}
    tau = {}
    phi = {}
    for q in states:
        tau_raw = rng.randint(1, 4)
        trans = {}
        for x in alphabet:
            for r in states:
                if rng.random() < 0.6:
                    trans[(q, x, r)] = rng.randint(1, 4)
        row_total = tau_raw + sum(trans.values())
        tau[q] = F(tau_raw, row_total)
        for key, w in trans.items():
            phi[key] = F(w, row_total)
    return MultiplicityAutomaton(alphabet, states, iota, tau, phi)


def random_pda(rng, n_states, alphabet):
    """Random PA with deterministic support: one start state, one target per letter."""
    states = [f"q{i}" for i in range(n_states)]
    iota = {states[0]: F(1)}
    tau = {}
    phi = {}
    for i, q in enumerate(states):
        tau_raw = rng.randint(1, 4)
        trans = {}
        for x in alphabet:
            # bias targets toward later states so most states stay reachable
            choice = rng.randint(0, n_states)
            if choice < n_states:
                trans[(q, x, states[choice])] = rng.randint(1, 4)
        row_total = tau_raw + sum(trans.values())
        tau[q] = F(tau_raw, row_total)
        for key, w in trans.items():
            phi[key] = F(w, row_total)
    return MultiplicityAutomaton(alphabet, states, iota, tau, phi).trim()


def permuted_copy(a, rng):
    """Same series, states shuffled and renamed."""
    order = list(a.states)
    rng.shuffle(order)
    rename = {q: f"r{i}" for i, q in enumerate(order)}
    return MultiplicityAutomaton(
        a.alphabet, [rename[q] for q in order],
        {rename[q]: w for q, w in a.iota.items()},
        {rename[q]: w for q, w in a.tau.items()},
        {(rename[q], x, rename[r]): w for (q, x, r), w in a.phi.items()})


def duplicate_state(a, rng):
    """Add a clone of one state (same rows) and split its initial mass."""
    q = rng.choice(a.states)
    clone = "dup"
    assert clone not in a.states
    iota = dict(a.iota)
    w = iota.pop(q, F(0))
    iota[q] = w / 2
    iota[clone] = w / 2
    tau = dict(a.tau)
    if q in a.tau:
        tau[clone] = a.tau[q]
    phi = dict(a.phi)
    for (s, x, r), weight in a.phi.items():
        if s == q:
            phi[(clone, x, r)] = weight
    return MultiplicityAutomaton(a.alphabet, list(a.states) + [clone], iota, tau, phi)

import itertools
import random
from fractions import Fraction

import pytest

from stochlang import (Dfa, MultiplicityAutomaton, ReductionMode,
                       check_stochastic_bounded, classify, fixtures, is_pa,
                       is_pda, is_pra_reduced, is_reduced, is_semi_pa,
                       pra_hardness_instance, state_sums, total_sum)

from helpers import random_pa

F = Fraction


class TestSemiPa:
    def test_fig2(self):
        assert is_semi_pa(fixtures.build("fig2_A"))

    def test_fig3_has_negative_weight(self):
        assert not is_semi_pa(fixtures.build("fig3_App"))

    def test_all_zero(self):
        a = MultiplicityAutomaton(("a",), ("q0",), {}, {}, {})
        assert is_semi_pa(a)

    def test_submass_rows(self):
        a = MultiplicityAutomaton(("a",), ("q0",), {"q0": F(1, 2)},
                                  {"q0": F(1, 4)}, {("q0", "a", "q0"): F(1, 4)})
        assert is_semi_pa(a)
        assert not is_pa(a)


class TestPa:
    def test_fig5(self):
        assert is_pa(fixtures.build("fig5"))

    def test_example1_p(self):
        assert is_pa(fixtures.build("example1_p"))

    def test_low_initial_mass(self):
        a = MultiplicityAutomaton(("a",), ("q0",), {"q0": F(1, 2)}, {"q0": 1}, {})
        assert is_semi_pa(a)
        assert not is_pa(a)

    def test_untrimmed_is_not_pa(self):
        a = MultiplicityAutomaton(
            ("a",), ("q0", "sink"), {"q0": 1}, {"q0": F(1, 2)},
            {("q0", "a", "sink"): F(1, 2), ("sink", "a", "sink"): 1})
        assert not is_pa(a)


class TestPda:
    def test_fig2_is_pda(self):
        assert is_pda(fixtures.build("fig2_A"))

    def test_fig5_is_not(self):
        assert not is_pda(fixtures.build("fig5"))

    def test_example1_p_is_not(self):
        assert not is_pda(fixtures.build("example1_p"))


class TestPraReduced:
    def test_fig5(self):
        verdict, witnesses = is_pra_reduced(fixtures.build("fig5"))
        assert verdict
        assert witnesses == {"q0": (), "q1": ("a",)}

    def test_fig2(self):
        verdict, witnesses = is_pra_reduced(fixtures.build("fig2_A"))
        assert verdict
        assert witnesses == {"q0": (), "q1": ("a",)}

    def test_example1_p_is_not(self):
        verdict, witnesses = is_pra_reduced(fixtures.build("example1_p"))
        assert not verdict
        assert witnesses is None

    def test_precondition_not_pa(self):
        with pytest.raises(ValueError):
            is_pra_reduced(fixtures.build("fig3_App"))

    def test_precondition_not_reduced(self):
        from stochlang import weighted_sum
        doubled = weighted_sum([fixtures.build("fig5"), fixtures.build("fig5")],
                               (F(1, 2), F(1, 2)))
        assert is_pa(doubled)
        with pytest.raises(ValueError):
            is_pra_reduced(doubled)

    def test_witnesses_verified_by_nfa_simulation(self):
        for name in ("fig2_A", "fig5"):
            a = fixtures.build(name)
            verdict, witnesses = is_pra_reduced(a)
            assert verdict
            delta = a.support_delta()
            for q, w in witnesses.items():
                subset = frozenset(a.initial_states())
                for x in w:
                    subset = frozenset().union(
                        *(delta.get((s, x), frozenset()) for s in subset))
                assert subset == {q}

    def test_pda_fixtures_are_pra(self):
        for name in ("fig2_A", "example1_p1", "example1_p2"):
            a = fixtures.build(name)
            assert is_pda(a)
            assert is_pra_reduced(a)[0]

    def test_pda_implies_pra(self):
        from helpers import random_pda
        rng = random.Random(51)
        checked = 0
        for _ in range(30):
            a = random_pda(rng, rng.randint(2, 3), ("a", "b"))
            if not is_pda(a) or not is_reduced(a, ReductionMode.CONE):
                continue
            assert is_pra_reduced(a)[0]
            checked += 1
        assert checked >= 10


class TestStochasticBounded:
    def test_prop10(self):
        report = check_stochastic_bounded(fixtures.build("prop10_t"), 8)
        assert report.sum_is_one and report.violation is None

    def test_fig3(self):
        report = check_stochastic_bounded(fixtures.build("fig3_App"), 8)
        assert report.sum_is_one and report.violation is None

    def test_negated_final_weights(self):
        app = fixtures.build("fig3_App")
        negated = MultiplicityAutomaton(
            app.alphabet, app.states, app.iota,
            {q: -w for q, w in app.tau.items()}, app.phi)
        report = check_stochastic_bounded(negated, 8)
        assert not report.sum_is_one
        assert report.violation == ()

    def test_violation_is_length_lex_smallest(self):
        a = MultiplicityAutomaton(
            ("a", "b"), ("q0", "q1"), {"q0": 1}, {"q0": F(1, 2), "q1": F(-1, 4)},
            {("q0", "b", "q1"): F(1, 2)})
        report = check_stochastic_bounded(a, 4)
        assert report.violation == ("b",)

    def test_all_pa_fixtures_clean(self):
        for name in ("fig2_A", "fig5", "example1_p", "example1_p1", "example1_p2"):
            report = check_stochastic_bounded(fixtures.build(name), 8)
            assert report.sum_is_one and report.violation is None


class TestClassReport:
    def test_fig2(self):
        report = classify(fixtures.build("fig2_A"))
        assert report.trimmed and report.semi_pa and report.pa and report.pda
        assert report.pra_reduced.is_pra and not report.pra_reduced.on_reduction

    def test_fig3(self):
        report = classify(fixtures.build("fig3_App"))
        assert not report.semi_pa and not report.pa
        assert report.pra_reduced is None
        assert report.stochastic.sum_is_one

    def test_unreduced_pa_reports_on_reduction(self):
        from stochlang import weighted_sum
        doubled = weighted_sum([fixtures.build("fig5"), fixtures.build("fig5")],
                               (F(1, 2), F(1, 2)))
        report = classify(doubled)
        assert report.pa
        assert report.pra_reduced.on_reduction
        assert report.pra_reduced.is_pra


def dfa_all(alphabet=("a", "b")):
    delta = {("s0", x): "s0" for x in alphabet}
    return Dfa(alphabet, ("s0",), "s0", frozenset({"s0"}), delta)


def dfa_only_epsilon(alphabet=("a", "b")):
    delta = {("s0", x): "s1" for x in alphabet}
    delta.update({("s1", x): "s1" for x in alphabet})
    return Dfa(alphabet, ("s0", "s1"), "s0", frozenset({"s0"}), delta)


def dfa_a_count_mod(residue, alphabet=("a", "b")):
    delta = {}
    for x in alphabet:
        delta[("e", x)] = "o" if x == "a" else "e"
        delta[("o", x)] = "e" if x == "a" else "o"
    return Dfa(alphabet, ("e", "o"), "e", frozenset({"e" if residue == 0 else "o"}), delta)


def union_covers_all(dfas, max_len):
    alphabet = dfas[0].alphabet
    for k in range(max_len + 1):
        for w in itertools.product(alphabet, repeat=k):
            if not any(d.accepts(w) for d in dfas):
                return False
    return True


class TestHardnessInstance:
    def test_total_union_is_not_pra(self):
        b = pra_hardness_instance([dfa_all()])
        assert is_pa(b)
        assert is_reduced(b, ReductionMode.CONE)
        assert not is_pra_reduced(b)[0]

    def test_epsilon_language_is_pra(self):
        b = pra_hardness_instance([dfa_only_epsilon(("a",))])
        assert is_pa(b)
        assert is_reduced(b, ReductionMode.CONE)
        assert is_pra_reduced(b)[0]

    def test_complementary_pair_is_not_pra(self):
        b = pra_hardness_instance([dfa_a_count_mod(0), dfa_a_count_mod(1)])
        assert is_pa(b)
        assert not is_pra_reduced(b)[0]

    def test_verdict_tracks_union_universality(self):
        families = [
            [dfa_all()],
            [dfa_only_epsilon()],
            [dfa_a_count_mod(0)],
            [dfa_a_count_mod(0), dfa_a_count_mod(1)],
            [dfa_only_epsilon(), dfa_a_count_mod(1)],
        ]
        for dfas in families:
            b = pra_hardness_instance(dfas)
            assert is_pa(b)
            assert is_reduced(b, ReductionMode.CONE)
            assert is_pra_reduced(b)[0] == (not union_covers_all(dfas, 6))

    def test_state_sums_are_one(self):
        b = pra_hardness_instance([dfa_a_count_mod(0)])
        sums = state_sums(b)
        assert sums is not None and all(v == 1 for v in sums.values())
        assert total_sum(b).value == 1

    def test_classify_report_stays_tractable(self):
        # the nonnegativity scan must not enumerate words over the wide
        # alphabet of a generated instance; all its weights are nonnegative
        b = pra_hardness_instance([dfa_a_count_mod(0)])
        report = classify(b)
        assert report.pa
        assert report.pra_reduced.is_pra
        assert report.stochastic.sum_is_one
        assert report.stochastic.violation is None

    def test_rejects_empty_language(self):
        d = Dfa(("a",), ("s0",), "s0", frozenset(), {("s0", "a"): "s0"})
        with pytest.raises(ValueError):
            pra_hardness_instance([d])

    def test_rejects_mixed_alphabets(self):
        with pytest.raises(ValueError):
            pra_hardness_instance([dfa_all(("a",)), dfa_all(("a", "b"))])

from fractions import Fraction

import pytest
from hypothesis import given, settings

from k4free.errors import DomainError
from k4free.generators import (
    complete_graph,
    cycle_graph,
    gen_k5_union,
    gen_k6_chain,
    path_graph,
)
from k4free.oracle import brute_force_s
from k4free.potential import (
    FIFTH,
    MAIN,
    greedy_fifth_transversal,
    greedy_steps,
    lemma42_check,
    phi_graph,
    theorem41_check,
)
from k4free.reduction import is_k4_minor_free

from conftest import graphs


class TestProfiles:
    def test_values(self):
        for profile in (FIFTH, MAIN):
            assert profile.value(0) == 0
            assert profile.value(2) == 0
            assert profile.value(4) == 2
            assert profile.value(9) == Fraction(9, 2)
        assert FIFTH.value(3) == Fraction(5, 4)
        assert MAIN.value(3) == Fraction(4, 3)

    def test_at_most_half_degree(self):
        for d in range(0, 101):
            assert FIFTH.value(d) <= Fraction(d, 2)
            assert MAIN.value(d) <= Fraction(d, 2)

    def test_monotone(self):
        for profile in (FIFTH, MAIN):
            for d in range(0, 100):
                assert profile.value(d) <= profile.value(d + 1)

    def test_graph_values(self):
        assert phi_graph(complete_graph(6), MAIN) == 15
        assert phi_graph(complete_graph(4), MAIN) == Fraction(16, 3)
        assert phi_graph(complete_graph(4), FIFTH) == 5
        assert phi_graph(cycle_graph(5), MAIN) == 0

    @given(graphs(max_n=8))
    def test_phi_at_most_m(self, g):
        # phi(d) <= d/2 summed over degrees is at most m
        for profile in (FIFTH, MAIN):
            assert phi_graph(g, profile) <= g.edge_count


class TestGreedy:
    def test_minor_free_untouched(self):
        assert greedy_fifth_transversal(cycle_graph(7)).size == 0
        assert greedy_fifth_transversal(path_graph(5)).size == 0

    def test_k5_needs_two(self, k5):
        res = greedy_fifth_transversal(k5)
        assert res.size == 2
        assert res.certificate.end.n == 0

    def test_k5_union_hits_m_over_5(self):
        g = gen_k5_union(3)
        res = greedy_fifth_transversal(g)
        assert res.size == 6 == g.edge_count // 5

    @given(graphs(max_n=9))
    @settings(max_examples=150)
    def test_bound_and_validity(self, g):
        res = greedy_fifth_transversal(g)
        assert res.size * 5 <= phi_graph(g, FIFTH)
        rest = g.induced_subgraph(g.vertices - res.vertices)
        assert is_k4_minor_free(rest)
        assert res.size <= g.edge_count // 5

    @given(graphs(max_n=9))
    @settings(max_examples=100)
    def test_each_step_drops_potential_enough(self, g):
        for step in greedy_steps(g):
            h = step.graph
            assert min(h.degree(v) for v in h.vertices) >= 3
            assert h.degree(step.chosen) == max(h.degree(v) for v in h.vertices)
            drop = phi_graph(h, FIFTH) - phi_graph(h.delete_vertex(step.chosen), FIFTH)
            assert drop >= 5


class TestLemma42:
    def test_preconditions(self):
        with pytest.raises(DomainError):
            lemma42_check(2, 1, 1)
        with pytest.raises(DomainError):
            lemma42_check(3, 0, 1)

    def test_small_grid(self):
        assert all(
            lemma42_check(a, b, c)
            for a in range(3, 12)
            for b in range(1, 12)
            for c in range(1, 12)
        )


class TestTheorem41:
    def test_needs_connected(self):
        with pytest.raises(DomainError):
            theorem41_check(gen_k5_union(2))

    def test_k6_equality(self):
        rep = theorem41_check(complete_graph(6))
        assert rep.part_a_ok
        assert rep.phi == 15 and rep.s == 3
        assert rep.phi == Fraction(16, 3) * rep.s - 1  # tight

    def test_minor_free_trivial(self):
        rep = theorem41_check(cycle_graph(5))
        assert rep.part_a_ok and rep.s == 0

    def test_k4(self, k4):
        rep = theorem41_check(k4)
        assert rep.phi == Fraction(16, 3) and rep.s == 1
        assert rep.part_a_ok

    def test_chain(self):
        rep = theorem41_check(gen_k6_chain(2))
        assert rep.part_a_ok and rep.s == 6

    @given(graphs(max_n=8, connected=True, min_n=1))
    @settings(max_examples=100)
    def test_lower_bound_on_random_connected(self, g):
        rep = theorem41_check(g)
        assert rep.s == brute_force_s(g).size
        assert rep.part_a_ok and rep.part_b_ok

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k4free.csp import (
    Assignment,
    CspInstance,
    eliminate_low_degree_variable,
    encode_maxcut,
    format_csp,
    parse_csp,
    solve,
    solve_treewidth2,
    SolveStats,
)
from k4free.errors import DomainError
from k4free.generators import complete_graph, cycle_graph, path_graph
from k4free.suites import _random_instance, brute_force_csp


@st.composite
def instances(draw, max_n=6, max_r=3):
    n = draw(st.integers(0, max_n))
    r = draw(st.integers(1, max_r))
    score = st.integers(-4, 4)
    unary = {
        v: tuple(draw(score) for _ in range(r)) for v in range(n)
    }
    binary = {}
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                binary[(u, v)] = tuple(
                    tuple(draw(score) for _ in range(r)) for _ in range(r)
                )
    return CspInstance(r, frozenset(range(n)), unary, binary, draw(score))


class TestInstance:
    def test_missing_unary_defaults_to_zero(self):
        inst = CspInstance(2, frozenset({0, 1}), {}, {})
        assert inst.unary[0] == (0, 0)

    def test_validation(self):
        with pytest.raises(DomainError):
            CspInstance(0, frozenset(), {}, {})
        with pytest.raises(DomainError):
            CspInstance(2, frozenset({0}), {0: (1,)}, {})
        with pytest.raises(DomainError):
            CspInstance(2, frozenset({0, 1}), {}, {(1, 0): ((0, 0), (0, 0))})
        with pytest.raises(DomainError):
            CspInstance(2, frozenset({0, 1}), {}, {(0, 2): ((0, 0), (0, 0))})

    def test_binary_between_orientation(self):
        table = ((1, 2), (3, 4))
        inst = CspInstance(2, frozenset({0, 1}), {}, {(0, 1): table})
        assert inst.binary_between(0, 1) == ((1, 2), (3, 4))
        assert inst.binary_between(1, 0) == ((1, 3), (2, 4))

    def test_evaluate(self):
        inst = CspInstance(
            2,
            frozenset({0, 1}),
            {0: (0, 1), 1: (2, 0)},
            {(0, 1): ((5, 0), (0, 0))},
            constant=Fraction(1, 2),
        )
        assert inst.evaluate({0: 0, 1: 0}) == Fraction(15, 2)
        assert inst.evaluate({0: 1, 1: 1}) == Fraction(3, 2)

    def test_constraint_graph(self):
        inst = encode_maxcut(cycle_graph(5))
        assert inst.constraint_graph() == cycle_graph(5)


class TestElimination:
    def test_isolated_variable(self):
        inst = CspInstance(2, frozenset({0}), {0: (3, 7)}, {}, constant=1)
        red, rule = eliminate_low_degree_variable(inst, 0)
        assert red.constant == 8
        assert red.variables == frozenset()
        assert rule.choose({}) == 1

    def test_degree_one_fold(self):
        ident = ((2, 1), (1, 2))
        inst = CspInstance(2, frozenset({0, 1}), {}, {(0, 1): ident})
        red, rule = eliminate_low_degree_variable(inst, 1)
        assert red.unary[0] == (2, 2)
        assert rule.choose({0: 0}) == 0 and rule.choose({0: 1}) == 1

    def test_degree_two_fold(self):
        ident = ((2, 1), (1, 2))
        inst = CspInstance(
            2, frozenset({0, 1, 2}), {}, {(0, 1): ident, (1, 2): ident}
        )
        red, rule = eliminate_low_degree_variable(inst, 1)
        assert red.binary[(0, 2)] == ((4, 3), (3, 4))

    def test_degree_three_rejected(self):
        inst = encode_maxcut(complete_graph(4))
        with pytest.raises(DomainError):
            eliminate_low_degree_variable(inst, 0)

    @given(instances(max_n=5))
    @settings(max_examples=100)
    def test_preserves_optimum(self, inst):
        low = [v for v in sorted(inst.variables) if inst.degree(v) <= 2]
        if not low:
            return
        red, rule = eliminate_low_degree_variable(inst, low[0])
        assert brute_force_csp(red) == brute_force_csp(inst)


class TestTreewidth2Solver:
    def test_empty_instance(self):
        inst = CspInstance(3, frozenset(), {}, {}, constant=9)
        assert solve_treewidth2(inst) == Assignment({}, 9)

    def test_single_variable(self):
        inst = CspInstance(3, frozenset({0}), {0: (1, 5, 2)}, {})
        res = solve_treewidth2(inst)
        assert res.values == {0: 1} and res.objective == 5

    def test_maxcut_c5(self):
        res = solve_treewidth2(encode_maxcut(cycle_graph(5)))
        assert res.objective == 4

    def test_rejects_k4_minor(self):
        with pytest.raises(DomainError):
            solve_treewidth2(encode_maxcut(complete_graph(4)))

    @given(instances(max_n=6))
    @settings(max_examples=80)
    def test_optimal_on_sparse_instances(self, inst):
        from k4free.reduction import is_k4_minor_free

        if not is_k4_minor_free(inst.constraint_graph()):
            return
        res = solve_treewidth2(inst)
        assert res.objective == brute_force_csp(inst)
        assert inst.evaluate(res.values) == res.objective


class TestSolve:
    @pytest.mark.parametrize(
        "g,expect",
        [
            (cycle_graph(5), 4),
            (complete_graph(5), 6),
            (complete_graph(6), 9),
            (path_graph(4), 3),
        ],
    )
    def test_maxcut_values(self, g, expect):
        assert solve(encode_maxcut(g)).objective == expect

    def test_branch_count_is_r_to_x(self):
        stats = SolveStats()
        solve(encode_maxcut(complete_graph(5)), stats=stats)
        assert len(stats.transversal) == 2
        assert stats.branch_count == 2 ** 2

    def test_greedy_transversal_same_objective(self):
        rng = random.Random(5)
        for _ in range(30):
            inst = _random_instance(rng, max_n=6)
            assert solve(inst, "exact").objective == solve(inst, "greedy").objective

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            solve(encode_maxcut(cycle_graph(5)), "magic")

    @given(instances(max_n=5))
    @settings(max_examples=60)
    def test_matches_brute_force(self, inst):
        res = solve(inst)
        assert res.objective == brute_force_csp(inst)
        assert inst.evaluate(res.values) == res.objective

    def test_lex_smallest_tie_break(self):
        # all-zero tables: every assignment is optimal
        inst = CspInstance(3, frozenset(range(4)), {}, {})
        assert solve(inst).vector() == (0, 0, 0, 0)


class TestFileFormat:
    def test_round_trip(self):
        inst = CspInstance(
            2,
            frozenset({0, 1, 2}),
            {0: (1, -2), 1: (0, Fraction(1, 2))},
            {(0, 1): ((0, 1), (1, 0)), (1, 2): ((2, 0), (0, 2))},
            constant=Fraction(-3, 4),
        )
        again = parse_csp(format_csp(inst))
        assert again == inst

    def test_parse_example(self):
        text = "# demo\nr 2\nvariables 2\nunary 0 1 -2\nbinary 0 1 0 1 1 0\nconstant 1/2\n"
        inst = parse_csp(text)
        assert inst.r == 2
        assert inst.unary[0] == (1, -2)
        assert inst.binary[(0, 1)] == ((0, 1), (1, 0))
        assert inst.constant == Fraction(1, 2)

    def test_reversed_binary_key(self):
        text = "r 2\nvariables 2\nbinary 1 0 1 2 3 4\n"
        inst = parse_csp(text)
        assert inst.binary_between(1, 0) == ((1, 2), (3, 4))

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "variables 2\n",
            "r 2\n",
            "unary 0 1 2\nr 2\nvariables 1\n",
            "r 2\nvariables 1\nunary 0 1\n",
            "r 2\nvariables 2\nbinary 0 1 1 2 3\n",
            "r 2\nvariables 2\nnonsense\n",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(DomainError):
            parse_csp(text)

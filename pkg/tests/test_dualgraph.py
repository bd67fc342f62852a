from fractions import Fraction

import pytest
from conftest import random_contractible_graphs

from orbiklt import (DualGraph, GraphClass, NotNegativeDefiniteError,
                     UnsupportedError, WrongClassError, adjunction_degrees,
                     chain_data, classify_graph, cyclic_invariants, hj_expand,
                     intersection_matrix, is_negative_definite, linalg,
                     local_group_order, solve_discrepancies)


def chain(weights, branch_ends):
    """Path graph with given weights; branch_ends maps vertex -> mult."""
    n = len(weights)
    edges = [(i, i + 1) for i in range(n - 1)]
    return DualGraph.make(weights, edges, sorted(branch_ends.items()))


FIG2 = DualGraph.make([4, 1, 2], [(0, 1), (1, 2)], [(0, 2), (1, 4)])


class TestIntersectionMatrix:
    def test_single_vertex(self):
        assert intersection_matrix(DualGraph.make([2])) == [[-2]]

    def test_a2(self):
        g = DualGraph.make([2, 2], [(0, 1)])
        assert intersection_matrix(g) == [[-2, 1], [1, -2]]

    def test_chain(self):
        g = DualGraph.make([3, 2, 2], [(0, 1), (1, 2)])
        assert intersection_matrix(g) == [[-3, 1, 0], [1, -2, 1], [0, 1, -2]]

    def test_parallel_edges_counted(self):
        g = DualGraph.make([1, 1], [(0, 1), (0, 1)])
        assert intersection_matrix(g) == [[-1, 2], [2, -1]]


class TestNegativeDefinite:
    def test_single_minus_two(self):
        assert is_negative_definite(DualGraph.make([2]))

    def test_chain_with_minus_one(self):
        g = DualGraph.make([4, 1, 2], [(0, 1), (1, 2)])
        assert is_negative_definite(g)

    def test_two_parallel_edges_fails(self):
        assert not is_negative_definite(DualGraph.make([1, 1], [(0, 1), (0, 1)]))

    def test_affine_star_fails(self):
        # four -2 tips around a -2 center: affine shape, determinant 0
        g = DualGraph.make([2] * 5, [(0, i) for i in range(1, 5)])
        assert not is_negative_definite(g)


class TestAdjunctionDegrees:
    def test_du_val(self):
        assert adjunction_degrees(DualGraph.make([2])) == [0]

    def test_minus_three(self):
        assert adjunction_degrees(DualGraph.make([3])) == [1]

    def test_branch_ends(self):
        g = DualGraph.make([2, 2], [(0, 1)], [(0, 2), (1, 2)])
        assert adjunction_degrees(g) == [Fraction(1, 2), Fraction(1, 2)]


class TestSolveDiscrepancies:
    def test_du_val_a1(self):
        res = solve_discrepancies(DualGraph.make([2]))
        assert res.a == (Fraction(0),) and res.is_klt

    def test_chain_3_2_2(self):
        g = DualGraph.make([3, 2, 2], [(0, 1), (1, 2)], [(0, 2), (2, 4)])
        res = solve_discrepancies(g)
        assert res.a == (Fraction(-3, 4),) * 3
        assert res.is_klt

    def test_blown_up_tangent_pair_not_klt(self):
        res = solve_discrepancies(FIG2)
        assert res.a == (Fraction(-1), Fraction(-3, 2), Fraction(-3, 4))
        assert not res.is_klt           # a_0 = -1 exactly fails strictness

    def test_not_negative_definite_raises(self):
        g = DualGraph.make([1, 1], [(0, 1), (0, 1)])
        with pytest.raises(NotNegativeDefiniteError):
            solve_discrepancies(g)

    def test_exact_residual_on_random_graphs(self):
        for g in random_contractible_graphs(150, seed=5,
                                            require_d_nonnegative=False):
            res = solve_discrepancies(g)
            m = intersection_matrix(g)
            assert linalg.mat_vec(m, list(res.a)) == list(res.d)


class TestClassify:
    def test_chain_two_black_ends(self):
        g = DualGraph.make([2, 2], [(0, 1)], [(0, 2), (1, 2)])
        assert classify_graph(g) is GraphClass.CHAIN_TWO_BLACK_ENDS

    def test_du_val_a1(self):
        assert classify_graph(DualGraph.make([2])) is GraphClass.DU_VAL_DYNKIN

    def test_blown_up_shape_unrecognized(self):
        assert classify_graph(FIG2) is GraphClass.UNRECOGNIZED

    def test_constraint_violation_unrecognized(self):
        # (e_l - 1) m_l != (e_r - 1) m_r
        g = DualGraph.make([2, 2], [(0, 1)], [(0, 2), (1, 3)])
        assert classify_graph(g) is GraphClass.UNRECOGNIZED
        assert solve_discrepancies(g).is_klt    # klt all the same

    def test_interior_weight_unrecognized(self):
        g = DualGraph.make([2, 3, 2], [(0, 1), (1, 2)], [(0, 2), (2, 2)])
        assert classify_graph(g) is GraphClass.UNRECOGNIZED

    def test_single_vertex_two_branches_unrecognized(self):
        g = DualGraph.make([3], [], [(0, 2), (0, 2)])
        assert classify_graph(g) is GraphClass.UNRECOGNIZED

    def test_chain_one_black_end(self):
        g = DualGraph.make([2, 2, 2], [(0, 1), (1, 2)], [(0, 5)])
        assert classify_graph(g) is GraphClass.CHAIN_ONE_BLACK_END

    def test_chain_one_black_end_needs_minus_two(self):
        g = DualGraph.make([3, 2], [(0, 1)], [(0, 5)])
        assert classify_graph(g) is GraphClass.UNRECOGNIZED

    def test_mid_chain_branch_unrecognized(self):
        g = DualGraph.make([2, 2, 2], [(0, 1), (1, 2)], [(1, 5)])
        assert classify_graph(g) is GraphClass.UNRECOGNIZED

    def test_fork(self):
        g = DualGraph.make([2, 2, 2, 2], [(0, 1), (1, 2), (1, 3)], [(0, 3)])
        assert classify_graph(g) is GraphClass.FORK_HALF_WEIGHTS

    def test_fork_long_tail(self):
        g = DualGraph.make([2] * 6,
                           [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)], [(0, 2)])
        assert classify_graph(g) is GraphClass.FORK_HALF_WEIGHTS

    def test_fork_branch_on_short_tip_unrecognized(self):
        g = DualGraph.make([2] * 6,
                           [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)], [(4, 2)])
        assert classify_graph(g) is GraphClass.UNRECOGNIZED

    def test_dynkin_d_and_e(self):
        d5 = DualGraph.make([2] * 5, [(0, 1), (1, 2), (2, 3), (2, 4)])
        assert classify_graph(d5) is GraphClass.DU_VAL_DYNKIN
        e8 = DualGraph.make([2] * 8,
                            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)])
        assert classify_graph(e8) is GraphClass.DU_VAL_DYNKIN

    def test_affine_e8_shape_unrecognized(self):
        g = DualGraph.make([2] * 9,
                           [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
                            (6, 7), (2, 8)])
        assert classify_graph(g) is GraphClass.UNRECOGNIZED

    def test_non_dynkin_weights_unrecognized(self):
        assert classify_graph(DualGraph.make([3])) is GraphClass.UNRECOGNIZED

    def test_parallel_edges_unrecognized(self):
        g = DualGraph.make([2, 2], [(0, 1), (0, 1)])
        assert classify_graph(g) is GraphClass.UNRECOGNIZED

    def test_classification_independent_of_vertex_order(self):
        a = DualGraph.make([3, 2, 2], [(0, 1), (1, 2)], [(0, 2), (2, 4)])
        b = DualGraph.make([2, 2, 3], [(2, 1), (1, 0)], [(2, 2), (0, 4)])
        assert classify_graph(a) is classify_graph(b)
        assert cyclic_invariants(a) == cyclic_invariants(b)


class TestCyclicInvariants:
    def test_a1_with_ends(self):
        g = DualGraph.make([2, 2], [(0, 1)], [(0, 2), (1, 2)])
        assert cyclic_invariants(g) == (3, 2)

    def test_chain_3_2_2(self):
        g = DualGraph.make([3, 2, 2], [(0, 1), (1, 2)], [(0, 2), (2, 4)])
        assert cyclic_invariants(g) == (7, 5)

    def test_all_twos_chains(self):
        for n in range(2, 8):
            g = chain([2] * n, {0: 3, n - 1: 3})
            assert cyclic_invariants(g) == (n + 1, n)

    def test_wrong_class_raises(self):
        with pytest.raises(WrongClassError):
            cyclic_invariants(DualGraph.make([2]))


class TestLocalGroupOrder:
    def test_chain_order(self):
        g = DualGraph.make([2, 2], [(0, 1)], [(0, 2), (1, 2)])
        assert local_group_order(g) == 12

    def test_du_val_unsupported(self):
        with pytest.raises(UnsupportedError):
            local_group_order(DualGraph.make([2]))

    def test_fork_unsupported(self):
        g = DualGraph.make([2, 2, 2, 2], [(0, 1), (1, 2), (1, 3)], [(0, 3)])
        with pytest.raises(UnsupportedError):
            local_group_order(g)


class TestInvariants:
    def test_negativity(self):
        # d >= 0 on a contractible configuration forces a <= 0
        for g in random_contractible_graphs(800, seed=13):
            res = solve_discrepancies(g)
            assert all(x <= 0 for x in res.a)

    def test_constant_solution_on_two_end_chains(self):
        for n in range(2, 7):
            for e_l in range(2, 7):
                for e_r in range(2, 7):
                    g = chain([e_l] + [2] * (n - 2) + [e_r],
                              {0: 2 * (e_r - 1), n - 1: 2 * (e_l - 1)})
                    assert classify_graph(g) is GraphClass.CHAIN_TWO_BLACK_ENDS
                    data = chain_data(g)
                    res = solve_discrepancies(g)
                    d_left = (data.weights[0] - 2) + 1 - Fraction(1, data.m_left)
                    beta = d_left / (data.weights[0] - 1)
                    assert res.a == (-beta,) * n
                    assert res.is_klt

    def test_hj_consistency(self):
        # the cyclic type expands to the chain read from the right end
        for n in range(2, 7):
            for e_l in range(2, 7):
                for e_r in range(2, 7):
                    g = chain([e_l] + [2] * (n - 2) + [e_r],
                              {0: 2 * (e_r - 1), n - 1: 2 * (e_l - 1)})
                    data = chain_data(g)
                    n_inv, q_inv = cyclic_invariants(g)
                    assert hj_expand(n_inv, q_inv) == list(reversed(data.weights))

    def test_klt_monotonicity(self):
        # raising a branch weight raises d, which can only lower a
        count = 0
        for g in random_contractible_graphs(400, seed=99,
                                            require_d_nonnegative=False):
            if not g.branches or solve_discrepancies(g).is_klt:
                continue
            count += 1
            for k, b in enumerate(g.branches):
                bumped = list(g.branches)
                bumped[k] = type(b)(b.vertex, b.mult + 1, b.inter)
                g2 = DualGraph(g.vertices, g.edges, tuple(bumped))
                assert not solve_discrepancies(g2).is_klt
        assert count > 20


class TestValidation:
    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            DualGraph.make([2, 2])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            DualGraph.make([2], [(0, 0)])

    def test_small_mult_rejected(self):
        with pytest.raises(ValueError):
            DualGraph.make([2], [], [(0, 1)])

    def test_bad_weight_rejected(self):
        with pytest.raises(ValueError):
            DualGraph.make([0])

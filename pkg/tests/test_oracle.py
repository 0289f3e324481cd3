from math import comb, factorial

import pytest

from cprk import (
    GraphSpec,
    InvalidInputError,
    OracleConfig,
    ResourceLimitError,
    brute_force_cpr,
    brute_force_outerplanar,
    complete_bipartite_graph,
)
from cprk.model import complete_graph, cycle_graph
from cprk.oracle import brute_force_chromatic_cpr, cyclic_orders

# Frozen from brute_force_cpr: cpr_K(K_{m,n}) for K = 2 .. m+n.
ORACLE_TABLE = {
    (1, 1): [0],
    (1, 3): [0, 0, 0],
    (2, 2): [1, 1, 0],
    (2, 3): [3, 3, 1, 1],
    (2, 4): [6, 6, 2, 2, 2],
    (3, 3): [9, 9, 5, 5, 3],
    (3, 4): [18, 18, 10, 10, 8, 8],
    (4, 4): [36, 36, 20, 20, 19, 19, 16],
}


def test_cyclic_order_count():
    for p in range(3, 8):
        orders = list(cyclic_orders(p))
        assert len(orders) == factorial(p - 1) // 2
        assert len(set(orders)) == len(orders)
    assert len(list(cyclic_orders(4, dedup_symmetry=False))) == 24


class TestOuterplanar:
    def test_cycle(self):
        assert brute_force_outerplanar(cycle_graph(4)).value == 0

    def test_k4(self):
        assert brute_force_outerplanar(complete_graph(4)).value == 1

    def test_k33(self):
        r = brute_force_outerplanar(complete_bipartite_graph(3, 3))
        assert r.value == 3
        assert sorted(r.order) == list(range(6))

    def test_budget(self):
        with pytest.raises(ResourceLimitError):
            brute_force_outerplanar(complete_graph(6), OracleConfig(max_vertices=5))

    def test_dedup_does_not_change_minimum(self):
        g = complete_bipartite_graph(2, 3)
        assert (brute_force_outerplanar(g).value
                == brute_force_outerplanar(g, OracleConfig(dedup_symmetry=False)).value)

    def test_config_validation(self):
        with pytest.raises(InvalidInputError):
            OracleConfig(max_vertices=0)


class TestCpr:
    def test_k22_four_arcs(self):
        assert brute_force_cpr(complete_bipartite_graph(2, 2), 4).value == 0

    def test_k33_two_arcs(self):
        assert brute_force_cpr(complete_bipartite_graph(3, 3), 2).value == 9

    def test_k33_five_arcs(self):
        assert brute_force_cpr(complete_bipartite_graph(3, 3), 5).value == 5

    @pytest.mark.parametrize("mn", sorted(ORACLE_TABLE))
    def test_frozen_table(self, mn):
        g = complete_bipartite_graph(*mn)
        got = [brute_force_cpr(g, K).value for K in range(2, sum(mn) + 1)]
        assert got == ORACLE_TABLE[mn]

    def test_needs_partition(self):
        with pytest.raises(InvalidInputError):
            brute_force_cpr(complete_graph(4), 2)

    def test_k_range(self):
        with pytest.raises(InvalidInputError):
            brute_force_cpr(complete_bipartite_graph(2, 2), 5)
        with pytest.raises(InvalidInputError):
            brute_force_cpr(complete_bipartite_graph(2, 2), 0)

    @pytest.mark.parametrize("m", range(1, 4))
    @pytest.mark.parametrize("n", range(1, 4))
    def test_pattern_path_matches_full_enumeration(self, m, n):
        g = complete_bipartite_graph(m, n)
        full = OracleConfig(exhaustive=True)
        for K in range(2, m + n + 1):
            assert brute_force_cpr(g, K).value == brute_force_cpr(g, K, full).value

    @pytest.mark.parametrize("m", range(1, 5))
    @pytest.mark.parametrize("n", range(1, 5))
    def test_identities(self, m, n):
        g = complete_bipartite_graph(m, n)
        values = [brute_force_cpr(g, K).value for K in range(2, m + n + 1)]
        assert values[0] == comb(m, 2) * comb(n, 2)
        assert values[-1] == brute_force_outerplanar(g).value
        assert all(a >= b for a, b in zip(values, values[1:]))
        stable = values[2 * min(m, n) - 2:]
        assert len(set(stable)) == 1

    def test_labelled_general_graph(self):
        # path 0-1-2-3 drawn as 0 2 | 3 1 has nested chords only
        g = GraphSpec(4, ((0, 1), (1, 2), (2, 3)), ("a", "b", "a", "b"))
        assert brute_force_cpr(g, 2).value == 0
        assert brute_force_cpr(g, 4).value == 0

    def test_labelled_c6_two_arcs(self):
        # C6 with alternating labels; 2 arcs put all 'a' then all 'b'
        g = GraphSpec(6, cycle_graph(6).edges, ("a", "b") * 3)
        assert brute_force_cpr(g, 6).value == 0
        assert brute_force_cpr(g, 2).value == brute_force_cpr(g, 2, OracleConfig(dedup_symmetry=False)).value


class TestChromatic:
    def test_k4_needs_four_arcs(self):
        assert brute_force_chromatic_cpr(complete_graph(4), 4).value == 1
        with pytest.raises(InvalidInputError):
            brute_force_chromatic_cpr(complete_graph(4), 3)

    def test_bipartite_agrees_with_labelled(self):
        g = complete_bipartite_graph(2, 3)
        for K in range(2, 6):
            assert brute_force_chromatic_cpr(g, K).value == brute_force_cpr(g, K).value

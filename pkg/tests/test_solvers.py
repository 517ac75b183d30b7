import random

import pytest

from didom import bitset, validate
from didom.core import build_digraph, build_undirected, underlying_graph
from didom.families import (
    all_digraphs,
    gen_C4_orientation,
    gen_G_m,
    gen_bidirected_path,
    gen_oriented_cycle,
    random_digraph,
    random_ditree,
)
from didom.solvers import (
    all_maximum_packings,
    brute_force_invariant,
    compute_invariants,
    domination_number,
    max_independent_set,
    min_set_cover,
    open_packing_number,
    packing_number,
    partition_two_dominating_sets,
    total_domination_number,
    two_packing_number,
    undirected_domination_number,
    undirected_open_packing_number,
)


class TestMinSetCover:
    def test_basic(self):
        assert min_set_cover(3, [0b011, 0b110, 0b100])[0] == 2

    def test_single_set(self):
        assert min_set_cover(3, [0b111]) == (1, (0,))

    def test_infeasible_returns_none(self):
        assert min_set_cover(3, [0b011]) is None

    def test_fig1_closed_neighborhoods(self, chorded_5cycle):
        sets = [chorded_5cycle.out_closed(v) for v in range(5)]
        assert min_set_cover(5, sets)[0] == 3


class TestMaxIndependentSet:
    def test_edgeless(self):
        size, witness = max_independent_set(build_undirected(4, []))
        assert size == 4 and witness == 0b1111

    def test_complete(self):
        k4 = build_undirected(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        assert max_independent_set(k4)[0] == 1

    def test_aux_graph_of_G3(self):
        from didom.auxgraph import closed_in_neighborhood_graph

        aux = closed_in_neighborhood_graph(gen_G_m(3))
        assert max_independent_set(aux)[0] == 3  # equals the packing number


class TestDominationValues:
    def test_fig1_values(self, directed_triangle, chorded_5cycle):
        assert domination_number(directed_triangle)[0] == 2
        assert domination_number(chorded_5cycle)[0] == 3

    def test_Gm_values(self):
        for m in range(1, 5):
            gm = gen_G_m(m)
            assert domination_number(gm)[0] == m + 1
            assert packing_number(gm)[0] == m

    def test_arcless(self):
        arcless = build_digraph(4, [])
        assert domination_number(arcless)[0] == 4
        assert packing_number(arcless)[0] == 4
        assert open_packing_number(arcless)[0] == 4
        assert total_domination_number(arcless) is None

    def test_oriented_cycles(self):
        for n in (3, 4, 5, 6, 7):
            cyc = gen_oriented_cycle(n)
            assert domination_number(cyc)[0] == -(-n // 2)
            assert total_domination_number(cyc)[0] == n
            assert open_packing_number(cyc)[0] == n

    def test_c4_orientations(self):
        for variant in ((0, 2, 1, 1), (0, 1, 2, 1), (0, 2, 0, 2), (1, 1, 1, 1)):
            d = gen_C4_orientation(variant)
            assert packing_number(d)[0] == 2
            assert domination_number(d)[0] == 2

    def test_gamma_t_absent_iff_source_vertex(self):
        assert total_domination_number(build_digraph(2, [(0, 1)])) is None
        assert total_domination_number(build_digraph(2, [(0, 1), (1, 0)]))[0] == 2

    def test_fig5_corona_open_invariants_cross_checked(self):
        from didom.families import fig5_corona

        d = fig5_corona()
        assert d.min_in_degree >= 1
        assert open_packing_number(d)[0] == brute_force_invariant(d, "rho_open")
        assert total_domination_number(d)[0] == brute_force_invariant(d, "gamma_t")


class TestUndirectedSolvers:
    def test_p4(self):
        p4 = build_undirected(4, [(0, 1), (1, 2), (2, 3)])
        assert undirected_domination_number(p4)[0] == 2
        assert two_packing_number(p4)[0] == 2

    def test_star(self):
        star = build_undirected(5, [(0, i) for i in range(1, 5)])
        assert undirected_domination_number(star)[0] == 1
        assert two_packing_number(star)[0] == 1

    def test_meir_moon_on_random_trees(self):
        for seed in range(30):
            tree = underlying_graph(random_ditree(12, seed))
            assert two_packing_number(tree)[0] == undirected_domination_number(tree)[0]

    def test_open_packing_p2(self):
        p2 = build_undirected(2, [(0, 1)])
        assert undirected_open_packing_number(p2)[0] == 2


class TestBruteForceOracle:
    def test_rejects_large(self):
        with pytest.raises(ValueError):
            brute_force_invariant(build_digraph(30, []), "gamma")

    def test_rejects_unknown(self):
        with pytest.raises(ValueError):
            brute_force_invariant(build_digraph(2, []), "chromatic")

    def test_triangle(self, directed_triangle):
        assert brute_force_invariant(directed_triangle, "gamma") == 2
        assert brute_force_invariant(directed_triangle, "rho") == 1

    def test_arcless(self):
        d = build_digraph(3, [])
        assert brute_force_invariant(d, "rho") == 3
        assert brute_force_invariant(d, "gamma_t") is None

    def test_oracle_equivalence_exhaustive_up_to_n3(self):
        for n in (1, 2, 3):
            for d in all_digraphs(n):
                assert domination_number(d)[0] == brute_force_invariant(d, "gamma")
                assert packing_number(d)[0] == brute_force_invariant(d, "rho")
                assert open_packing_number(d)[0] == brute_force_invariant(d, "rho_open")
                gt = total_domination_number(d)
                assert (gt[0] if gt else None) == brute_force_invariant(d, "gamma_t")

    def test_oracle_equivalence_random_n5_to_n7(self):
        rng = random.Random(21)
        for _ in range(1000):
            n = rng.randint(5, 7)
            d = random_digraph(n, rng.uniform(0.08, 0.9), rng.getrandbits(32))
            assert domination_number(d)[0] == brute_force_invariant(d, "gamma")
            assert packing_number(d)[0] == brute_force_invariant(d, "rho")
            assert open_packing_number(d)[0] == brute_force_invariant(d, "rho_open")
            gt = total_domination_number(d)
            assert (gt[0] if gt else None) == brute_force_invariant(d, "gamma_t")


class TestWitnessValidation:
    def test_witnesses_satisfy_definitions(self):
        rng = random.Random(31)
        for _ in range(120):
            n = rng.randint(1, 9)
            d = random_digraph(n, rng.uniform(0.1, 0.8), rng.getrandbits(32))
            gamma, dom = domination_number(d)
            assert validate.is_dominating_set(d, dom)
            assert dom.bit_count() == gamma
            rho, pack = packing_number(d)
            assert validate.is_packing(d, pack)
            assert pack.bit_count() == rho
            rho_o, opack = open_packing_number(d)
            assert validate.is_open_packing(d, opack)
            total = total_domination_number(d)
            if total is not None:
                assert validate.is_total_dominating_set(d, total[1])

    def test_monotone_adding_arcs_never_raises_gamma(self):
        rng = random.Random(32)
        for _ in range(60):
            n = rng.randint(2, 8)
            d = random_digraph(n, 0.3, rng.getrandbits(32))
            before = domination_number(d)[0]
            free = [
                (u, v)
                for u in range(n)
                for v in range(n)
                if u != v and not d.has_arc(u, v)
            ]
            if not free:
                continue
            extra = free[rng.randrange(len(free))]
            augmented = build_digraph(n, d.arcs() + [extra])
            assert domination_number(augmented)[0] <= before


class TestObservationOne:
    """The five definitional inequalities relating the invariants."""

    def test_on_random_digraphs(self):
        rng = random.Random(41)
        for _ in range(250):
            n = rng.randint(1, 9)
            d = random_digraph(n, rng.uniform(0.05, 0.9), rng.getrandbits(32))
            un = underlying_graph(d)
            rho = packing_number(d)[0]
            gamma = domination_number(d)[0]
            assert two_packing_number(un)[0] <= rho
            assert undirected_open_packing_number(un)[0] <= open_packing_number(d)[0]
            assert rho <= gamma
            total = total_domination_number(d)
            if total is not None:
                assert open_packing_number(d)[0] <= total[0]
            assert gamma >= undirected_domination_number(un)[0]
            assert gamma >= -(-d.n // (d.max_out_degree + 1))


class TestPartition:
    def test_fig5_partition_minimum(self):
        d = build_digraph(6, [(0, 1), (1, 2), (0, 3), (3, 0), (1, 4), (2, 5)])
        side_a, side_b = partition_two_dominating_sets(d, require_minimum=True)
        assert bitset.to_list(side_a) == [0, 2, 4]
        assert bitset.to_list(side_b) == [1, 3, 5]

    def test_isolated_vertex_impossible(self):
        d = build_digraph(3, [(0, 1), (1, 0)])
        assert partition_two_dominating_sets(d) is None

    def test_corona_layers_partition(self):
        # bidirected corona over a 2-path: bases and leaves split
        d = build_digraph(
            4, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 3), (3, 1)]
        )
        result = partition_two_dominating_sets(d, require_minimum=True)
        assert result is not None
        side_a, side_b = result
        assert validate.is_dominating_set(d, side_a)
        assert validate.is_dominating_set(d, side_b)
        assert side_a | side_b == bitset.full(4)
        assert side_a & side_b == 0

    def test_require_minimum_needs_double_gamma(self):
        # oriented triangle: gamma 2, n 3 != 4
        d = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
        assert partition_two_dominating_sets(d, require_minimum=True) is None

    def test_partition_on_bidirected_cycle(self):
        d = build_digraph(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)])
        result = partition_two_dominating_sets(d, require_minimum=True)
        assert result is not None


class TestAllMaximumPackings:
    def test_path_ditree(self):
        d = gen_bidirected_path(4)
        packs = all_maximum_packings(d)
        rho = packing_number(d)[0]
        assert all(p.bit_count() == rho for p in packs)
        assert len(set(packs)) == len(packs)
        # brute-force the same enumeration
        brute = [
            mask
            for mask in range(1 << 4)
            if mask.bit_count() == rho and validate.is_packing(d, mask)
        ]
        assert sorted(packs) == sorted(brute)

    def test_cap_enforced(self):
        from didom.errors import CliqueLimitExceeded

        arcless = build_digraph(6, [])
        with pytest.raises(CliqueLimitExceeded):
            all_maximum_packings(arcless, cap=0)


class TestInvariantReport:
    def test_report_shape(self, directed_triangle):
        rep = compute_invariants(directed_triangle, digraph_id="triangle")
        data = rep.as_dict()
        assert data["digraph"] == "triangle"
        assert data["gamma"]["value"] == 2
        assert data["gamma_t"]["value"] == 3
        assert data["rho"]["value"] == 1
        assert data["rho_open"]["value"] == 3
        assert "elapsed_ms" in data["gamma"]

    def test_gamma_t_undefined(self):
        rep = compute_invariants(build_digraph(2, [(0, 1)]))
        assert rep.gamma_t.status == "undefined"
        assert rep.gamma_t.value is None

    def test_json_stable_without_timings(self, directed_triangle):
        a = compute_invariants(directed_triangle, digraph_id="t").to_json(False)
        b = compute_invariants(directed_triangle, digraph_id="t").to_json(False)
        assert a == b

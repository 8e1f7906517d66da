"""Exact genus bookkeeping of the limit stable-curve models."""

import pytest

from spintheta import (
    Component,
    GenusTooSmall,
    IndexOutOfRange,
    StableCurveModel,
    arithmetic_genus,
    genus_table,
    limit_model_A0,
    limit_model_Ai,
    limit_model_B0,
    limit_model_Bi,
    limit_model_T_thetanull,
    limit_model_thetanull,
    sym_square_cohomology,
)


def target(g):
    return 1 + 3 * g * (g - 1)


class TestArithmeticGenus:
    def test_single_smooth_component(self):
        model = StableCurveModel((Component("c", 7),), nodes=())
        assert arithmetic_genus(model) == 7

    def test_two_rational_curves_one_node(self):
        model = StableCurveModel((Component("a", 0), Component("b", 0)), nodes=((0, 1),))
        assert arithmetic_genus(model) == 0

    def test_irreducible_with_self_nodes(self):
        model = StableCurveModel((Component("c", 4),), nodes=((0, 0),) * 3)
        assert arithmetic_genus(model) == 7


class TestThetaNullModels:
    @pytest.mark.parametrize(
        "g,genera,nodes,p_a",
        [(3, (3, 9), 8, 19), (4, (13, 13), 12, 37), (10, (199, 37), 36, 271)],
    )
    def test_examples(self, g, genera, nodes, p_a):
        model = limit_model_thetanull(g)
        assert tuple(c.genus for c in model.components) == genera
        assert model.num_nodes == nodes
        assert arithmetic_genus(model) == p_a == target(g)

    @pytest.mark.parametrize("g,genera,p_a", [(3, (0, 3), 10), (4, (4, 4), 19), (5, (11, 5), 31)])
    def test_quotient_side_examples(self, g, genera, p_a):
        model = limit_model_T_thetanull(g)
        assert tuple(c.genus for c in model.components) == genera
        assert model.num_nodes == 4 * g - 4
        assert arithmetic_genus(model) == p_a == 1 + 3 * g * (g - 1) // 2


class TestBoundaryModels:
    @pytest.mark.parametrize("g,genus,selfnodes,p_a", [(3, 14, 5, 19), (4, 30, 7, 37), (6, 80, 11, 91)])
    def test_a0(self, g, genus, selfnodes, p_a):
        model = limit_model_A0(g)
        assert model.num_components == 1
        assert model.components[0].genus == genus
        assert model.num_nodes == selfnodes
        assert arithmetic_genus(model) == p_a == target(g)

    @pytest.mark.parametrize("g,genera,p_a", [(3, (7, 2, 2), 19), (4, (19, 3, 3), 37), (5, (37, 4, 4), 61)])
    def test_b0(self, g, genera, p_a):
        model = limit_model_B0(g)
        assert tuple(c.genus for c in model.components) == genera
        assert model.num_nodes == 4 * g - 2
        # 2g-2 nodes on each graph component against the core, 2 between them
        pairs = list(model.nodes)
        assert pairs.count((0, 1)) == 2 * g - 2
        assert pairs.count((0, 2)) == 2 * g - 2
        assert pairs.count((1, 2)) == 2
        assert arithmetic_genus(model) == p_a == target(g)

    @pytest.mark.parametrize(
        "g,i,sigma,delta,nu,p_a",
        [(4, 2, 30, 16, 10, 37), (3, 1, 16, 10, 8, 19), (5, 2, 50, 22, 12, 61)],
    )
    def test_ai(self, g, i, sigma, delta, nu, p_a):
        model = limit_model_Ai(g, i)
        assert model.genus_sum() == sigma == 3 * g * g - 2 * g * i + 2 * i * i - 3 * g + 2
        assert model.num_nodes == delta == 2 * (i * g - i * i + g)
        assert model.num_components == nu == 2 + 2 * g
        assert arithmetic_genus(model) == p_a == target(g)

    @pytest.mark.parametrize("g,i,p_a", [(4, 2, 37), (5, 2, 61), (6, 3, 91)])
    def test_bi(self, g, i, p_a):
        model = limit_model_Bi(g, i)
        j = g - i
        assert model.components[0].genus == 3 * i * i + i - 1
        assert model.components[1].genus == 3 * j * j + j - 1
        assert model.num_components == 2 * g - 2
        assert model.num_nodes == 2 * i * j
        assert not model.incidence_known
        assert arithmetic_genus(model) == p_a == target(g)

    def test_bi_g4_component_list(self):
        # two normalized invariant curves of genus 13 plus 2+2 fibre copies of genus 2
        model = limit_model_Bi(4, 2)
        assert sorted(c.genus for c in model.components) == [2, 2, 2, 2, 13, 13]


class TestGlobalIdentities:
    def test_all_models_hit_the_genus_formula(self):
        for g in range(3, 13):
            assert arithmetic_genus(limit_model_thetanull(g)) == target(g)
            assert arithmetic_genus(limit_model_A0(g)) == target(g)
            assert arithmetic_genus(limit_model_B0(g)) == target(g)
            assert arithmetic_genus(limit_model_T_thetanull(g)) == 1 + 3 * g * (g - 1) // 2
            for i in range(1, g):
                assert arithmetic_genus(limit_model_Ai(g, i)) == target(g)
            for i in range(2, g - 1):
                assert arithmetic_genus(limit_model_Bi(g, i)) == target(g)

    def test_double_cover_relations(self):
        for g in range(3, 31):
            table = genus_table(g)
            # unramified double cover: g(S) - 1 = 2 (g(T) - 1)
            assert table["correspondence"] - 1 == 2 * (table["quotient"] - 1)
            # covers branched at 4g-4 points
            assert table["trace_double_cover"] == 2 * table["trace_curve"] - 1 + (4 * g - 4) // 2
            assert table["branched_double_cover"] == 2 * g - 1 + (4 * g - 4) // 2
            # etale-away-from-one-node cover of the invariant curves
            assert table["invariant_curve"] == 2 * table["invariant_quotient"]

    def test_stability_of_rational_components(self):
        for g in range(3, 13):
            models = [
                limit_model_thetanull(g),
                limit_model_T_thetanull(g),
                limit_model_A0(g),
                limit_model_B0(g),
            ] + [limit_model_Ai(g, i) for i in range(1, g)]
            for model in models:
                for idx, comp in enumerate(model.components):
                    if comp.genus == 0:
                        assert model.node_branches(idx) >= 3


class TestGenusTable:
    def test_g3_row(self):
        table = genus_table(3)
        assert table.entries == {
            "correspondence": 19,
            "quotient": 10,
            "trace_curve": 0,
            "trace_double_cover": 3,
            "branched_double_cover": 9,
            "normalized_correspondence": 14,
            "invariant_curve": 30,
            "invariant_quotient": 15,
        }

    def test_g4_row(self):
        table = genus_table(4)
        assert table["correspondence"] == 37
        assert table["quotient"] == 19
        assert table["trace_curve"] == 4
        assert table["trace_double_cover"] == 13
        assert table["branched_double_cover"] == 13
        assert table["normalized_correspondence"] == 30
        assert table["invariant_curve"] == 52
        assert table["invariant_quotient"] == 26


class TestSymSquareCohomology:
    def test_zero(self):
        assert sym_square_cohomology(0, 0) == (0, 0, 0)

    def test_two_two_plain(self):
        assert sym_square_cohomology(2, 2, "plain") == (3, 4, 1)

    def test_line_minus_delta(self):
        assert sym_square_cohomology(1, 0, "minus_delta") == (0, 0, 0)

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            sym_square_cohomology(1, 1, "other")


class TestValidation:
    def test_genus_too_small(self):
        for builder in (limit_model_thetanull, limit_model_A0, limit_model_B0, genus_table):
            with pytest.raises(GenusTooSmall):
                builder(2)
        with pytest.raises(GenusTooSmall):
            limit_model_Bi(3, 2)

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            limit_model_Ai(4, 0)
        with pytest.raises(IndexOutOfRange):
            limit_model_Ai(4, 4)
        with pytest.raises(IndexOutOfRange):
            limit_model_Bi(5, 1)
        with pytest.raises(IndexOutOfRange):
            limit_model_Bi(5, 4)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            StableCurveModel((Component("a", 1), Component("b", 1)), nodes=())

    def test_node_index_bounds(self):
        with pytest.raises(IndexOutOfRange):
            StableCurveModel((Component("a", 1),), nodes=((0, 1),))

    def test_negative_genus(self):
        with pytest.raises(ValueError):
            Component("bad", -1)

    def test_json_roundtrip_incidence_known(self):
        model = limit_model_B0(4)
        again = StableCurveModel.from_json(model.to_json())
        assert again == model

    def test_json_roundtrip_count_only(self):
        model = limit_model_Bi(5, 2)
        again = StableCurveModel.from_json(model.to_json())
        assert again == model
        assert not again.incidence_known

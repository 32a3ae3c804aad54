"""Prism assembly over the splitting category, its quotient, the stage
families, and the cell-level module structure."""

import itertools
from types import SimpleNamespace

import pytest

from conftest import built, built_wb, built_wb_bar
from operadkit import classic_models as cm
from operadkit import complexes as cx
from operadkit import tree_core as tc
from operadkit import wb_construction as wb


# ---------------------------------------------------------------------------
# the splitting category

def test_category_on_three_points_is_a_square_diagram():
    cat = wb.xi_category(3)
    assert len(cat["objects"]) == 4
    assert sorted(cat["objects"]) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(cat["covers"]) == 4
    for src, dst in cat["covers"]:
        assert len(cat["objects"][dst]) == len(cat["objects"][src]) + 1


def test_category_on_one_point_is_a_single_object():
    cat = wb.xi_category(1)
    assert cat["objects"] == [(1,)]
    assert cat["covers"] == []


def test_category_object_counts_double_per_point():
    for n in range(1, 7):
        assert len(wb.xi_objects(n)) == 2 ** (n - 1)
    assert len(wb.xi_category(5)["objects"]) == 16


def test_category_needs_a_point():
    with pytest.raises(ValueError):
        wb.xi_category(0)


def test_category_trees_are_valid_chains():
    for n in range(1, 6):
        for tree in wb.xi_category(n)["trees"]:
            tc.validate(tree, "cube", n)


# ---------------------------------------------------------------------------
# prism assembly

def test_assembly_on_three_points_has_four_prisms():
    c = built_wb_bar(3)
    assert cx.f_vector(c) == (12, 23, 16, 4)
    assert len(c.cells_of_dim(3)) == 4
    assert cx.euler_characteristic(c) == 1


def test_assembly_on_one_point_is_an_interval():
    assert cx.f_vector(built_wb_bar(1)) == (2, 1)


def test_assembly_on_four_points_is_a_disc():
    c = built_wb_bar(4)
    assert cx.euler_characteristic(c) == 1
    assert cx.homology_mod2(c) == (1, 0, 0, 0, 0)


def test_top_prism_count_doubles_per_point():
    for n in range(1, 7):
        c = built_wb_bar(n)
        assert len(c.cells_of_dim(n)) == 2 ** (n - 1)
        assert c.top_dim() == n


def test_shared_facets_carry_equal_labels_from_both_sides():
    for n in range(2, 5):
        assert wb.check_prism_gluing(n) > 0


# ---------------------------------------------------------------------------
# the quotient

def test_quotient_on_two_points_collapses_to_a_smaller_disc():
    bar, quo = built_wb_bar(2), built_wb(2)
    assert len(quo) < len(bar)
    assert len(quo.cells_of_dim(2)) == len(bar.cells_of_dim(2)) == 2
    assert cx.f_vector(quo) == (3, 4, 2)
    assert cx.homology_mod2(quo) == (1, 0, 0)


def test_quotient_on_zero_points_is_a_point():
    quo = built_wb(0)
    assert cx.f_vector(quo) == (1,)
    assert quo.cells[0].label == wb.UNIT_CELL


def test_quotient_refines_the_simplex():
    for n in range(1, 4):
        witness = cx.check_refinement(built_wb(n), built("triangle", n),
                                      wb.wb_carrier)
        assert witness.ok


def test_quotient_keeps_all_prism_interiors_distinct():
    for n in range(1, 5):
        bar, quo = built_wb_bar(n), built_wb(n)
        assert len(quo.cells_of_dim(n)) == len(bar.cells_of_dim(n))


def test_carrier_rejects_the_unit_cell():
    with pytest.raises(ValueError):
        wb.wb_carrier(wb.UNIT_CELL)


# ---------------------------------------------------------------------------
# stage families

def test_total_stage_is_strictly_finer_than_the_per_bead_stage():
    families = wb.wb_stage_families(2, 3)
    assert families["sum"] < families["round"]


def test_stage_families_coincide_at_stage_one_in_low_degrees():
    for n in (0, 1):
        families = wb.wb_stage_families(1, n)
        half_above = {c.label for c in wb.wb_half_stage(2, n).cells}
        assert families["round"] == families["sum"] == half_above


def test_half_stage_at_the_critical_degree_is_a_punctured_disc():
    deltas = {}
    for n in (2, 3, 4):
        full = built_wb(n)
        assert {c.label for c in wb.wb_of_stage(n, n, rule="sum").cells} == \
            {c.label for c in full.cells}
        half = wb.wb_half_stage(n, n)
        missing = ({c.label for c in full.cells}
                   - {c.label for c in half.cells})
        assert len(missing) == 1
        (corolla,) = missing
        assert wb.stage_site_counts(corolla) == [n]
        betti = list(cx.homology_mod2(half))
        assert betti == [1] + [0] * (n - 2) + [1, 0]
        prev = wb.wb_of_stage(n - 1, n, rule="sum")
        deltas[n] = len(half) - len(prev)
    assert deltas == {2: 5, 3: 15, 4: 47}


def test_stages_are_nested_subcomplexes():
    for rule in ("round", "sum"):
        previous = set()
        for stage in range(1, 4):
            labels = {c.label
                      for c in wb.wb_of_stage(stage, 3, rule=rule).cells}
            assert previous <= labels
            previous = labels


# ---------------------------------------------------------------------------
# cell-level module structure

def test_quotient_cells_satisfy_the_weak_bimodule_axioms():
    ops = SimpleNamespace(
        left=lambda k, p, m: wb.wb_left(k, p, m),
        right=lambda m, i, k: wb.wb_right(m, i, k))
    operands = {0: [wb.UNIT_CELL]}
    for n in range(1, 4):
        operands[n] = [c.label for c in built_wb(n).cells if c.dim == n]
    failures = [(axiom, inst) for axiom, inst, lhs, rhs
                in cm.weak_bimodule_axioms(ops, operands, 4)
                if lhs != rhs]
    assert failures == []


def test_left_action_on_the_unit_cell_places_the_bead():
    assert wb.wb_left(1, 1, wb.UNIT_CELL) == wb.UNIT_CELL
    a, factors, c = wb.wb_left(3, 2, wb.UNIT_CELL)
    assert (a, factors, c) == (1, (), 1)


def test_evaluation_dependencies_list_bead_arities():
    tops = built_wb_bar(3).cells_of_dim(3)
    deps = sorted(wb.evaluation_dependencies(t.label) for t in tops)
    assert deps == [(1, 1, 1), (1, 2), (1, 2), (3,)]


# ---------------------------------------------------------------------------
# serialization

def test_bar_cell_json_carries_groups_and_end_labels():
    for cell in built_wb_bar(3).cells:
        obj = wb.bar_cell_to_obj(cell.label)
        assert {"tree", "gaps", "groups", "label0", "label1"} <= set(obj)
        assert wb.bar_cell_from_obj(obj) == cell.label


def test_quotient_cell_json_round_trips():
    for cell in built_wb(3).cells:
        if cell.label == wb.UNIT_CELL:
            continue
        obj = wb.quotient_cell_to_obj(cell.label)
        assert wb.quotient_cell_from_obj(obj) == cell.label

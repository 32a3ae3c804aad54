"""Tree grammar, grafting, contraction, enumeration, and JSON format."""

import itertools
import json
from collections import Counter

import pytest

import oracles
from operadkit import classic_models as cm
from operadkit import tree_core as tc


def count_beads(t):
    if tc.is_leaf(t):
        return 0
    own = 1 if tc.kind(t) == "bead" else 0
    return own + sum(count_beads(c) for c in tc.children(t))


# ---------------------------------------------------------------------------
# validate

def test_bead_corolla_is_a_valid_top_cell():
    top = tc.bead((tc.LEAF, tc.LEAF, tc.LEAF))
    tc.validate(top, "simplex", 3)
    assert tc.simplex_dim(top) == 3


def test_adjacent_inner_vertices_rejected():
    run = tc.inner((tc.LEAF, tc.inner((tc.LEAF, tc.LEAF))))
    bad = tc.bead((run,))
    with pytest.raises(ValueError):
        tc.validate(bad, "simplex")


def test_bead_in_site_position_rejected():
    bad = tc.bead((tc.bead((tc.LEAF,)), tc.LEAF))
    with pytest.raises(ValueError):
        tc.validate(bad, "cube", 2)


def test_validate_rejects_unknown_family():
    with pytest.raises(ValueError):
        tc.validate(tc.LEAF, "octahedron")


# ---------------------------------------------------------------------------
# graft

def test_graft_corolla_around_interval_cell():
    base = tc.bead((tc.LEAF, tc.LEAF))
    grafted = tc.graft(tc.assoc_corolla(3), 2, base)
    assert grafted == tc.simplex_face_tree(1, (1, 1), 1)
    assert grafted == cm.act_simplex_face("left", 3, 2, base)
    tc.validate(grafted, "simplex", 4)


def test_identity_graft_is_neutral():
    base = tc.bead((tc.LEAF, tc.inner((tc.LEAF, tc.LEAF))))
    for slot in range(1, tc.leaf_count(base) + 1):
        assert tc.graft(base, slot, tc.LEAF) == base
    assert tc.graft(tc.LEAF, 1, base) == base


def test_graft_corolla_at_leaf_keeps_dimension():
    two_bead = tc.cube_face_tree(("1",))
    grown = tc.graft(two_bead, 1, tc.assoc_corolla(2))
    tc.validate(grown, "cube", 3)
    assert tc.cube_dim(grown) == tc.cube_dim(two_bead) == 0
    assert count_beads(grown) == count_beads(two_bead)
    assert grown == cm.act_cube_face("right", 2, 1, two_bead)


def test_graft_slot_out_of_range():
    base = tc.bead((tc.LEAF, tc.LEAF))
    with pytest.raises((ValueError, IndexError)):
        tc.graft(base, 3, tc.assoc_corolla(2))


# ---------------------------------------------------------------------------
# contract_edge

def test_contract_merges_two_clusters_into_the_top_cell():
    two_bead = tc.cube_face_tree(("1",))
    (edge,) = tc.internal_edges(two_bead)
    merged = tc.contract_edge(two_bead, edge, family="cube")
    assert merged == tc.cube_face_tree(("f",))
    assert merged == tc.bead((tc.LEAF, tc.LEAF))


def test_every_contraction_on_cube_3_stays_valid():
    cx = cm.build_complex("square", 3)
    codim_one_moves = 0
    for tree in tc.enumerate_trees("cube", 3):
        for edge in tc.internal_edges(tree):
            moved = tc.contract_edge(tree, edge, family="cube")
            tc.validate(moved, "cube", 3)
            assert tc.cube_dim(moved) > tc.cube_dim(tree)
            if tc.cube_dim(moved) == tc.cube_dim(tree) + 1:
                codim_one_moves += 1
                assert tree in cx.boundary[moved]
    assert codim_one_moves > 0


def test_second_contraction_of_the_same_edge_errors():
    two_bead = tc.cube_face_tree(("1",))
    (edge,) = tc.internal_edges(two_bead)
    once = tc.contract_edge(two_bead, edge, family="cube")
    with pytest.raises((ValueError, IndexError)):
        tc.contract_edge(once, edge, family="cube")


# ---------------------------------------------------------------------------
# enumerate_trees

def test_enumerate_assoc_4_lists_eleven_trees():
    trees = tc.enumerate_trees("associahedron", 4)
    assert len(trees) == 11
    assert Counter(count_beads(t) for t in trees) == {3: 5, 2: 5, 1: 1}
    assert Counter(tc.assoc_dim(t) for t in trees) == {0: 5, 1: 5, 2: 1}
    assert len(trees) == sum(oracles.assoc_face_counts(4))


def test_enumerate_simplex_0_is_the_bare_bead():
    assert tc.enumerate_trees("simplex", 0) == [tc.bead(())]


def test_enumerate_cube_1_is_one_tree():
    assert tc.enumerate_trees("cube", 1) == [tc.bead((tc.LEAF,))]


def test_enumeration_has_no_duplicates():
    for family, n in itertools.product(tc.FAMILIES, range(1, 5)):
        trees = tc.enumerate_trees(family, n)
        assert len(set(trees)) == len(trees)
        for t in trees:
            tc.validate(t, family, n)


def test_enumerate_respects_bound():
    with pytest.raises(ValueError):
        tc.enumerate_trees("associahedron", 9, bound=8)


def test_dimension_filter_agrees_with_full_enumeration():
    full = tc.enumerate_trees("simplex", 3)
    for d in range(4):
        sliced = tc.enumerate_trees("simplex", 3, dim=d)
        assert sliced == [t for t in full if tc.simplex_dim(t) == d]


# ---------------------------------------------------------------------------
# counting invariants against the oracles

def test_simplex_tree_counts_match_binomials():
    for n in range(5):
        counts = Counter(tc.simplex_dim(t)
                         for t in tc.enumerate_trees("simplex", n))
        expected = oracles.simplex_face_counts(n)
        assert tuple(counts[d] for d in range(n + 1)) == expected


def test_cube_tree_counts_match_binomials():
    for n in range(1, 6):
        counts = Counter(tc.cube_dim(t)
                         for t in tc.enumerate_trees("cube", n))
        expected = oracles.cube_face_counts(n - 1)
        assert tuple(counts[d] for d in range(n)) == expected


def test_assoc_tree_counts_match_polygon_dissections():
    for n in range(2, 7):
        counts = Counter(tc.assoc_dim(t)
                         for t in tc.enumerate_trees("associahedron", n))
        expected = oracles.assoc_face_counts(n)
        assert tuple(counts[d] for d in range(n - 1)) == expected


def test_binary_tree_counts_are_catalan():
    for n in range(2, 7):
        vertices = tc.enumerate_trees("associahedron", n, dim=0)
        assert len(vertices) == oracles.catalan(n - 1)


# ---------------------------------------------------------------------------
# structural properties

def test_grafting_is_operadically_associative():
    pools = {n: tc.enumerate_trees("associahedron", n) for n in range(1, 5)}
    for p, q, r in itertools.product(range(1, 5), repeat=3):
        if p + q + r > 6:
            continue
        for x, y, z in itertools.product(pools[p], pools[q], pools[r]):
            for i in range(1, p + 1):
                for j in range(1, p + q):
                    lhs = tc.graft(tc.graft(x, i, y), j, z)
                    if j < i:
                        rhs = tc.graft(tc.graft(x, j, z), i + r - 1, y)
                    elif j < i + q:
                        rhs = tc.graft(x, i, tc.graft(y, j - i + 1, z))
                    else:
                        rhs = tc.graft(tc.graft(x, j - q + 1, z), i, y)
                    assert lhs == rhs


def test_normalize_is_idempotent_and_fixes_canonical_trees():
    for family, n in itertools.product(tc.FAMILIES, range(1, 5)):
        for t in tc.enumerate_trees(family, n):
            assert tc.normalize(t) == t
            assert tc.normalize(tc.normalize(t)) == tc.normalize(t)


def test_grafting_assoc_trees_stays_in_family():
    for p, q in itertools.product(range(2, 5), repeat=2):
        if p + q > 7:
            continue
        for x in tc.enumerate_trees("associahedron", p):
            for y in tc.enumerate_trees("associahedron", q):
                for i in range(1, p + 1):
                    tc.validate(tc.graft(x, i, y), "associahedron",
                                p + q - 1)


def test_replace_at_round_trips_node_at():
    tree = tc.cube_face_tree(("1", "0"))
    for edge in tc.internal_edges(tree):
        assert tc.replace_at(tree, edge, tc.node_at(tree, edge)) == tree


# ---------------------------------------------------------------------------
# JSON format

def test_json_round_trip_is_byte_stable():
    for family, n in itertools.product(tc.FAMILIES, range(1, 5)):
        for t in tc.enumerate_trees(family, n):
            text = tc.to_json(t)
            assert tc.from_json(text) == t
            assert tc.to_json(tc.from_json(text)) == text


def test_json_uses_the_documented_keys():
    obj = json.loads(tc.to_json(tc.bead((tc.LEAF, tc.LEAF))))
    assert obj["kind"] == "bead"
    assert [c["kind"] for c in obj["children"]] == ["leaf", "leaf"]

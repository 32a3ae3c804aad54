"""Prism assembly and quotient for the bar model over the cube bimodule.

The bar complex in degree n is glued from prisms, one per object of the
splitting category on n points.  An object is a chain of beads holding
n points in order, encoded as a composition of n; the prism of a chain
with k beads is the product of a cube factor for each bead (one gap
coordinate per adjacent point pair inside the bead) and a k-simplex
recording a non-decreasing height per bead.  Faces of a prism are named
by encircled trees: a global gap word over {0, 1, f}, a partition of
the maximal unsplit runs (sub-beads) into contiguous groups, and two
optional pins that fix the first group at height 0 or the last group at
height 1.  Equal names are glued, and every valid name occurs, so the
assembled complex is enumerated directly from the grammar.

The quotient model forgets the internal coordinates of pinned groups,
keeping only their point counts.  A quotient cell is a triple
(a, factors, c): a points absorbed at height 0, a tuple of gap words
for the free groups, and c points absorbed at height 1.  Stage and
half-stage families filter cells by how many sites their sub-beads
expose, either per sub-bead or in total.
"""

from __future__ import annotations

from .complexes import Cell, CellComplex, quotient_complex
from . import tree_core as tc

DEFAULT_BOUND = 8

UNIT_CELL = ("unit",)

GAP_ORDER = {"0": 0, "f": 1, "1": 2}


# ---------------------------------------------------------------------------
# The splitting category on n points.

def xi_objects(n):
    """Compositions of n, ordered by their set of split positions.

    The object with split set S (a subset of the n-1 gaps) is the chain
    whose beads are the runs between consecutive splits.  The empty set
    gives the single bead holding all n points.
    """
    if n < 1:
        raise ValueError("the splitting category needs at least one point")
    out = []
    for mask in range(1 << (n - 1)):
        cuts = [i for i in range(n - 1) if mask >> i & 1]
        parts = []
        prev = 0
        for cut in cuts:
            parts.append(cut + 1 - prev)
            prev = cut + 1
        parts.append(n - prev)
        out.append(tuple(parts))
    return out


def xi_tree(parts):
    """The chain tree of a composition: beads of leaves, no inner vertices."""
    word = "1".join("f" * (p - 1) for p in parts)
    return tc.cube_face_tree(word)


def xi_category(n):
    """Objects and one-step splitting morphisms of the category on n points.

    Each morphism adds a single split, cutting one bead of the source
    chain into two adjacent beads.  Reversing an arrow is the one-edge
    contraction between the same pair of objects.
    """
    objects = xi_objects(n)
    index = {}
    masks = []
    for i, parts in enumerate(objects):
        mask = 0
        pos = 0
        for p in parts[:-1]:
            pos += p
            mask |= 1 << (pos - 1)
        index[mask] = i
        masks.append(mask)
    covers = []
    for i, mask in enumerate(masks):
        for g in range(n - 1):
            if not mask >> g & 1:
                covers.append((i, index[mask | 1 << g]))
    return {
        "n": n,
        "objects": objects,
        "trees": [xi_tree(p) for p in objects],
        "covers": covers,
    }


# ---------------------------------------------------------------------------
# Bar cells: (gap word, group sizes, pin0, pin1).

def _sub_bead_count(gaps):
    return gaps.count("1") + 1


def _valid_pins(pin0, pin1, group_count):
    return not (pin0 and pin1 and group_count == 1)


def bar_cell_dim(label):
    if label == UNIT_CELL:
        return 0
    gaps, groups, pin0, pin1 = label
    return gaps.count("f") + len(groups) - pin0 - pin1


def bar_cells(n):
    """All encircled-tree labels in degree n."""
    if n == 0:
        return [UNIT_CELL]
    out = []
    for mask in range(3 ** (n - 1)):
        word = []
        m = mask
        for _ in range(n - 1):
            word.append("01f"[m % 3])
            m //= 3
        gaps = "".join(word)
        s = _sub_bead_count(gaps)
        for groups in tc._compositions(s):
            for pin0 in (0, 1):
                for pin1 in (0, 1):
                    if _valid_pins(pin0, pin1, len(groups)):
                        out.append((gaps, groups, pin0, pin1))
    return out


def _sub_bead_of_gap(gaps, i):
    """Index of the sub-bead containing gap position i (a non-1 gap)."""
    return gaps[:i].count("1")


def _group_of_sub_bead(groups, b):
    total = 0
    for j, size in enumerate(groups):
        total += size
        if b < total:
            return j
    raise IndexError("sub-bead index out of range")


def bar_facets(label):
    """Codimension-one faces of an encircled-tree cell.

    Gap moves close one f to 0 (sites merge) or to 1 (the sub-bead
    splits inside its group).  Height moves merge two adjacent groups or
    pin an unpinned extremal group; a move whose result would force both
    pins onto a single group is the empty face and is skipped.
    """
    if label == UNIT_CELL:
        return []
    gaps, groups, pin0, pin1 = label
    out = []
    for i, g in enumerate(gaps):
        if g != "f":
            continue
        out.append((gaps[:i] + "0" + gaps[i + 1:], groups, pin0, pin1))
        b = _sub_bead_of_gap(gaps, i)
        j = _group_of_sub_bead(groups, b)
        bumped = groups[:j] + (groups[j] + 1,) + groups[j + 1:]
        out.append((gaps[:i] + "1" + gaps[i + 1:], bumped, pin0, pin1))
    for j in range(len(groups) - 1):
        merged = groups[:j] + (groups[j] + groups[j + 1],) + groups[j + 2:]
        if _valid_pins(pin0, pin1, len(merged)):
            out.append((gaps, merged, pin0, pin1))
    if not pin0 and _valid_pins(1, pin1, len(groups)):
        out.append((gaps, groups, 1, pin1))
    if not pin1 and _valid_pins(pin0, 1, len(groups)):
        out.append((gaps, groups, pin0, 1))
    return out


def assemble_wb_bar(n, bound=DEFAULT_BOUND):
    """The glued prism complex in degree n."""
    if n > bound:
        raise ValueError(f"degree {n} exceeds bound {bound}")
    labels = bar_cells(n)
    cells = [Cell(l, bar_cell_dim(l), n) for l in labels]
    boundary = {}
    for l in labels:
        row = {}
        for f in bar_facets(l):
            row[f] = row.get(f, 0) + 1
        boundary[l] = row
    cx = CellComplex(cells, boundary, name=f"wb-square-bar({n})")
    if n >= 1:
        tops = cx.cells_of_dim(n)
        if len(tops) != 2 ** (n - 1):
            raise AssertionError(
                f"expected {2 ** (n - 1)} top prisms, found {len(tops)}")
    return cx


# ---------------------------------------------------------------------------
# Prism-by-prism view, used to certify the gluing.

def prism_faces(parts):
    """Labels of all faces of the prism of one chain, with their factors.

    Returns (label, cube_words, height_face) triples where cube_words
    gives the gap word of each bead and height_face = (groups, pin0,
    pin1) is the simplex face on the chain's beads.
    """
    k = len(parts)
    per_bead = []
    for p in parts:
        words = []
        for mask in range(3 ** (p - 1)):
            word = []
            m = mask
            for _ in range(p - 1):
                word.append("01f"[m % 3])
                m //= 3
            words.append("".join(word))
        per_bead.append(words)
    combos = [()]
    for words in per_bead:
        combos = [prefix + (w,) for prefix in combos for w in words]
    out = []
    for groups in tc._compositions(k):
        for pin0 in (0, 1):
            for pin1 in (0, 1):
                if not _valid_pins(pin0, pin1, len(groups)):
                    continue
                for cube_words in combos:
                    label = _prism_label(cube_words, groups, pin0, pin1)
                    out.append((label, cube_words, (groups, pin0, pin1)))
    return out


def _prism_label(cube_words, groups, pin0, pin1):
    gaps = "1".join(cube_words)
    sub_counts = [w.count("1") + 1 for w in cube_words]
    sub_groups = []
    pos = 0
    for size in groups:
        sub_groups.append(sum(sub_counts[pos:pos + size]))
        pos += size
    return (gaps, tuple(sub_groups), pin0, pin1)


def prism_product_facets(cube_words, height_face):
    """Facets of a prism face computed factor by factor."""
    groups, pin0, pin1 = height_face
    out = []
    for b, word in enumerate(cube_words):
        for i, g in enumerate(word):
            if g != "f":
                continue
            for repl in ("0", "1"):
                amended = list(cube_words)
                amended[b] = word[:i] + repl + word[i + 1:]
                out.append(_prism_label(tuple(amended), groups, pin0, pin1))
    for j in range(len(groups) - 1):
        merged = groups[:j] + (groups[j] + groups[j + 1],) + groups[j + 2:]
        if _valid_pins(pin0, pin1, len(merged)):
            out.append(_prism_label(cube_words, merged, pin0, pin1))
    if not pin0 and _valid_pins(1, pin1, len(groups)):
        out.append(_prism_label(cube_words, groups, 1, pin1))
    if not pin1 and _valid_pins(pin0, 1, len(groups)):
        out.append(_prism_label(cube_words, groups, pin0, 1))
    return out


def check_prism_gluing(n):
    """Certify that every prism face agrees with the glued boundary.

    For each chain and each face of its prism, the facet labels computed
    inside the prism must coincide with the facets of the same label in
    the assembled complex.  Returns the number of faces checked.
    """
    checked = 0
    for parts in xi_objects(n):
        for label, cube_words, height_face in prism_faces(parts):
            inside = sorted(prism_product_facets(cube_words, height_face))
            glued = sorted(bar_facets(label))
            if inside != glued:
                raise AssertionError(
                    f"prism {parts} disagrees with the gluing at {label!r}")
            checked += 1
    return checked


# ---------------------------------------------------------------------------
# Quotient cells: (a, factors, c).

def _group_spans(label):
    """Point spans of the groups: (start, end) pairs, points 0-based."""
    gaps, groups, pin0, pin1 = label
    starts = [0]
    for i, g in enumerate(gaps):
        if g == "1":
            starts.append(i + 1)
    n = len(gaps) + 1
    ends = starts[1:] + [n]
    spans = []
    b = 0
    for size in groups:
        spans.append((starts[b], ends[b + size - 1]))
        b += size
    return spans


def quotient_label(label):
    """Relabel a bar cell for the quotient, with its image dimension."""
    if label == UNIT_CELL:
        return UNIT_CELL, 0
    gaps, groups, pin0, pin1 = label
    spans = _group_spans(label)
    a = spans[0][1] - spans[0][0] if pin0 else 0
    c = spans[-1][1] - spans[-1][0] if pin1 else 0
    free = spans[pin0:len(spans) - pin1 if pin1 else len(spans)]
    factors = tuple(gaps[start:end - 1] for start, end in free)
    dim = sum(w.count("f") for w in factors) + len(factors)
    return (a, factors, c), dim


def quotient_wb(n, bound=DEFAULT_BOUND):
    """The quotient complex in degree n."""
    bar = assemble_wb_bar(n, bound=bound)
    return quotient_complex(bar, quotient_label, name=f"wb-square({n})")


def quotient_cell_points(label):
    """Total point count of a quotient cell label."""
    if label == UNIT_CELL:
        return 0
    a, factors, c = label
    return a + c + sum(len(w) + 1 for w in factors)


# ---------------------------------------------------------------------------
# Filtration stages.

def _factor_site_counts(word):
    """Sites per sub-bead of one gap word."""
    return [piece.count("f") + 1 for piece in word.split("1")]


def stage_site_counts(label):
    """Per-sub-bead site counts of a cell, minimal over representatives.

    Bar labels read their gap word directly.  Quotient labels count one
    site for each pinned block, whose internal structure is forgotten.
    """
    if label == UNIT_CELL:
        return [0]
    if len(label) == 4:
        gaps, _groups, _p0, _p1 = label
        return _factor_site_counts(gaps)
    a, factors, c = label
    counts = []
    if a:
        counts.append(1)
    for word in factors:
        counts.extend(_factor_site_counts(word))
    if c:
        counts.append(1)
    return counts or [0]


def in_round_stage(label, stage):
    """Every sub-bead exposes at most ``stage`` sites."""
    return max(stage_site_counts(label)) <= stage


def in_sum_stage(label, stage):
    """The sub-beads expose at most ``stage`` sites in total."""
    return sum(stage_site_counts(label)) <= stage


def in_half_stage(label, stage):
    """The half stage: total at most ``stage``, each at most ``stage - 1``."""
    return in_sum_stage(label, stage) and in_round_stage(label, stage - 1)


STAGE_RULES = {
    "round": in_round_stage,
    "sum": in_sum_stage,
    "half": in_half_stage,
}


def wb_of_stage(stage, n, rule="round", bound=DEFAULT_BOUND):
    """Stage subcomplex of the degree-n quotient.

    ``rule`` picks the family: "round" bounds every sub-bead, "sum"
    bounds the total site count, "half" is their interleaving.
    """
    if stage < 1:
        raise ValueError("stages start at 1")
    cx = quotient_wb(n, bound=bound)
    member = STAGE_RULES[rule]
    keep = [c.label for c in cx.cells if member(c.label, stage)]
    return cx.subcomplex(keep, name=f"wb-square({n})|{rule}<={stage}")


def wb_half_stage(stage, n, bound=DEFAULT_BOUND):
    """The intersection stage between sum stage - 1 and sum stage."""
    return wb_of_stage(stage, n, rule="half", bound=bound)


def wb_stage_families(stage, n, bound=DEFAULT_BOUND):
    """All three stage families at once, with inclusions asserted."""
    cx = quotient_wb(n, bound=bound)
    families = {}
    for rule, member in STAGE_RULES.items():
        families[rule] = {c.label for c in cx.cells if member(c.label, stage)}
    if not families["sum"] <= families["round"]:
        raise AssertionError("sum stage escaped the round stage")
    if not families["half"] <= families["sum"]:
        raise AssertionError("half stage escaped the sum stage")
    return families


# ---------------------------------------------------------------------------
# Actions on quotient labels.

def wb_left(k, p, label):
    """Insert the cell into slot p of a k-fold product.

    The slots before p pin their points at height 0 and the slots after
    pin at height 1, so only the absorbed counts grow.
    """
    if not 1 <= p <= k:
        raise ValueError("slot out of range")
    if label == UNIT_CELL:
        return UNIT_CELL if k == 1 else (p - 1, (), k - p)
    a, factors, c = label
    return (a + p - 1, factors, c + k - p)


def wb_right(label, slot, k):
    """Substitute a k-fold point cluster at one point of the cell.

    Positive k widens the point into k coincident copies.  Zero deletes
    it: pinned points just lower the count, a width-one factor vanishes,
    and an interior deletion merges its two gaps by their maximum.
    """
    if label == UNIT_CELL:
        raise ValueError("the empty cell has no points")
    a, factors, c = label
    n = quotient_cell_points(label)
    if not 1 <= slot <= n:
        raise ValueError("slot out of range")
    if slot <= a:
        if k == 0 and a + c + len(factors) == 1 and a == 1:
            return UNIT_CELL
        return (a + k - 1, factors, c)
    if slot > n - c:
        if k == 0 and a + c + len(factors) == 1 and c == 1:
            return UNIT_CELL
        return (a, factors, c + k - 1)
    pos = slot - a - 1
    for idx, word in enumerate(factors):
        width = len(word) + 1
        if pos < width:
            break
        pos -= width
    else:
        raise AssertionError("point index escaped the factors")
    if k >= 1:
        new_word = word[:pos] + "0" * (k - 1) + word[pos:]
        new_factors = factors[:idx] + (new_word,) + factors[idx + 1:]
        return (a, new_factors, c)
    if len(word) == 0:
        new_factors = factors[:idx] + factors[idx + 1:]
        if a == 0 and c == 0 and not new_factors:
            return UNIT_CELL
        return (a, new_factors, c)
    if pos == 0:
        new_word = word[1:]
    elif pos == len(word):
        new_word = word[:-1]
    else:
        left, right = word[pos - 1], word[pos]
        keep = left if GAP_ORDER[left] >= GAP_ORDER[right] else right
        new_word = word[:pos - 1] + keep + word[pos + 1:]
    new_factors = factors[:idx] + (new_word,) + factors[idx + 1:]
    return (a, new_factors, c)


def evaluation_dependencies(label):
    """Arities of the operation factors a cell would consume.

    Each sub-bead stands for one factor whose arity is the number of
    sites it exposes (coincident clusters count once); a pinned block is
    consumed as a single unary factor.  The list is sorted, and a cell
    lies in the round stage N exactly when every entry is at most N.
    """
    if label == UNIT_CELL:
        return ()
    return tuple(sorted(stage_site_counts(label)))


# ---------------------------------------------------------------------------
# Carrier onto the simplex model.

def _factor_sites(word):
    """Cluster widths of one factor: split at every positive gap."""
    sites = []
    width = 1
    for g in word:
        if g == "0":
            width += 1
        else:
            sites.append(width)
            width = 1
    sites.append(width)
    return sites


def wb_carrier(label):
    """The smallest simplex face containing a quotient cell."""
    if label == UNIT_CELL:
        raise ValueError("degree zero has no simplex carrier")
    a, factors, c = label
    sites = []
    for word in factors:
        sites.extend(_factor_sites(word))
    return tc.simplex_face_tree(a, tuple(sites), c)


# ---------------------------------------------------------------------------
# JSON forms.

def _sub_bead_sizes(gaps):
    return [piece.count("f") + piece.count("0") + 1 for piece in gaps.split("1")]


def bar_cell_to_obj(label):
    if label == UNIT_CELL:
        return {"unit": True}
    gaps, groups, pin0, pin1 = label
    ids = []
    b = 0
    for size in groups:
        ids.append(list(range(b, b + size)))
        b += size
    return {"tree": tc._node_to_obj(tc.cube_face_tree(gaps)),
            "gaps": gaps, "groups": ids,
            "label0": bool(pin0), "label1": bool(pin1)}


def bar_cell_from_obj(obj):
    if obj.get("unit"):
        return UNIT_CELL
    gaps = obj.get("gaps")
    if gaps is None:
        gaps = tc.cube_face_labels(tc._obj_to_node(obj["tree"]))
    groups = tuple(len(g) for g in obj["groups"])
    return (gaps, groups, int(obj["label0"]), int(obj["label1"]))


def quotient_cell_to_obj(label):
    if label == UNIT_CELL:
        return {"unit": True}
    a, factors, c = label
    return {"a": a, "factors": list(factors), "c": c}


def quotient_cell_from_obj(obj):
    if obj.get("unit"):
        return UNIT_CELL
    return (obj["a"], tuple(obj["factors"]), obj["c"])

"""Piece assembly and quotient for the bar model over the association operad.

The bar complex in degree n is glued from pieces, one per face tree of
the n-leaf association polytope.  A face tree is encoded as its laminar
family of leaf intervals, one interval of size at least two per bead.
The piece of a tree T is the product of one association factor per bead
and the polytope of weakly order-preserving height maps from the bead
poset of T (root-most bead lowest) to [0, 1].  Faces of a piece are
named by decorated trees: a finer tree F, a partition of the beads of F
into height classes, where the class pinned at height 0 is down-closed,
the class pinned at height 1 is up-closed, and every free class is
connected in the bead forest.  Equal names are glued, and every valid
name occurs, so the assembled complex is enumerated directly from the
grammar.

The quotient model forgets the internal coordinates of pinned beads.
The class at height 0 contracts to a single low vertex, each component
of the class at height 1 contracts to a high vertex, and a one-child
buffer bead is inserted on every edge from the low vertex to a high
vertex or a leaf.  Stage and half-stage families filter quotient cells
by bead fan-out, either per bead or summed over each prime factor
hanging under the low vertex.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import Cell, CellComplex, quotient_complex
from . import tree_core as tc

DEFAULT_BOUND = 8


# ---------------------------------------------------------------------------
# Laminar interval families: the face trees of the association polytope.

def is_laminar(intervals):
    """Whether every two intervals are nested or disjoint."""
    items = sorted(intervals)
    for (a, b), (c, d) in combinations(items, 2):
        if a < c <= b < d:
            return False
    return True


def family_leaf_count(family):
    return max(hi for _, hi in family) if family else 1


def validate_family(family, n=None):
    fam = tuple(sorted(family))
    if len(set(fam)) != len(fam):
        raise ValueError("duplicate intervals in family")
    for lo, hi in fam:
        if hi <= lo or lo < 1:
            raise ValueError(f"interval {(lo, hi)!r} has fewer than two leaves")
    if not is_laminar(fam):
        raise ValueError("intervals are neither nested nor disjoint")
    if n is None:
        n = family_leaf_count(fam)
    if n >= 2 and (1, n) not in fam:
        raise ValueError("the root interval is missing")
    if fam and max(hi for _, hi in fam) > n:
        raise ValueError("interval exceeds the leaf range")
    return fam, n


def child_items(family, interval):
    """Direct children of a bead, in planar order.

    Items are ("bead", sub) for a maximal proper sub-interval and
    ("leaf", i) for an uncovered leaf position.
    """
    lo, hi = interval
    subs = [iv for iv in family if iv != interval
            and lo <= iv[0] and iv[1] <= hi]
    maximal = [iv for iv in subs
               if not any(jv != iv and jv[0] <= iv[0] and iv[1] <= jv[1]
                          for jv in subs)]
    maximal.sort()
    items = []
    pos = lo
    for sub in maximal:
        while pos < sub[0]:
            items.append(("leaf", pos))
            pos += 1
        items.append(("bead", sub))
        pos = sub[1] + 1
    while pos <= hi:
        items.append(("leaf", pos))
        pos += 1
    return items


def out_degree(family, interval):
    return len(child_items(family, interval))


def bead_parent(family, interval):
    """The smallest bead properly containing the interval, or None."""
    lo, hi = interval
    hull = [iv for iv in family if iv != interval
            and iv[0] <= lo and hi <= iv[1]]
    return min(hull, key=lambda iv: iv[1] - iv[0]) if hull else None


def family_to_tree(family):
    """The family as a nested bead tree."""
    fam, n = validate_family(family)
    if not fam:
        return tc.leaf()

    def build(interval):
        kids = []
        for tag, payload in child_items(fam, interval):
            kids.append(tc.leaf() if tag == "leaf" else build(payload))
        return tc.bead(kids)

    return build((1, n))


def tree_to_family(tree):
    """Inverse of family_to_tree."""
    fam = []

    def walk(node, start):
        if tc.is_leaf(node):
            return start + 1
        pos = start
        for c in tc.children(node):
            pos = walk(c, pos)
        fam.append((start + 1, pos))
        return pos

    walk(tree, 0)
    return tuple(sorted(fam))


def psi_objects(n, bound=DEFAULT_BOUND):
    """All face-tree families on n leaves, coarsest first is not promised."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > bound:
        raise ValueError(f"degree {n} exceeds bound {bound}")

    def fill(lo, hi):
        """Families of beads strictly inside the interval [lo, hi]."""
        span = hi - lo + 1
        if span < 2:
            yield frozenset()
            return
        # Choose the maximal sub-beads: a set of disjoint intervals of
        # size >= 2, not equal to the whole span, then recurse inside.
        def choose(start, picked):
            options = [picked]
            for a in range(start, hi + 1):
                for b in range(a + 1, hi + 1):
                    if (a, b) == (lo, hi):
                        continue
                    for rest in choose(b + 1, picked + [(a, b)]):
                        options.append(rest)
            return options

        seen = set()
        for tops in choose(lo, []):
            key = tuple(tops)
            if key in seen:
                continue
            seen.add(key)
            def expand(idx, acc):
                if idx == len(tops):
                    yield acc
                    return
                a, b = tops[idx]
                for inside in fill(a, b):
                    yield from expand(idx + 1,
                                      acc | {(a, b)} | inside)
            yield from expand(0, frozenset())

    if n == 1:
        return [()]
    return sorted(tuple(sorted({(1, n)} | inner)) for inner in fill(1, n))


class PsiObject:
    """A face tree of the n-leaf association polytope, held as a family."""

    __slots__ = ("n", "family")

    def __init__(self, family, n=None):
        fam, m = validate_family(family, n)
        self.family = fam
        self.n = m

    @property
    def tree(self):
        return family_to_tree(self.family)

    @property
    def bead_count(self):
        return len(self.family)

    @property
    def dim(self):
        return self.n - 1 - len(self.family)

    def refines(self, other):
        return self.n == other.n and set(self.family) >= set(other.family)

    def coarsens(self, other):
        return other.refines(self)

    def __eq__(self, other):
        return (isinstance(other, PsiObject)
                and (self.n, self.family) == (other.n, other.family))

    def __hash__(self):
        return hash((self.n, self.family))

    def __repr__(self):
        return f"PsiObject({self.family!r}, n={self.n})"


def psi_join(a, b):
    """The smallest common coarsening: intersect the families."""
    if a.n != b.n:
        raise ValueError("objects live in different degrees")
    return PsiObject(tuple(sorted(set(a.family) & set(b.family))), a.n)


def psi_meet(a, b):
    """The common refinement: unite the families, or None if they clash."""
    if a.n != b.n:
        raise ValueError("objects live in different degrees")
    union = set(a.family) | set(b.family)
    if not is_laminar(union):
        return None
    return PsiObject(tuple(sorted(union)), a.n)


def psi_lattice(n, bound=DEFAULT_BOUND):
    """Objects plus full join and meet tables in degree n."""
    objects = [PsiObject(fam, n) for fam in psi_objects(n, bound)]
    join = {}
    meet = {}
    for a in objects:
        for b in objects:
            join[(a.family, b.family)] = psi_join(a, b).family
            m = psi_meet(a, b)
            meet[(a.family, b.family)] = None if m is None else m.family
    return {"n": n, "objects": objects, "join": join, "meet": meet}


# ---------------------------------------------------------------------------
# Bead posets and faces of their height polytopes.

class BeadPoset:
    """A forest-shaped poset: each element has at most one parent below it.

    The parent is the smaller element, so roots are the minima and the
    order runs root-most to leaf-most.
    """

    def __init__(self, elements, parent):
        self.elements = tuple(elements)
        self.parent = dict(parent)
        index = set(self.elements)
        for e in self.elements:
            p = self.parent.get(e)
            if p is not None and p not in index:
                raise ValueError(f"parent of {e!r} is not an element")

    @classmethod
    def from_family(cls, family):
        fam, _ = validate_family(family)
        return cls(fam, {iv: bead_parent(fam, iv) for iv in fam})

    def children(self, e):
        return tuple(x for x in self.elements if self.parent.get(x) == e)

    @property
    def roots(self):
        return tuple(e for e in self.elements if self.parent.get(e) is None)

    @property
    def maximal(self):
        kids = {self.parent[e] for e in self.elements
                if self.parent.get(e) is not None}
        return tuple(e for e in self.elements if e not in kids)

    def is_down_closed(self, subset):
        s = set(subset)
        return all(self.parent.get(e) is None or self.parent[e] in s
                   for e in s)

    def is_up_closed(self, subset):
        s = set(subset)
        return all(self.parent.get(e) not in s or e in s
                   for e in self.elements)

    def is_connected(self, subset):
        s = set(subset)
        if not s:
            return False
        tops = [e for e in s if self.parent.get(e) not in s]
        return len(tops) == 1

    def covers(self):
        return tuple((self.parent[e], e) for e in self.elements
                     if self.parent.get(e) is not None)


def _set_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [head]] + part[i + 1:]
        yield part + [[head]]


def order_polytope_faces(poset):
    """All faces of the height polytope of a forest poset.

    A face is (zero, one, groups): the class pinned at 0 is down-closed,
    the class pinned at 1 is up-closed, and each free group is connected.
    The face dimension is the number of free groups.
    """
    faces = []
    elems = list(poset.elements)
    subsets = []
    for r in range(len(elems) + 1):
        subsets.extend(frozenset(c) for c in combinations(elems, r))
    downs = [s for s in subsets if poset.is_down_closed(s)]
    ups = [s for s in subsets if poset.is_up_closed(s)]
    for zero in downs:
        for one in ups:
            if zero & one:
                continue
            rest = [e for e in elems if e not in zero and e not in one]
            for part in _set_partitions(rest):
                if all(poset.is_connected(g) for g in part):
                    groups = tuple(sorted(tuple(sorted(g)) for g in part))
                    faces.append((tuple(sorted(zero)), tuple(sorted(one)),
                                  groups))
    return faces


# ---------------------------------------------------------------------------
# The bar cells: decorated trees with height classes on their beads.

def validate_b_cell(label):
    fam_t, groups, zero, one = label
    fam, n = validate_family(fam_t)
    poset = BeadPoset.from_family(fam) if fam else BeadPoset((), {})
    blocks = [set(zero), set(one)] + [set(g) for g in groups]
    flat = [iv for b in blocks for iv in b]
    if len(flat) != len(set(flat)) or set(flat) != set(fam):
        raise ValueError("height classes do not partition the beads")
    if not poset.is_down_closed(zero):
        raise ValueError("the height-0 class is not down-closed")
    if not poset.is_up_closed(one):
        raise ValueError("the height-1 class is not up-closed")
    for g in groups:
        if not poset.is_connected(g):
            raise ValueError(f"free group {g!r} is not connected")
    return fam, n


def b_cell_dim(label):
    fam_t, groups, _, _ = label
    fam = tuple(fam_t)
    return sum(out_degree(fam, iv) - 2 for iv in fam) + len(groups)


def _canon(fam, groups, zero, one):
    return (tuple(sorted(fam)),
            tuple(sorted(tuple(sorted(g)) for g in groups)),
            tuple(sorted(zero)), tuple(sorted(one)))


def enumerate_b_cells(n, bound=DEFAULT_BOUND):
    """Every decorated-tree label in degree n, straight from the grammar."""
    labels = []
    for fam in psi_objects(n, bound):
        poset = BeadPoset.from_family(fam) if fam else BeadPoset((), {})
        for zero, one, groups in order_polytope_faces(poset):
            labels.append(_canon(fam, groups, zero, one))
    return labels


def b_top_cell(family):
    fam, _ = validate_family(family)
    return _canon(fam, tuple((iv,) for iv in fam), (), ())


def b_facets(label):
    """The facet labels of a decorated-tree cell.

    Association facets expand one bead by encircling a proper run of at
    least two of its children; the new bead joins the class of the old
    one.  Height facets either merge two adjacent free groups or absorb
    a free group into a pinned class, when the result is still valid.
    """
    fam_t, groups, zero, one = label
    fam = set(fam_t)
    out = []

    for iv in fam_t:
        items = child_items(tuple(sorted(fam)), iv)
        k = len(items)
        if k < 3:
            continue
        for start in range(k):
            for stop in range(start + 1, k):
                if stop - start + 1 == k:
                    continue
                first, last = items[start], items[stop]
                lo = first[1] if first[0] == "leaf" else first[1][0]
                hi = last[1] if last[0] == "leaf" else last[1][1]
                new_iv = (lo, hi)
                if new_iv in fam:
                    continue
                new_fam = tuple(sorted(fam | {new_iv}))
                if iv in set(zero):
                    out.append(_canon(new_fam, groups,
                                      tuple(zero) + (new_iv,), one))
                elif iv in set(one):
                    out.append(_canon(new_fam, groups, zero,
                                      tuple(one) + (new_iv,)))
                else:
                    new_groups = tuple(g + (new_iv,) if iv in g else g
                                       for g in groups)
                    out.append(_canon(new_fam, new_groups, zero, one))

    fam_sorted = tuple(sorted(fam))
    poset = BeadPoset.from_family(fam_sorted) if fam_sorted else None
    for i, j in combinations(range(len(groups)), 2):
        merged = set(groups[i]) | set(groups[j])
        if poset.is_connected(merged):
            rest = tuple(g for t, g in enumerate(groups) if t not in (i, j))
            out.append(_canon(fam_sorted, rest + (tuple(sorted(merged)),),
                              zero, one))
    for i, g in enumerate(groups):
        rest = tuple(gg for t, gg in enumerate(groups) if t != i)
        bigger_zero = set(zero) | set(g)
        if poset.is_down_closed(bigger_zero):
            out.append(_canon(fam_sorted, rest, tuple(sorted(bigger_zero)),
                              one))
        bigger_one = set(one) | set(g)
        if poset.is_up_closed(bigger_one):
            out.append(_canon(fam_sorted, rest, zero,
                              tuple(sorted(bigger_one))))
    return out


def assemble_b_bar(n, bound=DEFAULT_BOUND):
    """The glued piece complex in degree n."""
    if n > bound:
        raise ValueError(f"degree {n} exceeds bound {bound}")
    families = psi_objects(n, bound)
    tops = [Cell(b_top_cell(fam), n - 1, n) for fam in families]
    from .complexes import build_closure

    def facet_cells(cell):
        return [Cell(l, b_cell_dim(l), n) for l in b_facets(cell.label)]

    cx = build_closure(tops, facet_cells, name=f"b-pentagon-bar({n})")
    assert sum(1 for c in cx.cells if c.dim == n - 1) == len(families)
    return cx


# ---------------------------------------------------------------------------
# Pieces and how they intersect.

def lies_in_piece(label, family):
    """Whether a cell is a face of the piece of the given coarser tree."""
    fam_t, groups, zero, one = label
    fam = set(fam_t)
    coarse, _ = validate_family(family)
    if not fam >= set(coarse):
        return False

    def fiber_target(iv):
        hull = [jv for jv in coarse if jv[0] <= iv[0] and iv[1] <= jv[1]]
        return min(hull, key=lambda jv: jv[1] - jv[0]) if hull else None

    block_of = {}
    for iv in zero:
        block_of[iv] = "zero"
    for iv in one:
        block_of[iv] = "one"
    for t, g in enumerate(groups):
        for iv in g:
            block_of[iv] = t
    fibers = {}
    for iv in fam:
        target = fiber_target(iv)
        if target is None:
            return False
        fibers.setdefault(target, set()).add(block_of[iv])
    return all(len(blocks) == 1 for blocks in fibers.values())


def piece_labels(cx, family):
    return {c.label for c in cx.cells if lies_in_piece(c.label, family)}


def check_b_gluing(n, bound=DEFAULT_BOUND):
    """Certify the piece intersections against the lattice description.

    For tops T1, T2 the shared faces must be exactly the cells whose
    tree refines the meet and whose height classes pull back from the
    join; and two distinct pieces share a facet exactly when one tree is
    a one-edge contraction of the other.  Returns the number of pairs
    checked; raises AssertionError on any mismatch.
    """
    cx = assemble_b_bar(n, bound)
    objects = [PsiObject(fam, n) for fam in psi_objects(n, bound)]
    label_sets = {o.family: piece_labels(cx, o.family) for o in objects}
    pairs = 0
    for a, b in combinations(objects, 2):
        pairs += 1
        shared = label_sets[a.family] & label_sets[b.family]
        meet = psi_meet(a, b)
        join = psi_join(a, b)
        if meet is None:
            assert not shared, (a, b)
            continue
        described = {lab for lab in label_sets[join.family]
                     if set(lab[0]) >= set(meet.family)}
        assert shared == described, (a, b)
        top_dim = max((cx.cell(l).dim for l in shared), default=-1)
        contraction = len(set(a.family) ^ set(b.family)) == 1
        assert (top_dim == n - 2) == contraction, (a, b)
    return pairs


# ---------------------------------------------------------------------------
# The quotient model: contract pinned classes, keep the free beads.

LOW, HIGH = "low", "high"


def _quotient_tree(label):
    fam_t, groups, zero, one = label
    fam = tuple(sorted(fam_t))
    zero_set, one_set = set(zero), set(one)
    if not fam:
        return tc.leaf()
    root = (1, family_leaf_count(fam))

    def span(iv):
        return iv[1] - iv[0] + 1

    def build_free(iv):
        kids = []
        for tag, payload in child_items(fam, iv):
            if tag == "leaf":
                kids.append(tc.leaf())
            elif payload in one_set:
                kids.append((HIGH, (tc.leaf(),) * span(payload)))
            else:
                kids.append(build_free(payload))
        return tc.bead(kids)

    if root in zero_set:
        def frontier(iv):
            for tag, payload in child_items(fam, iv):
                if tag == "bead" and payload in zero_set:
                    yield from frontier(payload)
                else:
                    yield tag, payload

        kids = []
        for tag, payload in frontier(root):
            if tag == "leaf":
                kids.append(tc.bead([tc.leaf()]))
            elif payload in one_set:
                kids.append(tc.bead([(HIGH, (tc.leaf(),) * span(payload))]))
            else:
                kids.append(build_free(payload))
        return (LOW, tuple(kids))
    if root in one_set:
        return (HIGH, (tc.leaf(),) * span(root))
    return build_free(root)


def quotient_label(label):
    """The quotient name and dimension of a decorated-tree cell."""
    fam_t, groups, zero, one = label
    fam = tuple(sorted(fam_t))
    qtree = _quotient_tree(label)
    qgroups = tuple(sorted(tuple(sorted(g)) for g in groups))
    qdim = sum(out_degree(fam, iv) - 2
               for g in groups for iv in g) + len(groups)
    return (qtree, qgroups), qdim


def quotient_b(n, bound=DEFAULT_BOUND):
    """The quotient complex in degree n."""
    bar = assemble_b_bar(n, bound)
    return quotient_complex(bar, quotient_label, name=f"b-pentagon({n})")


# ---------------------------------------------------------------------------
# Reading the quotient trees.

def _q_iter(node):
    yield node
    for c in tc.children(node):
        yield from _q_iter(c)


def quotient_cell_beads(qlabel):
    """(out-degree, kind) pairs for the bead vertices of a quotient cell."""
    qtree, _ = qlabel
    return [len(tc.children(v)) for v in _q_iter(qtree)
            if tc.kind(v) == "bead"]


def prime_factor_roots(qtree):
    """The prime factors: the subtrees under the low vertex, if present."""
    if tc.kind(qtree) == LOW:
        return list(tc.children(qtree))
    return [qtree]


def _factor_weight(node):
    return sum(len(tc.children(v)) - 1 for v in _q_iter(node)
               if tc.kind(v) == "bead")


def in_b_round_stage(qlabel, stage):
    """Every bead has at most ``stage`` outgoing edges."""
    return all(out <= stage for out in quotient_cell_beads(qlabel))


def in_b_sum_stage(qlabel, stage):
    """Each prime factor satisfies sum(out - 1) <= stage - 1 over beads."""
    qtree, _ = qlabel
    return all(_factor_weight(f) <= stage - 1
               for f in prime_factor_roots(qtree))


def in_b_half_stage(qlabel, stage):
    """Between stages: the sum bound at ``stage``, fan-out at stage - 1."""
    return in_b_sum_stage(qlabel, stage) and in_b_round_stage(qlabel,
                                                              stage - 1)


B_STAGE_RULES = {
    "round": in_b_round_stage,
    "sum": in_b_sum_stage,
    "half": in_b_half_stage,
}


def b_of_stage(stage, n, rule="round", bound=DEFAULT_BOUND):
    """Stage subcomplex of the degree-n quotient."""
    member = B_STAGE_RULES[rule]
    cx = quotient_b(n, bound)
    labels = [c.label for c in cx.cells if member(c.label, stage)]
    return cx.subcomplex(labels, name=f"b-pentagon-{rule}({stage};{n})")


def b_filtrations(stage, n, bound=DEFAULT_BOUND):
    """The three stage families, with the inclusions asserted."""
    out = {rule: b_of_stage(stage, n, rule, bound)
           for rule in ("round", "sum", "half")}
    sum_labels = {c.label for c in out["sum"].cells}
    round_labels = {c.label for c in out["round"].cells}
    half_labels = {c.label for c in out["half"].cells}
    assert sum_labels <= round_labels
    assert half_labels <= sum_labels
    return out


# ---------------------------------------------------------------------------
# Actions of the association operad on decorated cells.

def _shift_interval(iv, at, by):
    lo, hi = iv
    return (lo + by if lo > at else lo, hi + by if hi >= at else hi)


def _shift_label_parts(label, at, by):
    fam_t, groups, zero, one = label
    move = lambda ivs: tuple(_shift_interval(iv, at, by) for iv in ivs)
    return (move(fam_t), tuple(move(g) for g in groups), move(zero),
            move(one))


def b_left_by(op_family, p, label):
    """Graft the cell into leaf p of an operation tree; pin the tree at 0."""
    op_fam, k = validate_family(op_family)
    if not 1 <= p <= k:
        raise ValueError("slot out of range")
    fam_t, groups, zero, one = label
    n = family_leaf_count(fam_t) if fam_t else 1
    cell_fam = tuple((lo + p - 1, hi + p - 1) for lo, hi in fam_t)
    shift = lambda ivs: tuple((lo + p - 1, hi + p - 1) for lo, hi in ivs)
    op_shifted = tuple(_shift_interval(iv, p, n - 1) for iv in op_fam)
    new_fam = tuple(sorted(set(op_shifted) | set(cell_fam)))
    new_zero = tuple(sorted(set(op_shifted) | set(shift(zero))))
    return _canon(new_fam, tuple(shift(g) for g in groups), new_zero,
                  shift(one))


def b_left(k, p, label):
    """Graft the cell into slot p of the k-star; the new root pins at 0."""
    if k < 1:
        raise ValueError("the acting operation needs at least one input")
    if k == 1:
        return _canon(*label)
    return b_left_by(((1, k),), p, label)


def b_right(label, q, j):
    """Graft the j-star at leaf q of the cell; the new bead pins at 1."""
    if j < 1:
        raise ValueError("the grafted operation needs at least one input")
    fam_t, groups, zero, one = label
    n = family_leaf_count(fam_t) if fam_t else 1
    if not 1 <= q <= n:
        raise ValueError("leaf out of range")
    if j == 1:
        return _canon(*label)
    shifted = _shift_label_parts(label, q, j - 1)
    fam_s, groups_s, zero_s, one_s = shifted
    new_iv = (q, q + j - 1)
    new_fam = set(fam_s) | {new_iv}
    if len(fam_s) != len(new_fam) - 1:
        raise AssertionError("grafted interval collides")
    if n == 1:
        return _canon(new_fam, groups_s, zero_s, (new_iv,))
    return _canon(new_fam, groups_s, zero_s, tuple(one_s) + (new_iv,))


# ---------------------------------------------------------------------------
# Carrier onto the cube model.

_GAP_OF_KIND = {"bead": "f", LOW: "1", HIGH: "0"}


def b_carrier(qlabel):
    """The cube face whose interior holds the open quotient cell.

    Gap i takes its letter from the kind of the deepest common ancestor
    of leaves i and i + 1: a surviving bead gives a free gap, the low
    vertex a unit gap, a high vertex a zero gap.
    """
    qtree, _ = qlabel
    n = tc.leaf_count(qtree)
    letters = [None] * (n - 1)

    def walk(node, offset):
        if tc.is_leaf(node):
            return offset + 1
        pos = offset
        boundaries = []
        for c in tc.children(node):
            pos = walk(c, pos)
            boundaries.append(pos)
        for b in boundaries[:-1]:
            letters[b - 1] = _GAP_OF_KIND[tc.kind(node)]
        return pos

    walk(qtree, 0)
    assert all(x is not None for x in letters)
    return tc.cube_face_tree("".join(letters))


# ---------------------------------------------------------------------------
# JSON forms.

def _interval_list(ivs):
    return [[lo, hi] for lo, hi in ivs]


def _interval_tuple(objs):
    return tuple((int(a), int(b)) for a, b in objs)


def b_cell_to_obj(label):
    fam_t, groups, zero, one = label
    return {
        "tree": tc._node_to_obj(family_to_tree(fam_t)),
        "groups": [_interval_list(g) for g in groups],
        "zero": _interval_list(zero),
        "one": _interval_list(one),
    }


def b_cell_from_obj(obj):
    fam = tree_to_family(tc._obj_to_node(obj["tree"]))
    groups = tuple(_interval_tuple(g) for g in obj["groups"])
    return _canon(fam, groups, _interval_tuple(obj["zero"]),
                  _interval_tuple(obj["one"]))


_Q_KINDS = ("leaf", "bead", LOW, HIGH)


def _qnode_to_obj(node):
    return {"kind": tc.kind(node),
            "children": [_qnode_to_obj(c) for c in tc.children(node)]}


def _qnode_from_obj(obj):
    k = obj["kind"]
    if k not in _Q_KINDS:
        raise ValueError(f"bad node kind {k!r}")
    if k == "leaf":
        return tc.leaf()
    return (k, tuple(_qnode_from_obj(c) for c in obj.get("children", [])))


def b_quotient_cell_to_obj(qlabel):
    qtree, groups = qlabel
    return {
        "tree": _qnode_to_obj(qtree),
        "groups": [_interval_list(g) for g in groups],
    }


def b_quotient_cell_from_obj(obj):
    qtree = _qnode_from_obj(obj["tree"])
    groups = tuple(sorted(_interval_tuple(g) for g in obj["groups"]))
    return (qtree, groups)


# ---------------------------------------------------------------------------
# A structured view of one cell.

class BPieceCell:
    """A decorated-tree cell split into its two coordinate directions."""

    __slots__ = ("family", "groups", "zero", "one", "n")

    def __init__(self, family, groups, zero, one):
        label = _canon(family, groups, zero, one)
        fam, n = validate_b_cell(label)
        self.family, self.groups, self.zero, self.one = label
        self.n = n

    @classmethod
    def from_label(cls, label):
        return cls(*label)

    @property
    def label(self):
        return (self.family, self.groups, self.zero, self.one)

    @property
    def assoc_dim(self):
        return sum(out_degree(self.family, iv) - 2 for iv in self.family)

    @property
    def height_dim(self):
        return len(self.groups)

    @property
    def dim(self):
        return self.assoc_dim + self.height_dim

    @property
    def is_top(self):
        return self.dim == self.n - 1

    def lies_in_piece(self, family):
        return lies_in_piece(self.label, family)

    def __repr__(self):
        return (f"BPieceCell(family={self.family!r}, groups={self.groups!r},"
                f" zero={self.zero!r}, one={self.one!r})")

"""Degeneracy-aware models: hairy configurations, metric trees, corked cells.

The classic interval and line models delete a point outright under the
nullary operation.  The models here make that deletion free: the nullary
operation plants a unit-length hair where the point stood, and only the
normalization rules (hairs shrinking to zero, collisions) ever remove
material.  Three point-level models are implemented:

``triangle-tilde``
    Configurations on [0, 1] with labeled points plus hairs growing from
    the open interior; a weak bimodule over the associative operations.

``square-tilde``
    Configurations on the line up to translation, points and hairs with
    consecutive gaps at most 1; a full bimodule with the empty
    configuration as unit.  When a hair disappears its two neighbor gaps
    merge to their maximum, matching the classic line deletion rule.

``pentagon-tilde``
    Planar metric trees: inner vertices of any valence, internal edges
    with lengths in [0, 1]; grafting glues with a length-1 edge.  Trees
    factor uniquely into prime components along length-1 edges.

On the cell side, every decorated model is generated by corked cells: a
base-model generating disc together with a choice of entries capped by
segments of lengths in [0, 1].  ``GeneratingCellKey`` records such a cell,
``tilde_census`` enumerates them per stage, and ``tilde_schedule`` gives
the closed-form attachment list the censuses must reproduce.  ``sigma_cork``
realizes corked data as actual points (metric trees, or bead trees for the
two-level construction), including the cut-or-bead case split with its
boundary agreement.

All coordinates are exact rationals.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import b_construction as bc
from . import classic_models as cm
from . import wb_construction as wb
from .classic_models import ModelId

DEFAULT_BOUND = 6
DEFAULT_SEED = 20260815

INTERVAL = "interval"
LINE = "line"

TRIANGLE_TILDE = ModelId("triangle-tilde", "weak-bimodule", "assoc")
SQUARE_TILDE = ModelId("square-tilde", "bimodule", "assoc")
PENTAGON_TILDE = ModelId("pentagon-tilde", "operad", "assoc")
WB_SQUARE_TILDE = ModelId("wb-square-tilde", "weak-bimodule", "assoc")
B_PENTAGON_TILDE = ModelId("b-pentagon-tilde", "bimodule", "assoc")

TILDE_MODELS = {m.name: m for m in (TRIANGLE_TILDE, SQUARE_TILDE,
                                    PENTAGON_TILDE, WB_SQUARE_TILDE,
                                    B_PENTAGON_TILDE)}


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {x!r}")


def _model_name(model):
    return getattr(model, "name", model)


# ---------------------------------------------------------------------------
# hairy configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HairyConfig:
    """Labeled points plus hairs on the interval or on the line.

    ``points`` are nondecreasing positions (coincident labeled points are
    allowed); ``hairs`` are (position, length) pairs sorted by position.
    The constructor admits raw data (zero-length hairs, hairs colliding
    with points or each other); :func:`normalize_hairy` resolves those.
    Positions outside the ambient domain are rejected outright.
    """
    ambient: str
    points: tuple
    hairs: tuple

    def __post_init__(self):
        if self.ambient not in (INTERVAL, LINE):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        object.__setattr__(self, "points",
                           tuple(_frac(p) for p in self.points))
        object.__setattr__(self, "hairs",
                           tuple((_frac(p), _frac(l)) for p, l in self.hairs))
        prev = None
        for p in self.points:
            if prev is not None and p < prev:
                raise ValueError("points must be nondecreasing")
            prev = p
        prev = None
        for p, l in self.hairs:
            if prev is not None and p < prev:
                raise ValueError("hairs must be sorted by position")
            prev = p
            if not 0 <= l <= 1:
                raise ValueError("hair lengths must lie in [0, 1]")
        if self.ambient == INTERVAL:
            for p in self.positions():
                if not 0 <= p <= 1:
                    raise ValueError("positions outside the ambient domain")
        else:
            s = self.sites()
            for a, b in zip(s, s[1:]):
                if b - a > 1:
                    raise ValueError("line gaps must be at most 1")

    def positions(self):
        return tuple(self.points) + tuple(p for p, _ in self.hairs)

    def sites(self):
        """Distinct geometric positions, left to right."""
        return tuple(sorted(set(self.positions())))

    @property
    def degree(self):
        return len(self.points)

    def is_empty(self):
        return not self.points and not self.hairs


def empty_config(ambient=LINE):
    return HairyConfig(ambient, (), ())


def hairy_moves(c):
    """Normalization moves applicable to ``c``, in deterministic order.

    Move kinds: ("drop-zero", pos, length) removes a zero-length hair,
    ("endpoint", pos, length) an interval hair sitting on 0 or 1,
    ("on-point", pos, length) a hair colliding with a labeled point,
    ("shorter-hair", pos, length) the shorter of two colliding hairs.
    """
    moves = []
    point_set = set(c.points)
    by_pos = {}
    for p, l in c.hairs:
        by_pos.setdefault(p, []).append(l)
    for p, lengths in sorted(by_pos.items()):
        lengths = sorted(lengths)
        for l in lengths:
            if l == 0:
                moves.append(("drop-zero", p, l))
            elif c.ambient == INTERVAL and (p == 0 or p == 1):
                moves.append(("endpoint", p, l))
            elif p in point_set:
                moves.append(("on-point", p, l))
        if len(lengths) > 1:
            # all but the longest are doomed; one move removes one hair
            for l in lengths[:-1]:
                moves.append(("shorter-hair", p, l))
    return moves


def apply_hairy_move(c, move):
    """Remove the hair named by ``move``; on the line, merge its gaps."""
    _, pos, length = move
    hairs = list(c.hairs)
    try:
        hairs.remove((pos, length))
    except ValueError:
        raise ValueError(f"no hair at {move!r}") from None
    if c.ambient == INTERVAL:
        return HairyConfig(INTERVAL, c.points, tuple(hairs))
    # On the line the gap to the left and the gap to the right of the
    # vanished hair merge to their maximum, pulling the right part closer.
    others = sorted(set(c.points) | {p for p, _ in hairs})
    left = max((s for s in others if s < pos), default=None)
    right = min((s for s in others if s > pos), default=None)
    shift = Fraction(0)
    if left is not None and right is not None and pos not in others:
        shift = min(pos - left, right - pos)
    points = tuple(p - shift if p > pos else p for p in c.points)
    hairs = tuple((p - shift if p > pos else p, l) for p, l in hairs)
    return HairyConfig(LINE, points, hairs)


def normalize_hairy(c):
    """Resolve every collision and zero-length hair; canonical form.

    Leftmost move first; the result does not depend on the order (the
    merge rule takes maxima, which associate).  Line configurations are
    translated so their leftmost site is 0.
    """
    while True:
        moves = hairy_moves(c)
        if not moves:
            break
        c = apply_hairy_move(c, moves[0])
    if c.ambient == LINE and (c.points or c.hairs):
        base = min(c.positions())
        if base != 0:
            c = HairyConfig(LINE,
                            tuple(p - base for p in c.points),
                            tuple((p - base, l) for p, l in c.hairs))
    return c


def _translate(c, offset):
    return HairyConfig(c.ambient,
                       tuple(p + offset for p in c.points),
                       tuple((p + offset, l) for p, l in c.hairs))


def act_tilde(model, side, op, slot, c):
    """Apply the ``op``-ary associative operation to a hairy configuration.

    ``triangle-tilde``: side "left" inserts slot-1 labeled points at 0 and
    op-slot at 1; side "right" duplicates point ``slot``, and the nullary
    operation replaces an isolated interior point by a hair of length 1
    (a point on an endpoint or inside a cluster is simply forgotten).

    ``square-tilde``: side "left" takes a sequence of ``op`` configurations
    and concatenates the nonempty ones at gap 1 (slot is ignored); side
    "right" duplicates point ``slot`` at distance 0, and the nullary
    operation caps an isolated point with a hair of length 1 (a clustered
    point is forgotten).  Results are normalized.
    """
    name = _model_name(model)
    if name == TRIANGLE_TILDE.name:
        if side == "left":
            if not 1 <= slot <= op:
                raise ValueError(f"slot {slot} out of range 1..{op}")
            points = ((Fraction(0),) * (slot - 1) + c.points
                      + (Fraction(1),) * (op - slot))
            return normalize_hairy(HairyConfig(INTERVAL, points, c.hairs))
        if side == "right":
            return _act_right(c, op, slot, interior=_interval_interior)
        raise ValueError(f"unknown side {side!r}")
    if name == SQUARE_TILDE.name:
        if side == "left":
            factors = [normalize_hairy(f) for f in c]
            if len(factors) != op:
                raise ValueError(f"the {op}-ary operation needs {op} factors")
            parts = [f for f in factors if not f.is_empty()]
            if not parts:
                return empty_config(LINE)
            out = parts[0]
            for f in parts[1:]:
                offset = max(out.positions()) + 1
                f = _translate(f, offset)
                out = HairyConfig(LINE,
                                  out.points + f.points,
                                  out.hairs + f.hairs)
            return normalize_hairy(out)
        if side == "right":
            return _act_right(c, op, slot, interior=lambda c, p: True)
        raise ValueError(f"unknown side {side!r}")
    raise ValueError(f"{name!r} has no hairy configurations")


def _interval_interior(c, p):
    return 0 < p < 1


def _act_right(c, op, slot, interior):
    if not 1 <= slot <= len(c.points):
        raise ValueError(f"slot {slot} out of range 1..{len(c.points)}")
    p = c.points[slot - 1]
    rest = c.points[:slot - 1] + c.points[slot:]
    if op == 0:
        hairs = c.hairs
        if interior(c, p) and p not in rest:
            hairs = tuple(sorted(hairs + ((p, Fraction(1)),)))
        return normalize_hairy(HairyConfig(c.ambient, rest, hairs))
    points = c.points[:slot - 1] + (p,) * op + c.points[slot:]
    return normalize_hairy(HairyConfig(c.ambient, points, c.hairs))


def hairy_stage(c):
    """Filtration stage of a configuration.

    Interval: the number of geometrically distinct positions strictly
    inside (0, 1), hairs included, coincident points counted once.
    Line: split at gaps of exactly 1 and take the largest block's count
    of distinct sites (the empty configuration sits at stage 0).
    """
    c = normalize_hairy(c)
    if c.ambient == INTERVAL:
        return len({p for p in c.positions() if 0 < p < 1})
    sites = c.sites()
    if not sites:
        return 0
    best = cur = 1
    for a, b in zip(sites, sites[1:]):
        cur = 1 if b - a == 1 else cur + 1
        best = max(best, cur)
    return best


def rand_hairy(rng, n, ambient=INTERVAL, max_hairs=2, den=12):
    """A random normalized configuration with ``n`` labeled points."""
    if ambient == INTERVAL:
        points = sorted(cm.rand_fraction(rng, den) for _ in range(n))
    else:
        points = []
        pos = Fraction(0)
        for i in range(n):
            if i > 0:
                pos += Fraction(rng.randint(0, den), den)
            points.append(pos)
    hairs = []
    taken = set(points)
    for _ in range(rng.randint(0, max_hairs)):
        if ambient == INTERVAL:
            p = Fraction(rng.randint(1, den - 1), den)
            if p in taken:
                continue
        else:
            sites = sorted(taken | {q for q, _ in hairs})
            if sites:
                a = rng.choice(sites)
                p = a + Fraction(rng.randint(1, den - 1), den * 2)
                near = [s for s in sites if s > a]
                if near and p >= near[0]:
                    continue
            else:
                p = Fraction(0)
        if p in taken or any(p == q for q, _ in hairs):
            continue
        hairs.append((p, Fraction(rng.randint(1, den), den)))
    cfg = HairyConfig(ambient, tuple(points), tuple(sorted(hairs)))
    return normalize_hairy(cfg)


def hairy_ops(model):
    """Adapter exposing the actions in the shape the axiom suites expect."""
    name = _model_name(model)
    if name == TRIANGLE_TILDE.name:
        class Ops:
            left = staticmethod(
                lambda k, p, m: act_tilde(TRIANGLE_TILDE, "left", k, p, m))
            right = staticmethod(
                lambda m, i, k: act_tilde(TRIANGLE_TILDE, "right", k, i, m))
        return Ops()
    if name == SQUARE_TILDE.name:
        class Ops:
            unit = True
            left = staticmethod(
                lambda k, xs: act_tilde(SQUARE_TILDE, "left", k, None, xs))
            right = staticmethod(
                lambda m, i, k: act_tilde(SQUARE_TILDE, "right", k, i, m))
        return Ops()
    raise ValueError(f"{name!r} has no hairy actions")


# ---------------------------------------------------------------------------
# metric trees
# ---------------------------------------------------------------------------

def _vnode(children):
    return ("vert", tuple(children))


_LEAF = ("leaf",)


def _check_node(node):
    if node == _LEAF:
        return node
    if not (isinstance(node, tuple) and len(node) == 2 and node[0] == "vert"):
        raise ValueError(f"bad metric node {node!r}")
    out = []
    for child, length in node[1]:
        child = _check_node(child)
        if child == _LEAF:
            if length is not None:
                raise ValueError("leaf edges carry no length")
            out.append((child, None))
        else:
            length = _frac(length)
            if not 0 <= length <= 1:
                raise ValueError("edge lengths must lie in [0, 1]")
            out.append((child, length))
    return _vnode(out)


@dataclass(frozen=True)
class MetricTree:
    """A planar rooted tree with lengths on vertex-to-vertex edges.

    The root has valence one: the whole tree hangs from a single root
    edge, which carries no length, and neither do the leaf edges.  Inner
    vertices may have any number of children, including none (a cap).
    Normal form: no zero-length edge, no inner vertex with exactly one
    child.
    """
    root: tuple

    def __post_init__(self):
        object.__setattr__(self, "root", _check_node(self.root))

    @classmethod
    def identity(cls):
        return cls(_LEAF)

    @classmethod
    def point(cls):
        return cls(_vnode(()))

    @classmethod
    def corolla(cls, k):
        return cls(_vnode(((_LEAF, None),) * k))

    @property
    def leaf_count(self):
        def count(node):
            if node == _LEAF:
                return 1
            return sum(count(ch) for ch, _ in node[1])
        return count(self.root)

    @property
    def univalent_count(self):
        def count(node):
            if node == _LEAF:
                return 0
            own = 1 if not node[1] else 0
            return own + sum(count(ch) for ch, _ in node[1])
        return count(self.root)

    def is_identity(self):
        return self.root == _LEAF

    def edge_lengths(self):
        out = []

        def walk(node):
            if node == _LEAF:
                return
            for ch, length in node[1]:
                if length is not None:
                    out.append(length)
                walk(ch)
        walk(self.root)
        return tuple(out)

    def is_prime(self):
        return (not self.is_identity()
                and all(l not in (0, 1) for l in self.edge_lengths())
                and not metric_moves(self))


def _node_at(root, path):
    node = root
    for i in path:
        node = node[1][i][0]
    return node


def metric_moves(x):
    """Normalization moves: ("contract", path) for a zero-length edge into
    the vertex at ``path``, ("smooth", path) for a one-child vertex there."""
    moves = []

    def walk(node, path):
        if node == _LEAF:
            return
        if len(node[1]) == 1:
            moves.append(("smooth", path))
        for i, (ch, length) in enumerate(node[1]):
            if length == 0:
                moves.append(("contract", path + (i,)))
            walk(ch, path + (i,))
    walk(x.root, ())
    return sorted(moves)


def apply_metric_move(x, move):
    kind, path = move

    def rebuild(node, path, fn):
        if not path:
            return fn(node)
        i = path[0]
        kids = list(node[1])
        child, length = kids[i]
        kids[i] = (rebuild(child, path[1:], fn), length)
        return _vnode(kids)

    if kind == "contract":
        parent_path, i = path[:-1], path[-1]

        def contract(parent):
            kids = list(parent[1])
            child, length = kids[i]
            if length != 0:
                raise ValueError("only zero-length edges contract")
            kids[i:i + 1] = list(child[1])
            return _vnode(kids)
        return MetricTree(rebuild(x.root, parent_path, contract))
    if kind == "smooth":
        def smooth(node):
            if len(node[1]) != 1:
                raise ValueError("only one-child vertices smooth away")
            return node[1][0]          # (child, its incoming length)
        if not path:
            child, _ = smooth(_node_at(x.root, ()))
            return MetricTree(child)   # fuses with the root edge, no length
        parent_path, i = path[:-1], path[-1]

        def fix(parent):
            kids = list(parent[1])
            node, up_len = kids[i]
            child, down_len = smooth(node)
            if child == _LEAF:
                kids[i] = (child, None)      # fuses into a leaf edge
            else:
                kids[i] = (child, max(up_len, down_len))
            return _vnode(kids)
        return MetricTree(rebuild(x.root, parent_path, fix))
    raise ValueError(f"unknown move {move!r}")


def normalize_metric(x):
    """Contract zero-length edges and smooth one-child vertices, to a
    fixpoint.  The result is independent of the order the moves fire."""
    while True:
        moves = metric_moves(x)
        if not moves:
            return x
        x = apply_metric_move(x, moves[0])


def compose_metric(x, i, y):
    """Graft ``y`` into leaf ``i`` of ``x`` along an edge of length 1."""
    n = x.leaf_count
    if not 1 <= i <= n:
        raise ValueError(f"slot {i} out of range 1..{n}")
    if y.is_identity():
        return normalize_metric(x)
    if x.is_identity():
        return normalize_metric(y)
    counter = itertools.count(1)

    def rebuild(node):
        if node == _LEAF:
            raise AssertionError("rebuild starts at a vertex")
        kids = []
        for ch, length in node[1]:
            if ch == _LEAF:
                if next(counter) == i:
                    kids.append((y.root, Fraction(1)))
                else:
                    kids.append((ch, length))
            else:
                kids.append((rebuild(ch), length))
        return _vnode(kids)
    return normalize_metric(MetricTree(rebuild(x.root)))


@dataclass(frozen=True)
class PrimeDecomposition:
    """A prime outer factor plus grafts, slot-indexed in the outer factor."""
    root: "MetricTree"
    grafts: tuple    # ((slot, PrimeDecomposition), ...)

    def recompose(self):
        t = self.root
        for slot, sub in sorted(self.grafts, reverse=True):
            t = compose_metric(t, slot, sub.recompose())
        return t

    def components(self):
        yield self.root
        for _, sub in self.grafts:
            yield from sub.components()


def _decompose(x, cut):
    """Split ``x`` at the edges selected by ``cut(child_node, length)``."""
    subs = []
    counter = itertools.count(1)

    def rebuild(node):
        kids = []
        for ch, length in node[1]:
            if ch == _LEAF:
                next(counter)
                kids.append((ch, length))
            elif cut(ch, length):
                slot = next(counter)
                subs.append((slot, _decompose(MetricTree(ch), cut)))
                kids.append((_LEAF, None))
            else:
                kids.append((rebuild(ch), length))
        return _vnode(kids)
    outer = MetricTree(rebuild(x.root))
    return PrimeDecomposition(outer, tuple(subs))


def prime_decompose(x):
    """Cut at every length-1 edge; errors on the identity tree."""
    x = normalize_metric(x)
    if x.is_identity():
        raise ValueError("the identity tree has no prime decomposition")
    return _decompose(x, lambda ch, length: length == 1)


def filtration_index(x):
    """Largest (leaves + caps) over the prime components; identity is 0."""
    x = normalize_metric(x)
    if x.is_identity():
        return 0
    return max(c.leaf_count + c.univalent_count
               for c in prime_decompose(x).components())


def is_quasi_prime(x):
    """No length-1 edge except cap stubs, and not the bare cap itself."""
    x = normalize_metric(x)
    if x.is_identity() or x == MetricTree.point():
        return False

    def ok(node):
        if node == _LEAF:
            return True
        for ch, length in node[1]:
            if length == 1 and ch[1]:
                return False
            if not ok(ch):
                return False
        return True
    return ok(x.root)


def quasi_prime_index(x):
    """Largest cap count over the quasi-prime components.

    Cutting happens only at length-1 edges whose lower vertex has
    children; the identity and the bare cap sit at index 0 by convention.
    """
    x = normalize_metric(x)
    if x.is_identity() or x == MetricTree.point():
        return 0
    dec = _decompose(x, lambda ch, length: length == 1 and bool(ch[1]))
    return max(c.univalent_count for c in dec.components())


def metric_stage(x):
    return filtration_index(x)


def in_tilde_stage(model, stage, obj):
    """Whether a point of the model lies in the given filtration stage."""
    name = _model_name(model)
    if name in (TRIANGLE_TILDE.name, SQUARE_TILDE.name):
        return hairy_stage(obj) <= stage
    if name == PENTAGON_TILDE.name:
        return filtration_index(obj) <= stage
    raise ValueError(f"no point-level filtration for {name!r}")


def rand_metric_tree(rng, max_leaves=6, p_cap=Fraction(1, 5), den=8):
    """A random normalized metric tree, biased toward composite trees."""
    budget = rng.randint(1, max_leaves)

    def grow(budget, depth):
        if depth > 0 and (budget == 0 or rng.random() < 0.35):
            if budget >= 1 and rng.random() >= float(p_cap):
                return _LEAF, budget - 1
            return _vnode(()), budget
        width = rng.randint(1 if depth else 2, 3)
        kids = []
        for _ in range(width):
            child, budget = grow(budget, depth + 1)
            if child == _LEAF:
                kids.append((child, None))
            else:
                pick = rng.randint(0, den)
                kids.append((child, Fraction(pick, den)))
        return _vnode(kids), budget

    node, _ = grow(budget, 0)
    t = normalize_metric(MetricTree(node))
    if t.is_identity():
        t = MetricTree.corolla(2)
    return t


# ---------------------------------------------------------------------------
# sigma: realizing corked data as points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BPentPoint:
    """A point of the two-level model: a bead tree with one operation and
    one height per bead, heights nondecreasing from the root down."""
    n: int
    family: tuple
    beads: tuple     # ((interval, MetricTree, height), ...) sorted

    def __post_init__(self):
        bc.validate_family(self.family, self.n)
        entries = tuple(sorted(self.beads))
        object.__setattr__(self, "beads", entries)
        table = {iv: (x, t) for iv, x, t in entries}
        if set(table) != set(self.family):
            raise ValueError("one operation and height per bead, exactly")
        for iv in self.family:
            x, t = table[iv]
            if x.leaf_count != bc.out_degree(self.family, iv):
                raise ValueError(f"operation arity mismatch at {iv}")
            if not 0 <= t <= 1:
                raise ValueError("heights must lie in [0, 1]")
            parent = bc.bead_parent(self.family, iv)
            if parent is not None and table[parent][1] > t:
                raise ValueError("heights must not decrease from the root")

    def bead_table(self):
        return {iv: (x, t) for iv, x, t in self.beads}


def _bead_node(children, x, t):
    return ("bead", tuple(children), x, t)


@dataclass(frozen=True)
class BeadTreePoint:
    """A point of the corked two-level model: beads carry metric trees
    (caps allowed) and heights; leaves are the free entries."""
    root: tuple

    def canonical(self):
        return BeadTreePoint(_canonical_bead(self.root))

    def degree(self):
        def count(node):
            if node == _LEAF:
                return 1
            return sum(count(ch) for ch in node[1])
        return count(self.root)


def _canonical_bead(node):
    """Merge height-equal bead chains and normalize the carried trees.

    A bead whose height is pinned to 0 or 1 forgets its operation: the
    pinned relation identifies all operations at that height, so the
    corolla (or the bare cap, at arity 0) represents the class.
    """
    if node == _LEAF:
        return node
    _, children, x, t = node
    children = [_canonical_bead(ch) for ch in children]
    x = normalize_metric(x)
    while True:
        for i, ch in enumerate(children):
            if ch != _LEAF and ch[3] == t:
                _, sub, x2, _ = ch
                x = compose_metric(x, i + 1, x2)
                children[i:i + 1] = list(sub)
                break
        else:
            break
    if t in (0, 1):
        k = len(children)
        if k == 0:
            x = MetricTree.point()
        elif k == 1:
            x = MetricTree.identity()
        else:
            x = MetricTree.corolla(k)
    return _bead_node(children, x, t)


def sigma_cork(target, base, alpha, taus):
    """Cap the entries listed in ``alpha`` with segments of lengths ``taus``.

    ``pentagon-tilde``: ``base`` is a metric tree; each listed leaf turns
    into a cap hanging by an edge of the given length, and the result is
    normalized (length 1 is exactly grafting the bare cap; length 0
    deletes the entry but can leave a cap behind after smoothing).

    ``b-pentagon-tilde``: ``base`` is a :class:`BPentPoint`.  A capped
    leaf whose segment is strictly shorter than its bead's height is cut
    into that bead's operation, rescaled by the height; otherwise the
    leaf becomes a cap bead sitting at height equal to the segment
    length.  At equality the two descriptions agree through the
    height-equal merge relation, and the cap branch is taken.
    """
    alpha = tuple(alpha)
    taus = tuple(_frac(t) for t in taus)
    if len(alpha) != len(taus):
        raise ValueError("one segment length per capped entry")
    if any(not 0 <= t <= 1 for t in taus):
        raise ValueError("segment lengths must lie in [0, 1]")
    if any(b <= a for a, b in zip(alpha, alpha[1:])):
        raise ValueError("capped entries must be strictly increasing")
    name = _model_name(target)
    if name == PENTAGON_TILDE.name:
        n = base.leaf_count
        if alpha and not 1 <= alpha[0] <= alpha[-1] <= n:
            raise ValueError("capped entry out of range")
        tau_of = dict(zip(alpha, taus))
        counter = itertools.count(1)

        def rebuild(node):
            if node == _LEAF:
                return node
            kids = []
            for ch, length in node[1]:
                if ch == _LEAF:
                    s = next(counter)
                    if s in tau_of:
                        kids.append((_vnode(()), tau_of[s]))
                    else:
                        kids.append((ch, length))
                else:
                    kids.append((rebuild(ch), length))
            return _vnode(kids)
        if base.is_identity():
            if alpha:
                return normalize_metric(MetricTree.point())
            return base
        return normalize_metric(MetricTree(rebuild(base.root)))
    if name == B_PENTAGON_TILDE.name:
        return _b_sigma(base, alpha, taus)
    raise ValueError(f"{name!r} has no corking map")


def _b_sigma(base, alpha, taus):
    if alpha and not 1 <= alpha[0] <= alpha[-1] <= base.n:
        raise ValueError("capped entry out of range")
    tau_of = dict(zip(alpha, taus))
    table = base.bead_table()

    def owner(s):
        best = None
        for iv in base.family:
            if iv[0] <= s <= iv[1]:
                if best is None or iv[1] - iv[0] < best[1] - best[0]:
                    best = iv
        return best

    cut = {s for s in alpha
           if owner(s) is not None and tau_of[s] < table[owner(s)][1]}

    def build(iv):
        children = []
        positions = []
        for pos, (kind, val) in enumerate(bc.child_items(base.family, iv),
                                          start=1):
            if kind == "leaf":
                if val in cut:
                    positions.append((pos, tau_of[val]))
                elif val in tau_of:
                    children.append(_bead_node((), MetricTree.point(),
                                               tau_of[val]))
                else:
                    children.append(_LEAF)
            else:
                children.append(build(val))
        x, t = table[iv]
        if positions:
            x = sigma_cork(PENTAGON_TILDE, x,
                           tuple(p for p, _ in positions),
                           tuple(tau / t for _, tau in positions))
        return _bead_node(children, x, t)

    if not base.family:
        # a single free entry and no bead: capping it leaves a lone cap bead
        if 1 in tau_of:
            root = _bead_node((), MetricTree.point(), tau_of[1])
        else:
            root = _LEAF
        return BeadTreePoint(root).canonical()
    top = max(base.family, key=lambda iv: iv[1] - iv[0])
    return BeadTreePoint(build(top)).canonical()


# ---------------------------------------------------------------------------
# generating cells, censuses, schedules
# ---------------------------------------------------------------------------

TAGS = ("triangle", "square", "pentagon", "wb-square", "b-pentagon")

# dimension of the base generating disc at arity k, minus k (offset form)
_DIM_OFFSET = {"triangle": 0, "wb-square": 0,
               "square": -1, "b-pentagon": -1,
               "pentagon": -2}

# smallest arity at which the base model has a generating disc
_MIN_ARITY = {"triangle": 0, "wb-square": 0,
              "square": 1, "b-pentagon": 1,
              "pentagon": 2}


@functools.lru_cache(maxsize=None)
def _base_top_dim(tag, k):
    """Top generating-cell dimension of the base model, read off the
    actual complexes (the independent route; the closed forms must agree)."""
    if tag == "triangle":
        return max(c.dim for c in cm.build_complex("triangle", k).cells)
    if tag == "square":
        return max(c.dim for c in cm.build_complex("square-unit", k).cells)
    if tag == "pentagon":
        return max(c.dim for c in cm.build_complex("pentagon", k).cells)
    if tag == "wb-square":
        if k == 0:
            return 0    # the empty configuration is a single point
        return max(c.dim for c in wb.quotient_wb(k).cells)
    if tag == "b-pentagon":
        return max(c.dim for c in bc.quotient_b(k).cells)
    raise ValueError(f"unknown base tag {tag!r}")


def valid_cork_key(tag, n, m):
    """Whether (n, m) indexes a generating cell of the corked model."""
    if tag not in TAGS:
        raise ValueError(f"unknown base tag {tag!r}")
    if n < 0 or m < 0:
        return False
    if tag == "pentagon" and (n, m) == (0, 1):
        return True     # the bare cap: the unit's cork collapses to a point
    return n + m >= _MIN_ARITY[tag]


@dataclass(frozen=True)
class GeneratingCellKey:
    """A corked generating cell: base tag, free arity n, cork count m,
    and the strictly increasing cork positions alpha inside 1..n+m."""
    tag: str
    n: int
    m: int
    alpha: tuple

    def __post_init__(self):
        if not valid_cork_key(self.tag, self.n, self.m):
            raise ValueError(f"no generating cell at {self!r}")
        alpha = tuple(int(a) for a in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) != self.m or len(set(alpha)) != self.m:
            raise ValueError("alpha must list m distinct positions")
        if alpha and not (1 <= alpha[0] and alpha[-1] <= self.n + self.m
                          and all(a < b for a, b in zip(alpha, alpha[1:]))):
            raise ValueError("alpha must increase inside 1..n+m")

    @property
    def stage(self):
        return self.n + self.m

    @property
    def degree(self):
        return self.n

    @property
    def dim(self):
        if self.tag == "pentagon" and (self.n, self.m) == (0, 1):
            # capping the unit's single entry gives the bare cap; the
            # would-be cork coordinate smooths away, leaving a point
            return 0
        return _base_top_dim(self.tag, self.stage) + self.m


_TAG_OF_MODEL = {TRIANGLE_TILDE.name: "triangle",
                 SQUARE_TILDE.name: "square",
                 PENTAGON_TILDE.name: "pentagon",
                 WB_SQUARE_TILDE.name: "wb-square",
                 B_PENTAGON_TILDE.name: "b-pentagon"}


def tilde_census(model, stage):
    """Every generating cell attached at the given stage, by direct
    enumeration of cork positions over the base discs."""
    tag = _TAG_OF_MODEL[_model_name(model)]
    keys = []
    for m in range(stage + 1):
        n = stage - m
        if not valid_cork_key(tag, n, m):
            continue
        for alpha in itertools.combinations(range(1, stage + 1), m):
            keys.append(GeneratingCellKey(tag, n, m, alpha))
    return keys


@dataclass(frozen=True, order=True)
class ScheduleRecord:
    stage: int
    sub_stage: int
    degree: int
    dim: int
    count: int


def tilde_schedule(model, stage):
    """Closed-form attachment list through the given stage.

    Stage N splits into sub-stages i = 0..N attaching C(N, i) cells of
    dimension N+i+offset in degree N-i; records whose dimension would be
    negative do not exist (the base disc is missing at that arity).
    """
    name = _model_name(model)
    offset = _DIM_OFFSET[_TAG_OF_MODEL[name]]
    records = []
    for s in range(stage + 1):
        for i in range(s + 1):
            dim = s + i + offset
            if dim < 0:
                continue
            records.append(ScheduleRecord(s, i, s - i, dim, math.comb(s, i)))
    return records


def fine_b_pentagon_tilde_chambers(key):
    """The cut-or-cap chambers refining one corked two-level cell.

    The coarse cell at ``key`` is the base disc times a cork cube.  The
    realization map splits it along the walls "segment length equals the
    bead height": each subset S of the corks (those falling strictly
    below their bead) indexes one open chamber of the same dimension.
    """
    if key.tag != "b-pentagon":
        raise ValueError("chambers refine the two-level corked cells only")
    return [{"cut": subset, "capped": tuple(a for a in key.alpha
                                            if a not in subset),
             "dim": key.dim}
            for r in range(key.m + 1)
            for subset in itertools.combinations(key.alpha, r)]


# ---------------------------------------------------------------------------
# the two presentations of the corked one-level model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentifyRow:
    m: int
    alpha: tuple
    cork_side: GeneratingCellKey     # corked base disc
    assembled_side: tuple            # one-bead assembly label
    dim: int


@dataclass(frozen=True)
class IdentifyReport:
    degree: int
    rows: tuple
    one_to_one: bool
    unit_collapse_checked: bool

    def counts_by_stage(self):
        out = {}
        for row in self.rows:
            out[self.degree + row.m] = out.get(self.degree + row.m, 0) + 1
        return out


def wb_tilde_identify(n, bound=DEFAULT_BOUND):
    """Match the corked-disc cells against the assembled presentation.

    Degree-n generating cells of the corked one-level model are corked
    discs (n, m, alpha).  In the assembled presentation the same cell is
    a single bead carrying the top line-model cell of arity n+m with
    hairs at the alpha positions and a free height.  Tuples with more
    beads all contain a unit factor, which the deletion relation removes;
    the point-level witness is that concatenating with the empty
    configuration is the identity.
    """
    rows = []
    seen = set()
    for m in range(0, max(bound - n, 0) + 1):
        if not valid_cork_key("wb-square", n, m):
            continue
        for alpha in itertools.combinations(range(1, n + m + 1), m):
            key = GeneratingCellKey("wb-square", n, m, alpha)
            assembled = ("one-bead", n + m, alpha)
            if assembled in seen:
                raise AssertionError("assembled labels must be distinct")
            seen.add(assembled)
            rows.append(IdentifyRow(m, alpha, key, assembled, key.dim))
    probe = rand_hairy(random.Random(DEFAULT_SEED), 2, LINE)
    collapse = (act_tilde(SQUARE_TILDE, "left", 2, None,
                          [probe, empty_config(LINE)]) == probe
                and act_tilde(SQUARE_TILDE, "left", 2, None,
                              [empty_config(LINE), probe]) == probe)
    return IdentifyReport(n, tuple(rows), len(rows) == len(seen), collapse)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def _frac_str(x):
    return str(Fraction(x))


def hairy_to_obj(c):
    return {"ambient": c.ambient,
            "points": [_frac_str(p) for p in c.points],
            "hairs": [[_frac_str(p), _frac_str(l)] for p, l in c.hairs]}


def hairy_from_obj(obj):
    return HairyConfig(obj["ambient"],
                       tuple(Fraction(p) for p in obj["points"]),
                       tuple((Fraction(p), Fraction(l))
                             for p, l in obj["hairs"]))


def metric_to_obj(x):
    def conv(node):
        if node == _LEAF:
            return {"kind": "leaf"}
        out = []
        for ch, length in node[1]:
            entry = {"tree": conv(ch)}
            if length is not None:
                entry["len"] = _frac_str(length)
            out.append(entry)
        return {"kind": "vert", "children": out}
    return conv(x.root)


def metric_from_obj(obj):
    def conv(node):
        if node["kind"] == "leaf":
            return _LEAF
        kids = []
        for entry in node["children"]:
            ch = conv(entry["tree"])
            length = Fraction(entry["len"]) if "len" in entry else None
            kids.append((ch, length))
        return _vnode(kids)
    return MetricTree(conv(obj))

"""Planar trees with three vertex kinds and the grammars of the face families.

Trees are immutable nested tuples.  A node is one of

    ("leaf",)
    ("inner", (child, ...))   an associative operation vertex
    ("bead",  (child, ...))   a module vertex carrying an interval coordinate

Leaf labels are implicit in planar (depth-first, left-to-right) order.  Equality
is structural on canonical forms; canonical forms never contain an inner vertex
whose parent is inner (such contacts are contracted, which is exactly strict
associativity of the acting operations) and never contain a unary inner vertex.

Three face families are understood by this module:

``simplex``
    Faces of the ordered configuration of n points on [0, 1].  Exactly one bead;
    its children are the interior sites (a leaf is a single point, an inner
    corolla is a run of coincident points).  Points pinned to the endpoints are
    leaves placed before and after the bead under a root inner vertex, which is
    present only when at least one pin exists.  Dimension = bead child count.

``cube``
    Faces of n points on the line with consecutive gaps in [0, 1].  A chain of
    beads: each bead holds the sites of one cluster (gap 1 separates clusters)
    and, except for the last, carries the next bead as its final child.
    Coincident runs are inner corollas.  Dimension = site count minus bead count.

``associahedron``
    Planar trees on n leaves, every vertex a bead with at least two children;
    the one-leaf face is the bare leaf.  Dimension = sum of (children - 2).
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import product

LEAF = ("leaf",)

FAMILIES = ("simplex", "cube", "associahedron")

DEFAULT_BOUND = 8


def leaf():
    return LEAF


def inner(children):
    return ("inner", tuple(children))


def bead(children):
    return ("bead", tuple(children))


def kind(node):
    return node[0]


def children(node):
    return node[1] if node[0] != "leaf" else ()


def is_leaf(node):
    return node[0] == "leaf"


def leaf_count(node):
    if is_leaf(node):
        return 1
    return sum(leaf_count(c) for c in children(node))


def assoc_corolla(k):
    """The k-ary associative operation as a tree (k >= 0)."""
    if k < 0:
        raise ValueError("corolla arity must be nonnegative")
    return inner([LEAF] * k)


def normalize(node):
    """Contract inner-inner contacts and unary inner vertices.  Idempotent."""
    if is_leaf(node):
        return node
    kids = [normalize(c) for c in children(node)]
    if kind(node) == "inner":
        flat = []
        for c in kids:
            if kind(c) == "inner":
                flat.extend(children(c))
            else:
                flat.append(c)
        if len(flat) == 1:
            return flat[0]
        return inner(flat)
    return bead(kids)


def node_at(node, path):
    for i in path:
        try:
            node = children(node)[i]
        except IndexError:
            raise ValueError(f"no node at path {path!r}") from None
    return node


def replace_at(node, path, new):
    if not path:
        return new
    i = path[0]
    kids = list(children(node))
    if i >= len(kids):
        raise ValueError(f"no node at path {path!r}")
    kids[i] = replace_at(kids[i], path[1:], new)
    return (kind(node), tuple(kids))


def internal_edges(node, prefix=()):
    """Paths (child-index tuples) of edges whose lower endpoint is not a leaf."""
    out = []
    for i, c in enumerate(children(node)):
        if not is_leaf(c):
            out.append(prefix + (i,))
            out.extend(internal_edges(c, prefix + (i,)))
    return out


def _leaf_paths(node, prefix=()):
    if is_leaf(node):
        return [prefix]
    out = []
    for i, c in enumerate(children(node)):
        out.extend(_leaf_paths(c, prefix + (i,)))
    return out


def graft(host, slot, piece):
    """Replace leaf number ``slot`` (1-indexed, planar order) of host by piece.

    The result is normalized: inner vertices meeting inner vertices merge
    (strict associativity).  Grafting the unit (a bare leaf or the unary
    corolla) returns the host unchanged.
    """
    paths = _leaf_paths(host)
    if not 1 <= slot <= len(paths):
        raise ValueError(f"slot {slot} out of range 1..{len(paths)}")
    if piece == LEAF or piece == inner([LEAF]):
        return host
    return normalize(replace_at(host, paths[slot - 1], piece))


def contract_edge(tree, edge, family=None):
    """Contract the internal edge addressed by ``edge`` (a child-index path).

    The merged vertex is a bead when either endpoint is a bead.  A bead-bead
    contraction is the cube family's splitting-contraction move and is refused
    for other declared families.  Contracting a leaf edge or the root is an
    error, as is a path that no longer addresses a node.
    """
    if not edge:
        raise ValueError("cannot contract the root edge")
    child = node_at(tree, edge)
    if is_leaf(child):
        raise ValueError("cannot contract a leaf edge")
    parent = node_at(tree, edge[:-1])
    if kind(parent) == "bead" and kind(child) == "bead":
        if family not in (None, "cube"):
            raise ValueError(f"bead-bead contraction is not a {family} face move")
        merged_kind = "bead"
    elif "bead" in (kind(parent), kind(child)):
        merged_kind = "bead"
    else:
        merged_kind = "inner"
    i = edge[-1]
    kids = list(children(parent))
    kids[i:i + 1] = list(children(child))
    merged = (merged_kind, tuple(kids))
    out = replace_at(tree, edge[:-1], merged)
    if family is not None:
        validate(out, family)
    return out


def validate(tree, family, n=None):
    """Check membership in a face family; raise ValueError when violated."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n is not None and family != "simplex" and leaf_count(tree) != n:
        raise ValueError(f"expected {n} leaves, found {leaf_count(tree)}")
    if family == "simplex":
        _validate_simplex(tree, n)
    elif family == "cube":
        _validate_cube(tree, n)
    else:
        _validate_assoc(tree)


def _validate_site(node):
    if is_leaf(node):
        return
    if kind(node) != "inner":
        raise ValueError("a site must be a leaf or an inner corolla")
    kids = children(node)
    if len(kids) < 2 or not all(is_leaf(c) for c in kids):
        raise ValueError("a coincident run must be a corolla of >= 2 leaves")


def _validate_simplex(tree, n):
    if kind(tree) == "inner":
        kids = children(tree)
        beads = [c for c in kids if kind(c) == "bead"]
        if len(beads) != 1:
            raise ValueError("a simplex face has exactly one bead")
        j = kids.index(beads[0])
        if not all(is_leaf(c) for c in kids[:j] + kids[j + 1:]):
            raise ValueError("pinned points must be leaves beside the bead")
        if len(kids) < 2:
            raise ValueError("the root corolla needs a pin to exist")
        core = beads[0]
    elif kind(tree) == "bead":
        core = tree
    else:
        raise ValueError("a simplex face is a bead, optionally under a pin corolla")
    for c in children(core):
        _validate_site(c)
    total = leaf_count(tree) - (1 if is_leaf(tree) else 0)
    if n is not None and total != n:
        raise ValueError(f"expected {n} points, found {total}")


def _validate_cube(tree, n):
    node = tree
    count = 0
    while True:
        if kind(node) != "bead" or not children(node):
            raise ValueError("a cube face is a chain of nonempty beads")
        kids = children(node)
        tail = kids[-1]
        sites = kids[:-1] if kind(tail) == "bead" else kids
        if not sites:
            raise ValueError("every cluster holds at least one site")
        for c in sites:
            _validate_site(c)
        count += sum(leaf_count(c) for c in sites)
        if kind(tail) == "bead":
            node = tail
        else:
            break
    if n is not None and count != n:
        raise ValueError(f"expected {n} points, found {count}")
    if count < 1:
        raise ValueError("cube faces need at least one point")


def _validate_assoc(tree):
    if is_leaf(tree):
        return
    if kind(tree) != "bead":
        raise ValueError("associahedron faces are all-bead trees")
    if len(children(tree)) < 2:
        raise ValueError("every bead needs >= 2 children")
    for c in children(tree):
        _validate_assoc(c)


def simplex_dim(tree):
    core = tree if kind(tree) == "bead" else next(
        c for c in children(tree) if kind(c) == "bead")
    return len(children(core))


def cube_dim(tree):
    sites = 0
    beads = 0
    node = tree
    while node is not None:
        beads += 1
        kids = children(node)
        tail = kids[-1] if kids and kind(kids[-1]) == "bead" else None
        sites += len(kids) - (1 if tail is not None else 0)
        node = tail
    return sites - beads


def assoc_dim(tree):
    if is_leaf(tree):
        return 0
    return (len(children(tree)) - 2) + sum(assoc_dim(c) for c in children(tree))


def family_dim(tree, family):
    if family == "simplex":
        return simplex_dim(tree)
    if family == "cube":
        return cube_dim(tree)
    if family == "associahedron":
        return assoc_dim(tree)
    raise ValueError(f"unknown family {family!r}")


def _compositions(total, parts=None):
    """All ordered tuples of positive integers with the given sum."""
    if total == 0:
        return [()] if parts in (None, 0) else []
    out = []
    if parts is None:
        for first in range(1, total + 1):
            for rest in _compositions(total - first):
                out.append((first,) + rest)
    else:
        if parts == 0:
            return []
        for first in range(1, total - parts + 2):
            for rest in _compositions(total - first, parts - 1):
                out.append((first,) + rest)
    return out


def _site_node(size):
    return LEAF if size == 1 else inner([LEAF] * size)


def simplex_face_tree(pins_left, sites, pins_right):
    """Build the simplex face with the given pin counts and site sizes."""
    core = bead([_site_node(s) for s in sites])
    if pins_left == 0 and pins_right == 0:
        return core
    return inner([LEAF] * pins_left + [core] + [LEAF] * pins_right)


def simplex_face_data(tree):
    """Inverse of simplex_face_tree: (pins_left, site sizes, pins_right)."""
    if kind(tree) == "bead":
        return 0, tuple(leaf_count(c) for c in children(tree)), 0
    kids = children(tree)
    j = next(i for i, c in enumerate(kids) if kind(c) == "bead")
    sites = tuple(leaf_count(c) for c in children(kids[j]))
    return j, sites, len(kids) - j - 1


def cube_face_tree(labels):
    """Build the cube face ( n-1 gap labels over {"0", "1", "f"} ) as a chain."""
    n = len(labels) + 1
    cluster_runs = []
    run = [1]
    for g in labels:
        if g == "1":
            cluster_runs.append(run)
            run = [1]
        elif g == "0":
            run[-1] += 1
        elif g == "f":
            run.append(1)
        else:
            raise ValueError(f"bad gap label {g!r}")
    cluster_runs.append(run)
    node = None
    for sizes in reversed(cluster_runs):
        kids = [_site_node(s) for s in sizes]
        if node is not None:
            kids.append(node)
        node = bead(kids)
    if n < 1:
        raise ValueError("cube faces need at least one point")
    return node


def cube_face_labels(tree):
    """Inverse of cube_face_tree: the gap label tuple."""
    labels = []
    node = tree
    while node is not None:
        kids = children(node)
        tail = kids[-1] if kids and kind(kids[-1]) == "bead" else None
        sites = kids[:-1] if tail is not None else kids
        for i, c in enumerate(sites):
            labels.extend(["0"] * (leaf_count(c) - 1))
            if i + 1 < len(sites):
                labels.append("f")
        if tail is not None:
            labels.append("1")
        node = tail
    return tuple(labels)


def enumerate_trees(family, n, dim=None, bound=DEFAULT_BOUND):
    """All faces of the family at arity n, canonically ordered, one per face."""
    if n > bound:
        raise ValueError(f"arity {n} exceeds bound {bound}")
    if family == "associahedron":
        trees = _assoc_trees(n)
    elif family == "simplex":
        trees = []
        for a in range(n + 1):
            for c in range(n - a + 1):
                for sites in _compositions(n - a - c):
                    trees.append(simplex_face_tree(a, sites, c))
    elif family == "cube":
        if n < 1:
            raise ValueError("cube faces start at one point")
        trees = [cube_face_tree(ls) for ls in product("01f", repeat=n - 1)]
    else:
        raise ValueError(f"unknown family {family!r}")
    if dim is not None:
        trees = [t for t in trees if family_dim(t, family) == dim]
    return sorted(trees, key=canonical_key)


def _assoc_trees(n):
    if n == 0:
        return []
    if n == 1:
        return [LEAF]
    out = []
    for k in range(2, n + 1):
        for comp in _compositions(n, k):
            for kids in product(*[_assoc_trees(m) for m in comp]):
                out.append(bead(kids))
    return out


def _node_to_obj(node):
    if is_leaf(node):
        return {"kind": "leaf", "children": []}
    return {"kind": kind(node),
            "children": [_node_to_obj(c) for c in children(node)]}


def _obj_to_node(obj):
    k = obj["kind"]
    if k == "leaf":
        return LEAF
    if k not in ("inner", "bead"):
        raise ValueError(f"bad node kind {k!r}")
    return (k, tuple(_obj_to_node(c) for c in obj.get("children", [])))


def to_json(tree):
    """Byte-stable JSON encoding of a tree (root implicit)."""
    return json.dumps(_node_to_obj(tree), sort_keys=True, separators=(",", ":"))


def from_json(text):
    return _obj_to_node(json.loads(text))


def canonical_key(tree):
    return to_json(tree)


def frac(x):
    """Exact rational from int, Fraction, or 'p/q' string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def frac_str(x):
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)

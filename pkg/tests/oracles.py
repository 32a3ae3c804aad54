"""Independent combinatorial oracles used to freeze expected values.

Every function here is a from-scratch brute force or a small closed
form.  Nothing imports the package under test, so each frozen number in
the test suite has two unrelated derivations: the package computes it
one way, the oracle another.
"""

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb


# ---------------------------------------------------------------------------
# Classical polytopes: simplex, cube, associahedron via polygon dissections.

def simplex_face_counts(n):
    """Faces of the n-simplex by dimension, vertices first."""
    return tuple(comb(n + 1, k + 1) for k in range(n + 1))


def cube_face_counts(d):
    """Faces of the d-cube by dimension, vertices first."""
    return tuple(comb(d, k) * 2 ** (d - k) for k in range(d + 1))


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def _crosses(d1, d2):
    (a, b), (c, d) = d1, d2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b < d) or (c < a < d < b)


def polygon_dissections(m):
    """All sets of pairwise noncrossing diagonals of a convex m-gon."""
    diagonals = [(i, j) for i in range(m) for j in range(i + 2, m)
                 if not (i == 0 and j == m - 1)]

    def extend(chosen, candidates):
        yield frozenset(chosen)
        for k, d in enumerate(candidates):
            rest = [e for e in candidates[k + 1:] if not _crosses(d, e)]
            yield from extend(chosen + [d], rest)

    yield from extend([], diagonals)


def assoc_face_counts(n):
    """Faces of the associahedron on n leaves by dimension.

    Faces correspond to sets of pairwise noncrossing diagonals of a
    convex (n+1)-gon; a set of k diagonals spans dimension n - 2 - k.
    """
    top = n - 2
    counts = [0] * (top + 1)
    for dset in polygon_dissections(n + 1):
        counts[top - len(dset)] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# Order polytopes, brute forced from monotone 0/1 labelings.

def _transitive_closure(elements, pairs):
    leq = {(a, a) for a in elements} | set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    return leq


def _affine_rank(points):
    """Affine rank of a list of rational coordinate tuples."""
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[Fraction(x) - Fraction(y) for x, y in zip(p, base)]
            for p in points[1:]]
    rank = 0
    cols = len(base)
    for col in range(cols):
        pivot = next((r for r in rows if r[col] != 0), None)
        if pivot is None:
            continue
        rank += 1
        rows.remove(pivot)
        rows = [[x - (r[col] / pivot[col]) * y for x, y in zip(r, pivot)]
                if r[col] != 0 else r for r in rows]
    return rank


def order_polytope_face_counts(elements, relations):
    """Face counts by dimension of the order polytope of a finite poset.

    The polytope is {x in [0,1]^P : x_a <= x_b whenever a <= b}.  Its
    vertices are the monotone 0/1 labelings; each face is cut out by a
    subset of the defining equalities (x_a = 0 on minimal a, x_b = 1 on
    maximal b, x_a = x_b on covering pairs); faces are deduplicated by
    vertex set and dimension read off as affine rank.
    """
    elements = list(elements)
    leq = _transitive_closure(elements, relations)
    strict = {(a, b) for (a, b) in leq if a != b}
    covers = [(a, b) for (a, b) in strict
              if not any((a, c) in strict and (c, b) in strict
                         for c in elements)]
    minimal = [a for a in elements
               if not any((b, a) in strict for b in elements)]
    maximal = [a for a in elements
               if not any((a, b) in strict for b in elements)]

    vertices = []
    for bits in itertools.product((0, 1), repeat=len(elements)):
        val = dict(zip(elements, bits))
        if all(val[a] <= val[b] for (a, b) in strict):
            vertices.append(val)

    constraints = ([("zero", a) for a in minimal]
                   + [("one", a) for a in maximal]
                   + [("eq", a, b) for (a, b) in covers])

    def satisfies(val, con):
        if con[0] == "zero":
            return val[con[1]] == 0
        if con[0] == "one":
            return val[con[1]] == 1
        return val[con[1]] == val[con[2]]

    seen = set()
    faces = []
    for k in range(len(constraints) + 1):
        for subset in itertools.combinations(constraints, k):
            cut = [v for v in vertices
                   if all(satisfies(v, con) for con in subset)]
            if not cut:
                continue
            key = frozenset(tuple(v[e] for e in elements) for v in cut)
            if key in seen:
                continue
            seen.add(key)
            faces.append(sorted(key))

    if not faces:
        return ()
    dims = [_affine_rank(f) for f in faces]
    counts = [0] * (max(dims) + 1)
    for d in dims:
        counts[d] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# Multiplihedra via painted trees.

@lru_cache(maxsize=None)
def _plain_trees(n):
    """Planar rooted trees with n leaves, every inner vertex arity >= 2."""
    if n == 1:
        return (None,)
    out = []
    for arity in range(2, n + 1):
        for parts in _compositions(n, arity):
            for kids in itertools.product(*[_plain_trees(p) for p in parts]):
                out.append(tuple(kids))
    return tuple(out)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _paint_counts(tree, parent_painted):
    """Counts of paintings keyed by the number of off-the-line vertices.

    Each inner vertex is painted, on the paint line, or unpainted;
    parents of painted and on-the-line vertices must be painted.
    """
    if tree is None:
        return {0: 1}
    out = {}
    options = ("P", "L", "U") if parent_painted else ("U",)
    for t in options:
        acc = {0: 1}
        for child in tree:
            nxt = {}
            for a, ca in acc.items():
                for b, cb in _paint_counts(child, t == "P").items():
                    nxt[a + b] = nxt.get(a + b, 0) + ca * cb
            acc = nxt
        w = 0 if t == "L" else 1
        for a, ca in acc.items():
            out[a + w] = out.get(a + w, 0) + ca
    return out


def multiplihedron_face_counts(n):
    """Faces of the multiplihedron on n leaves by dimension.

    Faces are planar trees whose vertices are painted, on the paint
    line, or unpainted, with painting closed toward the root; a face
    with j vertices off the line has dimension n - 1 - j.
    """
    top = n - 1
    counts = [0] * (top + 1)
    for tree in _plain_trees(n):
        for off_line, c in _paint_counts(tree, True).items():
            counts[top - off_line] += c
    if counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


# ---------------------------------------------------------------------------
# Mod-2 Betti numbers by set-based column reduction.

def _set_rank(columns):
    pivots = {}
    rank = 0
    for col in columns:
        col = set(col)
        while col:
            p = min(col, key=repr)
            if p in pivots:
                col ^= pivots[p]
            else:
                pivots[p] = col
                rank += 1
                break
    return rank


def betti_mod2(cells, boundary):
    """Mod-2 Betti numbers of a chain complex given as label data.

    ``cells`` is an iterable of (label, dim); ``boundary`` maps a label
    to {face label: multiplicity}.  Ranks come from a greedy set-based
    column reduction, unrelated to any bitmask elimination.
    """
    cells = list(cells)
    top = max((d for _, d in cells), default=-1)
    if top < 0:
        return ()
    by_dim = [[lab for lab, d in cells if d == k] for k in range(top + 1)]
    ranks = [0] * (top + 2)
    for d in range(1, top + 1):
        cols = [{t for t, m in boundary[lab].items() if m % 2}
                for lab in by_dim[d]]
        ranks[d] = _set_rank(cols)
    return tuple(len(by_dim[d]) - ranks[d] - ranks[d + 1]
                 for d in range(top + 1))


def betti_mod2_of(cx):
    """Oracle Betti numbers of a built complex, reusing only its data."""
    return betti_mod2([(c.label, c.dim) for c in cx.cells], cx.boundary)


# ---------------------------------------------------------------------------
# Rational sampling for property tests.

def rand_fraction(rng, den=24):
    d = rng.randint(1, den)
    return Fraction(rng.randint(0, d), d)

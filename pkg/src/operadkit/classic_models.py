"""The three undecorated interval models as complexes with exact actions.

``triangle``
    Ordered configurations of n points on [0, 1]; a weak bimodule over the
    associative operations: the k-ary operation inserts endpoint points from
    the left and duplicates (or, nullary, deletes) points from the right.

``square`` / ``square-unit``
    Configurations of n points on the line with consecutive gaps in [0, 1],
    up to translation; a full bimodule: the left action concatenates
    configurations at gap 1, the right action duplicates points.  The unit
    variant adds the empty configuration and the nullary deletion, which
    merges the two adjacent gaps to their maximum.

``pentagon``
    The Stasheff face family: all-bead planar trees composing by grafting.

All coordinates are exact rationals.  Faces are the canonical trees of
``tree_core``; cell-level actions are computed on face data and agree with
the point-level formulas on generic interior points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import tree_core as tc
from .complexes import Cell, CellComplex, build_closure

DEFAULT_BOUND = 8
DEFAULT_SEED = 20260815

UNIT_LABEL = ("unit",)


@dataclass(frozen=True)
class ModelId:
    """A model name plus the algebraic structure it is checked against."""
    name: str
    structure: str   # "weak-bimodule" | "bimodule" | "operad"
    over: str = ""   # "assoc" (nullary operation allowed) | "assoc-positive"

    def __str__(self):
        return self.name


TRIANGLE = ModelId("triangle", "weak-bimodule", "assoc")
SQUARE = ModelId("square", "bimodule", "assoc-positive")
SQUARE_WITH_UNIT = ModelId("square-unit", "bimodule", "assoc")
PENTAGON = ModelId("pentagon", "operad")

MODELS = {m.name: m for m in (TRIANGLE, SQUARE, SQUARE_WITH_UNIT, PENTAGON)}


@dataclass(frozen=True)
class CubePoint:
    """n points on the line recorded by their n-1 consecutive gaps.

    n = 0 encodes the empty configuration (the unit), n = 1 a single point.
    """
    n: int
    gaps: tuple

    def __post_init__(self):
        if self.n < 0 or (self.n == 0 and self.gaps):
            raise ValueError("bad configuration size")
        if self.n >= 1 and len(self.gaps) != self.n - 1:
            raise ValueError("a configuration of n points has n-1 gaps")
        for g in self.gaps:
            if not 0 <= g <= 1:
                raise ValueError("gaps must lie in [0, 1]")


UNIT_CONFIG = CubePoint(0, ())


def _check_simplex_point(x):
    prev = Fraction(0)
    for t in x:
        if not 0 <= t <= 1:
            raise ValueError("coordinates must lie in [0, 1]")
        if t < prev:
            raise ValueError("coordinates must be nondecreasing")
        prev = t
    return tuple(x)


def act_simplex(side, op, slot, x):
    """Apply the ``op``-ary associative operation to an interval configuration.

    side "left": insert slot-1 points at 0 and op-slot points at 1.
    side "right": duplicate point ``slot`` op times; the nullary operation
    deletes it.
    """
    x = _check_simplex_point(x)
    n = len(x)
    if side == "left":
        if not 1 <= slot <= op:
            raise ValueError(f"slot {slot} out of range 1..{op}")
        return (Fraction(0),) * (slot - 1) + x + (Fraction(1),) * (op - slot)
    if side == "right":
        if not 1 <= slot <= n:
            raise ValueError(f"slot {slot} out of range 1..{n}")
        if op == 0:
            return x[:slot - 1] + x[slot:]
        return x[:slot - 1] + (x[slot - 1],) * op + x[slot:]
    raise ValueError(f"unknown side {side!r}")


def act_cube(side, op, slot, x, unit=False):
    """Apply the ``op``-ary associative operation to a line configuration.

    side "left": ``x`` is a sequence of ``op`` CubePoints, concatenated with
    gap 1 between consecutive nonempty factors (slot is ignored).
    side "right": ``x`` is one CubePoint; duplication inserts zero gaps, the
    nullary operation (unit variant only) deletes point ``slot`` and merges
    its two gaps to their maximum.
    """
    if side == "left":
        factors = list(x)
        if len(factors) != op:
            raise ValueError(f"the {op}-ary operation needs {op} arguments")
        if (op == 0 or any(f.n == 0 for f in factors)) and not unit:
            raise ValueError("empty configurations need the unit variant")
        parts = [f for f in factors if f.n > 0]
        if not parts:
            return UNIT_CONFIG
        gaps = []
        total = 0
        for i, f in enumerate(parts):
            if i > 0:
                gaps.append(Fraction(1))
            gaps.extend(f.gaps)
            total += f.n
        return CubePoint(total, tuple(gaps))
    if side == "right":
        if x.n == 0:
            raise ValueError("no slots on the empty configuration")
        if not 1 <= slot <= x.n:
            raise ValueError(f"slot {slot} out of range 1..{x.n}")
        g = x.gaps
        if op == 0:
            if not unit:
                raise ValueError("the nullary operation needs the unit variant")
            if x.n == 1:
                return UNIT_CONFIG
            if slot == 1:
                return CubePoint(x.n - 1, g[1:])
            if slot == x.n:
                return CubePoint(x.n - 1, g[:-1])
            merged = max(g[slot - 2], g[slot - 1])
            return CubePoint(x.n - 1, g[:slot - 2] + (merged,) + g[slot:])
        return CubePoint(x.n + op - 1,
                         g[:slot - 1] + (Fraction(0),) * (op - 1) + g[slot - 1:])
    raise ValueError(f"unknown side {side!r}")


# ---------------------------------------------------------------------------
# cell-level actions on face data
# ---------------------------------------------------------------------------

def act_simplex_face(side, op, slot, tree):
    """The simplex action on a face tree; mirrors act_simplex on interiors."""
    a, sites, c = tc.simplex_face_data(tree)
    n = a + sum(sites) + c
    if side == "left":
        if not 1 <= slot <= op:
            raise ValueError(f"slot {slot} out of range 1..{op}")
        return tc.simplex_face_tree(a + slot - 1, sites, c + op - slot)
    if side != "right":
        raise ValueError(f"unknown side {side!r}")
    if not 1 <= slot <= n:
        raise ValueError(f"slot {slot} out of range 1..{n}")
    delta = op - 1
    if slot <= a:
        return tc.simplex_face_tree(a + delta, sites, c)
    if slot > n - c:
        return tc.simplex_face_tree(a, sites, c + delta)
    pos = slot - a
    new = list(sites)
    for j, s in enumerate(new):
        if pos <= s:
            new[j] += delta
            if new[j] == 0:
                del new[j]
            return tc.simplex_face_tree(a, tuple(new), c)
        pos -= s
    raise AssertionError("unreachable slot")


_GAP_ORDER = {"0": 0, "f": 1, "1": 2}


def gap_max(g1, g2):
    return g1 if _GAP_ORDER[g1] >= _GAP_ORDER[g2] else g2


def act_cube_face(side, op, slot, trees, unit=False):
    """The cube action on face trees; ``None`` stands for the empty face.

    side "left": ``trees`` is a list of ``op`` factors.
    side "right": ``trees`` is a single face tree.
    """
    if side == "left":
        factors = list(trees)
        if len(factors) != op:
            raise ValueError(f"the {op}-ary operation needs {op} arguments")
        if (op == 0 or any(t is None for t in factors)) and not unit:
            raise ValueError("empty factors need the unit variant")
        parts = [tc.cube_face_labels(t) for t in factors if t is not None]
        if not parts:
            return None
        labels = []
        for i, p in enumerate(parts):
            if i > 0:
                labels.append("1")
            labels.extend(p)
        return tc.cube_face_tree(tuple(labels))
    if side != "right":
        raise ValueError(f"unknown side {side!r}")
    tree = trees
    if tree is None:
        raise ValueError("no slots on the empty configuration")
    labels = list(tc.cube_face_labels(tree))
    n = len(labels) + 1
    if not 1 <= slot <= n:
        raise ValueError(f"slot {slot} out of range 1..{n}")
    if op == 0:
        if not unit:
            raise ValueError("the nullary operation needs the unit variant")
        if n == 1:
            return None
        if slot == 1:
            labels = labels[1:]
        elif slot == n:
            labels = labels[:-1]
        else:
            merged = gap_max(labels[slot - 2], labels[slot - 1])
            labels = labels[:slot - 2] + [merged] + labels[slot:]
        return tc.cube_face_tree(tuple(labels))
    labels = labels[:slot - 1] + ["0"] * (op - 1) + labels[slot - 1:]
    return tc.cube_face_tree(tuple(labels))


def compose_assoc_faces(x, slot, y):
    """Operadic composition of associahedron faces: grafting."""
    return tc.graft(x, slot, y)


# ---------------------------------------------------------------------------
# complexes and filtrations
# ---------------------------------------------------------------------------

def _simplex_facets(tree):
    a, sites, c = tc.simplex_face_data(tree)
    out = []
    r = len(sites)
    for j in range(r - 1):
        merged = sites[:j] + (sites[j] + sites[j + 1],) + sites[j + 2:]
        out.append(tc.simplex_face_tree(a, merged, c))
    if r >= 1:
        out.append(tc.simplex_face_tree(a + sites[0], sites[1:], c))
        out.append(tc.simplex_face_tree(a, sites[:-1], c + sites[-1]))
    return out


def _cube_facets(tree):
    labels = tc.cube_face_labels(tree)
    out = []
    for i, g in enumerate(labels):
        if g == "f":
            for v in ("0", "1"):
                out.append(tc.cube_face_tree(labels[:i] + (v,) + labels[i + 1:]))
    return out


def _assoc_facets(tree):
    out = []

    def walk(node, path):
        if tc.is_leaf(node):
            return
        kids = tc.children(node)
        k = len(kids)
        for run in range(2, k):
            for start in range(k - run + 1):
                new_kids = (kids[:start]
                            + (tc.bead(kids[start:start + run]),)
                            + kids[start + run:])
                out.append(tc.replace_at(tree, path, tc.bead(new_kids)))
        for i, c in enumerate(kids):
            walk(c, path + (i,))

    walk(tree, ())
    return out


_FAMILY = {"triangle": "simplex", "square": "cube", "square-unit": "cube",
           "pentagon": "associahedron"}
FACET_RULES = {"simplex": _simplex_facets, "cube": _cube_facets,
               "associahedron": _assoc_facets}


def model_family(model):
    return _FAMILY[model.name if isinstance(model, ModelId) else model]


def build_complex(model, n, bound=DEFAULT_BOUND):
    """The face complex of the model at arity n."""
    if isinstance(model, str):
        model = MODELS[model]
    family = model_family(model)
    if n > bound:
        raise ValueError(f"arity {n} exceeds bound {bound}")
    if family == "cube" and n == 0:
        if model.over == "assoc":
            return CellComplex([Cell(UNIT_LABEL, 0, 0)], {}, name=f"{model}(0)")
        return CellComplex([], {}, name=f"{model}(0)")
    trees = tc.enumerate_trees(family, n, bound=bound)
    facet_fn = FACET_RULES[family]

    def facets(cell):
        return [Cell(t, tc.family_dim(t, family), n) for t in facet_fn(cell.label)]

    tops = [Cell(t, tc.family_dim(t, family), n) for t in trees]
    cx = build_closure(tops, facets, name=f"{model}({n})")
    if len(cx) != len(trees):
        raise AssertionError("face closure escaped the enumerated family")
    return cx


def max_bead_out(tree, family):
    """Largest bead out-degree, counting cluster sites once for cube chains."""
    if tc.is_leaf(tree):
        return 0
    best = 0
    kids = tc.children(tree)
    if tc.kind(tree) == "bead":
        if family == "cube":
            count = len(kids)
            if kids and tc.kind(kids[-1]) == "bead":
                count -= 1
            best = count
        else:
            best = len(kids)
    for c in kids:
        best = max(best, max_bead_out(c, family))
    return best


def filtration_stage(model, stage, n, bound=DEFAULT_BOUND):
    """The stage-``stage`` subcomplex of the model at arity n."""
    if isinstance(model, str):
        model = MODELS[model]
    family = model_family(model)
    cx = build_complex(model, n, bound=bound)
    keep = [c.label for c in cx.cells
            if c.label == UNIT_LABEL
            or max_bead_out(c.label, family) <= stage]
    return cx.subcomplex(keep, name=f"{model}_{stage}({n})")


def truncate(model, stage, bound=DEFAULT_BOUND):
    """The model restricted to arities <= stage, one complex per arity."""
    if isinstance(model, str):
        model = MODELS[model]
    lo = 1 if model.structure == "operad" else 0
    return {n: build_complex(model, n, bound=bound)
            for n in range(lo, stage + 1)}


# ---------------------------------------------------------------------------
# realization and face typing (used by the exactness checks)
# ---------------------------------------------------------------------------

def realize_simplex_face(tree):
    """A generic interior point of a simplex face."""
    a, sites, c = tc.simplex_face_data(tree)
    r = len(sites)
    coords = [Fraction(0)] * a
    for j, s in enumerate(sites):
        coords.extend([Fraction(j + 1, r + 1)] * s)
    coords.extend([Fraction(1)] * c)
    return tuple(coords)


def simplex_face_of_point(x):
    """The face whose relative interior contains the configuration."""
    a = sum(1 for t in x if t == 0)
    c = sum(1 for t in x if t == 1)
    interior = [t for t in x if 0 < t < 1]
    sites = []
    prev = None
    for t in interior:
        if sites and t == prev:
            sites[-1] += 1
        else:
            sites.append(1)
        prev = t
    return tc.simplex_face_tree(a, tuple(sites), c)


def realize_cube_face(tree):
    vals = {"0": Fraction(0), "1": Fraction(1), "f": Fraction(1, 2)}
    gaps = tuple(vals[g] for g in tc.cube_face_labels(tree))
    return CubePoint(len(gaps) + 1, gaps)


def cube_face_of_point(x):
    if x.n == 0:
        return None
    labels = tuple("0" if g == 0 else "1" if g == 1 else "f" for g in x.gaps)
    return tc.cube_face_tree(labels)


# ---------------------------------------------------------------------------
# axiom suites
# ---------------------------------------------------------------------------

@dataclass
class AxiomEntry:
    axiom: str
    ok: bool
    counterexample: object = None


@dataclass
class AxiomReport:
    model: str
    seed: int
    samples: int
    entries: list = field(default_factory=list)

    @property
    def passed(self):
        return all(e.ok for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.ok]

    def as_json_obj(self):
        return {"model": self.model, "seed": self.seed, "samples": self.samples,
                "passed": self.passed,
                "axioms": [{"axiom": e.axiom, "ok": e.ok,
                            "counterexample": repr(e.counterexample)
                            if e.counterexample is not None else None}
                           for e in self.entries]}


def rand_fraction(rng, den=60):
    return Fraction(rng.randint(0, den), den)


def rand_simplex_point(rng, n):
    return tuple(sorted(rand_fraction(rng) for _ in range(n)))


def rand_cube_point(rng, n):
    if n == 0:
        return UNIT_CONFIG
    return CubePoint(n, tuple(rand_fraction(rng) for _ in range(n - 1)))


class _TriangleOps:
    """Single-slot weak-bimodule operations on interval configurations."""

    def __init__(self, left=None, right=None):
        self.left = left or (lambda k, p, m: act_simplex("left", k, p, m))
        self.right = right or (lambda m, i, k: act_simplex("right", k, i, m))


class _TriangleCellOps(_TriangleOps):
    def __init__(self):
        super().__init__(
            left=lambda k, p, m: act_simplex_face("left", k, p, m),
            right=lambda m, i, k: act_simplex_face("right", k, i, m))


def weak_bimodule_axioms(ops, operands, arity_bound, nullary=True):
    """All instances of the six weak-bimodule axioms within the arity bound.

    ``operands`` maps an arity n to the module elements to test at that
    arity.  The two acting operations range over arities i, j with
    i + j <= arity_bound.  Yields (axiom id, instance, lhs, rhs).
    """
    lo = 0 if nullary else 1
    pool = [(n, m) for n, elems in operands.items() for m in elems]
    for n, m in pool:
        # (1) the unary operation acts trivially on both sides
        yield "1", ("left unit", m), ops.left(1, 1, m), m
        for p in range(1, n + 1):
            yield "1", ("right unit", p, m), ops.right(m, p, 1), m
    for i in range(lo, arity_bound + 1):
        for j in range(lo, arity_bound + 1):
            if i + j > arity_bound or (i == 0 and j == 0):
                continue
            for n, m in pool:
                # (2) composing then inserting equals nested insertions
                for p in range(1, i + 1):
                    for q in range(1, j + 1):
                        lhs = ops.left(i + j - 1, p + q - 1, m)
                        rhs = ops.left(i, p, ops.left(j, q, m))
                        yield "2", (i, p, j, q, m), lhs, rhs
                # (3) nested right actions at the same point
                if i >= 1:
                    for p in range(1, n + 1):
                        for q in range(1, i + 1):
                            lhs = ops.right(ops.right(m, p, i), p + q - 1, j)
                            rhs = ops.right(m, p, i + j - 1)
                            yield "3", (p, i, q, j, m), lhs, rhs
                # (4) right actions at distinct points commute
                for p in range(1, n + 1):
                    for q in range(p + 1, n + 1):
                        lhs = ops.right(ops.right(m, p, i), q + i - 1, j)
                        rhs = ops.right(ops.right(m, q, j), p, i)
                        yield "4", (p, i, q, j, m), lhs, rhs
                # (5) right action landing inside the inserted module slot
                for p in range(1, i + 1):
                    for q in range(1, n + 1):
                        lhs = ops.right(ops.left(i, p, m), p + q - 1, j)
                        rhs = ops.left(i, p, ops.right(m, q, j))
                        yield "5", (i, p, q, j, m), lhs, rhs
                # (6) right action on the operation's own inputs
                for p in range(1, i + 1):
                    for q in range(1, i + 1):
                        if q < p:
                            lhs = ops.right(ops.left(i, p, m), q, j)
                            rhs = ops.left(i + j - 1, p + j - 1, m)
                            yield "6", ("below", i, p, q, j, m), lhs, rhs
                        elif q > p:
                            lhs = ops.right(ops.left(i, p, m), q + n - 1, j)
                            rhs = ops.left(i + j - 1, p, m)
                            yield "6", ("above", i, p, q, j, m), lhs, rhs


class _SquareOps:
    """Full bimodule operations on line configurations."""

    def __init__(self, unit, left=None, right=None):
        self.unit = unit
        self.left = left or (lambda k, xs: act_cube("left", k, None, xs,
                                                    unit=unit))
        self.right = right or (lambda m, i, k: act_cube("right", k, i, m,
                                                        unit=unit))


class _SquareCellOps(_SquareOps):
    def __init__(self, unit):
        super().__init__(
            unit,
            left=lambda k, xs: act_cube_face("left", k, None, xs, unit=unit),
            right=lambda m, i, k: act_cube_face("right", k, i, m, unit=unit))


def bimodule_axioms(ops, operands, arity_bound):
    """Instances of the full bimodule laws for the line models.

    Law ids: L1 unit operation, L2 left associativity, L3 nested right
    actions, L4 disjoint right actions, L5 right action through a
    concatenation.  Yields (law id, instance, lhs, rhs).
    """
    lo = 0 if ops.unit else 1
    pool = [(n, m) for n, elems in operands.items() for m in elems]
    elems = [m for _, m in pool]
    for n, m in pool:
        yield "L1", ("unary left", m), ops.left(1, [m]), m
        for p in range(1, n + 1):
            yield "L1", ("unary right", p, m), ops.right(m, p, 1), m
    # L2: flattening a nested concatenation
    t = 0
    for k in range(1, 4):
        for pos in range(1, k + 1):
            for j in range(lo, 4):
                outer = [elems[(t + s) % len(elems)] for s in range(k - 1)]
                inner = [elems[(t + k - 1 + s) % len(elems)] for s in range(j)]
                t += 3
                lhs = ops.left(k, outer[:pos - 1] + [ops.left(j, inner)]
                               + outer[pos - 1:])
                rhs = ops.left(k + j - 1,
                               outer[:pos - 1] + inner + outer[pos - 1:])
                yield "L2", (k, pos, j), lhs, rhs
    for i in range(lo, arity_bound + 1):
        for j in range(lo, arity_bound + 1):
            if i + j > arity_bound:
                continue
            for n, m in pool:
                # L3: nested right actions at the same point
                if i >= 1:
                    for p in range(1, n + 1):
                        for q in range(1, i + 1):
                            lhs = ops.right(ops.right(m, p, i), p + q - 1, j)
                            rhs = ops.right(m, p, i + j - 1)
                            yield "L3", (p, i, q, j, m), lhs, rhs
                # L4: right actions at distinct points commute
                for p in range(1, n + 1):
                    for q in range(p + 1, n + 1):
                        lhs = ops.right(ops.right(m, p, i), q + i - 1, j)
                        rhs = ops.right(ops.right(m, q, j), p, i)
                        yield "L4", (p, i, q, j, m), lhs, rhs
    # L5: right action through a binary concatenation
    t = 0
    for n1, m1 in pool:
        n2, m2 = pool[(t * 5 + 3) % len(pool)]
        t += 1
        if n1 + n2 == 0:
            continue
        for j in range(lo, arity_bound + 1):
            for s in range(1, n1 + n2 + 1):
                lhs = ops.right(ops.left(2, [m1, m2]), s, j)
                if s <= n1:
                    rhs = ops.left(2, [ops.right(m1, s, j), m2])
                else:
                    rhs = ops.left(2, [m1, ops.right(m2, s - n1, j)])
                yield "L5", (s, j, m1, m2), lhs, rhs


def operad_axioms(compose, unit_elem, operands, arity_bound):
    """Associativity and unit laws for an operadic composition.

    ``operands`` maps arity to elements; ``compose(x, i, y)`` grafts y into
    slot i of x; ``unit_elem`` is the arity-one identity.
    """
    pool = {n: list(elems) for n, elems in operands.items() if elems}
    arities = sorted(pool)
    for nx in arities:
        for ny in arities:
            for nz in arities:
                if nx + ny + nz > arity_bound + 2:
                    continue
                for x in pool[nx][:6]:
                    for y in pool[ny][:6]:
                        for z in pool[nz][:6]:
                            for i in range(1, nx + 1):
                                for j in range(1, ny + 1):
                                    lhs = compose(compose(x, i, y),
                                                  i + j - 1, z)
                                    rhs = compose(x, i, compose(y, j, z))
                                    yield "nested", (i, j, x, y, z), lhs, rhs
                                for j in range(i + 1, nx + 1):
                                    lhs = compose(compose(x, i, y),
                                                  j + ny - 1, z)
                                    rhs = compose(compose(x, j, z), i, y)
                                    yield "disjoint", (i, j, x, y, z), lhs, rhs
    for n in arities:
        for x in pool[n][:6]:
            for i in range(1, n + 1):
                yield "unit", ("right", i, x), compose(x, i, unit_elem), x
            yield "unit", ("left", x), compose(unit_elem, 1, x), x


def unit_check(model=SQUARE_WITH_UNIT, degree_bound=5, samples=100,
               seed=DEFAULT_SEED):
    """Verify the two-sided unit law of the distinguished empty configuration."""
    if model.over != "assoc":
        raise ValueError("the unit law needs the unit variant")
    rng = random.Random(seed)
    report = AxiomReport(model=str(model), seed=seed, samples=samples)
    ok = True
    bad = None
    for n in range(0, degree_bound + 1):
        cells = ([None] if n == 0
                 else tc.enumerate_trees("cube", n, bound=DEFAULT_BOUND))
        for cell in cells:
            left = act_cube_face("left", 2, None, [None, cell], unit=True)
            right = act_cube_face("left", 2, None, [cell, None], unit=True)
            if left != cell or right != cell:
                ok, bad = False, ("cell", cell)
        for _ in range(samples):
            p = rand_cube_point(rng, n)
            left = act_cube("left", 2, None, [UNIT_CONFIG, p], unit=True)
            right = act_cube("left", 2, None, [p, UNIT_CONFIG], unit=True)
            if left != p or right != p:
                ok, bad = False, ("point", p)
    report.entries.append(AxiomEntry("unit", ok, bad))
    return report


def _collect(report, instances):
    status = {}
    for axiom, inst, lhs, rhs in instances:
        if axiom not in status:
            status[axiom] = (True, None)
        if lhs != rhs and status[axiom][0]:
            status[axiom] = (False, (inst, lhs, rhs))
    for axiom in sorted(status):
        ok, ce = status[axiom]
        report.entries.append(AxiomEntry(axiom, ok, ce))
    return report


def check_axioms(model, arity_bound=4, samples=40, seed=DEFAULT_SEED,
                 right_override=None, left_override=None):
    """Instantiate the model's axiom suite at cell and point level.

    ``samples`` counts random module points per arity.  The override hooks
    replace the point-level actions; they exist so a deliberately corrupted
    action can be shown to fail exactly one law.
    """
    if isinstance(model, str):
        model = MODELS[model]
    rng = random.Random(seed)
    report = AxiomReport(model=str(model), seed=seed, samples=samples)
    overridden = right_override is not None or left_override is not None
    if model.structure == "weak-bimodule":
        nullary = model.over == "assoc"
        point_ops = _TriangleOps(left=left_override, right=right_override)
        operands = {n: [rand_simplex_point(rng, n) for _ in range(samples)]
                    for n in range(0, arity_bound + 1)}
        _collect(report, weak_bimodule_axioms(point_ops, operands, arity_bound,
                                              nullary=nullary))
        if not overridden:
            cell_operands = {n: tc.enumerate_trees("simplex", n)
                             for n in range(0, min(arity_bound, 3) + 1)}
            _collect(report, weak_bimodule_axioms(_TriangleCellOps(),
                                                  cell_operands, arity_bound,
                                                  nullary=nullary))
        return report
    if model.structure == "bimodule":
        unit = model.over == "assoc"
        point_ops = _SquareOps(unit, left=left_override, right=right_override)
        operands = {n: [rand_cube_point(rng, n) for _ in range(samples)]
                    for n in range(0 if unit else 1, arity_bound + 1)}
        _collect(report, bimodule_axioms(point_ops, operands, arity_bound))
        if not overridden:
            cell_operands = {n: tc.enumerate_trees("cube", n)
                             for n in range(1, min(arity_bound, 3) + 1)}
            if unit:
                cell_operands[0] = [None]
            _collect(report, bimodule_axioms(_SquareCellOps(unit),
                                             cell_operands, arity_bound))
        return report
    if model.structure == "operad":
        operands = {n: tc.enumerate_trees("associahedron", n)
                    for n in range(1, arity_bound + 1)}
        _collect(report, operad_axioms(compose_assoc_faces, tc.LEAF,
                                       operands, arity_bound))
        return report
    raise ValueError(f"no axiom suite for {model!r}")


def corrupted_square_right_action(m, slot, k):
    """A wrong right action used as a negative control.

    It performs the usual duplication but then squares the gap just before
    the duplicated block.  Outputs stay valid configurations, laws L1, L2,
    L4, L5 and the unit law survive, and L3 fails on generic points.
    """
    out = act_cube("right", k, slot, m, unit=True)
    if k >= 2 and slot >= 2:
        g = list(out.gaps)
        g[slot - 2] = g[slot - 2] ** 2
        return CubePoint(out.n, tuple(g))
    return out

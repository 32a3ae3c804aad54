"""Finite graded cell complexes with incidence multiplicities.

A complex stores cells as (label, dimension, degree) triples, where the label
is an opaque hashable canonical value (nested tuples of strings and ints), the
dimension grades the chain complex, and the degree records the arity of the
ambient model component the cell came from.  Boundaries map each cell to its
codimension-one cells with integer multiplicities.

The constructor enforces that boundaries drop dimension by exactly one and
that the boundary of the boundary vanishes over GF(2); a violation is a
construction bug and raises immediately.  Homology is computed over GF(2) by
bitset Gaussian elimination, which is enough to certify the disc and sphere
claims this package checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Cell:
    label: object
    dim: int
    degree: int = 0


def label_key(label):
    """Deterministic sort key for canonical labels."""
    return repr(label)


class CellComplex:
    """Immutable graded cell complex with multiset boundaries."""

    def __init__(self, cells, boundary, name=""):
        self.name = name
        cells = sorted(cells, key=lambda c: (c.dim, label_key(c.label)))
        self.cells = tuple(cells)
        self._by_label = {c.label: c for c in cells}
        if len(self._by_label) != len(cells):
            raise ValueError("duplicate cell labels")
        bnd = {}
        for c in cells:
            row = dict(boundary.get(c.label, {}))
            for t, mult in row.items():
                if t not in self._by_label:
                    raise ValueError(f"boundary target missing: {t!r}")
                if self._by_label[t].dim != c.dim - 1:
                    raise ValueError(
                        f"boundary of a {c.dim}-cell hit dimension "
                        f"{self._by_label[t].dim}: {c.label!r} -> {t!r}")
                if mult <= 0:
                    raise ValueError("multiplicities must be positive")
            bnd[c.label] = row
        self.boundary = bnd
        self._check_dd()

    def _check_dd(self):
        for c in self.cells:
            acc = {}
            for t, m1 in self.boundary[c.label].items():
                for u, m2 in self.boundary[t].items():
                    acc[u] = acc.get(u, 0) + m1 * m2
            bad = {u: m for u, m in acc.items() if m % 2}
            if bad:
                raise ValueError(
                    f"boundary of boundary nonzero mod 2 at {c.label!r}: {bad!r}")

    def __len__(self):
        return len(self.cells)

    def __contains__(self, label):
        return label in self._by_label

    def cell(self, label):
        return self._by_label[label]

    def top_dim(self):
        return max((c.dim for c in self.cells), default=-1)

    def cells_of_dim(self, d):
        return [c for c in self.cells if c.dim == d]

    def facets(self, label):
        return dict(self.boundary[label])

    def closure(self, labels):
        """All cells that are iterated faces of the given ones (inclusive)."""
        seen = set()
        stack = list(labels)
        while stack:
            l = stack.pop()
            if l in seen:
                continue
            seen.add(l)
            stack.extend(self.boundary[l])
        return seen

    def subcomplex(self, labels, name=""):
        labels = set(labels)
        if labels != self.closure(labels):
            raise ValueError("label set is not closed under taking faces")
        cells = [c for c in self.cells if c.label in labels]
        bnd = {l: dict(self.boundary[l]) for l in labels}
        return CellComplex(cells, bnd, name=name or self.name)


def f_vector(cx):
    top = cx.top_dim()
    if top < 0:
        return ()
    counts = [0] * (top + 1)
    for c in cx.cells:
        counts[c.dim] += 1
    return tuple(counts)


def euler_characteristic(cx):
    return sum((-1) ** c.dim for c in cx.cells)


def _gf2_rank(rows):
    """Rank of a GF(2) matrix given as python-int bitmask rows."""
    pivots = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            high = cur.bit_length() - 1
            if high in pivots:
                cur ^= pivots[high]
            else:
                pivots[high] = cur
                rank += 1
                break
    return rank


def _boundary_matrix(cx, d):
    """Rows over GF(2) for the map from d-cells to (d-1)-cells."""
    lower = {c.label: i for i, c in enumerate(cx.cells_of_dim(d - 1))}
    rows = []
    for c in cx.cells_of_dim(d):
        bits = 0
        for t, m in cx.boundary[c.label].items():
            if m % 2:
                bits |= 1 << lower[t]
        rows.append(bits)
    return rows


def homology_mod2(cx):
    """Betti numbers of the mod-2 cellular chain complex, dims 0..top."""
    top = cx.top_dim()
    if top < 0:
        return ()
    ranks = {}
    for d in range(1, top + 1):
        ranks[d] = _gf2_rank(_boundary_matrix(cx, d))
    betti = []
    for d in range(top + 1):
        n_d = len(cx.cells_of_dim(d))
        betti.append(n_d - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return tuple(betti)


@dataclass
class RefinementWitness:
    ok: bool = True
    mapping: dict = field(default_factory=dict)
    fibers: dict = field(default_factory=dict)
    subdivision: dict = field(default_factory=dict)

    def preimage_counts_by_dim(self):
        """Per coarse cell dimension, number of fine cells mapping into it."""
        out = {}
        for sigma, fines in self.fibers.items():
            out[sigma] = len(fines)
        return out


@dataclass
class RefinementFailure:
    ok: bool = False
    reason: str = ""
    offender: object = None

    def __str__(self):
        return f"refinement check failed ({self.reason}) at {self.offender!r}"


def check_refinement(fine, coarse, mapping):
    """Verify that ``fine`` subdivides ``coarse`` along ``mapping``.

    ``mapping`` is a callable (or dict) from fine labels to coarse labels.  The
    witness requires: the map is total; dimensions never increase; the map is
    monotone on face posets; the same-dimension preimages form a mod-2 chain
    map; the closed preimage of every coarse cell has Euler characteristic 1;
    and every coarse cell is hit by a same-dimension fine cell.
    """
    get = mapping.get if isinstance(mapping, dict) else lambda l, _=None: mapping(l)
    fmap = {}
    for c in fine.cells:
        target = get(c.label, None)
        if target is None or target not in coarse:
            return RefinementFailure(reason="map undefined", offender=c.label)
        if c.dim > coarse.cell(target).dim:
            return RefinementFailure(reason="dimension increase", offender=c.label)
        fmap[c.label] = target

    faces_of = {c.label: coarse.closure([c.label]) for c in coarse.cells}
    for c in fine.cells:
        img = fmap[c.label]
        for t in fine.boundary[c.label]:
            if fmap[t] not in faces_of[img]:
                return RefinementFailure(reason="not monotone on faces",
                                         offender=(c.label, t))

    subdivision = {c.label: [] for c in coarse.cells}
    fibers = {c.label: [] for c in coarse.cells}
    for c in fine.cells:
        img = fmap[c.label]
        fibers[img].append(c.label)
        if c.dim == coarse.cell(img).dim:
            subdivision[img].append(c.label)

    for sigma in coarse.cells:
        if not subdivision[sigma.label]:
            return RefinementFailure(reason="coarse cell not covered",
                                     offender=sigma.label)

    for sigma in coarse.cells:
        lhs = {}
        for e in subdivision[sigma.label]:
            for t, m in fine.boundary[e].items():
                lhs[t] = (lhs.get(t, 0) + m) % 2
        rhs = {}
        for tau, m in coarse.boundary[sigma.label].items():
            if m % 2 == 0:
                continue
            for e in subdivision[tau]:
                rhs[e] = (rhs.get(e, 0) + 1) % 2
        lhs = {k for k, v in lhs.items() if v}
        rhs = {k for k, v in rhs.items() if v}
        if lhs != rhs:
            return RefinementFailure(reason="boundaries do not commute",
                                     offender=sigma.label)

    for sigma in coarse.cells:
        closed = faces_of[sigma.label]
        chi = sum((-1) ** fine.cell(e).dim
                  for e, img in fmap.items() if img in closed)
        if chi != 1:
            return RefinementFailure(reason="preimage Euler characteristic != 1",
                                     offender=sigma.label)

    return RefinementWitness(mapping=fmap, fibers=fibers, subdivision=subdivision)


def build_closure(tops, facet_fn, name=""):
    """Build a complex from top cells and a facet rule.

    ``tops`` is an iterable of Cell.  ``facet_fn`` maps a Cell to a list of
    Cells (repetitions encode incidence multiplicity).  The closure is taken,
    deduplicating by label.
    """
    cells = {}
    boundary = {}
    stack = list(tops)
    while stack:
        c = stack.pop()
        if c.label in cells:
            if cells[c.label].dim != c.dim:
                raise ValueError(f"label {c.label!r} appears in two dimensions")
            continue
        cells[c.label] = c
        row = {}
        for f in facet_fn(c):
            row[f.label] = row.get(f.label, 0) + 1
            stack.append(f)
        boundary[c.label] = row
    return CellComplex(cells.values(), boundary, name=name)


def quotient_complex(cx, relabel, name=""):
    """Quotient a complex along a label rewriting.

    ``relabel`` maps an old label to (new label, new dim); the new dimension
    may be smaller when the cell collapses.  Cells sharing a new label merge.
    The boundary of a merged cell is computed from its full-dimensional
    representatives: facets are relabeled and those that collapse below
    codimension one are dropped; all representatives must agree.
    """
    classes = {}
    for c in cx.cells:
        new_label, new_dim = relabel(c.label)
        if new_dim > c.dim:
            raise ValueError("a quotient cannot raise dimension")
        info = classes.setdefault(new_label, {"dim": new_dim, "degree": c.degree,
                                              "reps": []})
        if info["dim"] != new_dim:
            raise ValueError(f"label {new_label!r} assigned two dimensions")
        if c.dim == new_dim:
            info["reps"].append(c.label)
    cells = []
    boundary = {}
    for new_label, info in classes.items():
        if not info["reps"]:
            raise ValueError(f"no faithful representative for {new_label!r}")
        rows = []
        for rep in info["reps"]:
            row = {}
            for t, m in cx.boundary[rep].items():
                t_new, t_dim = relabel(t)
                if t_dim == info["dim"] - 1:
                    row[t_new] = row.get(t_new, 0) + m
            rows.append(row)
        first = rows[0]
        for other in rows[1:]:
            if other != first:
                raise ValueError(
                    f"representatives of {new_label!r} disagree on boundary")
        cells.append(Cell(new_label, info["dim"], info["degree"]))
        boundary[new_label] = first
    return CellComplex(cells, boundary, name=name)


def _label_to_obj(label):
    if isinstance(label, tuple):
        return {"t": [_label_to_obj(x) for x in label]}
    if isinstance(label, (str, int)):
        return label
    raise TypeError(f"label not serializable: {label!r}")


def _obj_to_label(obj):
    if isinstance(obj, dict):
        return tuple(_obj_to_label(x) for x in obj["t"])
    return obj


def to_json(cx):
    """Schema-stable JSON dump of a complex (cells plus boundary multisets)."""
    index = {c.label: i for i, c in enumerate(cx.cells)}
    return json.dumps({
        "name": cx.name,
        "cells": [{"id": i, "label": _label_to_obj(c.label), "dim": c.dim,
                   "degree": c.degree}
                  for i, c in enumerate(cx.cells)],
        "boundary": {str(index[c.label]): {str(index[t]): m
                                           for t, m in sorted(
                                               cx.boundary[c.label].items(),
                                               key=lambda kv: index[kv[0]])}
                     for c in cx.cells},
    }, sort_keys=True, separators=(",", ":"))


def from_json(text):
    data = json.loads(text)
    cells = [Cell(_obj_to_label(rec["label"]), rec["dim"], rec["degree"])
             for rec in data["cells"]]
    by_id = {rec["id"]: _obj_to_label(rec["label"]) for rec in data["cells"]}
    boundary = {}
    for i, row in data["boundary"].items():
        boundary[by_id[int(i)]] = {by_id[int(j)]: m for j, m in row.items()}
    return CellComplex(cells, boundary, name=data.get("name", ""))


def to_dot(cx):
    """DOT rendering of the face poset: nodes are cells ranked by dimension."""
    index = {c.label: i for i, c in enumerate(cx.cells)}
    lines = ["digraph faces {", '  rankdir=BT;']
    top = cx.top_dim()
    for d in range(top + 1):
        ids = [index[c.label] for c in cx.cells_of_dim(d)]
        if ids:
            lines.append("  { rank=same; " +
                         " ".join(f"c{i};" for i in ids) + " }")
    for c in cx.cells:
        i = index[c.label]
        text = repr(c.label).replace('"', "'")
        lines.append(f'  c{i} [label="{text}\\ndim {c.dim}"];')
    for c in cx.cells:
        for t, m in sorted(cx.boundary[c.label].items(),
                           key=lambda kv: index[kv[0]]):
            attr = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  c{index[t]} -> c{index[c.label]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Attachment schedules, the delooping ladder, and fiber reports.

Each cofibrant model grows by a sequence of cell attachments.  The
closed-form bookkeeping lives here: :func:`schedule` returns the ordered
attachment records for a model and cross-checks them against an
independently enumerated census of generating cells, failing hard on any
disagreement.  :func:`delooping_ladder` pairs the schedules of the three
classic models, the three degeneracy-aware models, and the two assembled
decorated models, checking that corresponding cells lose exactly one
dimension per step.  :func:`fiber_report` emits the symbolic fiber of
each tower stage in a small fixed grammar.

The fiber expressions are strings, never computed homotopy types: the
underlying spaces depend on an arbitrary target operad, which this
package does not represent.  Tokens: ``Omega^k X`` is a k-fold loop
space, ``O(n)`` the target's arity-n component, ``tfiber(O(n \\ point))``
the total fiber of the n-cube of nullary degeneracies, ``hofiber`` a
homotopy fiber, ``point`` a one-point space.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import classic_models as cm
from . import tilde_models as tm
from .tilde_models import DEFAULT_BOUND, GeneratingCellKey, ScheduleRecord

CLASSIC_SCHEDULED = ("triangle", "square", "square-unit", "pentagon")
SCHEDULED_MODELS = CLASSIC_SCHEDULED + tuple(tm.TILDE_MODELS)

# first stage at which a classic model attaches anything; cells the
# structure provides on its own (the identity operation, the unit as the
# empty product of the left action) are not attachments
_CLASSIC_START = {"triangle": 0, "square": 1, "square-unit": 1, "pentagon": 2}

_CLASSIC_TAG = {"triangle": "triangle", "square": "square",
                "square-unit": "square", "pentagon": "pentagon"}


@dataclass(frozen=True)
class AttachmentSchedule:
    model: str
    bound: int
    records: tuple

    def at_stage(self, stage):
        return tuple(r for r in self.records if r.stage == stage)


class ScheduleMismatch(Exception):
    """Closed form and enumerated census disagree; carries the diff."""

    def __init__(self, model, missing, extra):
        self.model = model
        self.missing = tuple(missing)
        self.extra = tuple(extra)
        lines = [f"schedule mismatch for {model}"]
        for r in self.missing:
            lines.append(f"  census only: {r}")
        for r in self.extra:
            lines.append(f"  closed form only: {r}")
        super().__init__("\n".join(lines))


def closed_form_records(model, bound=DEFAULT_BOUND):
    """The closed-form attachment list, stages 0 through ``bound``."""
    name = getattr(model, "name", model)
    if name in tm.TILDE_MODELS:
        return tuple(tm.tilde_schedule(name, bound))
    if name not in _CLASSIC_START:
        raise ValueError(f"{name!r} has no attachment schedule")
    offset = {"triangle": 0, "square": -1, "square-unit": -1,
              "pentagon": -2}[name]
    return tuple(ScheduleRecord(s, 0, s, s + offset, 1)
                 for s in range(_CLASSIC_START[name], bound + 1))


def census_records(model, bound=DEFAULT_BOUND):
    """The same list, independently enumerated from the model modules.

    Classic models: the top cells of each degree complex, one attachment
    per degree once the structure-provided cells are excluded.  Decorated
    models: the corked generating cells counted by explicit cork
    positions, with dimensions read off the base complexes.
    """
    name = getattr(model, "name", model)
    if name in tm.TILDE_MODELS:
        out = []
        for stage in range(bound + 1):
            agg = {}
            for key in tm.tilde_census(name, stage):
                spot = (key.m, key.degree, key.dim)
                agg[spot] = agg.get(spot, 0) + 1
            for (m, degree, dim), count in sorted(agg.items()):
                out.append(ScheduleRecord(stage, m, degree, dim, count))
        return tuple(out)
    if name not in _CLASSIC_START:
        raise ValueError(f"{name!r} has no attachment schedule")
    build_as = "square-unit" if name == "square-unit" else name
    out = []
    for stage in range(_CLASSIC_START[name], bound + 1):
        cells = cm.build_complex(build_as, stage).cells
        top = max(c.dim for c in cells)
        count = sum(1 for c in cells if c.dim == top)
        out.append(ScheduleRecord(stage, 0, stage, top, count))
    return tuple(out)


def schedule(model, bound=DEFAULT_BOUND):
    """Both routes, compared; raises :class:`ScheduleMismatch` on a diff."""
    name = getattr(model, "name", model)
    closed = closed_form_records(name, bound)
    census = census_records(name, bound)
    if sorted(closed) != sorted(census):
        closed_set, census_set = set(closed), set(census)
        raise ScheduleMismatch(name,
                               sorted(census_set - closed_set),
                               sorted(closed_set - census_set))
    return AttachmentSchedule(name, bound, closed)


# ---------------------------------------------------------------------------
# the delooping ladder
# ---------------------------------------------------------------------------

_LADDER_TAGS = {"triangle": "triangle", "square": "square",
                "pentagon": "pentagon",
                "triangle-tilde": "triangle", "square-tilde": "square",
                "pentagon-tilde": "pentagon",
                "wb-square-tilde": "wb-square",
                "b-pentagon-tilde": "b-pentagon"}

# the stage at which a model's generating cells start taking part in the
# cell-by-cell correspondence; the bare cap of the tree model sits below
# this threshold and is deliberately left out (it has no corked-disc
# counterpart; see the census rules)
_PARTICIPATION = {"triangle": 0, "square": 1, "pentagon": 2,
                  "triangle-tilde": 0, "square-tilde": 1,
                  "pentagon-tilde": 2,
                  "wb-square-tilde": 0, "b-pentagon-tilde": 1}

_CLASSIC_CHAIN = ("triangle", "square", "pentagon")
_TILDE_CHAIN = ("triangle-tilde", "square-tilde", "pentagon-tilde")
_DECORATED_CHAIN = ("wb-square-tilde", "b-pentagon-tilde")


def _ladder_keys(model, stage):
    """Generating-cell keys of one model at one stage, as (n, m, alpha)."""
    if model in tm.TILDE_MODELS:
        return [(k.n, k.m, k.alpha) for k in tm.tilde_census(model, stage)]
    if stage < _PARTICIPATION[model]:
        return []
    return [(stage, 0, ())]


def _key_dim(model, n, m, alpha):
    return GeneratingCellKey(_LADDER_TAGS[model], n, m, alpha).dim


@dataclass(frozen=True)
class LadderStep:
    source: str
    target: str
    matched: int
    drop_one: bool
    unmatched_source: tuple
    unmatched_target: tuple


@dataclass(frozen=True)
class LadderReport:
    bound: int
    steps: tuple
    echoes: tuple    # model pairs with identical attachment records

    def step(self, source, target):
        for s in self.steps:
            if (s.source, s.target) == (source, target):
                return s
        raise KeyError((source, target))


def _ladder_step(source, target, bound):
    start = max(_PARTICIPATION[source], _PARTICIPATION[target])
    matched = 0
    drop = True
    un_src, un_tgt = set(), set()
    for stage in range(bound + 1):
        src = set(_ladder_keys(source, stage))
        tgt = set(_ladder_keys(target, stage))
        if stage < start:
            un_src.update((n, m) for n, m, _ in src)
            un_tgt.update((n, m) for n, m, _ in tgt)
            continue
        if src != tgt:
            un_src.update((n, m) for n, m, _ in src - tgt)
            un_tgt.update((n, m) for n, m, _ in tgt - src)
        for n, m, alpha in src & tgt:
            matched += 1
            if _key_dim(source, n, m, alpha) - _key_dim(target, n, m,
                                                        alpha) != 1:
                drop = False
    return LadderStep(source, target, matched, drop,
                      tuple(sorted(un_src)), tuple(sorted(un_tgt)))


def delooping_ladder(bound=DEFAULT_BOUND):
    """Pair the schedules chain by chain and verify the dimension drop.

    Corresponding cells are equal (degree, cork pattern) keys.  Matched
    cells must lose exactly one dimension per step; cells below a step's
    participation threshold are reported unmatched, not failures.
    """
    steps = []
    for chain in (_CLASSIC_CHAIN, _TILDE_CHAIN, _DECORATED_CHAIN):
        for source, target in zip(chain, chain[1:]):
            steps.append(_ladder_step(source, target, bound))
    echoes = []
    for a, b in (("triangle-tilde", "wb-square-tilde"),
                 ("square-tilde", "b-pentagon-tilde")):
        if closed_form_records(a, bound) == closed_form_records(b, bound):
            echoes.append((a, b))
    return LadderReport(bound, tuple(steps), tuple(echoes))


# ---------------------------------------------------------------------------
# fiber reports
# ---------------------------------------------------------------------------

TOWERS = ("triangle", "square", "pentagon",
          "triangle-tilde", "square-tilde", "pentagon-tilde")


@dataclass(frozen=True)
class FiberReport:
    tower: str
    stage: int
    fiber: str


def fiber_report(tower, stage):
    """The symbolic fiber of the tower map at the given stage.

    Main ranges follow the loop-power rules (one loop per cell dimension
    of the stage's attachment).  Below them the stages are forced mapping
    spaces and the report says what they are directly: the stage-1 fiber
    of the line-model tower is the homotopy fiber of the nullary
    degeneracy, the stage-2 tree-model fiber is the bare total fiber,
    and the bottom stages collapse to a point or to the target's
    degree-0 component.
    """
    name = getattr(tower, "name", tower)
    if name not in TOWERS:
        raise ValueError(f"no tower named {name!r}")
    if stage < 0:
        raise ValueError("stages are nonnegative")
    n = stage
    if name == "triangle":
        expr = "O(0)" if n == 0 else f"empty or Omega^{n} O({n})"
    elif name == "square":
        expr = "point" if n == 0 else f"empty or Omega^{n - 1} O({n})"
    elif name == "pentagon":
        expr = "point" if n <= 1 else f"empty or Omega^{n - 2} O({n})"
    elif name == "triangle-tilde":
        expr = f"empty or Omega^{n} tfiber(O({n} \\ point))"
    elif name == "square-tilde":
        if n == 0:
            expr = "point"
        elif n == 1:
            expr = "hofiber(O(1) -> O(0))"
        else:
            expr = f"empty or Omega^{n - 1} tfiber(O({n} \\ point))"
    else:
        if n <= 0:
            expr = "point"
        elif n == 1:
            expr = "O(0)"
        elif n == 2:
            expr = "tfiber(O(2 \\ point))"
        else:
            expr = f"empty or Omega^{n - 2} tfiber(O({n} \\ point))"
    return FiberReport(name, stage, expr)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _aligned(headers, rows):
    rows = [[str(v) for v in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    def line(vals):
        return "  ".join(v.rjust(w) for v, w in zip(vals, widths))
    out = [line(headers), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out)


def schedule_to_obj(sched):
    return {"model": sched.model, "bound": sched.bound,
            "records": [asdict(r) for r in sched.records]}


def schedule_table(sched):
    return _aligned(["stage", "sub", "degree", "dim", "count"],
                    [(r.stage, r.sub_stage, r.degree, r.dim, r.count)
                     for r in sched.records])


def ladder_to_obj(report):
    return {"bound": report.bound,
            "steps": [{"source": s.source, "target": s.target,
                       "matched": s.matched, "drop_one": s.drop_one,
                       "unmatched_source": [list(u) for u in
                                            s.unmatched_source],
                       "unmatched_target": [list(u) for u in
                                            s.unmatched_target]}
                      for s in report.steps],
            "echoes": [list(e) for e in report.echoes]}


def ladder_table(report):
    rows = [(s.source, s.target, s.matched,
             "yes" if s.drop_one else "NO",
             " ".join(f"({n},{m})" for n, m in s.unmatched_source) or "-",
             " ".join(f"({n},{m})" for n, m in s.unmatched_target) or "-")
            for s in report.steps]
    return _aligned(["source", "target", "matched", "drop1",
                     "unmatched src", "unmatched tgt"], rows)


def fiber_to_obj(report):
    return {"tower": report.tower, "stage": report.stage,
            "fiber": report.fiber}

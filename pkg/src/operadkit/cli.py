"""Command-line front end for building, verifying, and reporting.

Verbs: enumerate, build, fvector, euler, homology, axioms, schedule,
ladder, fibers, refine, dump.  Output formats: json (schema-stable,
sorted keys), dot (complexes as graphs), table (aligned plain text).
Verification verbs (axioms, schedule, ladder, refine) print a single
PASS or FAIL line first and exit 0 on PASS, 2 on FAIL; usage problems
exit 1.  Degree and stage requests above the bound (default 6, env
``OPERADKIT_BOUND``, flag ``--bound``) are refused with a size estimate
unless ``--allow-large`` is given.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import b_construction as bc
from . import classic_models as cm
from . import complexes as cx
from . import tilde_models as tm
from . import towers as tw
from . import tree_core as tc
from . import wb_construction as wb

FINITE_BUILDERS = {
    "triangle": lambda n, b: cm.build_complex("triangle", n, bound=b),
    "square": lambda n, b: cm.build_complex("square", n, bound=b),
    "square-unit": lambda n, b: cm.build_complex("square-unit", n, bound=b),
    "pentagon": lambda n, b: cm.build_complex("pentagon", n, bound=b),
    "wb-square-bar": lambda n, b: wb.assemble_wb_bar(n, bound=b),
    "wb-square": lambda n, b: wb.quotient_wb(n, bound=b),
    "b-pentagon-bar": lambda n, b: bc.assemble_b_bar(n, bound=b),
    "b-pentagon": lambda n, b: bc.quotient_b(n, bound=b),
}

ALL_MODELS = tuple(FINITE_BUILDERS) + tuple(tm.TILDE_MODELS)

AXIOM_MODELS = ("triangle", "square", "square-unit", "pentagon",
                "triangle-tilde", "square-tilde", "pentagon-tilde",
                "wb-square", "b-pentagon")

# rough per-degree growth used only to phrase refusals
_GROWTH = {"triangle": 2, "square": 3, "square-unit": 3, "pentagon": 3,
           "wb-square-bar": 5, "wb-square": 4,
           "b-pentagon-bar": 6, "b-pentagon": 5}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    p = _Parser(prog="operadkit", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("verb", choices=("enumerate", "build", "fvector", "euler",
                                    "homology", "axioms", "schedule",
                                    "ladder", "fibers", "refine", "dump"))
    p.add_argument("--model", help="model id; see README for the list")
    p.add_argument("--n", type=int, help="degree (arity bound for axioms)")
    p.add_argument("--stage", type=int, help="filtration stage bound")
    p.add_argument("--format", default="table",
                   choices=("json", "dot", "table"))
    p.add_argument("--seed", type=int, default=tm.DEFAULT_SEED)
    p.add_argument("--bound", type=int, default=None,
                   help="size guard (default 6 or OPERADKIT_BOUND)")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--out", help="write output to this path")
    p.add_argument("--map", dest="map_path",
                   help="refine: JSON file with explicit label pairs")
    return p


def _bound(args):
    if args.bound is not None:
        return args.bound
    env = os.environ.get("OPERADKIT_BOUND")
    return int(env) if env else tm.DEFAULT_BOUND


def _guard(args, k, what="degree"):
    bound = _bound(args)
    if k > bound and not args.allow_large:
        base = _GROWTH.get(args.model, 2)
        raise UsageError(
            f"{what} {k} exceeds the bound {bound}; roughly {base ** k} "
            f"cells, pass --allow-large to proceed")


def _need_model(args, allowed):
    if args.model is None:
        raise UsageError("this verb needs --model")
    if args.model not in allowed:
        raise UsageError(f"unknown or unsupported model {args.model!r}; "
                         f"choices: {', '.join(allowed)}")
    return args.model


def _need(args, attr, what):
    value = getattr(args, attr)
    if value is None:
        raise UsageError(f"this verb needs --{attr}")
    if value < 0:
        raise UsageError(f"--{attr} must be nonnegative")
    return value


def _finite_complex(args):
    name = _need_model(args, ALL_MODELS)
    if name in tm.TILDE_MODELS:
        raise UsageError(
            f"{name} has no finite complex per degree; its cells are "
            f"indexed by stages (use enumerate --stage or schedule)")
    n = _need(args, "n", "degree")
    _guard(args, n)
    return name, n, FINITE_BUILDERS[name](n, max(n, _bound(args)))


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _label_str(label):
    return cx.label_key(label)


# ---------------------------------------------------------------------------
# verb handlers; each returns (exit code, output text)
# ---------------------------------------------------------------------------

def _cmd_enumerate(args):
    name = _need_model(args, ALL_MODELS)
    if name in tm.TILDE_MODELS:
        stage = _need(args, "stage", "stage")
        _guard(args, stage, "stage")
        keys = sorted(tm.tilde_census(name, stage),
                      key=lambda k: (k.m, k.alpha))
        if args.format == "json":
            obj = [{"tag": k.tag, "n": k.n, "m": k.m,
                    "alpha": list(k.alpha), "degree": k.degree,
                    "dim": k.dim} for k in keys]
            return 0, _dumps({"model": name, "stage": stage, "cells": obj})
        rows = [(k.n, k.m, "(" + ",".join(map(str, k.alpha)) + ")",
                 k.degree, k.dim) for k in keys]
        return 0, tw._aligned(["n", "m", "alpha", "degree", "dim"], rows)
    name, n, complex_ = _finite_complex(args)
    if args.format == "json":
        obj = [{"label": _label_str(c.label), "dim": c.dim,
                "degree": c.degree} for c in complex_.cells]
        return 0, _dumps({"model": name, "n": n, "cells": obj})
    rows = [(c.dim, c.degree, _label_str(c.label)) for c in complex_.cells]
    return 0, tw._aligned(["dim", "degree", "label"], rows)


def _cmd_build(args):
    name, n, complex_ = _finite_complex(args)
    if args.format == "dot":
        return 0, cx.to_dot(complex_)
    if args.format == "json":
        return 0, cx.to_json(complex_)
    fv = cx.f_vector(complex_)
    rows = [(d, fv[d]) for d in range(len(fv))]
    head = f"{name} n={n}: {len(complex_)} cells, top dim {complex_.top_dim()}"
    return 0, head + "\n" + tw._aligned(["dim", "cells"], rows)


def _cmd_fvector(args):
    name, n, complex_ = _finite_complex(args)
    fv = cx.f_vector(complex_)
    if args.format == "json":
        return 0, _dumps({"model": name, "n": n, "fvector": list(fv)})
    return 0, " ".join(str(v) for v in fv)


def _cmd_euler(args):
    name, n, complex_ = _finite_complex(args)
    chi = cx.euler_characteristic(complex_)
    if args.format == "json":
        return 0, _dumps({"model": name, "n": n, "euler": chi})
    return 0, str(chi)


def _cmd_homology(args):
    name, n, complex_ = _finite_complex(args)
    betti = cx.homology_mod2(complex_)
    if args.format == "json":
        return 0, _dumps({"model": name, "n": n, "betti_mod2": list(betti)})
    return 0, " ".join(str(b) for b in betti)


def _wb_cell_suite(seed, arity_bound):
    operands = {0: [wb.UNIT_CELL]}
    for n in range(1, min(arity_bound, 3) + 1):
        operands[n] = [c.label for c in wb.quotient_wb(n).cells]
    ops = type("WbOps", (), {
        "left": staticmethod(wb.wb_left),
        "right": staticmethod(wb.wb_right)})()
    report = cm.AxiomReport(model="wb-square cell actions", seed=seed,
                            samples=sum(map(len, operands.values())))
    cm._collect(report, cm.weak_bimodule_axioms(ops, operands, arity_bound))
    return report


def _b_cell_suite(seed, arity_bound):
    """Action laws for the two-level cells, compared in the quotient.

    Pinning collapses nested grafts: acting twice on the left (or twice
    on the right at the same leaf) lands in the same quotient cell as
    acting once with the composed star.  Disjoint grafts commute on the
    nose; unary actions only re-canonicalize.
    """
    q = bc.quotient_label
    pools = {n: bc.enumerate_b_cells(n) for n in range(1, 4)}
    report = cm.AxiomReport(model="b-pentagon cell actions", seed=seed,
                            samples=sum(map(len, pools.values())))

    def instances():
        for n, cells in sorted(pools.items()):
            for x in cells:
                yield "unary-left", (x,), q(bc.b_left(1, 1, x)), q(x)
                yield "unary-right", (x,), q(bc.b_right(x, 1, 1)), q(x)
                for k in range(2, arity_bound):
                    for l in range(2, arity_bound):
                        for p2 in range(1, l + 1):
                            lhs = q(bc.b_left(k, 1, bc.b_left(l, p2, x)))
                            rhs = q(bc.b_left(k + l - 1, p2, x))
                            yield "left-left", (k, l, p2, x), lhs, rhs
                for i in range(2, arity_bound):
                    for j in range(2, arity_bound):
                        for p in range(1, n + 1):
                            for r in range(1, i + 1):
                                lhs = q(bc.b_right(bc.b_right(x, p, i),
                                                   p + r - 1, j))
                                rhs = q(bc.b_right(x, p, i + j - 1))
                                yield "right-nested", (p, i, r, j, x), lhs, rhs
                            for s in range(p + 1, n + 1):
                                lhs = q(bc.b_right(bc.b_right(x, p, i),
                                                   s + i - 1, j))
                                rhs = q(bc.b_right(bc.b_right(x, s, j), p, i))
                                yield "right-disjoint", (p, i, s, j, x), lhs, rhs
                for k in range(2, arity_bound):
                    for p in range(1, k + 1):
                        for s in range(1, n + 1):
                            lhs = q(bc.b_left(k, p, bc.b_right(x, s, 2)))
                            rhs = q(bc.b_right(bc.b_left(k, p, x),
                                               s + p - 1, 2))
                            yield "left-right", (k, p, s, x), lhs, rhs

    cm._collect(report, instances())
    return report


def _tilde_point_suite(name, seed, arity_bound, samples=40):
    rng = random.Random(seed)
    report = cm.AxiomReport(model=name, seed=seed, samples=samples)
    if name == "triangle-tilde":
        operands = {n: [tm.rand_hairy(rng, n, tm.INTERVAL)
                        for _ in range(samples)]
                    for n in range(0, arity_bound + 1)}
        cm._collect(report, cm.weak_bimodule_axioms(
            tm.hairy_ops(name), operands, arity_bound, nullary=True))
        return report
    if name == "square-tilde":
        operands = {n: [tm.rand_hairy(rng, n, tm.LINE)
                        for _ in range(samples)]
                    for n in range(0, arity_bound + 1)}
        operands[0].append(tm.empty_config(tm.LINE))
        cm._collect(report, cm.bimodule_axioms(
            tm.hairy_ops(name), operands, arity_bound))
        return report
    if name == "pentagon-tilde":
        operands = {}
        for n in range(0, arity_bound + 1):
            pool = [tm.MetricTree.corolla(n)] if n != 1 else \
                   [tm.MetricTree.identity()]
            while len(pool) < max(3, samples // 10):
                t = tm.rand_metric_tree(rng, arity_bound + 1)
                if t.leaf_count == n:
                    pool.append(t)
                elif len(pool) >= 3 and rng.random() < 0.02:
                    break
            operands[n] = pool
        cm._collect(report, cm.operad_axioms(
            tm.compose_metric, tm.MetricTree.identity(), operands,
            arity_bound))
        return report
    raise UsageError(f"no axiom suite for {name}")


def run_axiom_suite(name, seed, arity_bound=4):
    if name in ("triangle", "square", "square-unit", "pentagon"):
        report = cm.check_axioms(name, arity_bound=arity_bound, seed=seed)
        if name == "square-unit":
            unit_rep = cm.unit_check(seed=seed)
            report.entries.extend(unit_rep.entries)
        return report
    if name == "wb-square":
        return _wb_cell_suite(seed, arity_bound)
    if name == "b-pentagon":
        return _b_cell_suite(seed, arity_bound)
    return _tilde_point_suite(name, seed, arity_bound)


def _cmd_axioms(args):
    name = _need_model(args, AXIOM_MODELS)
    arity_bound = args.n if args.n is not None else 4
    _guard(args, arity_bound, "arity bound")
    report = run_axiom_suite(name, args.seed, arity_bound)
    status = "PASS" if report.passed else "FAIL"
    head = (f"{status} axioms {name}: {len(report.entries)} laws, "
            f"{len(report.failures())} failing (seed {args.seed})")
    if args.format == "json":
        body = _dumps(report.as_json_obj())
    else:
        rows = [(e.axiom, "ok" if e.ok else "FAIL",
                 "" if e.counterexample is None else repr(e.counterexample))
                for e in report.entries]
        body = tw._aligned(["law", "status", "counterexample"], rows)
    return (0 if report.passed else 2), head + "\n" + body


def _cmd_schedule(args):
    name = _need_model(args, tw.SCHEDULED_MODELS)
    stage = args.stage if args.stage is not None else _bound(args)
    _guard(args, stage, "stage")
    try:
        sched = tw.schedule(name, stage)
    except tw.ScheduleMismatch as exc:
        return 2, f"FAIL schedule {name}: closed form differs from census" \
                  f"\n{exc}"
    head = (f"PASS schedule {name}: stages 0..{stage} match the "
            f"enumerated census ({len(sched.records)} records)")
    if args.format == "json":
        return 0, head + "\n" + _dumps(tw.schedule_to_obj(sched))
    return 0, head + "\n" + tw.schedule_table(sched)


def _cmd_ladder(args):
    stage = args.stage if args.stage is not None else _bound(args)
    _guard(args, stage, "stage")
    report = tw.delooping_ladder(stage)
    ok = all(s.drop_one for s in report.steps)
    status = "PASS" if ok else "FAIL"
    head = (f"{status} ladder: {len(report.steps)} steps through stage "
            f"{stage}, dimension drop 1 on every matched cell")
    if args.format == "json":
        return (0 if ok else 2), head + "\n" + _dumps(tw.ladder_to_obj(report))
    return (0 if ok else 2), head + "\n" + tw.ladder_table(report)


def _cmd_fibers(args):
    name = _need_model(args, tw.TOWERS)
    stage = args.stage if args.stage is not None else _bound(args)
    _guard(args, stage, "stage")
    reports = [tw.fiber_report(name, k) for k in range(stage + 1)]
    if args.format == "json":
        return 0, _dumps({"tower": name,
                          "fibers": [tw.fiber_to_obj(r) for r in reports]})
    return 0, tw._aligned(["stage", "fiber"],
                          [(r.stage, r.fiber) for r in reports])


_REFINEMENTS = {
    "wb-square": ("triangle", wb.quotient_wb,
                  lambda n: cm.build_complex("triangle", n),
                  wb.wb_carrier, wb.quotient_cell_from_obj),
    "b-pentagon": ("square", bc.quotient_b,
                   lambda n: cm.build_complex("square", n),
                   bc.b_carrier, bc.b_quotient_cell_from_obj),
}


def _load_map(path, fine_from_obj):
    """Read explicit pairs [fine label object, coarse face tree object]."""
    with open(path) as fh:
        data = json.load(fh)
    pairs = data["pairs"] if isinstance(data, dict) else data
    mapping = {}
    for fine_obj, coarse_obj in pairs:
        fine = fine_from_obj(fine_obj)
        coarse = tc.from_json(json.dumps(coarse_obj))
        mapping[fine] = coarse
    return mapping


def _cmd_refine(args):
    name = _need_model(args, tuple(_REFINEMENTS))
    n = _need(args, "n", "degree")
    if n < 1:
        raise UsageError("refinement maps start at degree 1")
    _guard(args, n)
    coarse_name, fine_fn, coarse_fn, carrier, from_obj = _REFINEMENTS[name]
    fine, coarse = fine_fn(n), coarse_fn(n)
    mapping = (_load_map(args.map_path, from_obj) if args.map_path
               else carrier)
    witness = cx.check_refinement(fine, coarse, mapping)
    if not witness.ok:
        return 2, (f"FAIL refine {name} -> {coarse_name} at n={n}: "
                   f"{witness.reason} at {witness.offender!r}")
    head = (f"PASS refine {name} -> {coarse_name} at n={n}: "
            f"{len(fine)} cells over {len(coarse)}")
    counts = witness.preimage_counts_by_dim()
    if args.format == "json":
        obj = {"model": name, "coarse": coarse_name, "n": n,
               "fine_cells": len(fine), "coarse_cells": len(coarse),
               "preimage_sizes": {cx.label_key(k): v
                                  for k, v in counts.items()}}
        return 0, head + "\n" + _dumps(obj)
    rows = sorted(((cx.label_key(k), v) for k, v in counts.items()))
    return 0, head + "\n" + tw._aligned(["coarse cell", "fine cells"], rows)


def _cmd_dump(args):
    name, n, complex_ = _finite_complex(args)
    obj = {"model": name, "n": n,
           "fvector": list(cx.f_vector(complex_)),
           "euler": cx.euler_characteristic(complex_),
           "betti_mod2": list(cx.homology_mod2(complex_)),
           "complex": json.loads(cx.to_json(complex_))}
    return 0, _dumps(obj)


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "build": _cmd_build,
    "fvector": _cmd_fvector,
    "euler": _cmd_euler,
    "homology": _cmd_homology,
    "axioms": _cmd_axioms,
    "schedule": _cmd_schedule,
    "ladder": _cmd_ladder,
    "fibers": _cmd_fibers,
    "refine": _cmd_refine,
    "dump": _cmd_dump,
}


def run(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        code, text = _HANDLERS[args.verb](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()

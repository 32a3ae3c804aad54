"""Attachment schedules against censuses, the delooping ladder, and the
symbolic fiber grammar."""

import pytest

from operadkit import tilde_models as tm
from operadkit import towers


def test_nine_models_carry_schedules():
    assert len(towers.SCHEDULED_MODELS) == 9
    assert set(towers.CLASSIC_SCHEDULED) == {
        "triangle", "square", "square-unit", "pentagon"}
    assert set(towers.SCHEDULED_MODELS) - set(towers.CLASSIC_SCHEDULED) == set(
        tm.TILDE_MODELS)


def test_every_schedule_survives_the_census_cross_check():
    for name in towers.SCHEDULED_MODELS:
        sched = towers.schedule(name, bound=6)
        assert sched.records == towers.closed_form_records(name, 6)
        assert [r.stage for r in sched.records] == sorted(
            r.stage for r in sched.records)


def test_classic_schedules_attach_one_top_cell_per_stage():
    tri = towers.schedule("triangle", bound=6)
    assert [(r.stage, r.degree, r.dim, r.count) for r in tri.records] == [
        (s, s, s, 1) for s in range(7)]
    pent = towers.schedule("pentagon", bound=6)
    assert [(r.stage, r.degree, r.dim, r.count) for r in pent.records] == [
        (s, s, s - 2, 1) for s in range(2, 7)]


def test_unit_variant_schedules_like_the_plain_line_model():
    assert (towers.closed_form_records("square-unit", 6)
            == towers.closed_form_records("square", 6))
    assert towers.closed_form_records("square", 6)[0].stage == 1


def test_line_tilde_stage_three_records():
    sched = towers.schedule("square-tilde", bound=3)
    assert [(r.degree, r.dim, r.count) for r in sched.at_stage(3)] == [
        (3, 2, 1), (2, 3, 3), (1, 4, 3), (0, 5, 1)]


def test_unknown_models_are_rejected():
    with pytest.raises(ValueError):
        towers.closed_form_records("hexagon")
    with pytest.raises(ValueError):
        towers.census_records("hexagon")


def test_a_doctored_census_raises_a_mismatch_with_the_diff(monkeypatch):
    genuine = tm.tilde_schedule

    def doctored(name, stage):
        records = list(genuine(name, stage))
        r = records[-1]
        records[-1] = tm.ScheduleRecord(r.stage, r.sub_stage, r.degree,
                                        r.dim, r.count + 1)
        return records

    monkeypatch.setattr(tm, "tilde_schedule", doctored)
    with pytest.raises(towers.ScheduleMismatch) as err:
        towers.schedule("triangle-tilde", bound=3)
    assert err.value.model == "triangle-tilde"
    assert len(err.value.missing) == 1 and len(err.value.extra) == 1
    assert err.value.missing[0].count + 1 == err.value.extra[0].count
    assert "schedule mismatch" in str(err.value)


# ---------------------------------------------------------------------------
# the delooping ladder

def test_every_ladder_step_drops_exactly_one_dimension():
    report = towers.delooping_ladder(bound=6)
    assert len(report.steps) == 5
    assert all(step.drop_one for step in report.steps)


def test_ladder_matched_counts():
    report = towers.delooping_ladder(bound=6)
    by_pair = {(s.source, s.target): s.matched for s in report.steps}
    assert by_pair == {
        ("triangle", "square"): 6,
        ("square", "pentagon"): 5,
        ("triangle-tilde", "square-tilde"): 126,
        ("square-tilde", "pentagon-tilde"): 124,
        ("wb-square-tilde", "b-pentagon-tilde"): 126,
    }


def test_ladder_unmatched_cells_are_exactly_the_documented_set():
    report = towers.delooping_ladder(bound=6)
    expected = {
        ("triangle", "square"): (((0, 0),), ()),
        ("square", "pentagon"): (((1, 0),), ()),
        ("triangle-tilde", "square-tilde"): (((0, 0),), ()),
        ("square-tilde", "pentagon-tilde"): (((0, 1), (1, 0)), ((0, 1),)),
        ("wb-square-tilde", "b-pentagon-tilde"): (((0, 0),), ()),
    }
    for step in report.steps:
        assert (step.unmatched_source, step.unmatched_target) == expected[
            (step.source, step.target)]


def test_classic_ladder_dimensions_at_each_degree():
    for n in range(2, 7):
        dims = [towers._key_dim(model, n, 0, ())
                for model in ("triangle", "square", "pentagon")]
        assert dims == [n, n - 1, n - 2]


def test_echo_pairs_share_their_schedules():
    report = towers.delooping_ladder(bound=6)
    assert report.echoes == (("triangle-tilde", "wb-square-tilde"),
                             ("square-tilde", "b-pentagon-tilde"))
    with pytest.raises(KeyError):
        report.step("triangle", "pentagon")


# ---------------------------------------------------------------------------
# fiber reports

def test_fiber_grammar_over_the_six_towers():
    cases = {
        ("triangle", 0): "O(0)",
        ("triangle", 1): "empty or Omega^1 O(1)",
        ("triangle", 3): "empty or Omega^3 O(3)",
        ("square", 0): "point",
        ("square", 1): "empty or Omega^0 O(1)",
        ("square", 4): "empty or Omega^3 O(4)",
        ("pentagon", 0): "point",
        ("pentagon", 1): "point",
        ("pentagon", 2): "empty or Omega^0 O(2)",
        ("pentagon", 5): "empty or Omega^3 O(5)",
        ("triangle-tilde", 0): "empty or Omega^0 tfiber(O(0 \\ point))",
        ("triangle-tilde", 2): "empty or Omega^2 tfiber(O(2 \\ point))",
        ("square-tilde", 0): "point",
        ("square-tilde", 1): "hofiber(O(1) -> O(0))",
        ("square-tilde", 2): "empty or Omega^1 tfiber(O(2 \\ point))",
        ("pentagon-tilde", 0): "point",
        ("pentagon-tilde", 1): "O(0)",
        ("pentagon-tilde", 2): "tfiber(O(2 \\ point))",
        ("pentagon-tilde", 3): "empty or Omega^1 tfiber(O(3 \\ point))",
    }
    for (tower, stage), expr in cases.items():
        report = towers.fiber_report(tower, stage)
        assert report == towers.FiberReport(tower, stage, expr)


def test_fiber_reports_are_total_over_the_supported_range():
    for tower in towers.TOWERS:
        for stage in range(8):
            assert towers.fiber_report(tower, stage).fiber
    with pytest.raises(ValueError):
        towers.fiber_report("wb-square-tilde", 1)
    with pytest.raises(ValueError):
        towers.fiber_report("triangle", -1)


# ---------------------------------------------------------------------------
# rendering

def test_schedule_render_shapes():
    sched = towers.schedule("pentagon-tilde", bound=3)
    obj = towers.schedule_to_obj(sched)
    assert obj["model"] == "pentagon-tilde" and obj["bound"] == 3
    assert all(set(r) == {"stage", "sub_stage", "degree", "dim", "count"}
               for r in obj["records"])
    table = towers.schedule_table(sched)
    lines = table.splitlines()
    assert lines[0].split() == ["stage", "sub", "degree", "dim", "count"]
    assert len(lines) == len(sched.records) + 2


def test_ladder_render_shapes():
    report = towers.delooping_ladder(bound=4)
    obj = towers.ladder_to_obj(report)
    assert len(obj["steps"]) == 5
    assert obj["echoes"] == [["triangle-tilde", "wb-square-tilde"],
                             ["square-tilde", "b-pentagon-tilde"]]
    table = towers.ladder_table(report)
    assert "drop1" in table.splitlines()[0]
    assert " NO " not in table
    fib = towers.fiber_to_obj(towers.fiber_report("square", 2))
    assert fib == {"tower": "square", "stage": 2,
                   "fiber": "empty or Omega^1 O(2)"}

import asyncio
from typing import List

import pytest

from polycell.core.errors import BadParameter, BudgetExceeded
from polycell.corpus import builders
from polycell.formats import pcc
from polycell.schemas.report import InstanceStatus
from polycell.suites.base import BaseSuite, CheckOutcome, SuiteInstance
from polycell.suites.conjecture import ConjectureSearch, run_conjecture
from polycell.suites.factorization import COMPLEX_CASES
from polycell.suites.links import LinkSuite
from polycell.suites.registry import SUITES, get_suite, list_suites
from polycell.suites.runner import run_suite
from polycell.suites.transitivity import FlagTransitivitySuite


class ScriptedSuite(BaseSuite):
    """Instances whose names say how the check should end."""

    suite_id = "scripted"
    title = "scripted outcomes"

    def instances(self) -> List[SuiteInstance]:
        return [
            SuiteInstance(name, f"scripted {name}", {"x": builders.polygon(3)})
            for name in ("pass", "fail", "budget", "crash")
        ]

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        if instance.name == "budget":
            raise BudgetExceeded("too many nodes")
        if instance.name == "crash":
            raise ValueError("boom")
        if instance.name == "fail":
            return CheckOutcome(False, "wrong", {"witness": builders.loop()})
        return CheckOutcome(True, "fine")


def test_base_suite_records_every_outcome():
    suite = ScriptedSuite(seed=3, trials=1)
    report = asyncio.run(suite.run(workers=2))
    assert [r.status for r in report.instances] == [
        InstanceStatus.PASS,
        InstanceStatus.FAIL,
        InstanceStatus.SKIPPED,
        InstanceStatus.ERROR,
    ]
    assert suite.stats == {"passed": 1, "failed": 1, "skipped": 1, "errors": 1}
    assert not report.ok
    assert report.status == "fail"


def test_failures_carry_reproducible_documents():
    report = asyncio.run(ScriptedSuite().run())
    failed, crashed = report.instances[1], report.instances[3]
    assert sorted(failed.documents) == ["witness", "x"]
    assert pcc.loads(failed.documents["x"]) == builders.polygon(3)
    assert crashed.detail == "ValueError: boom"
    assert report.instances[2].documents == {}


def test_registry():
    assert isinstance(get_suite("e8"), LinkSuite)
    assert get_suite("nope") is None
    suites = list_suites()
    assert [s.suite_id for s in suites] == list(SUITES)
    assert all(s.title for s in suites)


def test_suite_seed_and_trials():
    suite = get_suite("e8", seed=11, trials=3)
    assert (suite.seed, suite.trials) == (11, 3)
    first = [i.construction for i in suite.instances()]
    again = [i.construction for i in get_suite("e8", seed=11, trials=3).instances()]
    assert first == again
    assert "seed=11" in first[0]


def test_run_suite_reports_timing_only_on_request():
    report = run_suite("e3a", seed=1, trials=2)
    assert report.ok, report.to_json()
    assert report.passed == 5
    assert report.wall_clock is None
    assert "wall_clock" not in report.to_json()
    timed = run_suite("bf", seed=1, trials=4, timing=True)
    assert timed.ok
    assert timed.wall_clock is not None


def test_unknown_suite_rejected():
    with pytest.raises(BadParameter):
        run_suite("nope")


@pytest.mark.parametrize("suite_id", ["e8", "bf"])
def test_random_suites_pass(suite_id):
    report = run_suite(suite_id, seed=5, trials=4)
    assert report.ok, report.to_json()
    assert report.failed == 0


def test_flag_transitivity_fixtures():
    suite = FlagTransitivitySuite(trials=3)
    for instance in suite.instances():
        if "tetrahedron" in instance.name:
            continue
        outcome = suite.check(instance)
        assert outcome.passed, outcome.detail


def test_cartesian_automorphisms_of_triangle_times_triangle():
    suite = get_suite("g12")
    outcome = suite.check(suite.instances()[0])
    assert outcome.passed, outcome.detail
    assert [i.name for i in suite.instances()] == [name for name, _, _ in COMPLEX_CASES]


def test_even_cycle_suite_first_case():
    suite = get_suite("h2")
    outcome = suite.check(suite.instances()[0])
    assert outcome.passed, outcome.detail


def test_conjecture_search_arguments():
    with pytest.raises(BadParameter):
        ConjectureSearch("h99", "small")
    with pytest.raises(BadParameter):
        ConjectureSearch("h11", "huge")


def test_conjecture_instances_are_relabeled():
    search = ConjectureSearch("h11", "small", seed=4)
    instances = search.instances()
    assert [i.name for i in instances] == [
        "hexagon x hexagon",
        "hexagon x hexagon chain 2",
        "hexagon chain 2 x hexagon chain 2",
        "hexagon x hexagon x hexagon",
    ]
    first = instances[0].inputs["factor0"]
    assert all(v.startswith("p") for v in first.skeleton.vertices)


@pytest.mark.slow
@pytest.mark.parametrize("conjecture", ["h11", "h12"])
def test_small_conjecture_search_finds_no_counterexample(conjecture):
    report = run_conjecture(conjecture, "small", seed=1)
    assert report.counterexample is None
    assert report.verdict == "no counterexample within bounds"
    assert all(r.status != InstanceStatus.ERROR for r in report.instances)


@pytest.mark.slow
@pytest.mark.parametrize("suite_id", ["e9", "g12", "h2"])
def test_fixture_suites(suite_id):
    report = run_suite(suite_id, trials=4)
    assert report.ok, report.to_json()

import dataclasses
import multiprocessing

import pytest

from invschub import sweeps
from invschub.sweeps import (
    BoundError, SuiteError, SweepReport, describe_suite, enumerate_universe, resolve_suite,
    run_suite, suite_names,
)

from . import oracles as O


def test_universes_match_the_oracle():
    assert [y.one_line(5) for y in enumerate_universe("inv", 5)] == sorted(O.involutions(5))
    assert [z.one_line(6) for z in enumerate_universe("fpf", 6)] == sorted(O.fpf_involutions(6))
    assert len(enumerate_universe("perm", 5)) == 120
    assert [len(enumerate_universe("inv", n)) for n in range(1, 8)] == [1, 2, 4, 10, 26, 76, 232]


def test_universe_bounds():
    with pytest.raises(BoundError):
        enumerate_universe("perm", 10)
    with pytest.raises(BoundError):
        enumerate_universe("inv", 5, bound=4)
    assert len(enumerate_universe("fpf", 4, bound=4)) == 3
    with pytest.raises(ValueError):
        enumerate_universe("matchings", 4)
    report = None
    with pytest.raises(BoundError):
        report = run_suite("atoms-i5", bound=4)
    assert report is None


def test_suite_names_resolve():
    names = suite_names()
    assert len(names) == len(set(names)) == 34
    for name in names:
        fam, n = resolve_suite(name)
        assert name == f"{fam.name}-{fam.letter}{n}"
        assert describe_suite(name)
    assert resolve_suite("tau")[1] == 6
    assert resolve_suite("tau", 7)[1] == 7
    for bad in ["nope-s6", "tau-i6", "tau-s"]:
        with pytest.raises(SuiteError):
            resolve_suite(bad)
    with pytest.raises(SuiteError):
        resolve_suite("tau-s6", 7)


def test_long_runs_need_big():
    with pytest.raises(SuiteError):
        run_suite("tau-s9")
    with pytest.raises(SuiteError):
        run_suite("mir2", n=10)


def test_report_round_trip_and_rendering():
    r = SweepReport("x-i3", 4, 4, ["a: bad"], 1.5)
    assert not r.passed
    assert SweepReport.from_json(r.to_json(timing=True)) == r
    assert "wall_time" not in r.dumps()
    assert r.render().splitlines() == ["x-i3: FAIL (4/4 checked, 1 failures)", "  a: bad"]
    assert SweepReport("x-i3", 4, 3).passed is False


def test_sampled_suites_use_a_fixed_sample():
    a = run_suite("transition-inv-sample-i7")
    assert a.passed and a.universe_size == 100
    b = run_suite("transition-fpf-sample-f8")
    assert b.passed and b.universe_size == 100
    assert a.dumps() == run_suite("transition-inv-sample-i7").dumps()


@pytest.mark.parametrize("name", ["tau-s6", "counting-inv-i5", "psi-inclusions-f8"])
def test_reports_do_not_depend_on_worker_count(name):
    reports = {run_suite(name, workers=k).dumps() for k in (1, 4, 8)}
    assert len(reports) == 1


@pytest.mark.skipif(multiprocessing.get_start_method() != "fork",
                    reason="the patched check must be inherited by the workers")
def test_failures_keep_enumeration_order_across_workers(monkeypatch):
    fam = sweeps._BY_NAME["atoms"]

    def odd_cycles(y, n):
        return [f"{len(y.support)} moved"] if len(y.support) % 4 == 2 else []

    monkeypatch.setitem(sweeps._BY_NAME, "atoms", dataclasses.replace(fam, check=odd_cycles))
    seen = []
    one = run_suite("atoms-i6", on_failure=seen.append)
    assert not one.passed and one.failures == seen
    assert len(one.failures) == sum(
        1 for line in O.involutions(6) if sum(a != b for a, b in enumerate(line, 1)) % 4 == 2)
    for k in (4, 8):
        assert run_suite("atoms-i6", workers=k).dumps() == one.dumps()


@pytest.mark.slow
@pytest.mark.parametrize("name", ["tau-s8", "mir2-s8"])
def test_extended_sweeps_s8(name):
    r = run_suite(name, workers=4)
    assert r.passed, r.render()


@pytest.mark.big
@pytest.mark.parametrize("name", ["tau-s9", "mir2-s9"])
def test_big_sweeps_s9(name):
    r = run_suite(name, workers=8, big=True)
    assert r.passed, r.render()

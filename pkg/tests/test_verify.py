"""Verification suite plumbing: reports, recorders, sweep composition."""

from fractions import Fraction

from splinecomb.verify import (
    VerifyConfig,
    VerifyReport,
    _Recorder,
    mc_cases,
    verify_all,
    verify_bspline,
    verify_descent,
    verify_eulerian,
    verify_geometry,
    verify_mc,
)


def test_recorder_counts_and_failures():
    rec = _Recorder("demo")
    rec.check("good", 1, 1)
    rec.check("bad", Fraction(1, 2), Fraction(1, 3))
    rec.check_nonneg("nonneg-ok", 0)
    rec.check_nonneg("nonneg-bad", -2)
    report = rec.report()
    assert report.cases_run == 4
    assert report.cases_failed == 2
    assert report.failures[0] == ("bad", "1/2", "1/3")
    assert report.failures[1] == ("nonneg-bad", ">= 0", "-2")
    assert not report.ok


def test_report_invariant():
    report = VerifyReport(suite="s", cases_run=3, cases_failed=0, failures=())
    assert report.cases_failed == len(report.failures) <= report.cases_run
    assert report.ok


SMALL = VerifyConfig(d_max=3, n_max=2, mc_samples=20_000, sample_points=8)


def test_individual_suites_pass_on_small_bounds():
    for suite in (verify_bspline, verify_eulerian, verify_descent, verify_geometry, verify_mc):
        report = suite(SMALL)
        assert report.ok, (report.suite, report.failures[:3])
        assert report.cases_run > 0


def test_verify_all_composition():
    reports = verify_all(SMALL)
    assert [r.suite for r in reports] == ["bspline", "eulerian", "descent", "geometry", "monte-carlo"]
    assert all(r.ok for r in reports)


def test_mc_case_sweep_shape():
    cases = mc_cases(SMALL)
    labels = [label for label, _, _ in cases]
    # unit-cube slabs for every d <= 3, dilated slabs for d <= 3, n <= 2
    assert sum(1 for lbl in labels if lbl.startswith("unit")) == 1 + 2 + 3
    assert sum(1 for lbl in labels if lbl.startswith("dilated")) == 2 * (2 + 3 + 4)
    for _, spec, exact in cases:
        assert exact >= 0
        assert 0 <= spec.lower <= spec.upper <= spec.scale * spec.d


def test_suites_are_deterministic():
    a = verify_bspline(SMALL)
    b = verify_bspline(SMALL)
    assert a == b

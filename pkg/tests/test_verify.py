import pytest

from genocchi import dellac
from genocchi.verify import CROSSCHECK_MAX_N, CheckReport, crosscheck

EXPECTED_CHECKS = {
    "contraction-named",
    "contraction-random",
    "counts-agree",
    "divisibility",
    "dumont-oracle",
    "hanzeng-reversal",
    "hq-three-way",
    "q1-hn-series",
    "series-f1",
    "series-f2",
    "triangle-pairs-oracle",
    "viennot-doubling",
}


def test_all_checks_pass_at_n3():
    report = crosscheck(3)
    assert report.failures == 0
    assert {c.name for c in report.checks} == EXPECTED_CHECKS
    assert all(c.status == "pass" for c in report.checks)
    by_name = {c.name: c for c in report.checks}
    assert by_name["counts-agree"].detail == "h-values: 1,1,2,7"


def test_every_check_appears_exactly_once():
    names = [c.name for c in crosscheck(2).checks]
    assert len(names) == len(set(names)) == len(EXPECTED_CHECKS)
    assert names == sorted(names)


def test_report_is_deterministic():
    assert crosscheck(3, seed=5).json_dict() == crosscheck(3, seed=5).json_dict()


def test_seed_is_recorded():
    report = crosscheck(2, seed=42)
    assert report.seed == 42
    assert report.json_dict()["seed"] == 42
    detail = next(c for c in report.checks if c.name == "contraction-random").detail
    assert "seed=42" in detail


def test_range_caps_are_trimmed_to_n_max():
    report = crosscheck(2)
    by_name = {c.name: c for c in report.checks}
    assert by_name["dumont-oracle"].range == "n=1..2"
    assert by_name["divisibility"].range == "n=1..12"


def test_n_max_bounds():
    with pytest.raises(ValueError):
        crosscheck(0)
    with pytest.raises(ValueError):
        crosscheck(CROSSCHECK_MAX_N + 1)


def test_table_rendering():
    report = crosscheck(2)
    table = report.table()
    for name in EXPECTED_CHECKS:
        assert name in table
    assert "0 failure(s)" in table


def test_json_shape():
    data = crosscheck(2).json_dict()
    assert set(data) == {"n_max", "seed", "checks", "failures"}
    assert all(set(c) == {"name", "range", "status", "detail"} for c in data["checks"])
    assert data["failures"] == 0


def test_corrupted_window_is_detected(monkeypatch):
    # shrink the allowed band's top row by one: the n=3 catalogue loses members
    monkeypatch.setattr(dellac, "_row_window", lambda n, col: (col, n + col - 1))
    report = crosscheck(3)
    assert report.failures >= 1
    counts = next(c for c in report.checks if c.name == "counts-agree")
    assert counts.status == "fail"
    assert "n=3" in counts.detail


def test_skipped_status_when_a_model_is_capped(monkeypatch):
    monkeypatch.setenv("GENOCCHI_MAX_N", "2")
    report = crosscheck(3)
    by_name = {c.name: c for c in report.checks}
    assert by_name["counts-agree"].status == "skipped"
    # checks that stay under the cap still run
    assert by_name["divisibility"].status == "pass"


def test_failures_property_counts_only_failures():
    report = CheckReport(n_max=1, seed=0)
    assert report.failures == 0

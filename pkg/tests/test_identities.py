import csv
import io
import json
import math

import pytest

from umbralhyp.identities import (PARAM_KEYS, REGISTRY, SuiteError, compare, evaluate,
                                  format_number, load_suite, reports_to_csv, run_suite,
                                  validate_suite)


def test_compare_relative_and_absolute():
    r = compare("x", 1.0 + 1e-9, 1.0, 1e-8, "series", {"a": 1})
    assert r.passed and r.rel_diff == pytest.approx(1e-9)
    # near-zero rhs switches to the absolute difference
    r = compare("x", 1e-13, 0.0, 1e-12, "series", {})
    assert r.passed and r.rel_diff == 1e-13
    r = compare("x", math.nan, 1.0, 1.0, "series", {})
    assert not r.passed


def test_bundled_suite_shape():
    suite = load_suite()
    ids = [ident for ident, _, _ in suite]
    assert set(ids) == set(REGISTRY)
    for ident, grid, tol in suite:
        assert len(grid) >= 5, ident
        assert tol > 0
        for point in grid:
            assert set(PARAM_KEYS[ident]) <= set(point)


@pytest.mark.parametrize("doc,msg", [
    ([], "identities"),
    ({"identities": [{"id": "nope", "grid": [], "tolerance": 1}]}, "unknown identity"),
    ({"identities": [{"id": "geometric", "grid": [], "tolerance": 0}]}, "tolerance"),
    ({"identities": [{"id": "geometric", "grid": {}, "tolerance": 1}]}, "grid"),
    ({"identities": [{"id": "geometric", "grid": [{"alpha": 1}], "tolerance": 1}]}, "beta"),
    ({"identities": [{"id": "geometric", "grid": [{"alpha": 1, "beta": "x"}],
                      "tolerance": 1}]}, "numeric"),
])
def test_validation_errors(doc, msg):
    with pytest.raises(SuiteError, match=msg):
        validate_suite(doc)


def test_load_suite_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SuiteError):
        load_suite(bad)
    with pytest.raises(SuiteError):
        load_suite(tmp_path / "missing.json")


def test_evaluate_reports_domain_failure():
    r = evaluate("geometric", {"alpha": 1.0, "beta": 3.0}, 1e-8)
    assert not r.passed
    assert r.error
    assert math.isnan(r.rel_diff)


def test_csv_format(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"identities": [
        {"id": "geometric", "grid": [{"alpha": 1, "beta": 0}, {"alpha": 2, "beta": 1}],
         "tolerance": 1e-8},
        {"id": "mellin", "grid": [{"a": 2, "b": 3, "c": 4, "nu": 1}], "tolerance": 1e-30}]}))
    reports = run_suite(load_suite(path))
    text = reports_to_csv(reports)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["identity_id", "params", "lhs", "rhs", "rel_diff", "passed"]
    assert [r[0] for r in rows[1:]] == ["geometric", "geometric", "mellin"]
    assert rows[1][2] == format_number(math.pi) == "3.14159265358979"
    assert rows[1][5] == "true"
    assert rows[3][5] == "false"
    assert text == reports_to_csv(run_suite(load_suite(path)))


def test_format_number():
    assert format_number(1.5) == "1.5"
    assert format_number(2 * math.log(2)) == "1.38629436111989"

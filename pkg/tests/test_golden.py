import copy
import json

import numpy as np
import pytest

from helpers import fixture_report, random_digraph_exact
from lodgraph.golden import (
    TOLERANCE_CLASSES,
    FixtureEntry,
    GoldenFixture,
    Tolerances,
    extract,
    load_fixture,
    mint_fixture,
    validate,
)
from lodgraph.report import AnalysisConfig, analyze


@pytest.fixture(scope="module")
def bundled():
    return load_fixture()


def test_bundled_fixture_is_well_formed(bundled):
    assert len(bundled.entries) == 109
    keys = [e.key for e in bundled.entries]
    assert len(keys) == len(set(keys))
    for e in bundled.entries:
        assert e.provenance.strip()
        assert e.tolerance in TOLERANCE_CLASSES
    assert GoldenFixture.from_dict(bundled.to_dict()) == bundled


def test_bundled_fixture_headline_values(bundled):
    by_key = {e.key: e for e in bundled.entries}
    assert by_key["graph_summary/vertices"].value == 86
    assert by_key["graph_summary/edges"].value == 274
    assert by_key["distance_summary/diameter"].provenance == "Table I diameter"
    assert by_key["scc_summary/nonsingleton_sizes"].value == [37, 15, 4, 2, 2]
    # the stated hub degree disagrees with the degree tables, so it is soft
    assert by_key["hub/total_degree"].soft


def test_identity_report_validates_clean(bundled):
    report = fixture_report(bundled)
    assert validate(report, bundled) == []
    assert validate(report, bundled, include_soft=True) == []


def test_single_perturbation_gives_single_discrepancy(bundled):
    report = fixture_report(bundled)
    report["distance_summary"]["diameter"] = 9
    found = validate(report, bundled)
    assert len(found) == 1
    assert found[0].provenance == "Table I diameter"
    assert (found[0].expected, found[0].actual) == (10, 9)


def test_soft_entries_skipped_by_default(bundled):
    report = fixture_report(bundled)
    report["hub"]["total_degree"] = 31
    assert validate(report, bundled) == []
    found = validate(report, bundled, include_soft=True)
    assert [d.key for d in found] == ["hub/total_degree"] and found[0].soft


def test_random_graph_of_same_size_is_flagged(bundled):
    g = random_digraph_exact(np.random.default_rng(2009), 86, 274)
    report = analyze(g, config=AnalysisConfig(layout_iterations=10))
    keys = {d.key for d in validate(report, bundled)}
    assert "graph_summary/vertices" not in keys and "graph_summary/edges" not in keys
    assert {"scc_summary/nonsingleton_sizes", "distance_summary/diameter"} <= keys


def test_minted_fixture_round_trip(two_cliques):
    report = analyze(two_cliques.base, config=AnalysisConfig(layout_iterations=10))
    minted = mint_fixture(report)
    assert validate(report, minted) == []
    data = copy.deepcopy(report.to_dict())
    data["pagerank"]["scores"]["v00"] += 1e-3
    assert [d.key for d in validate(data, minted)] == ["pagerank/scores/v00"]
    classes = {e.key: e.tolerance for e in minted.entries}
    assert classes["graph_summary/vertices"] == "exact"
    assert classes["pagerank/scores/v00"] == "float"
    assert all(not k.startswith("config") for k in classes)


def test_extract_paths():
    data = {"a": {"b": {"x": 1, "y": 2}}, "n": None}
    assert extract(data, ("a", "b", "x")) == 1
    assert extract(data, ("a", "*")) == [{"x": 1, "y": 2}]
    assert extract(data, ("a", "b", "*")) == [1, 2]
    assert extract(data, ("a", "missing")) is None
    assert extract(data, ("n", "deeper")) is None


def _one(value, tolerance, actual):
    fx = GoldenFixture("t", (FixtureEntry(("k",), value, "probe", tolerance),))
    return validate({"k": actual}, fx) == []


@pytest.mark.parametrize("tolerance,value,good,bad", [
    ("exact", 10, 10, 11),
    ("exact", [1, 2], [1, 2], [2, 1]),
    ("float", 0.5, 0.5 + 1e-12, 0.5 + 1e-6),
    ("table1_real", 3.916, 3.9165, 3.918),
    ("pagerank", 0.0484, 0.0530, 0.0540),
    ("correlation", 0.6753, 0.69, 0.70),
    ("alpha", 1.496, 1.64, 1.65),
    ("pvalue", 0.0015, 0.009, 0.02),
    ("pvalue", 6.6e-12, 1e-12, 1e-13),
    ("pvalue_floor", 2.2e-16, 0.0, 1e-14),
    ("pvalue_floor", 2.2e-16, 1e-30, 3e-15),
])
def test_tolerance_classes(tolerance, value, good, bad):
    assert _one(value, tolerance, good)
    assert not _one(value, tolerance, bad)


def test_missing_or_wrong_type_is_discrepancy():
    assert not _one(1.0, "correlation", None)
    assert not _one(1.0, "correlation", "1.0")
    assert not _one(1.0, "correlation", True)


def test_wildcard_passes_when_any_method_matches():
    fx = GoldenFixture("t", (FixtureEntry(("pl", "*", "alpha"), 1.5, "probe", "alpha"),))
    assert validate({"pl": {"mle": {"alpha": 2.4}, "ls": {"alpha": 1.55}}}, fx) == []
    assert len(validate({"pl": {"mle": {"alpha": 2.4}, "ls": {"alpha": 2.0}}}, fx)) == 1
    assert len(validate({"pl": {"mle": None}}, fx)) == 1


def test_custom_tolerances():
    fx = GoldenFixture("t", (FixtureEntry(("k",), 0.5, "probe", "correlation"),))
    assert validate({"k": 0.55}, fx) != []
    assert validate({"k": 0.55}, fx, Tolerances(correlation=0.1)) == []


def test_load_fixture_from_file(tmp_path, bundled):
    path = tmp_path / "fx.json"
    path.write_text(json.dumps(bundled.to_dict()))
    assert load_fixture(path) == bundled

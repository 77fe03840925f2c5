"""Golden fixture of published values and the report validator."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .report import AnalysisReport

TOLERANCE_CLASSES = ("exact", "float", "table1_real", "pagerank", "correlation", "alpha",
                     "pvalue", "pvalue_floor")
_P_FLOOR = 1e-300


@dataclass(frozen=True)
class Tolerances:
    table1_real: float = 0.001
    pagerank: float = 0.005
    correlation: float = 0.02
    alpha: float = 0.15
    pvalue_log10: float = 1.0
    float_rel: float = 1e-9


@dataclass(frozen=True)
class FixtureEntry:
    path: tuple
    value: object
    provenance: str
    tolerance: str = "exact"
    soft: bool = False
    label: Optional[str] = None

    @property
    def key(self) -> str:
        return "/".join(self.path)


@dataclass(frozen=True)
class GoldenFixture:
    name: str
    entries: tuple
    note: str = ""

    @classmethod
    def from_dict(cls, data: dict) -> "GoldenFixture":
        entries = tuple(
            FixtureEntry(tuple(e["path"]), e["value"], e["provenance"], e.get("tolerance", "exact"),
                         e.get("soft", False), e.get("label"))
            for e in data["entries"]
        )
        return cls(data.get("name", ""), entries, data.get("note", ""))

    def to_dict(self) -> dict:
        out = []
        for e in self.entries:
            d = {"path": list(e.path), "value": e.value, "provenance": e.provenance,
                 "tolerance": e.tolerance}
            if e.soft:
                d["soft"] = True
            if e.label is not None:
                d["label"] = e.label
            out.append(d)
        return {"name": self.name, "note": self.note, "entries": out}


@dataclass(frozen=True)
class Discrepancy:
    key: str
    expected: object
    actual: object
    provenance: str
    soft: bool = False

    def to_dict(self) -> dict:
        return {"key": self.key, "provenance": self.provenance, "expected": self.expected,
                "actual": self.actual, "soft": self.soft}


def load_fixture(path=None) -> GoldenFixture:
    """Read a fixture file; the bundled published-values fixture by default."""
    if path is None:
        text = resources.files("lodgraph").joinpath("data/golden.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return GoldenFixture.from_dict(json.loads(text))


def _as_dict(report) -> dict:
    if isinstance(report, AnalysisReport):
        return report.to_dict()
    return report


def extract(report: dict, path) -> object:
    """Follow ``path`` through the report; ``"*"`` fans out over a mapping.

    Missing keys or null sections give ``None``.
    """
    node = report
    for i, part in enumerate(path):
        if part == "*":
            if not isinstance(node, dict):
                return None
            return [extract(child, path[i + 1:]) for child in node.values()]
        if not isinstance(node, dict) or part not in node:
            return None
        node = node[part]
    return node


def _close(expected, actual, tol_class: str, tol: Tolerances) -> bool:
    if actual is None:
        return False
    if isinstance(actual, list) and tol_class != "exact":
        return any(_close(expected, a, tol_class, tol) for a in actual)
    if tol_class == "exact":
        return expected == actual
    if isinstance(actual, bool) or not isinstance(actual, (int, float)):
        return False
    if tol_class == "float":
        return math.isclose(expected, actual, rel_tol=tol.float_rel, abs_tol=1e-12)
    if tol_class in ("pvalue", "pvalue_floor"):
        lo = math.log10(max(float(expected), _P_FLOOR))
        la = math.log10(max(float(actual), _P_FLOOR))
        if tol_class == "pvalue_floor":
            # a software floor such as 2.2e-16 only bounds the true value from above
            return la <= lo + tol.pvalue_log10
        return abs(la - lo) <= tol.pvalue_log10
    width = {"table1_real": tol.table1_real, "pagerank": tol.pagerank,
             "correlation": tol.correlation, "alpha": tol.alpha}[tol_class]
    return abs(float(actual) - float(expected)) <= width + 1e-12


def validate(report, fixture: Optional[GoldenFixture] = None, tolerances: Optional[Tolerances] = None,
             include_soft: bool = False) -> list:
    """Compare a report field-by-field with a fixture.

    Returns the list of :class:`Discrepancy` records (empty when everything
    agrees). Soft entries, which document values that depend on unpublished
    implementation details, are only checked when ``include_soft`` is set.
    """
    fixture = fixture or load_fixture()
    tolerances = tolerances or Tolerances()
    data = _as_dict(report)
    found = []
    for entry in fixture.entries:
        if entry.soft and not include_soft:
            continue
        actual = extract(data, entry.path)
        if not _close(entry.value, actual, entry.tolerance, tolerances):
            found.append(Discrepancy(entry.key, entry.value, actual, entry.provenance, entry.soft))
    return found


def _tolerance_for(path: tuple, value) -> str:
    if isinstance(value, bool) or not isinstance(value, float):
        return "exact"
    if path[-1] in ("p_value", "monte_carlo_p_value"):
        return "pvalue"
    return "float"


def _leaves(node, path):
    if isinstance(node, dict):
        for k, v in node.items():
            yield from _leaves(v, path + (k,))
    elif node is not None:
        yield path, node


def mint_fixture(report, name: str = "minted") -> GoldenFixture:
    """Fixture holding every non-null leaf of ``report`` (config excluded)."""
    data = _as_dict(report)
    entries = []
    for section, body in data.items():
        if section == "config":
            continue
        for path, value in _leaves(body, (section,)):
            entries.append(FixtureEntry(path, value, " ".join(path), _tolerance_for(path, value)))
    return GoldenFixture(name, tuple(entries), "minted from a computed report")

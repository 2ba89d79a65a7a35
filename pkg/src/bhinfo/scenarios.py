"""Scenario files: describe systems in JSON, evaluate every bound, render reports.

Input schema (UTF-8 JSON)::

    {"scenarios": [
        {"name": "device", "length": "0.1 m", "mass": "1 kg", "entropy": "1e23 kB"},
        {"name": "pulse", "length": "1e-6 m", "energy": "1 GW * 10 fs", "mu": 2.6}
    ]}

Quantities are always expression strings so units stay explicit. Exactly one
of ``energy``/``mass`` is required (mass converts as ``U = m c^2``);
``entropy`` defaults to ``"0 kB"`` and ``mu`` to ``sqrt(27/4)``.
"""

from __future__ import annotations

import io
import json
import math
import os
from dataclasses import dataclass
from typing import IO, Iterable, Union

from . import bounds
from .bounds import StorageBoundBreakdown, SystemSpec
from .constants import constants
from .qparser import ParseError
from .qparser import evaluate as eval_expression
from .quantity import ENERGY, ENTROPY, LENGTH, MASS, Dimension, Quantity, QuantityError
from .schwarzschild import DEFAULT_MU


class ScenarioError(ValueError):
    """Invalid scenario file; the message names the scenario and field."""


@dataclass(frozen=True)
class Scenario:
    name: str
    spec: SystemSpec
    source: dict  # the raw JSON record, for echoing


@dataclass(frozen=True)
class ScenarioFile:
    scenarios: tuple[Scenario, ...]

    def __len__(self):
        return len(self.scenarios)

    def __iter__(self):
        return iter(self.scenarios)


@dataclass(frozen=True)
class BoundReport:
    name: str
    length: Quantity
    energy: Quantity
    entropy: Quantity
    mu: float
    bh_limit_bits: float
    storage: StorageBoundBreakdown
    min_mass: Quantity
    landauer_floor_entropy: Quantity
    log10_gap: float | None
    infeasible: bool

    @property
    def n_max_bits(self) -> float:
        return self.storage.n_max_bits


def _field(rec: dict, name: str, field: str, dim: Dimension) -> Quantity:
    text = rec[field]
    if not isinstance(text, str):
        raise ScenarioError(f"scenario {name!r}, field {field!r}: expected an expression string")
    try:
        value = eval_expression(text)
    except (ParseError, QuantityError) as exc:
        raise ScenarioError(f"scenario {name!r}, field {field!r}: {exc}") from exc
    if value.dimension != dim:
        raise ScenarioError(
            f"scenario {name!r}, field {field!r}: expected {dim}, got {value.dimension}"
        )
    return value


def _scenario(rec, index: int) -> Scenario:
    if not isinstance(rec, dict):
        raise ScenarioError(f"scenario #{index}: expected an object")
    name = rec.get("name")
    if not isinstance(name, str) or not name:
        raise ScenarioError(f"scenario #{index}: missing or empty name")
    unknown = set(rec) - {"name", "length", "energy", "mass", "entropy", "mu"}
    if unknown:
        raise ScenarioError(f"scenario {name!r}: unknown fields {sorted(unknown)}")
    if "length" not in rec:
        raise ScenarioError(f"scenario {name!r}: missing field 'length'")
    if ("energy" in rec) == ("mass" in rec):
        raise ScenarioError(f"scenario {name!r}: exactly one of 'energy' or 'mass' is required")

    length = _field(rec, name, "length", LENGTH)
    if "energy" in rec:
        energy = _field(rec, name, "energy", ENERGY)
    else:
        energy = _field(rec, name, "mass", MASS) * constants().c ** 2
    entropy = _field(rec, name, "entropy", ENTROPY) if "entropy" in rec else Quantity(0.0, ENTROPY)
    mu = rec.get("mu", DEFAULT_MU)
    if isinstance(mu, bool) or not isinstance(mu, (int, float)):
        raise ScenarioError(f"scenario {name!r}, field 'mu': expected a number")
    try:
        spec = SystemSpec(length, energy, entropy, float(mu))
    except ValueError as exc:
        raise ScenarioError(f"scenario {name!r}: {exc}") from exc
    return Scenario(name, spec, rec)


def parse_scenarios(doc) -> ScenarioFile:
    """Validate an already-decoded JSON document."""
    if not isinstance(doc, dict) or not isinstance(doc.get("scenarios"), list):
        raise ScenarioError("expected an object with a 'scenarios' list")
    scenarios = tuple(_scenario(rec, i) for i, rec in enumerate(doc["scenarios"]))
    seen = set()
    for s in scenarios:
        if s.name in seen:
            raise ScenarioError(f"duplicate scenario name {s.name!r}")
        seen.add(s.name)
    return ScenarioFile(scenarios)


def load_scenarios(source: Union[str, os.PathLike, IO[str]]) -> ScenarioFile:
    """Load and validate a scenario file from a path or a text stream."""
    try:
        if isinstance(source, (str, os.PathLike)):
            with open(source, encoding="utf-8") as fh:
                doc = json.load(fh)
        else:
            doc = json.load(source)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"malformed JSON: {exc}") from exc
    return parse_scenarios(doc)


def evaluate_scenario(scenario: Scenario) -> BoundReport:
    spec = scenario.spec
    storage = bounds.storage_bound_bits(spec)
    bh_bits = bounds.bekenstein_hawking_limit(spec.length)
    gap = math.log10(bh_bits / storage.n_max_bits) if storage.n_max_bits > 0 else None
    return BoundReport(
        name=scenario.name,
        length=spec.length,
        energy=spec.energy,
        entropy=spec.entropy,
        mu=spec.mu,
        bh_limit_bits=bh_bits,
        storage=storage,
        min_mass=storage.min_mass,
        landauer_floor_entropy=bounds.landauer_floor(spec.mu),
        log10_gap=gap,
        infeasible=storage.infeasible,
    )


def evaluate(file: Union[ScenarioFile, Iterable[Scenario]]) -> list[BoundReport]:
    """One report per scenario, in input order."""
    return [evaluate_scenario(s) for s in file]


# --- rendering ---------------------------------------------------------------


def sci(x: float) -> str:
    """Scientific notation with 6 significant digits."""
    return f"{x:.5e}"


def _num(x: float) -> dict:
    return {"value": x, "sci": sci(x)}


def _qty(x: Quantity, unit: str) -> dict:
    return {"value": x.magnitude, "sci": sci(x.magnitude), "unit": unit}


def report_to_dict(r: BoundReport) -> dict:
    k_B = constants().k_B.magnitude
    s = r.storage
    return {
        "name": r.name,
        "length": _qty(r.length, "m"),
        "energy": _qty(r.energy, "J"),
        "entropy": _qty(r.entropy, "J/K"),
        "entropy_kB": _num(r.entropy.magnitude / k_B),
        "mu": _num(r.mu),
        "term_quadratic": _num(s.term_quadratic),
        "term_entropy": _num(s.term_entropy),
        "term_linear": _num(s.term_linear),
        "rhs": _num(s.rhs),
        "n_max_bits": _num(s.n_max_bits),
        "bh_limit_bits": _num(r.bh_limit_bits),
        "log10_gap": None if r.log10_gap is None else _num(r.log10_gap),
        "min_mass": _qty(r.min_mass, "kg"),
        "landauer_floor_entropy": _qty(r.landauer_floor_entropy, "J/K"),
        "infeasible": r.infeasible,
    }


_COLUMNS = ("name", "L [m]", "U [J]", "S/kB", "T1", "T2", "T3", "n_max [bit]", "B-H [bit]", "gap")


def _row(r: BoundReport) -> list[str]:
    s = r.storage
    gap = "-" if r.log10_gap is None else f"{r.log10_gap:.6g}"
    return [
        r.name,
        *(sci(v) for v in (
            r.length.magnitude,
            r.energy.magnitude,
            r.entropy.magnitude / constants().k_B.magnitude,
            s.term_quadratic,
            s.term_entropy,
            s.term_linear,
            s.n_max_bits,
            r.bh_limit_bits,
        )),
        gap,
    ]


def render(reports: Iterable[BoundReport], format: str = "table") -> str:
    """Render reports as a fixed-width ``table`` or a ``json`` array."""
    reports = list(reports)
    if format == "json":
        return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"
    if format != "table":
        raise ValueError(f"unknown format {format!r}")
    rows = [list(_COLUMNS)] + [_row(r) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(_COLUMNS))]
    out = io.StringIO()
    for row in rows:
        out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
    return out.getvalue()

import io
import json
import math

import pytest

from bhinfo.quantity import ENERGY, ENTROPY, Quantity, isclose
from bhinfo.scenarios import ScenarioError, evaluate, load_scenarios, parse_scenarios, render

from .conftest import PAPER_SCENARIOS


def load_text(text):
    return load_scenarios(io.StringIO(text))


def test_device_mass_converted_to_energy():
    f = load_text('{"scenarios":[{"name":"device","length":"0.1 m","mass":"1 kg","entropy":"1e23 kB"}]}')
    (s,) = f.scenarios
    assert isclose(s.spec.energy, Quantity(8.9875517873681764e16, ENERGY))
    assert s.spec.entropy.magnitude == pytest.approx(1.380649, rel=1e-15)


def test_pulse_energy_expression():
    f = load_text('{"scenarios":[{"name":"pulse","length":"1e-6 m","energy":"1 GW * 10 fs"}]}')
    (s,) = f.scenarios
    assert isclose(s.spec.energy, Quantity(1e-5, ENERGY))
    assert s.spec.entropy == Quantity(0, ENTROPY)
    assert s.spec.mu == pytest.approx(math.sqrt(27 / 4))


def test_wrong_dimension_names_scenario_and_field():
    with pytest.raises(ScenarioError, match="scenario 'x', field 'length': expected length, got mass"):
        load_text('{"scenarios":[{"name":"x","length":"1 kg","energy":"1 J"}]}')


@pytest.mark.parametrize(
    "doc,match",
    [
        ("{not json", "malformed JSON"),
        ('{"scenarios": 3}', "'scenarios' list"),
        ('{"scenarios":[{"name":"a","length":"1 m","energy":"1 J","mass":"1 kg"}]}', "exactly one"),
        ('{"scenarios":[{"name":"a","length":"1 m"}]}', "exactly one"),
        ('{"scenarios":[{"name":"","length":"1 m","energy":"1 J"}]}', "empty name"),
        ('{"scenarios":[{"name":"a","energy":"1 J"}]}', "missing field 'length'"),
        ('{"scenarios":[{"name":"a","length":"1 m","energy":"1 J"},{"name":"a","length":"1 m","energy":"1 J"}]}', "duplicate"),
        ('{"scenarios":[{"name":"a","length":"1 m","energy":"1 J","mu":0}]}', "mu"),
        ('{"scenarios":[{"name":"a","length":"1 m","energy":"1 J","mu":"2"}]}', "mu"),
        ('{"scenarios":[{"name":"a","length":"1 m","energy":"1 J +"}]}', "field 'energy'"),
        ('{"scenarios":[{"name":"a","length":1,"energy":"1 J"}]}', "expression string"),
        ('{"scenarios":[{"name":"a","length":"1 m","energy":"1 J","colour":"red"}]}', "unknown fields"),
    ],
)
def test_invalid_files(doc, match):
    with pytest.raises(ScenarioError, match=match):
        load_text(doc)


def test_paper_reports():
    device, pulse = evaluate(load_scenarios(PAPER_SCENARIOS))
    assert device.n_max_bits == pytest.approx(2.576908209992606e42, rel=1e-12)
    assert device.bh_limit_bits == pytest.approx(4.337551501393925e67, rel=1e-12)
    assert device.log10_gap == pytest.approx(25.22614569520615, rel=1e-12)
    assert pulse.n_max_bits == pytest.approx(2.867197064293303e15, rel=1e-12)
    assert pulse.bh_limit_bits == pytest.approx(4.337551501393925e57, rel=1e-12)
    assert pulse.log10_gap == pytest.approx(42.17978710106201, rel=1e-12)
    for r in (device, pulse):
        assert r.n_max_bits <= r.bh_limit_bits


def test_empty_file():
    assert evaluate(parse_scenarios({"scenarios": []})) == []


def test_infeasible_report_has_no_gap():
    f = parse_scenarios({"scenarios": [{"name": "hot", "length": "1e-6 m", "energy": "1e-5 J", "entropy": "1e16 kB"}]})
    (r,) = evaluate(f)
    assert r.infeasible and r.log10_gap is None and r.n_max_bits == 0
    assert json.loads(render([r], "json"))[0]["log10_gap"] is None
    assert render([r], "table").splitlines()[1].rstrip().endswith("-")


def test_report_order_follows_input():
    recs = [{"name": f"s{i}", "length": f"{i + 1} m", "energy": "1 J"} for i in range(5)]
    assert [r.name for r in evaluate(parse_scenarios({"scenarios": recs}))] == [f"s{i}" for i in range(5)]


def test_json_schema_keys():
    out = json.loads(render(evaluate(load_scenarios(PAPER_SCENARIOS)), "json"))
    assert [r["name"] for r in out] == ["computing-device", "femtosecond-pulse"]
    for key in ("n_max_bits", "bh_limit_bits", "term_quadratic", "term_entropy", "term_linear", "min_mass"):
        assert set(out[0][key]) >= {"value", "sci"}
    assert out[0]["n_max_bits"]["sci"] == "2.57691e+42"


def test_json_round_trip():
    reports = evaluate(load_scenarios(PAPER_SCENARIOS))
    out = json.loads(render(reports, "json"))
    for r, d in zip(reports, out):
        assert d["n_max_bits"]["value"] == pytest.approx(r.n_max_bits, rel=1e-12)
        assert d["bh_limit_bits"]["value"] == pytest.approx(r.bh_limit_bits, rel=1e-12)
        assert d["energy"]["value"] == pytest.approx(r.energy.magnitude, rel=1e-12)
        assert d["term_linear"]["value"] == pytest.approx(r.storage.term_linear, rel=1e-12)


def test_table_shape():
    text = render(evaluate(load_scenarios(PAPER_SCENARIOS)), "table")
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[0].split()[0] == "name"
    assert lines[1].startswith("computing-device")


def test_render_deterministic():
    a = render(evaluate(load_scenarios(PAPER_SCENARIOS)), "json")
    b = render(evaluate(load_scenarios(PAPER_SCENARIOS)), "json")
    assert a == b


def test_unknown_format():
    with pytest.raises(ValueError):
        render([], "xml")

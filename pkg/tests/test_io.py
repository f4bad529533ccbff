import json

import pytest

from fuzzybisim import (
    GODEL,
    InputError,
    automaton_from_dict,
    automaton_to_dict,
    load_automaton,
    load_relation,
    relation_from_doc,
    relation_to_dict,
)
from fuzzybisim.io import dumps, parse_automaton, save_automaton, save_relation
from support import FIXTURES, aut, mat, rel

AUTOMATA = sorted(p.stem for p in FIXTURES.glob("*.json") if "delta" in json.loads(p.read_text()))
RELATIONS = ["phi51", "psi51", "E61", "F61", "phiE", "phiF"]


def base_doc():
    return {
        "lattice": {"kind": "godel"},
        "alphabet": ["x"],
        "states": ["p", "q"],
        "sigma": ["1", "0"],
        "tau": ["0", "1/2"],
        "delta": {"x": [["0", "1"], ["0", "0.5"]]},
    }


@pytest.mark.parametrize("name", AUTOMATA)
def test_automaton_round_trip(name, tmp_path):
    a = aut(name)
    assert automaton_from_dict(automaton_to_dict(a)) == a
    out = tmp_path / "a.json"
    save_automaton(a, out)
    assert load_automaton(out) == a
    save_automaton(load_automaton(out), tmp_path / "b.json")
    assert (tmp_path / "b.json").read_bytes() == out.read_bytes()


@pytest.mark.parametrize("name", RELATIONS)
def test_relation_round_trip(name, tmp_path):
    r = rel(name)
    assert relation_from_doc(relation_to_dict(r)) == r
    save_relation(r, tmp_path / "r.json")
    assert load_relation(tmp_path / "r.json") == r


def test_bare_relation_arrays_need_a_lattice():
    r = relation_from_doc([["1", "0.5"]], GODEL, ("p",), ("q", "r"))
    assert r.entries == mat(["1", "0.5"])
    with pytest.raises(InputError, match="no lattice"):
        relation_from_doc([["1"]])


def test_states_default_and_exact_values():
    doc = base_doc()
    del doc["states"]
    a = automaton_from_dict(doc)
    assert a.states == ("a1", "a2")
    assert a.tau.values == mat(["0", "0.5"])[0]
    assert parse_automaton is load_automaton


@pytest.mark.parametrize(
    "edit,fragment",
    [
        (lambda d: d.pop("sigma"), "missing field(s) ['sigma']"),
        (lambda d: d.update(extra=1), "unexpected field(s) ['extra']"),
        (lambda d: d.update(sigma=["1"]), "automaton.sigma: dimension mismatch"),
        (lambda d: d.update(tau=["1", "1.2"]), "automaton.tau[1]"),
        (lambda d: d["delta"]["x"][1].__setitem__(0, "2"), "automaton.delta.x[1][0]"),
        (lambda d: d["delta"]["x"].pop(), "automaton.delta.x: dimension mismatch"),
        (lambda d: d.update(delta={"y": [[0, 0], [0, 0]]}), "do not match alphabet"),
        (lambda d: d.update(lattice={"kind": "heyting"}), "automaton.lattice"),
        (lambda d: d.update(states=["p", "p"]), "must be distinct"),
    ],
)
def test_errors_name_the_field(edit, fragment):
    doc = base_doc()
    edit(doc)
    with pytest.raises(InputError) as exc:
        automaton_from_dict(doc)
    assert fragment in str(exc.value)


def test_value_outside_the_unit_interval_is_a_carrier_error():
    doc = base_doc()
    doc["sigma"] = ["1.2", "0"]
    with pytest.raises(InputError, match="not an element of godel"):
        automaton_from_dict(doc)


def test_malformed_and_missing_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"lattice": {"kind": "godel"},\n  "alphabet": [x]}')
    with pytest.raises(InputError, match="line 2 column"):
        load_automaton(bad)
    with pytest.raises(InputError, match="cannot read"):
        load_automaton(tmp_path / "missing.json")


def test_relation_errors():
    with pytest.raises(InputError, match="unexpected field"):
        relation_from_doc({"entries": [[1]], "lattice": {"kind": "boolean"}, "weight": 2})
    with pytest.raises(InputError, match="does not match"):
        relation_from_doc({"entries": [[1]], "lattice": {"kind": "boolean"}}, GODEL)
    with pytest.raises(InputError, match="2 rows, expected 3"):
        relation_from_doc([[1, 0], [0, 1]], GODEL, ("a", "b", "c"), ("p", "q"))


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "b": 1,\n  "a": [\n    1,\n    2\n  ]\n}\n'

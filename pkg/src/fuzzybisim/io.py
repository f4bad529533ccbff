"""JSON documents for automata, relations and analysis reports.

Automaton documents look like::

    {"lattice": {"kind": "godel"}, "alphabet": ["x"], "states": ["a1", "a2"],
     "sigma": ["1", "0"], "tau": ["0", "1/2"], "delta": {"x": [["1", "0"], ["1/2", "1"]]}}

A relation document is either a bare 2-D array, or an object with
``"entries"`` and optional ``"lattice"``, ``"rows"`` and ``"cols"``.
Values are exact strings such as ``"3/10"`` or ``"0.7"``, integers for
chains and booleans for the Boolean structure.  Malformed input raises
:class:`~fuzzybisim.errors.InputError` naming the offending field.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .automaton import FactorAutomaton, FuzzyAutomaton
from .errors import FuzzyBisimError, InputError
from .lattice import Lattice
from .relations import FuzzyEquivalence, FuzzyRelation, FuzzySet, Matrix, as_relation

AUTOMATON_FIELDS = ("lattice", "alphabet", "states", "sigma", "tau", "delta")


def read_json(path) -> Any:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _lattice(doc, where: str) -> Lattice:
    try:
        return Lattice.from_descriptor(doc)
    except (ValueError, TypeError) as exc:
        raise InputError(f"{where}: {exc}") from None


def _names(doc, where: str) -> tuple[str, ...]:
    if not isinstance(doc, list) or not all(isinstance(s, str) for s in doc):
        raise InputError(f"{where}: expected a list of strings")
    if len(set(doc)) != len(doc):
        raise InputError(f"{where}: names must be distinct")
    return tuple(doc)


def _vector(lat: Lattice, doc, n: int, where: str) -> tuple:
    if not isinstance(doc, list):
        raise InputError(f"{where}: expected a list of values")
    if len(doc) != n:
        raise InputError(f"{where}: dimension mismatch, {len(doc)} values for {n} states")
    out = []
    for i, v in enumerate(doc):
        try:
            out.append(lat.coerce(v))
        except FuzzyBisimError as exc:
            raise InputError(f"{where}[{i}]: {exc}") from None
    return tuple(out)


def _matrix(lat: Lattice, doc, nrows: int | None, ncols: int | None, where: str) -> Matrix:
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise InputError(f"{where}: expected a list of rows")
    if nrows is not None and len(doc) != nrows:
        raise InputError(f"{where}: dimension mismatch, {len(doc)} rows, expected {nrows}")
    if ncols is None:
        ncols = len(doc[0]) if doc else 0
    return tuple(_vector(lat, r, ncols, f"{where}[{i}]") for i, r in enumerate(doc))


def automaton_from_dict(doc, source: str = "automaton") -> FuzzyAutomaton:
    if not isinstance(doc, dict):
        raise InputError(f"{source}: expected a JSON object")
    missing = [f for f in AUTOMATON_FIELDS if f not in doc and f != "states"]
    if missing:
        raise InputError(f"{source}: missing field(s) {missing}")
    extra = sorted(set(doc) - set(AUTOMATON_FIELDS))
    if extra:
        raise InputError(f"{source}: unexpected field(s) {extra}")
    lat = _lattice(doc["lattice"], f"{source}.lattice")
    alphabet = _names(doc["alphabet"], f"{source}.alphabet")
    if not isinstance(doc["sigma"], list):
        raise InputError(f"{source}.sigma: expected a list of values")
    if "states" in doc:
        states = _names(doc["states"], f"{source}.states")
    else:
        states = tuple(f"a{i + 1}" for i in range(len(doc["sigma"])))
    if not states:
        raise InputError(f"{source}.states: an automaton needs at least one state")
    n = len(states)
    sigma = _vector(lat, doc["sigma"], n, f"{source}.sigma")
    tau = _vector(lat, doc["tau"], n, f"{source}.tau")
    delta_doc = doc["delta"]
    if not isinstance(delta_doc, dict):
        raise InputError(f"{source}.delta: expected an object mapping letters to matrices")
    if set(delta_doc) != set(alphabet):
        raise InputError(f"{source}.delta: letters {sorted(delta_doc)} do not match alphabet {list(alphabet)}")
    delta = {
        x: FuzzyRelation(lat, states, states, _matrix(lat, delta_doc[x], n, n, f"{source}.delta.{x}"))
        for x in alphabet
    }
    return FuzzyAutomaton(lat, states, alphabet, delta, FuzzySet(lat, states, sigma), FuzzySet(lat, states, tau))


def automaton_to_dict(a: FuzzyAutomaton) -> dict:
    j = a.lattice.to_json
    return {
        "lattice": a.lattice.descriptor(),
        "alphabet": list(a.alphabet),
        "states": list(a.states),
        "sigma": [j(v) for v in a.sigma.values],
        "tau": [j(v) for v in a.tau.values],
        "delta": {x: [[j(v) for v in r] for r in a.delta[x].entries] for x in a.alphabet},
    }


def load_automaton(path) -> FuzzyAutomaton:
    return automaton_from_dict(read_json(path), str(path))


parse_automaton = load_automaton


def relation_from_doc(doc, lattice: Lattice | None = None, rows=None, cols=None,
                      source: str = "relation") -> FuzzyRelation:
    """Read a relation; ``lattice``, ``rows``, ``cols`` fill in what the document omits."""
    if isinstance(doc, dict):
        extra = sorted(set(doc) - {"entries", "lattice", "rows", "cols"})
        if extra:
            raise InputError(f"{source}: unexpected field(s) {extra}")
        if "entries" not in doc:
            raise InputError(f"{source}: missing field 'entries'")
        if "lattice" in doc:
            lat = _lattice(doc["lattice"], f"{source}.lattice")
            if lattice is not None and lat != lattice:
                raise InputError(f"{source}.lattice: {lat} does not match {lattice}")
            lattice = lat
        rows = _names(doc["rows"], f"{source}.rows") if "rows" in doc else rows
        cols = _names(doc["cols"], f"{source}.cols") if "cols" in doc else cols
        entries = doc["entries"]
    else:
        entries = doc
    if lattice is None:
        raise InputError(f"{source}: no lattice given")
    m = _matrix(lattice, entries, len(rows) if rows is not None else None,
                len(cols) if cols is not None else None, f"{source}.entries")
    nr, nc = len(m), (len(m[0]) if m else 0)
    rows = tuple(rows) if rows is not None else tuple(str(i) for i in range(nr))
    cols = tuple(cols) if cols is not None else tuple(str(i) for i in range(nc))
    if len(cols) != nc:
        raise InputError(f"{source}.entries: dimension mismatch, {nc} columns for {len(cols)} states")
    return FuzzyRelation(lattice, rows, cols, m)


def load_relation(path, lattice: Lattice | None = None, rows=None, cols=None) -> FuzzyRelation:
    return relation_from_doc(read_json(path), lattice, rows, cols, str(path))


def relation_to_dict(rel) -> dict:
    rel = as_relation(rel)
    j = rel.lattice.to_json
    return {
        "lattice": rel.lattice.descriptor(),
        "rows": list(rel.rows),
        "cols": list(rel.cols),
        "entries": [[j(v) for v in r] for r in rel.entries],
    }


def dumps(doc) -> str:
    """Canonical text: keys in insertion order, two-space indent, final newline."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save_automaton(a: FuzzyAutomaton, path):
    Path(path).write_text(dumps(automaton_to_dict(a)), encoding="utf-8")


def save_relation(rel, path):
    Path(path).write_text(dumps(relation_to_dict(rel)), encoding="utf-8")


# -- reports -------------------------------------------------------------------


def value_to_json(lattice: Lattice, v):
    return None if v is None else lattice.to_json(v)


def factor_to_dict(fa: FactorAutomaton) -> dict:
    fs = fa.factor
    return {
        "index": fs.index,
        "classes": {lab: [fa.base.states[i] for i, c in enumerate(fs.class_of) if c == k]
                    for k, lab in enumerate(fs.labels)},
        "automaton": automaton_to_dict(fa.quotient),
        "tilde": relation_to_dict(fa.tilde),
    }


def equivalence_to_dict(e: FuzzyEquivalence) -> dict:
    doc = relation_to_dict(e.relation)
    doc["index"] = e.index
    return doc

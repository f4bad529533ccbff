"""Greatest simulations and bisimulations between two automata over the Lukasiewicz lattice.

Run with ``python demos/simulations.py``.
"""

from fuzzybisim import BisimKind, automaton_from_dict, check_relation, greatest

a = automaton_from_dict({
    "lattice": {"kind": "lukasiewicz"},
    "alphabet": ["x"],
    "states": ["a1", "a2"],
    "sigma": ["1", "0"],
    "tau": ["0", "0.9"],
    "delta": {"x": [["0.2", "0.8"], ["0", "0.5"]]},
})
b = automaton_from_dict({
    "lattice": {"kind": "lukasiewicz"},
    "alphabet": ["x"],
    "states": ["b1", "b2"],
    "sigma": ["1", "0"],
    "tau": ["0", "1"],
    "delta": {"x": [["0.3", "0.8"], ["0", "0.6"]]},
})

for kind in BisimKind:
    rep = greatest(a, b, kind)
    if rep.exists:
        print(f"{kind.value}: found after {rep.iterations} iteration(s)")
        print(rep.result.pretty())
        assert check_relation(a, b, rep.result, kind).holds
    else:
        print(f"{kind.value}: none ({rep.failure_reason})")

"""Deciding UFB-equivalence: is there a uniform forward bisimulation between two automata?

Run with ``python demos/ufb_check.py``.
"""

from fuzzybisim import automaton_from_dict, ufb_equivalent

a = automaton_from_dict({
    "lattice": {"kind": "godel"},
    "alphabet": ["x", "y"],
    "states": ["a1", "a2"],
    "sigma": ["1", "1"],
    "tau": ["1", "1"],
    "delta": {"x": [["0.5", "0"], ["0.5", "0"]],
              "y": [["1", "1"], ["0", "0.5"]]},
})

# Same automaton with the states listed in the opposite order.
b = automaton_from_dict({
    "lattice": {"kind": "godel"},
    "alphabet": ["x", "y"],
    "states": ["b1", "b2"],
    "sigma": ["1", "1"],
    "tau": ["1", "1"],
    "delta": {"x": [["0", "0.5"], ["0", "0.5"]],
              "y": [["0.5", "0"], ["1", "1"]]},
})

v = ufb_equivalent(a, b)
print("status:", v.status)
print("class isomorphism:", v.iso)
print("uniform forward bisimulation witness:")
print(v.witness.pretty())

# Changing one terminal degree breaks the equivalence.
c = automaton_from_dict({
    "lattice": {"kind": "godel"},
    "alphabet": ["x", "y"],
    "states": ["b1", "b2"],
    "sigma": ["1", "1"],
    "tau": ["1", "0.5"],
    "delta": {"x": [["0", "0.5"], ["0", "0.5"]],
              "y": [["0.5", "0"], ["1", "1"]]},
})
v = ufb_equivalent(a, c)
print("after the change:", v.status, "-", v.reason)

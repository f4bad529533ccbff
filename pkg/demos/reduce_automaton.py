"""Shrinking a fuzzy automaton by its greatest forward bisimulation equivalence.

Run with ``python demos/reduce_automaton.py``.
"""

from fuzzybisim import automaton_from_dict, language_equal_bounded, language_value, reduce
from fuzzybisim.lattice import format_value

# Four states over the Goedel lattice. States p2 and p3 behave the same
# way, so the reduction should merge them.
a = automaton_from_dict({
    "lattice": {"kind": "godel"},
    "alphabet": ["x", "y"],
    "states": ["p1", "p2", "p3", "p4"],
    "sigma": ["1", "0", "0", "0"],
    "tau": ["0", "0.6", "0.6", "1"],
    "delta": {
        "x": [["0", "0.8", "0.8", "0"],
              ["0", "0", "0", "0.5"],
              ["0", "0", "0", "0.5"],
              ["0", "0", "0", "1"]],
        "y": [["1", "0", "0", "0"],
              ["0", "1", "1", "0"],
              ["0", "1", "1", "0"],
              ["0", "0", "0", "0.3"]],
    },
})

factor, e = reduce(a)
print("greatest forward bisimulation equivalence:")
print(e.relation.pretty())
print("index:", e.index, "->", factor.size, "states")
print("class labels:", factor.factor.labels)

# The factor automaton recognizes the same fuzzy language.
small = factor.quotient
for word in ["", "x", "xx", "xy", "yxx"]:
    print(f"{word or '(empty)':>8}: {format_value(language_value(a, word))} vs {format_value(language_value(small, word))}")

verdict = language_equal_bounded(a, small, 6)
print("languages agree on all words up to length 6:", verdict.equal_up_to_bound,
      f"({verdict.words_checked} words)")

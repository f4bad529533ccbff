"""Shared helpers for the test-suite: fixture loading and seeded generators."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from fuzzybisim import (
    FuzzyAutomaton,
    FuzzyRelation,
    FuzzySet,
    Lattice,
    chain,
    factor_automaton,
    greatest_bisim_equivalence,
    load_automaton,
    load_relation,
)

FIXTURES = Path(__file__).parent / "fixtures"
CHAIN3 = chain(3)


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def aut(name: str) -> FuzzyAutomaton:
    return load_automaton(fixture_path(name))


def rel(name: str, a: FuzzyAutomaton | None = None, b: FuzzyAutomaton | None = None) -> FuzzyRelation:
    return load_relation(
        fixture_path(name),
        a.lattice if a is not None else None,
        a.states if a is not None else None,
        (b or a).states if a is not None else None,
    )


def F(text) -> Fraction:
    return Fraction(str(text))


def mat(*rows) -> tuple:
    """Exact matrix from decimal or ``p/q`` literals."""
    return tuple(tuple(F(x) for x in r) for r in rows)


# -- random values ---------------------------------------------------------------


def sample_value(rng: random.Random, lat: Lattice):
    if lat.is_finite:
        return rng.choice(lat.elements())
    r = rng.random()
    if r < 0.15:
        return Fraction(0)
    if r < 0.3:
        return Fraction(1)
    d = rng.choice((2, 3, 4, 5, 6, 8, 10))
    return Fraction(rng.randint(0, d), d)


def sample_matrix(rng, lat, n, m):
    return tuple(tuple(sample_value(rng, lat) for _ in range(m)) for _ in range(n))


def sample_relation(rng, lat, rows, cols) -> FuzzyRelation:
    return FuzzyRelation(lat, rows, cols, sample_matrix(rng, lat, len(rows), len(cols)))


def random_automaton(rng: random.Random, lat: Lattice, n: int, alphabet=("x",), prefix="a") -> FuzzyAutomaton:
    states = tuple(f"{prefix}{i + 1}" for i in range(n))
    delta = {x: FuzzyRelation(lat, states, states, sample_matrix(rng, lat, n, n)) for x in alphabet}
    sigma = FuzzySet(lat, states, tuple(sample_value(rng, lat) for _ in range(n)))
    tau = FuzzySet(lat, states, tuple(sample_value(rng, lat) for _ in range(n)))
    return FuzzyAutomaton(lat, states, tuple(alphabet), delta, sigma, tau)


def permuted(rng: random.Random, a: FuzzyAutomaton, prefix="b") -> FuzzyAutomaton:
    """``a`` with its states shuffled and renamed."""
    n = len(a.states)
    perm = list(range(n))
    rng.shuffle(perm)  # new state i is old state perm[i]
    states = tuple(f"{prefix}{i + 1}" for i in range(n))
    lat = a.lattice
    delta = {
        x: FuzzyRelation(lat, states, states, tuple(tuple(a.delta[x].entries[perm[i]][perm[j]] for j in range(n)) for i in range(n)))
        for x in a.alphabet
    }
    return FuzzyAutomaton(
        lat, states, a.alphabet, delta,
        FuzzySet(lat, states, tuple(a.sigma.values[p] for p in perm)),
        FuzzySet(lat, states, tuple(a.tau.values[p] for p in perm)),
    )


def duplicated(rng: random.Random, a: FuzzyAutomaton, prefix="b") -> FuzzyAutomaton:
    """``a`` plus a copy of one state; incoming weight of the original is shared with the copy."""
    n = len(a.states)
    k = rng.randrange(n)
    src = list(range(n)) + [k]
    states = tuple(f"{prefix}{i + 1}" for i in range(n + 1))
    lat = a.lattice
    delta = {
        x: FuzzyRelation(lat, states, states, tuple(tuple(a.delta[x].entries[src[i]][src[j]] for j in range(n + 1)) for i in range(n + 1)))
        for x in a.alphabet
    }
    return FuzzyAutomaton(
        lat, states, a.alphabet, delta,
        FuzzySet(lat, states, tuple(a.sigma.values[s] for s in src)),
        FuzzySet(lat, states, tuple(a.tau.values[s] for s in src)),
    )


def quotient(a: FuzzyAutomaton) -> FuzzyAutomaton:
    """``a`` factored by its greatest forward bisimulation equivalence."""
    return factor_automaton(a, greatest_bisim_equivalence(a)).quotient


def chain_corpus(seed: int = 20240601, size: int = 200, max_states: int = 3):
    """Seeded pairs ``(A, B)`` over the 3-element chain with at most 3 states each.

    ``B`` is drawn at random, as a permutation of ``A``, by duplicating a
    state of ``A`` or as the quotient of ``A``, so that bisimulations of
    every kind actually occur in the corpus.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < size:
        letters = ("x",) if rng.random() < 0.5 else ("x", "y")
        n = rng.randint(1, max_states)
        a = random_automaton(rng, CHAIN3, n, letters)
        mode = len(out) % 4
        if mode == 0:
            b = random_automaton(rng, CHAIN3, rng.randint(1, max_states), letters, prefix="b")
        elif mode == 1:
            b = permuted(rng, a)
        elif mode == 2:
            if n >= max_states:
                a = random_automaton(rng, CHAIN3, max_states - 1, letters)
            b = duplicated(rng, a)
        else:
            b = quotient(a)
        out.append((a, b))
    return out

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzybisim import (
    BOOLEAN,
    GODEL,
    LUKASIEWICZ,
    PRODUCT,
    DimensionError,
    FuzzyEquivalence,
    FuzzyRelation,
    FuzzySet,
    InvalidEquivalenceError,
    LatticeMismatchError,
    chain,
    classify_equivalence,
    compose,
    crisp_part,
    factor_set,
    inverse,
    left_residual,
    right_residual,
)
from fuzzybisim.relations import compose_all, join_all
from support import aut, mat, rel, sample_relation

F = Fraction
LATTICES = [BOOLEAN, GODEL, LUKASIEWICZ, PRODUCT, chain(3)]


def R(lat, *rows):
    return FuzzyRelation.of(lat, rows)


def test_set_relation_composition_by_hand():
    a = aut("a52")
    assert compose(a.sigma, a.delta["x"]).values == (0, 0, F(1, 2))


def test_identity_and_disjoint_sets():
    r = R(GODEL, ["0.3", "1"], ["0.5", "0"])
    assert compose(r, FuzzyRelation.identity(GODEL, r.cols)) == r
    assert compose(FuzzyRelation.identity(GODEL, r.rows), r) == r
    f = FuzzySet.of(BOOLEAN, [1, 0, 0])
    g = FuzzySet.of(BOOLEAN, [0, 1, 1])
    assert compose(f, g) == 0


def test_composition_checks_domains_and_lattices():
    r = R(GODEL, [1, 0])
    with pytest.raises(DimensionError):
        compose(r, r)
    with pytest.raises(LatticeMismatchError):
        compose(R(GODEL, [1]), R(PRODUCT, [1]))


def test_inverse():
    phi = rel("phi51", aut("a51"), aut("b51"))
    inv = inverse(phi)
    assert inv.shape == (2, 3)
    assert inv.entries == mat(["1", "1", "0.6"], ["0.7", "0.7", "1"])
    assert inverse(inv) == phi
    e = R(GODEL, [1, "0.5"], ["0.5", 1])
    assert inverse(e).entries == e.entries


def test_residual_identity_cases():
    w = R(GODEL, ["0.2", 1, "0.4"], ["0.5", "0.5", 0])
    assert right_residual(w, FuzzyRelation.identity(GODEL, w.cols)).entries == w.entries
    assert left_residual(FuzzyRelation.identity(GODEL, w.rows), w).entries == w.entries


def test_boolean_right_residual_maximal_over_all_matrices():
    w = R(BOOLEAN, [1, 0], [1, 1])
    v = R(BOOLEAN, [1, 0], [1, 1])
    u = right_residual(w, v)
    assert u.entries == w.entries
    sols = []
    for bits in product((0, 1), repeat=4):
        cand = R(BOOLEAN, bits[:2], bits[2:])
        if compose(cand, v) <= w:
            sols.append(cand)
    assert u in sols
    assert all(s <= u for s in sols)


def test_boolean_left_residual_maximal_over_all_matrices():
    rng = random.Random(3)
    for _ in range(10):
        v = sample_relation(rng, BOOLEAN, ("0", "1"), ("0", "1"))
        w = sample_relation(rng, BOOLEAN, ("0", "1"), ("0", "1"))
        u = left_residual(v, w)
        sols = [c for c in (R(BOOLEAN, b[:2], b[2:]) for b in product((0, 1), repeat=4)) if compose(v, c) <= w]
        assert u in sols and all(s <= u for s in sols)


def test_godel_right_residual_dominates_random_solutions():
    rng = random.Random(11)
    labels = ("0", "1")
    w = sample_relation(rng, GODEL, labels, labels)
    v = sample_relation(rng, GODEL, labels, labels)
    u = right_residual(w, v)
    assert compose(u, v) <= w
    found = 0
    while found < 20:
        c = sample_relation(rng, GODEL, labels, labels) & u if rng.random() < 0.5 else sample_relation(rng, GODEL, labels, labels)
        if compose(c, v) <= w:
            found += 1
            assert c <= u


@pytest.mark.parametrize("lat", LATTICES, ids=str)
def test_residual_duality(lat):
    rng = random.Random(5)
    for _ in range(30):
        v = sample_relation(rng, lat, ("a", "b"), ("p", "q", "r"))
        w = sample_relation(rng, lat, ("a", "b"), ("s", "t"))
        assert left_residual(v, w) == inverse(right_residual(inverse(w), inverse(v)))


@pytest.mark.parametrize("lat", [BOOLEAN, chain(3)], ids=str)
def test_residual_adjunction_exhaustive(lat):
    vals = lat.elements()
    rng = random.Random(9)
    labels = ("0", "1")
    for _ in range(4):
        v = sample_relation(rng, lat, labels, labels)
        w = sample_relation(rng, lat, labels, labels)
        r = right_residual(w, v)
        for entries in product(vals, repeat=4):
            u = FuzzyRelation(lat, labels, labels, (entries[:2], entries[2:]))
            assert (compose(u, v) <= w) == (u <= r)


def test_equivalence_classification():
    e = R(GODEL, [1, "0.5"], ["0.5", 1])
    assert classify_equivalence(e).is_equivalence
    assert classify_equivalence(FuzzyRelation.identity(GODEL, ("a", "b", "c"))).is_equivalence
    rep = classify_equivalence(R(GODEL, [1, "0.5"], ["0.3", 1]))
    assert not rep.symmetric and rep.reflexive
    assert rep.first_violation == ("symmetric", (0, 1))
    with pytest.raises(DimensionError):
        classify_equivalence(R(GODEL, [1, 0]))
    with pytest.raises(InvalidEquivalenceError):
        FuzzyEquivalence(R(GODEL, ["0.5", 0], [0, 1]))


def test_crisp_part():
    e = R(GODEL, [1, "0.5"], ["0.5", 1])
    assert crisp_part(e).entries == ((1, 0), (0, 1))
    crisp = R(GODEL, [1, 0], [1, 1])
    assert crisp_part(crisp) == crisp
    assert FuzzyEquivalence(e).index == 2


def test_factor_sets_of_boolean_equivalences():
    a = aut("a61")
    e, f = rel("E61", a), rel("F61", a)
    assert factor_set(e).index == 3
    assert factor_set(f).index == 2
    assert factor_set(f).class_of == (0, 0, 1, 1)
    assert factor_set(FuzzyRelation.identity(GODEL, tuple("abcd"))).index == 4


# -- laws on random instances ------------------------------------------------------


def _rel(data, lat, n, m):
    if lat.is_finite:
        v = st.sampled_from(lat.elements())
    else:
        v = st.fractions(min_value=0, max_value=1, max_denominator=6)
    rows = data.draw(st.lists(st.lists(v, min_size=m, max_size=m), min_size=n, max_size=n))
    return FuzzyRelation(lat, tuple(map(str, range(n))), tuple(map(str, range(m))), rows)


@pytest.mark.parametrize("lat", LATTICES, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_composition_laws(lat, data):
    p = _rel(data, lat, 2, 3)
    q = _rel(data, lat, 3, 2)
    r = _rel(data, lat, 2, 3)
    q2 = q | _rel(data, lat, 3, 2)
    f = FuzzySet(lat, p.cols, p.entries[0])
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(compose(f, q), r) == compose(f, compose(q, r))
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))
    assert compose(p, q) <= compose(p, q2)
    assert compose(p, join_all([q, q2])) == join_all([compose(p, q), compose(p, q2)])


@pytest.mark.parametrize("lat", LATTICES, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_equivalence_facts(lat, data):
    raw = _rel(data, lat, 3, 3)
    # a kernel-style construction always yields an equivalence
    br = lat.biresiduum
    e = raw.with_entries(tuple(tuple(min(map(br, r1, r2)) for r2 in raw.entries) for r1 in raw.entries))
    eq = FuzzyEquivalence(e)
    assert compose_all(e, e) == e
    one = lat.one
    for i in range(3):
        for j in range(3):
            assert (e.entries[i][j] == one) == (e.entries[i] == e.entries[j])
    assert eq.index == factor_set(crisp_part(e)).index

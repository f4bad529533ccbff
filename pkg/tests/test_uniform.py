import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzybisim import (
    BOOLEAN,
    GODEL,
    LUKASIEWICZ,
    PRODUCT,
    EnumerationLimitError,
    FuzzyEquivalence,
    FuzzyRelation,
    NotLFunctionError,
    NotUniformError,
    canonical_description,
    chain,
    classify,
    compose,
    crisp_descriptions,
    induced_bijection,
    induced_equivalences,
    inverse,
    natural_uniform_relation,
    uniform_from_isomorphism,
)
from fuzzybisim.relations import compose_all
from support import aut, rel, sample_relation

LATTICES = [BOOLEAN, GODEL, LUKASIEWICZ, PRODUCT, chain(3)]


def R(lat, *rows):
    return FuzzyRelation.of(lat, rows)


def random_equivalence(rng, lat, n):
    """Kernel of a random relation: always a fuzzy equivalence."""
    raw = sample_relation(rng, lat, tuple(f"s{i}" for i in range(n)), tuple(f"t{i}" for i in range(n + 1)))
    return induced_equivalences(raw)[0]


def random_uniform(rng, lat, n):
    """``phi(a, b) = F(psi(a), b)`` for a random equivalence ``F`` and surjective ``psi``."""
    f = random_equivalence(rng, lat, n)
    psi = list(range(n))
    rng.shuffle(psi)
    m = n + rng.randint(0, 2)
    psi += [rng.randrange(n) for _ in range(m - n)]
    rows = tuple(f.entries[psi[a]] for a in range(m))
    return FuzzyRelation(lat, tuple(f"a{i}" for i in range(m)), f.states, rows)


def test_kernel_of_natural_relation():
    a = aut("a61")
    e = FuzzyEquivalence(rel("E61", a))
    phi = natural_uniform_relation(a, e)
    ker, coker = induced_equivalences(phi)
    assert ker == e
    assert coker.relation.entries == FuzzyRelation.identity(BOOLEAN, phi.cols).entries


def test_identity_kernels():
    i = FuzzyRelation.identity(GODEL, ("a", "b"))
    ker, coker = induced_equivalences(i)
    assert ker == i and coker == i
    c = classify(i)
    assert c.is_uniform and c.witness == {}


def test_kernel_equals_phi_phi_inverse():
    phi = R(GODEL, [1, "0.5"], ["0.5", 1])
    ker, coker = induced_equivalences(phi)
    assert ker.relation == compose(phi, inverse(phi))
    assert coker.relation.entries == compose(inverse(phi), phi).entries


def test_classification_of_fixtures():
    a = aut("a61")
    assert classify(rel("phiE", a, aut("aE61"))).is_uniform
    c = classify(rel("phi51", aut("a51"), aut("b51")))
    assert c.is_l_function and c.is_surjective
    phi = rel("phi51", aut("a51"), aut("b51"))
    triple = compose_all(phi, inverse(phi), phi)
    assert c.is_uniform == (triple == phi)


def test_classification_witnesses():
    c = classify(R(GODEL, ["0.5", 0], [0, 1]))
    assert not c.is_l_function and c.witness["l_function"] == (0,)
    assert not c.is_surjective and c.witness["surjective"] == (0,)


def test_crisp_descriptions():
    a = aut("a61")
    assert crisp_descriptions(rel("phiE", a, aut("aE61"))) == [(0, 1, 2, 2)]
    assert crisp_descriptions(FuzzyRelation.identity(GODEL, "abc")) == [(0, 1, 2)]
    assert crisp_descriptions(R(GODEL, [1, 1], [1, 1])) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(NotLFunctionError):
        crisp_descriptions(R(GODEL, ["0.5", 0], [0, 1]))
    big = FuzzyRelation.constant(GODEL, tuple("abcdefghijklmn"), ("p", "q"), GODEL.one)
    with pytest.raises(EnumerationLimitError):
        crisp_descriptions(big)
    assert len(crisp_descriptions(big, cap=2 ** 14)) == 2 ** 14


def test_induced_bijection_examples():
    w = R(GODEL, [1, "0.5"], ["0.5", 1])
    assert induced_bijection(w) == {0: 0, 1: 1}
    assert induced_bijection(FuzzyRelation.identity(GODEL, "abc")) == {0: 0, 1: 1, 2: 2}
    a = aut("a61")
    e = FuzzyEquivalence(rel("E61", a))
    assert induced_bijection(natural_uniform_relation(a, e)) == {0: 0, 1: 1, 2: 2}
    with pytest.raises(NotUniformError):
        induced_bijection(R(GODEL, ["0.5", 0], [0, 1]))


def test_uniform_from_isomorphism_examples():
    e = FuzzyEquivalence.of(GODEL, [[1, "0.5"], ["0.5", 1]], ("a1", "a2"))
    f = FuzzyEquivalence.of(GODEL, [[1, "0.5"], ["0.5", 1]], ("b1", "b2"))
    phi = uniform_from_isomorphism(e, f, {0: 0, 1: 1})
    assert phi.entries == R(GODEL, [1, "0.5"], ["0.5", 1]).entries
    assert induced_equivalences(phi)[0] == e
    i = FuzzyEquivalence(FuzzyRelation.identity(GODEL, ("a", "b")))
    assert uniform_from_isomorphism(i, i, {0: 0, 1: 1}) == i.relation
    with pytest.raises(ValueError):
        uniform_from_isomorphism(i, i, {0: 0, 1: 0})


def test_natural_relation_from_pullback():
    a = aut("a61")
    e = FuzzyEquivalence(rel("E61", a))
    nat = natural_uniform_relation(a, e)
    fs = e.factor
    # the fuzzy equality on the factor set, pulled back along the identity of classes
    tilde = FuzzyEquivalence(FuzzyRelation(BOOLEAN, fs.labels, fs.labels,
                                           tuple(tuple(e.entries[i][j] for j in fs.representatives) for i in fs.representatives)))
    assert uniform_from_isomorphism(e, tilde, {k: k for k in range(fs.index)}) == nat


# -- properties ---------------------------------------------------------------------


@pytest.mark.parametrize("lat", LATTICES, ids=str)
def test_partial_fuzzy_function_symmetric_in_inverse(lat):
    rng = random.Random(17)
    for _ in range(60):
        phi = sample_relation(rng, lat, ("a", "b", "c"), ("p", "q"))
        assert classify(phi).is_partial_fuzzy_function == classify(inverse(phi)).is_partial_fuzzy_function


@pytest.mark.parametrize("lat", LATTICES, ids=str)
def test_uniform_relation_facts(lat):
    rng = random.Random(23)
    for _ in range(25):
        phi = random_uniform(rng, lat, rng.randint(1, 3))
        c = classify(phi)
        assert c.is_uniform
        assert compose_all(phi, inverse(phi), phi) == phi
        ker, coker = induced_equivalences(phi)
        assert ker.relation == compose(phi, inverse(phi))
        assert coker.relation == compose(inverse(phi), phi)
        for psi in crisp_descriptions(phi):
            for a1 in range(len(phi.rows)):
                for a2 in range(len(phi.rows)):
                    assert ker.entries[a1][a2] == coker.entries[psi[a1]][psi[a2]]
                for b in range(len(phi.cols)):
                    assert phi.entries[a1][b] == coker.entries[psi[a1]][b]
        # the bijection does not depend on the description and inverts under phi^-1
        bij = induced_bijection(phi)
        back = induced_bijection(inverse(phi))
        assert sorted(bij.values()) == list(range(ker.index))
        assert {v: k for k, v in bij.items()} == back


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_ordered_uniform_relations(seed):
    rng = random.Random(seed)
    lat = GODEL
    phi2 = random_uniform(rng, lat, 3)
    other = random_uniform(rng, lat, 3)
    if other.shape != phi2.shape:
        return
    phi1 = phi2 & other.relabel(phi2.rows, phi2.cols)
    if not classify(phi1).is_uniform or not phi1 <= phi2:
        return
    cr1, cr2 = set(crisp_descriptions(phi1)), set(crisp_descriptions(phi2))
    assert cr1 <= cr2
    k1, c1 = induced_equivalences(phi1)
    k2, c2 = induced_equivalences(phi2)
    assert k1 <= k2 and c1 <= c2


def test_composition_of_uniform_relations():
    rng = random.Random(31)
    checked = 0
    for _ in range(200):
        lat = rng.choice(LATTICES)
        phi1 = random_uniform(rng, lat, 3)
        _, f = induced_equivalences(phi1)
        # keep only those phi2 whose kernel lies above F
        psi = list(range(3))
        rng.shuffle(psi)
        target = random_equivalence(rng, lat, 3)
        rows = tuple(target.entries[psi[b]] for b in range(3))
        phi2 = FuzzyRelation(lat, phi1.cols, target.states, rows)
        if not (f <= induced_equivalences(phi2)[0]):
            continue
        checked += 1
        assert classify(compose(phi1, phi2)).is_uniform
    assert checked > 10


def test_equal_uniform_relations_share_descriptions_and_kernels():
    rng = random.Random(41)
    for _ in range(30):
        phi = random_uniform(rng, GODEL, 3)
        other = FuzzyRelation(GODEL, phi.rows, phi.cols, phi.entries)
        assert set(crisp_descriptions(phi)) == set(crisp_descriptions(other))
        assert induced_equivalences(phi)[0] == induced_equivalences(other)[0]
    for perm in permutations(range(3)):
        ident = FuzzyRelation.identity(GODEL, ("p", "q", "r"))
        shuffled = FuzzyRelation(GODEL, ident.rows, ident.cols, tuple(ident.entries[i] for i in perm))
        assert (shuffled == ident) == (canonical_description(shuffled) == canonical_description(ident))

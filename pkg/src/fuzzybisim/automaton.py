"""Fuzzy finite automata: word semantics, reversal, factor automata, isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence, Union

from .errors import DimensionError, LatticeMismatchError
from .lattice import Lattice, Value
from .relations import (
    FactorSet,
    FuzzyEquivalence,
    FuzzyRelation,
    FuzzySet,
    as_relation,
    compose,
    inverse,
    mat_compose,
    tilde,
)

Word = Union[str, Sequence[str]]

DEFAULT_MAX_LEN = 6


@dataclass(frozen=True, eq=False)
class FuzzyAutomaton:
    """``(A, delta, sigma, tau)`` over a lattice and an ordered alphabet.

    ``delta`` maps each letter to a square relation on ``states``; ``sigma``
    and ``tau`` are the fuzzy sets of initial and terminal states.
    Instances are immutable once built.
    """

    lattice: Lattice
    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    delta: Mapping[str, FuzzyRelation]
    sigma: FuzzySet
    tau: FuzzySet

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if not self.states:
            raise DimensionError("an automaton needs at least one state")
        if len(set(self.states)) != len(self.states):
            raise DimensionError("state names must be distinct")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise DimensionError("alphabet symbols must be distinct")
        if set(self.delta) != set(self.alphabet):
            raise DimensionError(f"delta letters {sorted(self.delta)} do not match alphabet {list(self.alphabet)}")
        delta = {}
        for x in self.alphabet:
            d = self.delta[x]
            if d.lattice != self.lattice:
                raise LatticeMismatchError(f"delta[{x!r}] is over {d.lattice}, automaton over {self.lattice}")
            if d.shape != (len(self.states),) * 2:
                raise DimensionError(f"delta[{x!r}] has shape {d.shape}, expected {len(self.states)}x{len(self.states)}")
            delta[x] = d.relabel(self.states, self.states)
        object.__setattr__(self, "delta", delta)
        for name in ("sigma", "tau"):
            s = getattr(self, name)
            if s.lattice != self.lattice:
                raise LatticeMismatchError(f"{name} is over {s.lattice}, automaton over {self.lattice}")
            if len(s) != len(self.states):
                raise DimensionError(f"{name} has {len(s)} entries, expected {len(self.states)}")
            object.__setattr__(self, name, s.relabel(self.states))

    @classmethod
    def of(
        cls,
        lattice: Lattice,
        *,
        sigma,
        tau,
        delta: Mapping[str, Sequence[Sequence]],
        states: Sequence[str] | None = None,
        alphabet: Sequence[str] | None = None,
    ) -> "FuzzyAutomaton":
        """Build from raw values, e.g. ``FuzzyAutomaton.of(GODEL, sigma=[1, 0], tau=["1/2", 1], delta={"x": ...})``."""
        n = len(sigma)
        states = tuple(states) if states is not None else tuple(f"a{i + 1}" for i in range(n))
        alphabet = tuple(alphabet) if alphabet is not None else tuple(delta)
        return cls(
            lattice,
            states,
            alphabet,
            {x: FuzzyRelation.of(lattice, delta[x], states, states) for x in alphabet},
            FuzzySet.of(lattice, sigma, states),
            FuzzySet.of(lattice, tau, states),
        )

    def __len__(self):
        return len(self.states)

    def __eq__(self, other):
        if not isinstance(other, FuzzyAutomaton):
            return NotImplemented
        return (
            self.lattice == other.lattice
            and self.states == other.states
            and self.alphabet == other.alphabet
            and self.sigma == other.sigma
            and self.tau == other.tau
            and all(self.delta[x] == other.delta[x] for x in self.alphabet)
        )

    __hash__ = None

    def parse_word(self, word: Word) -> tuple[str, ...]:
        """Split a word into letters.

        Strings containing spaces or commas are split on them; other strings
        are read one character per letter.  Sequences pass through.
        """
        if isinstance(word, str):
            if any(c in word for c in " ,"):
                letters = tuple(w for w in word.replace(",", " ").split() if w)
            else:
                letters = tuple(word)
        else:
            letters = tuple(word)
        unknown = [x for x in letters if x not in self.delta]
        if unknown:
            raise KeyError(f"unknown symbol(s) {unknown}; alphabet is {list(self.alphabet)}")
        return letters

    def renamed(self, states: Sequence[str]) -> "FuzzyAutomaton":
        return FuzzyAutomaton(self.lattice, states, self.alphabet, self.delta, self.sigma, self.tau)


def transition_relation(a: FuzzyAutomaton, word: Word) -> FuzzyRelation:
    """``delta_u``; the empty word gives the crisp identity."""
    rel = FuzzyRelation.identity(a.lattice, a.states)
    for x in a.parse_word(word):
        rel = compose(rel, a.delta[x])
    return rel


def _advance(lat: Lattice, vec: tuple, d: FuzzyRelation) -> tuple:
    t = lat.tensor
    zero = lat.zero
    cols = tuple(zip(*d.entries))
    return tuple(max(map(t, vec, c), default=zero) for c in cols)


def _accept(lat: Lattice, vec: tuple, tau: FuzzySet) -> Value:
    return max(map(lat.tensor, vec, tau.values), default=lat.zero)


def language_value(a: FuzzyAutomaton, word: Word) -> Value:
    """Degree to which ``a`` accepts ``word``: ``sigma @ delta_u @ tau``."""
    vec = a.sigma.values
    for x in a.parse_word(word):
        vec = _advance(a.lattice, vec, a.delta[x])
    return _accept(a.lattice, vec, a.tau)


def reverse(a: FuzzyAutomaton) -> FuzzyAutomaton:
    return FuzzyAutomaton(
        a.lattice,
        a.states,
        a.alphabet,
        {x: inverse(a.delta[x]) for x in a.alphabet},
        a.tau,
        a.sigma,
    )


@dataclass(frozen=True, eq=False)
class FactorAutomaton:
    """``A/E`` together with where it came from.

    ``quotient`` is an ordinary automaton whose states are the class labels
    of ``equivalence``; ``tilde`` is the induced fuzzy equality on them.
    """

    base: FuzzyAutomaton
    equivalence: FuzzyEquivalence
    quotient: FuzzyAutomaton
    tilde: FuzzyRelation

    @property
    def factor(self) -> FactorSet:
        return self.equivalence.factor

    @property
    def size(self) -> int:
        return len(self.quotient.states)


def _equivalence_on(a: FuzzyAutomaton, e) -> FuzzyEquivalence:
    if not isinstance(e, FuzzyEquivalence):
        e = FuzzyEquivalence(as_relation(e))
    if e.lattice != a.lattice:
        raise LatticeMismatchError(f"equivalence over {e.lattice}, automaton over {a.lattice}")
    if len(e.states) != len(a.states):
        raise DimensionError(f"equivalence on {len(e.states)} states, automaton has {len(a.states)}")
    if e.states != a.states:
        e = FuzzyEquivalence(e.relation.relabel(a.states, a.states))
    return e


def factor_automaton(a: FuzzyAutomaton, e) -> FactorAutomaton:
    """Quotient by a fuzzy equivalence: ``(E @ delta_x @ E)``, ``sigma @ E``, ``E @ tau`` on representatives."""
    e = _equivalence_on(a, e)
    lat = a.lattice
    fs = e.factor
    reps = fs.representatives
    er = e.relation
    delta = {}
    for x in a.alphabet:
        full = mat_compose(lat, mat_compose(lat, er.entries, a.delta[x].entries), er.entries)
        delta[x] = FuzzyRelation(lat, fs.labels, fs.labels, tuple(tuple(full[i][j] for j in reps) for i in reps))
    s = compose(a.sigma, er).values
    t = compose(er, a.tau).values
    quotient = FuzzyAutomaton(
        lat,
        fs.labels,
        a.alphabet,
        delta,
        FuzzySet(lat, fs.labels, tuple(s[i] for i in reps)),
        FuzzySet(lat, fs.labels, tuple(t[i] for i in reps)),
    )
    return FactorAutomaton(a, e, quotient, tilde(e))


def _compatible(a: FuzzyAutomaton, b: FuzzyAutomaton):
    if a.lattice != b.lattice:
        raise LatticeMismatchError(f"automata over {a.lattice} and {b.lattice}")
    if set(a.alphabet) != set(b.alphabet):
        raise ValueError(f"alphabets {list(a.alphabet)} and {list(b.alphabet)} differ")


@dataclass(frozen=True)
class LanguageVerdict:
    """Result of a bounded language comparison.

    ``equal_up_to_bound`` only covers words of length at most ``max_len``;
    it is not a proof of language equivalence.
    """

    equal_up_to_bound: bool
    max_len: int
    words_checked: int
    first_differing_word: tuple[str, ...] | None = None
    value_a: Value | None = None
    value_b: Value | None = None


def iter_words(alphabet: Sequence[str], max_len: int):
    """Words of length ``0..max_len`` in length-lexicographic order."""
    for n in range(max_len + 1):
        yield from product(alphabet, repeat=n)


def language_equal_bounded(a: FuzzyAutomaton, b: FuzzyAutomaton, max_len: int = DEFAULT_MAX_LEN) -> LanguageVerdict:
    _compatible(a, b)
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    lat = a.lattice
    # rows sigma @ delta_u for every word of the current length, in order
    layer = [((), a.sigma.values, b.sigma.values)]
    checked = 0
    for n in range(max_len + 1):
        for word, va, vb in layer:
            checked += 1
            la, lb = _accept(lat, va, a.tau), _accept(lat, vb, b.tau)
            if la != lb:
                return LanguageVerdict(False, max_len, checked, word, la, lb)
        if n == max_len:
            break
        layer = [
            (word + (x,), _advance(lat, va, a.delta[x]), _advance(lat, vb, b.delta[x]))
            for word, va, vb in layer
            for x in a.alphabet
        ]
    return LanguageVerdict(True, max_len, checked)


# -- isomorphism ---------------------------------------------------------------


def _signatures(m: FuzzyAutomaton, compat: FuzzyRelation | None):
    sigs = []
    for i in range(len(m.states)):
        parts = [m.sigma.values[i], m.tau.values[i]]
        for x in m.alphabet:
            d = m.delta[x].entries
            parts.append((d[i][i], tuple(sorted(d[i])), tuple(sorted(r[i] for r in d))))
        if compat is not None:
            parts.append(tuple(sorted(compat.entries[i])))
        sigs.append(tuple(parts))
    return sigs


def is_isomorphism(
    a: FuzzyAutomaton,
    b: FuzzyAutomaton,
    mapping: Mapping[str, str],
    compat: tuple[FuzzyRelation, FuzzyRelation] | None = None,
) -> bool:
    """Entrywise check that ``mapping`` (state name to state name) is an isomorphism."""
    if len(a.states) != len(b.states) or sorted(mapping) != sorted(a.states):
        return False
    if sorted(mapping.values()) != sorted(b.states):
        return False
    if a.lattice != b.lattice or set(a.alphabet) != set(b.alphabet):
        return False
    f = [b.states.index(mapping[s]) for s in a.states]
    n = len(f)
    if any(a.sigma.values[i] != b.sigma.values[f[i]] or a.tau.values[i] != b.tau.values[f[i]] for i in range(n)):
        return False
    for x in a.alphabet:
        da, db = a.delta[x].entries, b.delta[x].entries
        if any(da[i][j] != db[f[i]][f[j]] for i in range(n) for j in range(n)):
            return False
    if compat is not None:
        ca, cb = (as_relation(c).entries for c in compat)
        if any(ca[i][j] != cb[f[i]][f[j]] for i in range(n) for j in range(n)):
            return False
    return True


def isomorphism_search(
    a: FuzzyAutomaton,
    b: FuzzyAutomaton,
    compat: tuple[FuzzyRelation, FuzzyRelation] | None = None,
) -> dict[str, str] | None:
    """Find an isomorphism of ``a`` onto ``b``, or ``None``.

    ``compat``, if given, is a pair of relations on the states of ``a`` and
    of ``b`` (typically the fuzzy equalities of two factor automata) that the
    bijection must also preserve.  Backtracking with per-state signatures;
    the first isomorphism in candidate order is returned.
    """
    _compatible(a, b)
    n = len(a.states)
    if n != len(b.states):
        return None
    ca = cb = None
    if compat is not None:
        ca, cb = (as_relation(c) for c in compat)
        if ca.shape != (n, n) or cb.shape != (n, n):
            raise DimensionError("compatibility relations must live on the automata's states")
    sa, sb = _signatures(a, ca), _signatures(b, cb)
    if sorted(sa) != sorted(sb):
        return None
    cands = [[j for j in range(n) if sb[j] == sa[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: (len(cands[i]), i))
    da = [a.delta[x].entries for x in a.alphabet]
    db = [b.delta[x].entries for x in a.alphabet]
    if ca is not None:
        da.append(ca.entries)
        db.append(cb.entries)
    f = [-1] * n
    used = [False] * n

    def consistent(i: int, j: int) -> bool:
        for pa, pb in zip(da, db):
            if pa[i][i] != pb[j][j]:
                return False
            for k in range(n):
                fk = f[k]
                if fk >= 0 and (pa[i][k] != pb[j][fk] or pa[k][i] != pb[fk][j]):
                    return False
        return True

    def search(depth: int) -> bool:
        if depth == n:
            return True
        i = order[depth]
        for j in cands[i]:
            if used[j] or not consistent(i, j):
                continue
            f[i], used[j] = j, True
            if search(depth + 1):
                return True
            f[i], used[j] = -1, False
        return False

    if not search(0):
        return None
    return {a.states[i]: b.states[f[i]] for i in range(n)}


def factor_isomorphism(fa: FactorAutomaton, fb: FactorAutomaton) -> dict[str, str] | None:
    """Isomorphism of two factor automata that also preserves their fuzzy equalities."""
    return isomorphism_search(fa.quotient, fb.quotient, compat=(fa.tilde, fb.tilde))

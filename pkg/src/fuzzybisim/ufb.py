"""UFB-equivalence, state reduction and the natural quotient constructions.

Two automata are UFB-equivalent when some uniform fuzzy relation between
them is a forward bisimulation.  This holds iff the factor automata by the
greatest forward bisimulation equivalences are isomorphic through a map that
also preserves the induced fuzzy equalities; the witness is then rebuilt as
``phi(a, b) = F(psi(a), b)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import FactorAutomaton, FuzzyAutomaton, factor_automaton, factor_isomorphism
from .bisim import DEFAULT_MAX_ITER, BisimKind, bisim_equivalence_fixpoint, check_relation, greatest
from .errors import DimensionError, LatticeMismatchError, UnconvergedError
from .relations import FuzzyEquivalence, FuzzyRelation, as_relation
from .uniform import classify, induced_equivalences, uniform_from_isomorphism

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not_equivalent"
UNDECIDED = "undecided"


@dataclass(frozen=True, eq=False)
class UfbVerdict:
    """Outcome of :func:`ufb_equivalent`.

    ``status`` is ``"undecided"`` only when a fixpoint hit its iteration cap;
    in that case ``E``/``F`` and everything after them may be ``None``.
    ``iso`` maps class labels of ``A/E`` to class labels of ``B/F``.
    """

    status: str
    E: FuzzyEquivalence | None = None
    F: FuzzyEquivalence | None = None
    factor_a: FactorAutomaton | None = None
    factor_b: FactorAutomaton | None = None
    iso: dict[str, str] | None = None
    witness: FuzzyRelation | None = None
    reason: str | None = None

    @property
    def equivalent(self) -> bool:
        return self.status == EQUIVALENT


def _equivalence(a: FuzzyAutomaton, max_iter: int, workers):
    rep = bisim_equivalence_fixpoint(a, "forward", max_iter=max_iter, workers=workers)
    return (FuzzyEquivalence(rep.result) if rep.converged else None), rep


def ufb_equivalent(a: FuzzyAutomaton, b: FuzzyAutomaton, *, max_iter: int = DEFAULT_MAX_ITER,
                   workers: int | None = None) -> UfbVerdict:
    if a.lattice != b.lattice:
        raise LatticeMismatchError(f"automata over {a.lattice} and {b.lattice}")
    if set(a.alphabet) != set(b.alphabet):
        raise DimensionError(f"alphabets {list(a.alphabet)} and {list(b.alphabet)} differ")
    e, rep_a = _equivalence(a, max_iter, workers)
    f, rep_b = _equivalence(b, max_iter, workers)
    if e is None or f is None:
        which = "A" if e is None else "B"
        return UfbVerdict(UNDECIDED, e, f, reason=f"greatest forward bisimulation equivalence on {which} did not converge")
    fa, fb = factor_automaton(a, e), factor_automaton(b, f)
    if fa.size != fb.size:
        return UfbVerdict(NOT_EQUIVALENT, e, f, fa, fb, reason=f"factor automata have {fa.size} and {fb.size} states")
    iso = factor_isomorphism(fa, fb)
    if iso is None:
        return UfbVerdict(NOT_EQUIVALENT, e, f, fa, fb,
                          reason="no isomorphism of the factor automata preserves the fuzzy equalities")
    fsa, fsb = fa.factor, fb.factor
    class_map = {fsa.labels.index(k): fsb.labels.index(v) for k, v in iso.items()}
    witness = uniform_from_isomorphism(e, f, class_map).relabel(a.states, b.states)
    _verify_witness(a, b, e, f, witness)
    return UfbVerdict(EQUIVALENT, e, f, fa, fb, iso, witness)


def _verify_witness(a, b, e, f, witness):
    problems = []
    if not classify(witness).is_uniform:
        problems.append("not uniform")
    v = check_relation(a, b, witness, BisimKind.FORWARD_BISIM)
    if not v.holds:
        problems.append(v.violation.describe())
    ker, coker = induced_equivalences(witness)
    if ker != e or coker != f:
        problems.append("kernel or co-kernel differs from E, F")
    if problems:  # pragma: no cover - would contradict the theory
        raise AssertionError("witness check failed: " + "; ".join(problems))


def reduce(a: FuzzyAutomaton, *, max_iter: int = DEFAULT_MAX_ITER,
           workers: int | None = None) -> tuple[FactorAutomaton, FuzzyEquivalence]:
    """Factor ``a`` by its greatest forward bisimulation equivalence ``E``.

    ``A/E`` has ``ind(E)`` states and is UFB-equivalent to ``a``.  Raises
    :class:`UnconvergedError` if the fixpoint does not settle.
    """
    e, rep = _equivalence(a, max_iter, workers)
    if e is None:
        raise UnconvergedError(rep.detail, rep)
    return factor_automaton(a, e), e


def _validated(a: FuzzyAutomaton, e) -> FuzzyEquivalence:
    e = e if isinstance(e, FuzzyEquivalence) else FuzzyEquivalence(as_relation(e))
    if e.lattice != a.lattice:
        raise LatticeMismatchError(f"equivalence over {e.lattice}, automaton over {a.lattice}")
    if len(e.states) != len(a.states):
        raise DimensionError(f"equivalence on {len(e.states)} states, automaton has {len(a.states)}")
    return FuzzyEquivalence(e.relation.relabel(a.states, a.states))


def natural_uniform_relation(a: FuzzyAutomaton, e) -> FuzzyRelation:
    """``phi(a1, E_a2) = E(a1, a2)`` between ``a`` and ``a / E``."""
    e = _validated(a, e)
    fs = e.factor
    rows = tuple(tuple(r[j] for j in fs.representatives) for r in e.entries)
    return FuzzyRelation(a.lattice, a.states, fs.labels, rows)


def relative_quotient(a: FuzzyAutomaton, e, g) -> FuzzyEquivalence:
    """``(G/E)(E_a1, E_a2) = G(a1, a2)`` on the factor set of ``E``; needs ``E <= G``."""
    e, g = _validated(a, e), _validated(a, g)
    if not e <= g:
        raise ValueError("the relative quotient G/E requires E <= G")
    fs = e.factor
    reps = fs.representatives
    ge = g.entries
    rows = tuple(tuple(ge[i][j] for j in reps) for i in reps)
    return FuzzyEquivalence(FuzzyRelation(a.lattice, fs.labels, fs.labels, rows))


def greatest_forward_bisimulation(a, b, **opts):
    """Shortcut used by callers comparing the witness with the greatest forward bisimulation."""
    return greatest(a, b, BisimKind.FORWARD_BISIM, **opts)

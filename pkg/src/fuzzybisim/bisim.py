"""Simulations and bisimulations between fuzzy automata.

:func:`check_relation` evaluates the defining inequalities of each kind
exactly.  The ``greatest_*`` solvers compute greatest solutions as
decreasing fixpoints built from relational residuals:

* ``P o phi <= phi o Q`` holds iff ``phi <= left_residual(P, phi o Q)``
* ``phi o Q <= P o phi`` holds iff ``phi <= right_residual(P o phi, Q)``

Constraints that are antitone in ``phi`` (the transition conditions and one
side of the boundary conditions) are enforced by iteration; the
remaining isotone boundary conditions only hold for the greatest solution
if they hold for some solution, so they are checked once at the end.
Backward kinds are forward kinds on reversed automata.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .automaton import FuzzyAutomaton, reverse
from .errors import (
    DimensionError,
    EmptyRelationError,
    LatticeMismatchError,
    NotUniformError,
    UnconvergedError,
)
from .lattice import Lattice, Value
from .relations import (
    FuzzyEquivalence,
    FuzzyRelation,
    Matrix,
    as_relation,
    classify_equivalence,
    mat_compose,
    mat_left_residual,
    mat_meet,
    mat_right_residual,
    mat_transpose,
)
from .uniform import classify

DEFAULT_MAX_ITER = 1000


class BisimKind(str, Enum):
    FORWARD_SIM = "forward_sim"
    BACKWARD_SIM = "backward_sim"
    FORWARD_BISIM = "forward_bisim"
    BACKWARD_BISIM = "backward_bisim"
    BACKWARD_FORWARD = "backward_forward"
    FORWARD_BACKWARD = "forward_backward"

    @classmethod
    def parse(cls, name: Union[str, "BisimKind"]) -> "BisimKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown kind {name!r}; expected one of {[k.value for k in cls]}") from None

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")

    @property
    def is_backward(self) -> bool:
        return self in (BisimKind.BACKWARD_SIM, BisimKind.BACKWARD_BISIM, BisimKind.FORWARD_BACKWARD)

    @property
    def mirror(self) -> "BisimKind":
        """The kind that this one becomes on reversed automata."""
        return _MIRROR[self]


_MIRROR = {
    BisimKind.FORWARD_SIM: BisimKind.BACKWARD_SIM,
    BisimKind.BACKWARD_SIM: BisimKind.FORWARD_SIM,
    BisimKind.FORWARD_BISIM: BisimKind.BACKWARD_BISIM,
    BisimKind.BACKWARD_BISIM: BisimKind.FORWARD_BISIM,
    BisimKind.BACKWARD_FORWARD: BisimKind.FORWARD_BACKWARD,
    BisimKind.FORWARD_BACKWARD: BisimKind.BACKWARD_FORWARD,
}


# -- checking ------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """First failing entry of a condition.

    ``coordinate`` is 0-based: ``(i, j)`` for matrices, ``(i,)`` for vectors;
    ``states`` gives the same position by state name.
    """

    part: str  # initial, transition or terminal
    letter: str | None
    condition: str
    coordinate: tuple[int, ...]
    states: tuple[str, ...]
    lhs: Value
    rhs: Value

    def describe(self) -> str:
        where = ", ".join(self.states)
        return f"{self.condition} fails at ({where}): {self.lhs} vs {self.rhs}"


@dataclass(frozen=True)
class CheckVerdict:
    kind: str
    holds: bool
    violation: Violation | None = None

    def __bool__(self):
        return self.holds


def _row(values) -> Matrix:
    return (tuple(values),)


def _col(values) -> Matrix:
    return tuple((v,) for v in values)


class _Ctx:
    """Raw matrices of a pair of automata and a relation, composed on demand."""

    def __init__(self, a: FuzzyAutomaton, b: FuzzyAutomaton, phi: FuzzyRelation):
        self.lat = a.lattice
        self.a, self.b = a, b
        self.p = phi.entries
        self.pt = mat_transpose(phi.entries, len(b.states))
        self.sa, self.sb = _row(a.sigma.values), _row(b.sigma.values)
        self.ta, self.tb = _col(a.tau.values), _col(b.tau.values)

    def c(self, *ms: Matrix) -> Matrix:
        out = ms[0]
        for m in ms[1:]:
            out = mat_compose(self.lat, out, m)
        return out


# Each group yields (part, letter, text, lhs, rhs, row labels, col labels);
# a missing label set marks a row or column vector.


def _fs(x: _Ctx):
    """phi is a forward simulation of A by B."""
    A, B = x.a, x.b
    yield "initial", None, "sigma^A <= sigma^B o phi^-1", x.sa, x.c(x.sb, x.pt), None, A.states
    for l in A.alphabet:
        yield ("transition", l, f"phi^-1 o delta_{l}^A <= delta_{l}^B o phi^-1",
               x.c(x.pt, A.delta[l].entries), x.c(B.delta[l].entries, x.pt), B.states, A.states)
    yield "terminal", None, "phi^-1 o tau^A <= tau^B", x.c(x.pt, x.ta), x.tb, B.states, None


def _fs_inv(x: _Ctx):
    """phi^-1 is a forward simulation of B by A."""
    A, B = x.a, x.b
    yield "initial", None, "sigma^B <= sigma^A o phi", x.sb, x.c(x.sa, x.p), None, B.states
    for l in A.alphabet:
        yield ("transition", l, f"phi o delta_{l}^B <= delta_{l}^A o phi",
               x.c(x.p, B.delta[l].entries), x.c(A.delta[l].entries, x.p), A.states, B.states)
    yield "terminal", None, "phi o tau^B <= tau^A", x.c(x.p, x.tb), x.ta, A.states, None


def _bs(x: _Ctx):
    """phi is a backward simulation of A by B."""
    A, B = x.a, x.b
    yield "initial", None, "sigma^A o phi <= sigma^B", x.c(x.sa, x.p), x.sb, None, B.states
    for l in A.alphabet:
        yield ("transition", l, f"delta_{l}^A o phi <= phi o delta_{l}^B",
               x.c(A.delta[l].entries, x.p), x.c(x.p, B.delta[l].entries), A.states, B.states)
    yield "terminal", None, "tau^A <= phi o tau^B", x.ta, x.c(x.p, x.tb), A.states, None


def _bs_inv(x: _Ctx):
    """phi^-1 is a backward simulation of B by A."""
    A, B = x.a, x.b
    yield "initial", None, "sigma^B o phi^-1 <= sigma^A", x.c(x.sb, x.pt), x.sa, None, A.states
    for l in A.alphabet:
        yield ("transition", l, f"delta_{l}^B o phi^-1 <= phi^-1 o delta_{l}^A",
               x.c(B.delta[l].entries, x.pt), x.c(x.pt, A.delta[l].entries), B.states, A.states)
    yield "terminal", None, "tau^B <= phi^-1 o tau^A", x.tb, x.c(x.pt, x.ta), B.states, None


_GROUPS = {
    BisimKind.FORWARD_SIM: (_fs,),
    BisimKind.FORWARD_BISIM: (_fs, _fs_inv),
    BisimKind.BACKWARD_SIM: (_bs,),
    BisimKind.BACKWARD_BISIM: (_bs, _bs_inv),
    BisimKind.BACKWARD_FORWARD: (_bs, _fs_inv),
    BisimKind.FORWARD_BACKWARD: (_fs, _bs_inv),
}


def _first_mismatch(lhs: Matrix, rhs: Matrix, op: str):
    for i, (r, s) in enumerate(zip(lhs, rhs)):
        for j, (u, v) in enumerate(zip(r, s)):
            if (u > v) if op == "<=" else (u != v):
                return i, j, u, v
    return None


def _evaluate(kind: str, conditions, op: str = "<=") -> CheckVerdict:
    for part, letter, text, lhs, rhs, rlab, clab in conditions:
        bad = _first_mismatch(lhs, rhs, op)
        if bad is None:
            continue
        i, j, u, v = bad
        if rlab is None:  # row vector
            coord, states = (j,), (clab[j],)
        elif clab is None:  # column vector
            coord, states = (i,), (rlab[i],)
        else:
            coord, states = (i, j), (rlab[i], clab[j])
        return CheckVerdict(kind, False, Violation(part, letter, text, coord, states, u, v))
    return CheckVerdict(kind, True)


def _pair(a: FuzzyAutomaton, b: FuzzyAutomaton):
    if a.lattice != b.lattice:
        raise LatticeMismatchError(f"automata over {a.lattice} and {b.lattice}")
    if set(a.alphabet) != set(b.alphabet):
        raise DimensionError(f"alphabets {list(a.alphabet)} and {list(b.alphabet)} differ")


def _relation_between(a: FuzzyAutomaton, b: FuzzyAutomaton, phi) -> FuzzyRelation:
    phi = as_relation(phi)
    if phi.lattice != a.lattice:
        raise LatticeMismatchError(f"relation over {phi.lattice}, automata over {a.lattice}")
    if phi.shape != (len(a.states), len(b.states)):
        raise DimensionError(f"relation has shape {phi.shape}, expected {len(a.states)}x{len(b.states)}")
    return phi.relabel(a.states, b.states)


def check_relation(a: FuzzyAutomaton, b: FuzzyAutomaton, phi, kind) -> CheckVerdict:
    """Evaluate every defining inequality of ``kind`` for ``phi: A x B``.

    Conditions are tried in a fixed order (for each of ``phi``,
    ``phi^-1`` in turn: initial, letters in alphabet order, terminal) and
    the first failing entry is reported.
    """
    kind = BisimKind.parse(kind)
    _pair(a, b)
    phi = _relation_between(a, b, phi)
    if phi.is_empty():
        raise EmptyRelationError("simulations and bisimulations must be non-empty relations")
    x = _Ctx(a, b, phi)
    return _evaluate(kind.value, (c for g in _GROUPS[kind] for c in g(x)))


def verify_uniform_fb_equalities(a: FuzzyAutomaton, b: FuzzyAutomaton, phi) -> CheckVerdict:
    """The six equalities characterising uniform forward bisimulations.

    For a uniform ``phi`` they hold iff ``phi`` is a forward bisimulation.
    """
    _pair(a, b)
    phi = _relation_between(a, b, phi)
    c = classify(phi)
    if not c.is_uniform:
        raise NotUniformError(f"relation is not uniform: {c.witness}")
    x = _Ctx(a, b, phi)
    A, B = a, b

    def conditions():
        yield "initial", None, "sigma^A o phi o phi^-1 = sigma^B o phi^-1", x.c(x.sa, x.p, x.pt), x.c(x.sb, x.pt), None, A.states
        yield "initial", None, "sigma^A o phi = sigma^B o phi^-1 o phi", x.c(x.sa, x.p), x.c(x.sb, x.pt, x.p), None, B.states
        for l in A.alphabet:
            da, db = A.delta[l].entries, B.delta[l].entries
            yield ("transition", l, f"delta_{l}^A o phi o phi^-1 = phi o delta_{l}^B o phi^-1",
                   x.c(da, x.p, x.pt), x.c(x.p, db, x.pt), A.states, A.states)
            yield ("transition", l, f"phi^-1 o delta_{l}^A o phi = delta_{l}^B o phi^-1 o phi",
                   x.c(x.pt, da, x.p), x.c(db, x.pt, x.p), B.states, B.states)
        yield "terminal", None, "tau^A = phi o tau^B", x.ta, x.c(x.p, x.tb), A.states, None
        yield "terminal", None, "phi^-1 o tau^A = tau^B", x.c(x.pt, x.ta), x.tb, B.states, None

    return _evaluate("uniform_fb_equalities", conditions(), "=")


# -- fixpoints -----------------------------------------------------------------


@dataclass(frozen=True)
class FixpointReport:
    """Outcome of a decreasing fixpoint computation.

    ``result`` is ``None`` when no relation of the requested kind exists or
    when the iteration cap was reached; ``failure_reason`` is then one of
    ``"sigma-check"``, ``"empty-result"`` or ``"iteration-cap"``.  After a
    cap, ``last_iterate`` keeps the unconverged relation for inspection.
    """

    result: FuzzyRelation | None
    iterations: int
    converged: bool
    failure_reason: str | None = None
    detail: str | None = None
    last_iterate: FuzzyRelation | None = None
    kind: str | None = None

    @property
    def exists(self) -> bool:
        return self.result is not None


def _iterate(lat: Lattice, start: Matrix, letters, bounds, max_iter: int, workers: int | None):
    """Run ``phi <- phi /\\ meet_x bounds(x, phi)`` to a fixpoint.

    Returns ``(phi, iterations, converged)``.  Per-letter bounds may be
    computed on a thread pool; they are met in alphabet order either way.
    """
    if max_iter < 1:
        raise ValueError("the iteration cap must be at least 1")
    if workers is not None and workers < 1:
        raise ValueError("workers must be a positive integer")
    pool = ThreadPoolExecutor(max_workers=workers) if workers and workers > 1 and len(letters) > 1 else None
    phi = start
    try:
        for it in range(1, max_iter + 1):
            if pool is None:
                per_letter = [bounds(l, phi) for l in letters]
            else:
                per_letter = list(pool.map(lambda l: bounds(l, phi), letters))
            new = phi
            for bs in per_letter:
                for m in bs:
                    new = mat_meet(new, m)
            if new == phi:
                return phi, it, True
            phi = new
        return phi, max_iter, False
    finally:
        if pool is not None:
            pool.shutdown()


def _forward_type(a: FuzzyAutomaton, b: FuzzyAutomaton, kind: BisimKind, max_iter: int, workers: int | None):
    """Greatest relation of a forward-type kind (forward sim / bisim, backward-forward)."""
    lat = a.lattice
    r = lat.residuum
    nb = len(b.states)
    sa, sb, ta, tb = a.sigma.values, b.sigma.values, a.tau.values, b.tau.values
    if kind is BisimKind.FORWARD_SIM:
        start = tuple(tuple(r(x, y) for y in tb) for x in ta)
    elif kind is BisimKind.FORWARD_BISIM:
        start = tuple(tuple(lat.biresiduum(x, y) for y in tb) for x in ta)
    else:
        start = tuple(tuple(min(r(s, t), r(v, u)) for t, v in zip(sb, tb)) for s, u in zip(sa, ta))

    da = {l: a.delta[l].entries for l in a.alphabet}
    db = {l: b.delta[l].entries for l in a.alphabet}
    na = len(a.states)
    if kind is BisimKind.BACKWARD_FORWARD:
        pa, pb = da, db
    else:
        pa = {l: mat_transpose(m, na) for l, m in da.items()}
        pb = {l: mat_transpose(m, nb) for l, m in db.items()}
    both = kind is not BisimKind.FORWARD_SIM

    def bounds(l, phi):
        # pa o phi <= phi o pb
        out = [mat_left_residual(lat, pa[l], mat_compose(lat, phi, pb[l]), na, nb)]
        if both:
            # phi o db <= da o phi
            out.append(mat_right_residual(lat, mat_compose(lat, da[l], phi), db[l]))
        return out

    phi, its, ok = _iterate(lat, start, a.alphabet, bounds, max_iter, workers)
    rel = FuzzyRelation(lat, a.states, b.states, phi)
    if not ok:
        return FixpointReport(None, its, False, "iteration-cap",
                              f"no fixpoint after {its} iterations", rel, kind.value)

    x = _Ctx(a, b, rel)
    isotone = [("sigma^A <= sigma^B o phi^-1", x.sa, x.c(x.sb, x.pt))] if kind is not BisimKind.BACKWARD_FORWARD else []
    if both:
        isotone.append(("sigma^B <= sigma^A o phi", x.sb, x.c(x.sa, x.p)))
    if kind is BisimKind.BACKWARD_FORWARD:
        isotone.append(("tau^A <= phi o tau^B", x.ta, x.c(x.p, x.tb)))
    for text, lhs, rhs in isotone:
        if _first_mismatch(lhs, rhs, "<=") is not None:
            return FixpointReport(None, its, True, "sigma-check", text, None, kind.value)
    if rel.is_empty():
        return FixpointReport(None, its, True, "empty-result", "the greatest solution is empty", None, kind.value)
    return FixpointReport(rel, its, True, None, None, None, kind.value)


def greatest(a: FuzzyAutomaton, b: FuzzyAutomaton, kind, *, max_iter: int = DEFAULT_MAX_ITER,
             workers: int | None = None) -> FixpointReport:
    """Greatest relation ``A x B`` of the given kind, re-verified before returning."""
    kind = BisimKind.parse(kind)
    _pair(a, b)
    if kind.is_backward:
        rep = _forward_type(reverse(a), reverse(b), kind.mirror, max_iter, workers)
        rep = FixpointReport(rep.result, rep.iterations, rep.converged, rep.failure_reason,
                             _mirror_text(rep.detail), rep.last_iterate, kind.value)
    else:
        rep = _forward_type(a, b, kind, max_iter, workers)
    if rep.result is not None:
        v = check_relation(a, b, rep.result, kind)
        if not v.holds:  # pragma: no cover - would mean the solver is wrong
            raise AssertionError(f"solver produced a relation failing {v.violation.describe()}")
    return rep


def _mirror_text(text: str | None) -> str | None:
    """Translate a condition read on reversed automata back to the originals."""
    if text is None or "phi" not in text:
        return text
    return {
        "sigma^A <= sigma^B o phi^-1": "tau^A <= phi o tau^B",
        "sigma^B <= sigma^A o phi": "tau^B <= phi^-1 o tau^A",
        "tau^A <= phi o tau^B": "sigma^A <= sigma^B o phi^-1",
    }.get(text, text)


_SIM_KINDS = {"forward": BisimKind.FORWARD_SIM, "backward": BisimKind.BACKWARD_SIM}
_BISIM_KINDS = {
    "forward": BisimKind.FORWARD_BISIM,
    "backward": BisimKind.BACKWARD_BISIM,
    "backward_forward": BisimKind.BACKWARD_FORWARD,
    "forward_backward": BisimKind.FORWARD_BACKWARD,
}


def _short(kind, table: dict) -> BisimKind:
    if isinstance(kind, BisimKind):
        if kind not in table.values():
            raise ValueError(f"{kind.value} is not allowed here")
        return kind
    key = str(kind).strip().lower().replace("-", "_")
    if key in table:
        return table[key]
    k = BisimKind.parse(key)
    if k not in table.values():
        raise ValueError(f"{k.value} is not allowed here")
    return k


def greatest_simulation(a, b, kind="forward", **opts) -> FixpointReport:
    """Greatest forward or backward simulation of ``a`` by ``b``."""
    return greatest(a, b, _short(kind, _SIM_KINDS), **opts)


def greatest_bisimulation(a, b, kind="forward", **opts) -> FixpointReport:
    """Greatest bisimulation between ``a`` and ``b`` of a homotypic or heterotypic kind."""
    return greatest(a, b, _short(kind, _BISIM_KINDS), **opts)


# -- equivalences on one automaton -----------------------------------------------


def bisim_equivalence_fixpoint(a: FuzzyAutomaton, kind="forward", *, max_iter: int = DEFAULT_MAX_ITER,
                               workers: int | None = None) -> FixpointReport:
    """Greatest forward (or backward) bisimulation fuzzy equivalence, as a report.

    Starts from ``tau(a) <-> tau(b)`` and repeats
    ``E <- E /\\ W /\\ W^-1`` with ``W = meet_x right_residual(delta_x o E, delta_x)``.
    Every iterate is a fuzzy equivalence.
    """
    side = str(kind.value if isinstance(kind, BisimKind) else kind).lower().replace("-", "_")
    if side in ("forward", "forward_bisim"):
        m, bkind = a, BisimKind.FORWARD_BISIM
    elif side in ("backward", "backward_bisim"):
        m, bkind = reverse(a), BisimKind.BACKWARD_BISIM
    else:
        raise ValueError(f"kind must be forward or backward, got {kind!r}")
    lat = m.lattice
    tau = m.tau.values
    start = tuple(tuple(lat.biresiduum(x, y) for y in tau) for x in tau)
    d = {l: m.delta[l].entries for l in m.alphabet}
    n = len(m.states)

    def bounds(l, e):
        w = mat_right_residual(lat, mat_compose(lat, d[l], e), d[l])
        return [w, mat_transpose(w, n)]

    e, its, ok = _iterate(lat, start, m.alphabet, bounds, max_iter, workers)
    rel = FuzzyRelation(lat, a.states, a.states, e)
    if not ok:
        return FixpointReport(None, its, False, "iteration-cap", f"no fixpoint after {its} iterations", rel, bkind.value)
    if not classify_equivalence(rel).is_equivalence:  # pragma: no cover
        raise AssertionError("fixpoint iterate is not a fuzzy equivalence")
    v = check_relation(a, a, rel, bkind)
    if not v.holds:  # pragma: no cover
        raise AssertionError(f"equivalence fails {v.violation.describe()}")
    return FixpointReport(rel, its, True, None, None, None, bkind.value)


def greatest_bisim_equivalence(a: FuzzyAutomaton, kind="forward", **opts) -> FuzzyEquivalence:
    """Greatest forward or backward bisimulation fuzzy equivalence on ``a``.

    Raises :class:`UnconvergedError` when the iteration cap is reached.
    """
    rep = bisim_equivalence_fixpoint(a, kind, **opts)
    if not rep.converged:
        raise UnconvergedError(rep.detail, rep)
    return FuzzyEquivalence(rep.result)


def greatest_strongly_invariant(a: FuzzyAutomaton, side: str = "right") -> FuzzyEquivalence:
    """Greatest ``E`` with ``E o delta_x <= delta_x`` for all ``x`` and ``E o tau <= tau``.

    ``side="left"`` gives the mirror notion (``delta_x o E <= delta_x``,
    ``sigma o E <= sigma``).  No iteration is needed: the bound is a fuzzy
    quasi-order ``W`` and the answer is ``W /\\ W^-1``.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    m = a if side == "right" else reverse(a)
    lat = m.lattice
    r = lat.residuum
    tau = m.tau.values
    w = tuple(tuple(r(y, x) for y in tau) for x in tau)
    for l in m.alphabet:
        d = m.delta[l].entries
        w = mat_meet(w, mat_right_residual(lat, d, d))
    e = mat_meet(w, mat_transpose(w, len(tau)))
    return FuzzyEquivalence(FuzzyRelation(lat, a.states, a.states, e))


@dataclass(frozen=True)
class QuasiOrderReport:
    reflexive: bool
    transitive: bool

    @property
    def is_quasi_order(self) -> bool:
        return self.reflexive and self.transitive


def quasi_order_report(rel: FuzzyRelation) -> QuasiOrderReport:
    """Reflexivity and transitivity of a square relation (used on greatest simulations ``A -> A``)."""
    n, m = rel.shape
    if n != m:
        raise DimensionError("quasi-orders are square relations")
    e = rel.entries
    one = rel.lattice.one
    refl = all(e[i][i] == one for i in range(n))
    trans = all(x <= y for r, s in zip(mat_compose(rel.lattice, e, e), e) for x, y in zip(r, s))
    return QuasiOrderReport(refl, trans)

"""Fuzzy sets and fuzzy relations as exact matrices.

A :class:`FuzzyRelation` between ``rows`` and ``cols`` is a rectangular
matrix of payloads of one :class:`~fuzzybisim.lattice.Lattice`; a
:class:`FuzzySet` is a vector.  Composition is the sup-(*) product, written
``phi @ psi``.  Residuals give the greatest solutions of ``U @ V <= W`` and
``V @ U <= W``; the bisimulation solvers are built on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import DimensionError, InvalidEquivalenceError, LatticeMismatchError
from .lattice import Lattice, Value

Matrix = tuple[tuple[Value, ...], ...]


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def _same_lattice(a: Lattice, b: Lattice) -> Lattice:
    if a != b:
        raise LatticeMismatchError(f"cannot combine {a} and {b} operands")
    return a


def _same_domain(left: Sequence[str], right: Sequence[str], what: str):
    if tuple(left) != tuple(right):
        raise DimensionError(f"{what}: index sets {list(left)} and {list(right)} differ")


# -- raw matrix kernels -------------------------------------------------------
# All five lattices are linearly ordered, so finite joins and meets are max/min.


def mat_compose(lat: Lattice, p: Matrix, q: Matrix) -> Matrix:
    t = lat.tensor
    zero = lat.zero
    cols = tuple(zip(*q))
    return tuple(tuple(max(map(t, row, col), default=zero) for col in cols) for row in p)


def mat_transpose(p: Matrix, ncols: int) -> Matrix:
    if not p:
        return ((),) * ncols
    return tuple(zip(*p))


def mat_meet(p: Matrix, q: Matrix) -> Matrix:
    return tuple(tuple(map(min, r, s)) for r, s in zip(p, q))


def mat_join(p: Matrix, q: Matrix) -> Matrix:
    return tuple(tuple(map(max, r, s)) for r, s in zip(p, q))


def mat_leq(p: Matrix, q: Matrix) -> bool:
    return all(x <= y for r, s in zip(p, q) for x, y in zip(r, s))


def mat_right_residual(lat: Lattice, w: Matrix, v: Matrix) -> Matrix:
    """``U(a, b) = meet_c V(b, c) -> W(a, c)`` for ``W: A x C``, ``V: B x C``."""
    r = lat.residuum
    one = lat.one
    return tuple(tuple(min(map(r, vrow, wrow), default=one) for vrow in v) for wrow in w)


def mat_left_residual(lat: Lattice, v: Matrix, w: Matrix, nb: int, nc: int) -> Matrix:
    """``U(b, c) = meet_a V(a, b) -> W(a, c)`` for ``V: A x B``, ``W: A x C``."""
    r = lat.residuum
    one = lat.one
    vt = mat_transpose(v, nb)
    wt = mat_transpose(w, nc)
    return tuple(tuple(min(map(r, vcol, wcol), default=one) for wcol in wt) for vcol in vt)


# -- value types --------------------------------------------------------------


@dataclass(frozen=True)
class FuzzySet:
    """A fuzzy subset of ``domain``; ``values[i]`` is the degree of ``domain[i]``."""

    lattice: Lattice
    domain: tuple[str, ...]
    values: tuple[Value, ...]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != len(self.domain):
            raise DimensionError(f"{len(self.values)} values for a domain of {len(self.domain)} states")
        for v in self.values:
            self.lattice.check(v)

    @classmethod
    def of(cls, lattice: Lattice, values: Iterable, domain: Sequence[str] | None = None) -> "FuzzySet":
        vals = tuple(lattice.coerce(v) for v in values)
        return cls(lattice, domain if domain is not None else default_labels(len(vals)), vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, state: str) -> Value:
        return self.values[self.domain.index(state)]

    def __matmul__(self, other):
        return compose(self, other)

    def relabel(self, domain: Sequence[str]) -> "FuzzySet":
        return FuzzySet(self.lattice, tuple(domain), self.values)

    def _check(self, other: "FuzzySet"):
        _same_lattice(self.lattice, other.lattice)
        _same_domain(self.domain, other.domain, "fuzzy set comparison")

    def __le__(self, other: "FuzzySet") -> bool:
        self._check(other)
        return all(x <= y for x, y in zip(self.values, other.values))

    def __ge__(self, other: "FuzzySet") -> bool:
        return other <= self

    def __and__(self, other: "FuzzySet") -> "FuzzySet":
        self._check(other)
        return FuzzySet(self.lattice, self.domain, tuple(map(min, self.values, other.values)))

    def __or__(self, other: "FuzzySet") -> "FuzzySet":
        self._check(other)
        return FuzzySet(self.lattice, self.domain, tuple(map(max, self.values, other.values)))

    def is_crisp(self) -> bool:
        return all(v == self.lattice.zero or v == self.lattice.one for v in self.values)


@dataclass(frozen=True)
class FuzzyRelation:
    """A fuzzy relation between ``rows`` and ``cols`` (in this order)."""

    lattice: Lattice
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        entries = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != len(self.rows):
            raise DimensionError(f"{len(entries)} matrix rows for {len(self.rows)} row states")
        for i, r in enumerate(entries):
            if len(r) != len(self.cols):
                raise DimensionError(f"row {i} has {len(r)} entries, expected {len(self.cols)}")
            for v in r:
                self.lattice.check(v)

    @classmethod
    def of(
        cls,
        lattice: Lattice,
        matrix: Iterable[Iterable],
        rows: Sequence[str] | None = None,
        cols: Sequence[str] | None = None,
    ) -> "FuzzyRelation":
        """Build from raw values (strings, floats, fractions, ints) with validation."""
        entries = tuple(tuple(lattice.coerce(v) for v in r) for r in matrix)
        ncols = len(entries[0]) if entries else (len(cols) if cols is not None else 0)
        return cls(
            lattice,
            rows if rows is not None else default_labels(len(entries)),
            cols if cols is not None else default_labels(ncols),
            entries,
        )

    @classmethod
    def identity(cls, lattice: Lattice, states: Sequence[str]) -> "FuzzyRelation":
        n = len(states)
        z, o = lattice.zero, lattice.one
        return cls(lattice, states, states, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def constant(cls, lattice: Lattice, rows: Sequence[str], cols: Sequence[str], value: Value) -> "FuzzyRelation":
        return cls(lattice, rows, cols, tuple(tuple(value for _ in cols) for _ in rows))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def __getitem__(self, key: tuple[str, str]) -> Value:
        a, b = key
        return self.entries[self.rows.index(a)][self.cols.index(b)]

    def row(self, i: int) -> FuzzySet:
        return FuzzySet(self.lattice, self.cols, self.entries[i])

    def relabel(self, rows: Sequence[str], cols: Sequence[str]) -> "FuzzyRelation":
        if (len(rows), len(cols)) != self.shape:
            raise DimensionError(f"cannot relabel a {self.shape} relation as {len(rows)}x{len(cols)}")
        return FuzzyRelation(self.lattice, rows, cols, self.entries)

    def with_entries(self, entries: Matrix) -> "FuzzyRelation":
        return FuzzyRelation(self.lattice, self.rows, self.cols, entries)

    def is_empty(self) -> bool:
        z = self.lattice.zero
        return all(v == z for r in self.entries for v in r)

    def is_crisp(self) -> bool:
        z, o = self.lattice.zero, self.lattice.one
        return all(v == z or v == o for r in self.entries for v in r)

    @property
    def T(self) -> "FuzzyRelation":
        return inverse(self)

    def inverse(self) -> "FuzzyRelation":
        return inverse(self)

    def __matmul__(self, other):
        return compose(self, other)

    def __rmatmul__(self, other):
        return compose(other, self)

    def _check(self, other: "FuzzyRelation"):
        if not isinstance(other, FuzzyRelation):
            raise TypeError(f"expected a FuzzyRelation, got {type(other).__name__}")
        _same_lattice(self.lattice, other.lattice)
        _same_domain(self.rows, other.rows, "row states")
        _same_domain(self.cols, other.cols, "column states")

    def __le__(self, other: "FuzzyRelation") -> bool:
        self._check(other)
        return mat_leq(self.entries, other.entries)

    def __ge__(self, other: "FuzzyRelation") -> bool:
        return other <= self

    def __and__(self, other: "FuzzyRelation") -> "FuzzyRelation":
        self._check(other)
        return self.with_entries(mat_meet(self.entries, other.entries))

    def __or__(self, other: "FuzzyRelation") -> "FuzzyRelation":
        self._check(other)
        return self.with_entries(mat_join(self.entries, other.entries))

    def pretty(self) -> str:
        return "\n".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.entries)


# -- composition ----------------------------------------------------------------


def compose(left: Union[FuzzySet, FuzzyRelation], right: Union[FuzzySet, FuzzyRelation]):
    """Sup-(*) composition of sets and relations.

    * relation (A x B) with relation (B x C) gives a relation A x C;
    * set on A with relation A x B gives a set on B;
    * relation A x B with set on B gives a set on A;
    * set with set gives their degree of overlapping, a single value.
    """
    lat = _same_lattice(left.lattice, right.lattice)
    t = lat.tensor
    zero = lat.zero
    if isinstance(left, FuzzyRelation) and isinstance(right, FuzzyRelation):
        _same_domain(left.cols, right.rows, "composition")
        return FuzzyRelation(lat, left.rows, right.cols, mat_compose(lat, left.entries, right.entries))
    if isinstance(left, FuzzySet) and isinstance(right, FuzzyRelation):
        _same_domain(left.domain, right.rows, "set-relation composition")
        cols = mat_transpose(right.entries, len(right.cols))
        return FuzzySet(lat, right.cols, tuple(max(map(t, left.values, c), default=zero) for c in cols))
    if isinstance(left, FuzzyRelation) and isinstance(right, FuzzySet):
        _same_domain(left.cols, right.domain, "relation-set composition")
        return FuzzySet(lat, left.rows, tuple(max(map(t, r, right.values), default=zero) for r in left.entries))
    if isinstance(left, FuzzySet) and isinstance(right, FuzzySet):
        _same_domain(left.domain, right.domain, "set-set composition")
        return max(map(t, left.values, right.values), default=zero)
    raise TypeError(f"cannot compose {type(left).__name__} with {type(right).__name__}")


def compose_all(*items):
    """Left-to-right composition of a chain of sets/relations."""
    acc = items[0]
    for it in items[1:]:
        acc = compose(acc, it)
    return acc


def inverse(rel: FuzzyRelation) -> FuzzyRelation:
    return FuzzyRelation(rel.lattice, rel.cols, rel.rows, mat_transpose(rel.entries, len(rel.cols)))


def right_residual(w: FuzzyRelation, v: FuzzyRelation) -> FuzzyRelation:
    """Greatest ``U`` (A x B) with ``U @ V <= W`` for ``W: A x C``, ``V: B x C``."""
    lat = _same_lattice(w.lattice, v.lattice)
    _same_domain(w.cols, v.cols, "right residual")
    return FuzzyRelation(lat, w.rows, v.rows, mat_right_residual(lat, w.entries, v.entries))


def left_residual(v: FuzzyRelation, w: FuzzyRelation) -> FuzzyRelation:
    """Greatest ``U`` (B x C) with ``V @ U <= W`` for ``V: A x B``, ``W: A x C``."""
    lat = _same_lattice(v.lattice, w.lattice)
    _same_domain(v.rows, w.rows, "left residual")
    return FuzzyRelation(
        lat, v.cols, w.cols, mat_left_residual(lat, v.entries, w.entries, len(v.cols), len(w.cols))
    )


def meet_all(rels: Iterable[FuzzyRelation]) -> FuzzyRelation:
    it = iter(rels)
    acc = next(it)
    for r in it:
        acc = acc & r
    return acc


def join_all(rels: Iterable[FuzzyRelation]) -> FuzzyRelation:
    it = iter(rels)
    acc = next(it)
    for r in it:
        acc = acc | r
    return acc


def crisp_part(x: Union[FuzzySet, FuzzyRelation]):
    """1 where the value is 1, else 0; the lattice is kept."""
    lat = x.lattice
    one, zero = lat.one, lat.zero
    if isinstance(x, FuzzySet):
        return FuzzySet(lat, x.domain, tuple(one if v == one else zero for v in x.values))
    return x.with_entries(tuple(tuple(one if v == one else zero for v in r) for r in x.entries))


# -- equivalences ---------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of checking reflexivity, symmetry and transitivity.

    ``violations`` maps each failed condition to its first offending index
    tuple: ``(a,)`` for reflexivity, ``(a, b)`` for symmetry and
    ``(a, b, c)`` for transitivity.
    """

    reflexive: bool
    symmetric: bool
    transitive: bool
    violations: dict = field(default_factory=dict)

    @property
    def is_equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive

    @property
    def first_violation(self):
        for cond in ("reflexive", "symmetric", "transitive"):
            if cond in self.violations:
                return cond, self.violations[cond]
        return None


def classify_equivalence(rel: FuzzyRelation) -> EquivalenceReport:
    n, m = rel.shape
    if n != m or rel.rows != rel.cols:
        raise DimensionError("equivalence checks need a relation on a single set")
    e = rel.entries
    lat = rel.lattice
    one = lat.one
    t = lat.tensor
    violations = {}
    for a in range(n):
        if e[a][a] != one:
            violations["reflexive"] = (a,)
            break
    sym = next(((a, b) for a in range(n) for b in range(a + 1, n) if e[a][b] != e[b][a]), None)
    if sym is not None:
        violations["symmetric"] = sym
    tr = next(
        ((a, b, c) for a in range(n) for b in range(n) for c in range(n) if t(e[a][b], e[b][c]) > e[a][c]),
        None,
    )
    if tr is not None:
        violations["transitive"] = tr
    return EquivalenceReport(
        "reflexive" not in violations, "symmetric" not in violations, "transitive" not in violations, violations
    )


@dataclass(frozen=True)
class FactorSet:
    """Equivalence classes ``E_a`` of a fuzzy equivalence.

    Each class is represented by its least state index; ``class_of[i]``
    is the class number of state ``i``.
    """

    classes: tuple[FuzzySet, ...]
    representatives: tuple[int, ...]
    class_of: tuple[int, ...]
    labels: tuple[str, ...]

    @property
    def index(self) -> int:
        return len(self.classes)

    def class_of_state(self, state: str) -> int:
        return self.class_of[self.classes[0].domain.index(state)]


class FuzzyEquivalence:
    """A relation validated as reflexive, symmetric and transitive."""

    __slots__ = ("relation", "report", "_factor")

    def __init__(self, relation: FuzzyRelation):
        report = classify_equivalence(relation)
        if not report.is_equivalence:
            cond, where = report.first_violation
            raise InvalidEquivalenceError(f"relation is not {cond} at {where}")
        self.relation = relation
        self.report = report
        self._factor = None

    @classmethod
    def of(cls, lattice: Lattice, matrix, states: Sequence[str] | None = None) -> "FuzzyEquivalence":
        return cls(FuzzyRelation.of(lattice, matrix, states, states))

    @property
    def lattice(self) -> Lattice:
        return self.relation.lattice

    @property
    def states(self) -> tuple[str, ...]:
        return self.relation.rows

    @property
    def entries(self) -> Matrix:
        return self.relation.entries

    @property
    def factor(self) -> FactorSet:
        if self._factor is None:
            self._factor = factor_set(self)
        return self._factor

    @property
    def index(self) -> int:
        return self.factor.index

    def __eq__(self, other):
        if isinstance(other, FuzzyEquivalence):
            return self.relation == other.relation
        if isinstance(other, FuzzyRelation):
            return self.relation == other
        return NotImplemented

    def __hash__(self):
        return hash(self.relation)

    def __le__(self, other: "FuzzyEquivalence") -> bool:
        return self.relation <= _rel(other)

    def __and__(self, other: "FuzzyEquivalence") -> "FuzzyEquivalence":
        # the meet of equivalences is their intersection
        return FuzzyEquivalence(self.relation & _rel(other))

    def __matmul__(self, other):
        return compose(self.relation, _rel(other))

    def __rmatmul__(self, other):
        return compose(_rel(other), self.relation)

    def __repr__(self):
        return f"FuzzyEquivalence({self.relation.pretty()!r})"


def _rel(x) -> FuzzyRelation:
    return x.relation if isinstance(x, FuzzyEquivalence) else x


def as_relation(x) -> FuzzyRelation:
    return _rel(x)


def factor_set(e: Union[FuzzyEquivalence, FuzzyRelation]) -> FactorSet:
    if not isinstance(e, FuzzyEquivalence):
        e = FuzzyEquivalence(e)
    rel = e.relation
    one = rel.lattice.one
    n = len(rel.rows)
    class_of = [-1] * n
    reps = []
    for a in range(n):
        if class_of[a] >= 0:
            continue
        k = len(reps)
        reps.append(a)
        for b in range(a, n):
            if rel.entries[a][b] == one:
                class_of[b] = k
    classes = tuple(rel.row(r) for r in reps)
    labels = tuple(f"[{rel.rows[r]}]" for r in reps)
    return FactorSet(classes, tuple(reps), tuple(class_of), labels)


def tilde(e: FuzzyEquivalence) -> FuzzyRelation:
    """The fuzzy equality induced by ``e`` on its factor set."""
    fs = e.factor
    reps = fs.representatives
    ent = e.entries
    return FuzzyRelation(e.lattice, fs.labels, fs.labels, tuple(tuple(ent[i][j] for j in reps) for i in reps))

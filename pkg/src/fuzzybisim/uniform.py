"""Uniform fuzzy relations: kernels, crisp descriptions and induced bijections."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod

from .errors import DimensionError, EnumerationLimitError, NotLFunctionError, NotUniformError
from .relations import (
    FuzzyEquivalence,
    FuzzyRelation,
    as_relation,
    mat_compose,
    mat_transpose,
)

DEFAULT_CR_CAP = 10_000


def _kernel_entries(lat, m):
    br = lat.biresiduum
    one = lat.one
    return tuple(tuple(min(map(br, r1, r2), default=one) for r2 in m) for r1 in m)


def induced_equivalences(phi: FuzzyRelation) -> tuple[FuzzyEquivalence, FuzzyEquivalence]:
    """Kernel on the row states and co-kernel on the column states.

    ``kernel(a1, a2) = meet_b phi(a1, b) <-> phi(a2, b)`` and dually for
    the co-kernel.
    """
    lat = phi.lattice
    k = _kernel_entries(lat, phi.entries)
    c = _kernel_entries(lat, mat_transpose(phi.entries, len(phi.cols)))
    return (
        FuzzyEquivalence(FuzzyRelation(lat, phi.rows, phi.rows, k)),
        FuzzyEquivalence(FuzzyRelation(lat, phi.cols, phi.cols, c)),
    )


def kernel(phi: FuzzyRelation) -> FuzzyEquivalence:
    return induced_equivalences(phi)[0]


def cokernel(phi: FuzzyRelation) -> FuzzyEquivalence:
    return induced_equivalences(phi)[1]


@dataclass(frozen=True)
class UniformClassification:
    is_l_function: bool
    is_surjective: bool
    is_partial_fuzzy_function: bool
    witness: dict = field(default_factory=dict)

    @property
    def is_uniform(self) -> bool:
        return self.is_l_function and self.is_surjective and self.is_partial_fuzzy_function


def classify(phi: FuzzyRelation) -> UniformClassification:
    """Decide the L-function, surjectivity, partial-fuzzy-function and uniformity properties.

    A partial fuzzy function is recognised by ``phi @ phi.T @ phi <= phi``.
    ``witness`` holds the first row (resp. column, resp. entry) breaking
    each failed property.
    """
    n, m = phi.shape
    if n == 0 or m == 0:
        raise DimensionError("classification needs a relation between non-empty sets")
    lat = phi.lattice
    one = lat.one
    e = phi.entries
    witness = {}
    bad_row = next((a for a in range(n) if one not in e[a]), None)
    if bad_row is not None:
        witness["l_function"] = (bad_row,)
    bad_col = next((b for b in range(m) if all(e[a][b] != one for a in range(n))), None)
    if bad_col is not None:
        witness["surjective"] = (bad_col,)
    triple = mat_compose(lat, mat_compose(lat, e, mat_transpose(e, m)), e)
    bad = next(((a, b) for a in range(n) for b in range(m) if triple[a][b] > e[a][b]), None)
    if bad is not None:
        witness["partial_fuzzy_function"] = bad
    return UniformClassification(bad_row is None, bad_col is None, bad is None, witness)


def is_uniform(phi: FuzzyRelation) -> bool:
    return classify(phi).is_uniform


def crisp_descriptions(phi: FuzzyRelation, cap: int = DEFAULT_CR_CAP) -> list[tuple[int, ...]]:
    """All functions ``psi`` (as tuples of column indices) with ``phi(a, psi(a)) = 1``.

    Listed in lexicographic order.  Raises :class:`EnumerationLimitError`
    when there would be more than ``cap`` of them.
    """
    one = phi.lattice.one
    choices = []
    for a, r in enumerate(phi.entries):
        c = [b for b, v in enumerate(r) if v == one]
        if not c:
            raise NotLFunctionError(f"row {phi.rows[a]!r} has no entry equal to 1")
        choices.append(c)
    total = prod(len(c) for c in choices)
    if total > cap:
        raise EnumerationLimitError(f"{total} crisp descriptions exceed the cap of {cap}")
    return list(product(*choices))


def canonical_description(phi: FuzzyRelation) -> tuple[int, ...]:
    """The lexicographically least crisp description."""
    one = phi.lattice.one
    out = []
    for a, r in enumerate(phi.entries):
        try:
            out.append(r.index(one))
        except ValueError:
            raise NotLFunctionError(f"row {phi.rows[a]!r} has no entry equal to 1") from None
    return tuple(out)


def _require_uniform(phi: FuzzyRelation):
    c = classify(phi)
    if not c.is_uniform:
        raise NotUniformError(f"relation is not uniform: {c.witness}")


def induced_bijection(phi: FuzzyRelation) -> dict[int, int]:
    """Map class ``i`` of the kernel to class ``j`` of the co-kernel.

    Class numbers follow :func:`~fuzzybisim.relations.factor_set`.  The
    result does not depend on the crisp description used.
    """
    _require_uniform(phi)
    ker, coker = induced_equivalences(phi)
    psi = canonical_description(phi)
    fa, fb = ker.factor, coker.factor
    return {k: fb.class_of[psi[rep]] for k, rep in enumerate(fa.representatives)}


def uniform_from_isomorphism(e: FuzzyEquivalence, f: FuzzyEquivalence, iso: dict[int, int]) -> FuzzyRelation:
    """Build ``phi(a, b) = F(psi(a), b)`` where ``psi(a)`` represents ``iso(E_a)``.

    ``iso`` maps class numbers of ``e`` to class numbers of ``f`` and must be
    a bijection.  When ``iso`` preserves the induced fuzzy equalities the
    result is uniform with kernel ``e`` and co-kernel ``f``.
    """
    e, f = _equiv(e), _equiv(f)
    fa, fb = e.factor, f.factor
    if sorted(iso) != list(range(fa.index)) or sorted(iso.values()) != list(range(fb.index)):
        raise ValueError("iso must be a bijection between the two factor sets")
    fent = f.entries
    rows = []
    for a in range(len(e.states)):
        b0 = fb.representatives[iso[fa.class_of[a]]]
        rows.append(fent[b0])
    return FuzzyRelation(e.lattice, e.states, f.states, tuple(rows))


def _equiv(x) -> FuzzyEquivalence:
    return x if isinstance(x, FuzzyEquivalence) else FuzzyEquivalence(as_relation(x))

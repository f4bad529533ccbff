"""Complete residuated lattices of truth values.

Five concrete structures are provided: the Boolean algebra, the Gödel,
Łukasiewicz and product (Goguen) structures on the rational unit interval,
and finite Łukasiewicz chains ``{a_0, ..., a_n}``.

Values are kept as plain payloads so that matrix code stays cheap: unit
interval structures use :class:`fractions.Fraction`, chains use the integer
index ``k`` of ``a_k``.  :class:`TruthValue` wraps a payload together with
its lattice for callers that want operator syntax and mismatch checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Union

from .errors import CarrierError, LatticeMismatchError

Value = Union[Fraction, int]

BOOLEAN_KIND = "boolean"
GODEL_KIND = "godel"
LUKASIEWICZ_KIND = "lukasiewicz"
PRODUCT_KIND = "product"
CHAIN_KIND = "chain"

KINDS = (BOOLEAN_KIND, GODEL_KIND, LUKASIEWICZ_KIND, PRODUCT_KIND, CHAIN_KIND)

_ONE = Fraction(1)
_ZERO = Fraction(0)


@dataclass(frozen=True)
class Lattice:
    """Descriptor of a complete residuated lattice.

    ``size`` is the number of elements of a chain (``n + 1`` for the chain
    ``a_0 < ... < a_n``) and must be omitted for every other kind.
    Equality is structural.
    """

    kind: str
    size: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if self.kind == CHAIN_KIND:
            if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 2:
                raise ValueError("a chain needs an integer size >= 2")
        elif self.size is not None:
            raise ValueError(f"size is only meaningful for chains, not {self.kind}")

    # -- carrier -----------------------------------------------------------

    @property
    def is_chain(self) -> bool:
        return self.kind == CHAIN_KIND

    @property
    def top_index(self) -> int:
        """``n`` for the chain ``a_0 < ... < a_n``."""
        return self.size - 1

    @property
    def zero(self) -> Value:
        return 0 if self.is_chain else _ZERO

    @property
    def one(self) -> Value:
        return self.top_index if self.is_chain else _ONE

    @property
    def is_finite(self) -> bool:
        return self.kind in (BOOLEAN_KIND, CHAIN_KIND)

    @property
    def is_locally_finite(self) -> bool:
        # Finitely generated subalgebras of the product structure can be
        # infinite (powers of 1/2), so decreasing fixpoints may not stop.
        return self.kind != PRODUCT_KIND

    def elements(self) -> tuple[Value, ...]:
        """All carrier elements in increasing order (finite carriers only)."""
        if self.is_chain:
            return tuple(range(self.size))
        if self.kind == BOOLEAN_KIND:
            return (_ZERO, _ONE)
        raise ValueError(f"the {self.kind} structure has an infinite carrier")

    def contains(self, v) -> bool:
        if self.is_chain:
            return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < self.size
        if not isinstance(v, Fraction):
            return False
        if self.kind == BOOLEAN_KIND:
            return v == 0 or v == 1
        return 0 <= v <= 1

    def check(self, v) -> Value:
        if not self.contains(v):
            raise CarrierError(f"{v!r} is not an element of {self}")
        return v

    # -- operations --------------------------------------------------------

    def leq(self, x: Value, y: Value) -> bool:
        return x <= y

    def meet(self, x: Value, y: Value) -> Value:
        return x if x <= y else y

    def join(self, x: Value, y: Value) -> Value:
        return y if x <= y else x

    def meet_all(self, values: Iterable[Value]) -> Value:
        return reduce(self.meet, values, self.one)

    def join_all(self, values: Iterable[Value]) -> Value:
        return reduce(self.join, values, self.zero)

    def tensor(self, x: Value, y: Value) -> Value:
        kind = self.kind
        if kind == GODEL_KIND or kind == BOOLEAN_KIND:
            return x if x <= y else y
        if kind == LUKASIEWICZ_KIND:
            s = x + y - 1
            return s if s > 0 else _ZERO
        if kind == PRODUCT_KIND:
            return x * y
        s = x + y - self.top_index
        return s if s > 0 else 0

    def residuum(self, x: Value, y: Value) -> Value:
        """``x -> y``, the greatest ``z`` with ``x (*) z <= y``."""
        kind = self.kind
        if kind == GODEL_KIND or kind == BOOLEAN_KIND:
            return self.one if x <= y else y
        if kind == LUKASIEWICZ_KIND:
            s = 1 - x + y
            return s if s < 1 else _ONE
        if kind == PRODUCT_KIND:
            return _ONE if x <= y else y / x
        n = self.top_index
        s = n - x + y
        return s if s < n else n

    def biresiduum(self, x: Value, y: Value) -> Value:
        return self.meet(self.residuum(x, y), self.residuum(y, x))

    # -- conversion --------------------------------------------------------

    def coerce(self, raw) -> Value:
        """Turn a user or JSON value into a payload, validating the carrier.

        Unit-interval structures take fractions, integers, decimal or
        ``"p/q"`` strings and floats (read through their shortest decimal
        repr, so ``0.7`` becomes ``7/10``).  The Boolean structure also
        takes ``True``/``False``.  Chains take the integer index only.
        """
        if self.is_chain:
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise CarrierError(f"chain values are integer indices, got {raw!r}")
            return self.check(raw)
        if isinstance(raw, bool):
            if self.kind != BOOLEAN_KIND:
                raise CarrierError(f"booleans are not values of the {self.kind} structure")
            return _ONE if raw else _ZERO
        try:
            if isinstance(raw, float):
                v = Fraction(repr(raw))
            elif isinstance(raw, (int, Fraction, str)):
                v = Fraction(raw.strip() if isinstance(raw, str) else raw)
            else:
                raise TypeError
        except (TypeError, ValueError, ZeroDivisionError):
            raise CarrierError(f"cannot read {raw!r} as a truth value") from None
        return self.check(v)

    def to_json(self, v: Value):
        """JSON representation: ints for chains, bools for Boolean, ``"p/q"`` otherwise."""
        if self.is_chain:
            return int(v)
        if self.kind == BOOLEAN_KIND:
            return v == 1
        return format_value(v)

    def descriptor(self) -> dict:
        if self.is_chain:
            return {"kind": self.kind, "size": self.size}
        return {"kind": self.kind}

    @classmethod
    def from_descriptor(cls, doc) -> "Lattice":
        if not isinstance(doc, dict) or "kind" not in doc:
            raise ValueError("lattice descriptor must be an object with a 'kind' field")
        extra = set(doc) - {"kind", "size"}
        if extra:
            raise ValueError(f"unexpected lattice fields {sorted(extra)}")
        return cls(doc["kind"], doc.get("size"))

    def __str__(self):
        return f"chain({self.size})" if self.is_chain else self.kind


BOOLEAN = Lattice(BOOLEAN_KIND)
GODEL = Lattice(GODEL_KIND)
LUKASIEWICZ = Lattice(LUKASIEWICZ_KIND)
PRODUCT = Lattice(PRODUCT_KIND)


def chain(size: int) -> Lattice:
    """The Łukasiewicz chain with ``size`` elements."""
    return Lattice(CHAIN_KIND, size)


def format_value(v: Value) -> str:
    """Exact textual form, e.g. ``"1/2"``; never a decimal."""
    return str(v)


@dataclass(frozen=True)
class TruthValue:
    """A payload tagged with its lattice.

    ``*`` is the multiplication, ``>>`` the residuum, ``&``/``|`` meet and
    join; comparisons follow the lattice order.  Mixing lattices raises
    :class:`LatticeMismatchError`.
    """

    value: Value
    lattice: Lattice

    def __post_init__(self):
        self.lattice.check(self.value)

    @classmethod
    def of(cls, raw, lattice: Lattice) -> "TruthValue":
        return cls(lattice.coerce(raw), lattice)

    def _other(self, other: "TruthValue") -> Value:
        if not isinstance(other, TruthValue):
            return NotImplemented
        if other.lattice != self.lattice:
            raise LatticeMismatchError(f"{self.lattice} value combined with {other.lattice} value")
        return other.value

    def _lift(self, op, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return TruthValue(op(self.value, o), self.lattice)

    def __mul__(self, other):
        return self._lift(self.lattice.tensor, other)

    def __rshift__(self, other):
        return self._lift(self.lattice.residuum, other)

    def __and__(self, other):
        return self._lift(self.lattice.meet, other)

    def __or__(self, other):
        return self._lift(self.lattice.join, other)

    def __le__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self.value <= o

    def __lt__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self.value < o

    def __ge__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self.value >= o

    def __gt__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self.value > o

    def __str__(self):
        return format_value(self.value)


def _payloads(a: TruthValue, b: TruthValue, lattice: Lattice) -> tuple[Value, Value]:
    for t in (a, b):
        if t.lattice != lattice:
            raise LatticeMismatchError(f"{t.lattice} value used with {lattice}")
    return a.value, b.value


def tensor(a: TruthValue, b: TruthValue, lattice: Lattice) -> TruthValue:
    return TruthValue(lattice.tensor(*_payloads(a, b, lattice)), lattice)


def residuum(a: TruthValue, b: TruthValue, lattice: Lattice) -> TruthValue:
    return TruthValue(lattice.residuum(*_payloads(a, b, lattice)), lattice)


def biresiduum(a: TruthValue, b: TruthValue, lattice: Lattice) -> TruthValue:
    return TruthValue(lattice.biresiduum(*_payloads(a, b, lattice)), lattice)


def iter_values(lattice: Lattice, denominators: Iterable[int] = (10,)) -> Iterator[Value]:
    """Finite sample of the carrier: all elements, or ``k/d`` grids for the interval."""
    if lattice.is_finite:
        yield from lattice.elements()
        return
    seen = set()
    for d in denominators:
        for k in range(d + 1):
            v = Fraction(k, d)
            if v not in seen:
                seen.add(v)
                yield v

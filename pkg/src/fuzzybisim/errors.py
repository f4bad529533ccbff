"""Exception hierarchy shared by all modules."""


class FuzzyBisimError(Exception):
    """Base class for every error raised by this package."""


class LatticeMismatchError(FuzzyBisimError):
    """Operands are governed by different lattice descriptors."""


class CarrierError(FuzzyBisimError, ValueError):
    """A value does not belong to the carrier of its lattice."""


class DimensionError(FuzzyBisimError, ValueError):
    """Shapes or index sets of two operands do not fit together."""


class InvalidEquivalenceError(FuzzyBisimError, ValueError):
    """A relation that must be a fuzzy equivalence is not one."""


class EmptyRelationError(FuzzyBisimError, ValueError):
    """A relation that must be non-empty is identically zero."""


class NotUniformError(FuzzyBisimError, ValueError):
    """An operation requiring a uniform fuzzy relation got another one."""


class EnumerationLimitError(FuzzyBisimError):
    """An enumeration would exceed its configured cap."""


class InputError(FuzzyBisimError, ValueError):
    """Malformed input document; the message names the offending field."""


class NotLFunctionError(FuzzyBisimError, ValueError):
    """Some row of the relation contains no entry equal to 1."""


class UnconvergedError(FuzzyBisimError):
    """A decreasing fixpoint hit its iteration cap; ``report`` holds the details."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report

"""Fuzzy automata over complete residuated lattices.

Exact simulations and bisimulations, reduction by bisimulation fuzzy
equivalences, and UFB-equivalence testing.
"""

__version__ = "0.1.0"

from .automaton import (
    FactorAutomaton,
    FuzzyAutomaton,
    LanguageVerdict,
    factor_automaton,
    factor_isomorphism,
    is_isomorphism,
    isomorphism_search,
    iter_words,
    language_equal_bounded,
    language_value,
    reverse,
    transition_relation,
)
from .bisim import (
    BisimKind,
    CheckVerdict,
    FixpointReport,
    Violation,
    bisim_equivalence_fixpoint,
    check_relation,
    greatest,
    greatest_bisim_equivalence,
    greatest_bisimulation,
    greatest_simulation,
    greatest_strongly_invariant,
    quasi_order_report,
    verify_uniform_fb_equalities,
)
from .errors import (
    CarrierError,
    DimensionError,
    EmptyRelationError,
    EnumerationLimitError,
    FuzzyBisimError,
    InputError,
    InvalidEquivalenceError,
    LatticeMismatchError,
    NotLFunctionError,
    NotUniformError,
    UnconvergedError,
)
from .io import (
    automaton_from_dict,
    automaton_to_dict,
    load_automaton,
    load_relation,
    relation_from_doc,
    relation_to_dict,
)
from .lattice import BOOLEAN, GODEL, LUKASIEWICZ, PRODUCT, Lattice, TruthValue, biresiduum, chain, residuum, tensor
from .relations import (
    FactorSet,
    FuzzyEquivalence,
    FuzzyRelation,
    FuzzySet,
    classify_equivalence,
    compose,
    crisp_part,
    factor_set,
    inverse,
    left_residual,
    right_residual,
    tilde,
)
from .ufb import UfbVerdict, natural_uniform_relation, reduce, relative_quotient, ufb_equivalent
from .uniform import (
    UniformClassification,
    canonical_description,
    classify,
    cokernel,
    crisp_descriptions,
    induced_bijection,
    induced_equivalences,
    kernel,
    uniform_from_isomorphism,
)

__all__ = [
    "__version__",
    "FactorAutomaton",
    "FuzzyAutomaton",
    "LanguageVerdict",
    "factor_automaton",
    "factor_isomorphism",
    "is_isomorphism",
    "isomorphism_search",
    "iter_words",
    "language_equal_bounded",
    "language_value",
    "reverse",
    "transition_relation",
    "BisimKind",
    "CheckVerdict",
    "FixpointReport",
    "Violation",
    "bisim_equivalence_fixpoint",
    "check_relation",
    "greatest",
    "greatest_bisim_equivalence",
    "greatest_bisimulation",
    "greatest_simulation",
    "greatest_strongly_invariant",
    "quasi_order_report",
    "verify_uniform_fb_equalities",
    "CarrierError",
    "DimensionError",
    "EmptyRelationError",
    "EnumerationLimitError",
    "FuzzyBisimError",
    "InputError",
    "InvalidEquivalenceError",
    "LatticeMismatchError",
    "NotLFunctionError",
    "NotUniformError",
    "UnconvergedError",
    "automaton_from_dict",
    "automaton_to_dict",
    "load_automaton",
    "load_relation",
    "relation_from_doc",
    "relation_to_dict",
    "BOOLEAN",
    "GODEL",
    "LUKASIEWICZ",
    "PRODUCT",
    "Lattice",
    "TruthValue",
    "biresiduum",
    "chain",
    "residuum",
    "tensor",
    "FactorSet",
    "FuzzyEquivalence",
    "FuzzyRelation",
    "FuzzySet",
    "classify_equivalence",
    "compose",
    "crisp_part",
    "factor_set",
    "inverse",
    "left_residual",
    "right_residual",
    "tilde",
    "UfbVerdict",
    "natural_uniform_relation",
    "reduce",
    "relative_quotient",
    "ufb_equivalent",
    "UniformClassification",
    "canonical_description",
    "classify",
    "cokernel",
    "crisp_descriptions",
    "induced_bijection",
    "induced_equivalences",
    "kernel",
    "uniform_from_isomorphism",
]

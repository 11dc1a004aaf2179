"""Exact computation of every extension of a p-adic valuation to a number
field L = Q[x]/(f), together with executable forms of weak approximation,
the approximation lemma, and the fundamental inequality.
"""

from .errors import (
    GammaNotInValueGroup,
    HypothesisViolation,
    IllegalIdeal,
    NegativeValue,
    NotIrreducible,
    NotReduced,
    RankDeficient,
    ValExtError,
    ZeroElement,
    ZeroInversion,
)
from .extensions import (
    ExtensionValuation,
    Position,
    PositionKind,
    decide_position,
    extensions_of,
    residue,
    value,
)
from .fpalgebra import (
    AlgIdeal,
    Component,
    Decomposition,
    FpAlgebra,
    is_unit,
    lift_idempotents,
    nilradical,
    quotient_by,
    quotient_mod_p,
    split_reduced,
)
from .numberfield import NFElem, NumberField
from .orders import (
    Order,
    discriminant,
    equation_order,
    p_maximal_order,
    p_radical,
    ring_of_multipliers,
)
from .padic import PAdicValuation, is_prime
from .theorems import (
    CheckReport,
    EfBasis,
    approx_element,
    build_ef_basis,
    check_fundamental,
    check_min_formula,
    weak_approx,
)
from .values import INFINITY, Val

__all__ = [
    "AlgIdeal",
    "CheckReport",
    "Component",
    "Decomposition",
    "EfBasis",
    "ExtensionValuation",
    "FpAlgebra",
    "GammaNotInValueGroup",
    "HypothesisViolation",
    "INFINITY",
    "IllegalIdeal",
    "NFElem",
    "NegativeValue",
    "NotIrreducible",
    "NotReduced",
    "NumberField",
    "Order",
    "PAdicValuation",
    "Position",
    "PositionKind",
    "RankDeficient",
    "Val",
    "ValExtError",
    "ZeroElement",
    "ZeroInversion",
    "approx_element",
    "build_ef_basis",
    "check_fundamental",
    "check_min_formula",
    "decide_position",
    "discriminant",
    "equation_order",
    "extensions_of",
    "is_prime",
    "is_unit",
    "lift_idempotents",
    "nilradical",
    "p_maximal_order",
    "p_radical",
    "quotient_by",
    "quotient_mod_p",
    "residue",
    "ring_of_multipliers",
    "split_reduced",
    "value",
    "weak_approx",
]

__version__ = "0.1.0"

"""permalg: exact computer algebra for free perm algebras.

Perm algebras are associative algebras with the right-commutativity law
``abc = acb``.  This package provides canonical arithmetic in the free
perm algebra, commutator- and anticommutator-side element analysis,
polynomial identity checking, and enveloping perm algebras of metabelian
Lie algebras through a terminating confluent rewriting system.
"""

__version__ = "0.1.0"

from .envelope import (
    AlgebraFormatError,
    BasisSplit,
    Envelope,
    EnvelopeMonomial,
    GrowthReport,
    InvalidLieAlgebra,
    MetabelianLieAlgebra,
    RewriteRule,
    load_algebra,
    split_basis,
)
from .expr import (
    Anti,
    Comm,
    ExprSum,
    IdentityTemplate,
    IdentityVerdict,
    Leaf,
    Prod,
    Slot,
    associator,
    check_identity,
    expand_node,
    left_normed,
)
from .jordan import (
    FElement,
    NotJordanElement,
    bn_basis,
    cohn_witness,
    expand_bn,
    f_comb,
    ideal_component,
    jordan_express,
    sj_span,
    to_bn,
    verify_J_identities,
    verify_perm_plus_identities,
)
from .lie import (
    MLMonomial,
    NotLieElement,
    dynkin,
    head,
    is_lie,
    lie_express,
    lie_span_oracle,
    ml_basis,
)
from .linalg import Span, Subspace, span_solve
from .parser import (
    ExprSyntaxError,
    GeneratorTable,
    parse_envelope_expr,
    parse_expr,
    parse_template,
    parse_word,
)
from .perm import (
    PermMonomial,
    PermPolynomial,
    canonicalize,
    dimension,
    enumerate_basis,
)

__all__ = [
    "AlgebraFormatError",
    "Anti",
    "BasisSplit",
    "Comm",
    "Envelope",
    "EnvelopeMonomial",
    "ExprSum",
    "ExprSyntaxError",
    "FElement",
    "GeneratorTable",
    "GrowthReport",
    "IdentityTemplate",
    "IdentityVerdict",
    "InvalidLieAlgebra",
    "Leaf",
    "MLMonomial",
    "MetabelianLieAlgebra",
    "NotJordanElement",
    "NotLieElement",
    "PermMonomial",
    "PermPolynomial",
    "Prod",
    "RewriteRule",
    "Slot",
    "Span",
    "Subspace",
    "associator",
    "bn_basis",
    "canonicalize",
    "check_identity",
    "cohn_witness",
    "dimension",
    "dynkin",
    "enumerate_basis",
    "expand_bn",
    "expand_node",
    "f_comb",
    "head",
    "ideal_component",
    "is_lie",
    "jordan_express",
    "left_normed",
    "lie_express",
    "lie_span_oracle",
    "load_algebra",
    "ml_basis",
    "parse_envelope_expr",
    "parse_expr",
    "parse_template",
    "parse_word",
    "sj_span",
    "span_solve",
    "split_basis",
    "to_bn",
    "verify_J_identities",
    "verify_perm_plus_identities",
]

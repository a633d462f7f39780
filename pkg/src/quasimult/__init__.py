"""Exact-arithmetic engine for n-ary graded color algebras carrying a
quasi-multiplicative basis: validation, connection classes, ideal
decomposition, minimality, and identity checking."""

from .algebra import (
    ConcreteAlgebra,
    QuasiMultViolation,
    eval_product,
    symbolic_of_concrete,
    validate_algebra,
    validate_grading,
)
from .connections import (
    ConnectionCertificate,
    ConnectionPartition,
    arg_packs,
    connection_classes,
    eval_a,
    eval_b,
    eval_mu,
    eval_phi,
    find_connection,
)
from .decomposition import (
    Decomposition,
    IdealDescription,
    center,
    component_ideal,
    decompose,
    is_ideal,
    is_tight,
    make_candidate,
    orthogonality_witness,
    simplicity_obstruction,
)
from .fileio import (
    AlgebraFileError,
    AlgebraSyntaxError,
    AlgebraValidationError,
    parse_algebra,
    parse_document,
    serialize,
)
from .generator import GenerationError, GeneratorParams, generate_random
from .groups import Bicharacter, GradingGroup, validate_bicharacter
from .identities import (
    ColorScheme,
    IdentityScheme,
    builtin_scheme,
    check_identity,
    colorize,
    epsilon_sigma,
    load_scheme,
)
from .minimality import (
    MinimalityVerdict,
    OracleBoundExceeded,
    is_mu_quasi_multiplicative,
    minimal_brute_force,
    minimal_by_theorem,
    minimal_decomposition_check,
    restrict_to_ideal,
)
from .symbols import Ext, SymbolicTable, V_SYM, bar, idx, validate_quasi_mult

__version__ = "0.1.0"

__all__ = [
    "Bicharacter",
    "ColorScheme",
    "ConcreteAlgebra",
    "ConnectionCertificate",
    "ConnectionPartition",
    "Decomposition",
    "Ext",
    "GradingGroup",
    "GeneratorParams",
    "GenerationError",
    "IdealDescription",
    "IdentityScheme",
    "MinimalityVerdict",
    "OracleBoundExceeded",
    "QuasiMultViolation",
    "SymbolicTable",
    "V_SYM",
    "AlgebraFileError",
    "AlgebraSyntaxError",
    "AlgebraValidationError",
    "arg_packs",
    "bar",
    "builtin_scheme",
    "center",
    "check_identity",
    "colorize",
    "component_ideal",
    "connection_classes",
    "decompose",
    "epsilon_sigma",
    "eval_a",
    "eval_b",
    "eval_mu",
    "eval_phi",
    "eval_product",
    "find_connection",
    "generate_random",
    "idx",
    "is_ideal",
    "is_mu_quasi_multiplicative",
    "is_tight",
    "load_scheme",
    "make_candidate",
    "minimal_brute_force",
    "minimal_by_theorem",
    "minimal_decomposition_check",
    "orthogonality_witness",
    "parse_algebra",
    "parse_document",
    "restrict_to_ideal",
    "serialize",
    "simplicity_obstruction",
    "symbolic_of_concrete",
    "validate_algebra",
    "validate_bicharacter",
    "validate_grading",
    "validate_quasi_mult",
]

"""Flat semirings from 3-hypergraphs.

Build the semiring attached to a linear 3-hypergraph, check semiring
identities with a flat-semiring-aware search or by brute force, decide
strong 3-colorability and its 2-robust refinement, and replay the
containment proofs as verified witness pipelines.
"""

from .coloring import (
    COLORS,
    ExtensionFailure,
    RobustnessReport,
    enumerate_strong_colorings,
    extends,
    is_2_robust,
)
from .constructions import (
    DirectPower,
    GeneratedSubsemiring,
    IdealQuotient,
    WITNESS_KINDS,
    WitnessReport,
    WitnessStage,
    direct_power,
    find_semiring_isomorphism,
    find_subword_embedding,
    format_witness_report,
    generated_subsemiring,
    quotient_by_ideal,
    verify_witness,
)
from .hg_semiring import (
    HgElement,
    HypergraphSemiring,
    build_semigroup,
    build_semiring,
    normal_form_product,
)
from .hypergraph import (
    FAMILY_KINDS,
    INFINITE,
    Hypergraph,
    HypergraphParseError,
    ValidationReport,
    build_hypergraph,
    family,
    find_hypergraph_isomorphism,
    format_hypergraph,
    girth,
    is_linear,
    leaf_core,
    linked_classes,
    parse_hypergraph,
    to_dot,
    uniform_core,
    validate,
)
from .semiring import (
    AxiomReport,
    FiniteSemiring,
    IrreducibilityCertificate,
    MulTable,
    SemiringParseError,
    flat_completion,
    format_semiring,
    is_flat,
    is_zero_cancellative,
    multiplicative_zero,
    parse_semiring,
    subdirect_irreducibility_certificate,
    verify_axioms,
)
from .terms import (
    CheckResult,
    Identity,
    IdentitySyntaxError,
    Product,
    Sum,
    Variable,
    builtin_identity,
    check_identity_bruteforce,
    check_identity_flat,
    eval_term,
    make_identity,
    nested_identity,
    parse_identity,
    parse_identity_file,
)
from .words import build_sc, builtin_s7

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "CheckResult",
    "COLORS",
    "DirectPower",
    "ExtensionFailure",
    "FAMILY_KINDS",
    "FiniteSemiring",
    "GeneratedSubsemiring",
    "HgElement",
    "Hypergraph",
    "HypergraphParseError",
    "HypergraphSemiring",
    "IdealQuotient",
    "Identity",
    "IdentitySyntaxError",
    "INFINITE",
    "IrreducibilityCertificate",
    "MulTable",
    "Product",
    "RobustnessReport",
    "SemiringParseError",
    "Sum",
    "ValidationReport",
    "Variable",
    "WITNESS_KINDS",
    "WitnessReport",
    "WitnessStage",
    "build_hypergraph",
    "build_sc",
    "build_semigroup",
    "build_semiring",
    "builtin_identity",
    "builtin_s7",
    "check_identity_bruteforce",
    "check_identity_flat",
    "direct_power",
    "enumerate_strong_colorings",
    "eval_term",
    "extends",
    "family",
    "find_hypergraph_isomorphism",
    "find_semiring_isomorphism",
    "find_subword_embedding",
    "flat_completion",
    "format_hypergraph",
    "format_semiring",
    "format_witness_report",
    "generated_subsemiring",
    "girth",
    "is_2_robust",
    "is_flat",
    "is_linear",
    "is_zero_cancellative",
    "leaf_core",
    "linked_classes",
    "make_identity",
    "multiplicative_zero",
    "nested_identity",
    "normal_form_product",
    "parse_hypergraph",
    "parse_identity",
    "parse_identity_file",
    "parse_semiring",
    "quotient_by_ideal",
    "subdirect_irreducibility_certificate",
    "to_dot",
    "uniform_core",
    "validate",
    "verify_axioms",
    "verify_witness",
]

"""Finite inverse semigroupoids, their partial actions, and universal globalization."""

from .actions import (
    CoverageError,
    PartialAction,
    act,
    check_derived_propositions,
    is_global,
    is_global_diagnostic,
    restrict,
    validate_e_axioms,
    validate_p_axioms,
)
from .catalog import (
    CatalogAction,
    CatalogEntry,
    catalog,
    grow_catalog,
    random_partial_action,
)
from .core import (
    InverseSemigroupoid,
    OrderDiagnostic,
    SemigroupoidTable,
    StructuralError,
    ValidationReport,
    Violation,
    idempotents,
    infer_inverses,
    is_identity,
    natural_leq,
    natural_leq_diagnostic,
    pseudo_inverses,
    validate_semigroupoid,
)
from .globalization import (
    Globalization,
    Quotient,
    Seed,
    WellDefinednessError,
    build_globalization,
    build_seed_set,
    check_fiber_injectivity,
    close_equivalence,
    fiber_classes,
    mediating,
    seed_domain,
    seeds_related,
    verify_universal,
)
from .morphisms import (
    ActionMap,
    GlobalizationTriple,
    compose,
    embedding_by_points,
    identity_map,
    inclusion_map,
    is_action_map,
    is_embedding,
    is_globalization_triple,
    is_isomorphism,
)
from .textio import (
    ParseError,
    StructureDoc,
    ValidationFailure,
    format_action,
    format_structure,
    load_action,
    load_structure,
    parse_action,
    parse_structure,
    structure_ref,
)

__all__ = [name for name in dir() if not name.startswith("_")]

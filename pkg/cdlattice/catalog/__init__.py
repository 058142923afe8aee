"""Group specs, the small-group catalog, sweeps and report writers."""

from cdlattice.catalog.catalog import (
    CATALOG,
    COMPLETE_THROUGH_ORDER,
    SMALL_GROUP_COUNTS,
    CatalogEntry,
    Fingerprint,
    abelian_invariant_factors,
    counts_by_order,
    entries,
    fingerprint,
    get_entry,
    register_entry,
)
from cdlattice.catalog.dot import export_dot, write_dot
from cdlattice.catalog.recipes import NAMED_RECIPES, get_recipe, register_recipe
from cdlattice.catalog.reports import (
    VerificationPayload,
    VerificationResult,
    build_payload,
    payload_schema,
    run_verify,
    verify_group,
    write_json,
)
from cdlattice.catalog.spec import GroupSpec, SpecAtom, build_group, canonical_form, parse_spec
from cdlattice.catalog.sweep import SweepFilter, SweepReport, SweepRow, SweepSummary, run_sweep

__all__ = [
    "CATALOG",
    "COMPLETE_THROUGH_ORDER",
    "CatalogEntry",
    "Fingerprint",
    "GroupSpec",
    "NAMED_RECIPES",
    "SMALL_GROUP_COUNTS",
    "SpecAtom",
    "SweepFilter",
    "SweepReport",
    "SweepRow",
    "SweepSummary",
    "VerificationPayload",
    "VerificationResult",
    "abelian_invariant_factors",
    "build_group",
    "build_payload",
    "canonical_form",
    "counts_by_order",
    "entries",
    "export_dot",
    "fingerprint",
    "get_entry",
    "get_recipe",
    "parse_spec",
    "payload_schema",
    "register_entry",
    "register_recipe",
    "run_sweep",
    "run_verify",
    "verify_group",
    "write_dot",
    "write_json",
]

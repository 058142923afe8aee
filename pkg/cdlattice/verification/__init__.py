"""Machine verification of the equal-cyclic-measure theorem and its corollary."""

from cdlattice.verification.theorem import (
    CONCLUSION_NAMES,
    COROLLARY_VERDICT_NAMES,
    CorollaryReport,
    Recognition,
    SylowWitness,
    TheoremReport,
    equal_cyclic_measure,
    nontrivial_cyclic_subgroups,
    recognize_cp_or_q8,
    verify_cp_or_q8_corollary,
    verify_equal_measure_theorem,
)

__all__ = [
    "CONCLUSION_NAMES",
    "COROLLARY_VERDICT_NAMES",
    "CorollaryReport",
    "Recognition",
    "SylowWitness",
    "TheoremReport",
    "equal_cyclic_measure",
    "nontrivial_cyclic_subgroups",
    "recognize_cp_or_q8",
    "verify_cp_or_q8_corollary",
    "verify_equal_measure_theorem",
]

"""
cd-lattice - Chermak-Delgado lattices of explicit finite groups

Enumerates subgroup lattices, computes Chermak-Delgado measures and machine-checks
the equal-cyclic-measure classification over a catalog of small groups.
"""

__version__ = "0.1.0"

from cdlattice.catalog import build_group, parse_spec, run_sweep, run_verify, verify_group
from cdlattice.core.config import Limits
from cdlattice.groups import Group
from cdlattice.lattice import Subgroup, SubgroupLattice, all_subgroups
from cdlattice.measures import CDReport, cd_lattice
from cdlattice.verification import (
    TheoremReport,
    verify_cp_or_q8_corollary,
    verify_equal_measure_theorem,
)

__all__ = [
    "CDReport",
    "Group",
    "Limits",
    "Subgroup",
    "SubgroupLattice",
    "TheoremReport",
    "all_subgroups",
    "build_group",
    "cd_lattice",
    "parse_spec",
    "run_sweep",
    "run_verify",
    "verify_cp_or_q8_corollary",
    "verify_equal_measure_theorem",
    "verify_group",
]

"""Subgroups, closure queries and the full subgroup lattice."""

from cdlattice.lattice.lattice import (
    ModularityResult,
    SubgroupLattice,
    all_subgroups,
    is_modular,
    join,
    meet,
)
from cdlattice.lattice.subgroups import (
    Subgroup,
    center,
    centralizer,
    cyclic_subgroup,
    exponent,
    full_subgroup,
    induced_group,
    is_abelian_subgroup,
    is_normal,
    join_subgroups,
    omega1,
    subgroup_exponent,
    subgroup_from_elements,
    subgroup_generated,
    trivial_subgroup,
)

__all__ = [
    "ModularityResult",
    "Subgroup",
    "SubgroupLattice",
    "all_subgroups",
    "center",
    "centralizer",
    "cyclic_subgroup",
    "exponent",
    "full_subgroup",
    "induced_group",
    "is_abelian_subgroup",
    "is_modular",
    "is_normal",
    "join",
    "join_subgroups",
    "meet",
    "omega1",
    "subgroup_exponent",
    "subgroup_from_elements",
    "subgroup_generated",
    "trivial_subgroup",
]

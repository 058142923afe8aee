"""Explicit finite groups and their constructors."""

from cdlattice.groups.constructors import (
    check_cyclic_action,
    dicyclic_label,
    direct_product,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    quotient,
    semidirect_cyclic,
    semidirect_general,
)
from cdlattice.groups.group import ElementInfo, Group, element_info, element_order

__all__ = [
    "check_cyclic_action",
    "ElementInfo",
    "Group",
    "dicyclic_label",
    "direct_product",
    "element_info",
    "element_order",
    "make_cyclic",
    "make_dicyclic",
    "make_dihedral",
    "quotient",
    "semidirect_cyclic",
    "semidirect_general",
]

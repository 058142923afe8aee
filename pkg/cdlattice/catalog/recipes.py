"""Named groups that need more than a product of cyclic, dihedral, dicyclic or SDP factors."""
from __future__ import annotations

from typing import Callable, Dict, Optional

from cdlattice.core.config import Limits
from cdlattice.core.exceptions import InvalidSpecError
from cdlattice.groups.constructors import (
    direct_product,
    make_cyclic,
    make_dihedral,
    quotient,
    semidirect_general,
)
from cdlattice.groups.group import Group
from cdlattice.lattice.subgroups import subgroup_generated

GroupRecipe = Callable[[Optional[Limits]], Group]


def make_alternating_a4(limits: Optional[Limits] = None) -> Group:
    """``(C2 x C2) x| C3`` with the generator of ``C3`` cycling the three involutions."""

    klein = direct_product(make_cyclic(2), make_cyclic(2), limits=limits)
    rotation = [0, 2, 3, 1]
    action = [[0, 1, 2, 3], rotation, [rotation[rotation[x]] for x in range(4)]]
    return semidirect_general(klein, make_cyclic(3), action, limits=limits, label="A4")


def make_g16_3(limits: Optional[Limits] = None) -> Group:
    """``(C4 x C2) x| C2`` with the involution acting by ``(i, j) -> (i, i + j)``."""

    normal = direct_product(make_cyclic(4), make_cyclic(2), limits=limits)
    twist = [i * 2 + (i + j) % 2 for i in range(4) for j in range(2)]
    action = [list(range(8)), twist]
    return semidirect_general(normal, make_cyclic(2), action, limits=limits, label="G16_3")


def make_pauli(limits: Optional[Limits] = None) -> Group:
    """Central product ``C4 o D8``: ``C4 x D8`` modulo the diagonal central involution."""

    product = direct_product(make_cyclic(4), make_dihedral(8), limits=limits)
    # (a^2, r^2) sits at 2 * 8 + 2
    kernel = subgroup_generated(product, [2 * 8 + 2])
    return quotient(product, kernel, label="Pauli", limits=limits)


NAMED_RECIPES: Dict[str, GroupRecipe] = {
    "A4": make_alternating_a4,
    "G16_3": make_g16_3,
    "Pauli": make_pauli,
}


def get_recipe(name: str) -> GroupRecipe:
    try:
        return NAMED_RECIPES[name]
    except KeyError as exc:
        raise InvalidSpecError(f"Unknown named group: {name}") from exc


def register_recipe(name: str, recipe: GroupRecipe) -> None:
    """Register a named recipe so group specs can refer to it."""

    NAMED_RECIPES[name] = recipe


__all__ = [
    "GroupRecipe",
    "NAMED_RECIPES",
    "get_recipe",
    "make_alternating_a4",
    "make_g16_3",
    "make_pauli",
    "register_recipe",
]

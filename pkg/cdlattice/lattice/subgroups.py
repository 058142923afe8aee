"""Subgroups as bitsets over a parent's element indices, plus closure-based queries."""
from __future__ import annotations

import logging
from functools import cached_property, reduce
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from sympy import ilcm, isprime

from cdlattice.core.config import Limits
from cdlattice.core.exceptions import InvalidParameterError
from cdlattice.groups.group import Group

logger = logging.getLogger(__name__)


class Subgroup:
    """A subgroup of ``parent`` stored as a membership bitset.

    Equality and hashing use the parent's identity and the bitset. ``generators`` is
    a generating set used for joins; it is computed greedily when not supplied.
    The mask must contain the identity and be closed under the product;
    ``check=False`` skips that test for masks closed by construction.
    """

    def __init__(
        self,
        parent: Group,
        mask: NDArray[np.bool_],
        *,
        generators: Optional[Sequence[int]] = None,
        check: bool = True,
    ) -> None:
        membership = np.array(mask, dtype=bool, copy=True)
        if membership.shape != (parent.order,):
            raise InvalidParameterError("Subgroup mask must have one entry per parent element.")
        if check and not _is_closed(parent, membership):
            raise InvalidParameterError(
                f"Mask is not a subgroup of {parent.label}: it must hold the identity and be closed."
            )
        membership.setflags(write=False)
        elements = np.flatnonzero(membership).astype(np.int64)
        elements.setflags(write=False)

        self._parent = parent
        self._mask = membership
        self._elements = elements
        self._members = _to_bitset(membership)
        if generators is not None:
            self.__dict__["generators"] = tuple(int(g) for g in generators)

    @property
    def parent(self) -> Group:
        return self._parent

    @property
    def members(self) -> int:
        """Membership bitset: bit ``i`` is set when element ``i`` belongs to the subgroup."""

        return self._members

    @property
    def mask(self) -> NDArray[np.bool_]:
        return self._mask

    @property
    def elements(self) -> NDArray[np.int64]:
        return self._elements

    @property
    def size(self) -> int:
        return int(self._elements.shape[0])

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        return _greedy_generators(self._parent, self._elements)

    def canonical_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.size, tuple(int(e) for e in self._elements))

    def issubset(self, other: "Subgroup") -> bool:
        return self._members & ~other.members == 0

    def __contains__(self, index: object) -> bool:
        return isinstance(index, (int, np.integer)) and 0 <= int(index) < len(self._mask) and bool(
            self._mask[int(index)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self._parent is other.parent and self._members == other.members

    def __hash__(self) -> int:
        return hash((id(self._parent), self._members))

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Subgroup(parent={self._parent.label!r}, size={self.size})"


def trivial_subgroup(group: Group) -> Subgroup:
    mask = np.zeros(group.order, dtype=bool)
    mask[group.identity] = True
    return Subgroup(group, mask, generators=(), check=False)


def full_subgroup(group: Group) -> Subgroup:
    return Subgroup(group, np.ones(group.order, dtype=bool), check=False)


def cyclic_subgroup(group: Group, generator: int) -> Subgroup:
    """``<g>``, collected by repeated multiplication."""

    if not 0 <= generator < group.order:
        raise InvalidParameterError(f"Element index {generator} out of range for {group.label}.")
    mask = np.zeros(group.order, dtype=bool)
    mask[group.identity] = True
    current = generator
    while not mask[current]:
        mask[current] = True
        current = int(group.table[current, generator])
    generators = () if generator == group.identity else (generator,)
    return Subgroup(group, mask, generators=generators, check=False)


def subgroup_generated(group: Group, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``generators``."""

    requested = sorted({int(g) for g in generators})
    for index in requested:
        if not 0 <= index < group.order:
            raise InvalidParameterError(f"Element index {index} out of range for {group.label}.")

    mask = np.zeros(group.order, dtype=bool)
    mask[group.identity] = True
    accepted: List[int] = []
    for index in requested:
        if mask[index]:
            continue
        mask = _extend(group, mask, accepted, index)
        accepted.append(index)
    return Subgroup(group, mask, generators=accepted, check=False)


def join_subgroups(group: Group, first: Subgroup, second: Subgroup) -> Subgroup:
    """``<A, B>``, grown from ``A`` one generator of ``B`` at a time."""

    mask = np.array(first.mask, copy=True)
    accepted = list(first.generators)
    for index in second.generators:
        if mask[index]:
            continue
        mask = _extend(group, mask, accepted, index)
        accepted.append(index)
    return Subgroup(group, mask, generators=accepted, check=False)


def subgroup_from_elements(group: Group, elements: Iterable[int]) -> Optional[Subgroup]:
    """Return the subgroup on exactly ``elements``, or ``None`` if the set is not closed."""

    mask = np.zeros(group.order, dtype=bool)
    mask[list(elements)] = True
    if not _is_closed(group, mask):
        return None
    return Subgroup(group, mask, check=False)


def centralizer(group: Group, subgroup: Subgroup) -> Subgroup:
    """``C_G(H)``; commuting with a generating set of ``H`` is enough."""

    generators = list(subgroup.generators)
    if not generators:
        return full_subgroup(group)
    table = group.table
    commutes = (table[:, generators] == table[generators, :].T).all(axis=1)
    return Subgroup(group, commutes, check=False)


def center(group: Group) -> Subgroup:
    return centralizer(group, full_subgroup(group))


def omega1(group: Group, p: int) -> Subgroup:
    """Subgroup generated by the elements ``g`` with ``g^p = e``."""

    if not isprime(p):
        raise InvalidParameterError(f"omega1 requires a prime, got {p}.")
    if group.order % p != 0:
        raise InvalidParameterError(f"{p} does not divide |{group.label}| = {group.order}.")
    orders = group.element_orders()
    candidates = np.flatnonzero((orders == 1) | (orders == p))
    return subgroup_generated(group, (int(c) for c in candidates))


def exponent(group: Group) -> int:
    """Least common multiple of the element orders."""

    return group.exponent()


def subgroup_exponent(subgroup: Subgroup) -> int:
    orders = subgroup.parent.element_orders()[subgroup.elements]
    return int(reduce(ilcm, (int(value) for value in orders), 1))


def is_normal(group: Group, subgroup: Subgroup) -> bool:
    """Conjugation scan: ``g h g^-1`` stays in ``H`` for every ``g`` and generator ``h``."""

    generators = list(subgroup.generators)
    if not generators:
        return True
    table = group.table
    conjugates = table[table[:, generators], group.inverses[:, None]]
    return bool(subgroup.mask[conjugates].all())


def is_abelian_subgroup(group: Group, subgroup: Subgroup) -> bool:
    generators = list(subgroup.generators)
    if len(generators) < 2:
        return True
    block = group.table[np.ix_(generators, generators)]
    return bool(np.array_equal(block, block.T))


def induced_group(
    group: Group,
    subgroup: Subgroup,
    *,
    label: Optional[str] = None,
    limits: Optional[Limits] = None,
) -> Tuple[Group, NDArray[np.int64]]:
    """``H`` as a standalone group plus ``index_map`` (local index -> parent index).

    Local indices follow increasing parent index.
    """

    elements = subgroup.elements
    position = np.full(group.order, -1, dtype=np.int64)
    position[elements] = np.arange(subgroup.size)
    table = position[group.table[np.ix_(elements, elements)]]
    identity = int(position[group.identity])
    resolved_label = label or f"{group.label}[{subgroup.size}]"
    standalone = Group(table, label=resolved_label, identity=identity, limits=limits)
    return standalone, np.array(elements, copy=True)


def _extend(
    group: Group,
    base_mask: NDArray[np.bool_],
    generators: Sequence[int],
    new_generator: int,
) -> NDArray[np.bool_]:
    """Close ``<base, new_generator>`` coset by coset.

    ``generators`` must generate the base subgroup. The result is kept as a union of
    right cosets ``H r``; it is closed once every ``r * s`` (``s`` a generator) lands
    inside it.
    """

    table = group.table
    base = np.flatnonzero(base_mask)
    mask = np.array(base_mask, copy=True)
    all_generators = [*generators, new_generator]
    representatives = [group.identity]
    position = 0
    while position < len(representatives):
        representative = representatives[position]
        for generator in all_generators:
            candidate = int(table[representative, generator])
            if not mask[candidate]:
                mask[table[base, candidate]] = True
                representatives.append(candidate)
        position += 1
    return mask


def _greedy_generators(group: Group, elements: NDArray[np.int64]) -> Tuple[int, ...]:
    mask = np.zeros(group.order, dtype=bool)
    mask[group.identity] = True
    accepted: List[int] = []
    for index in elements:
        element = int(index)
        if mask[element]:
            continue
        mask = _extend(group, mask, accepted, element)
        accepted.append(element)
    return tuple(accepted)


def _is_closed(group: Group, mask: NDArray[np.bool_]) -> bool:
    if not mask[group.identity]:
        return False
    members = np.flatnonzero(mask)
    return bool(mask[group.table[np.ix_(members, members)]].all())


def _to_bitset(mask: NDArray[np.bool_]) -> int:
    packed = np.packbits(mask, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


__all__ = [
    "Subgroup",
    "center",
    "centralizer",
    "cyclic_subgroup",
    "exponent",
    "full_subgroup",
    "induced_group",
    "is_abelian_subgroup",
    "is_normal",
    "join_subgroups",
    "omega1",
    "subgroup_exponent",
    "subgroup_from_elements",
    "subgroup_generated",
    "trivial_subgroup",
]

"""Catalog of small groups: complete through order 16, selected families beyond."""
from __future__ import annotations

import logging
from collections import Counter
from itertools import zip_longest
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import factorint, isprime
from sympy.utilities.iterables import partitions

from cdlattice.catalog.spec import build_group, parse_spec
from cdlattice.core.config import Limits
from cdlattice.core.exceptions import InvalidSpecError
from cdlattice.core.types import FamilyTag
from cdlattice.groups.constructors import dicyclic_label
from cdlattice.groups.group import Group
from cdlattice.lattice.subgroups import center, subgroup_exponent

logger = logging.getLogger(__name__)

COMPLETE_THROUGH_ORDER = 16
SMALL_GROUP_COUNTS: Dict[int, int] = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
    9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14,
}  # fmt: skip


class CatalogEntry(BaseModel):
    """A named construction recipe; ``tag`` is ``"<order>#<id>"`` for orders <= 16."""

    name: str
    order: int = Field(ge=1)
    recipe: str
    tag: Optional[str] = None
    families: Tuple[FamilyTag, ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _validate_recipe(self) -> "CatalogEntry":
        canonical = parse_spec(self.recipe).canonical
        if canonical != self.name:
            msg = f"recipe {self.recipe!r} builds {canonical!r}, not {self.name!r}"
            raise ValueError(msg)
        return self

    def build(self, *, limits: Optional[Limits] = None) -> Group:
        group = build_group(self.recipe, limits=limits)
        if group.order != self.order:
            msg = f"Recipe for {self.name} produced order {group.order}, expected {self.order}."
            raise InvalidSpecError(msg)
        return group


class Fingerprint(BaseModel):
    """Isomorphism invariants; distinct fingerprints prove two groups non-isomorphic."""

    abelian: bool
    exponent: int
    center_order: int
    center_exponent: int
    order_histogram: Tuple[Tuple[int, int], ...]
    square_count: int

    model_config = ConfigDict(frozen=True)


def fingerprint(group: Group) -> Fingerprint:
    centre = center(group)
    diagonal = group.table.diagonal()
    return Fingerprint(
        abelian=group.is_abelian(),
        exponent=group.exponent(),
        center_order=centre.size,
        center_exponent=subgroup_exponent(centre),
        order_histogram=tuple(group.order_histogram().items()),
        square_count=len(set(int(value) for value in diagonal)),
    )


def _entry(
    recipe: str,
    order: int,
    families: Sequence[FamilyTag],
    *,
    tag: Optional[str] = None,
) -> CatalogEntry:
    return CatalogEntry(
        name=parse_spec(recipe).canonical,
        order=order,
        recipe=recipe,
        tag=tag,
        families=tuple(families),
    )


def _small_groups() -> List[CatalogEntry]:
    """Every group of order <= 16, in SmallGroup numbering."""

    rows: List[Tuple[int, int, str, Tuple[FamilyTag, ...]]] = [
        (1, 1, "C1", ("cyclic", "abelian")),
        (4, 1, "C4", ("cyclic", "abelian")),
        (4, 2, "C2xC2", ("abelian", "elementary-abelian")),
        (6, 1, "D6", ("dihedral", "nonabelian")),
        (6, 2, "C6", ("cyclic", "abelian")),
        (8, 1, "C8", ("cyclic", "abelian")),
        (8, 2, "C4xC2", ("abelian",)),
        (8, 3, "D8", ("dihedral", "nonabelian")),
        (8, 4, "Q8", ("dicyclic", "equal-measure", "nonabelian")),
        (8, 5, "C2xC2xC2", ("abelian", "elementary-abelian")),
        (9, 1, "C9", ("cyclic", "abelian")),
        (9, 2, "C3xC3", ("abelian", "elementary-abelian")),
        (10, 1, "D10", ("dihedral", "nonabelian")),
        (10, 2, "C10", ("cyclic", "abelian")),
        (12, 1, "Dic3", ("dicyclic", "nonabelian")),
        (12, 2, "C12", ("cyclic", "abelian")),
        (12, 3, "A4", ("nonabelian",)),
        (12, 4, "D12", ("dihedral", "nonabelian")),
        (12, 5, "C6xC2", ("abelian",)),
        (14, 1, "D14", ("dihedral", "nonabelian")),
        (14, 2, "C14", ("cyclic", "abelian")),
        (15, 1, "C15", ("cyclic", "abelian")),
        (16, 1, "C16", ("cyclic", "abelian")),
        (16, 2, "C4xC4", ("abelian",)),
        (16, 3, "G16_3", ("nonabelian",)),
        (16, 4, "SDP(4,4,3)", ("metacyclic", "equal-measure", "nonabelian")),
        (16, 5, "C8xC2", ("abelian",)),
        (16, 6, "SDP(8,2,5)", ("metacyclic", "nonabelian")),
        (16, 7, "D16", ("dihedral", "nonabelian")),
        (16, 8, "SDP(8,2,3)", ("metacyclic", "nonabelian")),
        (16, 9, "Q16", ("dicyclic", "nonabelian")),
        (16, 10, "C4xC2xC2", ("abelian",)),
        (16, 11, "D8xC2", ("nonabelian",)),
        (16, 12, "Q8xC2", ("equal-measure", "nonabelian")),
        (16, 13, "Pauli", ("nonabelian",)),
        (16, 14, "C2xC2xC2xC2", ("abelian", "elementary-abelian")),
    ]
    for prime in (2, 3, 5, 7, 11, 13):
        rows.append((prime, 1, f"C{prime}", ("cyclic", "abelian", "elementary-abelian")))
    rows.sort(key=lambda row: (row[0], row[1]))
    return [_entry(recipe, order, families, tag=f"{order}#{index}") for order, index, recipe, families in rows]


def abelian_invariant_factors(order: int) -> List[Tuple[int, ...]]:
    """Invariant factors ``d1 >= d2 >= ...`` (``d_{i+1} | d_i``) of every abelian group of ``order``."""

    if order == 1:
        return [(1,)]
    per_prime: List[List[Tuple[int, ...]]] = []
    for prime, multiplicity in sorted(factorint(order).items()):
        options = []
        for partition in partitions(multiplicity):
            parts = sorted(
                (size for size, count in partition.items() for _ in range(count)), reverse=True
            )
            options.append(tuple(prime**part for part in parts))
        per_prime.append(options)

    combos: List[Tuple[int, ...]] = [()]
    for options in per_prime:
        merged: List[Tuple[int, ...]] = []
        for existing in combos:
            for option in options:
                factors = tuple(
                    a * b for a, b in zip_longest(existing, option, fillvalue=1)
                )
                merged.append(factors)
        combos = merged
    return sorted(combos, reverse=True)


def _abelian_recipe(factors: Sequence[int]) -> str:
    return "x".join(f"C{d}" for d in factors)


def _abelian_families(factors: Sequence[int]) -> Tuple[FamilyTag, ...]:
    families: List[FamilyTag] = ["abelian"]
    if len(factors) == 1:
        families.insert(0, "cyclic")
    if isprime(factors[0]) and all(d == factors[0] for d in factors):
        families.append("elementary-abelian")
    return tuple(families)


def _extended_groups() -> List[CatalogEntry]:
    extended: List[CatalogEntry] = []
    for order in range(COMPLETE_THROUGH_ORDER + 1, 65):
        for factors in abelian_invariant_factors(order):
            extended.append(_entry(_abelian_recipe(factors), order, _abelian_families(factors)))
    for order in range(65, 129):
        extended.append(_entry(f"C{order}", order, _abelian_families((order,))))
    for order in range(COMPLETE_THROUGH_ORDER + 2, 129, 2):
        extended.append(_entry(f"D{order}", order, ("dihedral", "nonabelian")))
    for n in range(COMPLETE_THROUGH_ORDER // 4 + 1, 33):
        extended.append(_entry(dicyclic_label(n), 4 * n, ("dicyclic", "nonabelian")))

    extended.append(_entry("Q8xC2xC2", 32, ("equal-measure", "nonabelian")))
    extended.append(_entry("Q8xC2xC2xC2", 64, ("equal-measure", "nonabelian")))
    extended.append(_entry("SDP(9,9,4)", 81, ("metacyclic", "equal-measure", "nonabelian")))
    for m, n, t in ((7, 3, 2), (5, 4, 2), (9, 3, 4), (8, 4, 3), (16, 2, 7), (16, 2, 9), (8, 8, 5)):
        extended.append(_entry(f"SDP({m},{n},{t})", m * n, ("metacyclic", "nonabelian")))
    return extended


CATALOG: Dict[str, CatalogEntry] = {
    entry.name: entry for entry in (*_small_groups(), *_extended_groups())
}


def get_entry(name: str) -> CatalogEntry:
    """Return the catalog entry called ``name``."""

    try:
        return CATALOG[name]
    except KeyError as exc:
        raise InvalidSpecError(f"Unknown catalog entry: {name}") from exc


def register_entry(entry: CatalogEntry) -> None:
    """Register or replace a catalog entry."""

    CATALOG[entry.name] = entry


def entries(
    min_order: int = 1,
    max_order: Optional[int] = None,
    families: Optional[Iterable[FamilyTag]] = None,
) -> List[CatalogEntry]:
    """Entries with ``min_order <= order <= max_order`` carrying any of ``families``.

    Sorted by ``(order, name)``.
    """

    wanted = set(families or ())
    selected = [
        entry
        for entry in CATALOG.values()
        if entry.order >= min_order
        and (max_order is None or entry.order <= max_order)
        and (not wanted or wanted.intersection(entry.families))
    ]
    return sorted(selected, key=lambda entry: (entry.order, entry.name))


def counts_by_order(max_order: int = COMPLETE_THROUGH_ORDER) -> Dict[int, int]:
    counter = Counter(entry.order for entry in entries(1, max_order))
    return {order: counter.get(order, 0) for order in range(1, max_order + 1)}


__all__ = [
    "CATALOG",
    "COMPLETE_THROUGH_ORDER",
    "CatalogEntry",
    "Fingerprint",
    "SMALL_GROUP_COUNTS",
    "abelian_invariant_factors",
    "counts_by_order",
    "entries",
    "fingerprint",
    "get_entry",
    "register_entry",
]

from __future__ import annotations

from itertools import combinations

import pytest

from cdlattice.catalog.catalog import (
    CATALOG,
    COMPLETE_THROUGH_ORDER,
    SMALL_GROUP_COUNTS,
    CatalogEntry,
    abelian_invariant_factors,
    counts_by_order,
    entries,
    fingerprint,
    get_entry,
    register_entry,
)
from cdlattice.core.exceptions import InvalidSpecError


def test_catalog_is_complete_through_order_sixteen() -> None:
    assert counts_by_order() == SMALL_GROUP_COUNTS
    assert sum(SMALL_GROUP_COUNTS.values()) == 41


def test_small_groups_are_pairwise_non_isomorphic() -> None:
    small = entries(1, COMPLETE_THROUGH_ORDER)
    prints = {}
    for entry in small:
        group = entry.build()
        assert group.order == entry.order
        prints[entry.name] = (entry.order, fingerprint(group))

    for first, second in combinations(small, 2):
        if first.order == second.order:
            assert prints[first.name] != prints[second.name], (first.name, second.name)


def test_small_group_tags_are_unique() -> None:
    tags = [entry.tag for entry in entries(1, COMPLETE_THROUGH_ORDER)]

    assert None not in tags
    assert len(set(tags)) == len(tags)
    assert get_entry("Q8").tag == "8#4"
    assert get_entry("SDP(4,4,3)").tag == "16#4"
    assert get_entry("C2xC2xC2xC2").tag == "16#14"


def test_entries_are_sorted_and_filtered() -> None:
    selected = entries(8, 8)

    assert [entry.name for entry in selected] == ["C2xC2xC2", "C4xC2", "C8", "D8", "Q8"]


def test_family_filter() -> None:
    names = {entry.name for entry in entries(families=["equal-measure"])}

    assert names == {"Q8", "SDP(4,4,3)", "Q8xC2", "Q8xC2xC2", "Q8xC2xC2xC2", "SDP(9,9,4)"}


def test_extended_families() -> None:
    assert len(entries(32, 32, ["abelian"])) == 7
    assert "D128" in CATALOG
    assert "C128" in CATALOG
    assert "Q32" in CATALOG
    assert "Dic6" in CATALOG
    assert all(entry.order <= 128 for entry in CATALOG.values())


def test_get_entry_unknown_name() -> None:
    with pytest.raises(InvalidSpecError):
        get_entry("M11")


@pytest.mark.parametrize(
    ("order", "factors"),
    [
        (1, [(1,)]),
        (8, [(8,), (4, 2), (2, 2, 2)]),
        (12, [(12,), (6, 2)]),
        (36, [(36,), (18, 2), (12, 3), (6, 6)]),
    ],
)
def test_abelian_invariant_factors(order: int, factors: list[tuple[int, ...]]) -> None:
    assert abelian_invariant_factors(order) == factors


def test_abelian_invariant_factor_counts() -> None:
    assert len(abelian_invariant_factors(16)) == 5
    assert len(abelian_invariant_factors(64)) == 11


def test_entry_recipe_must_match_name() -> None:
    with pytest.raises(ValueError):
        CatalogEntry(name="C4", order=4, recipe="C2xC2")


def test_register_entry() -> None:
    entry = CatalogEntry(name="D8xC3", order=24, recipe="D8 x C3", families=("nonabelian",))
    register_entry(entry)
    try:
        assert get_entry("D8xC3").build().order == 24
    finally:
        CATALOG.pop("D8xC3")


def test_build_checks_order() -> None:
    entry = CatalogEntry(name="C4", order=5, recipe="C4")

    with pytest.raises(InvalidSpecError):
        entry.build()

from __future__ import annotations

import numpy as np
import pytest
from sympy import factorint

from cdlattice.catalog.catalog import CatalogEntry, entries
from cdlattice.catalog.spec import build_group
from cdlattice.core.exceptions import InvalidParameterError
from cdlattice.groups.constructors import make_cyclic, semidirect_cyclic
from cdlattice.groups.group import Group
from cdlattice.lattice.lattice import all_subgroups
from cdlattice.lattice.subgroups import (
    Subgroup,
    center,
    centralizer,
    cyclic_subgroup,
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

# D8 indexing: 0..3 are rotations r^k, 4..7 are reflections s r^k.
ROTATION = 1
HALF_TURN = 2
REFLECTION = 4


def test_cyclic_subgroup_elements() -> None:
    group = make_cyclic(6)
    sub = cyclic_subgroup(group, 2)

    assert sub.size == 3
    assert list(sub.elements) == [0, 2, 4]
    assert sub.generators == (2,)


def test_members_bitset_matches_elements() -> None:
    sub = cyclic_subgroup(make_cyclic(4), 2)

    assert sub.members == 0b0101
    assert 2 in sub
    assert 1 not in sub


def test_equality_uses_parent_and_members() -> None:
    group = make_cyclic(4)
    other = make_cyclic(4)

    assert cyclic_subgroup(group, 1) == cyclic_subgroup(group, 3)
    assert hash(cyclic_subgroup(group, 1)) == hash(cyclic_subgroup(group, 3))
    assert cyclic_subgroup(group, 2) != cyclic_subgroup(other, 2)


def test_generated_subgroup_of_dihedral(d8: Group) -> None:
    assert subgroup_generated(d8, [ROTATION, REFLECTION]).size == 8
    assert subgroup_generated(d8, [HALF_TURN, REFLECTION]).size == 4
    assert subgroup_generated(d8, []).size == 1


def test_generated_subgroup_rejects_bad_index(d8: Group) -> None:
    with pytest.raises(InvalidParameterError):
        subgroup_generated(d8, [8])


def test_generators_regenerate_the_subgroup(d8: Group) -> None:
    sub = subgroup_generated(d8, [HALF_TURN, REFLECTION, 6])
    rebuilt = subgroup_generated(d8, sub.generators)

    assert rebuilt == sub


def test_join_of_two_reflections(d8: Group) -> None:
    first = cyclic_subgroup(d8, REFLECTION)
    second = cyclic_subgroup(d8, REFLECTION + 1)

    assert join_subgroups(d8, first, second) == full_subgroup(d8)


def test_subgroup_from_elements_checks_closure() -> None:
    group = make_cyclic(4)

    assert subgroup_from_elements(group, [0, 1]) is None
    assert subgroup_from_elements(group, [1, 3]) is None
    found = subgroup_from_elements(group, [0, 2])
    assert found is not None
    assert found.size == 2


def test_centralizer_and_center_of_dihedral(d8: Group) -> None:
    rotations = cyclic_subgroup(d8, ROTATION)

    assert centralizer(d8, rotations) == rotations
    assert centralizer(d8, trivial_subgroup(d8)) == full_subgroup(d8)
    assert center(d8) == cyclic_subgroup(d8, HALF_TURN)
    assert centralizer(d8, cyclic_subgroup(d8, REFLECTION)).size == 4


def test_center_of_quaternion_group(q8: Group) -> None:
    assert center(q8).size == 2


def test_omega1() -> None:
    assert omega1(make_cyclic(4), 2).size == 2
    assert omega1(make_cyclic(6), 3).size == 3


def test_omega1_of_quaternion_group_is_center(q8: Group) -> None:
    assert omega1(q8, 2) == center(q8)


def test_omega1_of_dihedral_is_whole_group(d8: Group) -> None:
    assert omega1(d8, 2) == full_subgroup(d8)


def test_omega1_rejects_non_prime_and_non_divisor() -> None:
    with pytest.raises(InvalidParameterError):
        omega1(make_cyclic(4), 4)
    with pytest.raises(InvalidParameterError):
        omega1(make_cyclic(4), 3)


def test_normality(d8: Group) -> None:
    assert is_normal(d8, cyclic_subgroup(d8, ROTATION))
    assert is_normal(d8, center(d8))
    assert not is_normal(d8, cyclic_subgroup(d8, REFLECTION))
    assert is_normal(d8, trivial_subgroup(d8))


def test_abelian_subgroup_checks(d8: Group) -> None:
    assert is_abelian_subgroup(d8, cyclic_subgroup(d8, ROTATION))
    assert is_abelian_subgroup(d8, subgroup_generated(d8, [HALF_TURN, REFLECTION]))
    assert not is_abelian_subgroup(d8, full_subgroup(d8))


def test_subgroup_exponent(d8: Group) -> None:
    assert subgroup_exponent(full_subgroup(d8)) == 4
    assert subgroup_exponent(subgroup_generated(d8, [HALF_TURN, REFLECTION])) == 2
    assert subgroup_exponent(trivial_subgroup(d8)) == 1


def test_induced_group_keeps_parent_indices(d8: Group) -> None:
    rotations = cyclic_subgroup(d8, ROTATION)

    standalone, index_map = induced_group(d8, rotations)

    assert standalone.order == 4
    assert standalone.is_abelian()
    assert standalone.order_histogram() == {1: 1, 2: 1, 4: 2}
    assert np.array_equal(index_map, [0, 1, 2, 3])


def test_mask_shape_is_validated() -> None:
    with pytest.raises(InvalidParameterError):
        Subgroup(make_cyclic(4), np.ones(3, dtype=bool))


@pytest.mark.parametrize("elements", [[1, 2, 3], [0, 1]])
def test_constructor_rejects_masks_that_are_not_subgroups(elements: list[int]) -> None:
    group = make_cyclic(4)
    mask = np.zeros(4, dtype=bool)
    mask[elements] = True

    with pytest.raises(InvalidParameterError, match="not a subgroup"):
        Subgroup(group, mask)


def test_constructor_accepts_closed_mask() -> None:
    group = make_cyclic(4)

    sub = Subgroup(group, np.array([True, False, True, False]))

    assert sub == cyclic_subgroup(group, 2)


@pytest.mark.parametrize("spec", ["D8", "Q8", "A4", "D12"])
def test_centralizer_reverses_containment(spec: str) -> None:
    group = build_group(spec)
    lattice = all_subgroups(group)
    centralizers = [centralizer(group, sub) for sub in lattice]

    for small in range(len(lattice)):
        for large in range(len(lattice)):
            if lattice.leq(small, large):
                assert centralizers[large].issubset(centralizers[small])


@pytest.mark.parametrize("entry", entries(2, 16), ids=lambda entry: entry.name)
def test_omega1_is_normal(entry: CatalogEntry) -> None:
    group = entry.build()

    for prime in factorint(group.order):
        assert is_normal(group, omega1(group, int(prime)))


@pytest.mark.parametrize(("m", "n", "t"), [(4, 4, 3), (7, 3, 2), (9, 9, 4), (8, 2, 5), (5, 4, 2)])
def test_semidirect_base_is_normal_cyclic(m: int, n: int, t: int) -> None:
    group = semidirect_cyclic(m, n, t)

    base = subgroup_from_elements(group, [i * n for i in range(m)])

    assert base is not None
    assert base.size == m
    assert is_normal(group, base)
    assert base == cyclic_subgroup(group, n)

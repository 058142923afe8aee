from __future__ import annotations

import numpy as np
import pytest

from cdlattice.core.config import Limits
from cdlattice.core.exceptions import CapacityError, InvalidParameterError
from cdlattice.groups.constructors import make_cyclic, make_dihedral
from cdlattice.groups.group import Group, element_info, element_order

# Latin square with identity 0 and x*x = 0 everywhere; not a group.
NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def test_cyclic_group_basic_invariants() -> None:
    group = make_cyclic(6)

    assert group.order == 6
    assert len(group) == 6
    assert group.identity == 0
    assert group.label == "C6"
    assert group.is_abelian()
    assert group.exponent() == 6
    assert group.element_order(1) == 6
    assert group.element_order(2) == 3
    assert group.element_order(3) == 2
    assert group.inverse(2) == 4


def test_power_handles_negative_exponents() -> None:
    group = make_cyclic(6)

    assert group.power(1, 4) == 4
    assert group.power(1, -1) == 5
    assert group.power(2, 3) == 0


def test_order_histogram_of_dihedral_group() -> None:
    group = make_dihedral(8)

    assert group.order_histogram() == {1: 1, 2: 5, 4: 2}
    assert not group.is_abelian()
    assert group.exponent() == 4


def test_element_info_helpers_agree() -> None:
    group = make_cyclic(5)

    info = element_info(group, 2)
    assert info.order == 5
    assert info.inverse == 3
    assert element_order(group, 0) == 1


def test_identity_is_detected_when_not_index_zero() -> None:
    # C2 with the identity stored at index 1
    group = Group([[1, 0], [0, 1]], label="C2")

    assert group.identity == 1
    assert group.inverse(0) == 0


def test_rejects_non_square_table() -> None:
    with pytest.raises(InvalidParameterError):
        Group([[0, 1, 2], [1, 2, 0]], label="bad")


def test_rejects_entries_out_of_range() -> None:
    with pytest.raises(InvalidParameterError):
        Group([[0, 2], [2, 0]], label="bad")


def test_rejects_table_without_identity() -> None:
    with pytest.raises(InvalidParameterError, match="identity"):
        Group([[0, 0], [0, 0]], label="bad")


def test_rejects_non_associative_table() -> None:
    with pytest.raises(InvalidParameterError, match="not associative"):
        Group(NON_ASSOCIATIVE_LOOP, label="loop")


def test_order_above_limit_raises_capacity_error() -> None:
    with pytest.raises(CapacityError) as exc_info:
        make_cyclic(20, limits=Limits(max_order=10))

    assert exc_info.value.limit == 10
    assert exc_info.value.code == "capacity-error"


def test_default_limit_refuses_large_orders() -> None:
    with pytest.raises(CapacityError):
        make_cyclic(200)


def test_table_is_read_only() -> None:
    group = make_cyclic(3)

    with pytest.raises(ValueError):
        group.table[0, 0] = 1


def test_relabel_shares_the_table() -> None:
    group = make_cyclic(4)
    renamed = group.relabel("Z4")

    assert renamed.label == "Z4"
    assert renamed.same_table(group)
    assert renamed.table is group.table
    assert np.array_equal(renamed.element_orders(), group.element_orders())


def test_index_out_of_range_is_rejected() -> None:
    group = make_cyclic(3)

    with pytest.raises(InvalidParameterError):
        group.element_order(3)

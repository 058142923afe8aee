"""Explicit finite groups stored as Cayley tables over dense element indices."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray
from sympy import ilcm

from cdlattice.core.config import Limits, resolve_limits
from cdlattice.core.exceptions import (
    CapacityError,
    InternalInconsistencyError,
    InvalidParameterError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ElementInfo:
    """Multiplicative order and inverse of a single element."""

    index: int
    order: int
    inverse: int


class Group:
    """Finite group given by its Cayley table.

    ``table[i, j]`` is the index of ``g_i * g_j``. The table is the single source of
    truth and is validated once at construction: closure, two-sided identity,
    inverses and full associativity. Instances are read-only afterwards.
    """

    __slots__ = ("_table", "_identity", "_label", "_inverses", "_orders")

    def __init__(
        self,
        table: ArrayLike,
        *,
        label: str,
        identity: Optional[int] = None,
        limits: Optional[Limits] = None,
    ) -> None:
        resolved = resolve_limits(limits)
        array = np.array(table, dtype=np.int64, copy=True)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
            msg = f"Cayley table must be a non-empty square array, got shape {array.shape}."
            raise InvalidParameterError(msg)

        order = int(array.shape[0])
        check_order(order, resolved, label=label)

        if array.min() < 0 or array.max() >= order:
            msg = f"Cayley table entries for {label} must lie in [0, {order})."
            raise InvalidParameterError(msg)

        resolved_identity = _find_identity(array, identity, label)
        inverses = _find_inverses(array, resolved_identity, label)
        _check_associativity(array, label)

        array.setflags(write=False)
        inverses.setflags(write=False)
        orders = _element_orders(array, resolved_identity)
        orders.setflags(write=False)

        self._table: NDArray[np.int64] = array
        self._identity = resolved_identity
        self._label = label
        self._inverses: NDArray[np.int64] = inverses
        self._orders: NDArray[np.int64] = orders
        logger.debug("Constructed group %s of order %s", label, order)

    @property
    def order(self) -> int:
        return int(self._table.shape[0])

    @property
    def table(self) -> NDArray[np.int64]:
        return self._table

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def label(self) -> str:
        return self._label

    @property
    def inverses(self) -> NDArray[np.int64]:
        return self._inverses

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group(label={self._label!r}, order={self.order})"

    def multiply(self, i: int, j: int) -> int:
        return int(self._table[i, j])

    def inverse(self, i: int) -> int:
        self._check_index(i)
        return int(self._inverses[i])

    def power(self, i: int, exponent: int) -> int:
        """Return ``g_i ** exponent``; negative exponents use the inverse."""

        self._check_index(i)
        steps = exponent % int(self._orders[i])
        result = self._identity
        for _ in range(steps):
            result = int(self._table[result, i])
        return result

    def element_orders(self) -> NDArray[np.int64]:
        return self._orders

    def element_order(self, i: int) -> int:
        self._check_index(i)
        return int(self._orders[i])

    def element_info(self, i: int) -> ElementInfo:
        self._check_index(i)
        return ElementInfo(index=i, order=int(self._orders[i]), inverse=int(self._inverses[i]))

    def exponent(self) -> int:
        return int(reduce(ilcm, (int(value) for value in self._orders), 1))

    def order_histogram(self) -> Dict[int, int]:
        counts = Counter(int(value) for value in self._orders)
        return dict(sorted(counts.items()))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._table, self._table.T))

    def same_table(self, other: "Group") -> bool:
        """True when both groups share order, identity index and every table entry."""

        return (
            self.order == other.order
            and self._identity == other.identity
            and bool(np.array_equal(self._table, other.table))
        )

    def relabel(self, label: str) -> "Group":
        """Return a copy carrying ``label``; the table is shared, not re-validated."""

        clone = object.__new__(Group)
        clone._table = self._table
        clone._identity = self._identity
        clone._label = label
        clone._inverses = self._inverses
        clone._orders = self._orders
        return clone

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.order:
            msg = f"Element index {i} out of range for {self._label} of order {self.order}."
            raise InvalidParameterError(msg)


def element_order(group: Group, i: int) -> int:
    """Least ``k >= 1`` with ``g_i ** k`` equal to the identity."""

    return group.element_order(i)


def element_info(group: Group, i: int) -> ElementInfo:
    return group.element_info(i)


def check_order(order: int, limits: Limits, *, label: str) -> None:
    """Refuse orders above the configured caps before any table is built."""

    if order > limits.max_associativity_order:
        msg = (
            f"{label} has order {order}, above the associativity-check ceiling "
            f"{limits.max_associativity_order}."
        )
        raise CapacityError(msg, limit=limits.max_associativity_order)
    if order > limits.max_order:
        msg = f"{label} has order {order}, above the configured max order {limits.max_order}."
        raise CapacityError(msg, limit=limits.max_order)


def _find_identity(table: NDArray[np.int64], identity: Optional[int], label: str) -> int:
    order = table.shape[0]
    indices = np.arange(order)
    if identity is not None:
        if not 0 <= identity < order:
            raise InvalidParameterError(f"Identity index {identity} out of range for {label}.")
        candidates = [identity]
    else:
        candidates = list(range(order))

    for candidate in candidates:
        if np.array_equal(table[candidate], indices) and np.array_equal(table[:, candidate], indices):
            return int(candidate)
    raise InvalidParameterError(f"Cayley table for {label} has no two-sided identity.")


def _find_inverses(table: NDArray[np.int64], identity: int, label: str) -> NDArray[np.int64]:
    order = table.shape[0]
    indices = np.arange(order)
    hits = table == identity
    has_right = hits.any(axis=1)
    if not has_right.all():
        missing = int(np.flatnonzero(~has_right)[0])
        raise InvalidParameterError(f"Element {missing} of {label} has no inverse.")
    inverses = hits.argmax(axis=1).astype(np.int64)
    if not (table[inverses, indices] == identity).all():
        missing = int(np.flatnonzero(table[inverses, indices] != identity)[0])
        raise InvalidParameterError(f"Element {missing} of {label} has no two-sided inverse.")
    return inverses


def _check_associativity(table: NDArray[np.int64], label: str) -> None:
    for a in range(table.shape[0]):
        left = table[table[a]]  # left[b, c] = (a*b)*c
        right = table[a][table]  # right[b, c] = a*(b*c)
        if not np.array_equal(left, right):
            b, c = (int(value) for value in np.argwhere(left != right)[0])
            msg = f"Cayley table for {label} is not associative at ({a}, {b}, {c})."
            raise InvalidParameterError(msg)


def _element_orders(table: NDArray[np.int64], identity: int) -> NDArray[np.int64]:
    order = table.shape[0]
    indices = np.arange(order)
    orders = np.zeros(order, dtype=np.int64)
    powers = indices.copy()
    for exponent in range(1, order + 1):
        reached = (powers == identity) & (orders == 0)
        orders[reached] = exponent
        if (orders > 0).all():
            return orders
        powers = table[powers, indices]
    raise InternalInconsistencyError("Element order exceeded group order.")


__all__ = ["ElementInfo", "Group", "check_order", "element_info", "element_order"]

"""Full subgroup lattice: enumeration, containment, meet/join and Hasse covers."""
from __future__ import annotations

import logging
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict

from cdlattice.core.config import Limits, resolve_limits
from cdlattice.core.exceptions import (
    CapacityError,
    InternalInconsistencyError,
    InvalidParameterError,
    NotASublatticeError,
    UnsupportedError,
)
from cdlattice.groups.group import Group, check_order
from cdlattice.lattice.subgroups import (
    Subgroup,
    cyclic_subgroup,
    is_normal,
    join_subgroups,
)

logger = logging.getLogger(__name__)


class ModularityResult(BaseModel):
    """Outcome of a modular-law check; ``counterexample`` is an ``(A, B, C)`` id triple."""

    model_config = ConfigDict(frozen=True)

    holds: bool
    counterexample: Optional[Tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


class SubgroupLattice:
    """Every subgroup of ``group`` in canonical order; ids are list positions.

    Id ``0`` is the trivial subgroup and the last id is the whole group. The dense
    containment matrix and the Hasse covers are built on first use.
    """

    def __init__(
        self,
        group: Group,
        subgroups: Sequence[Subgroup],
        *,
        limits: Optional[Limits] = None,
    ) -> None:
        if not subgroups:
            raise InternalInconsistencyError("A subgroup lattice needs at least one subgroup.")
        ordered = tuple(subgroups)
        self._group = group
        self._limits = resolve_limits(limits)
        self._subgroups = ordered
        self._index: Dict[int, int] = {sub.members: i for i, sub in enumerate(ordered)}
        if len(self._index) != len(ordered):
            raise InternalInconsistencyError("Subgroup list contains duplicates.")
        if ordered[0].size != 1 or ordered[-1].size != group.order:
            raise InternalInconsistencyError("Canonical order must start trivial and end full.")
        self._joins: Dict[Tuple[int, int], int] = {}

    @property
    def group(self) -> Group:
        return self._group

    @property
    def subgroups(self) -> Tuple[Subgroup, ...]:
        return self._subgroups

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self._subgroups) - 1

    @property
    def limits(self) -> Limits:
        return self._limits

    def __len__(self) -> int:
        return len(self._subgroups)

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self._subgroups)

    def __getitem__(self, subgroup_id: int) -> Subgroup:
        self._check_id(subgroup_id)
        return self._subgroups[subgroup_id]

    def __repr__(self) -> str:
        return f"SubgroupLattice(group={self._group.label!r}, size={len(self)})"

    def find(self, members: Union[int, Subgroup]) -> Optional[int]:
        """Id of the subgroup with this bitset, or ``None``."""

        key = members.members if isinstance(members, Subgroup) else int(members)
        return self._index.get(key)

    def id_of(self, subgroup: Subgroup) -> int:
        found = self.find(subgroup)
        if found is None:
            msg = f"Subgroup of order {subgroup.size} missing from the lattice of {self._group.label}."
            raise InternalInconsistencyError(msg)
        return found

    def sizes(self) -> NDArray[np.int64]:
        return np.array([sub.size for sub in self._subgroups], dtype=np.int64)

    def leq(self, first: int, second: int) -> bool:
        self._check_id(first)
        self._check_id(second)
        return self._subgroups[first].issubset(self._subgroups[second])

    def meet(self, first: int, second: int) -> int:
        self._check_id(first)
        self._check_id(second)
        bits = self._subgroups[first].members & self._subgroups[second].members
        found = self._index.get(bits)
        if found is None:
            raise InternalInconsistencyError(f"Intersection of ids {first} and {second} missing.")
        return found

    def join(self, first: int, second: int) -> int:
        self._check_id(first)
        self._check_id(second)
        if self.leq(first, second):
            return second
        if self.leq(second, first):
            return first
        key = (min(first, second), max(first, second))
        cached = self._joins.get(key)
        if cached is not None:
            return cached
        joined = join_subgroups(self._group, self._subgroups[first], self._subgroups[second])
        found = self.id_of(joined)
        self._joins[key] = found
        return found

    def meet_all(self, ids: Iterable[int]) -> int:
        result = self.top
        for subgroup_id in ids:
            result = self.meet(result, subgroup_id)
        return result

    def join_all(self, ids: Iterable[int]) -> int:
        result = self.bottom
        for subgroup_id in ids:
            result = self.join(result, subgroup_id)
        return result

    def is_cyclic(self, subgroup_id: int) -> bool:
        """True when some member's order equals the subgroup's size."""

        subgroup = self[subgroup_id]
        orders = self._group.element_orders()[subgroup.elements]
        return bool((orders == subgroup.size).any())

    def cyclic_ids(self) -> List[int]:
        return [i for i in range(len(self)) if self.is_cyclic(i)]

    def normal_ids(self) -> List[int]:
        return [i for i, sub in enumerate(self._subgroups) if is_normal(self._group, sub)]

    @property
    def has_hasse(self) -> bool:
        return len(self) <= self._limits.max_hasse_subgroups

    @cached_property
    def containment(self) -> NDArray[np.bool_]:
        """``containment[a, b]`` is true when subgroup ``a`` lies inside subgroup ``b``."""

        self._require_dense()
        incidence = np.zeros((len(self), self._group.order), dtype=np.float32)
        for i, sub in enumerate(self._subgroups):
            incidence[i, sub.elements] = 1.0
        overlap = incidence @ incidence.T
        sizes = incidence.sum(axis=1)
        matrix = overlap == sizes[:, None]
        matrix.setflags(write=False)
        return matrix

    @cached_property
    def hasse(self) -> Tuple[Tuple[int, int], ...]:
        """Cover pairs ``(lower, upper)`` sorted by lower id, then upper id."""

        strict = self.containment & ~np.eye(len(self), dtype=bool)
        as_float = strict.astype(np.float32)
        # a < c < b for some c
        two_step = (as_float @ as_float) > 0
        covers = np.argwhere(strict & ~two_step)
        logger.debug("Hasse diagram of %s has %s covers", self._group.label, len(covers))
        return tuple((int(lower), int(upper)) for lower, upper in covers)

    def covers(self, subgroup_id: int) -> List[int]:
        """Ids covering ``subgroup_id`` in the Hasse diagram."""

        self._check_id(subgroup_id)
        return [upper for lower, upper in self.hasse if lower == subgroup_id]

    def is_closed(self, members: Iterable[int]) -> bool:
        ids = set(members)
        for first, second in combinations_with_replacement(sorted(ids), 2):
            if self.meet(first, second) not in ids or self.join(first, second) not in ids:
                return False
        return True

    def is_modular(self, members: Optional[Iterable[int]] = None) -> ModularityResult:
        """Check ``A <= C  =>  A v (B ^ C) == (A v B) ^ C`` over ``members``.

        ``members`` defaults to the whole lattice and must be meet/join closed.
        """

        ids = sorted(set(range(len(self)) if members is None else members))
        for subgroup_id in ids:
            self._check_id(subgroup_id)
        if not self.is_closed(ids):
            raise NotASublatticeError("Member set is not closed under meet and join.")

        for a in ids:
            for c in ids:
                if not self.leq(a, c):
                    continue
                for b in ids:
                    lhs = self.join(a, self.meet(b, c))
                    rhs = self.meet(self.join(a, b), c)
                    if lhs != rhs:
                        return ModularityResult(holds=False, counterexample=(a, b, c))
        return ModularityResult(holds=True)

    def _require_dense(self) -> None:
        if not self.has_hasse:
            msg = (
                f"Lattice of {self._group.label} has {len(self)} subgroups, above the Hasse cap "
                f"{self._limits.max_hasse_subgroups}."
            )
            raise UnsupportedError(msg)

    def _check_id(self, subgroup_id: int) -> None:
        if not 0 <= subgroup_id < len(self._subgroups):
            raise InvalidParameterError(f"Subgroup id {subgroup_id} out of range.")


def all_subgroups(group: Group, *, limits: Optional[Limits] = None) -> SubgroupLattice:
    """Enumerate every subgroup as the join-closure of the cyclic subgroups.

    Each round joins the subgroups found in the previous round with every cyclic
    subgroup they do not already contain, until a round finds nothing new.
    """

    resolved = resolve_limits(limits)
    check_order(group.order, resolved, label=group.label)
    cap = resolved.max_subgroups

    known: Dict[int, Subgroup] = {}
    cyclics: List[Subgroup] = []
    for element in range(group.order):
        sub = cyclic_subgroup(group, element)
        if sub.members not in known:
            known[sub.members] = sub
            cyclics.append(sub)
    _check_capacity(group, len(known), cap)
    logger.debug("%s: %s cyclic subgroups", group.label, len(cyclics))

    frontier = list(cyclics)
    rounds = 0
    while frontier:
        rounds += 1
        discovered: List[Subgroup] = []
        for base in frontier:
            for cyclic in cyclics:
                if cyclic.issubset(base):
                    continue
                joined = join_subgroups(group, base, cyclic)
                if joined.members in known:
                    continue
                known[joined.members] = joined
                discovered.append(joined)
                _check_capacity(group, len(known), cap)
        logger.debug("%s: join round %s found %s subgroups", group.label, rounds, len(discovered))
        frontier = discovered

    ordered = sorted(known.values(), key=Subgroup.canonical_key)
    logger.debug("%s: %s subgroups in total", group.label, len(ordered))
    return SubgroupLattice(group, ordered, limits=resolved)


def meet(lattice: SubgroupLattice, first: int, second: int) -> int:
    return lattice.meet(first, second)


def join(lattice: SubgroupLattice, first: int, second: int) -> int:
    return lattice.join(first, second)


def is_modular(lattice: SubgroupLattice, members: Iterable[int]) -> ModularityResult:
    return lattice.is_modular(members)


def _check_capacity(group: Group, count: int, cap: int) -> None:
    if count > cap:
        msg = f"{group.label} has more than {cap} subgroups (found {count} so far)."
        raise CapacityError(msg, limit=cap, partial_count=count)


__all__ = [
    "ModularityResult",
    "SubgroupLattice",
    "all_subgroups",
    "is_modular",
    "join",
    "meet",
]

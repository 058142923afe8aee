"""Chermak-Delgado measures, the Chermak-Delgado lattice and its structural checks."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cdlattice.core.config import Limits
from cdlattice.core.exceptions import InternalInconsistencyError, InvalidParameterError
from cdlattice.groups.group import Group
from cdlattice.lattice.lattice import SubgroupLattice, all_subgroups
from cdlattice.lattice.subgroups import (
    Subgroup,
    centralizer,
    induced_group,
    is_abelian_subgroup,
    is_normal,
)

logger = logging.getLogger(__name__)

DUALITY_INEQUALITY = "duality-inequality"
DOUBLE_CENTRALIZER = "double-centralizer"
MEET_JOIN_CLOSURE = "meet-join-closure"
MODULARITY = "modularity"
SELF_DUALITY = "self-duality"
MIN_MEMBER_ABELIAN = "min-member-abelian"
MIN_MEMBER_CONTAINS_CENTER = "min-member-contains-center"
MIN_MEMBER_NORMAL = "min-member-normal"
MAX_MEMBER_NORMAL = "max-member-normal"
MAX_MEMBER_CD_EQUAL = "max-member-cd-equal"

PROPERTY_NAMES: Tuple[str, ...] = (
    DUALITY_INEQUALITY,
    DOUBLE_CENTRALIZER,
    MEET_JOIN_CLOSURE,
    MODULARITY,
    SELF_DUALITY,
    MIN_MEMBER_ABELIAN,
    MIN_MEMBER_CONTAINS_CENTER,
    MIN_MEMBER_NORMAL,
    MAX_MEMBER_NORMAL,
    MAX_MEMBER_CD_EQUAL,
)


class MeasureRow(BaseModel):
    """Measure of one subgroup: ``|H| * |C_G(H)|``."""

    id: int = Field(ge=0)
    size: int = Field(ge=1)
    centralizer_id: int = Field(ge=0)
    centralizer_size: int = Field(ge=1)
    measure: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _validate_measure(self) -> "MeasureRow":
        if self.measure != self.size * self.centralizer_size:
            msg = "measure must equal size * centralizer_size"
            raise ValueError(msg)
        return self


class PropertyCheck(BaseModel):
    """A named structural check; ``witness`` describes the first failure."""

    name: str
    passed: bool
    witness: Optional[str] = None

    model_config = ConfigDict(frozen=True)


class CDReport(BaseModel):
    """Chermak-Delgado data for one group and its complete subgroup lattice."""

    group: str
    order: int = Field(ge=1)
    measures: List[MeasureRow]
    m_star: int = Field(ge=1)
    cd_members: List[int]
    center_id: int = Field(ge=0)
    cd_subgroup_id: int = Field(ge=0)
    max_member_id: int = Field(ge=0)
    properties: List[PropertyCheck] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _validate_members(self) -> "CDReport":
        if not self.measures:
            msg = "measures must contain at least one row"
            raise ValueError(msg)
        if [row.id for row in self.measures] != list(range(len(self.measures))):
            msg = "measure rows must be indexed by consecutive subgroup ids"
            raise ValueError(msg)
        if self.m_star != max(row.measure for row in self.measures):
            msg = "m_star must equal the largest measure"
            raise ValueError(msg)
        expected = [row.id for row in self.measures if row.measure == self.m_star]
        if sorted(self.cd_members) != expected:
            msg = "cd_members must be exactly the ids attaining m_star"
            raise ValueError(msg)
        return self

    def measure_of(self, subgroup_id: int) -> int:
        return self.measures[subgroup_id].measure

    def centralizer_of(self, subgroup_id: int) -> int:
        return self.measures[subgroup_id].centralizer_id

    def check(self, name: str) -> PropertyCheck:
        for entry in self.properties:
            if entry.name == name:
                return entry
        raise KeyError(name)

    @property
    def all_properties_hold(self) -> bool:
        return all(check.passed for check in self.properties)

    def failed_properties(self) -> List[PropertyCheck]:
        return [check for check in self.properties if not check.passed]


def measure(group: Group, subgroup: Subgroup) -> int:
    """``m_G(H) = |H| * |C_G(H)|``."""

    if subgroup.parent is not group:
        raise InvalidParameterError("Subgroup does not belong to the given group.")
    return subgroup.size * centralizer(group, subgroup).size


def cd_lattice(
    group: Group,
    lattice: SubgroupLattice,
    *,
    include_maximal_member_check: bool = True,
    limits: Optional[Limits] = None,
) -> CDReport:
    """Measure every subgroup, collect ``CD(G)`` and run the structural checks.

    The maximal-member comparison rebuilds the lattice of the largest member as a
    standalone group; nested reports skip that step.
    """

    if lattice.group is not group:
        raise InvalidParameterError(f"Lattice does not belong to {group.label}.")

    rows: List[MeasureRow] = []
    for subgroup_id, subgroup in enumerate(lattice):
        central = centralizer(group, subgroup)
        central_id = lattice.id_of(central)
        rows.append(
            MeasureRow(
                id=subgroup_id,
                size=subgroup.size,
                centralizer_id=central_id,
                centralizer_size=central.size,
                measure=subgroup.size * central.size,
            )
        )

    m_star = max(row.measure for row in rows)
    members = [row.id for row in rows if row.measure == m_star]
    center_id = rows[lattice.top].centralizer_id
    minimum = lattice.meet_all(members)
    maximum = lattice.join_all(members)
    logger.debug("%s: m* = %s with %s CD members", group.label, m_star, len(members))

    checks = [
        _check_duality_inequality(rows),
        _check_double_centralizer(rows, members),
    ]
    checks.extend(_check_sublattice(lattice, rows, members))
    checks.extend(_check_minimal_member(group, lattice, members, minimum, center_id))
    checks.extend(
        _check_maximal_member(
            group,
            lattice,
            members,
            maximum,
            include_cd_equality=include_maximal_member_check,
            limits=limits,
        )
    )

    return CDReport(
        group=group.label,
        order=group.order,
        measures=rows,
        m_star=m_star,
        cd_members=members,
        center_id=center_id,
        cd_subgroup_id=minimum,
        max_member_id=maximum,
        properties=checks,
    )


def chermak_delgado_subgroup(report: CDReport, lattice: SubgroupLattice) -> int:
    """Id of the unique minimal member of ``CD(G)``."""

    minimum = lattice.meet_all(report.cd_members)
    if minimum not in report.cd_members:
        msg = f"Meet of the CD members of {report.group} (id {minimum}) is not itself a member."
        raise InternalInconsistencyError(msg)
    return minimum


def _check_duality_inequality(rows: Sequence[MeasureRow]) -> PropertyCheck:
    for row in rows:
        partner = rows[row.centralizer_id]
        if row.measure > partner.measure:
            witness = f"m(H{row.id}) = {row.measure} > m(C(H{row.id})) = {partner.measure}"
            return PropertyCheck(name=DUALITY_INEQUALITY, passed=False, witness=witness)
        if row.measure == partner.measure and partner.centralizer_id != row.id:
            witness = f"equal measures but C(C(H{row.id})) is H{partner.centralizer_id}"
            return PropertyCheck(name=DUALITY_INEQUALITY, passed=False, witness=witness)
    return PropertyCheck(name=DUALITY_INEQUALITY, passed=True)


def _check_double_centralizer(rows: Sequence[MeasureRow], members: Sequence[int]) -> PropertyCheck:
    member_set = set(members)
    for subgroup_id in members:
        partner = rows[subgroup_id].centralizer_id
        if partner not in member_set:
            witness = f"C(H{subgroup_id}) = H{partner} is not a CD member"
            return PropertyCheck(name=DOUBLE_CENTRALIZER, passed=False, witness=witness)
        if rows[partner].centralizer_id != subgroup_id:
            witness = f"C(C(H{subgroup_id})) = H{rows[partner].centralizer_id}"
            return PropertyCheck(name=DOUBLE_CENTRALIZER, passed=False, witness=witness)
    return PropertyCheck(name=DOUBLE_CENTRALIZER, passed=True)


def _check_sublattice(
    lattice: SubgroupLattice,
    rows: Sequence[MeasureRow],
    members: Sequence[int],
) -> List[PropertyCheck]:
    closed = lattice.is_closed(members)
    checks = [
        PropertyCheck(
            name=MEET_JOIN_CLOSURE,
            passed=closed,
            witness=None if closed else "CD members are not closed under meet and join",
        )
    ]

    if closed:
        result = lattice.is_modular(members)
        witness = None
        if result.counterexample is not None:
            a, b, c = result.counterexample
            witness = f"modular law fails for (H{a}, H{b}, H{c})"
        checks.append(PropertyCheck(name=MODULARITY, passed=result.holds, witness=witness))
    else:
        checks.append(PropertyCheck(name=MODULARITY, passed=False, witness="not a sublattice"))

    checks.append(_check_self_duality(lattice, rows, members))
    return checks


def _check_self_duality(
    lattice: SubgroupLattice,
    rows: Sequence[MeasureRow],
    members: Sequence[int],
) -> PropertyCheck:
    member_set = set(members)
    image = {rows[i].centralizer_id for i in members}
    if image != member_set:
        return PropertyCheck(
            name=SELF_DUALITY, passed=False, witness="centralizer map is not a bijection of CD(G)"
        )
    for lower in members:
        for upper in members:
            if lower == upper or not lattice.leq(lower, upper):
                continue
            if not lattice.leq(rows[upper].centralizer_id, rows[lower].centralizer_id):
                witness = f"H{lower} <= H{upper} but C(H{upper}) is not below C(H{lower})"
                return PropertyCheck(name=SELF_DUALITY, passed=False, witness=witness)
    return PropertyCheck(name=SELF_DUALITY, passed=True)


def _check_minimal_member(
    group: Group,
    lattice: SubgroupLattice,
    members: Sequence[int],
    minimum: int,
    center_id: int,
) -> List[PropertyCheck]:
    if minimum not in members:
        witness = f"meet of CD members (H{minimum}) is not a member"
        return [
            PropertyCheck(name=name, passed=False, witness=witness)
            for name in (MIN_MEMBER_ABELIAN, MIN_MEMBER_CONTAINS_CENTER, MIN_MEMBER_NORMAL)
        ]

    subgroup = lattice[minimum]
    abelian = is_abelian_subgroup(group, subgroup)
    contains_center = lattice.leq(center_id, minimum)
    normal = is_normal(group, subgroup)
    return [
        PropertyCheck(
            name=MIN_MEMBER_ABELIAN,
            passed=abelian,
            witness=None if abelian else f"H{minimum} is not abelian",
        ),
        PropertyCheck(
            name=MIN_MEMBER_CONTAINS_CENTER,
            passed=contains_center,
            witness=None if contains_center else f"Z(G) = H{center_id} is not inside H{minimum}",
        ),
        PropertyCheck(
            name=MIN_MEMBER_NORMAL,
            passed=normal,
            witness=None if normal else f"H{minimum} is not normal",
        ),
    ]


def _check_maximal_member(
    group: Group,
    lattice: SubgroupLattice,
    members: Sequence[int],
    maximum: int,
    *,
    include_cd_equality: bool,
    limits: Optional[Limits],
) -> List[PropertyCheck]:
    subgroup = lattice[maximum]
    normal = is_normal(group, subgroup)
    checks = [
        PropertyCheck(
            name=MAX_MEMBER_NORMAL,
            passed=normal,
            witness=None if normal else f"H{maximum} is not normal",
        )
    ]
    if not include_cd_equality:
        return checks

    expected: Set[Tuple[int, ...]] = {
        tuple(int(e) for e in lattice[i].elements) for i in members
    }
    if maximum == lattice.top:
        checks.append(PropertyCheck(name=MAX_MEMBER_CD_EQUAL, passed=True))
        return checks

    standalone, index_map = induced_group(group, subgroup, limits=limits)
    inner_lattice = all_subgroups(standalone, limits=limits)
    inner_report = cd_lattice(
        standalone, inner_lattice, include_maximal_member_check=False, limits=limits
    )
    embedded: Set[Tuple[int, ...]] = {
        tuple(int(e) for e in index_map[inner_lattice[i].elements])
        for i in inner_report.cd_members
    }
    equal = embedded == expected
    witness = None
    if not equal:
        witness = f"CD(M) has {len(embedded)} members, CD(G) has {len(expected)}"
    checks.append(PropertyCheck(name=MAX_MEMBER_CD_EQUAL, passed=equal, witness=witness))
    return checks


def measure_table(report: CDReport) -> Dict[int, int]:
    return {row.id: row.measure for row in report.measures}


__all__ = [
    "CDReport",
    "MeasureRow",
    "PROPERTY_NAMES",
    "PropertyCheck",
    "cd_lattice",
    "chermak_delgado_subgroup",
    "measure",
    "measure_table",
]

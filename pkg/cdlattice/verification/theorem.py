"""Brute-force verification of the equal-cyclic-measure theorem and its corollary.

The theorem: if every non-trivial cyclic subgroup of ``G`` has the same
Chermak-Delgado measure, then ``G`` is a p-group whose order-p elements are all
central, ``Omega_1(G) = Z(G)``, and with ``|G| = p^n``, ``exp(G) = p^m`` and
``|Z(G)| = p^k`` the bound ``k <= n - 2m + 2`` holds. The corollary: if the cyclic
subgroups all attain ``m*(G)``, or all non-trivial abelian subgroups share one
measure, then ``G`` is ``C_p`` or ``Q8``.

Every conclusion is recorded as a verdict. Failed checks are data, never exceptions.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import factorint, isprime

from cdlattice.core.exceptions import InvalidParameterError
from cdlattice.core.types import HypothesisVerdict, RecognitionKind, Verdict, verdict
from cdlattice.groups.group import Group
from cdlattice.lattice.lattice import SubgroupLattice
from cdlattice.lattice.subgroups import (
    center,
    centralizer,
    cyclic_subgroup,
    is_abelian_subgroup,
    join_subgroups,
    omega1,
    subgroup_exponent,
)
from cdlattice.measures.chermak_delgado import CDReport

logger = logging.getLogger(__name__)

P_GROUP = "p-group"
OMEGA1_EQUALS_CENTER = "omega1-equals-center"
COMMON_MEASURE = "common-measure"
CENTER_BOUND = "center-bound"
DIVISIBILITY = "divisibility"
CENTER_ELEMENTARY = "center-elementary"

CONCLUSION_NAMES: Tuple[str, ...] = (
    P_GROUP,
    OMEGA1_EQUALS_CENTER,
    COMMON_MEASURE,
    CENTER_BOUND,
    DIVISIBILITY,
    CENTER_ELEMENTARY,
)

RECOGNIZED = "recognized"
CENTER_OF_PRIME_ORDER = "center-of-prime-order"
UNIQUE_SUBGROUP_OF_ORDER_P = "unique-subgroup-of-order-p"

COROLLARY_VERDICT_NAMES: Tuple[str, ...] = (
    RECOGNIZED,
    CENTER_OF_PRIME_ORDER,
    UNIQUE_SUBGROUP_OF_ORDER_P,
)


class Recognition(BaseModel):
    """Result of the ``C_p`` / ``Q8`` recognition; ``prime`` is set for ``Cp``."""

    kind: RecognitionKind
    prime: Optional[int] = None

    model_config = ConfigDict(frozen=True)

    def __str__(self) -> str:
        if self.kind == "Cp":
            return f"C{self.prime}"
        return self.kind


class SylowWitness(BaseModel):
    """Two prime-order cyclic subgroups for distinct primes with different measures."""

    first_prime: int
    first_id: int
    first_measure: int
    second_prime: int
    second_id: int
    second_measure: int

    model_config = ConfigDict(frozen=True)


class CorollaryReport(BaseModel):
    condition_a: bool
    condition_b: bool
    recognition: Recognition
    verdicts: Dict[str, Verdict]

    model_config = ConfigDict(frozen=True)

    @property
    def applies(self) -> bool:
        return self.condition_a or self.condition_b

    @model_validator(mode="after")
    def _validate_verdicts(self) -> "CorollaryReport":
        if set(self.verdicts) != set(COROLLARY_VERDICT_NAMES):
            msg = f"corollary verdicts must be exactly {COROLLARY_VERDICT_NAMES}"
            raise ValueError(msg)
        if not self.applies and any(value != "n/a" for value in self.verdicts.values()):
            msg = "corollary verdicts must be n/a when neither condition holds"
            raise ValueError(msg)
        return self


class TheoremReport(BaseModel):
    """Hypothesis verdict, invariants ``(n, m, k)`` and conclusion verdicts for one group."""

    group: str
    order: int = Field(ge=1)
    hypothesis: HypothesisVerdict
    common_measure: Optional[int] = None
    p: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    bound_slack: Optional[int] = None
    conclusions: Dict[str, Verdict]
    sylow_witness: Optional[SylowWitness] = None
    corollary: Optional[CorollaryReport] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _validate_report(self) -> "TheoremReport":
        if set(self.conclusions) != set(CONCLUSION_NAMES):
            msg = f"conclusions must be exactly {CONCLUSION_NAMES}"
            raise ValueError(msg)
        if self.hypothesis != "true" and any(v != "n/a" for v in self.conclusions.values()):
            msg = "conclusions must be n/a unless the hypothesis holds"
            raise ValueError(msg)
        if self.p is None and any(value is not None for value in (self.n, self.m, self.k)):
            msg = "n, m and k are only defined for p-groups"
            raise ValueError(msg)
        return self

    @property
    def hypothesis_holds(self) -> bool:
        return self.hypothesis == "true"

    def violations(self) -> List[str]:
        """Names of every conclusion or corollary step that failed."""

        failed = [name for name in CONCLUSION_NAMES if self.conclusions[name] == "fail"]
        if self.corollary is not None:
            failed.extend(
                f"corollary:{name}"
                for name in COROLLARY_VERDICT_NAMES
                if self.corollary.verdicts[name] == "fail"
            )
        return failed


def nontrivial_cyclic_subgroups(lattice: SubgroupLattice) -> List[int]:
    """Ids of the cyclic subgroups other than the trivial one."""

    return [i for i in range(1, len(lattice)) if lattice.is_cyclic(i)]


def equal_cyclic_measure(
    group: Group,
    lattice: SubgroupLattice,
    *,
    cd_report: Optional[CDReport] = None,
) -> HypothesisVerdict:
    """``"true"`` when all non-trivial cyclic subgroups share one measure."""

    cyclic_ids = nontrivial_cyclic_subgroups(lattice)
    if not cyclic_ids:
        return "vacuous"
    measures = _measures(group, lattice, cyclic_ids, cd_report)
    return "true" if len(set(measures.values())) == 1 else "false"


def verify_equal_measure_theorem(
    group: Group,
    lattice: SubgroupLattice,
    *,
    cd_report: Optional[CDReport] = None,
) -> TheoremReport:
    """Decide the hypothesis and check every conclusion the theorem and its proof give."""

    _check_lattice(group, lattice)
    cyclic_ids = nontrivial_cyclic_subgroups(lattice)
    measures = _measures(group, lattice, cyclic_ids, cd_report)
    hypothesis = equal_cyclic_measure(group, lattice, cd_report=cd_report)

    factors = factorint(group.order)
    p_data = _prime_power_data(group, factors)
    p, n, m, k = p_data if p_data is not None else (None, None, None, None)

    if hypothesis != "true":
        witness = None
        if hypothesis == "false" and len(factors) >= 2:
            witness = _sylow_witness(group, lattice, measures)
        logger.debug("%s: hypothesis %s", group.label, hypothesis)
        return TheoremReport(
            group=group.label,
            order=group.order,
            hypothesis=hypothesis,
            conclusions={name: "n/a" for name in CONCLUSION_NAMES},
            p=p,
            n=n,
            m=m,
            k=k,
            sylow_witness=witness,
        )

    common = next(iter(measures.values()))
    if p_data is None:
        conclusions: Dict[str, Verdict] = {name: "fail" for name in CONCLUSION_NAMES}
        logger.warning("%s: equal cyclic measures on a non-p-group", group.label)
        return TheoremReport(
            group=group.label,
            order=group.order,
            hypothesis=hypothesis,
            common_measure=common,
            conclusions=conclusions,
            sylow_witness=_sylow_witness(group, lattice, measures),
        )

    p, n, m, k = p_data
    slack = n - 2 * m + 2 - k
    centre = center(group)
    conclusions = {
        P_GROUP: "pass",
        OMEGA1_EQUALS_CENTER: verdict(omega1(group, p) == centre),
        COMMON_MEASURE: verdict(common == p ** (n + 1)),
        CENTER_BOUND: verdict(slack >= 0),
        DIVISIBILITY: verdict(_divisibility_holds(group, p, m, k)),
        CENTER_ELEMENTARY: verdict(subgroup_exponent(centre) == p),
    }
    return TheoremReport(
        group=group.label,
        order=group.order,
        hypothesis=hypothesis,
        common_measure=common,
        p=p,
        n=n,
        m=m,
        k=k,
        bound_slack=slack,
        conclusions=conclusions,
    )


def verify_cp_or_q8_corollary(
    group: Group,
    lattice: SubgroupLattice,
    report: CDReport,
    *,
    theorem: Optional[TheoremReport] = None,
) -> TheoremReport:
    """Fill the corollary section of a theorem report.

    Condition (a): every non-trivial cyclic subgroup attains ``m*(G)``.
    Condition (b): every non-trivial abelian subgroup has the same measure.
    """

    _check_lattice(group, lattice)
    base = theorem or verify_equal_measure_theorem(group, lattice, cd_report=report)

    cyclic_ids = nontrivial_cyclic_subgroups(lattice)
    abelian_ids = [
        i for i in range(1, len(lattice)) if is_abelian_subgroup(group, lattice[i])
    ]
    condition_a = bool(cyclic_ids) and all(
        report.measure_of(i) == report.m_star for i in cyclic_ids
    )
    condition_b = bool(abelian_ids) and len({report.measure_of(i) for i in abelian_ids}) == 1
    recognition = recognize_cp_or_q8(group)

    verdicts: Dict[str, Verdict] = {name: "n/a" for name in COROLLARY_VERDICT_NAMES}
    if condition_a or condition_b:
        centre = lattice[report.center_id]
        prime_center = isprime(centre.size)
        verdicts[RECOGNIZED] = verdict(recognition.kind != "neither")
        verdicts[CENTER_OF_PRIME_ORDER] = verdict(prime_center)
        unique = prime_center and [sub.size for sub in lattice].count(centre.size) == 1
        verdicts[UNIQUE_SUBGROUP_OF_ORDER_P] = verdict(unique)

    corollary = CorollaryReport(
        condition_a=condition_a,
        condition_b=condition_b,
        recognition=recognition,
        verdicts=verdicts,
    )
    return base.model_copy(update={"corollary": corollary})


def recognize_cp_or_q8(group: Group) -> Recognition:
    """``Cp`` iff ``|G|`` is prime; ``Q8`` iff order 8, non-abelian, one involution."""

    if isprime(group.order):
        return Recognition(kind="Cp", prime=group.order)
    if group.order == 8 and not group.is_abelian():
        involutions = int((group.element_orders() == 2).sum())
        if involutions == 1:
            return Recognition(kind="Q8")
    return Recognition(kind="neither")


def _check_lattice(group: Group, lattice: SubgroupLattice) -> None:
    if lattice.group is not group:
        raise InvalidParameterError(f"Lattice does not belong to {group.label}.")


def _measures(
    group: Group,
    lattice: SubgroupLattice,
    ids: Sequence[int],
    cd_report: Optional[CDReport],
) -> Dict[int, int]:
    if cd_report is not None:
        return {i: cd_report.measure_of(i) for i in ids}
    return {i: lattice[i].size * centralizer(group, lattice[i]).size for i in ids}


def _prime_power_data(
    group: Group, factors: Mapping[int, int]
) -> Optional[Tuple[int, int, int, int]]:
    """``(p, n, m, k)`` for a non-trivial p-group, otherwise ``None``."""

    if len(factors) != 1:
        return None
    ((p, n),) = factors.items()
    m = _log(group.exponent(), p)
    k = _log(center(group).size, p)
    return int(p), int(n), m, k


def _divisibility_holds(group: Group, p: int, m: int, k: int) -> bool:
    """``|<b>Z(G)| = p^(m+k-1)`` divides ``|C_G(<b>)|`` for every ``b`` of order ``p^m``."""

    centre = center(group)
    target = p ** (m + k - 1)
    orders = group.element_orders()
    for element in (int(i) for i in (orders == p**m).nonzero()[0]):
        cyclic = cyclic_subgroup(group, element)
        product = join_subgroups(group, cyclic, centre)
        if product.size != target or centralizer(group, cyclic).size % product.size != 0:
            logger.debug("%s: divisibility fails at element %s", group.label, element)
            return False
    return True


def _sylow_witness(
    group: Group,
    lattice: SubgroupLattice,
    measures: Mapping[int, int],
) -> Optional[SylowWitness]:
    prime_ids: Dict[int, List[int]] = {}
    for subgroup_id in measures:
        size = lattice[subgroup_id].size
        if isprime(size):
            prime_ids.setdefault(size, []).append(subgroup_id)

    primes = sorted(prime_ids)
    for index, first_prime in enumerate(primes):
        for second_prime in primes[index + 1 :]:
            for first_id in prime_ids[first_prime]:
                for second_id in prime_ids[second_prime]:
                    if measures[first_id] != measures[second_id]:
                        return SylowWitness(
                            first_prime=first_prime,
                            first_id=first_id,
                            first_measure=measures[first_id],
                            second_prime=second_prime,
                            second_id=second_id,
                            second_measure=measures[second_id],
                        )
    return None


def _log(value: int, base: int) -> int:
    exponent = 0
    while value > 1:
        value //= base
        exponent += 1
    return exponent


__all__ = [
    "CONCLUSION_NAMES",
    "COROLLARY_VERDICT_NAMES",
    "CorollaryReport",
    "Recognition",
    "SylowWitness",
    "TheoremReport",
    "equal_cyclic_measure",
    "nontrivial_cyclic_subgroups",
    "recognize_cp_or_q8",
    "verify_cp_or_q8_corollary",
    "verify_equal_measure_theorem",
]

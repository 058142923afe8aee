"""Single-group verification pipeline and its JSON payload."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from cdlattice.catalog.spec import GroupSpec, build_group, parse_spec
from cdlattice.core.config import Limits
from cdlattice.core.types import HypothesisVerdict, Verdict, verdict
from cdlattice.groups.group import Group
from cdlattice.lattice.lattice import SubgroupLattice, all_subgroups
from cdlattice.measures.chermak_delgado import CDReport, cd_lattice
from cdlattice.verification.theorem import TheoremReport, verify_cp_or_q8_corollary

logger = logging.getLogger(__name__)


class MeasurePayload(BaseModel):
    id: int
    size: int
    centralizer_size: int
    measure: int

    model_config = ConfigDict(frozen=True)


class CorollaryPayload(BaseModel):
    condition_a: bool
    condition_b: bool
    recognition: str
    verdicts: Dict[str, Verdict]

    model_config = ConfigDict(frozen=True)


class VerificationPayload(BaseModel):
    """Stable JSON shape written by ``verify``."""

    group: str
    order: int = Field(ge=1)
    m_star: int = Field(ge=1)
    cd_member_count: int = Field(ge=1)
    hypothesis: HypothesisVerdict
    n: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    bound_slack: Optional[int] = None
    conclusions: Dict[str, Verdict]
    measures: List[MeasurePayload]
    corollary: Optional[CorollaryPayload] = None
    properties: Dict[str, Verdict] = Field(default_factory=dict)
    cd_members: List[int] = Field(default_factory=list)
    cd_subgroup: Optional[int] = None

    model_config = ConfigDict(frozen=True)


@dataclass(frozen=True)
class VerificationResult:
    """Everything computed for one group."""

    group: Group
    lattice: SubgroupLattice
    cd_report: CDReport
    theorem: TheoremReport

    def violations(self) -> List[str]:
        """Failed theorem conclusions, corollary steps and lattice properties."""

        failed = self.theorem.violations()
        failed.extend(f"property:{check.name}" for check in self.cd_report.failed_properties())
        return failed

    def payload(self) -> VerificationPayload:
        return build_payload(self.cd_report, self.theorem)


def verify_group(group: Group, *, limits: Optional[Limits] = None) -> VerificationResult:
    """Enumerate the lattice, build the CD report and verify the theorem and corollary."""

    lattice = all_subgroups(group, limits=limits)
    report = cd_lattice(group, lattice, limits=limits)
    theorem = verify_cp_or_q8_corollary(group, lattice, report)
    logger.debug(
        "%s: %s subgroups, hypothesis %s", group.label, len(lattice), theorem.hypothesis
    )
    return VerificationResult(group=group, lattice=lattice, cd_report=report, theorem=theorem)


def run_verify(spec: GroupSpec | str, *, limits: Optional[Limits] = None) -> VerificationResult:
    """Parse, build and verify the group a spec names."""

    parsed = parse_spec(spec) if isinstance(spec, str) else spec
    group = build_group(parsed, limits=limits)
    return verify_group(group, limits=limits)


def build_payload(report: CDReport, theorem: TheoremReport) -> VerificationPayload:
    corollary = None
    if theorem.corollary is not None:
        corollary = CorollaryPayload(
            condition_a=theorem.corollary.condition_a,
            condition_b=theorem.corollary.condition_b,
            recognition=str(theorem.corollary.recognition),
            verdicts=dict(theorem.corollary.verdicts),
        )
    return VerificationPayload(
        group=report.group,
        order=report.order,
        m_star=report.m_star,
        cd_member_count=len(report.cd_members),
        hypothesis=theorem.hypothesis,
        n=theorem.n,
        m=theorem.m,
        k=theorem.k,
        bound_slack=theorem.bound_slack,
        conclusions=dict(theorem.conclusions),
        measures=[
            MeasurePayload(
                id=row.id,
                size=row.size,
                centralizer_size=row.centralizer_size,
                measure=row.measure,
            )
            for row in report.measures
        ],
        corollary=corollary,
        properties={check.name: verdict(check.passed) for check in report.properties},
        cd_members=list(report.cd_members),
        cd_subgroup=report.cd_subgroup_id,
    )


def payload_schema() -> Dict[str, Any]:
    return VerificationPayload.model_json_schema()


def write_json(data: BaseModel, path: Path | str) -> Path:
    """Write a model as indented JSON, creating parent directories."""

    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(json.dumps(data.model_dump(mode="json"), indent=2) + "\n", encoding="utf-8")
    logger.debug("Wrote %s", file_path)
    return file_path


__all__ = [
    "CorollaryPayload",
    "MeasurePayload",
    "VerificationPayload",
    "VerificationResult",
    "build_payload",
    "payload_schema",
    "run_verify",
    "verify_group",
    "write_json",
]

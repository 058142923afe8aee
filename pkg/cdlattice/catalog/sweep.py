"""Verification sweeps over catalog entries."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cdlattice.catalog.catalog import CatalogEntry, entries
from cdlattice.catalog.reports import verify_group
from cdlattice.core.config import Limits
from cdlattice.core.exceptions import CDLatticeError
from cdlattice.core.types import FamilyTag, HypothesisVerdict

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, int], None]


class SweepFilter(BaseModel):
    """Order range and family selectors; an empty ``families`` tuple selects everything."""

    min_order: int = Field(default=1, ge=1)
    max_order: int = Field(default=16, ge=0)
    families: Tuple[FamilyTag, ...] = ()

    model_config = ConfigDict(frozen=True)


class SweepRow(BaseModel):
    label: str
    order: int
    abelian: Optional[bool] = None
    hypothesis: Optional[HypothesisVerdict] = None
    condition_a: Optional[bool] = None
    condition_b: Optional[bool] = None
    recognition: Optional[str] = None
    n: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    bound_slack: Optional[int] = None
    m_star: Optional[int] = None
    cd_member_count: Optional[int] = None
    subgroup_count: Optional[int] = None
    violations: List[str] = Field(default_factory=list)
    error: Optional[str] = None

    model_config = ConfigDict(frozen=True)

    @property
    def holds(self) -> bool:
        return self.hypothesis == "true"

    @property
    def corollary_applies(self) -> bool:
        return bool(self.condition_a or self.condition_b)


class SweepSummary(BaseModel):
    rows: int
    failures: int
    hypothesis_holders: List[str]
    nonabelian_holders: List[str]
    corollary_holders: List[str]
    violations: List[str]

    model_config = ConfigDict(frozen=True)


class SweepReport(BaseModel):
    """Rows in ``(order, label)`` order plus aggregate counts."""

    filter: SweepFilter
    rows: List[SweepRow]
    summary: SweepSummary

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _validate_order(self) -> "SweepReport":
        keys = [(row.order, row.label) for row in self.rows]
        if keys != sorted(keys):
            msg = "sweep rows must be sorted by (order, label)"
            raise ValueError(msg)
        return self

    @property
    def has_violations(self) -> bool:
        return bool(self.summary.violations)


def evaluate_entry(entry: CatalogEntry, limits: Optional[Limits] = None) -> SweepRow:
    """Verify one catalog entry; library errors become the row's ``error``."""

    try:
        group = entry.build(limits=limits)
        result = verify_group(group, limits=limits)
    except CDLatticeError as exc:
        logger.warning("Sweep row %s failed: %s", entry.name, exc)
        return SweepRow(label=entry.name, order=entry.order, error=f"{exc.code}: {exc}")

    theorem = result.theorem
    corollary = theorem.corollary
    return SweepRow(
        label=entry.name,
        order=entry.order,
        abelian=group.is_abelian(),
        hypothesis=theorem.hypothesis,
        condition_a=corollary.condition_a if corollary else None,
        condition_b=corollary.condition_b if corollary else None,
        recognition=str(corollary.recognition) if corollary else None,
        n=theorem.n,
        m=theorem.m,
        k=theorem.k,
        bound_slack=theorem.bound_slack,
        m_star=result.cd_report.m_star,
        cd_member_count=len(result.cd_report.cd_members),
        subgroup_count=len(result.lattice),
        violations=result.violations(),
    )


def run_sweep(
    sweep_filter: SweepFilter,
    *,
    limits: Optional[Limits] = None,
    workers: int = 1,
    progress_callback: Optional[ProgressCallback] = None,
) -> SweepReport:
    """Evaluate every selected catalog entry, optionally across a process pool."""

    selected = entries(sweep_filter.min_order, sweep_filter.max_order, sweep_filter.families)
    total = len(selected)
    logger.info(
        "Sweeping %s catalog entries (orders %s..%s)",
        total,
        sweep_filter.min_order,
        sweep_filter.max_order,
    )

    rows: Dict[str, SweepRow] = {}
    if progress_callback:
        progress_callback(0, total)

    if workers > 1 and total > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(evaluate_entry, entry, limits): entry for entry in selected}
            for future in as_completed(futures):
                entry = futures[future]
                rows[entry.name] = future.result()
                if progress_callback:
                    progress_callback(len(rows), total)
    else:
        for entry in selected:
            rows[entry.name] = evaluate_entry(entry, limits)
            if progress_callback:
                progress_callback(len(rows), total)

    ordered = sorted(rows.values(), key=lambda row: (row.order, row.label))
    summary = summarize(ordered)
    logger.info(
        "Sweep finished: %s rows, %s failures, %s hypothesis holders",
        summary.rows,
        summary.failures,
        len(summary.hypothesis_holders),
    )
    return SweepReport(filter=sweep_filter, rows=ordered, summary=summary)


def summarize(rows: List[SweepRow]) -> SweepSummary:
    return SweepSummary(
        rows=len(rows),
        failures=sum(1 for row in rows if row.error is not None),
        hypothesis_holders=[row.label for row in rows if row.holds],
        nonabelian_holders=[row.label for row in rows if row.holds and row.abelian is False],
        corollary_holders=[row.label for row in rows if row.corollary_applies],
        violations=[row.label for row in rows if row.violations],
    )


__all__ = [
    "ProgressCallback",
    "SweepFilter",
    "SweepReport",
    "SweepRow",
    "SweepSummary",
    "evaluate_entry",
    "run_sweep",
    "summarize",
]

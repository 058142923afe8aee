from __future__ import annotations

from typing import List, Tuple

import pytest

from cdlattice.catalog.catalog import entries, get_entry
from cdlattice.catalog.sweep import (
    SweepFilter,
    SweepReport,
    SweepRow,
    evaluate_entry,
    run_sweep,
    summarize,
)
from cdlattice.core.config import Limits


def test_sweep_through_order_eight() -> None:
    report = run_sweep(SweepFilter(max_order=8))
    summary = report.summary

    assert summary.rows == 14
    assert summary.failures == 0
    assert summary.violations == []
    assert not report.has_violations
    assert summary.hypothesis_holders == ["C2", "C3", "C2xC2", "C5", "C7", "C2xC2xC2", "Q8"]
    assert summary.nonabelian_holders == ["Q8"]
    assert summary.corollary_holders == ["C2", "C3", "C5", "C7", "Q8"]


def test_sweep_rows_are_sorted_and_populated() -> None:
    report = run_sweep(SweepFilter(min_order=4, max_order=8))

    keys = [(row.order, row.label) for row in report.rows]
    assert keys == sorted(keys)
    q8 = next(row for row in report.rows if row.label == "Q8")
    assert q8.holds
    assert q8.corollary_applies
    assert q8.recognition == "Q8"
    assert (q8.n, q8.m, q8.k, q8.bound_slack) == (3, 2, 1, 0)
    assert q8.m_star == 16
    assert q8.cd_member_count == 5
    assert q8.subgroup_count == 6
    assert q8.abelian is False


def test_family_filter_restricts_rows() -> None:
    report = run_sweep(SweepFilter(max_order=16, families=("dihedral",)))

    assert [row.label for row in report.rows] == ["D6", "D8", "D10", "D12", "D14", "D16"]
    assert report.summary.hypothesis_holders == []


def test_empty_range_produces_empty_report() -> None:
    report = run_sweep(SweepFilter(min_order=5, max_order=4))

    assert report.rows == []
    assert report.summary.rows == 0


def test_progress_callback_reports_every_row() -> None:
    calls: List[Tuple[int, int]] = []

    run_sweep(SweepFilter(max_order=4), progress_callback=lambda done, total: calls.append((done, total)))

    assert calls[0] == (0, 5)
    assert calls[-1] == (5, 5)
    assert len(calls) == 6


def test_parallel_sweep_matches_serial() -> None:
    serial = run_sweep(SweepFilter(max_order=6))
    parallel = run_sweep(SweepFilter(max_order=6), workers=2)

    assert parallel.rows == serial.rows


def test_evaluate_entry_records_library_errors() -> None:
    row = evaluate_entry(get_entry("C20"), Limits(max_order=16))

    assert row.error is not None
    assert row.error.startswith("capacity-error")
    assert row.hypothesis is None
    assert not row.holds


def test_summary_counts_failures() -> None:
    rows = [
        SweepRow(label="C2", order=2, abelian=True, hypothesis="true", condition_a=True),
        SweepRow(label="C20", order=20, error="capacity-error: too big"),
        SweepRow(label="X", order=21, hypothesis="true", abelian=False, violations=["p-group"]),
    ]

    summary = summarize(rows)

    assert summary.failures == 1
    assert summary.hypothesis_holders == ["C2", "X"]
    assert summary.nonabelian_holders == ["X"]
    assert summary.corollary_holders == ["C2"]
    assert summary.violations == ["X"]


def test_report_requires_sorted_rows() -> None:
    rows = [SweepRow(label="C3", order=3), SweepRow(label="C2", order=2)]

    with pytest.raises(ValueError):
        SweepReport(filter=SweepFilter(), rows=rows, summary=summarize(rows))


@pytest.mark.slow
def test_full_sweep_through_order_sixteen() -> None:
    report = run_sweep(SweepFilter(max_order=16))
    summary = report.summary

    assert summary.rows == 41
    assert summary.failures == 0
    assert summary.violations == []
    assert summary.nonabelian_holders == ["Q8", "Q8xC2", "SDP(4,4,3)"]
    assert summary.corollary_holders == ["C2", "C3", "C5", "C7", "Q8", "C11", "C13"]
    for row in report.rows:
        if row.holds and row.n is not None:
            assert row.bound_slack is not None and row.bound_slack >= 0


@pytest.mark.slow
def test_abelian_holders_are_exactly_elementary_abelian() -> None:
    report = run_sweep(SweepFilter(min_order=2, max_order=64, families=("abelian",)))
    elementary = {entry.name for entry in entries(2, 64, ["elementary-abelian"])}

    assert report.summary.failures == 0
    assert set(report.summary.hypothesis_holders) == elementary


@pytest.mark.slow
def test_full_sweep_through_order_one_twenty_eight_in_parallel() -> None:
    report = run_sweep(SweepFilter(max_order=128), workers=4)
    summary = report.summary

    assert summary.rows == len(entries(1, 128))
    assert summary.failures == 0
    assert summary.violations == []
    for row in report.rows:
        if row.corollary_applies:
            assert row.recognition is not None and row.recognition != "neither", row.label

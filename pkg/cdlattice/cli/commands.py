"""CLI commands: describe, verify, sweep, dot, catalog and schema."""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import List, NoReturn, Optional, Sequence, Tuple, Union, get_args

import typer
from rich.console import Console
from rich.markup import escape
from rich.progress import (
    BarColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table

from cdlattice.catalog.catalog import entries, fingerprint
from cdlattice.catalog.dot import export_dot, write_dot
from cdlattice.catalog.reports import VerificationResult, payload_schema, run_verify, write_json
from cdlattice.catalog.spec import build_group, parse_spec
from cdlattice.catalog.sweep import SweepFilter, SweepReport, SweepRow, run_sweep
from cdlattice.core.config import DEFAULT_LIMITS, Limits
from cdlattice.core.exceptions import CapacityError, CDLatticeError, ConfigurationError
from cdlattice.core.types import FamilyTag
from cdlattice.lattice.lattice import all_subgroups
from cdlattice.lattice.subgroups import center

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)

_USAGE_ERROR_EXIT = 1
_CAPACITY_ERROR_EXIT = 2
_VIOLATION_EXIT = 3

_FAMILY_TAGS: Tuple[str, ...] = get_args(FamilyTag)

_CONFIG_OPTION = typer.Option(
    None, "--config", "-c", exists=True, readable=True, help="YAML file with limits."
)
_MAX_ORDER_OPTION = typer.Option(None, "--max-order", min=1, help="Largest group order allowed.")
_MAX_SUBGROUPS_OPTION = typer.Option(
    None, "--max-subgroups", min=1, help="Largest subgroup count enumerated."
)
_VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Enable debug logging.")


def describe(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Group spec, e.g. Q8xC2 or SDP(9,9,4)."),
    config: Optional[Path] = _CONFIG_OPTION,
    max_order: Optional[int] = _MAX_ORDER_OPTION,
    max_subgroups: Optional[int] = _MAX_SUBGROUPS_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Print basic invariants and the subgroup count of a group."""

    configure_logging(verbose, log_level=_ctx_log_level(ctx))
    limits = _load_limits(config, max_order, max_subgroups)

    try:
        group = build_group(parse_spec(spec), limits=limits)
        lattice = all_subgroups(group, limits=limits)
    except CDLatticeError as exc:
        _fail(exc)

    prints = fingerprint(group)
    table = Table(title=f"Group {group.label}")
    table.add_column("Invariant", style="cyan", no_wrap=True)
    table.add_column("Value", style="white")
    table.add_row("Order", str(group.order))
    table.add_row("Abelian", "yes" if prints.abelian else "no")
    table.add_row("Exponent", str(prints.exponent))
    table.add_row("Center order", str(center(group).size))
    table.add_row(
        "Element orders",
        ", ".join(f"{order}: {count}" for order, count in prints.order_histogram),
    )
    table.add_row("Subgroups", str(len(lattice)))
    table.add_row("Normal subgroups", str(len(lattice.normal_ids())))
    table.add_row("Cyclic subgroups", str(len(lattice.cyclic_ids())))
    console.print(table)


def verify(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Group spec to verify."),
    json_path: Optional[str] = typer.Option(
        None, "--json", help="Write the JSON report to this path ('-' for stdout)."
    ),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Suppress the summary output."),
    config: Optional[Path] = _CONFIG_OPTION,
    max_order: Optional[int] = _MAX_ORDER_OPTION,
    max_subgroups: Optional[int] = _MAX_SUBGROUPS_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Compute CD(G) and check the theorem and corollary for one group."""

    configure_logging(verbose, log_level=_ctx_log_level(ctx))
    limits = _load_limits(config, max_order, max_subgroups)

    try:
        result = run_verify(parse_spec(spec), limits=limits)
    except CDLatticeError as exc:
        _fail(exc)

    payload = result.payload()
    if json_path == "-":
        typer.echo(json.dumps(payload.model_dump(mode="json"), indent=2))
        quiet = True
    elif json_path is not None:
        written = write_json(payload, json_path)
        if not quiet:
            console.print(f"[green]✓ Wrote JSON report:[/] {written}")

    if not quiet:
        _render_verification(result)

    violations = result.violations()
    if violations:
        err_console.print(f"[bold red]✗ Violations detected:[/] {', '.join(violations)}")
        raise typer.Exit(code=_VIOLATION_EXIT)


def sweep(
    ctx: typer.Context,
    min_order: int = typer.Option(1, "--min-order", min=1, help="Smallest order swept."),
    max_order: int = typer.Option(16, "--max-order", min=0, help="Largest order swept."),
    families: List[str] = typer.Option(
        [], "--family", "-f", help=f"Restrict to a family ({', '.join(_FAMILY_TAGS)})."
    ),
    workers: int = typer.Option(1, "--workers", "-w", min=1, help="Worker processes."),
    json_path: Optional[str] = typer.Option(
        None, "--json", help="Write the sweep report to this path ('-' for stdout)."
    ),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Suppress the summary output."),
    config: Optional[Path] = _CONFIG_OPTION,
    max_subgroups: Optional[int] = _MAX_SUBGROUPS_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Verify every catalog entry in an order range."""

    configure_logging(verbose, log_level=_ctx_log_level(ctx))
    selected = _parse_families(families)
    base = _load_limits(config, None, max_subgroups)
    # the swept range raises the order cap when needed
    limits = (
        _load_limits(config, max_order, max_subgroups) if max_order > base.max_order else base
    )
    sweep_filter = SweepFilter(min_order=min_order, max_order=max_order, families=selected)

    if quiet or json_path == "-":
        report = run_sweep(sweep_filter, limits=limits, workers=workers)
    else:
        report = _run_sweep_with_progress(sweep_filter, limits, workers)

    if json_path == "-":
        typer.echo(json.dumps(report.model_dump(mode="json"), indent=2))
        quiet = True
    elif json_path is not None:
        written = write_json(report, json_path)
        if not quiet:
            console.print(f"[green]✓ Wrote sweep report:[/] {written}")

    if not quiet:
        _render_sweep(report)

    if report.has_violations:
        err_console.print(
            f"[bold red]✗ Violations detected in:[/] {', '.join(report.summary.violations)}"
        )
        raise typer.Exit(code=_VIOLATION_EXIT)


def dot(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Group spec to draw."),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Destination .dot file (stdout when omitted)."
    ),
    config: Optional[Path] = _CONFIG_OPTION,
    max_order: Optional[int] = _MAX_ORDER_OPTION,
    max_subgroups: Optional[int] = _MAX_SUBGROUPS_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Write the subgroup lattice as a DOT digraph with CD(G) highlighted."""

    configure_logging(verbose, log_level=_ctx_log_level(ctx))
    limits = _load_limits(config, max_order, max_subgroups)

    try:
        result = run_verify(parse_spec(spec), limits=limits)
        text = export_dot(result.lattice, result.cd_report)
    except CDLatticeError as exc:
        _fail(exc)

    if output is None:
        typer.echo(text, nl=False)
        return
    written = write_dot(text, output)
    console.print(f"[green]✓ Wrote DOT diagram:[/] {written}")


def catalog(
    min_order: int = typer.Option(1, "--min-order", min=1, help="Smallest order listed."),
    max_order: Optional[int] = typer.Option(None, "--max-order", min=0, help="Largest order listed."),
    families: List[str] = typer.Option([], "--family", "-f", help="Restrict to a family."),
) -> None:
    """List catalog entries."""

    selected = entries(min_order, max_order, _parse_families(families))
    table = Table(title=f"Catalog ({len(selected)} entries)")
    table.add_column("Name", style="cyan", no_wrap=True)
    table.add_column("Order", justify="right")
    table.add_column("Tag", style="yellow")
    table.add_column("Families", style="magenta")
    for entry in selected:
        table.add_row(entry.name, str(entry.order), entry.tag or "", ", ".join(entry.families))
    console.print(table)


def schema() -> None:
    """Print the JSON schema of the verify report."""

    typer.echo(json.dumps(payload_schema(), indent=2))


def configure_logging(
    verbose: bool = False,
    *,
    log_level: Optional[Union[str, int]] = None,
) -> None:
    """Configure root logging for CLI execution."""

    resolved_level: int
    if isinstance(log_level, int):
        resolved_level = log_level
    elif isinstance(log_level, str):
        resolved_level = getattr(logging, log_level.upper(), logging.WARNING)
    else:
        resolved_level = logging.WARNING

    if verbose:
        resolved_level = logging.DEBUG

    logging.basicConfig(
        level=resolved_level,
        format="%(asctime)s %(levelname)s [%(name)s] %(message)s",
        datefmt="%H:%M:%S",
        force=True,
    )


def _ctx_log_level(ctx: Optional[typer.Context]) -> Optional[Union[str, int]]:
    if ctx is None:
        return None
    obj = ctx.find_object(dict)
    if not obj:
        return None
    return obj.get("log_level")


def _load_limits(
    config: Optional[Path],
    max_order: Optional[int],
    max_subgroups: Optional[int],
) -> Limits:
    try:
        base = Limits.from_yaml(config) if config is not None else DEFAULT_LIMITS
        return base.with_overrides(max_order=max_order, max_subgroups=max_subgroups)
    except ConfigurationError as exc:
        err_console.print(f"[bold red]✗ Error:[/] {escape(str(exc))}")
        for detail in exc.details:
            err_console.print(f"  • {escape(detail)}")
        raise typer.Exit(code=_USAGE_ERROR_EXIT) from exc


def _parse_families(values: Sequence[str]) -> Tuple[FamilyTag, ...]:
    unknown = [value for value in values if value not in _FAMILY_TAGS]
    if unknown:
        err_console.print(
            f"[bold red]✗ Error:[/] Unknown family {', '.join(unknown)}; "
            f"choose from {', '.join(_FAMILY_TAGS)}."
        )
        raise typer.Exit(code=_USAGE_ERROR_EXIT)
    return tuple(values)  # type: ignore[arg-type]


def _fail(exc: CDLatticeError) -> NoReturn:
    code = _CAPACITY_ERROR_EXIT if isinstance(exc, CapacityError) else _USAGE_ERROR_EXIT
    err_console.print(f"[bold red]✗ Error:[/] {escape(str(exc))}")
    if isinstance(exc, CapacityError) and exc.partial_count is not None:
        err_console.print(f"  • Subgroups found before stopping: {exc.partial_count}")
    raise typer.Exit(code=code) from exc


def _run_sweep_with_progress(
    sweep_filter: SweepFilter, limits: Limits, workers: int
) -> SweepReport:
    progress = _progress_renderer()
    task_id = progress.add_task("Sweeping catalog", total=None)

    def _on_progress(completed: int, total: int) -> None:
        progress.update(task_id, completed=completed, total=total)

    with progress:
        return run_sweep(
            sweep_filter, limits=limits, workers=workers, progress_callback=_on_progress
        )


def _progress_renderer() -> Progress:
    return Progress(
        SpinnerColumn(),
        TextColumn("{task.description}"),
        BarColumn(),
        TextColumn("{task.completed}/{task.total}"),
        TimeElapsedColumn(),
        console=console,
    )


def _render_verification(result: VerificationResult) -> None:
    report = result.cd_report
    theorem = result.theorem
    console.print(
        f"[bold]{report.group}[/] (order {report.order}): {len(result.lattice)} subgroups, "
        f"m* = {report.m_star}, |CD(G)| = {len(report.cd_members)}"
    )
    console.print(f"Hypothesis (equal cyclic measures): [cyan]{theorem.hypothesis}[/]")
    if theorem.p is not None:
        console.print(f"p = {theorem.p}, (n, m, k) = ({theorem.n}, {theorem.m}, {theorem.k})")
    if theorem.bound_slack is not None:
        console.print(f"Bound slack n - 2m + 2 - k = {theorem.bound_slack}")

    table = Table(title="Conclusions")
    table.add_column("Check", style="cyan", no_wrap=True)
    table.add_column("Verdict", justify="center")
    for name, value in theorem.conclusions.items():
        table.add_row(name, _styled(value))
    if theorem.corollary is not None:
        for name, value in theorem.corollary.verdicts.items():
            table.add_row(f"corollary: {name}", _styled(value))
    for check in report.properties:
        table.add_row(f"property: {check.name}", _styled("pass" if check.passed else "fail"))
    console.print(table)

    if theorem.corollary is not None:
        corollary = theorem.corollary
        console.print(
            f"Corollary: condition a = {corollary.condition_a}, condition b = "
            f"{corollary.condition_b}, recognition = {corollary.recognition}"
        )


def _render_sweep(report: SweepReport) -> None:
    table = Table(title="Sweep Results")
    table.add_column("Group", style="cyan", no_wrap=True)
    table.add_column("Order", justify="right")
    table.add_column("Hyp", justify="center")
    table.add_column("a", justify="center")
    table.add_column("b", justify="center")
    table.add_column("(n,m,k)", justify="center")
    table.add_column("Slack", justify="right")
    table.add_column("m*", justify="right", style="yellow")
    table.add_column("|CD|", justify="right", style="green")
    for row in report.rows:
        table.add_row(*_sweep_cells(row))
    console.print(table)

    summary = report.summary
    console.print(f"[green]✓ Swept {summary.rows} groups[/] ({summary.failures} failed to run)")
    console.print(f"Hypothesis holders: {', '.join(summary.hypothesis_holders) or '-'}")
    console.print(f"Non-abelian holders: {', '.join(summary.nonabelian_holders) or '-'}")
    console.print(f"Corollary holders: {', '.join(summary.corollary_holders) or '-'}")
    for row in report.rows:
        if row.error is not None:
            console.print(f"[yellow]⚠ {row.label}: {row.error}[/]")


def _sweep_cells(row: SweepRow) -> List[str]:
    if row.error is not None:
        return [row.label, str(row.order), "error", "", "", "", "", "", ""]
    nmk = f"({row.n},{row.m},{row.k})" if row.n is not None else "-"
    return [
        row.label,
        str(row.order),
        str(row.hypothesis),
        _flag(row.condition_a),
        _flag(row.condition_b),
        nmk,
        "" if row.bound_slack is None else str(row.bound_slack),
        str(row.m_star),
        str(row.cd_member_count),
    ]


def _flag(value: Optional[bool]) -> str:
    if value is None:
        return ""
    return "yes" if value else "no"


def _styled(value: str) -> str:
    if value == "pass":
        return "[green]pass[/]"
    if value == "fail":
        return "[bold red]fail[/]"
    return "[dim]n/a[/]"


__all__ = [
    "catalog",
    "configure_logging",
    "describe",
    "dot",
    "schema",
    "sweep",
    "verify",
]

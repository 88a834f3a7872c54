"""Text 报告 — rich 终端美化输出"""

from collections.abc import Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from hyperjulia.result.models import BetaReport, ReportDocument, SweepRow


def _mark(flag: bool | None) -> str:
    if flag is None:
        return "[dim]-[/]"
    return "[green]✓[/]" if flag else "[red]✗[/]"


def _num(value: float) -> str:
    return f"{value:.12g}"


def render(
    document: ReportDocument,
    verbose: bool = False,
    console: Console | None = None,
) -> None:
    """
    将 verify 结果渲染为终端文本。
    verbose=True 时附带每条报告的诊断信息与跳过原因。
    """
    console = console or Console()
    header = document.header
    status = "passed" if document.passed else ("error" if document.error else "failed")
    status_style = "green" if status == "passed" else "red"
    title = (
        f"[bold]{header.suite}[/bold]  [{status_style}]{status}[/]  "
        f"(seed {header.seed}, {header.tool} {header.version})"
    )
    console.print(Panel(title, title="校验套件", border_style="blue"))

    table = Table(show_header=True, header_style="bold")
    table.add_column("#", style="dim")
    table.add_column("名称")
    table.add_column("lhs", justify="right")
    table.add_column("rhs", justify="right")
    table.add_column("gap", justify="right")
    table.add_column("成立")
    table.add_column("等号")
    table.add_column("期望")
    for i, r in enumerate(document.reports):
        table.add_row(
            str(i),
            r.name,
            _num(r.lhs),
            _num(r.rhs),
            _num(r.gap),
            _mark(r.holds),
            _mark(r.equality),
            _mark(r.expectation_met),
        )
    console.print(table)

    passed = sum(1 for r in document.reports if r.passed)
    console.print(
        f"  [dim]报告: {passed}/{len(document.reports)} 通过 | 跳过: {len(document.skipped)}[/dim]"
    )
    if document.error is not None:
        console.print(f"  [red][{document.error.code}] {document.error.message}[/red]")

    if verbose:
        for r in document.reports:
            if r.diagnostic:
                console.print(f"  [dim]{r.name}: {r.diagnostic}[/dim]")
        for reason in document.skipped:
            console.print(f"  [yellow]跳过 {reason}[/yellow]")


def render_sweep(rows: Sequence[SweepRow], console: Console | None = None) -> None:
    console = console or Console()
    table = Table(show_header=True, header_style="bold")
    for column in ("index", "variable", "value", "lhs", "rhs", "gap", "holds"):
        table.add_column(column)
    for r in rows:
        table.add_row(
            str(r.index),
            r.variable,
            _num(r.value),
            _num(r.lhs),
            _num(r.rhs),
            _num(r.gap),
            _mark(r.holds),
        )
    console.print(table)


def render_betas(reports: Sequence[BetaReport], console: Console | None = None) -> None:
    console = console or Console()
    table = Table(show_header=True, header_style="bold")
    for column in ("σ", "τ", "β", "方法", "置信度", "偏差"):
        table.add_column(column)
    for r in reports:
        table.add_row(
            f"{complex(*r.sigma):.12g}",
            f"{complex(*r.tau):.12g}" if r.tau is not None else "-",
            _num(r.beta),
            r.method,
            f"{r.confidence:.3e}",
            f"{r.discrepancy:.3e}" if r.discrepancy is not None else "-",
        )
    console.print(table)
    for r in reports:
        if r.error is not None:
            console.print(f"  [red][{r.error.code}] {r.error.message}[/red]")

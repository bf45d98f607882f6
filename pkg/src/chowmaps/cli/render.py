"""
Renderers for CLI documents: text, JSON and LaTeX on stdout, rich tables on stderr.
"""

from __future__ import annotations

import json
from collections import Counter
from typing import Any, List, Sequence

from rich.console import Console
from rich.table import Table

from ..algebra.poly_core import format_poly, from_terms
from ..ideals.binomials import BinomialGcd
from ..models.reports import ClassReport, OutputFormat, PresentationReport, VerifyReport

stderr_console = Console(stderr=True)


def dump_json(payload: Any, indent: int = 2) -> str:
    return json.dumps(payload, indent=indent, ensure_ascii=False)


def _latex(item: ClassReport) -> str:
    return format_poly(from_terms(item.terms), style="latex")


def _class_line(item: ClassReport) -> str:
    degree = "-" if item.degree is None else item.degree
    return f"  {item.label:<12} degree {degree:<4} {item.text}"


def presentation_text(report: PresentationReport) -> str:
    lines = [f"A*(M0(P^{report.r}, {report.d})) = Z[c₁, c₂] / I", "generators:"]
    lines.extend(_class_line(item) for item in report.generators)
    if report.full:
        lines.append("all relations:")
        lines.extend(_class_line(item) for item in report.relations)
    return "\n".join(lines)


def presentation_latex(report: PresentationReport) -> str:
    generators = ",\\ ".join(_latex(item) for item in report.generators)
    lines = [
        f"A^*(\\overline{{M}}_0(\\mathbb{{P}}^{{{report.r}}}, {report.d})) \\cong "
        f"\\mathbb{{Z}}[c_1,c_2]/\\left({generators}\\right)"
    ]
    if report.full:
        lines.append("\\begin{align*}")
        lines.extend(
            f"\\alpha_{{{item.i},{item.k}}} &= {_latex(item)} \\\\" for item in report.relations
        )
        lines.append("\\end{align*}")
    return "\n".join(lines)


def render_presentations(reports: Sequence[PresentationReport], fmt: OutputFormat, indent: int = 2) -> str:
    if fmt is OutputFormat.JSON:
        payload = [report.model_dump(mode="json") for report in reports]
        return dump_json(payload[0] if len(payload) == 1 else payload, indent)
    render = presentation_latex if fmt is OutputFormat.LATEX else presentation_text
    return "\n\n".join(render(report) for report in reports)


def render_classes(items: Sequence[ClassReport], coords: Sequence[tuple], fmt: OutputFormat,
                   indent: int = 2) -> str:
    """Single alpha classes; ``coords`` holds the matching (r, d)."""
    if fmt is OutputFormat.JSON:
        payload = [dict(item.model_dump(mode="json"), r=r, d=d) for item, (r, d) in zip(items, coords)]
        return dump_json(payload[0] if len(payload) == 1 else payload, indent)
    if len(items) == 1:
        return _latex(items[0]) if fmt is OutputFormat.LATEX else items[0].text
    if fmt is OutputFormat.LATEX:
        return "\n".join(
            f"\\alpha^{{{r},{d}}}_{{{item.i},{item.k}}} = {_latex(item)}"
            for item, (r, d) in zip(items, coords)
        )
    return "\n".join(f"{item.label} r={r} d={d}: {item.text}" for item, (r, d) in zip(items, coords))


def _summary(report: VerifyReport) -> List[tuple]:
    totals: Counter = Counter()
    passed: Counter = Counter()
    exploratory = set()
    for cell in report.cells:
        totals[cell.check] += 1
        passed[cell.check] += int(cell.passed)
        if cell.exploratory:
            exploratory.add(cell.check)
    return [(check, passed[check], totals[check], check in exploratory) for check in totals]


def _cell_coords(cell) -> str:
    parts = [f"{name}={value}" for name, value in (("i", cell.i), ("k", cell.k), ("r", cell.r), ("d", cell.d))
             if value is not None]
    return ", ".join(parts)


def verify_text(report: VerifyReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"verify {report.kind.value}: {status} ({len(report.cells)} checks, {len(report.failing)} failing)"]
    for check, ok, total, exploratory in _summary(report):
        suffix = " (recorded)" if exploratory else ""
        lines.append(f"  {check:<34} {ok}/{total}{suffix}")
    for cell in report.failing:
        detail = f": {cell.detail}" if cell.detail else ""
        lines.append(f"  FAILED {cell.check} at {_cell_coords(cell)}{detail}")
    lines.extend(f"  note: {finding}" for finding in report.findings)
    return "\n".join(lines)


def verify_latex(report: VerifyReport) -> str:
    lines = ["\\begin{tabular}{lr}", "check & passed \\\\", "\\hline"]
    for check, ok, total, _ in _summary(report):
        lines.append(f"\\texttt{{{check}}} & {ok}/{total} \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def render_verify(report: VerifyReport, fmt: OutputFormat, indent: int = 2) -> str:
    if fmt is OutputFormat.JSON:
        return dump_json(report.model_dump(mode="json"), indent)
    if fmt is OutputFormat.LATEX:
        return verify_latex(report)
    return verify_text(report)


def render_binomials(results: Sequence[BinomialGcd], fmt: OutputFormat, indent: int = 2) -> str:
    if fmt is OutputFormat.JSON:
        payload = [
            {"i": b.i, "gcd": b.gcd, "is_prime_power": b.is_prime_power, "p": b.p} for b in results
        ]
        return dump_json(payload[0] if len(payload) == 1 else payload, indent)
    lines = []
    for b in results:
        kind = f"prime power of {b.p}" if b.is_prime_power else "not a prime power"
        lines.append(f"i={b.i}: gcd {b.gcd}, {kind}")
    return "\n".join(lines)


def print_verify_table(report: VerifyReport, console: Console = stderr_console) -> None:
    table = Table(title=f"verify {report.kind.value}")
    table.add_column("check")
    table.add_column("passed", justify="right")
    table.add_column("status")
    for check, ok, total, exploratory in _summary(report):
        if exploratory:
            status = "[yellow]recorded[/yellow]"
        else:
            status = "[green]ok[/green]" if ok == total else "[red]failed[/red]"
        table.add_row(check, f"{ok}/{total}", status)
    console.print(table)
    console.print(f"elapsed {report.elapsed:.3f}s")

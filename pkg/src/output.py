import csv
import io
import json
import sys
from enum import Enum
from typing import Any, Dict

from .abelian import AbGroup
from .models import ResultTable, ValidationReport


class OutputFormat(str, Enum):

    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"


def group_text(group: AbGroup) -> str:
    return str(group)


def group_latex(group: AbGroup) -> str:
    parts = []
    if group.free_rank == 1:
        parts.append(r"\mathbb{Z}")
    elif group.free_rank > 1:
        parts.append(rf"\mathbb{{Z}}^{{{group.free_rank}}}")
    parts.extend(rf"\mathbb{{Z}}/{d}" for d in group.torsion)
    return r" \oplus ".join(parts) if parts else "0"


def _prefix(table: ResultTable) -> str:
    return "H^" if table.kind == "cohomology" else "H_"


class TableOutputter:
    """Renders one ResultTable in any of the supported formats."""

    def render(self, table: ResultTable, fmt: OutputFormat) -> str:
        renderer = {
            OutputFormat.TEXT: self.render_text,
            OutputFormat.JSON: self.render_json,
            OutputFormat.CSV: self.render_csv,
            OutputFormat.LATEX: self.render_latex,
        }[OutputFormat(fmt)]
        return renderer(table)

    def render_text(self, table: ResultTable) -> str:
        monoid = f"C_({table.monoid.index},{table.monoid.period})"
        header = f"# {table.kind} of a {table.side.value} module over {monoid}"
        lines = [f"{header} ({table.method.value})"]
        width = len(str(table.rows[-1].degree)) if table.rows else 1
        for row in table.rows:
            lines.append(f"{_prefix(table)}{row.degree:<{width}}  {group_text(row.group)}")
        return "\n".join(lines)

    def table_data(self, table: ResultTable) -> Dict[str, Any]:
        return {
            "kind": table.kind,
            "monoid": {"index": table.monoid.index, "period": table.monoid.period},
            "side": table.side.value,
            "method": table.method.value,
            "rows": [{"degree": r.degree, "group": r.group.to_json()} for r in table.rows],
        }

    def render_json(self, table: ResultTable) -> str:
        return json.dumps(self.table_data(table), separators=(",", ":"))

    def render_csv(self, table: ResultTable) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["degree", "rank", "torsion", "group"])
        for row in table.rows:
            torsion = ";".join(str(d) for d in row.group.torsion)
            writer.writerow([row.degree, row.group.free_rank, torsion, group_text(row.group)])
        return buffer.getvalue().rstrip("\n")

    def render_latex(self, table: ResultTable) -> str:
        symbol = _prefix(table) + "n"
        lines = [
            r"\begin{tabular}{rl}",
            rf"$n$ & ${symbol}(C_{{{table.monoid.index},{table.monoid.period}}})$ \\",
            r"\hline",
        ]
        for row in table.rows:
            lines.append(rf"{row.degree} & ${group_latex(row.group)}$ \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)

    def output_table(self, table: ResultTable, fmt: OutputFormat) -> None:
        print(self.render(table, fmt), file=sys.stdout)
        sys.stdout.flush()

    def output_report(self, report: ValidationReport, fmt: OutputFormat) -> None:
        if OutputFormat(fmt) is OutputFormat.JSON:
            print(report.model_dump_json(), file=sys.stdout)
        else:
            print(report.summary(), file=sys.stdout)
        sys.stdout.flush()

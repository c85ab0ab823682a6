"""
Tests for table and report rendering.
"""

import json
from io import StringIO
from unittest.mock import patch

import pytest

from src.abelian import GroupDecomposition
from src.models import DegreeRow, Method, MonoidSpec, ResultTable, Side, ValidationReport
from src.output import OutputFormat, TableOutputter, group_latex, group_text


@pytest.fixture
def outputter():
    """Create TableOutputter instance."""
    return TableOutputter()


@pytest.fixture
def sample_table():
    """Cohomology of constant Z over C_(1,3) up to degree 2."""
    groups = [
        GroupDecomposition(free_rank=1),
        GroupDecomposition(),
        GroupDecomposition(torsion=(3,)),
    ]
    return ResultTable(
        kind="cohomology",
        monoid=MonoidSpec(index=1, period=3),
        side=Side.LEFT,
        rows=[DegreeRow(degree=n, group=g) for n, g in enumerate(groups)],
    )


def test_group_text_and_latex():
    group = GroupDecomposition(free_rank=2, torsion=(2, 6))
    assert group_text(group) == "Z^2 + Z/2 + Z/6"
    assert group_latex(group) == r"\mathbb{Z}^{2} \oplus \mathbb{Z}/2 \oplus \mathbb{Z}/6"
    assert group_latex(GroupDecomposition()) == "0"
    assert group_latex(GroupDecomposition(free_rank=1)) == r"\mathbb{Z}"


def test_render_text(outputter, sample_table):
    text = outputter.render(sample_table, OutputFormat.TEXT)
    assert text.splitlines() == [
        "# cohomology of a left module over C_(1,3) (closed-form)",
        "H^0  Z",
        "H^1  0",
        "H^2  Z/3",
    ]


def test_render_text_pads_degrees(outputter, sample_table):
    rows = [DegreeRow(degree=n, group=GroupDecomposition()) for n in range(11)]
    table = sample_table.model_copy(update={"rows": rows, "kind": "homology"})
    lines = outputter.render_text(table).splitlines()
    assert lines[1] == "H_0   0"
    assert lines[-1] == "H_10  0"


def test_render_json(outputter, sample_table):
    data = json.loads(outputter.render(sample_table, OutputFormat.JSON))
    assert data["kind"] == "cohomology"
    assert data["side"] == "left"
    assert data["method"] == "closed-form"
    assert data["rows"][2] == {"degree": 2, "group": {"rank": 0, "torsion": [3]}}


def test_oracle_tables_are_labelled(outputter, sample_table):
    table = sample_table.model_copy(update={"method": Method.ORACLE})
    assert outputter.render_text(table).splitlines()[0].endswith("(oracle)")
    assert json.loads(outputter.render_json(table))["method"] == "oracle"


def test_render_csv(outputter, sample_table):
    lines = outputter.render(sample_table, "csv").splitlines()
    assert lines == ["degree,rank,torsion,group", "0,1,,Z", "1,0,,0", "2,0,3,Z/3"]


def test_render_latex(outputter, sample_table):
    lines = outputter.render(sample_table, OutputFormat.LATEX).splitlines()
    assert lines[0] == r"\begin{tabular}{rl}"
    assert lines[1] == r"$n$ & $H^n(C_{1,3})$ \\"
    assert lines[-2] == r"2 & $\mathbb{Z}/3$ \\"
    assert lines[-1] == r"\end{tabular}"


def test_output_table_writes_stdout(outputter, sample_table):
    with patch("sys.stdout", new_callable=StringIO) as mock_stdout:
        outputter.output_table(sample_table, OutputFormat.CSV)
    assert mock_stdout.getvalue().endswith("2,0,3,Z/3\n")


def test_output_report(outputter):
    report = ValidationReport(name="axioms")
    report.record(True, "A", 0)
    report.record(False, "B", 1, "1_* and 1^* do not commute", [0, 1])

    with patch("sys.stdout", new_callable=StringIO) as mock_stdout:
        outputter.output_report(report, OutputFormat.TEXT)
    text = mock_stdout.getvalue()
    assert "FAILED (1 of 2 checks)" in text
    assert "[B] at element 1: 1_* and 1^* do not commute witness [0, 1]" in text

    with patch("sys.stdout", new_callable=StringIO) as mock_stdout:
        outputter.output_report(report, OutputFormat.JSON)
    data = json.loads(mock_stdout.getvalue())
    assert data["passed"] is False
    assert data["checked"] == 2
    assert data["violations"][0]["witness"] == [0, 1]


def test_rendering_is_deterministic(outputter, sample_table):
    for fmt in OutputFormat:
        assert outputter.render(sample_table, fmt) == outputter.render(sample_table, fmt)

"""
Tests for CLI functionality.
"""

import json

import pytest
from typer.testing import CliRunner

from src.cli import app, builtin_module
from src.leech import constant_Z, free_module, random_module
from src.models import ModuleSpecFile, Side
from src.module_files import build_module, dump_module, read_module_spec
from src.monoid import CyclicMonoid
from src.utils.exceptions import FlagError

runner = CliRunner()


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(path)


@pytest.fixture
def left_file(tmp_path):
    """Random lawful left module over C_(1,2)."""
    module = random_module(CyclicMonoid(index=1, period=2), Side.LEFT, 5)
    return _write(tmp_path, "left.json", dump_module(module))


@pytest.fixture
def right_file(tmp_path):
    module = constant_Z(CyclicMonoid(index=2, period=3), Side.RIGHT)
    return _write(tmp_path, "right.json", dump_module(module))


@pytest.fixture
def broken_file(tmp_path):
    """1_* = 2 on Z: 2^3 != 2^1, so the periodicity axiom fails."""
    payload = {
        "monoid": {"index": 1, "period": 2},
        "side": "left",
        "groups": [{"free_rank": 1}] * 3,
        "push1": [[[2]]] * 3,
        "pull1": [[[1]]] * 3,
    }
    return _write(tmp_path, "broken.json", payload)


@pytest.fixture
def ill_defined_file(tmp_path):
    """Z/2 -> Z with a nonzero entry is not a homomorphism."""
    payload = {
        "monoid": {"index": 1, "period": 2},
        "side": "left",
        "groups": [{"torsion": [2]}, {"free_rank": 1}, {"free_rank": 1}],
        "push1": [[[1]], [[1]], [[1]]],
        "pull1": [[[1]], [[1]], [[1]]],
    }
    return _write(tmp_path, "ill.json", payload)


def test_builtin_constant_z_table():
    result = runner.invoke(app, ["builtin", "-m", "2", "-q", "9", "--max-degree", "6"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "# cohomology of a left module over C_(2,9) (closed-form)"
    assert [line.split(None, 1)[1] for line in lines[1:]] == [
        "Z", "0", "Z/9", "0", "Z/9", "0", "Z/9"
    ]
    assert lines[3].startswith("H^2")


def test_builtin_oracle_method_labels_the_table():
    args = ["builtin", "-m", "1", "-q", "3", "--max-degree", "4"]
    closed = runner.invoke(app, args)
    oracle = runner.invoke(app, args + ["--method", "oracle"])
    assert closed.exit_code == 0 and oracle.exit_code == 0
    closed_lines = closed.stdout.strip().splitlines()
    oracle_lines = oracle.stdout.strip().splitlines()
    assert closed_lines[0].endswith("(closed-form)")
    assert oracle_lines[0] == "# cohomology of a left module over C_(1,3) (oracle)"
    assert oracle_lines[1:] == closed_lines[1:]

    data = json.loads(
        runner.invoke(app, args + ["--method", "oracle", "--format", "json"]).stdout
    )
    assert data["method"] == "oracle"


def test_builtin_homology_json():
    result = runner.invoke(
        app,
        ["builtin", "-m", "3", "-q", "4", "--side", "right", "--max-degree", "2",
         "--format", "json"],
    )
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["kind"] == "homology"
    assert data["monoid"] == {"index": 3, "period": 4}
    assert [row["group"] for row in data["rows"]] == [
        {"rank": 1, "torsion": []},
        {"rank": 0, "torsion": [4]},
        {"rank": 0, "torsion": []},
    ]


def test_builtin_trivial_coefficients_csv():
    result = runner.invoke(
        app,
        ["builtin", "--module", "trivial:0,6", "-m", "1", "-q", "4", "--max-degree", "2",
         "--format", "csv"],
    )
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "degree,rank,torsion,group"
    assert lines[1] == "0,1,6,Z + Z/6"
    assert lines[2] == "1,0,2,Z/2"
    assert lines[3] == "2,0,2;4,Z/2 + Z/4"


def test_builtin_free_module_latex():
    result = runner.invoke(
        app,
        ["builtin", "--module", "free:0", "-m", "1", "-q", "2", "--max-degree", "1",
         "--format", "latex"],
    )
    assert result.exit_code == 0
    assert result.stdout.startswith(r"\begin{tabular}")
    assert r"\end{tabular}" in result.stdout


@pytest.mark.parametrize(
    "args",
    [
        ["builtin", "--module", "bogus", "-m", "1", "-q", "2"],
        ["builtin", "--module", "trivial:x", "-m", "1", "-q", "2"],
        ["builtin", "--module", "free:", "-m", "1", "-q", "2"],
        ["builtin", "-m", "0", "-q", "1"],
        ["builtin", "-m", "1", "-q", "2", "--side", "right", "--kind", "cohomology"],
        ["builtin", "-m", "1", "-q", "2", "--kind", "ext"],
    ],
)
def test_builtin_flag_errors(args):
    result = runner.invoke(app, args)
    assert result.exit_code == 2
    assert "Error" in result.output


def test_builtin_module_helper():
    monoid = CyclicMonoid(index=1, period=2)
    assert builtin_module("free:0,1", monoid, Side.RIGHT).side is Side.RIGHT
    assert str(builtin_module("trivial:2,3", monoid, Side.LEFT).groups[0]) == "Z/6"
    with pytest.raises(FlagError):
        builtin_module("trivial:-2", monoid, Side.LEFT)
    with pytest.raises(FlagError):
        builtin_module("free:-1", monoid, Side.LEFT)


def test_validate_passes(left_file):
    result = runner.invoke(app, ["validate", left_file])
    assert result.exit_code == 0
    assert "passed" in result.stdout


def test_validate_reports_axiom_failures(broken_file):
    result = runner.invoke(app, ["validate", broken_file, "--format", "json"])
    assert result.exit_code == 1
    report = json.loads(result.stdout)
    assert report["passed"] is False
    assert {v["check"] for v in report["violations"]} == {"A"}


def test_validate_reports_ill_defined_matrices(ill_defined_file):
    result = runner.invoke(app, ["validate", ill_defined_file])
    assert result.exit_code == 1
    assert "[C]" in result.stdout


def test_validate_reads_stdin(left_file):
    with open(left_file) as f:
        result = runner.invoke(app, ["validate", "-"], input=f.read())
    assert result.exit_code == 0


def test_missing_and_malformed_files(tmp_path):
    result = runner.invoke(app, ["validate", str(tmp_path / "nope.json")])
    assert result.exit_code == 2

    bad_json = _write(tmp_path, "bad.json", "{not json")
    assert runner.invoke(app, ["cohomology", bad_json]).exit_code == 2

    wrong_length = _write(
        tmp_path,
        "short.json",
        {"monoid": {"index": 1, "period": 2}, "side": "left", "groups": [{}],
         "push1": [], "pull1": []},
    )
    result = runner.invoke(app, ["validate", wrong_length])
    assert result.exit_code == 2
    assert "groups" in result.output


def test_cohomology_of_a_file(left_file):
    result = runner.invoke(app, ["cohomology", left_file, "--max-degree", "3"])
    assert result.exit_code == 0
    assert len(result.stdout.strip().splitlines()) == 5


def test_homology_of_a_file(right_file):
    result = runner.invoke(app, ["homology", right_file, "--max-degree", "2", "--format", "csv"])
    assert result.exit_code == 0
    assert result.stdout.strip().splitlines()[1:] == ["0,1,,Z", "1,0,3,Z/3", "2,0,,0"]


def test_homology_of_a_file_by_oracle(right_file):
    args = ["homology", right_file, "--max-degree", "2", "--format", "csv", "--method", "oracle"]
    result = runner.invoke(app, args)
    assert result.exit_code == 0
    assert result.stdout.strip().splitlines()[1:] == ["0,1,,Z", "1,0,3,Z/3", "2,0,,0"]


def test_unknown_method_is_a_usage_error(left_file):
    result = runner.invoke(app, ["cohomology", left_file, "--method", "guess"])
    assert result.exit_code == 2


def test_side_mismatch_is_a_flag_error(right_file):
    result = runner.invoke(app, ["cohomology", right_file])
    assert result.exit_code == 2


def test_unlawful_module_is_rejected(broken_file, ill_defined_file):
    assert runner.invoke(app, ["cohomology", broken_file]).exit_code == 3
    assert runner.invoke(app, ["lemma-check", ill_defined_file]).exit_code == 3


def test_oracle_check_command(left_file):
    result = runner.invoke(app, ["oracle-check", left_file, "--max-degree", "3"])
    assert result.exit_code == 0
    assert "all degrees agree" in result.stdout


def test_resolution_check_command():
    result = runner.invoke(app, ["resolution-check", "-m", "2", "-q", "3", "--max-degree", "3"])
    assert result.exit_code == 0
    assert "passed" in result.stdout


def test_random_command_prints_a_lawful_module():
    result = runner.invoke(app, ["random", "--seed", "3", "-m", "2", "-q", "2", "--side", "right"])
    assert result.exit_code == 0
    module, report = build_module(ModuleSpecFile.model_validate_json(result.stdout))
    assert report.passed
    assert module is not None and module.side is Side.RIGHT


def test_random_command_is_deterministic():
    args = ["random", "--seed", "11", "-m", "1", "-q", "3", "--symmetric"]
    assert runner.invoke(app, args).stdout == runner.invoke(app, args).stdout


def test_lemma_and_periodicity_checks(left_file):
    assert runner.invoke(app, ["lemma-check", left_file]).exit_code == 0
    result = runner.invoke(app, ["periodicity-check", left_file, "--format", "json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    # one full period (4) of degree pairs plus the index-one clause
    assert report["checked"] >= 4


def test_config_file_sets_defaults(tmp_path):
    config = _write(
        tmp_path, "leech.yaml", "max_degree: 2\noutput:\n  default_format: json\n"
    )
    result = runner.invoke(app, ["builtin", "-m", "1", "-q", "2", "--config", config])
    assert result.exit_code == 0
    assert len(json.loads(result.stdout)["rows"]) == 3


def test_bad_default_format_in_config(tmp_path):
    config = _write(tmp_path, "leech.yaml", "output:\n  default_format: yaml\n")
    result = runner.invoke(app, ["builtin", "-m", "1", "-q", "2", "--config", config])
    assert result.exit_code == 2


@pytest.mark.parametrize("text", ["max_degree: eight\n", "oracle:\n  max_degree: 2.5\n"])
def test_non_integer_config_is_a_flag_error(tmp_path, text):
    config = _write(tmp_path, "leech.yaml", text)
    result = runner.invoke(app, ["builtin", "-m", "1", "-q", "2", "--config", config])
    assert result.exit_code == 2
    assert "must be an integer" in result.output


def test_bad_random_bounds_in_config(tmp_path):
    config = _write(tmp_path, "leech.yaml", "random_module:\n  max_blocks: 0\n")
    result = runner.invoke(app, ["random", "-m", "1", "-q", "2", "--config", config])
    assert result.exit_code == 2


def test_module_file_round_trip(tmp_path):
    module = free_module(CyclicMonoid(index=1, period=2), [("v", 1)])
    path = _write(tmp_path, "free.json", dump_module(module))
    rebuilt, report = build_module(read_module_spec(path), path)
    assert report.passed
    assert rebuilt == module

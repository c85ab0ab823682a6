"""
Main CLI application
"""

import sys
from contextlib import contextmanager
from typing import Iterator, List, Optional

import typer

from .abelian import AbGroup
from .cohomology import (
    cohomology_table,
    homology_table,
    oracle_check,
    oracle_table,
    periodicity_check,
)
from .config import Settings
from .leech import (
    LeechModule,
    RandomModuleBounds,
    constant_Z,
    dual_module,
    free_module,
    random_module,
    trivial_module,
)
from .logging_utils import get_logger, setup_logging
from .models import DegreeRow, Method, MonoidSpec, ResultTable, Side
from .module_files import build_module, dump_module, load_module, read_module_spec
from .monoid import CyclicMonoid
from .output import OutputFormat, TableOutputter
from .resolution import collapse_count_report, verify_exactness
from .trace_maps import lemma_report
from .utils.exceptions import FlagError, InvalidMonoidError, LeechError, OracleMismatchError

app = typer.Typer(help="Leech (co)homology of finite cyclic monoids")

CONFIG_OPTION = typer.Option(None, "--config", help="YAML file with tunables")
FORMAT_OPTION = typer.Option(None, "--format", help="text, json, csv or latex")
MAX_DEGREE_OPTION = typer.Option(
    None, "--max-degree", min=0, help="highest degree (default: LEECH_MAX_DEGREE_DEFAULT)"
)
METHOD_OPTION = typer.Option(
    Method.CLOSED_FORM, "--method", help="closed-form, or oracle for the first-principles complex"
)


def _validate_environment(config: Optional[str] = None) -> Settings:
    # logging_utils will exit(1) for an invalid LOG_FILE or LOG_LEVEL
    setup_logging()
    with _exit_on_error():
        settings = Settings(config)
    return settings


@contextmanager
def _exit_on_error() -> Iterator[None]:
    # every toolkit error becomes its own exit code
    try:
        yield
    except LeechError as e:
        get_logger().error(str(e))
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(e.exit_code)


def _format(fmt: Optional[OutputFormat], settings: Settings) -> OutputFormat:
    if fmt is not None:
        return fmt
    try:
        return OutputFormat(settings.default_format)
    except ValueError:
        raise FlagError(f"unknown default format {settings.default_format!r} in config")


def _monoid(index: int, period: int) -> CyclicMonoid:
    try:
        return CyclicMonoid(index=index, period=period)
    except InvalidMonoidError as e:
        raise FlagError(e.detail)


def _table(
    module: LeechModule, kind: str, max_degree: int, method: Method = Method.CLOSED_FORM
) -> ResultTable:
    if kind == "cohomology" and not module.is_left:
        raise FlagError("cohomology needs a left module; use homology for right modules")
    if kind == "homology" and module.is_left:
        raise FlagError("homology needs a right module; use cohomology for left modules")
    if method is Method.ORACLE:
        groups = oracle_table(module, max_degree)
    elif kind == "cohomology":
        groups = cohomology_table(module, max_degree)
    else:
        groups = homology_table(module, max_degree)
    return ResultTable(
        kind=kind,
        monoid=MonoidSpec(index=module.monoid.index, period=module.monoid.period),
        side=module.side,
        method=method,
        rows=[DegreeRow(degree=n, group=g) for n, g in enumerate(groups)],
    )


def _int_list(text: str, label: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise FlagError(f"{label} expects comma-separated integers, got {text!r}")


def builtin_module(spec: str, monoid: CyclicMonoid, side: Side) -> LeechModule:
    """constant-z, trivial:<orders> (e.g. trivial:0,6) or free:<pi-list> (e.g. free:0,1)."""
    name, _, argument = spec.partition(":")
    if name == "constant-z":
        return constant_Z(monoid, side)
    if name == "trivial":
        orders = _int_list(argument, "trivial:")
        if any(o < 0 for o in orders):
            raise FlagError("trivial: orders must be 0 (for Z) or positive")
        group = AbGroup.from_orders(orders)
        return trivial_module(monoid, side, group)
    if name == "free":
        pis = _int_list(argument, "free:")
        if not pis:
            raise FlagError("free: needs at least one point")
        if any(pi < 0 for pi in pis):
            raise FlagError("free: points must be natural numbers")
        module = free_module(monoid, [(f"s{i}", pi) for i, pi in enumerate(pis)])
        return module if side is Side.LEFT else dual_module(module)
    raise FlagError(f"unknown builtin module {spec!r}")


@app.command()
def validate(
    module_file: str = typer.Argument(..., help="module JSON file, or - for stdin"),
    fmt: Optional[OutputFormat] = FORMAT_OPTION,
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """Check axioms (A), (B), (C); exit 1 when any fails."""
    settings = _validate_environment(config)
    with _exit_on_error():
        _, report = build_module(read_module_spec(module_file), module_file)
        TableOutputter().output_report(report, _format(fmt, settings))
    if not report.passed:
        raise typer.Exit(1)


@app.command()
def cohomology(
    module_file: str = typer.Argument(..., help="left module JSON file, or - for stdin"),
    max_degree: Optional[int] = MAX_DEGREE_OPTION,
    method: Method = METHOD_OPTION,
    fmt: Optional[OutputFormat] = FORMAT_OPTION,
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """H^0 .. H^N of a left module."""
    settings = _validate_environment(config)
    with _exit_on_error():
        module = load_module(module_file)
        top = settings.max_degree_default if max_degree is None else max_degree
        table = _table(module, "cohomology", top, method)
        TableOutputter().output_table(table, _format(fmt, settings))


@app.command()
def homology(
    module_file: str = typer.Argument(..., help="right module JSON file, or - for stdin"),
    max_degree: Optional[int] = MAX_DEGREE_OPTION,
    method: Method = METHOD_OPTION,
    fmt: Optional[OutputFormat] = FORMAT_OPTION,
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """H_0 .. H_N of a right module."""
    settings = _validate_environment(config)
    with _exit_on_error():
        module = load_module(module_file)
        top = settings.max_degree_default if max_degree is None else max_degree
        table = _table(module, "homology", top, method)
        TableOutputter().output_table(table, _format(fmt, settings))


@app.command("oracle-check")
def oracle_check_command(
    module_file: str = typer.Argument(..., help="module JSON file, or - for stdin"),
    max_degree: Optional[int] = MAX_DEGREE_OPTION,
    fmt: Optional[OutputFormat] = FORMAT_OPTION,
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """Compare the closed form with the complex built from first principles; exit 4 on mismatch."""
    settings = _validate_environment(config)
    with _exit_on_error():
        module = load_module(module_file)
        top = settings.oracle_max_degree if max_degree is None else max_degree
        report = oracle_check(module, top)
        TableOutputter().output_report(report, _format(fmt, settings))
        if not report.passed:
            first = report.violations[0]
            raise OracleMismatchError(first.element, first.describe())
        if _format(fmt, settings) is OutputFormat.TEXT:
            typer.echo("all degrees agree")


@app.command("resolution-check")
def resolution_check(
    index: int = typer.Option(..., "--index", "-m", help="index m"),
    period: int = typer.Option(..., "--period", "-q", help="period q"),
    max_degree: Optional[int] = MAX_DEGREE_OPTION,
    fmt: Optional[OutputFormat] = FORMAT_OPTION,
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """Exactness and contracting homotopy of the free resolution."""
    settings = _validate_environment(config)
    with _exit_on_error():
        monoid = _monoid(index, period)
        top = settings.max_degree_default if max_degree is None else max_degree
        report = verify_exactness(monoid, top).merge(collapse_count_report(monoid))
        TableOutputter().output_report(report, _format(fmt, settings))
    if not report.passed:
        raise typer.Exit(1)


@app.command()
def builtin(
    module: str = typer.Option(
        "constant-z", "--module", help="constant-z | trivial:<orders> | free:<points>"
    ),
    index: int = typer.Option(..., "--index", "-m", help="index m"),
    period: int = typer.Option(..., "--period", "-q", help="period q"),
    side: Side = typer.Option(Side.LEFT, "--side", help="left or right"),
    kind: Optional[str] = typer.Option(None, "--kind", help="cohomology or homology"),
    max_degree: Optional[int] = MAX_DEGREE_OPTION,
    method: Method = METHOD_OPTION,
    fmt: Optional[OutputFormat] = FORMAT_OPTION,
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """Tables for the built-in modules, without a module file."""
    settings = _validate_environment(config)
    with _exit_on_error():
        if kind is None:
            kind = "cohomology" if side is Side.LEFT else "homology"
        if kind not in ("cohomology", "homology"):
            raise FlagError(f"--kind must be cohomology or homology, got {kind!r}")
        built = builtin_module(module, _monoid(index, period), side)
        top = settings.max_degree_default if max_degree is None else max_degree
        TableOutputter().output_table(_table(built, kind, top, method), _format(fmt, settings))


@app.command()
def random(
    seed: int = typer.Option(0, "--seed", help="random seed"),
    index: int = typer.Option(..., "--index", "-m", help="index m"),
    period: int = typer.Option(..., "--period", "-q", help="period q"),
    side: Side = typer.Option(Side.LEFT, "--side", help="left or right"),
    symmetric: bool = typer.Option(False, "--symmetric", help="draw a symmetric module"),
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """Print a random lawful module as a module file."""
    settings = _validate_environment(config)
    with _exit_on_error():
        bounds = RandomModuleBounds.from_config(settings.random_module)
        drawn = random_module(_monoid(index, period), side, seed, bounds, symmetric=symmetric)
        print(dump_module(drawn), file=sys.stdout)


@app.command("lemma-check")
def lemma_check(
    module_file: str = typer.Argument(..., help="module JSON file, or - for stdin"),
    fmt: Optional[OutputFormat] = FORMAT_OPTION,
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """Semiexactness and commuting squares of S and T."""
    settings = _validate_environment(config)
    with _exit_on_error():
        report = lemma_report(load_module(module_file))
        TableOutputter().output_report(report, _format(fmt, settings))
    if not report.passed:
        raise typer.Exit(1)


@app.command("periodicity-check")
def periodicity_check_command(
    module_file: str = typer.Argument(..., help="module JSON file, or - for stdin"),
    window: Optional[int] = typer.Option(None, "--window", min=1, help="degrees scanned from 3"),
    fmt: Optional[OutputFormat] = FORMAT_OPTION,
    config: Optional[str] = CONFIG_OPTION,
) -> None:
    """(Co)homology repeats with period 2q/gcd(m,q) from degree 3 on."""
    settings = _validate_environment(config)
    with _exit_on_error():
        module = load_module(module_file)
        if window is None:
            window = settings.window_periods * module.monoid.orbit_period()
        report = periodicity_check(module, window)
        TableOutputter().output_report(report, _format(fmt, settings))
    if not report.passed:
        raise typer.Exit(1)


if __name__ == "__main__":
    app()

"""Reading and writing module files (one JSON document per module)."""

import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from .abelian import AbGroup, AbHom, IntMatrix
from .leech.module import LeechModule, validate
from .logging_utils import get_logger
from .models import GroupSpec, ModuleSpecFile, MonoidSpec, Side, ValidationReport
from .monoid import CyclicMonoid
from .utils.exceptions import (
    DimensionMismatchError,
    IllDefinedHomError,
    InvalidGroupError,
    InvalidMonoidError,
    ModuleFileError,
    ModuleValidationError,
)

logger = get_logger()


def read_module_spec(source: str) -> ModuleSpecFile:
    """Parse a module file; "-" reads standard input."""
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            text = Path(source).read_text()
    except OSError as e:
        raise ModuleFileError(source, str(e))
    try:
        return ModuleSpecFile.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise ModuleFileError(source, f"invalid JSON: {e}")
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ModuleFileError(source, f"{where}: {first['msg']}")
    except InvalidGroupError as e:
        raise ModuleFileError(source, e.detail)


def _matrix(rows: List[List[int]], shape: Tuple[int, int], label: str) -> IntMatrix:
    if len(rows) != shape[0]:
        raise DimensionMismatchError(label, shape, (len(rows), len(rows[0]) if rows else 0))
    return IntMatrix.from_rows(rows, shape[1])


def build_module(
    spec: ModuleSpecFile, source: str = "<memory>"
) -> Tuple[Optional[LeechModule], ValidationReport]:
    """Module plus axiom report; the module is None when a matrix is not a homomorphism."""
    try:
        monoid = CyclicMonoid(index=spec.monoid.index, period=spec.monoid.period)
        groups = [AbGroup(free_rank=g.free_rank, torsion=tuple(g.torsion)) for g in spec.groups]
    except (InvalidMonoidError, InvalidGroupError) as e:
        raise ModuleFileError(source, e.detail)

    report = ValidationReport(name=f"axioms of {spec.side.value} module over {monoid}")
    homs: Dict[str, List[AbHom]] = {"push1": [], "pull1": []}
    for name in ("push1", "pull1"):
        for x in monoid.elements():
            here, there = groups[x], groups[monoid.add(x, 1)]
            src, dst = (here, there) if spec.side is Side.LEFT else (there, here)
            try:
                matrix = _matrix(getattr(spec, name)[x], (dst.ngens, src.ngens), f"{name}[{x}]")
            except DimensionMismatchError as e:
                raise ModuleFileError(source, e.detail)
            try:
                homs[name].append(AbHom(src, dst, matrix))
            except IllDefinedHomError as e:
                report.record(False, "C", x, f"{name}: {e.detail}")

    if not report.passed:
        logger.info(f"Module from {source} has {len(report.violations)} ill-defined matrices")
        return None, report
    module = LeechModule(
        monoid, spec.side, tuple(groups), tuple(homs["push1"]), tuple(homs["pull1"])
    )
    return module, validate(module)


def load_module(source: str) -> LeechModule:
    """Read, build and validate; raises ModuleValidationError on any axiom failure."""
    module, report = build_module(read_module_spec(source), source)
    if module is None or not report.passed:
        raise ModuleValidationError(report)
    logger.debug(f"Loaded {module} from {source}")
    return module


def module_to_spec(module: LeechModule) -> ModuleSpecFile:
    return ModuleSpecFile(
        monoid=MonoidSpec(index=module.monoid.index, period=module.monoid.period),
        side=module.side,
        groups=[GroupSpec(free_rank=g.free_rank, torsion=list(g.torsion)) for g in module.groups],
        push1=[h.matrix.to_lists() for h in module.push1],
        pull1=[h.matrix.to_lists() for h in module.pull1],
    )


def dump_module(module: LeechModule) -> str:
    return module_to_spec(module).model_dump_json(indent=2)

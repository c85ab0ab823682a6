from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, computed_field, model_validator

from .abelian.groups import GroupDecomposition


class Side(str, Enum):

    LEFT = "left"
    RIGHT = "right"


class Method(str, Enum):
    # how a ResultTable was computed

    CLOSED_FORM = "closed-form"
    ORACLE = "oracle"


class Violation(BaseModel):
    # one failed identity, with enough context to reproduce it

    check: str
    element: Optional[int] = None
    detail: str = ""
    witness: List[int] = Field(default_factory=list)

    def describe(self) -> str:
        where = f" at element {self.element}" if self.element is not None else ""
        witness = f" witness {self.witness}" if self.witness else ""
        return f"[{self.check}]{where}: {self.detail}{witness}"


class ValidationReport(BaseModel):
    # outcome of an axiom/lemma/exactness/periodicity check

    name: str
    checked: int = Field(0, ge=0)
    violations: List[Violation] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.violations

    def record(
        self,
        ok: bool,
        check: str,
        element: Optional[int] = None,
        detail: str = "",
        witness: Optional[List[int]] = None,
    ) -> bool:
        self.checked += 1
        if not ok:
            self.violations.append(
                Violation(check=check, element=element, detail=detail, witness=witness or [])
            )
        return ok

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self

    def summary(self) -> str:
        if self.passed:
            return f"{self.name}: passed ({self.checked} checks)"
        return (
            f"{self.name}: FAILED ({len(self.violations)} of {self.checked} checks)\n"
            + "\n".join("  " + v.describe() for v in self.violations)
        )


class MonoidSpec(BaseModel):

    index: int = Field(..., ge=0)
    period: int = Field(..., ge=1)


class GroupSpec(BaseModel):

    free_rank: int = Field(0, ge=0)
    torsion: List[int] = Field(default_factory=list)


class ModuleSpecFile(BaseModel):
    # single self-describing JSON document for a left or right module

    monoid: MonoidSpec
    side: Side
    groups: List[GroupSpec]
    push1: List[List[List[int]]]
    pull1: List[List[List[int]]]

    @model_validator(mode="after")
    def _check_lengths(self) -> "ModuleSpecFile":
        size = self.monoid.index + self.monoid.period
        for field_name in ("groups", "push1", "pull1"):
            got = len(getattr(self, field_name))
            if got != size:
                raise ValueError(f"'{field_name}' has {got} entries, expected m + q = {size}")
        return self


class DegreeRow(BaseModel):

    degree: int = Field(..., ge=0)
    group: GroupDecomposition


class ResultTable(BaseModel):
    # (co)homology per degree, the common source of every output format

    kind: str
    monoid: MonoidSpec
    side: Side
    method: Method = Method.CLOSED_FORM
    rows: List[DegreeRow] = Field(default_factory=list)

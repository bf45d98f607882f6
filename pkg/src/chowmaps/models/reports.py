# src/chowmaps/models/reports.py
from __future__ import annotations

from enum import Enum
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, computed_field, field_validator, model_validator

Terms = List[List[Union[str, int]]]
LOG_LEVEL_NAMES = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class OutputFormat(str, Enum):
    JSON = "json"
    LATEX = "latex"
    TEXT = "text"


class VerifyKind(str, Enum):
    CROSS = "cross"
    IDENTITIES = "identities"
    REDUCTION = "reduction"
    CONJECTURE = "conjecture"
    RATIONAL = "rational"


class ClassReport(BaseModel):
    """One relation class alpha_{i,k}^{r,d}"""
    label: str
    i: int
    k: int
    degree: Optional[int] = Field(None, description="Homogeneous degree; None for the zero class")
    provenance: str
    text: str
    terms: Terms


class PresentationReport(BaseModel):
    """Generators of the relation ideal for one (r, d)"""
    r: int
    d: int
    ring: str = "Z[c1,c2]"
    full: bool = False
    generators: List[ClassReport]
    relations: List[ClassReport] = Field(default_factory=list, description="Complete alpha family (only with --full)")


class MembershipReport(BaseModel):
    query: Terms
    ring: Literal["Z", "Q"]
    member: bool
    certificate: Optional[List[Terms]] = None


class CellResult(BaseModel):
    """Outcome of one check on one (i, k, r, d) cell"""
    check: str
    r: Optional[int] = None
    d: Optional[int] = None
    i: Optional[int] = None
    k: Optional[int] = None
    passed: bool
    exploratory: bool = Field(False, description="Recorded finding; never fails the run")
    detail: Optional[str] = None
    elapsed: float = 0.0


class VerifyReport(BaseModel):
    kind: VerifyKind
    cells: List[CellResult] = Field(default_factory=list)
    findings: List[str] = Field(default_factory=list)
    memberships: List[MembershipReport] = Field(default_factory=list)
    elapsed: float = 0.0

    @computed_field
    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells if not cell.exploratory)

    @computed_field
    @property
    def failing(self) -> List[CellResult]:
        return [cell for cell in self.cells if not cell.passed and not cell.exploratory]

    def extend(self, cells: List[CellResult]) -> None:
        self.cells.extend(cells)


class RunConfig(BaseModel):
    """Validated parameters of one CLI invocation"""
    command: Literal["present", "alpha", "verify", "gcd-binomials"]
    kind: Optional[VerifyKind] = None
    r: List[int] = Field(default_factory=list)
    d: List[int] = Field(default_factory=list)
    i: List[int] = Field(default_factory=list)
    k: List[int] = Field(default_factory=list)
    format: OutputFormat = OutputFormat.TEXT
    threads: int = Field(1, ge=1)
    verbosity: str = "WARNING"
    full: bool = False
    check: bool = True
    weak: bool = False
    long: bool = False

    @field_validator("verbosity")
    @classmethod
    def _known_level(cls, v: str) -> str:
        level = v.upper()
        if level not in LOG_LEVEL_NAMES:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVEL_NAMES)}, got {v!r}")
        return level

    @field_validator("r")
    @classmethod
    def _r_non_negative(cls, v: List[int]) -> List[int]:
        if any(r < 0 for r in v):
            raise ValueError("r must be non-negative")
        return v

    @field_validator("d")
    @classmethod
    def _d_odd(cls, v: List[int]) -> List[int]:
        bad = [d for d in v if d < 1 or d % 2 == 0]
        if bad:
            raise ValueError(f"d must be an odd positive integer, got {bad[0]}")
        return v

    @model_validator(mode="after")
    def _check_ranges(self) -> "RunConfig":
        if self.command == "alpha":
            for d in self.d:
                for i in self.i:
                    if not 1 <= i <= d:
                        raise ValueError(f"i={i} must satisfy 1 <= i <= d={d}")
            for i in self.i:
                for k in self.k:
                    if not 0 <= k <= i:
                        raise ValueError(f"k={k} must satisfy 0 <= k <= i={i}")
        if self.command == "gcd-binomials" and any(i < 2 for i in self.i):
            raise ValueError("gcd-binomials needs i >= 2")
        if self.command == "verify" and self.kind is None:
            raise ValueError("verify needs a kind")
        return self

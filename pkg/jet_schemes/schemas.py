"""
Pydantic models for every JSON document the CLI emits.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from jet_schemes.arith import BiSeries


class SeriesModel(BaseModel):
    qmax: int = Field(ge=0)
    tmax: int = Field(ge=0)
    # (q_deg, t_deg, "num/den")
    terms: List[Tuple[int, int, str]] = Field(default_factory=list)

    @classmethod
    def from_series(cls, series: BiSeries) -> "SeriesModel":
        return cls.model_validate(series.to_dict())

    def to_series(self) -> BiSeries:
        return BiSeries.from_dict(self.model_dump())


class HilbertOutput(BaseModel):
    n: int
    method: str
    series: SeriesModel
    mismatch: Optional[Dict[str, Any]] = None


class CensusRow(BaseModel):
    degree: int
    actual: int
    predicted: int


class GroebnerOutput(BaseModel):
    n: int
    reduced: bool
    recursive: bool
    gens: List[str]
    census: List[CensusRow] = Field(default_factory=list)


class BettiRow(BaseModel):
    i: int
    rank: int
    graded: Optional[str] = None


class BettiOutput(BaseModel):
    n: int
    projective_dimension: int
    rows: List[BettiRow]
    checks: Dict[str, bool] = Field(default_factory=dict)


class SliceRow(BaseModel):
    qdeg: int
    tdeg: int
    kernel_dim: int
    submodule_dim: int


class SyzygyOutput(BaseModel):
    n: int
    drop_nu12: bool
    slices: List[SliceRow]
    passed: bool


class RRRow(BaseModel):
    which: str
    match: Optional[str]
    equal: bool


class LimitOutput(BaseModel):
    series: SeriesModel
    threshold: Optional[int]
    stabilized: bool
    bosonic_agrees: bool
    rr: List[RRRow] = Field(default_factory=list)
    gb_window: Optional[Dict[str, Any]] = None
    betti_infinity: Optional[SeriesModel] = None


class SuiteResult(BaseModel):
    status: str
    details: List[str] = Field(default_factory=list)
    first_failure: Optional[str] = None
    error: Optional[str] = None


class VerifyReport(BaseModel):
    n_range: Tuple[int, int]
    passed: bool
    suites: Dict[str, SuiteResult]
    first_failure: Optional[str] = None


__all__ = [
    "SeriesModel",
    "HilbertOutput",
    "CensusRow",
    "GroebnerOutput",
    "BettiRow",
    "BettiOutput",
    "SliceRow",
    "SyzygyOutput",
    "RRRow",
    "LimitOutput",
    "SuiteResult",
    "VerifyReport",
]

"""
Runtime configuration: environment defaults and the validated run config.
"""

from __future__ import annotations

import os
from enum import Enum
from typing import Optional, Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator, model_validator

# Load environment variables
load_dotenv()

MAX_SLICE_DIM = int(os.getenv("JET_MAX_SLICE_DIM", "20000"))
MAX_BASIS_SIZE = int(os.getenv("JET_MAX_BASIS_SIZE", "5000"))
WORKERS = int(os.getenv("JET_WORKERS", "4"))
LOG_LEVEL = os.getenv("JET_LOG_LEVEL", "WARNING")

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


class Command(str, Enum):
    HILBERT = "hilbert"
    GROEBNER = "groebner"
    BETTI = "betti"
    SYZYGY_CHECK = "syzygy-check"
    LIMIT = "limit"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


def parse_range(text: str) -> Tuple[int, int]:
    """Parse "A..B" (inclusive) or a single integer."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


class RunConfig(BaseModel):
    """Validated configuration of one CLI invocation."""

    command: Command
    n: Optional[int] = Field(default=None, ge=0)
    n_range: Optional[Tuple[int, int]] = None
    qmax: int = Field(default=10, ge=0)
    tmax: int = Field(default=5, ge=0)
    format: OutputFormat = OutputFormat.TABLE
    method: str = "recursive"
    max_slice_dim: int = MAX_SLICE_DIM
    max_basis_size: int = MAX_BASIS_SIZE
    workers: int = WORKERS
    parallel: bool = False

    # groebner
    reduced: bool = False
    recursive: bool = False
    census: bool = False

    # betti
    graded: bool = False
    check: bool = False

    # syzygy-check
    max_q: int = Field(default=20, ge=0)
    max_t: int = Field(default=6, ge=0)
    drop_nu12: bool = False

    # limit
    rr: bool = False
    gb_window: Optional[int] = Field(default=None, ge=0)
    betti_index: Optional[int] = Field(default=None, ge=0)

    # hilbert --verify and verify
    verify: bool = False
    oracle_q: int = Field(default=15, ge=0)
    oracle_t: int = Field(default=6, ge=0)

    @field_validator("max_slice_dim", "max_basis_size", "workers")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("resource caps and worker counts must be positive")
        return value

    @field_validator("n_range")
    @classmethod
    def _nonempty_range(cls, value: Optional[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        if value is not None:
            lo, hi = value
            if lo < 0 or hi < lo:
                raise ValueError(f"range {lo}..{hi} is empty or negative")
        return value

    @model_validator(mode="after")
    def _needs_n(self) -> "RunConfig":
        if self.command in (Command.HILBERT, Command.GROEBNER, Command.BETTI, Command.SYZYGY_CHECK):
            if self.n is None and self.n_range is None:
                raise ValueError(f"{self.command.value} needs --n or --n-range")
        if self.command is Command.VERIFY and self.n_range is None:
            raise ValueError("verify needs --n-range")
        return self

    def oracle_window(self) -> Tuple[int, int]:
        """Window of the linear-algebra oracle, clipped to the series window."""
        return (min(self.oracle_q, self.qmax), min(self.oracle_t, self.tmax))

    def n_values(self) -> list:
        if self.n_range is not None:
            lo, hi = self.n_range
            return list(range(lo, hi + 1))
        return [self.n] if self.n is not None else []


__all__ = [
    "MAX_SLICE_DIM",
    "MAX_BASIS_SIZE",
    "WORKERS",
    "LOG_LEVEL",
    "LOG_FORMAT",
    "Command",
    "OutputFormat",
    "RunConfig",
    "parse_range",
]

"""
Pydantic models for verification, benchmark and experiment reports
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class Mismatch(BaseModel):
    line: int = Field(..., ge=1)
    rect: str
    expected: str
    actual: str
    error: Optional[str] = None


class VerifyReport(BaseModel):
    total: int = Field(0, ge=0)
    matched: int = Field(0, ge=0)
    mismatches: List[Mismatch] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.matched == self.total

    def summary(self) -> str:
        return f"{self.matched}/{self.total} {'OK' if self.ok else 'MISMATCH'}"


class BenchRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    fatness_lo: float = Field(..., ge=1.0)
    fatness_hi: float = Field(..., ge=1.0)
    queries: int = Field(..., ge=0)
    build_seconds: float = Field(..., ge=0.0)
    cascading_query_us: float = Field(..., ge=0.0)
    fallback_query_us: float = Field(..., ge=0.0)
    small_path_share: float = Field(..., ge=0.0, le=1.0)
    entries: int = Field(..., ge=0)
    entry_constant: float = Field(..., ge=0.0)
    rmq_words_per_value: float = Field(0.0, ge=0.0)

    @classmethod
    def header(cls) -> str:
        return "\t".join(cls.model_fields)

    def to_tsv(self) -> str:
        values = []
        for value in self.model_dump().values():
            values.append(f"{value:.6g}" if isinstance(value, float) else str(value))
        return "\t".join(values)


class ExperimentRow(BaseModel):
    """One tab-separated summary line of an experiment"""
    experiment: str
    n: int = Field(..., ge=0)
    pairs: int = Field(..., ge=0)
    checked: int = Field(..., ge=0)
    passed: int = Field(..., ge=0)
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.checked

    @classmethod
    def header(cls) -> str:
        return "\t".join(cls.model_fields)

    def to_tsv(self) -> str:
        return "\t".join(str(v) for v in self.model_dump().values())

"""
Pydantic models for command-line option validation
"""

from enum import Enum
from typing import Any, Dict, Type

from pydantic import BaseModel, ConfigDict, Field

from config import Config
from services.rcp_index import MIN_ANCHOR_COUNT
from structures.rmq import RmqMethod
from structures.yao import YaoMethod


class CascadingMode(str, Enum):
    ON = "on"
    FALLBACK = "fallback"


class ExperimentKind(str, Enum):
    LOWER_BOUND = "lower-bound"
    SQUARE_CANDIDATES = "square-candidates"
    QUADRANT_CANDIDATES = "quadrant-candidates"


class IndexSettings(BaseModel):
    """Build options forwarded to RcpIndex"""
    model_config = ConfigDict(frozen=True)

    c: int = Field(Config.ANCHOR_COUNT, ge=MIN_ANCHOR_COUNT)
    cascading: bool = Config.CASCADING
    rmq_method: RmqMethod = RmqMethod(Config.RMQ_METHOD)
    yao_method: YaoMethod = YaoMethod(Config.YAO_METHOD)
    leaf_size: int = Field(Config.KD_LEAF_SIZE, ge=1)

    @classmethod
    def from_config(cls, config_class: Type[Config] = Config) -> "IndexSettings":
        return cls(
            c=config_class.ANCHOR_COUNT,
            cascading=config_class.CASCADING,
            rmq_method=RmqMethod(config_class.RMQ_METHOD),
            yao_method=YaoMethod(config_class.YAO_METHOD),
            leaf_size=config_class.KD_LEAF_SIZE,
        )

    def index_options(self) -> Dict[str, Any]:
        return self.model_dump()


class FatnessRange(BaseModel):
    lo: float = Field(1.0, ge=1.0)
    hi: float = Field(32.0, ge=1.0)

    def as_tuple(self):
        if self.lo > self.hi:
            raise ValueError(f"fatness range is empty: {self.lo} > {self.hi}")
        return self.lo, self.hi

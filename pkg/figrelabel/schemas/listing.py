from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class ListingRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    seq: int = Field(..., ge=0, description="recording order")
    x: float = Field(..., description="anchor x in bp")
    y: float = Field(..., description="anchor y in bp")
    text: str = Field(..., description="label bytes, escaped")


class CheckStatus(str, Enum):
    FOUND = "FOUND"
    NOT_FOUND = "NOT FOUND"
    DUPLICATE = "DUPLICATE"


class CheckRow(BaseModel):
    """One relabel directive checked against a figure"""
    model_config = ConfigDict(frozen=True)

    old: str = Field(..., description="old label, escaped")
    status: CheckStatus
    x: Optional[float] = Field(None, description="anchor used, first occurrence")
    y: Optional[float] = None
    occurrences: int = Field(0, ge=0)
    line: Optional[int] = Field(None, description="spec line of the directive")

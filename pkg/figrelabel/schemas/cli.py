from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class CliOptions(BaseModel):
    """Parsed command line"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Literal["extract", "check", "apply"]
    input_path: str = Field(..., description="EPS or PS figure")
    spec_path: Optional[str] = Field(None, description="relabel spec (check/apply)")
    output_path: Optional[str] = Field(None, description="output file; stdout when absent")
    format: Optional[Literal["tsv", "json"]] = Field(None, description="listing format for extract")
    compat_save_restore: bool = False
    permissive: bool = False
    keep_unmatched_labels: bool = False
    lenient: bool = False
    emit_overlay: Optional[str] = Field(None, description="overlay coordinates file (apply)")
    max_steps: Optional[int] = Field(None, gt=0)
    config_path: Optional[str] = None
    log_level: Optional[str] = None

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        if v is None:
            return v
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"log level must be one of {valid_levels}")
        return v.upper()

    @model_validator(mode="after")
    def check_spec_usage(self) -> "CliOptions":
        if self.command in ("check", "apply") and not self.spec_path:
            raise ValueError(f"'{self.command}' requires --spec")
        if self.command == "extract" and self.spec_path:
            raise ValueError("'extract' does not take --spec")
        return self

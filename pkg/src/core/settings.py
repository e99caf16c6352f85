"""
Runtime settings read from the environment once per CLI invocation.
"""

from __future__ import annotations

import os
from typing import Literal, Mapping, Optional

from pydantic import BaseModel, Field, field_validator

LogFormat = Literal["plain", "json"]


class Settings(BaseModel):
    workers: int = Field(1, ge=1, description="Upper bound on joblib workers for bench/selftest")
    log_level: str = "WARNING"
    log_format: LogFormat = "plain"

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return value

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        env = os.environ if environ is None else environ
        values = {}
        if "PCLOSED_WORKERS" in env:
            values["workers"] = env["PCLOSED_WORKERS"]
        if "PCLOSED_LOG_LEVEL" in env:
            values["log_level"] = env["PCLOSED_LOG_LEVEL"]
        if "PCLOSED_LOG_FORMAT" in env:
            values["log_format"] = env["PCLOSED_LOG_FORMAT"].lower()
        return cls(**values)

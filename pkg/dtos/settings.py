import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field


class Settings(BaseModel):
    output_folder: Path = Field(Path("output"), description="Folder for CSV and plot files when --out is absent.")
    log_level: str = Field("INFO", examples=["INFO", "DEBUG"])
    max_moment_order: int = Field(64, ge=1, description="Largest k accepted by limit-law sequences.")
    enumeration_max_m: int = Field(16, ge=2, description="Largest half-perimeter the enumerator accepts.")
    verify_max_order: int = Field(120, ge=0, description="Solved series up to this order are re-checked as fixed points.")
    metrics_file: Optional[str] = Field(None, description="Prometheus text file written after each command.")

    @classmethod
    def from_env(cls) -> "Settings":
        values = {
            "output_folder": os.getenv("OUTPUT_FOLDER"),
            "log_level": os.getenv("LOG_LEVEL"),
            "max_moment_order": os.getenv("MAX_MOMENT_ORDER"),
            "enumeration_max_m": os.getenv("ENUMERATION_MAX_M"),
            "verify_max_order": os.getenv("VERIFY_MAX_ORDER"),
            "metrics_file": os.getenv("METRICS_FILE"),
        }
        return cls(**{key: value for key, value in values.items() if value})

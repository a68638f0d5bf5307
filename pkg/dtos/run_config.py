from fractions import Fraction
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from models.limit_law import LawKind
from models.polygon import Subgroup, SymmetryClass

Command = Literal["enumerate", "series", "moments", "limits", "orbits", "compare", "selftest"]
LawSelector = Literal["airy", "meander", "beta", "dirac", "recursions"]


class RunConfig(BaseModel):
    """Validated command line configuration."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: Command
    symmetry_class: Optional[SymmetryClass] = Field(None, examples=["full"])
    subgroup: Optional[Subgroup] = Field(None, examples=["d4"])
    order: int = Field(12, ge=2, description="Series truncation order N (largest half-perimeter).")
    jet: int = Field(2, ge=0, description="Jet order K in delta = q - 1.")
    m: List[int] = Field(default_factory=list, examples=[[256, 1024, 4096]])
    k: List[int] = Field(default_factory=lambda: [1], examples=[[1, 2]])
    alpha: Optional[Fraction] = Field(None, description="Exponent of m in ratio rows, written p/q.")
    digits: int = Field(15, ge=1)
    out: Optional[Path] = None
    mode: Literal["exact", "jet"] = "exact"
    law: Optional[LawSelector] = None
    max_m: int = Field(12, ge=2, description="Largest half-perimeter for selftest oracles.")

    @field_validator("m", "k", mode="before")
    @classmethod
    def parse_int_list(cls, value):
        if isinstance(value, str):
            value = [item.strip() for item in value.split(",") if item.strip()]
        if value is None:
            return []
        return value

    @field_validator("m", "k")
    @classmethod
    def non_negative(cls, value: List[int]):
        if any(item < 0 for item in value):
            raise ValueError("list entries must be non-negative")
        return value

    @field_validator("alpha", mode="before")
    @classmethod
    def parse_alpha(cls, value):
        if value is None or isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"alpha must be a rational p/q, got {value!r}") from exc

    @model_validator(mode="after")
    def check_command_needs(self):
        if self.command in ("series", "moments", "compare") and self.symmetry_class is None:
            raise ValueError(f"{self.command} needs --class")
        if self.command == "orbits" and self.subgroup is None:
            raise ValueError("orbits needs --subgroup")
        if self.command == "limits" and (self.law is None) == (self.symmetry_class is None):
            raise ValueError("limits needs exactly one of --law and --class")
        if self.command in ("moments", "compare") and not self.m:
            raise ValueError(f"{self.command} needs --m")
        if self.command == "compare" and self.m != sorted(set(self.m)):
            raise ValueError("--m must be strictly increasing for compare")
        if not self.k:
            raise ValueError("--k must not be empty")
        return self

    @property
    def k_max(self) -> int:
        return max(self.k)

    @property
    def law_kind(self) -> Optional[LawKind]:
        if self.law is None or self.law == "recursions":
            return None
        return LawKind(self.law)

    @property
    def selector(self) -> Optional[str]:
        for value in (self.symmetry_class, self.subgroup):
            if value is not None:
                return value.value
        return self.law

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from models.numbers import RadicalConstant
from models.polygon import SymmetryClass

REPORT_DIGITS = 40


@dataclass(frozen=True)
class NormalizedMoment:
    """value / root^(root_power / 2); the square root stays symbolic until rendering."""

    value: Fraction
    root: int = 1
    root_power: int = 0

    def __post_init__(self):
        if self.root_power not in (0, 1):
            raise ValueError("root_power is 0 or 1")
        if self.root < 1:
            raise ValueError("root must be a positive integer")

    def to_mpf(self):
        value = mp.mpf(self.value.numerator) / self.value.denominator
        if self.root_power:
            value /= mp.sqrt(self.root)
        return value

    def render(self) -> str:
        if self.root_power:
            return f"{self.value}/√{self.root}"
        return str(self.value)


@dataclass(frozen=True)
class MomentRow:
    index: int
    factorial_moment: Fraction
    power_moment: Fraction
    normalized: NormalizedMoment
    rel_dev: object  # mpmath mpf at REPORT_DIGITS


@dataclass
class MomentReport:
    symmetry_class: SymmetryClass
    k: int
    limit: RadicalConstant
    rows: list[MomentRow] = field(default_factory=list)
    heuristic_extrapolation: bool = True

    def deviations(self) -> list:
        return [row.rel_dev for row in self.rows]


@dataclass(frozen=True)
class Extrapolation:
    estimate: object
    slope: object
    model: str = "a+b*m^(-1/2)"

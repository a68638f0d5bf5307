from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from models.polygon import SymmetryClass


class LawKind(str, Enum):
    AIRY = "airy"
    MEANDER = "meander"
    BETA = "beta"
    DIRAC = "dirac"


class PerimeterIndex(str, Enum):
    HALF = "half"
    QUARTER = "quarter"

    def half_perimeter(self, index: int) -> int:
        return index if self is PerimeterIndex.HALF else 2 * index


@dataclass(frozen=True)
class RecursionParams:
    """gamma_k = 3k/2 - 1/2 and alpha_k = 3k/2 + 1/2."""

    k: int

    @property
    def gamma(self) -> Fraction:
        return Fraction(3 * self.k - 1, 2)

    @property
    def alpha(self) -> Fraction:
        return Fraction(3 * self.k + 1, 2)


@dataclass(frozen=True)
class LimitLaw:
    """
    How a class's area converges.

    The normalized k-th moment at index m is
        E[X^k] * constant^k / (base * m)^(exponent * k)
    and its limit is law_scale^k times the k-th moment of `law`.
    """

    law: LawKind
    exponent: Fraction
    index: PerimeterIndex
    constant: int = 1
    base: int = 1
    law_scale: Fraction = Fraction(1)


LIMIT_LAWS: dict[SymmetryClass, LimitLaw] = {
    SymmetryClass.FULL: LimitLaw(LawKind.AIRY, Fraction(3, 2), PerimeterIndex.HALF,
                                 law_scale=Fraction(1, 4)),
    SymmetryClass.R2: LimitLaw(LawKind.MEANDER, Fraction(3, 2), PerimeterIndex.HALF,
                               law_scale=Fraction(1, 2)),
    SymmetryClass.D1: LimitLaw(LawKind.AIRY, Fraction(3, 2), PerimeterIndex.QUARTER),
    SymmetryClass.D2: LimitLaw(LawKind.MEANDER, Fraction(3, 2), PerimeterIndex.QUARTER,
                               base=2, law_scale=Fraction(1, 2)),
    SymmetryClass.D1D2: LimitLaw(LawKind.MEANDER, Fraction(3, 2), PerimeterIndex.QUARTER,
                                 law_scale=Fraction(2)),
    SymmetryClass.RECT: LimitLaw(LawKind.BETA, Fraction(2), PerimeterIndex.HALF, constant=4),
    SymmetryClass.SQUARE: LimitLaw(LawKind.DIRAC, Fraction(2), PerimeterIndex.QUARTER),
}


def limit_law_for(symmetry_class: SymmetryClass) -> LimitLaw:
    return LIMIT_LAWS[symmetry_class]

"""
Staircase polygons and the point symmetries of the square.

A polygon is stored as its two boundary walks from the common lower-left
corner: the upper walk starts with an up step, the lower walk with a right
step, and the walks meet again only at the upper-right corner. Columns and
rows are derived from the walks and fix the canonical position (bounding
box anchored at the origin).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, Sequence

Interval = tuple[int, int]


class SymmetryElement(str, Enum):
    """Elements of the dihedral group of the square acting on the plane."""

    E = "e"
    R = "r"
    R2 = "r2"
    R3 = "r3"
    H = "h"
    V = "v"
    D1 = "d1"
    D2 = "d2"

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return _MATRICES[self]

    def apply(self, x: int, y: int) -> tuple[int, int]:
        (a, b), (c, d) = self.matrix
        return a * x + b * y, c * x + d * y

    def compose(self, other: "SymmetryElement") -> "SymmetryElement":
        """self after other."""
        (a, b), (c, d) = self.matrix
        (p, q), (r, s) = other.matrix
        product = ((a * p + b * r, a * q + b * s), (c * p + d * r, c * q + d * s))
        return _BY_MATRIX[product]

    @property
    def swaps_axes(self) -> bool:
        return self.matrix[0][0] == 0


# d1 reflects in the diagonal y = x, d2 in the anti-diagonal y = -x.
_MATRICES = {
    SymmetryElement.E: ((1, 0), (0, 1)),
    SymmetryElement.R: ((0, -1), (1, 0)),
    SymmetryElement.R2: ((-1, 0), (0, -1)),
    SymmetryElement.R3: ((0, 1), (-1, 0)),
    SymmetryElement.H: ((1, 0), (0, -1)),
    SymmetryElement.V: ((-1, 0), (0, 1)),
    SymmetryElement.D1: ((0, 1), (1, 0)),
    SymmetryElement.D2: ((0, -1), (-1, 0)),
}
_BY_MATRIX = {matrix: element for element, matrix in _MATRICES.items()}


class Subgroup(str, Enum):
    """The ten subgroups of the dihedral group of the square."""

    E = "e"
    R2 = "r2"
    R = "r"
    D1 = "d1"
    D2 = "d2"
    D1D2 = "d1d2"
    H = "h"
    V = "v"
    HV = "hv"
    D4 = "d4"

    @property
    def elements(self) -> tuple[SymmetryElement, ...]:
        return _SUBGROUP_ELEMENTS[self]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def nontrivial(self) -> tuple[SymmetryElement, ...]:
        return tuple(g for g in self.elements if g is not SymmetryElement.E)

    @property
    def acts_on_staircases(self) -> bool:
        """Whether every element maps staircase polygons to staircase polygons."""
        return all(g in _ORIENTATION_PRESERVING for g in self.elements)


_e, _r, _r2, _r3 = SymmetryElement.E, SymmetryElement.R, SymmetryElement.R2, SymmetryElement.R3
_h, _v, _d1, _d2 = SymmetryElement.H, SymmetryElement.V, SymmetryElement.D1, SymmetryElement.D2

# r, r3, h and v turn a staircase polygon into one running the other way,
# so only the Klein group <d1, d2> acts on the class.
_ORIENTATION_PRESERVING = frozenset({_e, _r2, _d1, _d2})

_SUBGROUP_ELEMENTS = {
    Subgroup.E: (_e,),
    Subgroup.R2: (_e, _r2),
    Subgroup.R: (_e, _r, _r2, _r3),
    Subgroup.D1: (_e, _d1),
    Subgroup.D2: (_e, _d2),
    Subgroup.D1D2: (_e, _d1, _d2, _r2),
    Subgroup.H: (_e, _h),
    Subgroup.V: (_e, _v),
    Subgroup.HV: (_e, _h, _v, _r2),
    Subgroup.D4: tuple(SymmetryElement),
}


class SymmetryClass(str, Enum):
    """Polygons fixed by every generator of a subgroup."""

    FULL = "full"
    R2 = "r2"
    D1 = "d1"
    D2 = "d2"
    D1D2 = "d1d2"
    RECT = "rect"
    SQUARE = "square"

    @property
    def generators(self) -> tuple[SymmetryElement, ...]:
        return _CLASS_GENERATORS[self]

    def contains(self, stabilizer) -> bool:
        return all(g in stabilizer for g in self.generators)


# h and v fix exactly the same staircase polygons (rectangles); h is used.
_CLASS_GENERATORS = {
    SymmetryClass.FULL: (),
    SymmetryClass.R2: (_r2,),
    SymmetryClass.D1: (_d1,),
    SymmetryClass.D2: (_d2,),
    SymmetryClass.D1D2: (_d1, _d2),
    SymmetryClass.RECT: (_h,),
    SymmetryClass.SQUARE: (_r,),
}


@dataclass(frozen=True)
class Polygon:
    upper: str
    lower: str

    def __post_init__(self):
        if len(self.upper) != len(self.lower) or len(self.upper) < 2:
            raise ValueError("boundary walks must have equal length >= 2")
        if set(self.upper) - {"U", "R"} or set(self.lower) - {"U", "R"}:
            raise ValueError("walk steps must be 'U' or 'R'")
        if self.upper.count("R") != self.lower.count("R"):
            raise ValueError("boundary walks must end at the same vertex")
        ux = lx = 0
        for i, (a, b) in enumerate(zip(self.upper, self.lower), start=1):
            ux += a == "R"
            lx += b == "R"
            if i < len(self.upper) and ux >= lx:
                raise ValueError("boundary walks touch before their endpoint")

    @classmethod
    def from_columns(cls, columns: Sequence[Interval]) -> "Polygon":
        """Columns are half-open [bottom, top) cell ranges, left to right."""
        if not columns or columns[0][0] != 0:
            raise ValueError("first column must start at height 0")
        upper = ["U"] * columns[0][1]
        lower = []
        previous_bottom, previous_top = 0, columns[0][1]
        for i, (bottom, top) in enumerate(columns):
            if i:
                upper.append("R")
                upper.extend("U" * (top - previous_top))
            lower.extend("U" * (bottom - previous_bottom))
            lower.append("R")
            previous_bottom, previous_top = bottom, top
        upper.append("R")
        lower.extend("U" * (previous_top - previous_bottom))
        return cls("".join(upper), "".join(lower))

    @classmethod
    def rectangle(cls, width: int, height: int) -> "Polygon":
        return cls.from_columns([(0, height)] * width)

    @property
    def half_perimeter(self) -> int:
        return len(self.upper)

    @property
    def width(self) -> int:
        return self.upper.count("R")

    @property
    def height(self) -> int:
        return self.upper.count("U")

    @cached_property
    def columns(self) -> tuple[Interval, ...]:
        tops, bottoms = _right_step_heights(self.upper), _right_step_heights(self.lower)
        return tuple(zip(bottoms, tops))

    @cached_property
    def rows(self) -> tuple[Interval, ...]:
        """Half-open [left, right) cell ranges, bottom to top."""
        lefts, rights = _up_step_abscissae(self.upper), _up_step_abscissae(self.lower)
        return tuple(zip(lefts, rights))

    @cached_property
    def area(self) -> int:
        return sum(top - bottom for bottom, top in self.columns)

    def image(self, g: SymmetryElement) -> tuple[Interval, ...]:
        """Column sequence of g(P) moved back to canonical position."""
        (a, b), (c, d) = g.matrix
        if g.swaps_axes:
            # new abscissa is +-y, new ordinate is +-x
            cells, reverse, flip, extent = self.rows, b < 0, c < 0, self.width
        else:
            cells, reverse, flip, extent = self.columns, a < 0, d < 0, self.height
        if reverse:
            cells = cells[::-1]
        if flip:
            cells = tuple((extent - hi, extent - lo) for lo, hi in cells)
        return tuple(cells)

    def cells(self) -> Iterator[tuple[int, int]]:
        for x, (bottom, top) in enumerate(self.columns):
            for y in range(bottom, top):
                yield x, y


def _right_step_heights(walk: str) -> list[int]:
    y, heights = 0, []
    for step in walk:
        if step == "U":
            y += 1
        else:
            heights.append(y)
    return heights


def _up_step_abscissae(walk: str) -> list[int]:
    x, positions = 0, []
    for step in walk:
        if step == "R":
            x += 1
        else:
            positions.append(x)
    return positions

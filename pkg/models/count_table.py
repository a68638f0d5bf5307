from __future__ import annotations

from collections import defaultdict

from models.errors import InvariantViolation
from models.polygon import SymmetryClass

# (larger, smaller): the smaller class is contained in the larger one.
CLASS_INCLUSIONS = (
    *((SymmetryClass.FULL, c) for c in SymmetryClass if c is not SymmetryClass.FULL),
    (SymmetryClass.RECT, SymmetryClass.SQUARE),
    (SymmetryClass.R2, SymmetryClass.SQUARE),
    (SymmetryClass.D1, SymmetryClass.D1D2),
    (SymmetryClass.D2, SymmetryClass.D1D2),
)


class CountTable:
    """Exact polygon counts keyed by (class, half-perimeter m, area n)."""

    def __init__(self):
        self._counts: dict[tuple[SymmetryClass, int, int], int] = defaultdict(int)

    def add(self, symmetry_class: SymmetryClass, m: int, n: int, count: int = 1) -> None:
        if count < 0:
            raise ValueError("counts are nonnegative")
        self._counts[(symmetry_class, m, n)] += count

    def count(self, symmetry_class: SymmetryClass, m: int, n: int) -> int:
        return self._counts.get((symmetry_class, m, n), 0)

    def total(self, symmetry_class: SymmetryClass, m: int) -> int:
        return sum(c for (k, mm, _), c in self._counts.items() if k is symmetry_class and mm == m)

    def area_distribution(self, symmetry_class: SymmetryClass, m: int) -> dict[int, int]:
        return {n: c for (k, mm, n), c in sorted(self._counts.items(), key=_sort_key)
                if k is symmetry_class and mm == m and c}

    def rows(self) -> list[tuple[str, int, int, int]]:
        """(class, m, n, count) in lexicographic order, zero counts omitted."""
        return [(k.value, m, n, c) for (k, m, n), c in sorted(self._counts.items(), key=_sort_key) if c]

    def check_partial_order(self) -> None:
        points = {(m, n) for (_, m, n) in self._counts}
        for larger, smaller in CLASS_INCLUSIONS:
            for m, n in sorted(points):
                if self.count(smaller, m, n) > self.count(larger, m, n):
                    raise InvariantViolation(
                        "count-table-order",
                        f"{smaller.value} exceeds {larger.value} at m={m}, n={n}")

    def __len__(self):
        return sum(1 for c in self._counts.values() if c)


def _key_order(key):
    symmetry_class, m, n = key
    return symmetry_class.value, m, n


def _sort_key(item):
    return _key_order(item[0])

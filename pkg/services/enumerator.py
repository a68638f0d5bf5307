from collections import Counter
from fractions import Fraction
from logging import Logger
from math import perm
from typing import Iterator

from models.count_table import CountTable
from models.errors import BurnsideIntegrityError, EmptyClassError, UsageError
from models.polygon import Polygon, Subgroup, SymmetryClass, SymmetryElement

MIN_HALF_PERIMETER = 2


def is_fixed(g: SymmetryElement, polygon: Polygon) -> bool:
    return polygon.image(g) == polygon.columns


def symmetry_signature(polygon: Polygon) -> frozenset[SymmetryElement]:
    """The stabilizer of `polygon` in the dihedral group."""
    return frozenset(g for g in SymmetryElement if is_fixed(g, polygon))


class Enumerator:
    """
    Brute-force generation of staircase polygons.

    Polygons are produced as pairs of boundary walks grown one step at a
    time; the per-perimeter tallies of (area, stabilizer) are kept so that
    class counts, orbit counts and moments are all read from one pass.
    """

    def __init__(self, max_m: int, logger: Logger):
        self.max_m = max_m
        self.logger = logger
        self._tallies: dict[int, Counter] = {}

    def iter_polygons(self, m: int) -> Iterator[Polygon]:
        if m < MIN_HALF_PERIMETER:
            return
        yield from self._grow(m, ["U"], ["R"], 0, 1)

    def _grow(self, m: int, upper: list[str], lower: list[str], ux: int, lx: int) -> Iterator[Polygon]:
        steps = len(upper)
        if steps == m - 1:
            if lx - ux == 1:
                yield Polygon("".join(upper) + "R", "".join(lower) + "U")
            return
        remaining = m - steps - 1
        for a in "UR":
            nux = ux + (a == "R")
            for b in "UR":
                nlx = lx + (b == "R")
                gap = nlx - nux
                # the gap closes by at most one per step and must be 0 at the end
                if gap < 1 or gap > remaining:
                    continue
                upper.append(a)
                lower.append(b)
                yield from self._grow(m, upper, lower, nux, nlx)
                upper.pop()
                lower.pop()

    def _validate_range(self, m_max: int) -> None:
        if not MIN_HALF_PERIMETER <= m_max <= self.max_m:
            raise UsageError(
                f"m_max must lie in [{MIN_HALF_PERIMETER}, {self.max_m}], got {m_max}")

    def tally(self, m: int) -> Counter:
        """Counter of (area, stabilizer) over all polygons of half-perimeter m."""
        if m not in self._tallies:
            log_dict = {"m": m}
            self.logger.info(f"Enumerating polygons {log_dict}")
            tally = Counter()
            for polygon in self.iter_polygons(m):
                tally[(polygon.area, symmetry_signature(polygon))] += 1
            self._tallies[m] = tally
            log_dict.update({"polygons": sum(tally.values())})
            self.logger.info(f"Enumeration finished {log_dict}")
        return self._tallies[m]

    def enumerate_counts(self, m_max: int) -> CountTable:
        self._validate_range(m_max)
        table = CountTable()
        for m in range(MIN_HALF_PERIMETER, m_max + 1):
            for (area, stabilizer), count in self.tally(m).items():
                for symmetry_class in SymmetryClass:
                    if symmetry_class.contains(stabilizer):
                        table.add(symmetry_class, m, area, count)
        table.check_partial_order()
        return table

    def orbit_counts(self, subgroup: Subgroup, m_max: int) -> dict[tuple[int, int], Fraction]:
        """
        Burnside weight of `subgroup` per (m, n): sum over polygons of |Stab(P) & H| / |H|.

        This is the number of orbits when the subgroup acts on staircase polygons.
        """
        self._validate_range(m_max)
        elements = set(subgroup.elements)
        orbits: dict[tuple[int, int], Fraction] = {}
        for m in range(MIN_HALF_PERIMETER, m_max + 1):
            weights: dict[int, Fraction] = {}
            for (area, stabilizer), count in self.tally(m).items():
                share = Fraction(len(elements & stabilizer) * count, subgroup.order)
                weights[area] = weights.get(area, Fraction(0)) + share
            for area, weight in sorted(weights.items()):
                if subgroup.acts_on_staircases and weight.denominator != 1:
                    raise BurnsideIntegrityError(
                        f"{subgroup.value} at m={m}, n={area}: {weight}")
                orbits[(m, area)] = weight
        return orbits

    def oracle_moments(self, symmetry_class: SymmetryClass, m: int, k_max: int) -> list[Fraction]:
        """Exact factorial moments E[(X_m)_k], k = 0..k_max, from the enumerated polygons."""
        self._validate_range(m)
        distribution: dict[int, int] = {}
        for (area, stabilizer), count in self.tally(m).items():
            if symmetry_class.contains(stabilizer):
                distribution[area] = distribution.get(area, 0) + count
        total = sum(distribution.values())
        if not total:
            raise EmptyClassError(f"{symmetry_class.value} at m={m}")
        return [Fraction(sum(c * perm(n, k) for n, c in distribution.items()), total)
                for k in range(k_max + 1)]

from fractions import Fraction
from logging import Logger
from math import factorial
from typing import Iterable

from models.errors import BurnsideIntegrityError, UsageError
from models.polygon import Subgroup, SymmetryClass, SymmetryElement
from models.rings import CoefficientRing, JetRing, LaurentQPoly, LaurentRing, ScalarRing
from models.xseries import XSeries, xs_add
from services.feq_engine import SeriesSolver
from services.moment_lab import power_moments

_FIXED_CLASS = {
    SymmetryElement.E: SymmetryClass.FULL,
    SymmetryElement.R: SymmetryClass.SQUARE,
    SymmetryElement.R3: SymmetryClass.SQUARE,
    SymmetryElement.R2: SymmetryClass.R2,
    SymmetryElement.D1: SymmetryClass.D1,
    SymmetryElement.D2: SymmetryClass.D2,
    SymmetryElement.H: SymmetryClass.RECT,
    SymmetryElement.V: SymmetryClass.RECT,
}


def fix_map(g: SymmetryElement) -> SymmetryClass:
    """The class of staircase polygons fixed by g."""
    return _FIXED_CLASS[g]


class OrbitCounter:
    """Orbit generating functions by averaging fixed-point series over a subgroup."""

    def __init__(self, solver: SeriesSolver, logger: Logger):
        self.solver = solver
        self.logger = logger

    def fixed_series_sum(self, elements: Iterable[SymmetryElement], order: int,
                         ring: CoefficientRing) -> XSeries:
        total = XSeries.zero(ring, order)
        for g in elements:
            total = xs_add(total, self.solver.solve_series(fix_map(g), order, ring))
        return total

    def orbit_series(self, subgroup: Subgroup, order: int, ring: CoefficientRing) -> XSeries:
        """
        (1/|H|) sum over g in H of the series fixed by g.

        For subgroups acting on staircase polygons the exact and scalar
        coefficients are orbit counts and must be nonnegative integers. The
        other subgroups give the Burnside weight, a rational with
        denominator dividing |H|.
        """
        log_dict = {"subgroup": subgroup.value, "order": order, "ring": str(ring)}
        self.logger.info(f"Averaging fixed-point series {log_dict}")
        total = self.fixed_series_sum(subgroup.elements, order, ring)
        weight = Fraction(1, subgroup.order)
        averaged = XSeries(ring, tuple(c * weight for c in total.coefficients))
        if subgroup.acts_on_staircases and isinstance(ring, (LaurentRing, ScalarRing)):
            self._check_integrality(subgroup, averaged, log_dict)
        return averaged

    def _check_integrality(self, subgroup: Subgroup, series: XSeries, log_dict: dict) -> None:
        for m, value in enumerate(series.coefficients):
            counts = [c for _, c in value.items()] if isinstance(value, LaurentQPoly) else [value]
            for count in counts:
                if Fraction(count).denominator != 1 or count < 0:
                    self.logger.error(f"Orbit count is not a nonnegative integer {log_dict}")
                    raise BurnsideIntegrityError(
                        f"{subgroup.value} at m={m}: {count}")

    def subexp_ratio_table(self, subgroup: Subgroup, alpha: Fraction,
                           m_values: Iterable[int]) -> list[tuple[int, Fraction]]:
        """Rows (m, m^alpha r_m / p_m) with r_m the fixed points of the nontrivial elements."""
        alpha = Fraction(alpha)
        if alpha.denominator != 1:
            raise UsageError(f"exact ratio rows need an integer alpha, got {alpha}")
        m_values = list(m_values)
        if not m_values or min(m_values) < 2:
            raise UsageError("ratio rows need half-perimeters >= 2")
        ring = ScalarRing()
        order = max(m_values)
        full = self.solver.solve_series(SymmetryClass.FULL, order, ring)
        rest = self.fixed_series_sum(subgroup.nontrivial, order, ring)
        exponent = alpha.numerator
        return [(m, Fraction(m) ** exponent * Fraction(rest[m], full[m])) for m in m_values]

    def moment_transfer_bound(self, subgroup: Subgroup, m: int, k: int) -> tuple[Fraction, Fraction]:
        """(|E_H[X^k] / E[X^k] - 1|, m^(2k) r_m / p_m) at half-perimeter m."""
        if m < 2:
            raise UsageError("no polygons below half-perimeter 2")
        ring = JetRing(k)
        orbit = self.orbit_series(subgroup, m, ring)[m].coefficients
        full = self.solver.solve_series(SymmetryClass.FULL, m, ring)[m].coefficients
        orbit_power = power_moments([Fraction(factorial(j) * orbit[j], orbit[0]) for j in range(k + 1)])[k]
        full_power = power_moments([Fraction(factorial(j) * full[j], full[0]) for j in range(k + 1)])[k]
        (_, bound), = self.subexp_ratio_table(subgroup, Fraction(2 * k), [m])
        return abs(orbit_power / full_power - 1), bound

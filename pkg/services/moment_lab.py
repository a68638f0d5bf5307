from fractions import Fraction
from logging import Logger
from math import factorial
from typing import Iterable, Sequence

import mpmath as mp

from models.errors import EmptyClassError, InvariantViolation, UsageError
from models.limit_law import limit_law_for
from models.moments import REPORT_DIGITS, Extrapolation, MomentReport, MomentRow, NormalizedMoment
from models.polygon import SymmetryClass
from models.rings import JetRing
from services.enumerator import Enumerator
from services.feq_engine import SeriesSolver
from services.limit_laws import LimitLaws


def stirling2(k: int, j: int) -> int:
    """Stirling numbers of the second kind."""
    if k == j:
        return 1
    if j == 0 or j > k:
        return 0
    row = [1] + [0] * j
    for n in range(1, k + 1):
        for i in range(min(n, j), 0, -1):
            row[i] = i * row[i] + row[i - 1]
        row[0] = 0
    return row[j]


def power_moments(factorials: Sequence[Fraction]) -> list[Fraction]:
    """E[X^k] = sum_j S(k, j) E[(X)_j] for every k the factorial moments cover."""
    return [sum((stirling2(k, j) * factorials[j] for j in range(k + 1)), Fraction(0))
            for k in range(len(factorials))]


def extrapolate_sqrt(points: Iterable[tuple[int, object]], digits: int = REPORT_DIGITS) -> Extrapolation:
    """Least-squares fit of v(m) = a + b m^(-1/2); the estimate is a."""
    points = list(points)
    if len(points) < 3:
        raise UsageError("extrapolation needs at least 3 points")
    if len({m for m, _ in points}) < 2:
        raise UsageError("degenerate fit: all points share one perimeter")
    with mp.workdps(digits):
        design = mp.matrix([[1, 1 / mp.sqrt(m)] for m, _ in points])
        values = mp.matrix([_to_mpf(v) for _, v in points])
        try:
            solution, _ = mp.qr_solve(design, values)
        except ZeroDivisionError as exc:
            raise UsageError("degenerate fit") from exc
        return Extrapolation(+solution[0], +solution[1])


def _to_mpf(value):
    if isinstance(value, NormalizedMoment):
        return value.to_mpf()
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


class MomentLab:
    def __init__(self, solver: SeriesSolver, limit_laws: LimitLaws, logger: Logger):
        self.solver = solver
        self.limit_laws = limit_laws
        self.logger = logger

    def factorial_moments(self, symmetry_class: SymmetryClass, m: int, k_max: int,
                          jet_order: int | None = None) -> list[Fraction]:
        """E[(X_m)_k] for k = 0..k_max at half-perimeter m."""
        jet_order = k_max if jet_order is None else jet_order
        if jet_order < k_max:
            raise UsageError(f"jet order {jet_order} cannot carry moment order {k_max}")
        series = self.solver.solve_series(symmetry_class, max(m, 2), JetRing(jet_order))
        jet = series[m].coefficients
        if jet[0] == 0:
            raise EmptyClassError(f"{symmetry_class.value} at m={m}")
        return [Fraction(factorial(k) * jet[k], jet[0]) for k in range(k_max + 1)]

    def normalized_moment(self, symmetry_class: SymmetryClass, index: int, k: int) -> NormalizedMoment:
        binding = limit_law_for(symmetry_class)
        m = binding.index.half_perimeter(index)
        power = power_moments(self.factorial_moments(symmetry_class, m, k))[k]
        return self._normalize(binding, index, k, power)

    @staticmethod
    def _normalize(binding, index: int, k: int, power: Fraction) -> NormalizedMoment:
        scaled = power * binding.constant**k
        root = binding.base * index
        twice_exponent = int(2 * binding.exponent * k)
        whole, half = divmod(twice_exponent, 2)
        value = scaled / Fraction(root) ** whole
        return NormalizedMoment(value, root if half else 1, half)

    def convergence_report(self, symmetry_class: SymmetryClass, k: int, m_list: Sequence[int]) -> MomentReport:
        if list(m_list) != sorted(set(m_list)):
            raise UsageError("m values must be strictly increasing")
        binding = limit_law_for(symmetry_class)
        limit = self.limit_laws.class_limit_moment(symmetry_class, k)
        log_dict = {"class": symmetry_class.value, "k": k, "m_list": list(m_list)}
        self.logger.info(f"Building convergence report {log_dict}")

        report = MomentReport(symmetry_class, k, limit)
        with mp.workdps(REPORT_DIGITS):
            target = limit.to_mpf()
            for index in m_list:
                m = binding.index.half_perimeter(index)
                factorials = self.factorial_moments(symmetry_class, m, k)
                power = power_moments(factorials)[k]
                normalized = self._normalize(binding, index, k, power)
                rel_dev = normalized.to_mpf() / target - 1
                report.rows.append(MomentRow(index, factorials[k], power, normalized, rel_dev))
        self.logger.info(f"Convergence report finished {log_dict}")
        return report

    def extrapolate_report(self, report: MomentReport) -> Extrapolation:
        log_dict = {"class": report.symmetry_class.value, "k": report.k}
        self.logger.warning(f"Extrapolation with the m^(-1/2) model is heuristic {log_dict}")
        return extrapolate_sqrt((row.index, row.normalized) for row in report.rows)

    def oracle_cross_check(self, enumerator: Enumerator, m_max: int, k_max: int) -> int:
        """Compare jet moments with brute-force moments; returns the number of (class, m) checked."""
        checked = 0
        for symmetry_class in SymmetryClass:
            for m in range(2, m_max + 1):
                try:
                    expected = enumerator.oracle_moments(symmetry_class, m, k_max)
                except EmptyClassError:
                    continue
                actual = self.factorial_moments(symmetry_class, m, k_max)
                if actual != expected:
                    log_dict = {"class": symmetry_class.value, "m": m}
                    self.logger.error(f"Jet moments differ from enumeration {log_dict}")
                    raise InvariantViolation(
                        "oracle-moments", f"{symmetry_class.value} at m={m}: {actual} != {expected}")
                checked += 1
        return checked

from fractions import Fraction
from unittest.mock import MagicMock

import mpmath as mp
import pytest

from models.errors import EmptyClassError, UsageError
from models.moments import NormalizedMoment
from models.polygon import SymmetryClass
from services.enumerator import Enumerator
from services.feq_engine import SeriesSolver, catalan
from services.limit_laws import LimitLaws
from services.moment_lab import MomentLab, extrapolate_sqrt, power_moments, stirling2


@pytest.fixture
def lab():
    logger = MagicMock()
    return MomentLab(SeriesSolver(logger), LimitLaws(64, logger), logger)


def test_stirling_numbers():
    assert stirling2(0, 0) == 1
    assert stirling2(3, 0) == 0
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(2, 3) == 0


def test_power_moments_from_factorial_moments():
    assert power_moments([Fraction(1), Fraction(16, 5), Fraction(36, 5)]) == [1, Fraction(16, 5), Fraction(52, 5)]
    # a point mass at 1
    assert power_moments([1, 1, 0, 0]) == [1, 1, 1, 1]


def test_factorial_moments_of_small_polygons(lab):
    assert lab.factorial_moments(SymmetryClass.FULL, 2, 1) == [1, 1]
    assert lab.factorial_moments(SymmetryClass.FULL, 4, 2) == [1, Fraction(16, 5), Fraction(36, 5)]


def test_full_mean_area_closed_form(lab):
    # the total area of all polygons of half-perimeter m is 4^(m-2)
    for m in range(2, 21):
        assert lab.factorial_moments(SymmetryClass.FULL, m, 1)[1] == Fraction(4 ** (m - 2), catalan(m - 1))


def test_rectangle_mean_area(lab):
    for m in range(2, 31):
        assert lab.factorial_moments(SymmetryClass.RECT, m, 1)[1] == Fraction(m * (m + 1), 6)


def test_rectangle_normalized_mean_is_exact(lab):
    for m in (2, 3, 10, 50):
        normalized = lab.normalized_moment(SymmetryClass.RECT, m, 1)
        assert normalized == NormalizedMoment(Fraction(2, 3) + Fraction(2, 3 * m))


def test_square_normalized_moments_are_one(lab):
    for index in range(1, 9):
        for k in (1, 2, 3):
            assert lab.normalized_moment(SymmetryClass.SQUARE, index, k).value == 1


def test_full_normalized_mean_keeps_square_root(lab):
    normalized = lab.normalized_moment(SymmetryClass.FULL, 4, 1)

    assert normalized == NormalizedMoment(Fraction(4, 5), 4, 1)
    assert normalized.render() == "4/5/√4"


def test_empty_class_has_no_moments(lab):
    with pytest.raises(EmptyClassError):
        lab.factorial_moments(SymmetryClass.D1, 5, 1)


def test_jet_order_must_cover_moment_order(lab):
    with pytest.raises(UsageError):
        lab.factorial_moments(SymmetryClass.FULL, 6, 3, jet_order=2)


def test_second_moment_dominates_squared_mean(lab):
    for symmetry_class in SymmetryClass:
        for m in range(2, 13):
            try:
                factorials = lab.factorial_moments(symmetry_class, m, 2)
            except EmptyClassError:
                continue
            _, mean, second = power_moments(factorials)
            assert second >= mean ** 2


def test_extrapolation_of_exact_model():
    # Arrange
    with mp.workdps(50):
        points = [(m, 3 + 1 / mp.sqrt(m)) for m in (4, 16, 64, 256, 1000)]

    # Act
    fit = extrapolate_sqrt(points)

    # Assert
    with mp.workdps(40):
        assert abs(fit.estimate - 3) < mp.mpf(10) ** -30
        assert abs(fit.slope - 1) < mp.mpf(10) ** -30
    assert fit.model == "a+b*m^(-1/2)"


def test_extrapolation_of_constant_and_rectangle_means():
    constant = extrapolate_sqrt([(m, Fraction(1)) for m in (10, 20, 40)])
    rectangle = extrapolate_sqrt([(m, Fraction(2, 3) + Fraction(2, 3 * m)) for m in (100, 400, 1600)])

    assert abs(constant.estimate - 1) < mp.mpf(10) ** -30
    assert abs(rectangle.estimate - mp.mpf(2) / 3) < mp.mpf(10) ** -2


@pytest.mark.parametrize("points", [[(4, 1), (16, 1)], [(4, 1), (4, 2), (4, 3)]])
def test_degenerate_extrapolation_is_rejected(points):
    with pytest.raises(UsageError):
        extrapolate_sqrt(points)


def test_full_mean_converges_to_airy_limit(lab):
    # Act
    report = lab.convergence_report(SymmetryClass.FULL, 1, [32, 128, 512])

    # Assert
    deviations = [abs(d) for d in report.deviations()]
    assert deviations == sorted(deviations, reverse=True)
    assert all(d < 0 for d in report.deviations())
    assert deviations[-1] < mp.mpf("0.002")
    assert report.heuristic_extrapolation


def test_convergence_report_needs_increasing_m(lab):
    with pytest.raises(UsageError):
        lab.convergence_report(SymmetryClass.FULL, 1, [64, 32, 128])


def test_extrapolated_report_is_flagged_heuristic(lab):
    # Arrange
    report = lab.convergence_report(SymmetryClass.RECT, 1, [100, 400, 1600])

    # Act
    fit = lab.extrapolate_report(report)

    # Assert
    lab.logger.warning.assert_called_once()
    assert abs(fit.estimate / report.limit.to_mpf() - 1) < mp.mpf("0.01")


@pytest.mark.parametrize("symmetry_class, m, max_area", [
    (SymmetryClass.FULL, 6, 9),
    (SymmetryClass.R2, 7, 12),
    (SymmetryClass.D1, 6, 9),
    (SymmetryClass.RECT, 5, 6),
    (SymmetryClass.SQUARE, 4, 4),
])
def test_factorial_moments_vanish_beyond_largest_area(lab, symmetry_class, m, max_area):
    # Act
    moments = lab.factorial_moments(symmetry_class, m, max_area + 3)

    # Assert
    assert moments[max_area] > 0
    assert moments[max_area + 1:] == [0, 0, 0]


def test_oracle_cross_check(lab):
    enumerator = Enumerator(max_m=9, logger=MagicMock())

    # 8 perimeters for full, r2 and rect; 4 even perimeters for d1, d2, d1d2 and square
    assert lab.oracle_cross_check(enumerator, 9, 3) == 40

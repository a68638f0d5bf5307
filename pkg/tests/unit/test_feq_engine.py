from unittest.mock import MagicMock, patch

import pytest

from models.errors import InvariantViolation, NonProductiveRecursion, UsageError
from models.polygon import SymmetryClass
from models.rings import JetRing, LaurentQPoly, LaurentRing, ScalarRing
from models.xseries import XSeries, collapse_series, monomial
from services.enumerator import Enumerator
from services.feq_engine import EquationTerms, SeriesSolver, catalan, closed_form_coefficient


@pytest.fixture
def solver():
    return SeriesSolver(logger=MagicMock())


def _q(degree: int, coefficient: int = 1) -> LaurentQPoly:
    return LaurentQPoly.monomial(degree, coefficient)


def test_square_series(solver):
    # Act
    series = solver.solve_series(SymmetryClass.SQUARE, 8, LaurentRing())

    # Assert
    expected = {2: _q(1), 4: _q(4), 6: _q(9), 8: _q(16)}
    for m in range(9):
        assert series[m] == expected.get(m, LaurentQPoly())


def test_half_perimeter_four_of_every_class(solver):
    ring = LaurentRing()
    expected = {
        SymmetryClass.FULL: LaurentQPoly({4: 1, 3: 4}),
        SymmetryClass.R2: LaurentQPoly({4: 1, 3: 2}),
        SymmetryClass.D1: _q(4),
        SymmetryClass.D2: LaurentQPoly({4: 1, 3: 2}),
        SymmetryClass.D1D2: _q(4),
        SymmetryClass.RECT: LaurentQPoly({4: 1, 3: 2}),
        SymmetryClass.SQUARE: _q(4),
    }

    for symmetry_class, coefficient in expected.items():
        assert solver.solve_series(symmetry_class, 6, ring)[4] == coefficient


def test_full_class_at_q_one_gives_catalan_numbers(solver):
    series = solver.solve_series(SymmetryClass.FULL, 30, ScalarRing())

    assert [series[m] for m in range(2, 7)] == [1, 2, 5, 14, 42]
    assert all(series[m] == catalan(m - 1) for m in range(2, 31))


def test_rectangles_at_q_one(solver):
    series = solver.solve_series(SymmetryClass.RECT, 40, ScalarRing())

    assert all(series[m] == m - 1 for m in range(2, 41))


def test_closed_forms_match_exact_series(solver):
    ring = LaurentRing()
    for symmetry_class in (SymmetryClass.RECT, SymmetryClass.SQUARE):
        series = solver.solve_series(symmetry_class, 30, ring)
        for m in range(2, 31):
            for n in range(1, m * m // 4 + 1):
                assert series[m].coefficient(n) == closed_form_coefficient(symmetry_class, m, n)


def test_closed_form_coefficient():
    assert closed_form_coefficient(SymmetryClass.FULL, 7) == 132
    assert closed_form_coefficient(SymmetryClass.RECT, 5, 4) == 2
    assert closed_form_coefficient(SymmetryClass.RECT, 4, 4) == 1
    assert closed_form_coefficient(SymmetryClass.SQUARE, 6, 9) == 1
    assert closed_form_coefficient(SymmetryClass.SQUARE, 6, 8) == 0
    with pytest.raises(UsageError):
        closed_form_coefficient(SymmetryClass.D1, 4, 4)
    with pytest.raises(UsageError):
        closed_form_coefficient(SymmetryClass.RECT, 4)


def test_series_agree_with_enumeration(solver):
    # Arrange
    table = Enumerator(max_m=10, logger=MagicMock()).enumerate_counts(10)

    for symmetry_class in SymmetryClass:
        # Act
        series = solver.solve_series(symmetry_class, 10, LaurentRing())

        # Assert
        for m in range(2, 11):
            assert series[m] == LaurentQPoly(table.area_distribution(symmetry_class, m))


@pytest.mark.parametrize("symmetry_class", list(SymmetryClass))
def test_native_jets_match_collapsed_exact_series(solver, symmetry_class):
    exact = solver.solve_series(symmetry_class, 12, LaurentRing())
    for jet_order in range(4):
        ring = JetRing(jet_order)
        assert solver.solve_series(symmetry_class, 12, ring) == collapse_series(exact, ring)
    assert solver.solve_series(symmetry_class, 12, ScalarRing()) == collapse_series(exact, ScalarRing())


def test_picard_iterates_gain_one_coefficient_at_a_time(solver):
    # Act
    iterates = list(solver.picard_iterates(SymmetryClass.FULL, 10, LaurentRing()))

    # Assert
    assert iterates[-1] == solver.solve_series(SymmetryClass.FULL, 10, LaurentRing())
    agreements = []
    for previous, current in zip(iterates, iterates[1:]):
        difference = current - previous
        agreements.append(difference.valuation if difference.valuation is not None else 11)
    assert agreements == sorted(agreements)
    assert agreements[-1] == 11


def test_solutions_are_cached_and_truncated(solver):
    # Arrange
    solver.solve_series(SymmetryClass.D1, 10, JetRing(1))
    calls = solver.logger.info.call_count

    # Act
    shorter = solver.solve_series(SymmetryClass.D1, 6, JetRing(1))

    # Assert
    assert shorter.order == 6
    assert solver.logger.info.call_count == calls


def test_order_below_two_is_rejected(solver):
    with pytest.raises(UsageError):
        solver.solve_series(SymmetryClass.FULL, 1, LaurentRing())


def test_non_contracting_equation_is_reported(solver):
    # Arrange: F = x^2 q + 1 * (B + F(xq)) with B = 1 reads F_n from itself
    ring = ScalarRing()
    terms = EquationTerms(monomial(ring, 6, 2, 1), monomial(ring, 6, 0), 0, monomial(ring, 6, 0))

    # Act & Assert
    with patch.object(solver, "class_terms", return_value=terms):
        with pytest.raises(NonProductiveRecursion):
            solver.solve_series(SymmetryClass.FULL, 6, ring)
    solver.logger.error.assert_called_once()


def test_geometry_violations_are_invariant_failures():
    # Arrange
    solver = SeriesSolver(logger=MagicMock(), verify_max_order=0)
    ring = LaurentRing()
    negative = XSeries.from_terms(ring, 4, [(2, _q(1)), (4, _q(3, -1))])
    too_large = XSeries.from_terms(ring, 4, [(2, _q(2))])

    # Act & Assert
    with patch.object(solver, "_relaxed_solve", return_value=negative):
        with pytest.raises(InvariantViolation) as exc:
            solver.solve_series(SymmetryClass.FULL, 4, ring)
    assert exc.value.invariant == "positivity"
    with patch.object(solver, "_relaxed_solve", return_value=too_large):
        with pytest.raises(InvariantViolation) as exc:
            solver.solve_series(SymmetryClass.RECT, 4, ring)
    assert exc.value.invariant == "area-bounds"


def test_fixed_point_is_verified():
    # Arrange
    solver = SeriesSolver(logger=MagicMock())
    ring = ScalarRing()
    wrong = XSeries(ring, (0, 0, 1, 2, 6))

    # Act & Assert
    with patch.object(solver, "_relaxed_solve", return_value=wrong):
        with pytest.raises(InvariantViolation) as exc:
            solver.solve_series(SymmetryClass.FULL, 4, ring)
    assert exc.value.invariant == "fixed-point"

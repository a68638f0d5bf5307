from fractions import Fraction
from unittest.mock import MagicMock

import pytest

from models.errors import BurnsideIntegrityError, UsageError
from models.polygon import Subgroup, SymmetryClass, SymmetryElement
from models.rings import JetRing, LaurentQPoly, LaurentRing, ScalarRing
from models.xseries import XSeries
from services.enumerator import Enumerator
from services.feq_engine import SeriesSolver
from services.orbits import OrbitCounter, fix_map

ACTING = [s for s in Subgroup if s.acts_on_staircases]


@pytest.fixture
def counter():
    logger = MagicMock()
    return OrbitCounter(SeriesSolver(logger), logger)


def test_fix_map():
    assert fix_map(SymmetryElement.E) is SymmetryClass.FULL
    assert fix_map(SymmetryElement.R) is SymmetryClass.SQUARE
    assert fix_map(SymmetryElement.R3) is SymmetryClass.SQUARE
    assert fix_map(SymmetryElement.R2) is SymmetryClass.R2
    assert fix_map(SymmetryElement.H) is SymmetryClass.RECT
    assert fix_map(SymmetryElement.V) is SymmetryClass.RECT
    assert fix_map(SymmetryElement.D2) is SymmetryClass.D2


def test_acting_subgroups_are_inside_the_diagonal_klein_group():
    assert set(ACTING) == {Subgroup.E, Subgroup.R2, Subgroup.D1, Subgroup.D2, Subgroup.D1D2}


def test_trivial_group_gives_the_full_series(counter):
    ring = LaurentRing()

    assert counter.orbit_series(Subgroup.E, 10, ring) == counter.solver.solve_series(SymmetryClass.FULL, 10, ring)


def test_full_group_average(counter):
    # Arrange
    ring = LaurentRing()
    solve = lambda c: counter.solver.solve_series(c, 10, ring)

    # Act
    series = counter.orbit_series(Subgroup.D4, 10, ring)

    # Assert
    for m in range(11):
        total = (solve(SymmetryClass.FULL)[m] + solve(SymmetryClass.R2)[m] + solve(SymmetryClass.SQUARE)[m] * 2
                 + solve(SymmetryClass.D1)[m] + solve(SymmetryClass.D2)[m] + solve(SymmetryClass.RECT)[m] * 2)
        assert series[m] == total * Fraction(1, 8)
    assert series[2] == LaurentQPoly.monomial(1)


def test_averages_match_brute_force_orbits(counter):
    # Arrange
    enumerator = Enumerator(max_m=9, logger=MagicMock())

    for subgroup in Subgroup:
        # Act
        series = counter.orbit_series(subgroup, 9, LaurentRing())

        # Assert
        for (m, n), weight in enumerator.orbit_counts(subgroup, 9).items():
            assert series[m].coefficient(n) == weight


@pytest.mark.parametrize("subgroup", ACTING)
def test_acting_subgroups_are_integral(counter, subgroup):
    series = counter.orbit_series(subgroup, 24, LaurentRing())

    for m in range(25):
        assert all(isinstance(c, int) and c >= 0 for _, c in series[m].items())


def test_non_acting_subgroups_keep_rational_weights(counter):
    series = counter.orbit_series(Subgroup.D4, 4, ScalarRing())

    assert series[4] == Fraction(5, 2)


def test_orbits_never_exceed_polygons(counter):
    ring = ScalarRing()
    full = counter.solver.solve_series(SymmetryClass.FULL, 30, ring)

    for subgroup in Subgroup:
        series = counter.orbit_series(subgroup, 30, ring)
        assert all(series[m] <= full[m] for m in range(31))


@pytest.mark.parametrize("smaller, larger", [
    (Subgroup.E, Subgroup.R2), (Subgroup.R2, Subgroup.D1D2), (Subgroup.D1, Subgroup.D1D2),
    (Subgroup.D2, Subgroup.D1D2), (Subgroup.E, Subgroup.D2)])
def test_larger_acting_subgroups_have_fewer_orbits(counter, smaller, larger):
    ring = ScalarRing()

    coarse = counter.orbit_series(larger, 30, ring)
    fine = counter.orbit_series(smaller, 30, ring)

    assert all(coarse[m] <= fine[m] for m in range(31))


def test_integrality_violation_is_reported():
    # Arrange: a broken class series with a single polygon of half-perimeter 2
    solver = MagicMock()
    ring = LaurentRing()
    broken = XSeries.from_terms(ring, 3, [(2, LaurentQPoly.monomial(1))])
    solver.solve_series.side_effect = lambda c, order, r: broken if c is SymmetryClass.FULL else XSeries.zero(r, order)
    counter = OrbitCounter(solver, MagicMock())

    # Act & Assert
    with pytest.raises(BurnsideIntegrityError, match="Burnside integrality violated"):
        counter.orbit_series(Subgroup.D1D2, 3, ring)
    counter.logger.error.assert_called_once()


def test_jet_orbits_are_averaged(counter):
    series = counter.orbit_series(Subgroup.R2, 8, JetRing(1))
    exact = counter.orbit_series(Subgroup.R2, 8, LaurentRing())

    for m in range(9):
        assert series[m] == exact[m].to_jet(1)


def test_ratio_rows_at_the_unit_square(counter):
    assert counter.subexp_ratio_table(Subgroup.D4, Fraction(0), [2]) == [(2, 7)]
    assert counter.subexp_ratio_table(Subgroup.E, Fraction(5), [2, 10, 20]) == [(2, 0), (10, 0), (20, 0)]


def test_rotation_ratio_decreases(counter):
    rows = counter.subexp_ratio_table(Subgroup.R2, Fraction(3), range(20, 61))

    ratios = [ratio for _, ratio in rows]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


def test_full_group_ratio_decreases_per_parity(counter):
    rows = dict(counter.subexp_ratio_table(Subgroup.D4, Fraction(3), range(20, 61)))

    for m in range(20, 59):
        assert rows[m + 2] < rows[m]


@pytest.mark.parametrize("alpha, m_values", [(Fraction(1, 2), [4]), (Fraction(1), [1, 4]), (Fraction(1), [])])
def test_ratio_arguments_are_checked(counter, alpha, m_values):
    with pytest.raises(UsageError):
        counter.subexp_ratio_table(Subgroup.D4, alpha, m_values)


@pytest.mark.parametrize("subgroup", [Subgroup.D4, Subgroup.R2, Subgroup.HV])
def test_moment_transfer_bound(counter, subgroup):
    for k in (1, 2, 3):
        for m in range(10, 15):
            deviation, bound = counter.moment_transfer_bound(subgroup, m, k)
            assert deviation <= bound

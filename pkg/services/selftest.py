from dataclasses import dataclass
from fractions import Fraction
from logging import Logger
from typing import Callable

from models.errors import EngineError
from models.numbers import RadicalConstant
from models.polygon import Subgroup, SymmetryClass
from models.rings import JetRing, LaurentQPoly, LaurentRing, ScalarRing
from models.xseries import collapse_series
from services.enumerator import Enumerator
from services.feq_engine import SeriesSolver, closed_form_coefficient
from services.limit_laws import LimitLaws
from services.moment_lab import MomentLab
from services.orbits import OrbitCounter

CATALAN_MAX_M = 30
CLOSED_FORM_MAX_M = 60
IDENTITY_MAX_K = 20
RESIDUAL_MAX_K = 30
CROSS_RING_MAX_M = 20
CROSS_RING_MAX_JET = 4
BURNSIDE_MAX_M = 40
ORACLE_MOMENT_MAX_K = 3


@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    detail: str = ""


class SelfTest:
    """Runs the oracle and identity suites; each check reports pass or fail independently."""

    def __init__(self, solver: SeriesSolver, enumerator: Enumerator, limit_laws: LimitLaws,
                 moment_lab: MomentLab, orbit_counter: OrbitCounter, logger: Logger):
        self.solver = solver
        self.enumerator = enumerator
        self.limit_laws = limit_laws
        self.moment_lab = moment_lab
        self.orbit_counter = orbit_counter
        self.logger = logger

    def run(self, max_m: int) -> list[CheckResult]:
        checks: list[tuple[str, Callable[[], str]]] = [
            ("oracle-equivalence", lambda: self.check_oracle_equivalence(max_m)),
            ("closed-forms", self.check_closed_forms),
            ("dominant-balance", self.check_identities),
            ("recursion-residuals", self.check_residuals),
            ("cross-ring", self.check_cross_ring),
            ("burnside-integrality", lambda: self.check_burnside(min(BURNSIDE_MAX_M, 3 * max_m), max_m)),
            ("oracle-moments", lambda: self.check_oracle_moments(max_m)),
            ("exact-limits", self.check_exact_limits),
        ]
        results = []
        for name, check in checks:
            log_dict = {"check": name, "max_m": max_m}
            self.logger.info(f"Running self check {log_dict}")
            try:
                results.append(CheckResult(name, True, check()))
            except (EngineError, AssertionError, ArithmeticError) as exc:
                self.logger.error(f"Self check failed {log_dict} {exc}")
                results.append(CheckResult(name, False, str(exc)))
        return results

    def check_oracle_equivalence(self, max_m: int) -> str:
        table = self.enumerator.enumerate_counts(max_m)
        ring = LaurentRing()
        for symmetry_class in SymmetryClass:
            series = self.solver.solve_series(symmetry_class, max_m, ring)
            for m in range(2, max_m + 1):
                expected = LaurentQPoly(table.area_distribution(symmetry_class, m))
                if series[m] != expected:
                    raise AssertionError(f"{symmetry_class.value} at m={m}: {series[m]} != {expected}")
        return f"7 classes agree with enumeration for m <= {max_m}"

    def check_closed_forms(self) -> str:
        scalar = self.solver.solve_series(SymmetryClass.FULL, CATALAN_MAX_M, ScalarRing())
        for m in range(2, CATALAN_MAX_M + 1):
            if scalar[m] != closed_form_coefficient(SymmetryClass.FULL, m):
                raise AssertionError(f"Full at m={m} is {scalar[m]}, expected Catalan({m - 1})")
        ring = LaurentRing()
        for symmetry_class in (SymmetryClass.SQUARE, SymmetryClass.RECT):
            series = self.solver.solve_series(symmetry_class, CLOSED_FORM_MAX_M, ring)
            for m in range(2, CLOSED_FORM_MAX_M + 1):
                for n in range(1, m * m // 4 + 1):
                    expected = closed_form_coefficient(symmetry_class, m, n)
                    if series[m].coefficient(n) != expected:
                        raise AssertionError(f"{symmetry_class.value} at m={m}, n={n}")
        return f"Catalan to m={CATALAN_MAX_M}; squares and rectangles to m={CLOSED_FORM_MAX_M}"

    def check_identities(self) -> str:
        laws = self.limit_laws
        for k in range(IDENTITY_MAX_K + 1):
            if laws.f_coeff(k) != laws.phi(k) / 2 ** (2 * k + 1):
                raise AssertionError(f"f_{k} differs from phi_{k} / 2^{2 * k + 1}")
            expected = RadicalConstant.rational(laws.omega(k)) / RadicalConstant.sqrt2_power(3 * k + 1)
            if laws.g_coeff(k) != expected:
                raise AssertionError(f"g_{k} differs from omega_{k} / 2^((3k+1)/2)")
        return f"k <= {IDENTITY_MAX_K}"

    def check_residuals(self) -> str:
        laws = self.limit_laws
        k_max = min(RESIDUAL_MAX_K, laws.max_order)
        for k in range(1, k_max + 1):
            for name, residual in (("phi", laws.phi_residual(k)), ("omega", laws.omega_residual(k)),
                                   ("f", laws.f_residual(k))):
                if residual != 0:
                    raise AssertionError(f"{name} residual at k={k} is {residual}")
            if not laws.g_residual(k).is_zero:
                raise AssertionError(f"g residual at k={k} is {laws.g_residual(k)}")
        return f"k <= {k_max}"

    def check_cross_ring(self) -> str:
        for symmetry_class in SymmetryClass:
            exact = self.solver.solve_series(symmetry_class, CROSS_RING_MAX_M, LaurentRing())
            for jet_order in range(CROSS_RING_MAX_JET + 1):
                ring = JetRing(jet_order)
                native = self.solver.solve_series(symmetry_class, CROSS_RING_MAX_M, ring)
                if collapse_series(exact, ring) != native:
                    raise AssertionError(f"{symmetry_class.value} differs in {ring}")
        return f"m <= {CROSS_RING_MAX_M}, K <= {CROSS_RING_MAX_JET}"

    def check_burnside(self, order: int, max_m: int) -> str:
        ring = LaurentRing()
        for subgroup in Subgroup:
            # integrality is enforced inside orbit_series for the acting subgroups
            series = self.orbit_counter.orbit_series(subgroup, order, ring)
            brute = self.enumerator.orbit_counts(subgroup, max_m)
            for (m, n), weight in brute.items():
                if series[m].coefficient(n) != weight:
                    raise AssertionError(f"{subgroup.value} at m={m}, n={n}: {series[m].coefficient(n)} != {weight}")
        acting = sum(1 for subgroup in Subgroup if subgroup.acts_on_staircases)
        return f"{acting} acting subgroups integral for m <= {order}; 10 averages match enumeration for m <= {max_m}"

    def check_oracle_moments(self, max_m: int) -> str:
        checked = self.moment_lab.oracle_cross_check(self.enumerator, max_m, ORACLE_MOMENT_MAX_K)
        return f"{checked} (class, m) pairs agree"

    def check_exact_limits(self) -> str:
        lab = self.moment_lab
        for m in (2, 3, 10, 50):
            normalized = lab.normalized_moment(SymmetryClass.RECT, m, 1)
            if normalized.value != Fraction(2, 3) + Fraction(2, 3 * m) or normalized.root_power:
                raise AssertionError(f"rectangle mean at m={m} is {normalized.render()}")
        for index in (1, 2, 5, 12):
            for k in (1, 2, 3):
                normalized = lab.normalized_moment(SymmetryClass.SQUARE, index, k)
                if normalized.value != 1:
                    raise AssertionError(f"square moment k={k} at {index} is {normalized.render()}")
        return "rectangle means and square moments exact"

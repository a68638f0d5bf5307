"""
Solver for the q-difference equations of the seven symmetry classes.

Every class series F is declared in the normal form

    F = A + (L + lam * F) * (B + F(xq, q)),    lam in {0, 1}

with A, L, B built from previously solved classes. The n-th coefficient of
the right-hand side only reads coefficients of F below n, so the solver
fills coefficients one at a time (relaxed evaluation) instead of iterating
whole series.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from logging import Logger
from math import comb
from typing import Callable, Iterator, Optional

import numpy as np

from middlewares.prometheus_middleware import record_series_coefficients
from models.errors import InvariantViolation, NonProductiveRecursion, UsageError
from models.polygon import SymmetryClass
from models.rings import CoefficientRing, LaurentQPoly, LaurentRing
from models.xseries import (XSeries, compose_xq, geometric, monomial, scale_q, shift_x,
                            xs_add, xs_mul, xs_scale)


@dataclass(frozen=True)
class EquationTerms:
    a: XSeries
    l: XSeries
    lam: int
    b: XSeries

    def valuations(self) -> tuple[int, int, int]:
        """(val F, val of L + lam F, val of B + F(xq, q)) with infinity as order + 1."""
        cap = self.a.order + 1
        v_f = _or_cap(self.a.valuation, cap)
        v_l = _or_cap(self.l.valuation, cap)
        v_b = _or_cap(self.b.valuation, cap)
        v_u = min(v_l, v_f) if self.lam else v_l
        return v_f, v_u, min(v_b, v_f)


def _or_cap(value: Optional[int], cap: int) -> int:
    return cap if value is None else value


TermsBuilder = Callable[["SeriesSolver", int, CoefficientRing], EquationTerms]


@dataclass(frozen=True)
class ClassSpec:
    symmetry_class: SymmetryClass
    build: TermsBuilder
    prerequisites: tuple[SymmetryClass, ...] = field(default=())


def _x2q(ring: CoefficientRing, order: int) -> XSeries:
    return monomial(ring, order, 2, 1)


def _zero(ring: CoefficientRing, order: int) -> XSeries:
    return XSeries.zero(ring, order)


def _doubled_quotient(solver: "SeriesSolver", base: SymmetryClass, order: int,
                      ring: CoefficientRing) -> XSeries:
    """C(x^2, q^2) / (x^2 q) to x^order."""
    prerequisite = solver.solve_series(base, (order + 2) // 2, ring)
    doubled = compose_xq(prerequisite, 2, 2)
    return scale_q(shift_x(doubled, -2), -1).truncate(order)


def _full_terms(solver, order, ring):
    return EquationTerms(_x2q(ring, order), _zero(ring, order), 1, monomial(ring, order, 1, 1, 2))


def _d1_terms(solver, order, ring):
    return EquationTerms(_x2q(ring, order), _zero(ring, order), 1, _zero(ring, order))


def _r2_terms(solver, order, ring):
    q_part = _doubled_quotient(solver, SymmetryClass.FULL, order, ring)
    one_plus_2xq = xs_add(monomial(ring, order, 0), monomial(ring, order, 1, 1, 2))
    return EquationTerms(xs_mul(q_part, one_plus_2xq), q_part, 0, _zero(ring, order))


def _d2_terms(solver, order, ring):
    q_part = _doubled_quotient(solver, SymmetryClass.FULL, order, ring)
    return EquationTerms(q_part, q_part, 0, _zero(ring, order))


def _d1d2_terms(solver, order, ring):
    q_part = _doubled_quotient(solver, SymmetryClass.D1, order, ring)
    return EquationTerms(q_part, q_part, 0, _zero(ring, order))


def _rect_terms(solver, order, ring):
    # x^2 q (1 + xq) / (1 - xq) expanded as x^2 q (1 + 2 sum_j (xq)^j)
    tail = xs_scale(shift_x(scale_q(geometric(ring, order, 1), 1), 2).truncate(order), 2)
    return EquationTerms(xs_add(_x2q(ring, order), tail), _x2q(ring, order), 0, _zero(ring, order))


def _square_terms(solver, order, ring):
    return EquationTerms(_x2q(ring, order), _x2q(ring, order), 0, _zero(ring, order))


CLASS_SPECS: dict[SymmetryClass, ClassSpec] = {
    SymmetryClass.FULL: ClassSpec(SymmetryClass.FULL, _full_terms),
    SymmetryClass.R2: ClassSpec(SymmetryClass.R2, _r2_terms, (SymmetryClass.FULL,)),
    SymmetryClass.D1: ClassSpec(SymmetryClass.D1, _d1_terms),
    SymmetryClass.D2: ClassSpec(SymmetryClass.D2, _d2_terms, (SymmetryClass.FULL,)),
    SymmetryClass.D1D2: ClassSpec(SymmetryClass.D1D2, _d1d2_terms, (SymmetryClass.D1,)),
    SymmetryClass.RECT: ClassSpec(SymmetryClass.RECT, _rect_terms),
    SymmetryClass.SQUARE: ClassSpec(SymmetryClass.SQUARE, _square_terms),
}


def apply_rhs(terms: EquationTerms, f: XSeries) -> XSeries:
    """A + (L + lam F)(B + F(xq, q))."""
    u = xs_add(terms.l, f) if terms.lam else terms.l
    v = xs_add(terms.b, compose_xq(f, 1, 1))
    return xs_add(terms.a, xs_mul(u, v))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def closed_form_coefficient(symmetry_class: SymmetryClass, m: int, n: Optional[int] = None) -> int:
    """
    Known coefficients: Full at q = 1 (n is ignored), rectangles and squares by area.
    """
    if m < 2:
        raise UsageError("closed forms need m >= 2")
    if symmetry_class is SymmetryClass.FULL:
        return catalan(m - 1)
    if n is None:
        raise UsageError(f"{symmetry_class.value} closed form needs an area")
    if symmetry_class is SymmetryClass.RECT:
        return sum(1 for a in range(1, m) if a * (m - a) == n)
    if symmetry_class is SymmetryClass.SQUARE:
        return int(m % 2 == 0 and n == (m // 2) ** 2)
    raise UsageError(f"no closed form for class {symmetry_class.value}")


class SeriesSolver:
    def __init__(self, logger: Logger, verify_max_order: int = 120):
        self.logger = logger
        self.verify_max_order = verify_max_order
        self._solutions: dict[tuple[SymmetryClass, CoefficientRing], XSeries] = {}

    def class_terms(self, symmetry_class: SymmetryClass, order: int, ring: CoefficientRing) -> EquationTerms:
        return CLASS_SPECS[symmetry_class].build(self, order, ring)

    def solve_series(self, symmetry_class: SymmetryClass, order: int, ring: CoefficientRing) -> XSeries:
        if order < 2:
            raise UsageError(f"series order must be >= 2, got {order}")
        cached = self._solutions.get((symmetry_class, ring))
        if cached is not None and cached.order >= order:
            return cached.truncate(order)

        log_dict = {"class": symmetry_class.value, "order": order, "ring": str(ring)}
        self.logger.info(f"Solving class series {log_dict}")
        terms = self.class_terms(symmetry_class, order, ring)
        solution = self._relaxed_solve(terms, ring, log_dict)
        if order <= self.verify_max_order and apply_rhs(terms, solution) != solution:
            self.logger.error(f"Fixed point not confirmed {log_dict}")
            raise InvariantViolation("fixed-point", f"{symmetry_class.value} to x^{order}")
        if isinstance(ring, LaurentRing):
            self._check_geometry(symmetry_class, solution)

        self._solutions[(symmetry_class, ring)] = solution
        record_series_coefficients(str(ring), order + 1)
        self.logger.info(f"Class series solved {log_dict}")
        return solution

    def _relaxed_solve(self, terms: EquationTerms, ring: CoefficientRing, log_dict: dict) -> XSeries:
        order = terms.a.order
        v_f, v_u, v_v = terms.valuations()
        if v_u < 1 or v_v < 1:
            self.logger.error(f"Equation is not contracting {log_dict}")
            raise NonProductiveRecursion(f"x-adic gains ({v_u}, {v_v}) for {log_dict['class']}")

        u_buffer, v_buffer = ring.buffer(order + 1), ring.buffer(order + 1)
        l_support = np.array([], dtype=np.int64)
        if not terms.lam:
            l_support = np.array([i for i in range(order + 1) if not ring.is_zero(terms.l[i])],
                                 dtype=np.int64)
            for i in l_support:
                u_buffer.store(int(i), terms.l[int(i)])
        else:
            for i in range(order + 1):
                if not ring.is_zero(terms.l[i]):
                    u_buffer.store(i, terms.l[i])
        for j in range(order + 1):
            if not ring.is_zero(terms.b[j]):
                v_buffer.store(j, terms.b[j])

        coefficients = [ring.zero()] * (order + 1)
        for n in range(order + 1):
            lo, hi = v_u, n - v_v
            if hi >= lo:
                if terms.lam:
                    indices = np.arange(lo, hi + 1, dtype=np.int64)
                else:
                    indices = l_support[np.searchsorted(l_support, lo):np.searchsorted(l_support, hi, side="right")]
                value = terms.a[n] + u_buffer.convolve_at(v_buffer, n, indices)
            else:
                value = terms.a[n]
            coefficients[n] = value
            if terms.lam:
                u_buffer.store(n, terms.l[n] + value)
            v_buffer.store(n, terms.b[n] + ring.times_q_power(value, n))
        return XSeries(ring, tuple(coefficients))

    def picard_iterates(self, symmetry_class: SymmetryClass, order: int,
                        ring: CoefficientRing) -> Iterator[XSeries]:
        """F_0 = 0, F_(t+1) = RHS(F_t), yielded until two consecutive iterates agree."""
        terms = self.class_terms(symmetry_class, order, ring)
        current = XSeries.zero(ring, order)
        for _ in range(order + 2):
            nxt = apply_rhs(terms, current)
            yield nxt
            if nxt == current:
                return
            current = nxt
        raise NonProductiveRecursion(
            f"{symmetry_class.value} did not stabilize within {order + 2} iterations")

    def _check_geometry(self, symmetry_class: SymmetryClass, solution: XSeries) -> None:
        for m in range(solution.order + 1):
            poly: LaurentQPoly = solution[m]
            for degree, count in poly.items():
                if count < 0:
                    raise InvariantViolation(
                        "positivity", f"{symmetry_class.value} at x^{m} q^{degree}: {count}")
                if degree < 1 or 4 * degree > m * m:
                    raise InvariantViolation(
                        "area-bounds", f"{symmetry_class.value} has area {degree} at m={m}")

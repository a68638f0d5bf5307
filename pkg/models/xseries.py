"""Truncated power series in x over a pluggable coefficient ring."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from models.errors import SeriesError
from models.rings import CoefficientRing, LaurentQPoly


@dataclass(frozen=True)
class XSeries:
    """a_0 + a_1 x + ... + a_N x^N + O(x^(N+1))."""

    ring: CoefficientRing
    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least one coefficient")
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> "XSeries":
        return cls(ring, (ring.zero(),) * (order + 1))

    @classmethod
    def from_terms(cls, ring: CoefficientRing, order: int, terms: Iterable[tuple[int, object]]) -> "XSeries":
        """Build from (x-degree, coefficient) pairs; degrees above `order` are dropped."""
        slots = [ring.zero()] * (order + 1)
        for degree, value in terms:
            if degree < 0:
                raise SeriesError(f"negative x-degree {degree}")
            if degree <= order:
                slots[degree] = slots[degree] + value
        return cls(ring, tuple(slots))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"x^{n} outside the known range 0..{self.order}")
        return self.coefficients[n]

    def truncate(self, order: int) -> "XSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series known to x^{self.order} up to x^{order}")
        return XSeries(self.ring, self.coefficients[:order + 1])

    @property
    def valuation(self) -> int | None:
        for n, c in enumerate(self.coefficients):
            if not self.ring.is_zero(c):
                return n
        return None

    def __add__(self, other):
        return xs_add(self, other)

    def __sub__(self, other):
        return xs_sub(self, other)

    def __mul__(self, other):
        return xs_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.ring == other.ring and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((str(self.ring), self.coefficients))


def _check_ring(f: XSeries, g: XSeries) -> None:
    if f.ring != g.ring:
        raise SeriesError(f"series over different rings: {f.ring} and {g.ring}")


def xs_add(f: XSeries, g: XSeries) -> XSeries:
    _check_ring(f, g)
    order = min(f.order, g.order)
    return XSeries(f.ring, tuple(f[n] + g[n] for n in range(order + 1)))


def xs_sub(f: XSeries, g: XSeries) -> XSeries:
    _check_ring(f, g)
    order = min(f.order, g.order)
    return XSeries(f.ring, tuple(f[n] - g[n] for n in range(order + 1)))


def xs_scale(f: XSeries, factor) -> XSeries:
    """Multiply every coefficient by a ring element or an integer."""
    return XSeries(f.ring, tuple(c * factor for c in f.coefficients))


def xs_mul(f: XSeries, g: XSeries) -> XSeries:
    _check_ring(f, g)
    ring = f.ring
    order = min(f.order, g.order)
    slots = [ring.zero()] * (order + 1)
    for i in range(order + 1):
        a = f[i]
        if ring.is_zero(a):
            continue
        for j in range(order + 1 - i):
            b = g[j]
            if not ring.is_zero(b):
                slots[i + j] = slots[i + j] + a * b
    return XSeries(ring, tuple(slots))


def xs_recip(f: XSeries) -> XSeries:
    ring = f.ring
    head = f[0]
    if not ring.is_invertible(head):
        raise SeriesError("series not invertible")
    inv_head = ring.invert(head)
    slots = [inv_head]
    for n in range(1, f.order + 1):
        acc = ring.zero()
        for i in range(1, n + 1):
            if not ring.is_zero(f[i]):
                acc = acc + f[i] * slots[n - i]
        slots.append(-(inv_head * acc))
    return XSeries(ring, tuple(slots))


def shift_x(f: XSeries, d: int) -> XSeries:
    """Multiply by x^d. Negative d divides and needs the low coefficients to vanish."""
    if d >= 0:
        return XSeries(f.ring, (f.ring.zero(),) * d + f.coefficients)
    drop = -d
    if drop > f.order:
        raise SeriesError(f"dividing by x^{drop} leaves nothing of a series known to x^{f.order}")
    for n in range(drop):
        if not f.ring.is_zero(f[n]):
            raise SeriesError(f"residue at negative x-degree {n - drop}")
    return XSeries(f.ring, f.coefficients[drop:])


def scale_q(f: XSeries, d: int) -> XSeries:
    """Multiply every coefficient by q^d."""
    ring = f.ring
    return XSeries(ring, tuple(ring.times_q_power(c, d) for c in f.coefficients))


def compose_xq(f: XSeries, x_power: int, q_power: int) -> XSeries:
    """
    Substitute into F(x, q).

    x_power = 1: x -> x q^q_power with q fixed; the x^n coefficient gains q^(q_power n).
    x_power = 2: (x, q) -> (x^2, q^q_power); the result is known to x^(2N+1).
    """
    ring = f.ring
    if x_power == 1 and q_power in (1, 2):
        return XSeries(ring, tuple(
            ring.times_q_power(c, q_power * n) for n, c in enumerate(f.coefficients)))
    if x_power == 2 and q_power in (1, 2):
        slots = [ring.zero()] * (2 * f.order + 2)
        for n, c in enumerate(f.coefficients):
            slots[2 * n] = ring.square_q(c) if q_power == 2 else c
        return XSeries(ring, tuple(slots))
    raise SeriesError(f"unsupported substitution (x_power={x_power}, q_power={q_power})")


def collapse_series(f: XSeries, ring: CoefficientRing) -> XSeries:
    """Map an exact series into `ring` coefficient by coefficient."""
    values = []
    for c in f.coefficients:
        if not isinstance(c, LaurentQPoly):
            raise SeriesError("only exact (Laurent) series can be collapsed")
        values.append(ring.collapse(c))
    return XSeries(ring, tuple(values))


def geometric(ring: CoefficientRing, order: int, ratio_q_power: int, start: int = 1) -> XSeries:
    """sum_{j >= start} (x q^ratio_q_power)^j."""
    return XSeries.from_terms(
        ring, order, ((j, ring.q_power(ratio_q_power * j)) for j in range(start, order + 1)))


def monomial(ring: CoefficientRing, order: int, x_degree: int, q_degree: int = 0, coefficient: int = 1) -> XSeries:
    return XSeries.from_terms(ring, order, [(x_degree, ring.q_power(q_degree) * coefficient)])

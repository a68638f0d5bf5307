"""
Coefficient rings for truncated power series in x.

Three rings are supported:

- ``LaurentRing``: exact Laurent polynomials in q (``LaurentQPoly``).
- ``JetRing(K)``: truncated expansions in delta = q - 1 up to delta^K
  (``DeltaJet``); slot j holds the j-th q-derivative at q = 1 divided by j!.
- ``ScalarRing``: evaluation at q = 1, coefficients are plain rationals.

Each ring also hands out a ``SeriesBuffer`` used by the relaxed solver to
accumulate convolutions coefficient by coefficient.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

import numpy as np

from models.errors import SeriesError
from models.numbers import RationalLike, format_rational


def _normalize(value: RationalLike) -> RationalLike:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def generalized_binomial(n: int, j: int) -> int:
    """C(n, j) for any integer n, so that (1 + d)^n = sum_j C(n, j) d^j."""
    if j < 0:
        return 0
    if n >= 0:
        return comb(n, j)
    return (-1) ** j * comb(j - n - 1, j)


class LaurentQPoly:
    """
    Sparse Laurent polynomial in q.

    Class series have integer coefficients; Burnside averages over a
    subgroup that does not act on staircase polygons may leave rationals.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | None = None):
        self._terms: dict[int, RationalLike] = {d: _normalize(c) for d, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "LaurentQPoly":
        return cls({degree: coefficient})

    @classmethod
    def constant(cls, value: int) -> "LaurentQPoly":
        return cls({0: value})

    def items(self) -> Iterable[tuple[int, int]]:
        return sorted(self._terms.items())

    def coefficient(self, degree: int) -> int:
        return self._terms.get(degree, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def max_degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentQPoly.constant(other)
        if not isinstance(other, LaurentQPoly):
            return NotImplemented
        terms = dict(self._terms)
        for d, c in other._terms.items():
            terms[d] = terms.get(d, 0) + c
        return LaurentQPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQPoly({d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentQPoly.constant(other)
        if not isinstance(other, LaurentQPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentQPoly({d: c * other for d, c in self._terms.items()})
        if not isinstance(other, LaurentQPoly):
            return NotImplemented
        terms: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                terms[d1 + d2] = terms.get(d1 + d2, 0) + c1 * c2
        return LaurentQPoly(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentQPoly.constant(other)
        if not isinstance(other, LaurentQPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}q^{d}" for d, c in self.items())

    def shift(self, degree: int) -> "LaurentQPoly":
        """Multiply by q^degree."""
        return LaurentQPoly({d + degree: c for d, c in self._terms.items()})

    def substitute_square(self) -> "LaurentQPoly":
        """q -> q^2."""
        return LaurentQPoly({2 * d: c for d, c in self._terms.items()})

    def at_one(self) -> int:
        return sum(self._terms.values())

    def to_jet(self, order: int) -> "DeltaJet":
        """Expand about q = 1: q^d = (1 + delta)^d, truncated at delta^order."""
        slots = [0] * (order + 1)
        for d, c in self._terms.items():
            for j, b in enumerate(jet_q_power(d, order).coefficients):
                slots[j] += c * b
        return DeltaJet(tuple(slots))


@dataclass(frozen=True)
class DeltaJet:
    """sum_j c_j delta^j + O(delta^(K+1)) with delta = q - 1; K = len(coefficients) - 1."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a jet needs at least the delta^0 slot")
        object.__setattr__(self, "coefficients", tuple(_normalize(c) for c in self.coefficients))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "DeltaJet":
        return cls((value,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def _coerce(self, other) -> "DeltaJet | None":
        if isinstance(other, DeltaJet):
            if other.order != self.order:
                raise ValueError(f"jet orders differ: {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return DeltaJet.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DeltaJet(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return DeltaJet(tuple(-a for a in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DeltaJet(tuple(a * other for a in self.coefficients))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = self.order
        left, right = self.coefficients, other.coefficients
        slots = [0] * (order + 1)
        for i, a in enumerate(left):
            if a:
                for j in range(order + 1 - i):
                    slots[i + j] += a * right[j]
        return DeltaJet(tuple(slots))

    __rmul__ = __mul__

    def inverse(self) -> "DeltaJet":
        head = self.coefficients[0]
        if head == 0:
            raise SeriesError("series not invertible")
        inv_head = Fraction(1) / head
        slots = [inv_head]
        for n in range(1, self.order + 1):
            acc = sum(self.coefficients[i] * slots[n - i] for i in range(1, n + 1))
            slots.append(-acc * inv_head)
        return DeltaJet(tuple(slots))

    def times_q_power(self, n: int) -> "DeltaJet":
        return self * jet_q_power(n, self.order)

    def substitute_square(self) -> "DeltaJet":
        """f(q) -> f(q^2), i.e. delta -> 2 delta + delta^2."""
        powers = _square_substitution_powers(self.order)
        slots = [0] * (self.order + 1)
        for c, power in zip(self.coefficients, powers):
            if c:
                for j, b in enumerate(power):
                    slots[j] += c * b
        return DeltaJet(tuple(slots))

    def render(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]


@lru_cache(maxsize=None)
def jet_q_power(n: int, order: int) -> DeltaJet:
    """q^n = (1 + delta)^n truncated at delta^order."""
    if order < 0:
        raise ValueError("jet order must be >= 0")
    return DeltaJet(tuple(generalized_binomial(n, j) for j in range(order + 1)))


@lru_cache(maxsize=None)
def _square_substitution_powers(order: int) -> tuple[tuple[int, ...], ...]:
    """Coefficient tuples of (2 delta + delta^2)^j for j = 0..order."""
    powers = []
    current = [1] + [0] * order
    for _ in range(order + 1):
        powers.append(tuple(current))
        nxt = [0] * (order + 1)
        for i, c in enumerate(current):
            if c:
                if i + 1 <= order:
                    nxt[i + 1] += 2 * c
                if i + 2 <= order:
                    nxt[i + 2] += c
        current = nxt
    return tuple(powers)


class SeriesBuffer(ABC):
    """Coefficient store of a series under construction, indexed by x-order."""

    @abstractmethod
    def store(self, index: int, value) -> None: ...

    @abstractmethod
    def convolve_at(self, other: "SeriesBuffer", n: int, indices: np.ndarray):
        """sum over i in `indices` of self[i] * other[n - i]."""


class ListBuffer(SeriesBuffer):
    def __init__(self, ring: "CoefficientRing", length: int):
        self.ring = ring
        self.values = [ring.zero()] * length

    def store(self, index, value):
        self.values[index] = value

    def convolve_at(self, other, n, indices):
        total = self.ring.zero()
        for i in indices:
            left = self.values[i]
            if left.is_zero:
                continue
            right = other.values[n - i]
            if not right.is_zero:
                total = total + left * right
        return total


class SlotBuffer(SeriesBuffer):
    """
    Dense jet storage: one object-dtype array per delta slot.

    Products of jets become numpy dot products over exact Python integers,
    which keeps the inner loop of the relaxed solver out of the interpreter.
    """

    def __init__(self, ring: "CoefficientRing", length: int):
        self.ring = ring
        self.width = ring.slot_count
        self.slots = [np.zeros(length, dtype=object) for _ in range(self.width)]

    def store(self, index, value):
        for slot, c in zip(self.slots, self.ring.to_slots(value)):
            slot[index] = c

    def convolve_at(self, other, n, indices):
        if len(indices) == 0:
            return self.ring.zero()
        partners = n - indices
        left = [slot[indices] for slot in self.slots]
        right = [slot[partners] for slot in other.slots]
        totals = []
        for c in range(self.width):
            acc = 0
            for a in range(c + 1):
                acc += np.dot(left[a], right[c - a])
            totals.append(acc)
        return self.ring.from_slots(totals)


class CoefficientRing(ABC):
    mode: str = ""

    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def one(self): ...

    def from_int(self, value: int):
        return self.one() * value

    @abstractmethod
    def q_power(self, n: int):
        """The element q^n."""

    @abstractmethod
    def times_q_power(self, value, n: int): ...

    @abstractmethod
    def square_q(self, value):
        """value(q) -> value(q^2)."""

    @abstractmethod
    def is_invertible(self, value) -> bool: ...

    @abstractmethod
    def invert(self, value): ...

    @abstractmethod
    def collapse(self, poly: LaurentQPoly):
        """Image of an exact Laurent polynomial in this ring."""

    @abstractmethod
    def buffer(self, length: int) -> SeriesBuffer: ...

    def is_zero(self, value) -> bool:
        return value == self.zero()


@dataclass(frozen=True)
class LaurentRing(CoefficientRing):
    mode = "exact"

    def zero(self):
        return LaurentQPoly()

    def one(self):
        return LaurentQPoly.constant(1)

    def from_int(self, value):
        return LaurentQPoly.constant(value)

    def q_power(self, n):
        return LaurentQPoly.monomial(n)

    def times_q_power(self, value, n):
        return value.shift(n)

    def square_q(self, value):
        return value.substitute_square()

    def is_invertible(self, value):
        return len(value._terms) == 1 and abs(next(iter(value._terms.values()))) == 1

    def invert(self, value):
        if not self.is_invertible(value):
            raise SeriesError("series not invertible")
        (degree, c), = value._terms.items()
        return LaurentQPoly.monomial(-degree, c)

    def collapse(self, poly):
        return poly

    def is_zero(self, value):
        return value.is_zero

    def buffer(self, length):
        return ListBuffer(self, length)

    def __str__(self):
        return "exact"


@dataclass(frozen=True)
class JetRing(CoefficientRing):
    order: int
    mode = "jet"

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("jet order must be >= 0")

    @property
    def slot_count(self) -> int:
        return self.order + 1

    def zero(self):
        return DeltaJet((0,) * (self.order + 1))

    def one(self):
        return DeltaJet.constant(1, self.order)

    def from_int(self, value):
        return DeltaJet.constant(value, self.order)

    def q_power(self, n):
        return jet_q_power(n, self.order)

    def times_q_power(self, value, n):
        if n == 0:
            return value
        return value.times_q_power(n)

    def square_q(self, value):
        return value.substitute_square()

    def is_invertible(self, value):
        return value.coefficients[0] != 0

    def invert(self, value):
        return value.inverse()

    def collapse(self, poly):
        return poly.to_jet(self.order)

    def is_zero(self, value):
        return value.is_zero

    def to_slots(self, value):
        return value.coefficients

    def from_slots(self, slots):
        return DeltaJet(tuple(slots))

    def buffer(self, length):
        return SlotBuffer(self, length)

    def __str__(self):
        return f"jet{self.order}"


@dataclass(frozen=True)
class ScalarRing(CoefficientRing):
    """Coefficients evaluated at q = 1 (exact rationals)."""

    mode = "scalar"
    slot_count = 1

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, value):
        return value

    def q_power(self, n):
        return 1

    def times_q_power(self, value, n):
        return value

    def square_q(self, value):
        return value

    def is_invertible(self, value):
        return value != 0

    def invert(self, value):
        if value == 0:
            raise SeriesError("series not invertible")
        return _normalize(Fraction(1) / value)

    def collapse(self, poly):
        return poly.at_one()

    def is_zero(self, value):
        return value == 0

    def to_slots(self, value):
        return (value,)

    def from_slots(self, slots):
        return _normalize(slots[0]) if isinstance(slots[0], Fraction) else slots[0]

    def buffer(self, length):
        return SlotBuffer(self, length)

    def __str__(self):
        return "scalar"

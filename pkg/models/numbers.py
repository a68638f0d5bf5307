from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Union

import mpmath as mp

BigRational = Fraction
RationalLike = Union[int, Fraction]

# mpmath switches to exponent notation outside this window; keep every
# decimal in fixed notation so CSV columns stay comparable.
_FIXED_WINDOW = 10**6
# 15 decimal guard digits, i.e. more than 32 guard bits.
_GUARD_DIGITS = 15


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: RationalLike) -> str:
    return str(as_rational(value))


@dataclass(frozen=True)
class RadicalConstant:
    """
    Exact number r * 2^(a/2) * pi^(b/2) with r rational.

    The sqrt(2) exponent is kept in {0, 1} with its integer part folded into r.
    The pi exponent stays an unrestricted integer because integer powers of pi
    cannot be folded into a rational.
    """

    r: Fraction
    a: int = 0
    b: int = 0

    def __post_init__(self):
        r = as_rational(self.r)
        a, b = int(self.a), int(self.b)
        if r == 0:
            a, b = 0, 0
        else:
            twos, a = divmod(a, 2)
            r = r * 2**twos if twos >= 0 else r / 2**(-twos)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def rational(cls, value: RationalLike) -> "RadicalConstant":
        return cls(as_rational(value))

    @classmethod
    def sqrt2_power(cls, exponent: int) -> "RadicalConstant":
        """2^(exponent/2)."""
        return cls(Fraction(1), exponent, 0)

    @property
    def is_zero(self) -> bool:
        return self.r == 0

    @property
    def radical_type(self) -> tuple[int, int]:
        return self.a, self.b

    @property
    def is_rational(self) -> bool:
        return self.a == 0 and self.b == 0

    def __mul__(self, other):
        if isinstance(other, RadicalConstant):
            return rad_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return RadicalConstant(self.r * other, self.a, self.b)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalConstant.rational(other)
        if not isinstance(other, RadicalConstant):
            return NotImplemented
        return rad_div(self, other)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return rad_div(RadicalConstant.rational(other), self)
        return NotImplemented

    def __neg__(self):
        return RadicalConstant(-self.r, self.a, self.b)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalConstant.rational(other)
        if not isinstance(other, RadicalConstant):
            return NotImplemented
        return rad_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalConstant.rational(other)
        if not isinstance(other, RadicalConstant):
            return NotImplemented
        return rad_add(self, -other)

    def __pow__(self, exponent: int):
        return rad_pow(self, exponent)

    def to_mpf(self):
        """Value at the current mpmath working precision."""
        value = mp.mpf(self.r.numerator) / self.r.denominator
        if self.a:
            value *= mp.sqrt(2) ** self.a
        if self.b:
            value *= mp.sqrt(mp.pi) ** self.b
        return value

    def render(self) -> str:
        if self.is_zero:
            return "0"
        text = format_rational(self.r)
        if self.a == 1:
            text += "·√2"
        if self.b == 1:
            text += "·√π"
        elif self.b == 2:
            text += "·π"
        elif self.b % 2 == 0 and self.b:
            text += f"·π^{self.b // 2}"
        elif self.b:
            text += f"·π^({self.b}/2)"
        return text

    def __str__(self):
        return self.render()


def rad_mul(x: RadicalConstant, y: RadicalConstant) -> RadicalConstant:
    return RadicalConstant(x.r * y.r, x.a + y.a, x.b + y.b)


def rad_div(x: RadicalConstant, y: RadicalConstant) -> RadicalConstant:
    if y.is_zero:
        raise ZeroDivisionError("division by a zero radical constant")
    return RadicalConstant(x.r / y.r, x.a - y.a, x.b - y.b)


def rad_pow(x: RadicalConstant, exponent: int) -> RadicalConstant:
    if exponent < 0:
        return rad_div(RadicalConstant.rational(1), rad_pow(x, -exponent))
    return RadicalConstant(x.r**exponent, x.a * exponent, x.b * exponent)


def rad_add(x: RadicalConstant, y: RadicalConstant) -> RadicalConstant:
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    if x.radical_type != y.radical_type:
        raise ValueError(
            f"cannot add radicals of different type {x.radical_type} and {y.radical_type}")
    return RadicalConstant(x.r + y.r, x.a, x.b)


def rad_approx(x: RadicalConstant, digits: int) -> str:
    """Decimal expansion of `x` correctly rounded to `digits` significant digits."""
    return approx(x.to_mpf, digits)


def approx(evaluate, digits: int) -> str:
    """Fixed-notation decimal of evaluate() with exactly `digits` significant digits, trailing zeros kept."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with mp.workdps(digits + _GUARD_DIGITS):
        return mp.nstr(evaluate(), digits, strip_zeros=False,
                       min_fixed=-_FIXED_WINDOW, max_fixed=_FIXED_WINDOW)


def gamma_half_integer(twice_arg: int) -> RadicalConstant:
    """
    Gamma(twice_arg / 2) for odd twice_arg.

    Gamma(n + 1/2) = (2n)! / (4^n n!) * sqrt(pi) for n >= 0 and
    Gamma(1/2 - n) = (-4)^n n! / (2n)! * sqrt(pi) for n >= 1.
    """
    if twice_arg % 2 == 0:
        raise ValueError("gamma_half_integer needs an odd argument (half-integer point)")
    n = (twice_arg - 1) // 2
    if n >= 0:
        r = Fraction(factorial(2 * n), 4**n * factorial(n))
    else:
        n = -n
        r = Fraction((-4) ** n * factorial(n), factorial(2 * n))
    return RadicalConstant(r, 0, 1)

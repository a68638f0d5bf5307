from fractions import Fraction
from logging import Logger
from math import factorial

import mpmath as mp

from models.errors import UsageError
from models.limit_law import LawKind, RecursionParams, limit_law_for
from models.numbers import RadicalConstant, gamma_half_integer
from models.polygon import SymmetryClass

PHI_0 = Fraction(-1)
OMEGA_0 = Fraction(1)
F_0 = Fraction(-1, 2)
G_0 = RadicalConstant.sqrt2_power(-1)


def gamma_at(twice_arg: int) -> RadicalConstant:
    """Gamma(twice_arg / 2) at a positive integer or any half-integer."""
    if twice_arg % 2:
        return gamma_half_integer(twice_arg)
    if twice_arg <= 0:
        raise ValueError(f"Gamma has a pole at {twice_arg // 2}")
    return RadicalConstant.rational(factorial(twice_arg // 2 - 1))


class LimitLaws:
    """
    Memoized moment sequences of the area limit laws.

    phi and omega drive the Airy and meander moments; f and g are the
    dominant-balance coefficients, which must agree with phi and omega up
    to explicit powers of two.
    """

    def __init__(self, max_order: int, logger: Logger):
        self.max_order = max_order
        self.logger = logger
        self._phi = [PHI_0]
        self._omega = [OMEGA_0]
        self._f = [F_0]
        self._g = [G_0]

    def _check_order(self, k: int) -> None:
        if k < 0:
            raise UsageError(f"moment order must be >= 0, got {k}")
        if k > self.max_order:
            raise UsageError(f"moment order {k} exceeds the configured maximum {self.max_order}")

    def phi(self, k: int) -> Fraction:
        self._check_order(k)
        phi = self._phi
        while len(phi) <= k:
            n = len(phi)
            gamma = RecursionParams(n - 1).gamma
            convolution = sum((phi[l] * phi[n - l] for l in range(1, n)), Fraction(0))
            phi.append(-(gamma * phi[n - 1] + convolution / 2) / PHI_0)
        return phi[k]

    def omega(self, k: int) -> Fraction:
        self._check_order(k)
        self.phi(k)
        omega = self._omega
        while len(omega) <= k:
            n = len(omega)
            alpha = RecursionParams(n - 1).alpha
            convolution = sum((self._phi[l] * omega[n - l] / 2**l for l in range(1, n + 1)), Fraction(0))
            omega.append(-(alpha * omega[n - 1] + convolution) / PHI_0)
        return omega[k]

    def f_coeff(self, k: int) -> Fraction:
        self._check_order(k)
        f = self._f
        while len(f) <= k:
            n = len(f)
            gamma = RecursionParams(n - 1).gamma
            convolution = sum((f[l] * f[n - l] for l in range(1, n)), Fraction(0))
            f.append(-(gamma * f[n - 1] + 4 * convolution) / (8 * F_0))
        return f[k]

    def g_coeff(self, k: int) -> RadicalConstant:
        self._check_order(k)
        self.f_coeff(k)
        g = self._g
        while len(g) <= k:
            n = len(g)
            alpha = RecursionParams(n - 1).alpha
            total = g[n - 1] * alpha
            for l in range(1, n + 1):
                total = total + RadicalConstant.sqrt2_power(5 - l) * self._f[l] * g[n - l]
            value = total / RadicalConstant.sqrt2_power(3)
            if value.b != 0:
                raise ArithmeticError("g coefficients live in Q(sqrt 2)")
            g.append(value)
        return g[k]

    def phi_residual(self, k: int) -> Fraction:
        """gamma_(k-1) phi_(k-1) + 1/2 sum_(l=0..k) phi_l phi_(k-l)."""
        self.phi(k)
        return (RecursionParams(k - 1).gamma * self._phi[k - 1]
                + sum(self._phi[l] * self._phi[k - l] for l in range(k + 1)) / 2)

    def omega_residual(self, k: int) -> Fraction:
        self.omega(k)
        return (RecursionParams(k - 1).alpha * self._omega[k - 1]
                + sum(self._phi[l] * self._omega[k - l] / 2**l for l in range(k + 1)))

    def f_residual(self, k: int) -> Fraction:
        self.f_coeff(k)
        return (RecursionParams(k - 1).gamma * self._f[k - 1]
                + 4 * sum(self._f[l] * self._f[k - l] for l in range(k + 1)))

    def g_residual(self, k: int) -> RadicalConstant:
        self.g_coeff(k)
        total = self._g[k - 1] * RecursionParams(k - 1).alpha
        for l in range(k + 1):
            total = total + RadicalConstant.sqrt2_power(5 - l) * self._f[l] * self._g[k - l]
        return total

    def law_moment(self, law: LawKind, k: int) -> RadicalConstant:
        self._check_order(k)
        if law is LawKind.AIRY:
            # k! Gamma(gamma_0) / Gamma(gamma_k) * phi_k / phi_0
            ratio = gamma_at(-1) / gamma_at(3 * k - 1) if k else RadicalConstant.rational(1)
            return ratio * (factorial(k) * self.phi(k) / PHI_0)
        if law is LawKind.MEANDER:
            ratio = gamma_at(1) / gamma_at(3 * k + 1)
            return ratio * RadicalConstant.sqrt2_power(-k) * (factorial(k) * self.omega(k) / OMEGA_0)
        if law is LawKind.BETA:
            return RadicalConstant.rational(Fraction(4**k * factorial(k) ** 2, factorial(2 * k + 1)))
        if law is LawKind.DIRAC:
            return RadicalConstant.rational(1)
        raise UsageError(f"unknown law {law}")

    def class_limit_moment(self, symmetry_class: SymmetryClass, k: int) -> RadicalConstant:
        binding = limit_law_for(symmetry_class)
        return self.law_moment(binding.law, k) * binding.law_scale**k

    def law_sequence_rows(self, k_max: int) -> list[tuple[int, Fraction, Fraction, Fraction, RadicalConstant]]:
        log_dict = {"k_max": k_max}
        self.logger.info(f"Computing limit law sequences {log_dict}")
        return [(k, self.phi(k), self.omega(k), self.f_coeff(k), self.g_coeff(k))
                for k in range(k_max + 1)]

    def carleman_proxy(self, k_max: int, digits: int = 30) -> list[mp.mpf]:
        """E[Y^(2k)]^(1/(2k)) / k for k = 1..k_max."""
        self._check_order(2 * k_max)
        values = []
        with mp.workdps(digits):
            for k in range(1, k_max + 1):
                moment = self.law_moment(LawKind.AIRY, 2 * k).to_mpf()
                values.append(mp.root(moment, 2 * k) / k)
        return values

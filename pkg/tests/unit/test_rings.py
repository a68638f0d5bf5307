import random
from fractions import Fraction

import numpy as np
import pytest

from models.errors import SeriesError
from models.rings import (DeltaJet, JetRing, LaurentQPoly, LaurentRing, ScalarRing, generalized_binomial,
                          jet_q_power)


def _random_poly(rng: random.Random) -> LaurentQPoly:
    return LaurentQPoly({rng.randint(-3, 5): rng.randint(-4, 4) for _ in range(rng.randint(0, 4))})


def _random_jet(rng: random.Random, order: int) -> DeltaJet:
    return DeltaJet(tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(order + 1)))


def test_generalized_binomial_matches_negative_power_expansion():
    # (1 + d)^-2 = 1 - 2d + 3d^2 - 4d^3 + ...
    assert [generalized_binomial(-2, j) for j in range(4)] == [1, -2, 3, -4]
    assert generalized_binomial(3, 5) == 0
    assert generalized_binomial(4, -1) == 0


def test_jet_q_power():
    assert jet_q_power(2, 2).coefficients == (1, 2, 1)
    assert jet_q_power(-1, 2).coefficients == (1, -1, 1)
    assert jet_q_power(5, 1).coefficients == (1, 5)
    assert jet_q_power(0, 3) == DeltaJet.constant(1, 3)


def test_laurent_product_and_zero_terms():
    # Arrange
    q = LaurentQPoly.monomial(1)
    q_inv = LaurentQPoly.monomial(-1)

    # Act
    product = (q + q_inv) * (q - q_inv)

    # Assert
    assert product == LaurentQPoly({2: 1, -2: -1})
    assert LaurentQPoly({1: 0}).is_zero
    assert (q - q).is_zero
    assert product.min_degree == -2 and product.max_degree == 2


def test_laurent_to_jet_and_at_one():
    poly = LaurentQPoly({3: 1, 1: 2})

    assert poly.to_jet(2).coefficients == (3, 5, 3)
    assert poly.at_one() == 3
    assert poly.substitute_square() == LaurentQPoly({6: 1, 2: 2})


def test_jet_product_truncates():
    one_plus_delta = DeltaJet((1, 1))

    assert (one_plus_delta * one_plus_delta).coefficients == (1, 2)
    assert DeltaJet((1, 1, 0)).substitute_square().coefficients == (1, 2, 1)


def test_jet_substitute_square_matches_exact_ring():
    rng = random.Random(7)
    for _ in range(20):
        poly = _random_poly(rng)
        assert poly.to_jet(4).substitute_square() == poly.substitute_square().to_jet(4)


def test_jet_inverse():
    assert jet_q_power(3, 3).inverse() == jet_q_power(-3, 3)
    assert DeltaJet((Fraction(4, 2), 0)).coefficients == (2, 0)
    with pytest.raises(SeriesError, match="series not invertible"):
        DeltaJet((0, 1)).inverse()


def test_jet_orders_must_match():
    with pytest.raises(ValueError):
        DeltaJet((1, 1)) + DeltaJet((1, 1, 1))


def test_laurent_ring_inverts_only_units():
    ring = LaurentRing()

    assert ring.invert(LaurentQPoly.monomial(3, -1)) == LaurentQPoly.monomial(-3, -1)
    with pytest.raises(SeriesError):
        ring.invert(LaurentQPoly({0: 1, 1: 1}))


def test_scalar_ring_invert():
    ring = ScalarRing()

    assert ring.invert(4) == Fraction(1, 4)
    assert ring.invert(Fraction(1, 3)) == 3
    with pytest.raises(SeriesError):
        ring.invert(0)


@pytest.mark.parametrize("ring", [LaurentRing(), JetRing(3), ScalarRing()])
def test_ring_axioms_on_collapsed_samples(ring):
    # Arrange
    rng = random.Random(11)
    samples = [ring.collapse(_random_poly(rng)) for _ in range(30)]

    # Act & Assert
    for a, b, c in zip(samples, samples[1:], samples[2:]):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert ring.is_zero(a - a)
        assert a * ring.one() == a


def test_collapse_is_a_ring_homomorphism():
    rng = random.Random(3)
    jet = JetRing(2)
    for _ in range(30):
        a, b = _random_poly(rng), _random_poly(rng)
        assert jet.collapse(a * b) == jet.collapse(a) * jet.collapse(b)
        assert ScalarRing().collapse(a + b) == ScalarRing().collapse(a) + ScalarRing().collapse(b)


def test_jet_ring_rational_arithmetic():
    rng = random.Random(5)
    ring = JetRing(2)
    for _ in range(20):
        a = _random_jet(rng, 2)
        if ring.is_invertible(a):
            assert a * ring.invert(a) == ring.one()


@pytest.mark.parametrize("ring", [LaurentRing(), JetRing(2), ScalarRing()])
def test_buffer_convolution_matches_direct_sum(ring):
    # Arrange
    rng = random.Random(17)
    left_values = [ring.collapse(_random_poly(rng)) for _ in range(8)]
    right_values = [ring.collapse(_random_poly(rng)) for _ in range(8)]
    left, right = ring.buffer(8), ring.buffer(8)
    for i, (a, b) in enumerate(zip(left_values, right_values)):
        left.store(i, a)
        right.store(i, b)
    indices = np.arange(1, 6, dtype=np.int64)

    # Act
    total = left.convolve_at(right, 7, indices)

    # Assert
    expected = ring.zero()
    for i in range(1, 6):
        expected = expected + left_values[i] * right_values[7 - i]
    assert total == expected
    assert left.convolve_at(right, 7, np.array([], dtype=np.int64)) == ring.zero()

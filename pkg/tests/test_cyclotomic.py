"""Exact cyclotomic arithmetic: canonical forms, conjugation, embedding."""

import math
import random
from fractions import Fraction

import mpmath
import pytest

from lenswrt.cyclotomic import (
    CyclotomicNumber,
    cyclotomic_polynomial,
    embed_complex,
    root_of_unity,
)
from lenswrt.gauss import GaussSumSpec, gauss_sum


class TestCyclotomicPolynomials:
    def test_small_orders(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_degree_is_euler_phi(self):
        def phi(n):
            return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)

        for n in range(1, 40):
            assert len(cyclotomic_polynomial(n)) - 1 == phi(n)


class TestRootOfUnity:
    def test_basics(self):
        assert root_of_unity(4, 2) == -1
        for n in (1, 2, 5, 12):
            assert root_of_unity(n, 0) == 1
        assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1

    def test_exponent_mod_order(self):
        assert root_of_unity(5, 7) == root_of_unity(5, 2)
        assert root_of_unity(5, -1) == root_of_unity(5, 4)


class TestArithmetic:
    def test_inverse_roots_multiply_to_one(self):
        assert root_of_unity(5, 1) * root_of_unity(5, 4) == 1

    def test_geometric_sum_vanishes(self):
        total = sum((root_of_unity(7, j) for j in range(7)), CyclotomicNumber.zero())
        assert total.is_zero()

    def test_expansion_by_hand(self):
        # (1 + xi_8)(1 + xi_8^-1) = 2 + xi_8 + xi_8^7
        x = 1 + root_of_unity(8, 1)
        y = 1 + root_of_unity(8, -1)
        assert x * y == 2 + root_of_unity(8, 1) + root_of_unity(8, 7)

    def test_ring_axioms_random(self):
        rng = random.Random(42)

        def rand_elem(order):
            vec = [rng.randint(-3, 3) for _ in range(order)]
            return CyclotomicNumber(order, vec)

        for _ in range(40):
            order = rng.choice([2, 3, 4, 6, 8, 9, 12])
            a, b, c = rand_elem(order), rand_elem(order), rand_elem(order)
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)

    def test_mixed_order_lift(self):
        # xi_6 equals -xi_3^2 and the canonical forms agree at the lcm order
        x = root_of_unity(6, 1)
        y = -root_of_unity(3, 2)
        assert x == y
        assert x.coeffs == y.lift(6).coeffs

    def test_division(self):
        rng = random.Random(7)
        for _ in range(20):
            order = rng.choice([3, 5, 7, 8, 9])
            vec = [rng.randint(-2, 2) for _ in range(order)]
            x = CyclotomicNumber(order, vec)
            if x.is_zero():
                continue
            assert x * x.inverse() == 1
        with pytest.raises(ZeroDivisionError):
            CyclotomicNumber.zero(5).inverse()


class TestConjugation:
    def test_roots(self):
        for n in (3, 5, 8, 12):
            for e in range(n):
                assert root_of_unity(n, e).conjugate() == root_of_unity(n, n - e)

    def test_rational_fixed(self):
        x = CyclotomicNumber.from_rational(Fraction(3, 7), 5)
        assert x.conjugate() == x

    def test_gauss_sum_conjugate(self):
        lhs = gauss_sum(GaussSumSpec(5, 1, 1)).conjugate()
        rhs = gauss_sum(GaussSumSpec(5, -1, -1))
        assert lhs == rhs

    def test_involution_and_ring_map(self):
        rng = random.Random(3)
        for _ in range(20):
            order = rng.choice([5, 8, 9, 12])
            a = CyclotomicNumber(order, [rng.randint(-3, 3) for _ in range(order)])
            b = CyclotomicNumber(order, [rng.randint(-3, 3) for _ in range(order)])
            assert a.conjugate().conjugate() == a
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()


class TestEmbedding:
    def test_simple_values(self):
        assert abs(embed_complex(CyclotomicNumber.from_rational(-1)) - (-1)) < 1e-15
        assert abs(embed_complex(root_of_unity(4, 1)) - mpmath.mpc(0, 1)) < 1e-15

    def test_quadratic_gauss_sum_magnitude(self):
        value = embed_complex(gauss_sum(GaussSumSpec(5, 1, 0)), 64)
        assert abs(abs(value) ** 2 - 5) < 1e-12

    def test_ring_homomorphism_up_to_tolerance(self):
        rng = random.Random(11)
        for _ in range(12):
            order = rng.choice([12, 30, 90, 180, 360])
            a = CyclotomicNumber(order, [rng.randint(-2, 2) for _ in range(order)])
            b = CyclotomicNumber(order, [rng.randint(-2, 2) for _ in range(order)])
            lhs = embed_complex(a * b, 53)
            rhs = embed_complex(a, 53) * embed_complex(b, 53)
            assert abs(lhs - rhs) < 1e-10

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            embed_complex(root_of_unity(3, 1), 10)


class TestValueSemantics:
    def test_equal_values_equal_hashes(self):
        pairs = [
            (root_of_unity(6, 1), -root_of_unity(3, 2)),
            (CyclotomicNumber.from_rational(2, 5), CyclotomicNumber.from_rational(2, 7)),
            (root_of_unity(4, 2), CyclotomicNumber.from_rational(-1)),
        ]
        for x, y in pairs:
            assert x == y
            assert hash(x) == hash(y)

    def test_rational_detection(self):
        x = root_of_unity(5, 1) + root_of_unity(5, 2) + root_of_unity(5, 3) + root_of_unity(5, 4)
        assert x.is_rational() and x.rational_value() == -1
        assert not root_of_unity(5, 1).is_rational()

    def test_galois_action(self):
        for n, a in ((7, 2), (9, 2), (12, 5)):
            for e in range(n):
                assert root_of_unity(n, e).galois(a) == root_of_unity(n, a * e)
        x = root_of_unity(9, 1) + 3 * root_of_unity(9, 4)
        assert x.galois(2).galois(5) == x.galois(10)  # composition multiplies exponents
        with pytest.raises(ValueError):
            root_of_unity(9, 1).galois(3)

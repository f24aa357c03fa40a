from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ppring.cyclo import (Cyclotomic, ConductorMismatch, cyclotomic_polynomial,
                          euler_phi, zeta_power)


class TestCyclotomicPolynomial:
    def test_n1(self):
        assert cyclotomic_polynomial(1) == (-1, 1)

    def test_n6(self):
        assert cyclotomic_polynomial(6) == (1, -1, 1)

    def test_n4(self):
        assert cyclotomic_polynomial(4) == (1, 0, 1)

    def test_against_sympy(self):
        sympy = pytest.importorskip("sympy")
        x = sympy.symbols("x")
        for n in range(1, 31):
            ours = cyclotomic_polynomial(n)
            theirs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
            assert list(ours) == [int(c) for c in theirs]
            assert len(ours) - 1 == euler_phi(n)


class TestZetaPower:
    def test_zeroth_power(self):
        assert zeta_power(5, 0) == Cyclotomic.one(5)

    def test_phi3_relation(self):
        assert zeta_power(3, 1) + zeta_power(3, 2) == Cyclotomic.from_rational(3, -1)

    def test_zeta6_cubed(self):
        assert zeta_power(6, 3) == Cyclotomic.from_rational(6, -1)

    def test_full_power_is_one(self):
        for n in (1, 2, 3, 4, 6, 8, 12):
            assert zeta_power(n, n) == Cyclotomic.one(n)

    def test_phi_n_vanishes_at_zeta(self):
        for n in (2, 3, 4, 6, 12):
            phi = cyclotomic_polynomial(n)
            total = Cyclotomic.zero(n)
            for k, c in enumerate(phi):
                total = total + zeta_power(n, k) * c
            assert total.is_zero()

    def test_powers_compose(self):
        for n in (6, 12):
            for a in range(n):
                for b in range(n):
                    assert zeta_power(n, a) * zeta_power(n, b) == zeta_power(n, a + b)

    def test_embedding_of_smaller_order_roots(self):
        # the r-th root of unity sits at exponent n/r; its r-th power is 1
        n = 12
        for r in (1, 2, 3, 4, 6, 12):
            z = zeta_power(n, n // r)
            acc = Cyclotomic.one(n)
            for _ in range(r):
                acc = acc * z
            assert acc.is_one()


class TestArithmetic:
    def test_mul_identity(self):
        a = Cyclotomic(6, [1, 2])
        assert a * Cyclotomic.one(6) == a

    def test_zeta3_times_zeta3_squared(self):
        assert zeta_power(3, 1) * zeta_power(3, 2) == Cyclotomic.one(3)

    def test_one_plus_zeta3_product(self):
        a = Cyclotomic.one(3) + zeta_power(3, 1)
        b = Cyclotomic.one(3) + zeta_power(3, 2)
        assert a * b == Cyclotomic.one(3)

    def test_conductor_mismatch(self):
        with pytest.raises(ConductorMismatch):
            zeta_power(3, 1) + zeta_power(4, 1)

    def test_rational_coercion(self):
        a = zeta_power(4, 1)
        assert a * 2 == a + a
        assert a * Fraction(1, 2) + a * Fraction(1, 2) == a

    def test_as_rational(self):
        assert Cyclotomic.from_rational(6, Fraction(3, 7)).as_rational() == Fraction(3, 7)
        assert zeta_power(4, 1).as_rational() is None

    def test_canonical_length(self):
        for n in (1, 4, 6, 9):
            assert len(Cyclotomic.one(n).coeffs) == euler_phi(n)

    def test_json_roundtrip(self):
        a = zeta_power(6, 1) * Fraction(2, 3) - 5
        assert Cyclotomic.from_json(a.to_json()) == a
        assert a.to_json() == {"conductor": 6, "coeffs": ["-5", "2/3"]}


coeff = st.integers(min_value=-9, max_value=9).map(Fraction)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=12),
       st.lists(coeff, min_size=1, max_size=4),
       st.lists(coeff, min_size=1, max_size=4),
       st.lists(coeff, min_size=1, max_size=4))
def test_ring_axioms(n, ca, cb, cc):
    a, b, c = Cyclotomic(n, ca), Cyclotomic(n, cb), Cyclotomic(n, cc)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c

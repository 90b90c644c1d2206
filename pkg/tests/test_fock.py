from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sl2crit import fock
from sl2crit.fock import ONE, FockElement, e_coeff, h_act, monomial


def basis(*parts):
    return FockElement.basis(monomial(*parts))


class TestHeisenbergAction:
    def test_annihilation_on_single_mode(self):
        # H(3) on H(-3).1 gives -12.
        assert h_act(3, basis(3)) == ONE.scale(-12)

    def test_annihilates_vacuum(self):
        assert h_act(5, ONE).is_zero()

    def test_second_derivative_matches_leibniz_oracle(self):
        # [H(1), H(-1)] = 2*1*c = -4 applied twice via Leibniz on
        # H(-1)^2 . 1: H(1) H(-1)^2 = -4*2 H(-1).
        assert h_act(1, basis(1, 1)) == basis(1).scale(-8)

    def test_creation(self):
        assert h_act(-2, basis(3)) == basis(3, 2)

    def test_rejects_zero_mode(self):
        with pytest.raises(ValueError):
            h_act(0, ONE)

    def test_commutator_on_degree_window(self):
        # [H(m), H(n)] = -4m delta_{m+n,0} on all monomials of degree <= 4
        # for |m|, |n| <= 4.
        monos = [m for d in range(5) for m in fock._partitions(d)]
        for mono in monos:
            v = FockElement.basis(mono)
            for m in range(-4, 5):
                if m == 0:
                    continue
                for n in range(-4, 5):
                    if n == 0:
                        continue
                    comm = h_act(m, h_act(n, v)) - h_act(n, h_act(m, v))
                    want = v.scale(-4 * m) if m + n == 0 else FockElement.zero()
                    assert comm == want, (mono, m, n)


class TestExponentialCoefficients:
    def test_constant_term_is_identity(self):
        v = basis(2, 1)
        for sup in "+-":
            for sub in "+-":
                assert e_coeff(sup, sub, 0, v) == v

    def test_first_creation_coefficient(self):
        assert e_coeff("+", "+", 1, ONE) == basis(1).scale(Fraction(-1, 2))
        assert e_coeff("-", "+", 1, ONE) == basis(1).scale(Fraction(1, 2))

    def test_first_annihilation_coefficient(self):
        # z^{-1} term of the '+' annihilation exponential is H(1)/2;
        # H(1) H(-1).1 = -4.
        assert e_coeff("+", "-", -1, basis(1)) == ONE.scale(-2)

    def test_wrong_sign_coefficients_rejected(self):
        with pytest.raises(ValueError):
            e_coeff("+", "+", -1, ONE)
        with pytest.raises(ValueError):
            e_coeff("+", "-", 1, ONE)

    def test_creation_degree_two_against_exp_expansion(self):
        # z^2 coefficient of exp(-(H(-1) z + H(-2)/4 z^2 + ...)):
        # H(-1)^2/8 ... with c_1 = -1/2, c_2 = -1/4:
        # c_2 H(-2) + c_1^2/2 H(-1)^2.
        got = e_coeff("+", "+", 2, ONE)
        want = (basis(2).scale(Fraction(-1, 4))
                + basis(1, 1).scale(Fraction(1, 8)))
        assert got == want

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=4), max_size=3),
           st.integers(min_value=0, max_value=4))
    def test_unit_product_property(self, parts, j):
        # sum_k E^+_+[k] E^-_+[j-k] = delta_{j,0} on any monomial.
        v = basis(*parts)
        total = sum((e_coeff("+", "+", k, e_coeff("-", "+", j - k, v))
                     for k in range(j + 1)), FockElement.zero())
        assert total == (v if j == 0 else FockElement.zero())

    def test_annihilation_vanishes_beyond_degree(self):
        assert e_coeff("+", "-", -3, basis(2)).is_zero()


def test_monomial_canonical_form():
    assert monomial(1, 3, 1) == (3, 1, 1)
    assert fock.serialize_monomial(monomial(1, 3, 1)) == [3, 1, 1]
    assert fock.parse_monomial([3, 1, 1]) == (3, 1, 1)
    with pytest.raises(ValueError):
        monomial(0)

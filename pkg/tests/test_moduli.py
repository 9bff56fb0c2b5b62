from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from distp3.distribution import tangent_hilbert_polynomial
from distp3.hilbert import HilbertPolynomial
from distp3.moduli import (
    DIM_R_MINUS1_3_5,
    ChernCharacterData,
    chi_line_bundle,
    chi_tp3,
    forgetful_dim,
    h0_tp3,
    h_line_bundle,
    hrr_chi,
    moduli_dim_335,
    slope,
)


def test_bott_examples():
    assert h_line_bundle(0, 2) == 10
    assert h_line_bundle(3, -4) == 1
    assert all(h_line_bundle(i, k) == 0 for i in (1, 2) for k in range(-10, 11))
    with pytest.raises(ValueError):
        h_line_bundle(4, 0)


@pytest.mark.parametrize("k", range(-10, 11))
def test_euler_characteristic_of_line_bundles(k):
    alt = sum((-1) ** i * h_line_bundle(i, k) for i in range(4))
    assert alt == chi_line_bundle(k) == hrr_chi(1, k, 0, 0, 0)


def test_line_bundle_riemann_roch_polynomial():
    for k in range(0, 6):
        assert hrr_chi(1, k, 0, 0) == HilbertPolynomial.binomial(k + 3, 3)
        assert hrr_chi(1, k, 0, 0, 0) == math.comb(k + 3, 3)


def test_tangent_bundle_sections():
    assert [h0_tp3(k) for k in (-1, 0, 1)] == [4, 15, 36]
    assert h0_tp3(-2) == 0
    # higher cohomology of TP^3(k) vanishes for k >= -1, so h0 = chi there
    assert all(h0_tp3(k) == chi_tp3()(k) for k in range(-1, 8))


def test_chi_tp3():
    assert chi_tp3()(0) == 15 and chi_tp3()(-1) == 4
    assert chi_tp3() == hrr_chi(3, 4, 6, 4)


def test_chern_character():
    ch = ChernCharacterData(2, -1, 3, 5)
    assert (ch.ch1, ch.ch2, ch.ch3) == (-1, Fraction(-5, 2), Fraction(23, 6))


def test_hrr_example():
    assert hrr_chi(2, -1, 3, 5, 0) == -1


@given(st.integers(0, 5), st.integers(-2, 11), st.integers(0, 51))
def test_quotient_has_rank_one_shape(d, c, l):
    diff = chi_tp3() - tangent_hilbert_polynomial(d, c, l)
    assert diff.degree == 3 and diff.leading_coefficient == Fraction(1, 6)


@given(st.integers(1, 4), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_hrr_is_additive_under_twist(r, c1, c2, c3, a):
    # chi(E(t + a)) is chi(E(a))(t) where E(a) has the twisted Chern classes
    e1 = c1 + r * a
    e2 = c2 + (r - 1) * c1 * a + math.comb(r, 2) * a * a
    e3 = c3 + (r - 2) * c2 * a + math.comb(r - 1, 2) * c1 * a * a + math.comb(r, 3) * a**3
    assert hrr_chi(r, c1, c2, c3).shift(a) == hrr_chi(r, e1, e2, e3)


def test_slope():
    assert slope(-1, 2) == Fraction(-1, 2)
    assert slope(0, 1) == 0
    assert slope(4, 3) == Fraction(4, 3)
    assert slope(-1, 2) < slope(4, 3)
    with pytest.raises(ValueError):
        slope(1, 0)


def test_forgetful_dim():
    assert forgetful_dim(19, 24) == 42
    assert forgetful_dim(0, 1) == 0
    assert 6 * h0_tp3(-1) == 24
    with pytest.raises(ValueError):
        forgetful_dim(-1, 3)


def test_moduli_derivation():
    der = moduli_dim_335()
    assert der.value == 42
    labels = [s.label for s in der.steps]
    values = [s.value for s in der.steps]
    assert values == [DIM_R_MINUS1_3_5, 4, 24, 42]
    assert der.steps[0].source.startswith("axiom") and "Chang" in der.steps[0].source
    assert all(s.source == "computed" for s in der.steps[1:])
    assert str(der).splitlines()[-1].startswith("dim D^st(3, 3, 5) = 19 + 24 - 1 = 42")
    assert der.to_json()["value"] == 42 and len(labels) == 4

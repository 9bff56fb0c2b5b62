from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from distp3.coeffs import GF
from distp3.groebner import (
    GroebnerLimitError,
    Ideal,
    TopDimError,
    buchberger,
    colon,
    eliminate,
    intersect,
    normal_form,
    s_polynomial,
    satisfies_buchberger_criterion,
    saturate,
    saturate_irrelevant,
    top_dim_part,
)
from distp3.hilbert import hilbert_function, hilbert_polynomial, scheme_invariants
from distp3.poly import DEGREVLEX, LEX, P3, PolyRing
from distp3.selftest import fixture_pencil_linear_quartic, fixture_plucker, twisted_cubic

x0, x1, x2, x3 = P3.gens
SYMS = sympy.symbols("x0:4")


def ideal(*texts, ring=P3):
    return Ideal.parse(list(texts), ring)


def sympy_basis(I: Ideal, order="grevlex", modulus=None):
    polys = [sympy.sympify(str(g).replace("^", "**")) for g in I.generators]
    kw = {"modulus": modulus} if modulus else {}
    G = sympy.groebner(polys, *SYMS, order=order, **kw)
    return {sympy.Poly(g, *SYMS, **kw).monic() for g in G.exprs}


def ours_as_sympy(G, modulus=None):
    kw = {"modulus": modulus} if modulus else {}
    return {
        sympy.Poly(sympy.sympify(str(g).replace("^", "**")), *SYMS, **kw).monic()
        for g in G.elements
    }


@st.composite
def random_ideals(draw, ring=P3):
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    k = draw(st.integers(1, 3))
    gens = [ring.random_form(rng.choice([1, 2, 2, 3]), rng, nterms=rng.randint(1, 3)) for _ in range(k)]
    return Ideal(gens, ring)


def test_buchberger_examples():
    I = ideal("x0 - x1", "x1 - x2")
    G = buchberger(I)
    # x0 - x1 is not reduced against the leading term x1 of x1 - x2
    assert set(G.elements) == {x0 - x2, x1 - x2}
    assert I == ideal("x0 - x2", "x1 - x2")
    tc = twisted_cubic()
    assert len(tc.groebner()) == 3
    assert (x1**3 - x0 * x2 * x1) in tc


def test_leading_ideal_has_input_hilbert_function():
    I = ideal("x0*x1", "x0*x2 - x1^2")
    lead = Ideal([P3.monomial(m) for m in I.groebner().leading_monomials], P3)
    assert all(hilbert_function(I, m) == hilbert_function(lead, m) for m in range(7))


@given(random_ideals())
def test_matches_sympy_over_rationals(I):
    assert ours_as_sympy(I.groebner()) == sympy_basis(I)


@given(random_ideals(ring=P3.with_field(GF(32003))))
def test_matches_sympy_modulo_p(I):
    assert ours_as_sympy(I.groebner(), 32003) == sympy_basis(I, modulus=32003)


@given(random_ideals())
def test_lex_basis_matches_sympy(I):
    assert ours_as_sympy(I.groebner(LEX)) == sympy_basis(I, order="lex")


@given(random_ideals())
def test_reduced_basis_properties(I):
    G = I.groebner()
    assert satisfies_buchberger_criterion(G)
    lms = G.leading_monomials
    for g in G:
        assert g.leading_coefficient() == 1
        for m in g.monomials():
            for lm in lms:
                if lm != g.leading_monomial():
                    assert not all(a <= b for a, b in zip(lm, m))
    assert all(normal_form(g, G).is_zero() for g in I.generators)


@given(random_ideals(), st.integers(0, 10**6))
def test_normal_form_idempotent_and_linear(I, seed):
    G = I.groebner()
    rng = random.Random(seed)
    p = P3.random_form(3, rng, nterms=6)
    q = P3.random_form(3, rng, nterms=6)
    r = normal_form(p, G)
    assert normal_form(r, G) == r
    assert normal_form(p + 3 * q, G) == r + 3 * normal_form(q, G)
    assert (p - r) in I


def test_normal_form_examples():
    G = twisted_cubic().groebner()
    assert normal_form(x1**2, G) == x0 * x2
    assert normal_form(P3.one, G) == P3.one


def test_s_polynomial():
    assert s_polynomial(x0 * x1 - x2**2, x0 * x2) == -(x2**3)


def test_intersect_examples():
    assert intersect(ideal("x0"), ideal("x1")) == ideal("x0*x1")
    tc = twisted_cubic()
    assert intersect(tc, tc) == tc
    K = intersect(ideal("x0", "x1"), ideal("x2", "x3"))
    assert K == ideal("x0*x2", "x0*x3", "x1*x2", "x1*x3")


@given(random_ideals(), random_ideals())
def test_intersection_lies_in_both(I, J):
    K = intersect(I, J)
    assert I.contains(K) and J.contains(K)
    for f in I.generators:
        for g in J.generators:
            assert (f * g) in K


def test_colon_examples():
    assert colon(ideal("x0*x1"), ideal("x0")) == ideal("x1")
    tc = twisted_cubic()
    assert colon(tc, Ideal([P3.one], P3)) == tc
    assert colon(ideal("x0^2", "x0*x1"), ideal("x0")) == ideal("x0", "x1")


@given(random_ideals(), random_ideals())
def test_colon_definition(I, J):
    Q = colon(I, J)
    assert Q.contains(I)
    for q in Q.groebner():
        assert all((q * g) in I for g in J.generators)


def test_saturate_examples():
    I = ideal("x0^2", "x0*x1", "x0*x2", "x0*x3")
    assert saturate(I, Ideal.irrelevant(P3)) == ideal("x0")
    assert saturate_irrelevant(I) == ideal("x0")
    tc = twisted_cubic()
    assert saturate(tc, Ideal([P3.one], P3)) == tc
    assert saturate_irrelevant(tc) == tc


@given(random_ideals())
def test_saturation_is_a_fixpoint(I):
    S = saturate_irrelevant(I)
    assert S.contains(I)
    assert colon(S, Ideal.irrelevant(P3)) == S


def test_plucker_singular_ideal_is_not_saturated():
    form = fixture_plucker(GF(32003))
    raw = Ideal(form.coefficients)
    sat = saturate_irrelevant(raw)
    assert sat.contains(raw) and not raw.contains(sat)
    assert any(hilbert_function(sat, m) < hilbert_function(raw, m) for m in range(8))


def test_pencil_singular_ideal_is_already_saturated():
    # a generic linear form is a nonzerodivisor: HF(I + l) is the first difference of HF(I)
    F = GF(32003)
    R = P3.with_field(F)
    raw = Ideal(fixture_pencil_linear_quartic(F).coefficients)
    ell = R.random_form(1, random.Random(11))
    cut = Ideal(list(raw.generators) + [ell])
    for k in range(1, 10):
        assert hilbert_function(cut, k) == hilbert_function(raw, k) - hilbert_function(raw, k - 1)
    assert saturate_irrelevant(raw) == raw


def test_eliminate_examples():
    R = PolyRing(P3.field, ("t",) + P3.names)
    t, y0, y1 = R.gen("t"), R.gen("x0"), R.gen("x1")
    E = eliminate(Ideal([t * y0 - y1, t], R), ["t"])
    assert E.ring.names == P3.names
    assert Ideal(E.generators, P3) == ideal("x1")
    tc = twisted_cubic()
    assert eliminate(tc, []) == tc


def test_eliminate_projection():
    # projecting the twisted cubic from the point [1:0:0:0] on it gives a conic
    E = eliminate(twisted_cubic(), ["x0"])
    assert E.ring.names == ("x1", "x2", "x3")
    assert [str(g) for g in E.generators] == ["x2^2 - x1*x3"]


def test_top_dim_part_examples():
    tc = twisted_cubic()
    assert top_dim_part(tc) == tc
    I = intersect(ideal("x0", "x1"), ideal("x0^2", "x1", "x2"))
    assert hilbert_polynomial(I).degree == 1
    assert top_dim_part(I) == ideal("x0", "x1")


def test_top_dim_part_of_pencil_quartic():
    F = GF(32003)
    form = fixture_pencil_linear_quartic(F)
    sat = saturate_irrelevant(Ideal(form.coefficients))
    C = top_dim_part(sat, seed=3)
    x0f = P3.with_field(F).gen(0)
    assert x0f in C and C.contains(sat)
    assert str(hilbert_polynomial(C)) == "4*t - 2"
    inv = scheme_invariants(C)
    assert (inv.degree, inv.arithmetic_genus) == (4, 3)


def test_top_dim_part_is_deterministic():
    I = intersect(ideal("x0", "x1"), ideal("x0^2", "x1", "x2"))
    assert top_dim_part(I, seed=5).generators == top_dim_part(I, seed=5).generators


def test_top_dim_part_errors():
    with pytest.raises(ValueError):
        top_dim_part(ideal("x0", "x1", "x2"))
    with pytest.raises(ValueError):
        top_dim_part(ideal("x0"), expected_codim=1)


def test_top_dim_part_gives_up_on_degenerate_input(monkeypatch):
    import distp3.groebner as gb

    monkeypatch.setattr(gb, "_random_element", lambda I, degree, rng: I.ring.zero)
    with pytest.raises(TopDimError):
        top_dim_part(twisted_cubic())


def test_budget_exceeded(monkeypatch):
    I = ideal("x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2")
    with pytest.raises(GroebnerLimitError):
        buchberger(I, DEGREVLEX, max_pairs=1)
    monkeypatch.setenv("DISTP3_MAX_PAIRS", "1")
    with pytest.raises(GroebnerLimitError):
        buchberger(I)


def test_ideal_json_round_trip():
    tc = twisted_cubic()
    assert Ideal.from_json(tc.to_json()) == tc


def test_unit_ideal():
    I = ideal("x0", "x0 + 1")
    assert I.is_unit()

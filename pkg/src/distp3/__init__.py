"""Codimension-one distributions on P^3.

Exact polynomial arithmetic and Gröbner bases, Hilbert polynomials of
projective schemes, singular schemes and Chern classes of twisted 1-forms, the
degree-3 classification table, and Riemann-Roch bookkeeping on P^3.
"""

from __future__ import annotations

from .coeffs import GF, QQ, PrimeField, RationalField, field_from_spec
from .distribution import (
    ChernTriple,
    DistributionReport,
    InvalidFormError,
    NotADistributionError,
    PluckerCoefficients,
    TwistedOneForm,
    analyze,
    chern_from_curve,
    from_plucker,
    h0_tangent,
    hilbert_consistency,
    is_integrable,
    is_stable,
    pencil_form,
    singular_ideal,
    split_form,
    tangent_hilbert_polynomial,
    validate,
)
from .groebner import (
    GroebnerBasis,
    GroebnerLimitError,
    Ideal,
    buchberger,
    colon,
    eliminate,
    intersect,
    normal_form,
    saturate,
    saturate_irrelevant,
    top_dim_part,
)
from .hilbert import (
    HilbertPolynomial,
    ci_invariants,
    hilbert_function,
    hilbert_polynomial,
    scheme_invariants,
)
from .moduli import chi_tp3, h0_tp3, hrr_chi, moduli_dim_335
from .poly import DEGREVLEX, LEX, P3, Polynomial, PolyRing, parse

__version__ = "0.1.0"

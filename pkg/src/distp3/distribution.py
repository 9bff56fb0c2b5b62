"""Twisted 1-forms on P^3 and the codimension-one distributions they define.

A distribution of degree ``d`` is given by ``omega = A0 dx0 + ... + A3 dx3`` with
homogeneous ``A_i`` of degree ``d + 1`` and ``sum x_i A_i = 0``.  The pipeline in
:func:`analyze` goes

    coefficients -> singular ideal -> saturation -> curve + residual points
                 -> (deg C, P_a C) -> Chern classes -> consistency checks.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from dataclasses import dataclass, field
from typing import NamedTuple

from ._linalg import rank
from .coeffs import GF, DEFAULT_PRIME, PrimeField
from .groebner import Ideal, saturate, saturate_irrelevant, top_dim_part
from .hilbert import HilbertPolynomial, hilbert_polynomial, scheme_invariants
from .moduli import chi_tp3, hrr_chi
from .poly import P3, Polynomial, PolyRing, monomials_of_degree, partial_derivative

PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


class InvalidFormError(ValueError):
    def __init__(self, problems):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


class NotADistributionError(ValueError):
    """The singular locus has a component of dimension >= 2."""


class ChernTriple(NamedTuple):
    c1: int
    c2: int
    c3: int


# ---------- forms ----------


@dataclass(frozen=True)
class TwistedOneForm:
    """The 1-form ``sum A_i dx_i``; run :func:`validate` before trusting it."""

    coefficients: tuple[Polynomial, Polynomial, Polynomial, Polynomial]

    def __post_init__(self):
        if len(self.coefficients) != 4:
            raise ValueError("a 1-form on P^3 has exactly four coefficients")
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def ring(self) -> PolyRing:
        return self.coefficients[0].ring

    @property
    def degree(self) -> int:
        """``d`` such that the coefficients have degree ``d + 1``; -1 for the zero form."""
        return max(a.degree for a in self.coefficients) - 1

    def contract(self, v) -> Polynomial:
        """``omega(v) = sum A_i v_i``."""
        total = self.ring.zero
        for a, b in zip(self.coefficients, v):
            total = total + a * b
        return total

    def euler_contraction(self) -> Polynomial:
        return self.contract(self.ring.gens)

    def __mul__(self, h):
        return TwistedOneForm(tuple(a * h for a in self.coefficients))

    __rmul__ = __mul__

    def change_field(self, field) -> TwistedOneForm:
        return TwistedOneForm(tuple(a.change_field(field) for a in self.coefficients))

    def to_json(self) -> dict:
        return {"degree": self.degree, "coefficients": [str(a) for a in self.coefficients]}

    def __str__(self):
        return " + ".join(f"({a}) dx{i}" for i, a in enumerate(self.coefficients) if a) or "0"


@dataclass(frozen=True)
class PluckerCoefficients:
    """Six forms ``B_ij`` (``i < j``) of a common degree ``d``."""

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for key in self.entries:
            if key not in PAIRS:
                raise ValueError(f"bad index pair {key}; use i < j in 0..3")
        degs = {b.degree for b in self.entries.values() if b}
        if len(degs) > 1 or not all(b.is_homogeneous() for b in self.entries.values()):
            raise ValueError("Plucker coefficients must be homogeneous of one common degree")

    @property
    def degree(self) -> int:
        return max((b.degree for b in self.entries.values() if b), default=-1)


def from_plucker(B) -> TwistedOneForm:
    """``omega = sum_{i<j} B_ij (x_i dx_j - x_j dx_i)``."""
    if not isinstance(B, PluckerCoefficients):
        B = PluckerCoefficients(dict(B))
    entries = {k: v for k, v in B.entries.items() if v}
    if not entries:
        raise InvalidFormError(["all Plucker coefficients vanish"])
    ring = next(iter(entries.values())).ring
    x = ring.gens
    A = [ring.zero] * 4
    for (i, j), b in entries.items():
        A[j] = A[j] + b * x[i]
        A[i] = A[i] - b * x[j]
    return TwistedOneForm(tuple(A))


def pencil_form(f: Polynomial, g: Polynomial) -> TwistedOneForm:
    """``omega = deg(g) g df - deg(f) f dg``, which has first integral ``f^deg g / g^deg f``."""
    for h in (f, g):
        if not h or not h.is_homogeneous() or h.is_constant():
            raise InvalidFormError(["pencil members must be nonzero non-constant forms"])
    a, b = f.degree, g.degree
    A = tuple(
        g * partial_derivative(f, i) * b - f * partial_derivative(g, i) * a for i in range(4)
    )
    return TwistedOneForm(A)


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = rows[0][0].ring.zero
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def split_form(u, v) -> TwistedOneForm:
    """Contract the volume form with the radial field, ``u`` (linear) and ``v`` (quadratic).

    ``A_l = det[x; u; v; e_l]``.  The tangent sheaf contains ``O + O(-1)``
    spanned by ``u`` and ``v``.
    """
    u, v = tuple(u), tuple(v)
    if len(u) != 4 or len(v) != 4:
        raise ValueError("vector fields need four components")
    ring = u[0].ring
    x = list(ring.gens)
    A = []
    for l in range(4):
        e = [ring.one if k == l else ring.zero for k in range(4)]
        A.append(_det([x, list(u), list(v), e]))
    form = TwistedOneForm(tuple(A))
    if not any(form.coefficients):
        raise InvalidFormError(["the vector fields are dependent: zero form"])
    return form


# -- seeded "generic" witnesses --


def generic_plucker_form(seed: int = 0, degree: int = 3, nterms: int = 3, ring=P3):
    """Random ``B_ij`` with ``nterms`` terms and single-digit coefficients."""
    rng = random.Random(seed)
    B = {k: ring.random_form(degree, rng, nterms=nterms) for k in PAIRS}
    return from_plucker(B)


def generic_pencil(deg_f: int, deg_g: int, seed: int = 0, ring=P3, linear_x0: bool = False):
    """Pencil of two random forms; with ``linear_x0`` the first member is ``x0``."""
    rng = random.Random(seed)
    f = ring.gen(0) if linear_x0 else ring.random_form(deg_f, rng)
    g = ring.random_form(deg_g, rng)
    return pencil_form(f, g)


def generic_split_form(seed: int = 0, ring=P3):
    rng = random.Random(seed)
    u = [ring.random_form(1, rng) for _ in range(4)]
    v = [ring.random_form(2, rng) for _ in range(4)]
    return split_form(u, v)


# ---------- validation and basic invariants ----------


def validate(form: TwistedOneForm) -> list[str]:
    """Problems with ``form``; an empty list means it defines a twisted 1-form."""
    problems = []
    A = form.coefficients
    if not any(A):
        return ["zero form: all coefficients vanish"]
    rings = {a.ring for a in A}
    if len(rings) > 1:
        return ["coefficients live in different rings"]
    for i, a in enumerate(A):
        if a and not a.is_homogeneous():
            problems.append(f"A{i} is not homogeneous")
    degs = {a.degree for a in A if a}
    if len(degs) > 1:
        problems.append(f"coefficients have different degrees {sorted(degs)}")
    if not problems:
        e = form.euler_contraction()
        if e:
            problems.append(f"Euler relation fails: sum x_i A_i = {e}")
    return problems


def check(form: TwistedOneForm) -> TwistedOneForm:
    problems = validate(form)
    if problems:
        raise InvalidFormError(problems)
    return form


def singular_ideal(form: TwistedOneForm) -> Ideal:
    return Ideal(form.coefficients, form.ring)


def chern_from_curve(d: int, deg_c: int, genus: int) -> ChernTriple:
    """Chern classes of the tangent sheaf from the degree and genus of the singular curve."""
    c1 = 2 - d
    c2 = d * d + 2 - deg_c
    c3 = d**3 + 2 * d * d + 2 * d - deg_c * (3 * d - 2) + 2 * genus - 2
    return ChernTriple(c1, c2, c3)


def tangent_hilbert_polynomial(d: int, c: int, l: int) -> HilbertPolynomial:
    """Closed-form Hilbert polynomial of the tangent sheaf with ``c2 = c``, ``c3 = l``.

    ``2 binom(t+3, 3) + (t+2)(t+1)(2-d)/2 - (t+2)c + (l + (d-2)c)/2``.

    Notes
    -----
    This agrees with Riemann-Roch (:func:`~distp3.moduli.hrr_chi` with
    ``c1 = 2 - d``) only for ``d`` in {2, 3}; in general the two differ by
    ``(d-3)(d-2)(3t+7-d)/6``.  :class:`HilbertCheck` reports both comparisons.
    """
    t3 = HilbertPolynomial.binomial(3, 3)
    quad = HilbertPolynomial([2, 3, 1])  # (t + 2)(t + 1)
    lin = HilbertPolynomial([2, 1])
    return 2 * t3 + quad * Fraction(2 - d, 2) - lin * c + Fraction(l + (d - 2) * c, 2)


def h0_tangent(form: TwistedOneForm, k: int) -> int:
    """``h^0(T_D(k))``: vector fields of degree ``k + 1`` killed by ``omega``, modulo radial ones."""
    check(form)
    if k < -1:
        raise ValueError("twist must be >= -1")
    ring = form.ring
    d = form.degree
    src = monomials_of_degree(4, k + 1)
    tgt = {m: i for i, m in enumerate(monomials_of_degree(4, k + d + 2))}
    rows = []
    for a in form.coefficients:
        for mu in src:
            rows.append(
                {tgt[tuple(p + q for p, q in zip(e, mu))]: c for e, c in a._terms.items()}
            )
    kernel = 4 * len(src) - rank(rows, ring.field)
    return kernel - math.comb(k + 3, 3)


def is_stable(form: TwistedOneForm) -> str:
    """``"stable"``, ``"not-stable"`` or ``"not-applicable"`` (only c1 = -1 is decided)."""
    check(form)
    if 2 - form.degree != -1:
        return "not-applicable"
    return "stable" if h0_tangent(form, 0) == 0 else "not-stable"


def integrability_coefficients(form: TwistedOneForm) -> dict:
    """Coefficients of ``omega ^ d omega`` on ``dx_i ^ dx_j ^ dx_k``."""
    A = form.coefficients
    D = [[partial_derivative(A[j], i) for j in range(4)] for i in range(4)]

    def dw(i, j):  # coefficient of dx_i ^ dx_j in d omega
        return D[i][j] - D[j][i]

    out = {}
    for i, j, k in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]:
        out[(i, j, k)] = A[i] * dw(j, k) - A[j] * dw(i, k) + A[k] * dw(i, j)
    return out


def is_integrable(form: TwistedOneForm) -> bool:
    """Frobenius condition ``omega ^ d omega = 0``."""
    check(form)
    return not any(integrability_coefficients(form).values())


# ---------- analysis ----------


@dataclass(frozen=True)
class SingularSchemeReport:
    raw: Ideal
    saturated: Ideal
    hilbert_polynomial: HilbertPolynomial
    curve: Ideal | None
    residual: Ideal
    curve_degree: int
    curve_genus: int
    residual_length: int
    saturated_dimension: int
    curve_dimension: int
    residual_dimension: int


@dataclass(frozen=True)
class HilbertCheck:
    """Predicted versus computed Hilbert polynomial of the tangent sheaf.

    ``expected`` is the closed form, ``riemann_roch`` the Riemann-Roch
    prediction from the same Chern classes, and ``computed`` comes from the
    singular scheme through ``0 -> T_D -> TP^3 -> I_Z(d+2) -> 0``.
    """

    expected: HilbertPolynomial
    computed: HilbertPolynomial
    riemann_roch: HilbertPolynomial | None = None

    @property
    def consistent(self) -> bool:
        return self.expected == self.computed

    @property
    def riemann_roch_consistent(self) -> bool | None:
        return None if self.riemann_roch is None else self.riemann_roch == self.computed

    @property
    def difference(self) -> HilbertPolynomial:
        return self.expected - self.computed

    def __bool__(self):
        return self.consistent


@dataclass(frozen=True)
class DistributionReport:
    degree: int
    chern: ChernTriple
    scheme: SingularSchemeReport
    h0_tangent: int | None
    stability: str
    integrable: bool
    tangent_hilbert_polynomial: HilbertPolynomial
    hilbert_check: HilbertCheck
    field: str
    seed: int

    @property
    def hilbert_consistent(self) -> bool:
        return self.hilbert_check.consistent

    @property
    def probabilistic(self) -> bool:
        """Computed over F_p: a reduction of the rational form, true with high probability."""
        return self.field != "rational"

    def to_json(self) -> dict:
        s = self.scheme
        stable = {"stable": True, "not-stable": False}.get(self.stability)
        return {
            "degree": self.degree,
            "chern": list(self.chern),
            "curve": {
                "degree": s.curve_degree,
                "genus": s.curve_genus,
                "ideal": s.curve.to_json() if s.curve is not None else [],
            },
            "residual_length": s.residual_length,
            "singular_hilbert_polynomial": str(s.hilbert_polynomial),
            "tangent_hilbert_polynomial": str(self.tangent_hilbert_polynomial),
            "h0_tangent": self.h0_tangent,
            "stable": stable,
            "stability": self.stability,
            "integrable": self.integrable,
            "hilbert_consistent": self.hilbert_consistent,
            "riemann_roch_consistent": self.hilbert_check.riemann_roch_consistent,
            "field": self.field,
            "probabilistic_field_reduction": self.probabilistic,
            "seed": self.seed,
        }


def singular_scheme(form: TwistedOneForm, seed: int = 0, max_pairs=None) -> SingularSchemeReport:
    check(form)
    raw = singular_ideal(form)
    hp_raw = hilbert_polynomial(raw, max_pairs=max_pairs)
    if hp_raw.degree >= 2:
        raise NotADistributionError(
            f"singular locus has dimension {hp_raw.degree}; the coefficients share a "
            "common factor, so the normal sheaf is not torsion-free"
        )
    sat = saturate_irrelevant(raw, max_pairs=max_pairs)
    inv = scheme_invariants(sat, max_pairs=max_pairs)
    if inv.proj_dimension == 1:
        curve = top_dim_part(sat, 2, seed=seed, max_pairs=max_pairs)
        cinv = scheme_invariants(curve, max_pairs=max_pairs)
        residual = saturate(sat, curve, max_pairs=max_pairs)
        rinv = scheme_invariants(residual, max_pairs=max_pairs)
        return SingularSchemeReport(
            raw, sat, inv.hilbert_polynomial, curve, residual,
            cinv.degree, cinv.arithmetic_genus, rinv.length or 0,
            1, 1, rinv.proj_dimension,
        )
    return SingularSchemeReport(
        raw, sat, inv.hilbert_polynomial, None, sat,
        0, 1, inv.length or 0,
        inv.proj_dimension, -1, inv.proj_dimension,
    )


def hilbert_consistency(form: TwistedOneForm, report: DistributionReport) -> HilbertCheck:
    """Compare the tangent-sheaf Hilbert polynomial predicted from the Chern classes
    with ``chi(TP^3(t)) - chi(I_Z(t + d + 2))`` computed from the singular scheme."""
    d = form.degree
    _, c2, c3 = report.chern
    expected = tangent_hilbert_polynomial(d, c2, c3)
    line = HilbertPolynomial.binomial(d + 5, 3)  # chi(O(t + d + 2))
    ideal_sheaf = line - report.scheme.hilbert_polynomial.shift(d + 2)
    rr = hrr_chi(2, 2 - d, c2, c3)
    return HilbertCheck(expected, chi_tp3() - ideal_sheaf, rr)


def analyze(form: TwistedOneForm, seed: int = 0, max_pairs=None) -> DistributionReport:
    """Full analysis of the distribution defined by ``form``.

    Raises :class:`NotADistributionError` when the singular locus has a surface
    component and :class:`~distp3.groebner.GroebnerLimitError` when the S-pair
    budget is exhausted.
    """
    check(form)
    d = form.degree
    scheme = singular_scheme(form, seed=seed, max_pairs=max_pairs)
    chern = chern_from_curve(d, scheme.curve_degree, scheme.curve_genus)
    h0 = h0_tangent(form, 0) if d == 3 else None
    stability = "not-applicable" if h0 is None else ("stable" if h0 == 0 else "not-stable")
    placeholder = HilbertCheck(HilbertPolynomial(), HilbertPolynomial())
    report = DistributionReport(
        degree=d,
        chern=chern,
        scheme=scheme,
        h0_tangent=h0,
        stability=stability,
        integrable=is_integrable(form),
        tangent_hilbert_polynomial=tangent_hilbert_polynomial(d, chern.c2, chern.c3),
        hilbert_check=placeholder,
        field=form.ring.field.name,
        seed=seed,
    )
    check_ = hilbert_consistency(form, report)
    return DistributionReport(**{**report.__dict__, "hilbert_check": check_})


# ---------- JSON ----------


def form_from_json(data: dict, field=None) -> TwistedOneForm:
    """Read ``{"degree", "plucker": {"01": ...}}`` or ``{"degree", "coefficients": [...]}``."""
    ring = P3 if field is None else P3.with_field(field)
    if "plucker" in data:
        B = {}
        for key, text in data["plucker"].items():
            if len(key) != 2 or not key.isdigit():
                raise InvalidFormError([f"bad Plucker index {key!r}"])
            B[(int(key[0]), int(key[1]))] = ring.parse(text)
        form = from_plucker(B)
    elif "coefficients" in data:
        cs = data["coefficients"]
        if len(cs) != 4:
            raise InvalidFormError(["need exactly four coefficients"])
        form = TwistedOneForm(tuple(ring.parse(c) for c in cs))
    else:
        raise InvalidFormError(["form JSON needs 'plucker' or 'coefficients'"])
    check(form)
    if "degree" in data and int(data["degree"]) != form.degree:
        raise InvalidFormError(
            [f"declared degree {data['degree']} but coefficients give {form.degree}"]
        )
    return form


def prime_field(p: int = DEFAULT_PRIME) -> PrimeField:
    return GF(p)

"""Cohomology and Riemann–Roch arithmetic on P^3, and moduli dimension counts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .hilbert import HilbertPolynomial

# Todd class of P^3: 1 + 2H + 11/6 H^2 + H^3
_TODD = (Fraction(1), Fraction(2), Fraction(11, 6), Fraction(1))

# dim R(-1, 3, 5), quoted from Chang's classification of stable reflexive sheaves
DIM_R_MINUS1_3_5 = 19


def h_line_bundle(i: int, k: int) -> int:
    """``h^i(P^3, O(k))`` by Bott's formula."""
    if i == 0:
        return math.comb(k + 3, 3) if k >= 0 else 0
    if i == 3:
        return math.comb(-k - 1, 3) if k <= -4 else 0
    if i in (1, 2):
        return 0
    raise ValueError(f"cohomological degree must be in 0..3, got {i}")


def chi_line_bundle(k: int) -> int:
    """``chi(O(k))``: the cubic ``binom(k+3, 3)`` evaluated at any integer."""
    return int(HilbertPolynomial.binomial(3, 3)(k))


def h0_tp3(k: int) -> int:
    """``h^0(TP^3(k))`` from the Euler sequence ``0 -> O(k) -> O(k+1)^4 -> TP^3(k) -> 0``."""
    if k < -1:
        return 0
    return 4 * h_line_bundle(0, k + 1) - h_line_bundle(0, k)


def chi_tp3() -> HilbertPolynomial:
    """``chi(TP^3(t)) = 4*binom(t+4, 3) - binom(t+3, 3)``."""
    return 4 * HilbertPolynomial.binomial(4, 3) - HilbertPolynomial.binomial(3, 3)


@dataclass(frozen=True)
class ChernCharacterData:
    rank: int
    c1: int
    c2: int
    c3: int

    @property
    def ch1(self) -> Fraction:
        return Fraction(self.c1)

    @property
    def ch2(self) -> Fraction:
        return Fraction(self.c1**2 - 2 * self.c2, 2)

    @property
    def ch3(self) -> Fraction:
        return Fraction(self.c1**3 - 3 * self.c1 * self.c2 + 3 * self.c3, 6)

    def twisted(self) -> tuple[HilbertPolynomial, ...]:
        """Components of ``ch(E) * exp(tH)`` as polynomials in ``t``."""
        T = HilbertPolynomial([0, 1])
        r, a, b, c = self.rank, self.ch1, self.ch2, self.ch3
        one = HilbertPolynomial([1])
        t2 = T * T * Fraction(1, 2)
        t3 = T * T * T * Fraction(1, 6)
        return (
            one * r,
            one * a + T * r,
            one * b + T * a + t2 * r,
            one * c + T * b + t2 * a + t3 * r,
        )


def hrr_chi(r: int, c1: int, c2: int, c3: int, t=None):
    """Euler characteristic of ``E(t)`` for a sheaf of rank ``r`` with the given Chern classes.

    Returns the polynomial in ``t`` when ``t`` is None, else its value.
    """
    ch = ChernCharacterData(r, c1, c2, c3).twisted()
    chi = ch[3] * _TODD[0] + ch[2] * _TODD[1] + ch[1] * _TODD[2] + ch[0] * _TODD[3]
    return chi if t is None else chi(t)


def slope(c1: int, rank: int) -> Fraction:
    if rank < 1:
        raise ValueError("slope needs positive rank")
    return Fraction(c1, rank)


def forgetful_dim(dim_R: int, dim_hom: int) -> int:
    """Dimension of the distribution moduli over a moduli space of tangent sheaves."""
    if dim_R < 0 or dim_hom < 0:
        raise ValueError("dimensions must be non-negative")
    return dim_R + dim_hom - 1


@dataclass(frozen=True)
class DerivationStep:
    label: str
    value: int
    source: str  # "computed" or "axiom (...)"


@dataclass(frozen=True)
class Derivation:
    steps: tuple[DerivationStep, ...] = field(default_factory=tuple)

    @property
    def value(self) -> int:
        return self.steps[-1].value

    def to_json(self) -> dict:
        return {
            "steps": [
                {"label": s.label, "value": s.value, "source": s.source} for s in self.steps
            ],
            "value": self.value,
        }

    def __str__(self):
        return "\n".join(f"{s.label} = {s.value}    [{s.source}]" for s in self.steps)


def moduli_dim_335() -> Derivation:
    """Dimension count for stable degree-3 distributions with Chern classes (-1, 3, 5)."""
    h0 = h0_tp3(-1)
    dim_hom = 6 * h0
    total = forgetful_dim(DIM_R_MINUS1_3_5, dim_hom)
    return Derivation(
        (
            DerivationStep(
                "dim R(-1, 3, 5)",
                DIM_R_MINUS1_3_5,
                "axiom (Chang 1984, Theorem 3.14)",
            ),
            DerivationStep("h0(TP3(-1))", h0, "computed"),
            DerivationStep("dim Hom(E, TP3) = 6 * h0(TP3(-1))", dim_hom, "computed"),
            DerivationStep(
                f"dim D^st(3, 3, 5) = {DIM_R_MINUS1_3_5} + {dim_hom} - 1", total, "computed"
            ),
        )
    )

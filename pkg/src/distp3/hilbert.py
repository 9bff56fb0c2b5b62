"""Hilbert series, Hilbert functions and Hilbert polynomials of homogeneous ideals.

The Hilbert polynomial is read off the degrevlex leading ideal (Macaulay); the
linear-algebra :func:`hilbert_function` never touches a Gröbner basis and is
kept as an independent check on that route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import rank
from .groebner import Ideal
from .poly import DEGREVLEX, monomials_of_degree


class HilbertPolynomial:
    """A univariate polynomial in ``t`` with rational coefficients.

    Coefficients are stored in ascending order with no trailing zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def binomial(cls, shift: int, k: int) -> HilbertPolynomial:
        """``binom(t + shift, k)`` as a polynomial in ``t``."""
        p = cls([1])
        for i in range(k):
            p = p * cls([shift - i, 1])
        return p * Fraction(1, math.factorial(k))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return HilbertPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return HilbertPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, HilbertPolynomial):
            out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return HilbertPolynomial(out)
        return HilbertPolynomial(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def shift(self, a) -> HilbertPolynomial:
        """The polynomial ``t -> self(t + a)``."""
        acc = HilbertPolynomial()
        lin = HilbertPolynomial([a, 1])
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HilbertPolynomial([other])
        if not isinstance(other, HilbertPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            neg = c < 0
            a = -c if neg else c
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"HilbertPolynomial({str(self)!r})"


def _as_poly(x) -> HilbertPolynomial:
    return x if isinstance(x, HilbertPolynomial) else HilbertPolynomial([x])


# ---------- monomial ideals ----------


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _padd(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    ]


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _numerator(gens):
    if not gens:
        return [1]
    if not any(gens[0]):  # the unit ideal; gens are sorted by degree
        return [0]
    # pairwise coprime generators: a product of factors (1 - t^deg)
    used = [0] * len(gens[0])
    coprime = True
    for g in gens:
        for i, a in enumerate(g):
            if a:
                if used[i]:
                    coprime = False
                used[i] = 1
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot on the variable that occurs in the most generators
    counts = [sum(1 for g in gens if g[i]) for i in range(len(gens[0]))]
    i = max(range(len(counts)), key=lambda k: counts[k])
    x = tuple(1 if k == i else 0 for k in range(len(gens[0])))
    plus = _minimalize([g for g in gens if not g[i]] + [x])
    quot = _minimalize(
        [tuple(a - 1 if k == i and a else a for k, a in enumerate(g)) for g in gens]
    )
    # N(I) = N(I + (x)) + t * N(I : x)
    return _padd(_numerator(plus), [0] + _numerator(quot))


def hilbert_series_monomial(leading) -> list[int]:
    """Numerator ``N(t)`` of the Hilbert series ``N(t) / (1 - t)^n`` of ``R/M``.

    ``leading`` is a list of exponent tuples generating the monomial ideal
    ``M``; the list of coefficients is returned in ascending powers of ``t``.

    >>> hilbert_series_monomial([(2, 0, 0, 0), (1, 1, 0, 0)])
    [1, 0, -2, 1]
    """
    out = _numerator(_minimalize([tuple(m) for m in leading]))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def series_coefficient(numerator, m: int, nvars: int = 4) -> int:
    """Coefficient of ``t^m`` in ``numerator / (1 - t)^nvars``."""
    return sum(
        c * math.comb(m - i + nvars - 1, nvars - 1)
        for i, c in enumerate(numerator)
        if i <= m
    )


def _polynomial_from_numerator(numerator, nvars: int) -> HilbertPolynomial:
    q = list(numerator)
    r = nvars
    # divide out (1 - t) while N(1) = 0
    while r > 0 and sum(q) == 0 and any(q):
        out = []
        acc = 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out
        r -= 1
    if r == 0 or not any(q):
        return HilbertPolynomial()
    hp = HilbertPolynomial()
    for i, c in enumerate(q):
        if c:
            hp = hp + HilbertPolynomial.binomial(r - 1 - i, r - 1) * c
    return hp


def hilbert_polynomial(I: Ideal, max_pairs=None) -> HilbertPolynomial:
    """Hilbert polynomial of ``R/I`` computed from the degrevlex leading ideal."""
    if not I.is_homogeneous():
        raise ValueError("Hilbert polynomial needs a homogeneous ideal")
    n = I.ring.nvars
    if I.is_zero():
        return HilbertPolynomial.binomial(n - 1, n - 1)
    G = I.groebner(DEGREVLEX, max_pairs=max_pairs)
    return _polynomial_from_numerator(hilbert_series_monomial(G.leading_monomials), n)


def hilbert_numerator(I: Ideal, max_pairs=None) -> list[int]:
    n = I.ring.nvars
    if I.is_zero():
        return [1]
    G = I.groebner(DEGREVLEX, max_pairs=max_pairs)
    return hilbert_series_monomial(G.leading_monomials)


def hilbert_function(I: Ideal, m: int) -> int:
    """``dim (R/I)_m`` by ranking the degree-``m`` multiples of the generators."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    if not I.is_homogeneous():
        raise ValueError("Hilbert function needs a homogeneous ideal")
    n = I.ring.nvars
    mons = monomials_of_degree(n, m)
    col = {mono: k for k, mono in enumerate(mons)}
    rows = []
    for g in I.generators:
        dg = g.degree
        if dg > m:
            continue
        for mu in monomials_of_degree(n, m - dg):
            rows.append(
                {col[tuple(a + b for a, b in zip(e, mu))]: c for e, c in g._terms.items()}
            )
    return len(mons) - rank(rows, I.ring.field)


# ---------- scheme invariants ----------


@dataclass(frozen=True)
class SchemeInvariants:
    """Numerical data of the projective scheme cut out by a saturated ideal.

    ``proj_dimension`` is -1 for the empty scheme, whose arithmetic genus is
    taken to be 1 (so ``chi(O) = 0``).  ``arithmetic_genus`` is only set for
    curves and for the empty scheme; ``length`` only for finite schemes.
    """

    proj_dimension: int
    degree: int
    hilbert_polynomial: HilbertPolynomial
    arithmetic_genus: int | None = None
    length: int | None = None


def scheme_invariants(I: Ideal, max_pairs=None) -> SchemeInvariants:
    hp = hilbert_polynomial(I, max_pairs=max_pairs)
    dim = hp.degree
    if dim < 0:
        return SchemeInvariants(-1, 0, hp, arithmetic_genus=1)
    degree = int(hp.leading_coefficient * math.factorial(dim))
    if dim == 0:
        return SchemeInvariants(0, degree, hp, length=degree)
    if dim == 1:
        return SchemeInvariants(1, degree, hp, arithmetic_genus=int(1 - hp(0)))
    return SchemeInvariants(dim, degree, hp)


def ci_invariants(a: int, b: int) -> tuple[int, int]:
    """Degree and arithmetic genus of a complete intersection of type (a, b) in P^3."""
    if a < 1 or b < 1:
        raise ValueError("degrees must be positive")
    return a * b, a * b * (a + b - 4) // 2 + 1

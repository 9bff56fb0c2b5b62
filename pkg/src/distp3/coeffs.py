"""Exact coefficient fields: the rationals and prime fields F_p.

Rationals are ``gmpy2.mpq`` values (canonical by construction: reduced, positive
denominator).  Prime-field elements are plain ``int`` representatives in
``[0, p)``; the arithmetic kernels in :mod:`distp3.groebner` reduce modulo
``p`` explicitly instead of wrapping every element in an object.
"""

from __future__ import annotations

import functools
import os
from fractions import Fraction

import gmpy2

DEFAULT_PRIME = 32003


class RationalField:
    """The field of rational numbers."""

    characteristic = 0
    name = "rational"

    def __call__(self, value) -> gmpy2.mpq:
        if isinstance(value, str):
            return gmpy2.mpq(value.strip())
        return gmpy2.mpq(value)

    @property
    def zero(self):
        return gmpy2.mpq(0)

    @property
    def one(self):
        return gmpy2.mpq(1)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / gmpy2.mpq(a)

    def to_fraction(self, a) -> Fraction:
        return Fraction(int(a.numerator), int(a.denominator))

    def random_element(self, rng, bound: int = 9):
        return gmpy2.mpq(rng.randint(-bound, bound))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field F_p for an odd prime ``p``."""

    def __init__(self, p: int):
        p = int(p)
        if p < 3 or not _is_prime(p):
            raise ValueError(f"field characteristic must be an odd prime, got {p}")
        self.characteristic = p
        self.name = f"fp:{p}"

    def __call__(self, value) -> int:
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, int):
            return value % p
        num, den = int(value.numerator), int(value.denominator)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in F_{p}")
        return num * pow(den, -1, p) % p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def to_fraction(self, a) -> Fraction:
        return Fraction(a)

    def random_element(self, rng, bound: int = 9):
        return rng.randint(-bound, bound) % self.characteristic

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str | None = None):
    """Parse ``"rational"`` or ``"fp:<p>"``.

    ``None`` falls back to the ``DISTP3_FIELD`` environment variable and then to
    the rationals.
    """
    if spec is None:
        spec = os.environ.get("DISTP3_FIELD", "rational")
    spec = spec.strip().lower()
    if spec in ("rational", "qq", "q"):
        return QQ
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValueError(f"bad prime in field spec {spec!r}") from None
        return GF(p)
    raise ValueError(f"unknown field spec {spec!r}; use 'rational' or 'fp:<p>'")


def _is_prime(n: int) -> bool:
    return bool(gmpy2.is_prime(n, 50))

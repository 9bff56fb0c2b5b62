"""Homogeneous polynomials in x0..x3 with exact coefficients.

A monomial is a plain tuple of exponents, one per ring variable.  A
:class:`Polynomial` is an immutable map from monomials to nonzero coefficients
of a single field (see :mod:`distp3.coeffs`).

The default ring :data:`P3` is ``QQ[x0, x1, x2, x3]``.  Rings with extra
variables exist only so that elimination can adjoin an auxiliary variable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement

from .coeffs import QQ, PrimeField

VARIABLES = ("x0", "x1", "x2", "x3")


class FieldMismatchError(ValueError):
    """Operands live over different coefficient fields or rings."""


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(PolynomialSyntaxError):
    pass


# ---------- monomial orders ----------


def _degrevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


class MonomialOrder:
    """A total, multiplicative monomial order.

    ``kind`` is ``"degrevlex"``, ``"lex"`` or ``"block"``.  A block order
    compares the first ``nelim`` variables by degrevlex and breaks ties with
    degrevlex on the rest, so it eliminates the leading group.
    """

    def __init__(self, kind: str = "degrevlex", nelim: int = 0):
        if kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and nelim < 1:
            raise ValueError("block order needs at least one eliminated variable")
        self.kind = kind
        self.nelim = nelim if kind == "block" else 0
        if kind == "degrevlex":
            self.key = _degrevlex_key
        elif kind == "lex":
            self.key = tuple
        else:
            k = nelim

            def key(m):
                return _degrevlex_key(m[:k]) + _degrevlex_key(m[k:])

            self.key = key

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.nelim == self.nelim
        )

    def __hash__(self):
        return hash((self.kind, self.nelim))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', nelim={self.nelim})"
        return f"MonomialOrder({self.kind!r})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(nelim: int) -> MonomialOrder:
    return MonomialOrder("block", nelim)


def monomial_degree(m) -> int:
    return sum(m)


def monomials_of_degree(n: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of length ``n`` and total degree ``degree``,
    in decreasing degrevlex order."""
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=_degrevlex_key, reverse=True)
    return out


# ---------- rings ----------


class PolyRing:
    """Polynomial ring over ``field`` in the named variables."""

    def __init__(self, field=QQ, names=VARIABLES):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        self._index = {name: i for i, name in enumerate(self.names)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {', '.join(self.names)})"

    def with_field(self, field) -> PolyRing:
        return PolyRing(field, self.names)

    def with_names(self, names) -> PolyRing:
        return PolyRing(self.field, names)

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, i) -> Polynomial:
        if isinstance(i, str):
            i = self._index[i]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def index(self, name: str) -> int:
        return self._index[name]

    def monomial(self, exponents, coeff=1) -> Polynomial:
        exponents = tuple(exponents)
        if len(exponents) != self.nvars or min(exponents) < 0:
            raise ValueError(f"bad exponent vector {exponents}")
        return Polynomial(self, {exponents: self.field(coeff)})

    def from_dict(self, terms: dict) -> Polynomial:
        field = self.field
        out = {}
        for m, c in terms.items():
            c = field(c)
            if c:
                out[tuple(m)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> Polynomial:
        return _Parser(self, text).parse()

    def monomials(self, degree: int) -> list[tuple[int, ...]]:
        return monomials_of_degree(self.nvars, degree)

    def random_form(self, degree: int, rng, nterms: int | None = None, bound: int = 9):
        """A seeded random homogeneous form.

        With ``nterms=None`` every monomial of the degree gets an independent
        coefficient in ``[-bound, bound]`` (a "generic" form); otherwise
        ``nterms`` distinct monomials are sampled.
        """
        mons = self.monomials(degree)
        if nterms is not None:
            mons = rng.sample(mons, min(nterms, len(mons)))
        terms = {}
        for m in mons:
            c = rng.randint(-bound, bound)
            if nterms is not None:
                while c == 0:
                    c = rng.randint(-bound, bound)
            terms[m] = c
        return self.from_dict(terms)


P3 = PolyRing(QQ, VARIABLES)


# ---------- polynomials ----------


class Polynomial:
    """An exact multivariate polynomial.

    Instances are immutable; all arithmetic returns new objects.  Terms are
    iterated in decreasing degrevlex order.
    """

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._hash = None

    # -- structure --

    @property
    def field(self):
        return self.ring.field

    def as_dict(self) -> dict:
        return dict(self._terms)

    def terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[tuple[int, ...], object]]:
        if order is DEGREVLEX:
            if self._sorted is None:
                self._sorted = sorted(
                    self._terms.items(), key=lambda t: _degrevlex_key(t[0]), reverse=True
                )
            return list(self._sorted)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monomials(self) -> list[tuple[int, ...]]:
        return [m for m, _ in self.terms()]

    def coefficient(self, m) -> object:
        return self._terms.get(tuple(m), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_term(self, order: MonomialOrder = DEGREVLEX):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX):
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def involves(self, i: int) -> bool:
        return any(m[i] for m in self._terms)

    # -- arithmetic --

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise FieldMismatchError(f"cannot combine {self.ring} with {other.ring}")
            return other
        if isinstance(other, PolyRing):
            raise TypeError("cannot combine a polynomial with a ring")
        return self.ring.constant(other)

    def _reduce(self, c):
        if isinstance(self.field, PrimeField):
            return c % self.field.characteristic
        return c

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        red = self._reduce
        for m, c in other._terms.items():
            v = red(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        red = self._reduce
        return Polynomial(self.ring, {m: red(-c) for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = self.field(c)
        if not c:
            return self.ring.zero
        red = self._reduce
        return Polynomial(self.ring, {m: red(v * c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, PolyRing):
                return NotImplemented
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = get(m, 0) + c1 * c2
        red = self._reduce
        out = {m: v for m, v in ((m, red(v)) for m, v in out.items()) if v}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, m, c=None) -> Polynomial:
        out = {tuple(a + b for a, b in zip(k, m)): v for k, v in self._terms.items()}
        p = Polynomial(self.ring, out)
        return p if c is None else p.scale(c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            try:
                return self == self.ring.constant(other)
            except (TypeError, ValueError, ZeroDivisionError):
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitutions --

    def derivative(self, i: int) -> Polynomial:
        return partial_derivative(self, i)

    def change_field(self, field) -> Polynomial:
        """Map coefficients into ``field``; rationals reduce modulo p."""
        ring = self.ring.with_field(field)
        src = self.field
        return ring.from_dict({m: src.to_fraction(c) for m, c in self._terms.items()})

    def change_ring(self, ring: PolyRing, positions) -> Polynomial:
        """Re-embed into ``ring``: variable ``i`` goes to slot ``positions[i]``."""
        n = ring.nvars
        out = {}
        for m, c in self._terms.items():
            e = [0] * n
            for i, a in enumerate(m):
                if a:
                    e[positions[i]] = a
            out[tuple(e)] = c
        return Polynomial(ring, out)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    out = {}
    red = p._reduce
    for m, c in p._terms.items():
        a = m[i]
        if a:
            e = list(m)
            e[i] = a - 1
            v = red(c * a)
            if v:
                out[tuple(e)] = v
    return Polynomial(p.ring, out)


def divide_exact(p: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """The quotient p / g, which must be exact."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    lm, lc = g.leading_term(order)
    inv = g.field.inv(lc)
    red = p._reduce
    key = order.key
    rest = dict(p._terms)
    quot = {}
    gterms = list(g._terms.items())
    while rest:
        m = max(rest, key=key)
        q = tuple(a - b for a, b in zip(m, lm))
        if min(q) < 0:
            raise ValueError("division is not exact")
        c = red(rest[m] * inv)
        quot[q] = c
        for gm, gc in gterms:
            mm = tuple(a + b for a, b in zip(gm, q))
            v = red(rest.get(mm, 0) - c * gc)
            if v:
                rest[mm] = v
            else:
                rest.pop(mm, None)
    return Polynomial(p.ring, quot)


# ---------- printing ----------


def _format_coeff(field, c):
    if isinstance(field, PrimeField):
        p = field.characteristic
        v = c if c <= p // 2 else c - p
        return str(v)
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _format_monomial(names, m):
    parts = []
    for name, a in zip(names, m):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Render in the input grammar, terms in decreasing degrevlex order."""
    if not p:
        return "0"
    names = p.ring.names
    out = []
    for m, c in p.terms():
        s = _format_coeff(p.field, c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = _format_monomial(names, m)
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------- parsing ----------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    # expr   := ["+"|"-"] term (("+"|"-") term)*
    # term   := factor ("*" factor)*
    # factor := atom ("^" natural)?
    # atom   := rational | variable | "(" expr ")"

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = []
        pos = 0
        n = len(text)
        while pos < n:
            mt = _TOKEN.match(text, pos)
            if mt is None:
                break
            start = mt.start(mt.lastindex)
            kind = ("int", "name", "op")[mt.lastindex - 1]
            tok = mt.group(mt.lastindex)
            if kind == "op" and tok not in "+-*^/()":
                raise PolynomialSyntaxError(f"unexpected character {tok!r}", start)
            self.tokens.append((kind, tok, start))
            pos = mt.end()
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, tok):
        kind, value, pos = self.take()
        if value != tok or kind != "op":
            raise PolynomialSyntaxError(f"expected {tok!r}", pos)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolynomialSyntaxError("empty expression", 0)
        p = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"unexpected token {value!r}", pos)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                q = self.term()
                p = p + q if value == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        p = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise PolynomialSyntaxError("exponent must be a natural number", pos)
            p = p ** int(value)
        return p

    def atom(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "int":
            num = int(value)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "int" or int(v3) == 0:
                    raise PolynomialSyntaxError("denominator must be a positive integer", p3)
                try:
                    return self.ring.constant(Fraction(num, int(v3)))
                except ZeroDivisionError:
                    raise PolynomialSyntaxError(
                        f"denominator {v3} is not invertible in {self.ring.field!r}", p3
                    ) from None
            return self.ring.constant(num)
        if kind == "name":
            if value not in self.ring.names:
                raise UnknownVariableError(f"unknown variable {value!r}", pos)
            return self.ring.gen(value)
        if kind == "op" and value == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            raise PolynomialSyntaxError("unexpected end of input", pos)
        raise PolynomialSyntaxError(f"unexpected token {value!r}", pos)


def parse(text: str, ring: PolyRing = P3) -> Polynomial:
    """Parse a polynomial written in the grammar of :func:`format_polynomial`.

    >>> parse("x0^2 - 3*x1*x2")
    Polynomial('x0^2 - 3*x1*x2')
    """
    return ring.parse(text)

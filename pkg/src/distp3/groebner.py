"""Gröbner bases and ideal operations.

Buchberger's algorithm with the Gebauer–Möller installation of the coprime and
chain criteria and normal (sugar) pair selection.  Everything else is built
on top of it:

* ``intersect`` eliminates an auxiliary variable from ``t*I + (1 - t)*J``;
* ``colon`` divides a basis of ``I ∩ (g)`` by ``g`` and intersects over the
  generators of ``J``;
* ``saturate`` iterates ``colon`` until the chain stops growing;
* ``top_dim_part`` links twice through a random complete intersection.

The kernels below work on raw ``{exponent tuple: coefficient}`` dicts so the
inner loops avoid object allocation; :class:`~distp3.poly.Polynomial` wraps the
results.
"""

from __future__ import annotations

import os
import random
from operator import add, le, sub

from .coeffs import PrimeField
from .poly import (
    DEGREVLEX,
    MonomialOrder,
    Polynomial,
    PolyRing,
    block_order,
    divide_exact,
)

DEFAULT_MAX_PAIRS = 10**6


class GroebnerLimitError(RuntimeError):
    """The S-pair budget ran out before the basis was complete."""


class TopDimError(RuntimeError):
    """No usable complete intersection was found inside the ideal."""


def default_max_pairs() -> int:
    return int(os.environ.get("DISTP3_MAX_PAIRS", DEFAULT_MAX_PAIRS))


# ---------- raw kernels ----------


class _KeyCache(dict):
    __slots__ = ("fn",)

    def __init__(self, fn):
        super().__init__()
        self.fn = fn

    def __missing__(self, m):
        k = self[m] = self.fn(m)
        return k


def _divides(a, b) -> bool:
    return all(map(le, a, b))


class _Engine:
    def __init__(self, field, order: MonomialOrder):
        self.mod = field.characteristic if isinstance(field, PrimeField) else 0
        self.field = field
        self.order = order
        self.key = _KeyCache(order.key).__getitem__

    def lead(self, p):
        return max(p, key=self.key)

    def monic(self, p, lm=None):
        if lm is None:
            lm = self.lead(p)
        c = p[lm]
        if c == 1:
            return p
        inv = self.field.inv(c)
        if self.mod:
            mod = self.mod
            return {m: v * inv % mod for m, v in p.items()}
        return {m: v * inv for m, v in p.items()}

    def reduce(self, p, basis, full=True):
        """Reduce dict ``p`` (consumed) by ``basis``: a list of (lm, monic terms).

        With ``full=False`` stop at the first irreducible leading monomial.
        """
        key = self.key
        mod = self.mod
        rem = {}
        while p:
            m = max(p, key=key)
            for lm, gterms in basis:
                if all(map(le, lm, m)):
                    break
            else:
                rem[m] = p.pop(m)
                if not full:
                    rem.update(p)
                    return rem
                continue
            c = p.pop(m)
            q = tuple(map(sub, m, lm))
            get = p.get
            if mod:
                c = mod - c
                for gm, gc in gterms:
                    mm = tuple(map(add, gm, q))
                    v = (get(mm, 0) + c * gc) % mod
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
            else:
                for gm, gc in gterms:
                    mm = tuple(map(add, gm, q))
                    v = get(mm, 0) - c * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
        return rem

    def _basis_entry(self, p):
        lm = self.lead(p)
        p = self.monic(p, lm)
        tail = [(m, c) for m, c in p.items() if m != lm]
        return lm, p, tail

    def spoly(self, e1, e2, lcm):
        lm1, _, tail1 = e1
        lm2, _, tail2 = e2
        q1 = tuple(map(sub, lcm, lm1))
        q2 = tuple(map(sub, lcm, lm2))
        mod = self.mod
        s = {tuple(map(add, m, q1)): c for m, c in tail1}
        get = s.get
        for m, c in tail2:
            mm = tuple(map(add, m, q2))
            v = get(mm, 0) - c
            if mod:
                v %= mod
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)
        return s

    def groebner(self, polys, max_pairs=None):
        """Reduced Gröbner basis of the dicts ``polys`` as a list of monic dicts."""
        if max_pairs is None:
            max_pairs = default_max_pairs()
        key = self.key
        entries = []  # (lm, poly, tail) for every basis element ever added
        sugar = []
        active = []  # indices into entries
        pairs = []  # [sugar, lcm key, i, j, lcm]

        def reducers():
            return [(entries[k][0], entries[k][2]) for k in active]

        def install(h, s):
            lm, p, tail = self._basis_entry(h)
            n = len(entries)
            entries.append((lm, p, tail))
            sugar.append(s)
            # Gebauer–Möller update
            cand = []
            for k in active:
                lcm = tuple(map(max, lm, entries[k][0]))
                cand.append((k, lcm))
            keep = []
            for idx, (k, lcm) in enumerate(cand):
                lmk = entries[k][0]
                coprime = all(a == 0 or b == 0 for a, b in zip(lm, lmk))
                if coprime:
                    keep.append((k, lcm, True))
                    continue
                dominated = False
                for idx2, (k2, lcm2) in enumerate(cand):
                    if idx2 == idx:
                        continue
                    if all(map(le, lcm2, lcm)):
                        if lcm2 != lcm or idx2 > idx:
                            dominated = True
                            break
                if not dominated:
                    keep.append((k, lcm, False))
            old = []
            for pr in pairs:
                _, _, i, j, lcm = pr
                if all(map(le, lm, lcm)):
                    li = tuple(map(max, entries[i][0], lm))
                    lj = tuple(map(max, entries[j][0], lm))
                    if li != lcm and lj != lcm:
                        continue
                old.append(pr)
            pairs[:] = old
            for k, lcm, coprime in keep:
                if coprime:
                    continue
                dl = sum(lcm)
                s_pair = max(
                    sugar[k] + dl - sum(entries[k][0]),
                    s + dl - sum(lm),
                )
                pairs.append([s_pair, key(lcm), k, n, lcm])
            active[:] = [k for k in active if not all(map(le, lm, entries[k][0]))]
            active.append(n)

        todo = [dict(p) for p in polys if p]
        todo.sort(key=lambda p: (max(sum(m) for m in p), len(p)))
        for p in todo:
            h = self.reduce(dict(p), reducers())
            if h:
                install(h, max(sum(m) for m in p))

        count = 0
        while pairs:
            best = min(range(len(pairs)), key=lambda t: (pairs[t][0], pairs[t][1]))
            s_pair, _, i, j, lcm = pairs[best]
            pairs[best] = pairs[-1]
            pairs.pop()
            count += 1
            if count > max_pairs:
                raise GroebnerLimitError(
                    f"S-pair budget of {max_pairs} reductions exceeded"
                )
            s = self.spoly(entries[i], entries[j], lcm)
            if not s:
                continue
            h = self.reduce(s, reducers(), full=False)
            if h:
                install(h, s_pair)

        return self.interreduce([entries[k][1] for k in active])

    def interreduce(self, polys):
        """Reduced basis from a Gröbner basis given as dicts."""
        items = [(self.lead(p), p) for p in polys if p]
        minimal = []
        for lm, p in sorted(items, key=lambda t: self.key(t[0])):
            if not any(_divides(lm2, lm) for lm2, _ in minimal):
                minimal.append((lm, p))
        reducers = [
            (lm, [(m, c) for m, c in self.monic(p, lm).items() if m != lm])
            for lm, p in minimal
        ]
        out = []
        for idx, (lm, p) in enumerate(minimal):
            others = reducers[:idx] + reducers[idx + 1:]
            tail = {m: c for m, c in p.items() if m != lm}
            tail = self.reduce(tail, others)
            tail[lm] = p[lm]
            out.append(self.monic(tail, lm))
        out.sort(key=lambda p: self.key(self.lead(p)))
        return out


# ---------- public objects ----------


class GroebnerBasis:
    """A reduced Gröbner basis: monic elements sorted by increasing leading monomial."""

    def __init__(self, ring: PolyRing, elements, order: MonomialOrder = DEGREVLEX):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self._engine = _Engine(ring.field, order)
        self._reducers = []
        for g in self.elements:
            lm, lc = g.leading_term(order)
            inv = ring.field.inv(lc)
            tail = [(m, c * inv) for m, c in g._terms.items() if m != lm]
            if isinstance(ring.field, PrimeField):
                tail = [(m, c % ring.field.characteristic) for m, c in tail]
            self._reducers.append((lm, tail))

    @property
    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [lm for lm, _ in self._reducers]

    def reduce(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            from .poly import FieldMismatchError

            raise FieldMismatchError(f"{p.ring} does not match {self.ring}")
        return Polynomial(self.ring, self._engine.reduce(dict(p._terms), self._reducers))

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def is_unit(self) -> bool:
        return any(sum(lm) == 0 for lm in self.leading_monomials)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(str(g) for g in self.elements)}], {self.order!r})"


class Ideal:
    """A polynomial ideal given by generators.

    The reduced Gröbner basis for each monomial order is computed on demand and
    cached on the instance; the cache only ever receives a deterministic value,
    so sharing an ``Ideal`` between threads is harmless.
    """

    def __init__(self, generators, ring: PolyRing | None = None):
        gens = [g for g in generators if g]
        if ring is None:
            if not gens:
                raise ValueError("an ideal with no nonzero generators needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                from .poly import FieldMismatchError

                raise FieldMismatchError(f"generator over {g.ring}, ideal over {ring}")
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    @classmethod
    def parse(cls, texts, ring: PolyRing | None = None) -> Ideal:
        from .poly import P3

        ring = P3 if ring is None else ring
        return cls([ring.parse(t) for t in texts], ring)

    @classmethod
    def unit(cls, ring: PolyRing) -> Ideal:
        I = cls([ring.one], ring)
        I._gb[DEGREVLEX] = GroebnerBasis(ring, [ring.one])
        return I

    @classmethod
    def irrelevant(cls, ring: PolyRing) -> Ideal:
        return cls(ring.gens, ring)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def groebner(self, order: MonomialOrder = DEGREVLEX, max_pairs=None) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self, order, max_pairs=max_pairs)
            self._gb[order] = gb
        return gb

    def _seed(self, gb: GroebnerBasis) -> Ideal:
        self._gb[gb.order] = gb
        return self

    def __contains__(self, p: Polynomial) -> bool:
        return self.groebner().contains(p)

    def contains(self, other) -> bool:
        """``other`` (a polynomial or an ideal) lies in this ideal."""
        if isinstance(other, Ideal):
            G = self.groebner()
            return all(G.contains(g) for g in other.generators)
        return other in self

    def issubset(self, other: Ideal) -> bool:
        return other.contains(self)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner().elements == other.groebner().elements

    __hash__ = None

    def change_field(self, field) -> Ideal:
        ring = self.ring.with_field(field)
        return Ideal([g.change_field(field) for g in self.generators], ring)

    def to_json(self) -> list[str]:
        return [str(g) for g in self.generators]

    @classmethod
    def from_json(cls, data, ring: PolyRing | None = None) -> Ideal:
        return cls.parse(list(data), ring)

    def __repr__(self):
        return f"Ideal([{', '.join(str(g) for g in self.generators)}])"


# ---------- operations ----------


def buchberger(I: Ideal, order: MonomialOrder = DEGREVLEX, max_pairs=None) -> GroebnerBasis:
    """The reduced Gröbner basis of ``I`` with respect to ``order``."""
    if I.is_zero():
        raise ValueError("the zero ideal has no nonzero Gröbner basis")
    engine = _Engine(I.ring.field, order)
    raw = engine.groebner([g._terms for g in I.generators], max_pairs=max_pairs)
    return GroebnerBasis(I.ring, [Polynomial(I.ring, p) for p in raw], order)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.reduce(p)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """``(L/lt(f)) f - (L/lt(g)) g`` with ``L`` the lcm of the leading monomials."""
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = tuple(map(max, mf, mg))
    ring = f.ring
    a = f.mul_monomial(tuple(map(sub, lcm, mf))).scale(ring.field.inv(cf))
    b = g.mul_monomial(tuple(map(sub, lcm, mg))).scale(ring.field.inv(cg))
    return a - b


def satisfies_buchberger_criterion(G: GroebnerBasis) -> bool:
    """Every S-polynomial of ``G`` reduces to zero modulo ``G``."""
    els = G.elements
    return all(
        not G.reduce(s_polynomial(els[i], els[j], G.order))
        for i in range(len(els))
        for j in range(i + 1, len(els))
    )


def _extend(ring: PolyRing, name: str = "t") -> PolyRing:
    names = ring.names
    while name in names:
        name = name + "_"
    return ring.with_names((name,) + names)


def eliminate(I: Ideal, variables, max_pairs=None) -> Ideal:
    """``I`` intersected with the subring free of ``variables``.

    The result lives in the ring on the remaining variables and carries its
    reduced degrevlex basis, which is read off the block-order basis.
    """
    ring = I.ring
    elim = sorted({ring.index(v) if isinstance(v, str) else int(v) for v in variables})
    keep = [i for i in range(ring.nvars) if i not in elim]
    sub_ring = ring.with_names([ring.names[i] for i in keep])
    if not elim:
        return Ideal(I.generators, ring)
    perm = elim + keep  # new position k holds old variable perm[k]
    positions = [0] * ring.nvars
    for k, old in enumerate(perm):
        positions[old] = k
    work_ring = ring.with_names([ring.names[i] for i in perm])
    gens = [g.change_ring(work_ring, positions) for g in I.generators]
    order = block_order(len(elim))
    engine = _Engine(ring.field, order)
    raw = engine.groebner([g._terms for g in gens], max_pairs=max_pairs)
    ne = len(elim)
    kept = []
    for p in raw:
        if all(not any(m[:ne]) for m in p):
            kept.append(Polynomial(sub_ring, {m[ne:]: c for m, c in p.items()}))
    if not kept:
        return Ideal([], sub_ring)
    out = Ideal(kept, sub_ring)
    return out._seed(GroebnerBasis(sub_ring, kept, DEGREVLEX))


def intersect(I: Ideal, J: Ideal, max_pairs=None) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1 - t)*J``."""
    if I.ring != J.ring:
        from .poly import FieldMismatchError

        raise FieldMismatchError("ideals over different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal([], ring)
    big = _extend(ring)
    shift = list(range(1, ring.nvars + 1))
    t = big.gen(0)
    gens = [t * f.change_ring(big, shift) for f in I.generators]
    gens += [(big.one - t) * g.change_ring(big, shift) for g in J.generators]
    res = eliminate(Ideal(gens, big), [0], max_pairs=max_pairs)
    out = Ideal(res.generators, ring)
    return out._seed(GroebnerBasis(ring, [Polynomial(ring, g._terms) for g in res.generators]))


def _as_ideal(J, ring) -> Ideal:
    if isinstance(J, Ideal):
        return J
    if isinstance(J, Polynomial):
        return Ideal([J], ring)
    return Ideal(list(J), ring)


def _colon_principal(I: Ideal, g: Polynomial, max_pairs=None) -> Ideal:
    ring = I.ring
    if g.is_constant():
        return I
    if g in I:
        return Ideal.unit(ring)
    inter = intersect(I, Ideal([g], ring), max_pairs=max_pairs)
    quotients = [divide_exact(h, g) for h in inter.generators]
    engine = _Engine(ring.field, DEGREVLEX)
    raw = engine.interreduce([q._terms for q in quotients])
    elems = [Polynomial(ring, p) for p in raw]
    return Ideal(elems, ring)._seed(GroebnerBasis(ring, elems))


def colon(I: Ideal, J, max_pairs=None) -> Ideal:
    """The ideal quotient ``I : J = {p : p*J ⊆ I}``."""
    J = _as_ideal(J, I.ring)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.generators:
        part = _colon_principal(I, g, max_pairs=max_pairs)
        if part.is_unit():
            continue
        result = part if result is None else intersect(result, part, max_pairs=max_pairs)
    return Ideal.unit(I.ring) if result is None else result


def saturate(I: Ideal, J, max_pairs=None, max_steps: int = 64) -> Ideal:
    """``I : J^∞``, iterating colons until ``K : J = K``."""
    J = _as_ideal(J, I.ring)
    current = I
    for _ in range(max_steps):
        nxt = colon(current, J, max_pairs=max_pairs)
        if current.contains(nxt):
            return current
        current = nxt
    raise GroebnerLimitError(f"saturation did not stabilise within {max_steps} colons")


def saturate_irrelevant(I: Ideal, max_pairs=None) -> Ideal:
    """Saturate with respect to the irrelevant ideal ``(x0, ..., xn)``."""
    return saturate(I, Ideal.irrelevant(I.ring), max_pairs=max_pairs)


def _random_element(I: Ideal, degree: int, rng: random.Random) -> Polynomial:
    ring = I.ring
    total = ring.zero
    for g in I.generators:
        dg = g.degree
        if dg > degree:
            continue
        mult = ring.random_form(degree - dg, rng)
        total = total + mult * g
    return total


def top_dim_part(
    I: Ideal,
    expected_codim: int = 2,
    seed: int = 0,
    retries: int = 8,
    max_pairs=None,
) -> Ideal:
    """Equidimensional codimension-2 part of a saturated ideal, by double linkage.

    Two random elements ``f, g`` of ``I`` of a common degree form a complete
    intersection ``J``; then ``J : (J : I)`` is the unmixed part of ``I``.  The
    result must keep the degree of ``I`` and contain ``I``, otherwise another
    pair is drawn.
    """
    from .hilbert import hilbert_polynomial

    if expected_codim != 2:
        raise ValueError("only codimension 2 (curves in P^3) is supported")
    if not I.is_homogeneous():
        raise ValueError("top_dim_part needs a homogeneous ideal")
    hp = hilbert_polynomial(I)
    if hp.degree != I.ring.nvars - 1 - expected_codim:
        raise ValueError(
            f"expected a scheme of dimension {I.ring.nvars - 1 - expected_codim}, "
            f"Hilbert polynomial is {hp}"
        )
    target = hp.leading_coefficient
    degs = sorted(g.degree for g in I.generators)
    base = degs[1] if len(degs) > 1 else degs[0]
    rng = random.Random(seed)
    for attempt in range(retries):
        D = base + attempt // 2
        f = _random_element(I, D, rng)
        g = _random_element(I, D, rng)
        if not f or not g:
            continue
        J = Ideal([f, g], I.ring)
        hj = hilbert_polynomial(J, max_pairs=max_pairs)
        if hj.degree != 1 or hj.leading_coefficient != D * D:
            continue
        link = colon(J, I, max_pairs=max_pairs)
        L = colon(J, link, max_pairs=max_pairs)
        hl = hilbert_polynomial(L, max_pairs=max_pairs)
        if hl.degree == 1 and hl.leading_coefficient == target and L.contains(I):
            return L
    raise TopDimError(
        f"no regular sequence of degree >= {base} in the ideal gave an unmixed "
        f"part after {retries} attempts"
    )

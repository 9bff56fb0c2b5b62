"""Hilbert series, Hilbert polynomials and the invariants of projective schemes.

Run: python3 demos/02_hilbert_polynomials.py
"""

import random

from distp3 import Ideal, P3, ci_invariants, hilbert_function, hilbert_polynomial, scheme_invariants
from distp3.hilbert import hilbert_numerator

tc = Ideal.parse(["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"])
print("Hilbert series numerator:", hilbert_numerator(tc))
print("Hilbert polynomial:", hilbert_polynomial(tc))
print("Hilbert function by linear algebra:", [hilbert_function(tc, m) for m in range(6)])
print("invariants:", scheme_invariants(tc))

# Complete intersections: the Hilbert polynomial recovers degree and genus.
rng = random.Random(1)
for a, b in [(1, 4), (2, 2), (2, 3)]:
    I = Ideal([P3.random_form(a, rng), P3.random_form(b, rng)])
    inv = scheme_invariants(I)
    print(f"CI({a},{b}): P = {inv.hilbert_polynomial}, (deg, genus) = "
          f"{(inv.degree, inv.arithmetic_genus)}, formula {ci_invariants(a, b)}")

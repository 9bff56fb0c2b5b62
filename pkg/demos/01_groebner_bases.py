"""Polynomials, Gröbner bases and ideal operations on four variables.

Run: python3 demos/01_groebner_bases.py
"""

from distp3 import Ideal, P3, colon, intersect, normal_form, parse, saturate_irrelevant

# Polynomials are parsed from plain text and printed canonically.
p = parse("(x0 + x1)*(x0 - x1) + 1/2*x3^2")
print("p =", p)

# The twisted cubic and its reduced degrevlex basis.
tc = Ideal.parse(["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"])
G = tc.groebner()
print("twisted cubic basis:", [str(g) for g in G])
print("normal form of x1^2:", normal_form(parse("x1^2"), G))

# Intersections and ideal quotients.
print("(x0, x1) ∩ (x2, x3) =", intersect(Ideal.parse(["x0", "x1"]), Ideal.parse(["x2", "x3"])))
print("(x0^2, x0*x1) : x0 =", colon(Ideal.parse(["x0^2", "x0*x1"]), P3.gen(0)))

# Saturation removes components supported at the irrelevant ideal.
print("saturation of (x0^2, x0*x1, x0*x2, x0*x3):",
      saturate_irrelevant(Ideal.parse(["x0^2", "x0*x1", "x0*x2", "x0*x3"])))

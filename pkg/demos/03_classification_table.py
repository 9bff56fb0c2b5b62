"""The admissible Chern classes of degree-3 distributions, under two policies.

Run: python3 demos/03_classification_table.py
"""

from distp3.classify import ConstraintPolicy, admissible, enumerate as classify

print(classify(3).render("md"))

# The strict policy also applies c3 <= c2^2 when c2 = 3.
print("strict c2 = 3 row:", classify(3, ConstraintPolicy.strict()).row(8).c3)

for triple in [(-1, 3, 15), (-1, 3, 17), (-1, 5, 27)]:
    ok, why = admissible(*triple)
    print(triple, "admissible" if ok else f"rejected by {why}")

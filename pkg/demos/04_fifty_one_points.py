"""A generic degree-3 distribution is singular at exactly 51 points.

Run: python3 demos/04_fifty_one_points.py
"""

import json

from distp3 import GF, P3, analyze
from distp3.distribution import generic_plucker_form

for field in (GF(32003), P3.field):
    form = generic_plucker_form(0, degree=3, nterms=3, ring=P3.with_field(field))
    report = analyze(form)
    s = report.scheme
    print(f"over {field.name}: singular scheme of dimension {s.saturated_dimension}, "
          f"length {s.residual_length}, Chern classes {tuple(report.chern)}")

print(json.dumps(report.to_json(), indent=2))

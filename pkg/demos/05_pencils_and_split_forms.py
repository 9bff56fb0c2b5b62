"""Pencils give integrable distributions with a singular complete intersection
curve; contracting with vector fields gives a split tangent sheaf.

Run: python3 demos/05_pencils_and_split_forms.py
"""

from distp3 import GF, P3, analyze
from distp3.distribution import generic_pencil, generic_split_form

R = P3.with_field(GF(32003))
examples = {
    "pencil(x0, quartic)": generic_pencil(1, 4, ring=R, linear_x0=True),
    "pencil(quadric, cubic)": generic_pencil(2, 3, ring=R),
    "split form": generic_split_form(0, ring=R),
}
for name, form in examples.items():
    r = analyze(form)
    s = r.scheme
    print(f"{name}: curve (deg, genus) = ({s.curve_degree}, {s.curve_genus}), "
          f"{s.residual_length} residual points, Chern {tuple(r.chern)}, "
          f"h0(T) = {r.h0_tangent} -> {r.stability}, integrable {r.integrable}")
    print(f"    tangent Hilbert polynomial {r.tangent_hilbert_polynomial}, "
          f"consistent with the singular scheme: {r.hilbert_consistent}")

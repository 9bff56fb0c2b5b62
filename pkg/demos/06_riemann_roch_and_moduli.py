"""Riemann-Roch on P^3, the closed-form tangent Hilbert polynomial, and a
moduli dimension count.

Run: python3 demos/06_riemann_roch_and_moduli.py
"""

from distp3 import chi_tp3, hrr_chi, moduli_dim_335, tangent_hilbert_polynomial

print("chi(TP^3(t)) =", chi_tp3())
print("Riemann-Roch with (r, c1, c2, c3) = (3, 4, 6, 4):", hrr_chi(3, 4, 6, 4))

# The closed form agrees with Riemann-Roch only in degrees 2 and 3.
for d in range(6):
    diff = hrr_chi(2, 2 - d, 3, 5) - tangent_hilbert_polynomial(d, 3, 5)
    print(f"d = {d}: Riemann-Roch minus closed form = {diff}")

print()
print(moduli_dim_335())

#!/usr/bin/env python3
"""The coefficient table and the two crossing-number lower bounds.

Stacking the per-cap density rows gives a linear bound
cr >= t*m - alpha*n + beta, and a sampling argument turns it into the
cubic bound cr >= 4t^3/(27 alpha^2) * m^3/n^2 once m >= 3 alpha/(2t) * n.
Everything is exact rational until printed.

Run: python3 demos/05_crossing_lemma.py
"""

from fractions import Fraction

from layerlens import (
    auxiliary_lower_bound,
    crossing_lemma_coefficient,
    crossing_lower_bound,
    crossing_profile,
    default_table,
    density_threshold,
    density_upper_bound,
    general_k_family,
    planar6_family,
    quasiplanar_threshold,
    special_s,
)

table = default_table()
print("coefficient table (cap i: m <= alpha_i n - beta_i):")
for i, (a, b) in enumerate(zip(table.alpha, table.beta)):
    print(f"  cap {i}: {a} n - {b}")
print("alpha =", table.alpha_sum, " beta =", table.beta_sum)

coeff = crossing_lemma_coefficient(table)
print()
print(f"cubic bound coefficient 4t^3/(27 alpha^2) = {coeff} = {float(coeff):.6f}")
print(f"applies when m >= {density_threshold(table)} n")

print()
print("checking both bounds against actual drawings:")
for name, d in [
    ("planar6_family(2)", planar6_family(2)),
    ("special_s()", special_s()),
    ("general_k_family(20, 18)", general_k_family(20, 18)),
]:
    total = crossing_profile(d).total
    linear = max(Fraction(0), auxiliary_lower_bound(d.n, d.m, table))
    cubic = crossing_lower_bound(d.n, d.m, table)
    cubic_str = f"{float(cubic):8.2f}" if cubic is not None else "   (n/a)"
    print(f"  {name:26} n={d.n:>3} m={d.m:>3} crossings={total:>4}"
          f"  linear>={float(linear):7.2f}  cubic>={cubic_str}")

print()
print("density upper bound for large caps: m <= max(125/48, 125/96 sqrt(k)) n")
for k in (6, 8, 18, 50):
    b = density_upper_bound(100, k, table)
    print(f"  k={k:>2}: m <= {b.coefficient_str()} n   (quasiplanarity threshold h = {quasiplanar_threshold(k)})")

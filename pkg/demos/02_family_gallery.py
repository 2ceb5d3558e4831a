#!/usr/bin/env python3
"""Gallery of the extremal families and their closed-form densities.

Each family is the densest known construction for its crossing cap:
chains of K_{2,3} or K_{3,3} bricks, band graphs, augmented chains, and
the one exceptional 8-vertex drawing that beats the generic 5-planar
bound.

Run: python3 demos/02_family_gallery.py
"""

from fractions import Fraction

from layerlens import (
    crossing_profile,
    general_k_family,
    opt2planar,
    planar3_family,
    planar4_family,
    planar5_family,
    planar6_family,
    special_s,
)

ROWS = [
    ("opt2planar(4)", opt2planar(4), 2, "5/3 n - 7/3"),
    ("planar3_family(8)", planar3_family(8), 3, "2n - 4"),
    ("planar4_family(4)", planar4_family(4), 4, "2n - 3"),
    ("planar5_family(4)", planar5_family(4), 5, "9/4 n - 9/2"),
    ("planar6_family(4)", planar6_family(4), 6, "5/2 n - 6"),
    ("general_k_family(12, 8)", general_k_family(12, 8), 8, "floor(sqrt(k/2)) n - O(k)"),
    ("special_s()", special_s(), 5, "14 > 9/4*8 - 9/2 = 13.5"),
]

FORMULAS = {
    "5/3 n - 7/3": lambda n: Fraction(5, 3) * n - Fraction(7, 3),
    "2n - 4": lambda n: Fraction(2 * n - 4),
    "2n - 3": lambda n: Fraction(2 * n - 3),
    "9/4 n - 9/2": lambda n: Fraction(9, 4) * n - Fraction(9, 2),
    "5/2 n - 6": lambda n: Fraction(5, 2) * n - 6,
}

print(f"{'family':26} {'n':>3} {'m':>3}  {'max/edge':>8}  density")
for name, d, cap, formula in ROWS:
    prof = crossing_profile(d)
    marker = "ok" if prof.max_per_edge <= cap else "OVER CAP"
    note = formula
    if formula in FORMULAS:
        note += f" = {FORMULAS[formula](d.n)}"
    print(f"{name:26} {d.n:>3} {d.m:>3}  {prof.max_per_edge:>5}/{cap}   {note} [{marker}]")

print()
print("the exceptional drawing is the 4x4 grid minus its two long corners:")
s = special_s()
grid = {(i, x) for i in range(1, 5) for x in range(1, 5)}
print("missing edges:", sorted(grid - set(s.edges)))
prof = crossing_profile(s)
print("edge (4,4) is crossing-free:", prof.per_edge[(4, 4)] == 0)
print("edges (2,4) and (4,2) carry five crossings:",
      prof.per_edge[(2, 4)], prof.per_edge[(4, 2)])

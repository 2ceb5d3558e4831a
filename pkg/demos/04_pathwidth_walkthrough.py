#!/usr/bin/env python3
"""Building a width-(k+1) path decomposition from the edge order.

Edges are ordered by top index, then bottom index.  The bag of an edge
holds its two endpoints plus the related bottom vertices: those touching
an edge that crosses it, whose own incidence interval strictly spans the
position.  A drawing with at most k crossings per edge gets at most k
related vertices per bag, hence width at most k+1.

Run: python3 demos/04_pathwidth_walkthrough.py
"""

from layerlens import (
    build_path_decomposition,
    crossing_profile,
    opt2planar,
    planar5_family,
    related_vertices,
    validate_decomposition,
)
from layerlens.decomposition import edge_order

d = opt2planar(2)
order = edge_order(d)
print(f"chain of two K_{{2,3}} bricks: n={d.n} m={d.m}")
print("edge order:", " ".join(f"{pos}:(u{i},v{x})" for pos, (i, x) in enumerate(order, 1)))

print()
print("related bottom vertices per position:")
for pos in range(1, len(order) + 1):
    rel = related_vertices(d, pos)
    i, x = order[pos - 1]
    tail = ", ".join(f"v{y}" for y in sorted(rel)) or "-"
    print(f"  {pos:>2} (u{i},v{x}): {tail}")

print()
pd = build_path_decomposition(d)
print(f"decomposition: {len(pd.bags)} bags, width {pd.width}, orientation {pd.orientation}")
for idx, bag in enumerate(pd.bags, 1):
    print(f"  B{idx}: " + " ".join(sorted(f"{l}{i}" for l, i in bag)))

report = validate_decomposition(d, pd)
print("valid:", report.valid)

print()
print("width tracks the crossing cap on denser drawings:")
for beta in (2, 3, 4, 5):
    dd = planar5_family(beta)
    pdd = build_path_decomposition(dd)
    cap = crossing_profile(dd).max_per_edge
    ok = validate_decomposition(dd, pdd).valid
    print(f"  planar5_family({beta}): max/edge={cap}, width={pdd.width} <= {cap + 1}, valid={ok}")

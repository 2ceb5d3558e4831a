#!/usr/bin/env python3
"""Tour of the drawing model: crossings, planarity caps, bricks.

A two-layer drawing is just two layer sizes and an edge set over index
positions; all geometry reduces to index interleaving.  This script walks
through the crossing profile of small complete grids, the k-planarity and
quasiplanarity predicates, and the brick structure of an extremal chain.

Run: python3 demos/01_crossing_basics.py
"""

from layerlens import (
    Drawing,
    brick_decomposition,
    crossing_profile,
    edges_cross,
    is_h_quasiplanar,
    is_k_planar,
    mutually_crossing_number,
    opt2planar,
)

print("=== two edges cross iff their endpoints interleave ===")
print("(1,2) vs (2,1):", edges_cross((1, 2), (2, 1)), " <- interleaved")
print("(1,1) vs (2,2):", edges_cross((1, 1), (2, 2)), "<- nested")
print("(1,1) vs (1,2):", edges_cross((1, 1), (1, 2)), "<- share a vertex, never cross")

print()
print("=== crossing profile of the complete grid K_{3,3} ===")
k33 = Drawing(3, 3, frozenset((i, x) for i in (1, 2, 3) for x in (1, 2, 3)))
prof = crossing_profile(k33)
print(f"n={k33.n} m={k33.m} total crossings={prof.total} max per edge={prof.max_per_edge}")
for (i, x), c in sorted(prof.per_edge.items()):
    print(f"  (u{i}, v{x}): {c}")
print("per-edge counts sum to twice the total:", sum(prof.per_edge.values()) == 2 * prof.total)

print()
print("=== planarity caps ===")
print("K_{3,3} is 4-planar:", is_k_planar(k33, 4))
print("K_{3,3} is 3-planar:", is_k_planar(k33, 3))
print("largest pairwise crossing set in K_{3,3}:", mutually_crossing_number(k33))
print("K_{3,3} is 3-quasiplanar:", is_h_quasiplanar(k33, 3))

print()
print("=== bricks: pieces between crossing-free edges ===")
chain = opt2planar(3)
bd = brick_decomposition(chain)
print(f"chain of 3 K_{{2,3}} bricks: n={chain.n} m={chain.m}")
print("crossing-free edges:", ", ".join(f"(u{i},v{x})" for i, x in bd.planar_edges))
for t, brick in enumerate(bd.bricks, 1):
    sub = brick.drawing
    print(f"brick {t}: window [{brick.i_lo},{brick.i_hi} | {brick.x_lo},{brick.x_hi}]"
          f" -> induced {sub.p}x{sub.q} drawing with {sub.m} edges")

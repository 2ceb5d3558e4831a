"""Reference implementations used to cross-check the fast paths.

Deliberately naive: a quadratic pair loop for the crossing profile, an
exponential clique search for the mutually crossing number, and a direct
caterpillar-forest test.  They share nothing with the optimized code
beyond the drawing type itself, so the two routes stay independent.
"""

from __future__ import annotations

from .core import CrossingProfile, Drawing
from .search import BipartiteGraph

__all__ = [
    "brute_force_profile",
    "brute_force_mutually_crossing",
    "is_caterpillar_forest",
]


def brute_force_profile(d: Drawing) -> CrossingProfile:
    """Crossing profile by checking every unordered edge pair."""
    edges = d.sorted_edges()
    m = len(edges)
    per = {e: 0 for e in edges}
    total = 0
    for a in range(m):
        ia, xa = edges[a]
        for b in range(a + 1, m):
            ib, xb = edges[b]
            if (ia - ib) * (xa - xb) < 0:
                per[edges[a]] += 1
                per[edges[b]] += 1
                total += 1
    return CrossingProfile(per, total, max(per.values()) if per else 0)


def brute_force_mutually_crossing(d: Drawing) -> int:
    """Largest pairwise crossing edge set via clique search on the
    crossing graph.  Exponential; intended for m up to ~20."""
    edges = d.sorted_edges()
    m = len(edges)
    if m == 0:
        return 0
    adj = [0] * m
    for a in range(m):
        ia, xa = edges[a]
        for b in range(a + 1, m):
            ib, xb = edges[b]
            if (ia - ib) * (xa - xb) < 0:
                adj[a] |= 1 << b
                adj[b] |= 1 << a

    best = 0

    def extend(cand: int, size: int) -> None:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        extend(cand & adj[v], size + 1)
        extend(cand ^ low, size)

    extend((1 << m) - 1, 0)
    return best


def is_caterpillar_forest(g: BipartiteGraph) -> bool:
    """True iff every component is a tree whose non-leaf vertices induce a
    path.  These are exactly the graphs drawable on two layers without any
    crossing, which makes this an independent oracle for minimax_k == 0.
    """
    verts = [("u", i) for i in range(1, g.u_count + 1)]
    verts += [("v", x) for x in range(1, g.v_count + 1)]
    nbrs: dict[tuple[str, int], list[tuple[str, int]]] = {v: [] for v in verts}
    for i, x in g.edges:
        nbrs[("u", i)].append(("v", x))
        nbrs[("v", x)].append(("u", i))

    seen: set[tuple[str, int]] = set()
    for start in verts:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        head = 0
        while head < len(comp):
            for w in nbrs[comp[head]]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
            head += 1
        comp_edges = sum(len(nbrs[v]) for v in comp) // 2
        if comp_edges != len(comp) - 1:
            return False  # cycle
        spine = [v for v in comp if len(nbrs[v]) >= 2]
        for v in spine:
            if sum(1 for w in nbrs[v] if len(nbrs[w]) >= 2) > 2:
                return False
    return True

"""Exact extremal search over two-layer drawings on small vertex counts.

``max_density`` answers: across every split p + q = n and every edge
subset of the p x q grid, how many edges can a drawing have under a
k-planarity or h-quasiplanarity cap?  It is a depth-first branch and
bound over grid cells in lexicographic (top, bottom) order with

* symmetry reduction: only splits with p <= q (layer swap), plus a
  partial canonicalization under 180 degree rotation of the grid,
* an admissible bound: the current edge count plus the number of future
  cells that are still individually addable,
* incremental state: per-edge crossing counters with a saturated-edge
  bitmask (k-planar), or chain lengths of pairwise crossing sets
  (quasiplanar).

``minimax_k`` minimizes the maximum per-edge crossing count of an
abstract bipartite graph over all orderings of both layers; it is a
factorial search and therefore holds for ten vertices at most.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .core import Drawing, Edge

__all__ = [
    "KPlanar",
    "Quasiplanar",
    "Constraint",
    "SearchStats",
    "SearchResult",
    "BipartiteGraph",
    "complete_bipartite",
    "max_density",
    "minimax_k",
    "random_drawing",
    "MAX_DENSITY_N",
    "MINIMAX_MAX_VERTICES",
]

MAX_DENSITY_N = 14
MINIMAX_MAX_VERTICES = 10


@dataclass(frozen=True)
class KPlanar:
    """Constraint: every edge crossed at most k times."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be non-negative")

    @property
    def label(self) -> str:
        return f"k-planar(k={self.k})"


@dataclass(frozen=True)
class Quasiplanar:
    """Constraint: no h pairwise crossing edges."""

    h: int

    def __post_init__(self) -> None:
        if self.h < 2:
            raise ValueError("h must be at least 2")

    @property
    def label(self) -> str:
        return f"quasiplanar(h={self.h})"


Constraint = KPlanar | Quasiplanar


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    millis: float


@dataclass(frozen=True)
class SearchResult:
    best_m: int
    witness: Drawing
    stats: SearchStats


@dataclass(frozen=True)
class BipartiteGraph:
    """An abstract (unordered) bipartite graph with labels 1..u_count and
    1..v_count.  Drawing questions quantify over the layer orderings."""

    u_count: int
    v_count: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.u_count < 1 or self.v_count < 1:
            raise ValueError("part sizes must be positive")
        if not isinstance(self.edges, frozenset):
            listed = [tuple(e) for e in self.edges]
            frozen = frozenset(listed)
            if len(frozen) != len(listed):
                raise ValueError("duplicate edges are not allowed")
            object.__setattr__(self, "edges", frozen)
        for u, v in self.edges:
            if not (1 <= u <= self.u_count and 1 <= v <= self.v_count):
                raise ValueError(f"edge {(u, v)} outside the vertex ranges")

    @property
    def n(self) -> int:
        return self.u_count + self.v_count


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    """K_{a,b}."""
    return BipartiteGraph(a, b, frozenset((u, v) for u in range(1, a + 1) for v in range(1, b + 1)))


# ---------------------------------------------------------------------------
# Branch and bound per split
# ---------------------------------------------------------------------------


def _grid_cells(p: int, q: int) -> list[Edge]:
    return [(i, x) for i in range(1, p + 1) for x in range(1, q + 1)]


def _cross_masks(cells: list[Edge]) -> list[int]:
    n = len(cells)
    masks = [0] * n
    for a in range(n):
        ia, xa = cells[a]
        for b in range(a + 1, n):
            ib, xb = cells[b]
            if (ia - ib) * (xa - xb) < 0:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return masks


def _search_split(p: int, q: int, constraint: Constraint, start_best: int) -> tuple[int, list[Edge] | None, int]:
    """Best edge count over subsets of the p x q grid, strictly above
    ``start_best``; returns (best, cells or None if no improvement, nodes).

    The DFS decides cells in lexicographic order, include branch first.
    Cells that cross nothing are always included: adding them never
    violates either constraint and never hurts the objective.

    Rotation canonicalization: the 180 degree rotation maps cell t to cell
    N-1-t and preserves both constraints, so each drawing and its rotation
    are interchangeable.  Scanning mirror pairs from the innermost outward
    (the order in which the DFS completes them), the first unequal pair may
    only have the later cell included, which halves the symmetric part of
    the tree.
    """
    cells = _grid_cells(p, q)
    n_cells = len(cells)
    cross = _cross_masks(cells)
    decisions = [False] * n_cells
    state = [0] * n_cells  # crossing counters (k-planar) or chain lengths (quasi)
    nodes = 0
    best = start_best
    best_cells: list[Edge] | None = None

    if isinstance(constraint, KPlanar):
        k = constraint.k

        def rec(pos: int, m: int, chosen: int, sat: int, eq: bool) -> None:
            nonlocal nodes, best, best_cells
            nodes += 1
            if pos == n_cells:
                if m > best:
                    best = m
                    best_cells = [cells[t] for t in range(n_cells) if decisions[t]]
                return
            if m + (n_cells - pos) <= best:
                return
            cap = m
            for t in range(pos, n_cells):
                cm = cross[t]
                if not cm & sat and (cm & chosen).bit_count() <= k:
                    cap += 1
                    if cap > best:
                        break
            if cap <= best:
                return

            mirror = n_cells - 1 - pos
            eq_inc = eq
            eq_exc = eq
            force_include = False
            if eq and mirror < pos:
                if decisions[mirror]:
                    force_include = True
                else:
                    eq_inc = False

            cm = cross[pos]
            if not cm & sat and (cm & chosen).bit_count() <= k:
                cnt = (cm & chosen).bit_count()
                newsat = sat
                if cnt == k:
                    newsat |= 1 << pos
                state[pos] = cnt
                touched = []
                mm = cm & chosen
                while mm:
                    low = mm & -mm
                    b = low.bit_length() - 1
                    mm ^= low
                    state[b] += 1
                    if state[b] == k:
                        newsat |= 1 << b
                    touched.append(b)
                decisions[pos] = True
                rec(pos + 1, m + 1, chosen | (1 << pos), newsat, eq_inc)
                decisions[pos] = False
                for b in touched:
                    state[b] -= 1
            if cm != 0 and not force_include:
                rec(pos + 1, m, chosen, sat, eq_exc)

        rec(0, 0, 0, 0, True)
        return best, best_cells, nodes

    hcap = constraint.h - 1  # longest allowed pairwise crossing chain

    def chain_if_added(cell: int, chosen: int) -> int:
        mm = cross[cell] & chosen
        longest = 0
        while mm:
            low = mm & -mm
            b = low.bit_length() - 1
            mm ^= low
            if state[b] > longest:
                longest = state[b]
        return longest + 1

    def recq(pos: int, m: int, chosen: int, eq: bool) -> None:
        nonlocal nodes, best, best_cells
        nodes += 1
        if pos == n_cells:
            if m > best:
                best = m
                best_cells = [cells[t] for t in range(n_cells) if decisions[t]]
            return
        if m + (n_cells - pos) <= best:
            return
        cap = m
        for t in range(pos, n_cells):
            if chain_if_added(t, chosen) <= hcap:
                cap += 1
                if cap > best:
                    break
        if cap <= best:
            return

        mirror = n_cells - 1 - pos
        eq_inc = eq
        eq_exc = eq
        force_include = False
        if eq and mirror < pos:
            if decisions[mirror]:
                force_include = True
            else:
                eq_inc = False

        chain = chain_if_added(pos, chosen)
        if chain <= hcap:
            state[pos] = chain
            decisions[pos] = True
            recq(pos + 1, m + 1, chosen | (1 << pos), eq_inc)
            decisions[pos] = False
        if cross[pos] != 0 and not force_include:
            recq(pos + 1, m, chosen, eq_exc)

    recq(0, 0, 0, True)
    return best, best_cells, nodes


def _split_job(args: tuple[int, int, Constraint]) -> tuple[int, list[Edge] | None, int]:
    p, q, constraint = args
    return _search_split(p, q, constraint, 0)


def max_density(n: int, constraint: Constraint, threads: int = 1) -> SearchResult:
    """Exact maximum edge count of an n-vertex two-layer drawing under the
    given constraint, with a witness drawing attaining it.

    Splits with p <= q are searched in increasing p; the running best is
    carried across splits as the incumbent.  ``best_m`` does not depend on
    the thread count; with threads > 1 the splits run in separate
    processes (each from an incumbent of 0) and the witness is taken from
    the smallest p attaining the optimum, which matches the sequential
    choice.
    """
    if not 2 <= n <= MAX_DENSITY_N:
        raise ValueError(f"n must be between 2 and {MAX_DENSITY_N} (practical search range)")
    if threads < 1:
        raise ValueError("threads must be positive")

    t0 = time.perf_counter()
    splits = [(p, n - p) for p in range(1, n // 2 + 1)]
    total_nodes = 0
    best = 0
    best_split: tuple[int, int] | None = None
    best_cells: list[Edge] | None = None

    if threads == 1 or len(splits) == 1:
        for p, q in splits:
            got, cells, nodes = _search_split(p, q, constraint, best)
            total_nodes += nodes
            if got > best and cells is not None:
                best = got
                best_split = (p, q)
                best_cells = cells
    else:
        jobs = [(p, q, constraint) for p, q in splits]
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            results = list(pool.map(_split_job, jobs))
        for (p, q), (got, cells, nodes) in zip(splits, results):
            total_nodes += nodes
            if got > best and cells is not None:
                best = got
                best_split = (p, q)
                best_cells = cells

    assert best_split is not None and best_cells is not None
    witness = Drawing(best_split[0], best_split[1], frozenset(best_cells))
    millis = (time.perf_counter() - t0) * 1000.0
    return SearchResult(best, witness, SearchStats(total_nodes, millis))


# ---------------------------------------------------------------------------
# Minimax per-edge crossings over all orderings
# ---------------------------------------------------------------------------


def minimax_k(g: BipartiteGraph) -> int:
    """Minimum over all layer orderings of the maximum per-edge crossing
    count of the resulting drawing.

    Exhausts both permutation sets.  The 180 degree rotation (reversing
    both orders) preserves the objective, so only one representative of
    each (order, reversed order) pair is visited; a running best aborts
    partial counts early.
    """
    p, q = g.u_count, g.v_count
    if p + q > MINIMAX_MAX_VERTICES:
        raise ValueError(f"minimax search is factorial; at most {MINIMAX_MAX_VERTICES} vertices supported")
    edges = sorted(g.edges)
    m = len(edges)
    if m <= 1:
        return 0
    us = [u - 1 for u, _ in edges]
    vs = [v - 1 for _, v in edges]
    best = m  # any drawing has at most m - 1 crossings per edge

    posu = [0] * p
    posv = [0] * q
    for pu in permutations(range(p)):
        if p > 1 and pu > pu[::-1]:
            continue
        for idx, vert in enumerate(pu):
            posu[vert] = idx
        eu = [posu[u] for u in us]
        for pv in permutations(range(q)):
            if p == 1 and q > 1 and pv > pv[::-1]:
                continue
            for idx, vert in enumerate(pv):
                posv[vert] = idx
            ev = [posv[v] for v in vs]
            counts = [0] * m
            worst = 0
            for a in range(m):
                ia = eu[a]
                xa = ev[a]
                ca = counts[a]
                for b in range(a + 1, m):
                    if (ia - eu[b]) * (xa - ev[b]) < 0:
                        ca += 1
                        counts[b] += 1
                        if counts[b] > worst:
                            worst = counts[b]
                counts[a] = ca
                if ca > worst:
                    worst = ca
                if worst >= best:
                    break
            else:
                if worst < best:
                    best = worst
                    if best == 0:
                        return 0
    return best


# ---------------------------------------------------------------------------
# Seeded random drawings (fuel for property tests)
# ---------------------------------------------------------------------------


def random_drawing(p: int, q: int, m: int, seed: int) -> Drawing:
    """Uniformly random m-edge drawing on a p x q grid.

    Deterministic: a Mersenne Twister (``random.Random(seed)``) samples an
    m-subset of the grid cells listed in lexicographic order, so the same
    seed always yields the same drawing.
    """
    if m > p * q:
        raise ValueError(f"m={m} exceeds the grid capacity {p * q}")
    if m < 0:
        raise ValueError("m must be non-negative")
    rng = random.Random(seed)
    cells = _grid_cells(p, q)
    return Drawing(p, q, frozenset(rng.sample(cells, m)))

"""Two-layer drawing model and its crossing structure.

A drawing places ``p`` vertices on a top line and ``q`` on a bottom line
and joins them by y-monotone segments.  Whether two edges cross depends
only on how their endpoint indices interleave, so a drawing is purely
combinatorial data: two layer sizes and an edge set over index positions.

This module provides the crossing engine (per-edge counts and totals via
inversion counting), the k-planarity and h-quasiplanarity predicates, and
the decomposition of a drawing into bricks delimited by crossing-free
edges.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Drawing",
    "CrossingProfile",
    "Brick",
    "BrickDecomposition",
    "edges_cross",
    "crossing_profile",
    "is_k_planar",
    "is_h_quasiplanar",
    "mutually_crossing_number",
    "brick_decomposition",
    "induced_subdrawing",
    "drawing_to_json",
    "drawing_from_json",
    "load_drawing",
    "save_drawing",
]


@dataclass(frozen=True)
class Drawing:
    """A two-layer drawing: top vertices u_1..u_p, bottom vertices
    v_1..v_q, and edges (i, x) joining u_i to v_x.

    Indices are 1-based everywhere, matching the figures this library
    reproduces.  Isolated vertices are allowed; duplicate edges are not.
    """

    p: int
    q: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError(f"layer sizes must be positive, got p={self.p}, q={self.q}")
        if not isinstance(self.edges, frozenset):
            listed = [tuple(e) for e in self.edges]
            frozen = frozenset(listed)
            if len(frozen) != len(listed):
                raise ValueError("duplicate edges are not allowed")
            object.__setattr__(self, "edges", frozen)
        for e in self.edges:
            if len(e) != 2 or not all(isinstance(c, int) for c in e):
                raise ValueError(f"edge {e!r} is not a pair of integers")
            i, x = e
            if not (1 <= i <= self.p and 1 <= x <= self.q):
                raise ValueError(f"edge {e} lies outside the {self.p}x{self.q} grid")

    @property
    def n(self) -> int:
        """Total vertex count p + q."""
        return self.p + self.q

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        """Edges in lexicographic order (top index, then bottom index)."""
        return sorted(self.edges)

    def transpose(self) -> Drawing:
        """Swap the two layers."""
        return Drawing(self.q, self.p, frozenset((x, i) for i, x in self.edges))

    def rotate(self) -> Drawing:
        """Reverse both layer orders (180 degree rotation of the page).

        Rotation preserves all crossings; reversing a single layer does
        not.
        """
        return Drawing(
            self.p,
            self.q,
            frozenset((self.p + 1 - i, self.q + 1 - x) for i, x in self.edges),
        )


def edges_cross(e1: Edge, e2: Edge) -> bool:
    """True iff the two edges strictly interleave.

    Edges sharing an endpoint never cross (the segments meet at the common
    vertex), which is exactly the case where one factor below is zero.
    """
    return (e1[0] - e2[0]) * (e1[1] - e2[1]) < 0


@dataclass(frozen=True)
class CrossingProfile:
    """Per-edge crossing counts of a fixed drawing.

    ``total`` counts unordered crossing pairs, so the per-edge values sum
    to twice the total.
    """

    per_edge: dict[Edge, int]
    total: int
    max_per_edge: int


class _Fenwick:
    """Counting tree over positions 1..size with prefix sums."""

    __slots__ = ("size", "tree")

    def __init__(self, size: int) -> None:
        self.size = size
        self.tree = [0] * (size + 1)

    def add(self, idx: int) -> None:
        tree = self.tree
        while idx <= self.size:
            tree[idx] += 1
            idx += idx & -idx

    def prefix(self, idx: int) -> int:
        """Number of added positions <= idx."""
        s = 0
        tree = self.tree
        while idx > 0:
            s += tree[idx]
            idx -= idx & -idx
        return s


def crossing_profile(d: Drawing) -> CrossingProfile:
    """Count crossings per edge and in total in O(m log m).

    Crossing pairs are inversions: with edges sorted by top index, an edge
    crosses exactly the earlier edges with a strictly larger bottom index
    and the later edges with a strictly smaller one.  Two sweeps with a
    counting tree pick those up; edges sharing a top vertex never cross,
    so each same-i group is queried in full before being inserted.
    """
    edges = d.sorted_edges()
    m = len(edges)
    if m == 0:
        return CrossingProfile({}, 0, 0)

    left: dict[Edge, int] = {}
    total = 0
    tree = _Fenwick(d.q)
    inserted = 0
    idx = 0
    while idx < m:
        j = idx
        while j < m and edges[j][0] == edges[idx][0]:
            j += 1
        group = edges[idx:j]
        for e in group:
            c = inserted - tree.prefix(e[1])
            left[e] = c
            total += c
        for e in group:
            tree.add(e[1])
        inserted += len(group)
        idx = j

    right: dict[Edge, int] = {}
    tree = _Fenwick(d.q)
    idx = m
    while idx > 0:
        j = idx
        while j > 0 and edges[j - 1][0] == edges[idx - 1][0]:
            j -= 1
        group = edges[j:idx]
        for e in group:
            right[e] = tree.prefix(e[1] - 1)
        for e in group:
            tree.add(e[1])
        idx = j

    per = {e: left[e] + right[e] for e in edges}
    return CrossingProfile(per, total, max(per.values()))


def is_k_planar(d: Drawing, k: int) -> bool:
    """True iff every edge of the drawing is crossed at most k times."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if d.m == 0:
        return True
    return crossing_profile(d).max_per_edge <= k


def mutually_crossing_number(d: Drawing) -> int:
    """Size of the largest set of pairwise crossing edges.

    A pairwise crossing set has all top indices distinct and all bottom
    indices distinct, and sorted by top index its bottom indices strictly
    decrease.  With edges sorted by (i, x) this reduces to a longest
    strictly decreasing subsequence on the bottom indices; ties in i are
    sorted by ascending x, so no two edges of the same top vertex can be
    picked together.
    """
    xs = [x for _, x in d.sorted_edges()]
    tails: list[int] = []
    for x in xs:
        v = -x
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
        else:
            tails[pos] = v
    return len(tails)


def is_h_quasiplanar(d: Drawing, h: int) -> bool:
    """True iff no h edges of the drawing pairwise cross."""
    if h < 2:
        raise ValueError("h must be at least 2")
    return mutually_crossing_number(d) < h


def induced_subdrawing(d: Drawing, i_lo: int, i_hi: int, x_lo: int, x_hi: int) -> Drawing:
    """Sub-drawing induced by u_{i_lo}..u_{i_hi} and v_{x_lo}..v_{x_hi},
    reindexed so the window starts at 1."""
    if not (1 <= i_lo <= i_hi <= d.p and 1 <= x_lo <= x_hi <= d.q):
        raise ValueError("window out of range")
    edges = frozenset(
        (i - i_lo + 1, x - x_lo + 1)
        for i, x in d.edges
        if i_lo <= i <= i_hi and x_lo <= x <= x_hi
    )
    return Drawing(i_hi - i_lo + 1, x_hi - x_lo + 1, edges)


@dataclass(frozen=True)
class Brick:
    """Index window [i_lo, i_hi | x_lo, x_hi] between two crossing-free
    edges, together with its induced sub-drawing (reindexed to 1)."""

    i_lo: int
    i_hi: int
    x_lo: int
    x_hi: int
    drawing: Drawing


@dataclass(frozen=True)
class BrickDecomposition:
    """Crossing-free edges in lexicographic order and the bricks between
    consecutive ones.  Fewer than two crossing-free edges means no brick."""

    planar_edges: tuple[Edge, ...]
    bricks: tuple[Brick, ...]


def brick_decomposition(d: Drawing) -> BrickDecomposition:
    """Split a drawing into bricks at its crossing-free (planar) edges.

    Planar edges pairwise do not cross, so sorted lexicographically their
    windows nest left to right and every consecutive pair delimits one
    maximal brick.  Consecutive bricks share exactly their common boundary
    edge.  Planar edges sharing a vertex produce degenerate (trivial)
    bricks, which are reported as-is.
    """
    prof = crossing_profile(d)
    planar = sorted(e for e, c in prof.per_edge.items() if c == 0)
    bricks = []
    for (i1, x1), (i2, x2) in zip(planar, planar[1:]):
        bricks.append(Brick(i1, i2, x1, x2, induced_subdrawing(d, i1, i2, x1, x2)))
    return BrickDecomposition(tuple(planar), tuple(bricks))


# ---------------------------------------------------------------------------
# JSON interchange: {"p": int, "q": int, "edges": [[i, x], ...]}, 1-based
# ---------------------------------------------------------------------------


def drawing_to_json(d: Drawing) -> dict:
    """Dict form of a drawing with edges in lexicographic order."""
    return {"p": d.p, "q": d.q, "edges": [list(e) for e in d.sorted_edges()]}


def drawing_from_json(data: dict) -> Drawing:
    """Parse the dict form; raises ValueError on malformed input."""
    if not isinstance(data, dict):
        raise ValueError("drawing JSON must be an object")
    for key in ("p", "q", "edges"):
        if key not in data:
            raise ValueError(f"drawing JSON is missing {key!r}")
    p, q, edges = data["p"], data["q"], data["edges"]
    if not isinstance(p, int) or not isinstance(q, int):
        raise ValueError("p and q must be integers")
    if not isinstance(edges, list):
        raise ValueError("edges must be a list of [i, x] pairs")
    parsed = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"edge {e!r} is not an [i, x] pair")
        i, x = e
        if not isinstance(i, int) or not isinstance(x, int):
            raise ValueError(f"edge {e!r} has non-integer endpoints")
        parsed.append((i, x))
    if len(set(parsed)) != len(parsed):
        raise ValueError("duplicate edges are not allowed")
    return Drawing(p, q, frozenset(parsed))


def load_drawing(path: str) -> Drawing:
    with open(path, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return drawing_from_json(data)


def save_drawing(d: Drawing, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(drawing_to_json(d), f, indent=2)
        f.write("\n")

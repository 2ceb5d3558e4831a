"""Path decompositions of two-layer drawings, built from the edge order.

The builder walks the edges in lexicographic order and forms one bag per
edge from its endpoints plus the "related" bottom vertices, those whose
incidence interval strictly spans the edge's position and that touch an
edge crossing it.  For a drawing with at most k crossings per edge this
yields width at most k + 1.  A validator checks the four defining bag
properties against any graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Drawing, Edge, edges_cross
from .search import BipartiteGraph

Vertex = tuple[str, int]  # ("u", i) or ("v", x)

__all__ = [
    "Vertex",
    "PathDecomposition",
    "DecompositionReport",
    "edge_order",
    "related_vertices",
    "build_path_decomposition",
    "validate_decomposition",
    "decomposition_to_json",
]


def edge_order(d: Drawing) -> list[Edge]:
    """Edges ordered by top index, ties broken by bottom index."""
    return d.sorted_edges()


def _incidence_span(order: list[Edge]) -> tuple[dict[int, int], dict[int, int]]:
    """First and last 1-based position of each bottom vertex in the order."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, (_, x) in enumerate(order, 1):
        first.setdefault(x, pos)
        last[x] = pos
    return first, last


def related_vertices(d: Drawing, pos: int) -> set[int]:
    """Bottom vertices related to the pos-th edge (1-based) in the order.

    v_y is related when it is incident to an edge crossing the pos-th edge
    and its incidence interval strictly contains pos.
    """
    order = edge_order(d)
    if not 1 <= pos <= len(order):
        raise ValueError(f"position {pos} out of range 1..{len(order)}")
    first, last = _incidence_span(order)
    e = order[pos - 1]
    related = set()
    for f in order:
        y = f[1]
        if edges_cross(f, e) and first[y] < pos < last[y]:
            related.add(y)
    return related


@dataclass(frozen=True)
class PathDecomposition:
    """An ordered list of bags; each vertex is tagged with its layer.

    ``orientation`` records which layer played the role of the primary
    (edge-ordering) layer when the decomposition was built: "top" for the
    given drawing, "bottom" for its transpose.
    """

    bags: tuple[frozenset[Vertex], ...]
    orientation: str = "top"

    @property
    def width(self) -> int:
        """Largest bag size minus one; -1 for an empty decomposition."""
        return max((len(b) for b in self.bags), default=0) - 1


def _oriented_bags(d: Drawing) -> list[frozenset[Vertex]]:
    order = edge_order(d)
    first, last = _incidence_span(order)
    bags = []
    for pos, (s, t) in enumerate(order, 1):
        bag = {("u", s), ("v", t)}
        e = order[pos - 1]
        for f in order:
            y = f[1]
            if edges_cross(f, e) and first[y] < pos < last[y]:
                bag.add(("v", y))
        bags.append(frozenset(bag))
    return bags


def _swap_tags(bags: list[frozenset[Vertex]]) -> list[frozenset[Vertex]]:
    flip = {"u": "v", "v": "u"}
    return [frozenset((flip[layer], idx) for layer, idx in bag) for bag in bags]


def build_path_decomposition(d: Drawing) -> PathDecomposition:
    """One bag per edge in lexicographic order; width at most k + 1 when
    every edge has at most k crossings.

    Both layer orientations are tried (the construction is asymmetric) and
    the narrower one returned.  Isolated vertices get singleton bags at
    the end so that every vertex is covered.  An edgeless drawing yields
    an empty decomposition.
    """
    if d.m == 0:
        return PathDecomposition(())
    bags_top = _oriented_bags(d)
    bags_bottom = _swap_tags(_oriented_bags(d.transpose()))
    if max(len(b) for b in bags_bottom) < max(len(b) for b in bags_top):
        bags, orientation = bags_bottom, "bottom"
    else:
        bags, orientation = bags_top, "top"

    used_u = {i for i, _ in d.edges}
    used_v = {x for _, x in d.edges}
    for i in range(1, d.p + 1):
        if i not in used_u:
            bags.append(frozenset({("u", i)}))
    for x in range(1, d.q + 1):
        if x not in used_v:
            bags.append(frozenset({("v", x)}))
    return PathDecomposition(tuple(bags), orientation)


@dataclass(frozen=True)
class DecompositionReport:
    """Validation outcome: the width, and one entry per violated property
    with a concrete witness."""

    valid: bool
    width: int
    violations: tuple[tuple[str, str], ...]


def _vertices_and_edges(g: Drawing | BipartiteGraph) -> tuple[set[Vertex], set[Edge]]:
    if isinstance(g, Drawing):
        top, bottom = g.p, g.q
    else:
        top, bottom = g.u_count, g.v_count
    verts = {("u", i) for i in range(1, top + 1)} | {("v", x) for x in range(1, bottom + 1)}
    return verts, set(g.edges)


def validate_decomposition(g: Drawing | BipartiteGraph, pd: PathDecomposition) -> DecompositionReport:
    """Check the four bag properties of a path decomposition against g.

    P.1 bags contain only vertices of g; P.2 every vertex appears in some
    bag; P.3 every edge has both endpoints in a common bag; P.4 the bags
    containing a vertex are consecutive.  Violations are reported, not
    raised.
    """
    verts, edges = _vertices_and_edges(g)
    violations: list[tuple[str, str]] = []

    for idx, bag in enumerate(pd.bags):
        extra = bag - verts
        if extra:
            who = sorted(extra)[0]
            violations.append(("P.1", f"bag {idx + 1} contains {who[0]}{who[1]} not in the graph"))
            break

    covered = set().union(*pd.bags) if pd.bags else set()
    missing = verts - covered
    if missing:
        who = sorted(missing)[0]
        violations.append(("P.2", f"vertex {who[0]}{who[1]} appears in no bag"))

    for i, x in sorted(edges):
        want = {("u", i), ("v", x)}
        if not any(want <= bag for bag in pd.bags):
            violations.append(("P.3", f"edge (u{i}, v{x}) has no common bag"))
            break

    for v in sorted(covered):
        where = [idx for idx, bag in enumerate(pd.bags) if v in bag]
        if where[-1] - where[0] + 1 != len(where):
            violations.append(("P.4", f"bags containing {v[0]}{v[1]} are not consecutive"))
            break

    return DecompositionReport(not violations, pd.width, tuple(violations))


def decomposition_to_json(pd: PathDecomposition) -> dict:
    """JSON form: bags as lists of "u<i>"/"v<x>" labels, plus the width."""
    bags = [sorted(f"{layer}{idx}" for layer, idx in bag) for bag in pd.bags]
    return {"bags": bags, "width": pd.width}

"""Structural predicates: cutsets, even cycles, neighborhood graphs,
stable sets, diamonds, sparse bipartitions, degree-5 classification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, SizeCapError
from .graph import Graph


def vertex_connectivity_at_most(g: Graph, k: int):
    """A cutset of size <= k if one exists, else None.

    Smallest cutsets first, lexicographic tie-break.  Brute force over
    vertex subsets; k is limited to {1, 2, 3}.
    """
    if k not in (1, 2, 3):
        raise DomainError(f"k must be 1, 2 or 3, got {k}")
    if not g.is_connected() or g.n == 0:
        raise DomainError("input must be a connected nonempty graph")
    ids = g.sorted_vertices()
    for size in range(1, k + 1):
        for combo in itertools.combinations(ids, size):
            rest = g.vertices - frozenset(combo)
            if len(rest) >= 2 and not g.induced_subgraph(rest).is_connected():
                return frozenset(combo)
    return None


@dataclass(frozen=True)
class EvenCycleReport:
    cycle: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    @property
    def almost_induced(self) -> bool:
        """No chord, or one chord splitting the cycle into two odd cycles."""
        if not self.chords:
            return True
        if len(self.chords) > 1:
            return False
        pos = {v: i for i, v in enumerate(self.cycle)}
        (u, v), = self.chords
        gap = abs(pos[u] - pos[v])
        # the two sub-cycles have gap+1 and len-gap+1 edges; odd iff gap even
        return gap % 2 == 0


def _cycles_up_to(g: Graph, limit: int):
    """Simple cycles in canonical form: start at the minimum vertex, go
    first toward the smaller of its two cycle neighbors.  Yields vertex
    tuples of length <= limit."""
    ids = g.sorted_vertices()
    for root in ids:
        # DFS over paths root -> ... using only vertices > root
        stack = [(root, (root,))]
        while stack:
            cur, path = stack.pop()
            for nxt in sorted(g.neighbors(cur), reverse=True):
                if nxt == root and len(path) >= 3:
                    if path[1] < path[-1]:  # one orientation only
                        yield path
                elif nxt > root and nxt not in path and len(path) < limit:
                    stack.append((nxt, path + (nxt,)))


def shortest_even_cycle(g: Graph) -> EvenCycleReport | None:
    """A minimum-length even cycle (lexicographically least among the
    minimum), or None if g has no even cycle."""
    best = None
    limit = g.n
    for cyc in _cycles_up_to(g, limit):
        if len(cyc) % 2:
            continue
        if best is None or (len(cyc), cyc) < (len(best), best):
            best = cyc
            limit = len(cyc)  # no strictly longer cycle can win
    if best is None:
        return None
    cycset = set(best)
    consecutive = set()
    for i, v in enumerate(best):
        w = best[(i + 1) % len(best)]
        consecutive.add((min(v, w), max(v, w)))
    chords = tuple(
        sorted(
            (u, v)
            for u, v in g.edges()
            if u in cycset and v in cycset and (u, v) not in consecutive
        )
    )
    return EvenCycleReport(best, chords)


def neighborhood_graph(g: Graph, v: int) -> Graph:
    """Subgraph induced by N(v); v itself is excluded."""
    return g.induced_subgraph(g.neighbors(v))


def max_stable_set_small(g: Graph, cap: int = 10) -> frozenset[int]:
    """A maximum stable set by brute force; lexicographically least."""
    if g.n > cap:
        raise SizeCapError("max_stable_set_small", g.n, cap)
    ids = g.sorted_vertices()
    for size in range(g.n, 0, -1):
        for combo in itertools.combinations(ids, size):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return frozenset(combo)
    return frozenset()


def find_diamonds(g: Graph) -> list[frozenset[int]]:
    """Induced K4-minus-an-edge subgraphs whose two degree-2 (in the
    subgraph) vertices have degree 5 in g."""
    out = []
    ids = g.sorted_vertices()
    for combo in itertools.combinations(ids, 4):
        sub = g.induced_subgraph(combo)
        if sub.edge_count != 5:
            continue
        deg2 = [v for v in combo if sub.degree(v) == 2]
        if len(deg2) == 2 and all(g.degree(v) == 5 for v in deg2):
            out.append(frozenset(combo))
    return out


def sparse_bipartitions(h: Graph, required_in_y: int | None = None):
    """Partitions (X, Y) of a 5-vertex graph with |X| = 3, |Y| = 2 and
    exactly one edge inside each side."""
    if h.n != 5:
        raise DomainError(f"sparse bipartitions are defined on 5 vertices, got {h.n}")
    if required_in_y is not None and not h.has_vertex(required_in_y):
        raise DomainError(f"unknown vertex {required_in_y}")
    ids = h.sorted_vertices()
    out = []
    for y in itertools.combinations(ids, 2):
        yset = frozenset(y)
        if required_in_y is not None and required_in_y not in yset:
            continue
        xset = h.vertices - yset
        if h.induced_subgraph(yset).edge_count == 1 and h.induced_subgraph(xset).edge_count == 1:
            out.append((xset, yset))
    return out


class Degree5Kind(Enum):
    Pure5 = "pure5"
    FiveFour = "five-four"
    NotDegree5 = "not-degree-5"


@dataclass(frozen=True)
class Degree5Class:
    vertex: int
    kind: Degree5Kind


def classify_degree5(g: Graph, v: int) -> Degree5Class:
    """Pure5: degree 5 with all neighbors of degree 5.  FiveFour: degree 5
    with four degree-5 neighbors and one of degree 4.  Everything else is
    NotDegree5."""
    degs = sorted(g.degree(u) for u in g.neighbors(v))
    if g.degree(v) == 5:
        if degs == [5, 5, 5, 5, 5]:
            return Degree5Class(v, Degree5Kind.Pure5)
        if degs == [4, 5, 5, 5, 5]:
            return Degree5Class(v, Degree5Kind.FiveFour)
    return Degree5Class(v, Degree5Kind.NotDegree5)


def has_k4_subgraph(g: Graph) -> bool:
    """4-clique test (subgraph, not minor)."""
    ids = g.sorted_vertices()
    return any(
        all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2))
        for combo in itertools.combinations(ids, 4)
    )


def is_two_connected(g: Graph) -> bool:
    return (
        g.n >= 3
        and g.is_connected()
        and vertex_connectivity_at_most(g, 1) is None
    )


def is_reduced(g: Graph) -> bool:
    """2-connected, critical, and every degree in {3, 4, 5}."""
    from .oracle import criticality

    if not all(g.degree(v) in (3, 4, 5) for v in g.vertices):
        return False
    if not is_two_connected(g):
        return False
    return criticality(g).graph_is_critical

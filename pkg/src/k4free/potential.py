"""Degree-potential functions and the m/5 greedy transversal.

Two per-degree weights are used, both zero up to degree 2 and d/2 from
degree 4 on; they differ only at degree 3:

* Fifth:  phi(3) = 5/4 — drives the greedy |X| <= m/5 argument;
* Main:   phi(3) = 4/3 — drives the 16/3 inequality for connected graphs.

All arithmetic is exact rational; the bounds hinge on constants like 16/3
that must not be approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _bits
from .errors import DomainError
from .graph import Graph
from .oracle import Method, TransversalResult, exact_s


@dataclass(frozen=True)
class PotentialProfile:
    name: str
    deg3_value: Fraction

    def value(self, d: int) -> Fraction:
        if d <= 2:
            return Fraction(0)
        if d == 3:
            return self.deg3_value
        return Fraction(d, 2)


FIFTH = PotentialProfile("Fifth", Fraction(5, 4))
MAIN = PotentialProfile("Main", Fraction(4, 3))


def phi_graph(g: Graph, profile: PotentialProfile) -> Fraction:
    return sum((profile.value(g.degree(v)) for v in g.vertices), Fraction(0))


@dataclass(frozen=True)
class GreedyStep:
    """One vertex removal taken by the greedy solver, with the reduced
    graph it was taken from."""

    graph: Graph
    chosen: int


def _suppressed_graph(adj: np.ndarray, active, ids) -> Graph:
    verts = _bits.bits(active)
    return Graph.from_edges(
        (ids[i] for i in verts),
        (
            (ids[i], ids[j])
            for i in verts
            for j in _bits.bits(int(adj[i]) & int(active))
            if i < j
        ),
    )


def greedy_steps(g: Graph) -> list[GreedyStep]:
    """The sequence of (reduced graph, removed max-degree vertex) pairs.

    Degree-<=2 vertices are eliminated (label preserving) before each
    pick; the pick is a maximum-degree vertex, smallest id first.  Each
    removed vertex is a vertex of g itself.
    """
    ids, adj, active = _bits.adjacency_masks(g)
    steps = []
    while True:
        active = _bits.suppress_inplace(adj, active)
        if active == 0:
            return steps
        best, best_deg = -1, -1
        for i in _bits.bits(active):
            d = _bits.popcount(int(adj[i]) & int(active))
            if d > best_deg:
                best, best_deg = i, d
        steps.append(GreedyStep(_suppressed_graph(adj, active, ids), ids[best]))
        active &= ~np.int64(1 << best)


def greedy_fifth_transversal(g: Graph) -> TransversalResult:
    """Transversal of size at most phi_Fifth(g)/5 <= m/5.

    Alternates exhaustive degree-<=2 elimination with removal of a
    maximum-degree vertex until nothing is left.  Every removed vertex of
    an eliminated graph is verbatim a vertex of g, and the removed set is
    a transversal of g.
    """
    ids, adj, active = _bits.adjacency_masks(g)
    chosen = []
    while True:
        active = _bits.suppress_inplace(adj, active)
        if active == 0:
            break
        best, best_deg = -1, -1
        for i in _bits.bits(active):
            d = _bits.popcount(int(adj[i]) & int(active))
            if d > best_deg:
                best, best_deg = i, d
        chosen.append(ids[best])
        active &= ~np.int64(1 << best)
    return TransversalResult(g, frozenset(chosen), Method.Greedy)


def lemma42_check(a: int, b: int, c: int) -> bool:
    """The four Main-potential inequalities used by the 16/3 analysis."""
    if a < 3 or b < 1 or c < 1:
        raise DomainError(f"need a >= 3 and b, c >= 1, got {(a, b, c)}")
    phi = MAIN.value
    ok_a = phi(a) >= phi(a - 1) + Fraction(1, 2)
    ok_b = phi(a) >= phi(a - 2) + 1
    ok_c = phi(b + c - 1) >= phi(b) + phi(c) - Fraction(1, 2)
    ok_d = True
    if b >= 2 and c >= 2 and b + c <= 5:
        ok_d = phi(b + c) >= phi(b) + phi(c) + 1
    return ok_a and ok_b and ok_c and ok_d


@dataclass(frozen=True)
class Theorem41Report:
    phi: Fraction
    s: int
    part_a_ok: bool
    part_b_applicable: bool
    part_b_ok: bool


def theorem41_check(g: Graph) -> Theorem41Report:
    """phi_Main(G) >= (16/3) s(G) - 1 for connected G; the stronger
    bound without the -1 when G is reduced but not 3-connected."""
    from .structure import is_reduced, vertex_connectivity_at_most

    if not g.is_connected():
        raise DomainError("theorem41_check needs a connected graph")
    phi = phi_graph(g, MAIN)
    s = exact_s(g).size
    part_a_ok = phi >= Fraction(16, 3) * s - 1
    applicable = False
    if is_reduced(g):
        not_3conn = g.n < 4 or vertex_connectivity_at_most(g, 2) is not None
        applicable = not_3conn
    part_b_ok = (not applicable) or phi >= Fraction(16, 3) * s
    return Theorem41Report(phi, s, part_a_ok, applicable, part_b_ok)

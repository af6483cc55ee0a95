"""Exact minimum transversals and criticality machinery.

Two independent routes compute s(G):

* `brute_force_s` enumerates vertex subsets in increasing size and takes
  the first whose removal leaves a K4-minor-free graph (ground truth);
* `exact_s` reduces the graph to its core, finds a K4-subdivision
  obstruction, and branches on its vertices (every transversal must meet
  every K4 subdivision).

Both return a `TransversalResult` whose certificate is the reduction
trace of the remainder down to the empty graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import _bits
from .errors import DomainError, SizeCapError
from .graph import Graph
from .reduction import ReductionTrace, is_k4_minor_free, lift_transversal, reduce_core

BRUTE_FORCE_CAP = 16


class Method(Enum):
    BruteForce = "brute"
    BranchAndReduce = "exact"
    Greedy = "greedy"


@dataclass
class TransversalResult:
    graph: Graph
    vertices: frozenset[int]
    method: Method
    _certificate: ReductionTrace | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def certificate(self) -> ReductionTrace:
        """Reduction trace of graph - vertices; its end graph is empty."""
        if self._certificate is None:
            rem = self.graph.induced_subgraph(self.graph.vertices - self.vertices)
            trace = reduce_core(rem)
            if trace.end.n != 0:
                raise AssertionError("remainder is not K4-minor-free")
            self._certificate = trace
        return self._certificate


def brute_force_s(g: Graph, cap: int = BRUTE_FORCE_CAP) -> TransversalResult:
    """Guaranteed-minimum transversal by subset enumeration.

    Subsets are tried in increasing size, lexicographically (by ascending
    vertex id) within each size, so the result is deterministic.
    """
    if g.n > cap:
        raise SizeCapError("brute_force_s", g.n, cap)
    ids, adj, full = _bits.adjacency_masks(g)
    _, mask = _bits.s_brute(adj, full)
    verts = frozenset(ids[i] for i in _bits.bits(mask))
    return TransversalResult(g, verts, Method.BruteForce)


def find_k4_subdivision(g: Graph) -> frozenset[int] | None:
    """Vertex set of some K4-subdivision subgraph, or None if minor-free.

    Works by greedily deleting edges while a K4 minor survives; the
    edge-minimal leftover is a K4 subdivision and its non-isolated
    vertices are returned.
    """
    ids, adj, full = _bits.adjacency_masks(g)
    if _bits.k4mf(adj, full):
        return None
    obs = _bits.obstruction(adj, full)
    return frozenset(ids[i] for i in _bits.bits(obs))


def _branch_witness(adj: np.ndarray, active) -> list[int]:
    """Positions of a minimum transversal found by branch-and-reduce.

    Degree-<=2 elimination is label preserving (see _bits), so positions
    chosen in the shrunken graphs are valid in the original one.
    """
    a = adj.copy()
    act = np.int64(active)
    out: list[int] = []
    while True:
        act = _bits.suppress_inplace(a, act)
        if act == 0:
            return out
        target = _bits.s_branch(a, act)
        obs = _bits.obstruction(a, act)
        for x in _bits.bits(obs):
            if _bits.s_branch(a, act & ~np.int64(1 << x)) == target - 1:
                out.append(x)
                act &= ~np.int64(1 << x)
                break
        else:  # pragma: no cover - branching is exhaustive
            raise AssertionError("no branch vertex achieved the optimum")


def exact_s(g: Graph) -> TransversalResult:
    """Minimum transversal by reduce-then-branch; size always equals
    brute_force_s(g).size."""
    trace = reduce_core(g)
    core = trace.end
    if core.n == 0:
        return TransversalResult(g, frozenset(), Method.BranchAndReduce, trace)
    if core.n > 63:
        raise SizeCapError("exact_s reduced core", core.n, 63)
    ids, adj, full = _bits.adjacency_masks(core)
    picks = _branch_witness(adj, full)
    core_set = frozenset(ids[i] for i in picks)
    lifted = lift_transversal(trace, core_set)
    return TransversalResult(g, lifted, Method.BranchAndReduce)


@dataclass(frozen=True)
class CriticalityReport:
    critical_edges: frozenset[tuple[int, int]]
    all_edges: tuple[tuple[int, int], ...]

    @property
    def graph_is_critical(self) -> bool:
        return len(self.all_edges) > 0 and len(self.critical_edges) == len(self.all_edges)

    def is_critical(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.critical_edges


def criticality(g: Graph) -> CriticalityReport:
    """Flags each edge e with s(g - e) < s(g)."""
    s = exact_s(g).size
    crit = set()
    edges = tuple(g.edges())
    for u, v in edges:
        if exact_s(g.delete_edge(u, v)).size < s:
            crit.add((u, v))
    return CriticalityReport(frozenset(crit), edges)


def _is_transversal(g: Graph, s) -> bool:
    return is_k4_minor_free(g.induced_subgraph(g.vertices - frozenset(s)))


def lemma31_witness(g: Graph, u: int, v: int) -> frozenset[int] | None:
    """For a critical edge uv, a set S with S|{u} and S|{v} both minimum
    transversals of g.

    Any minimum transversal of g - uv qualifies; minimum transversals of
    g - uv are enumerated (lexicographically) and the first that works is
    returned.  None only if the search space is exhausted, which would
    contradict the underlying lemma.
    """
    if not g.has_edge(u, v):
        raise DomainError(f"no edge {u}-{v}")
    s_g = exact_s(g).size
    h = g.delete_edge(u, v)
    s_h = exact_s(h).size
    if s_h >= s_g:
        raise DomainError(f"edge {u}-{v} is not critical")
    ids, adj, full = _bits.adjacency_masks(h)
    import itertools

    for combo in itertools.combinations(range(len(ids)), s_h):
        mask = np.int64(sum(1 << i for i in combo))
        if not _bits.k4mf(adj, full & ~mask):
            continue
        cand = frozenset(ids[i] for i in combo)
        if u in cand or v in cand:
            continue
        if _is_transversal(g, cand | {u}) and _is_transversal(g, cand | {v}):
            return cand
    return None

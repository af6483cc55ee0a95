"""Immutable simple undirected graphs with stable vertex identities.

Operations return new graphs; existing graphs are never mutated, so they
can be shared freely across branching searches and worker threads.
Vertex ids are plain ints that survive deletions.  Contracting an edge
mints a fresh id (one past anything seen in the graph's lineage) so that
reduction traces can map merged vertices back to their parents.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


class Graph:
    __slots__ = ("_adj", "_next_id", "_m")

    def __init__(self, adj: dict[int, frozenset[int]], next_id: int | None = None):
        self._adj = adj
        if next_id is None:
            next_id = max(adj) + 1 if adj else 0
        self._next_id = next_id
        self._m = -1

    @classmethod
    def from_edges(cls, vertices, edges) -> "Graph":
        """Build a graph from an iterable of vertices and (u, v) pairs."""
        adj = {int(v): set() for v in vertices}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise DomainError(f"edge {u}-{v} uses unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        return cls({v: frozenset(ns) for v, ns in adj.items()})

    @classmethod
    def empty(cls) -> "Graph":
        return cls({})

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    def sorted_vertices(self) -> list[int]:
        return sorted(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        if self._m < 0:
            self._m = sum(len(ns) for ns in self._adj.values()) // 2
        return self._m

    @property
    def next_id(self) -> int:
        return self._next_id

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise DomainError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return sorted(
            (u, v) for u, ns in self._adj.items() for v in ns if u < v
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset(self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- operations ----------------------------------------------------

    def delete_vertex(self, v: int) -> "Graph":
        if v not in self._adj:
            raise DomainError(f"unknown vertex {v}")
        adj = {}
        for u, ns in self._adj.items():
            if u == v:
                continue
            adj[u] = ns - {v} if v in ns else ns
        return Graph(adj, self._next_id)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise DomainError(f"no edge {u}-{v}")
        adj = dict(self._adj)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return Graph(adj, self._next_id)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or u not in self._adj or v not in self._adj:
            raise DomainError(f"cannot add edge {u}-{v}")
        adj = dict(self._adj)
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
        return Graph(adj, self._next_id)

    def contract_edge(self, u: int, v: int) -> tuple["Graph", int]:
        """Contract edge uv; returns (new graph, fresh merged vertex id).

        The merged vertex is adjacent to N(u) | N(v) minus u, v; loops and
        parallel edges vanish because neighborhoods are sets.
        """
        if not self.has_edge(u, v):
            raise DomainError(f"no edge {u}-{v}")
        w = self._next_id
        merged = (self._adj[u] | self._adj[v]) - {u, v}
        adj = {}
        for x, ns in self._adj.items():
            if x in (u, v):
                continue
            if u in ns or v in ns:
                adj[x] = (ns - {u, v}) | {w}
            else:
                adj[x] = ns
        adj[w] = merged
        return Graph(adj, w + 1), w

    def induced_subgraph(self, s) -> "Graph":
        s = frozenset(s)
        for v in s:
            if v not in self._adj:
                raise DomainError(f"unknown vertex {v}")
        return Graph({v: self._adj[v] & s for v in s}, self._next_id)

    def components(self) -> list[frozenset[int]]:
        """Connected components, sorted by minimum vertex id."""
        seen: set[int] = set()
        comps = []
        for v in sorted(self._adj):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def boundary_edge_count(self, s) -> int:
        """Number of edges with exactly one end in s."""
        s = frozenset(s)
        for v in s:
            if v not in self._adj:
                raise DomainError(f"unknown vertex {v}")
        return sum(len(self._adj[v] - s) for v in s)


@dataclass(frozen=True)
class Separation:
    """A pair of vertex sets covering V with no edge across the difference."""

    left: frozenset[int]
    right: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.left & self.right)

    def is_valid_for(self, g: Graph) -> bool:
        if self.left | self.right != g.vertices:
            return False
        lonly = self.left - self.right
        ronly = self.right - self.left
        if not lonly or not ronly:
            return False
        return all(not (g.neighbors(v) & ronly) for v in lonly)


# -- text format -------------------------------------------------------
#
# Line 1: "n m".  Then m lines "u v" with 0 <= u < v < n.  Lines starting
# with '#' are ignored.  Vertices are 0..n-1.


def parse_graph(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise DomainError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise DomainError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise DomainError(f"bad header line: {lines[0]!r}") from None
    if n < 0 or m < 0 or len(lines) - 1 != m:
        raise DomainError(f"header says {m} edges, file has {len(lines) - 1}")
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise DomainError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DomainError(f"bad edge line: {ln!r}") from None
        if not (0 <= u < v < n):
            raise DomainError(f"edge {u} {v} out of range or not u < v")
        if (u, v) in seen:
            raise DomainError(f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(range(n), edges)


def format_graph(g: Graph) -> str:
    """Serialize a graph; vertices are relabeled 0..n-1 by ascending id."""
    ids = g.sorted_vertices()
    pos = {v: i for i, v in enumerate(ids)}
    edges = sorted((pos[u], pos[v]) for u, v in g.edges())
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    with open(path) as f:
        return parse_graph(f.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as f:
        f.write(format_graph(g))

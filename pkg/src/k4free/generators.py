"""Graph generators: extremal families, random connected graphs, small
fixtures, and exhaustive labeled corpora."""

from __future__ import annotations

import itertools
import random

import numpy as np

from . import _bits
from .errors import DomainError
from .graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(range(n), itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"cycle needs >= 3 vertices, got {n}")
    return Graph.from_edges(range(n), ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(range(n), ((i, i + 1) for i in range(n - 1)))


def wheel_graph(rim: int) -> Graph:
    """Hub vertex `rim` joined to every vertex of a cycle 0..rim-1."""
    if rim < 3:
        raise DomainError(f"wheel rim needs >= 3 vertices, got {rim}")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph.from_edges(range(rim + 1), edges)


def w5() -> Graph:
    """The 5-vertex wheel: a hub joined to a 4-cycle."""
    return wheel_graph(4)


def w5_minus() -> Graph:
    """K4 with one edge subdivided once (5 vertices)."""
    g = complete_graph(4)
    g = g.delete_edge(0, 1)
    g = Graph.from_edges(range(5), list(g.edges()) + [(0, 4), (1, 4)])
    return g


def gen_k5_union(k: int) -> Graph:
    """k disjoint copies of K5: n = 5k, m = 10k, s = 2k (tight for m/5)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    edges = []
    for c in range(k):
        base = 5 * c
        edges.extend((base + i, base + j) for i, j in itertools.combinations(range(5), 2))
    return Graph.from_edges(range(5 * k), edges)


def gen_k6_chain(k: int) -> Graph:
    """k copies of K6 joined into a path by k-1 edges between the copies'
    first vertices: m = 16k - 1, s = 3k (tight for 3(m+1)/16)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    edges = []
    for c in range(k):
        base = 6 * c
        edges.extend((base + i, base + j) for i, j in itertools.combinations(range(6), 2))
    for c in range(k - 1):
        edges.append((6 * c, 6 * (c + 1)))
    return Graph.from_edges(range(6 * k), edges)


def gen_random_connected(n: int, m: int, seed: int) -> Graph:
    """Uniform random labeled tree (Pruefer) plus m-(n-1) distinct extra
    edges chosen uniformly without replacement.  Deterministic per seed."""
    if n < 1 or m < n - 1 or m > n * (n - 1) // 2:
        raise DomainError(f"infeasible (n, m) = ({n}, {m})")
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()
    if n == 1:
        return Graph.from_edges([0], [])
    if n == 2:
        edges.add((0, 1))
    else:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        for v in seq:
            for u in range(n):
                if degree[u] == 1:
                    edges.add((min(u, v), max(u, v)))
                    degree[u] -= 1
                    degree[v] -= 1
                    break
        last = [u for u in range(n) if degree[u] == 1]
        edges.add((min(last), max(last)))
    rest = [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if (i, j) not in edges
    ]
    edges.update(rng.sample(rest, m - (n - 1)))
    return Graph.from_edges(range(n), sorted(edges))


def graph_from_edge_mask(n: int, em: int) -> Graph:
    """Graph on 0..n-1 from an edge bitmask in ascending pair order."""
    edges = []
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if em >> p & 1:
                edges.append((i, j))
            p += 1
    return Graph.from_edges(range(n), edges)


def connected_graphs_exhaustive(n: int):
    """All connected labeled graphs on 0..n-1, as Graphs."""
    for em in _bits.connected_edge_masks(n):
        yield graph_from_edge_mask(n, int(em))


def all_graphs_exhaustive(n: int):
    """All labeled graphs on 0..n-1 (connected or not)."""
    npairs = n * (n - 1) // 2
    for em in range(1 << npairs):
        yield graph_from_edge_mask(n, em)


def are_isomorphic_small(g: Graph, h: Graph, cap: int = 10) -> bool:
    """Brute-force isomorphism for tiny graphs (used on reduced cores)."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.n > cap:
        raise DomainError(f"isomorphism check capped at {cap} vertices")
    gd = sorted(g.degree(v) for v in g.vertices)
    hd = sorted(h.degree(v) for v in h.vertices)
    if gd != hd:
        return False
    gv = g.sorted_vertices()
    hv = h.sorted_vertices()
    gedges = g.edges()
    hedges = {(min(a, b), max(a, b)) for a, b in h.edges()}
    for perm in itertools.permutations(hv):
        m = dict(zip(gv, perm))
        if all((min(m[u], m[v]), max(m[u], m[v])) in hedges for u, v in gedges):
            return True
    return False


def graph_digest(g: Graph) -> str:
    """Short digest of degree sequence + sorted edge list (labeled; not
    isomorphism invariant)."""
    import hashlib

    ids = g.sorted_vertices()
    pos = {v: i for i, v in enumerate(ids)}
    degs = ",".join(str(g.degree(v)) for v in ids)
    edges = ";".join(f"{pos[u]}-{pos[v]}" for u, v in sorted(g.edges()))
    return hashlib.sha256(f"{degs}|{edges}".encode()).hexdigest()[:12]

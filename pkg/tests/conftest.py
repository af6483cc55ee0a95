import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from k4free.graph import Graph

# several properties brute-force small graphs; individual examples can
# legitimately take longer than the default 200ms deadline
settings.register_profile("slow-oracles", deadline=None)
settings.load_profile("slow-oracles")


@st.composite
def graphs(draw, min_n=0, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    g = Graph.from_edges(range(n), edges)
    if connected and not g.is_connected():
        # join the components with a path of extra edges
        comps = g.components()
        extra = [
            (min(comps[i]), min(comps[i + 1])) for i in range(len(comps) - 1)
        ]
        g = Graph.from_edges(range(n), list(g.edges()) + extra)
    return g


def all_simple_paths(g, u, v, allowed):
    """Simple u-v paths whose interior vertices stay inside `allowed`."""
    out = []
    stack = [(u, (u,))]
    while stack:
        cur, path = stack.pop()
        for nxt in g.neighbors(cur):
            if nxt == v and cur != u or (nxt == v and len(path) == 1):
                out.append(path + (v,))
            elif nxt in allowed and nxt not in path:
                stack.append((nxt, path + (nxt,)))
    return out


def has_k4_subdivision_bruteforce(g):
    """Independent oracle: search four branch vertices joined by six
    internally disjoint paths.  Exponential; only for tiny graphs."""
    vs = g.sorted_vertices()
    for branch in itertools.combinations(vs, 4):
        bset = set(branch)
        others = set(vs) - bset
        pairs = list(itertools.combinations(branch, 2))

        def place(i, used):
            if i == len(pairs):
                return True
            a, b = pairs[i]
            for path in all_simple_paths(g, a, b, others - used):
                interior = set(path[1:-1])
                if interior & bset or interior & used:
                    continue
                if place(i + 1, used | interior):
                    return True
            return False

        if place(0, set()):
            return True
    return False


@pytest.fixture
def k5():
    from k4free.generators import complete_graph

    return complete_graph(5)


@pytest.fixture
def k4():
    from k4free.generators import complete_graph

    return complete_graph(4)


@pytest.fixture
def subdivided_k4():
    """K4 on 0..3 with edge 0-1 replaced by the path 0-4-1."""
    from k4free.generators import complete_graph

    g = complete_graph(4).delete_edge(0, 1)
    return Graph.from_edges(range(5), list(g.edges()) + [(0, 4), (1, 4)])

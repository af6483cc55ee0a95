"""Bitmask graph primitives used by the solvers.

Graphs with at most 63 vertices are handled as numpy int64 adjacency rows
(bit j of adj[i] set iff ij is an edge) plus an int64 mask of active
vertices.  Vertices are deleted by clearing their bit in the active mask;
adjacency rows are always intersected with the mask before use.

Degree-2 elimination here is label preserving: a degree-2 vertex is
dropped and, when its two neighbors are non-adjacent, the missing edge is
added between them.  This yields the same graph as the contraction rule up
to naming, and any transversal of the eliminated graph is verbatim a
transversal of the graph before the step.  The solvers rely on that fact
to return vertex sets without any lifting bookkeeping.

All hot functions are numba-compiled when numba is available; the plain
Python definitions are kept as a fallback so the package still works (at
reduced speed) without a JIT.
"""

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def lowest_bit_index(x):
    # index of least significant set bit; x must be nonzero
    return popcount((x & -x) - 1)


@njit(cache=True)
def k4mf(adj, active):
    """True iff the active subgraph has no K4 minor (reduces to empty)."""
    n = adj.shape[0]
    a = adj.copy()
    act = active
    while act:
        found = -1
        d = 0
        nb = np.int64(0)
        for i in range(n):
            if act >> i & 1:
                nbi = a[i] & act
                di = popcount(nbi)
                if di <= 2:
                    found = i
                    d = di
                    nb = nbi
                    break
        if found < 0:
            return False
        act &= ~(np.int64(1) << found)
        if d == 2:
            u = lowest_bit_index(nb)
            rest = nb & ~(np.int64(1) << u)
            w = lowest_bit_index(rest)
            if not (a[u] >> w) & 1:
                a[u] |= np.int64(1) << w
                a[w] |= np.int64(1) << u
    return True


@njit(cache=True)
def suppress_inplace(adj, active):
    """Eliminate degree-<=2 vertices in place; returns the new active mask.

    Stops when every active vertex has degree >= 3 (or nothing is left).
    """
    n = adj.shape[0]
    act = active
    while act:
        found = -1
        d = 0
        nb = np.int64(0)
        for i in range(n):
            if act >> i & 1:
                nbi = adj[i] & act
                di = popcount(nbi)
                if di <= 2:
                    found = i
                    d = di
                    nb = nbi
                    break
        if found < 0:
            return act
        act &= ~(np.int64(1) << found)
        if d == 2:
            u = lowest_bit_index(nb)
            rest = nb & ~(np.int64(1) << u)
            w = lowest_bit_index(rest)
            if not (adj[u] >> w) & 1:
                adj[u] |= np.int64(1) << w
                adj[w] |= np.int64(1) << u
    return act


@njit(cache=True)
def connected(adj, active):
    """True iff the active subgraph is connected (empty counts as connected)."""
    if active == 0:
        return True
    n = adj.shape[0]
    start = lowest_bit_index(active)
    seen = np.int64(1) << start
    frontier = seen
    while frontier:
        nxt = np.int64(0)
        for i in range(n):
            if frontier >> i & 1:
                nxt |= adj[i] & active
        frontier = nxt & ~seen
        seen |= frontier
    return seen == active


@njit(cache=True)
def s_brute(adj, active):
    """Minimum transversal of the active subgraph by subset enumeration.

    Subsets are tried in increasing size, lexicographic within a size, so
    the returned (size, witness mask) is the lexicographically least
    minimum transversal over the active vertex positions in ascending
    order.
    """
    if k4mf(adj, active):
        return 0, np.int64(0)
    n = adj.shape[0]
    verts = np.empty(n, dtype=np.int64)
    cnt = 0
    for i in range(n):
        if active >> i & 1:
            verts[cnt] = i
            cnt += 1
    idx = np.empty(cnt, dtype=np.int64)
    for k in range(1, cnt + 1):
        for i in range(k):
            idx[i] = i
        while True:
            mask = np.int64(0)
            for i in range(k):
                mask |= np.int64(1) << verts[idx[i]]
            if k4mf(adj, active & ~mask):
                return k, mask
            i = k - 1
            while i >= 0 and idx[i] == cnt - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    return cnt, active  # unreachable: removing everything is always enough


@njit(cache=True)
def obstruction(adj, active):
    """Vertex mask of an edge-minimal subgraph that still has a K4 minor.

    Precondition: the active subgraph has a K4 minor.  A single greedy
    pass over the edges (ascending endpoint pairs) deletes every edge
    whose removal keeps a K4 minor; what remains is a K4 subdivision and
    its non-isolated vertices are returned.
    """
    n = adj.shape[0]
    b = adj.copy()
    for i in range(n):
        if not (active >> i & 1):
            continue
        for j in range(i + 1, n):
            if (active >> j & 1) and (b[i] >> j & 1):
                b[i] &= ~(np.int64(1) << j)
                b[j] &= ~(np.int64(1) << i)
                if k4mf(b, active):
                    b[i] |= np.int64(1) << j
                    b[j] |= np.int64(1) << i
    mask = np.int64(0)
    for i in range(n):
        if (active >> i & 1) and (b[i] & active):
            mask |= np.int64(1) << i
    return mask


@njit(cache=True)
def s_branch(adj, active):
    """Minimum transversal size by branch-and-reduce.

    Eliminates degree-<=2 vertices, then branches on every vertex of a
    K4-subdivision obstruction (each transversal must meet it).
    """
    a = adj.copy()
    act = suppress_inplace(a, active)
    if act == 0:
        return 0
    obs = obstruction(a, act)
    best = 64
    n = adj.shape[0]
    for x in range(n):
        if obs >> x & 1:
            r = s_branch(a, act & ~(np.int64(1) << x)) + 1
            if r < best:
                best = r
    return best


@njit(cache=True)
def connected_edge_masks(n):
    """Edge bitmasks of all connected labeled graphs on vertices 0..n-1.

    Edge (i, j) with i < j gets bit position p in the usual row-major pair
    order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    """
    npairs = n * (n - 1) // 2
    rows = np.empty(npairs, dtype=np.int64)
    cols = np.empty(npairs, dtype=np.int64)
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            rows[p] = i
            cols[p] = j
            p += 1
    total = 1 << npairs
    out = np.empty(total, dtype=np.int64)
    cnt = 0
    adj = np.zeros(n, dtype=np.int64)
    for em in range(total):
        for i in range(n):
            adj[i] = 0
        for p in range(npairs):
            if em >> p & 1:
                adj[rows[p]] |= np.int64(1) << cols[p]
                adj[cols[p]] |= np.int64(1) << rows[p]
        if connected(adj, (np.int64(1) << n) - 1):
            out[cnt] = em
            cnt += 1
    return out[:cnt].copy()


def adj_from_edge_mask(n, em):
    """numpy adjacency rows from an edge bitmask in pair order (see above)."""
    adj = np.zeros(n, dtype=np.int64)
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if em >> p & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            p += 1
    return adj


def edge_mask_from_adj(adj, n):
    em = 0
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i] >> j & 1:
                em |= 1 << p
            p += 1
    return em


def adjacency_masks(g):
    """(sorted ids, adjacency rows, full active mask) for a Graph.

    Requires at most 63 vertices; bit positions follow ascending vertex id.
    """
    ids = sorted(g.vertices)
    if len(ids) > 63:
        raise ValueError(f"bitmask path supports at most 63 vertices, got {len(ids)}")
    pos = {v: i for i, v in enumerate(ids)}
    adj = np.zeros(max(len(ids), 1), dtype=np.int64)
    for v in ids:
        m = 0
        for w in g.neighbors(v):
            m |= 1 << pos[w]
        adj[pos[v]] = m
    return ids, adj, np.int64((1 << len(ids)) - 1)


def bits(mask):
    """Indices of set bits in ascending order."""
    out = []
    i = 0
    m = int(mask)
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out

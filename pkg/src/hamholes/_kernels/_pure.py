"""Pure-Python enumeration kernels.

These are the hot inner loops of the package: bipartite-hole search,
Hamiltonicity backtracking and maximum-independent-set branch and bound.
A compiled twin lives in ``_speedups.pyx``; the two implementations must
visit search nodes in exactly the same order so that results, witnesses and
budget accounting agree bit for bit.  Keep any change synchronized.

All kernels take adjacency as a sequence of per-vertex neighbor bitmasks
(``adj[v] >> u & 1`` iff ``uv`` is an edge).  Status codes follow one
convention: 0 = answer found / computed, 1 = search space exhausted,
2 = node budget exceeded.
"""

from __future__ import annotations

FOUND = 0
EXHAUSTED = 1
OVER_BUDGET = 2


class _Budget(Exception):
    pass


def hole_search(adj, n: int, a: int, b: int):
    """Lexicographically first a-subset X with |V \\ (X ∪ N(X))| >= b.

    Returns the bitmask of X, or None when no such subset exists.  The
    caller is responsible for ensuring a + b <= n and for sizing the work
    budget (the search probes at most C(n, a) subsets).
    """
    full = (1 << n) - 1

    def go(start: int, picked: int, xmask: int, closed: int):
        rest = full & ~closed
        if rest.bit_count() < b:
            return None
        if picked == a:
            return xmask
        for v in range(start, n - (a - picked) + 1):
            hit = go(v + 1, picked + 1, xmask | (1 << v), closed | adj[v] | (1 << v))
            if hit is not None:
                return hit
        return None

    return go(0, 0, 0, 0)


def hamilton_cycle_search(adj, n: int, max_nodes: int):
    """Exhaustive Hamilton-cycle backtracking, neighbors in ascending order.

    Returns (status, order, nodes): ``order`` is the found cycle as a vertex
    list starting at 0 (None unless status == FOUND), ``nodes`` the number of
    search nodes expanded.  The caller must pre-filter trivial rejections
    (n < 3, minimum degree < 2, disconnected); this routine only backtracks.
    """
    full = (1 << n) - 1
    path = [0]
    nodes = 0

    def dfs(cur: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise _Budget
        if len(path) == n:
            return bool(adj[cur] & 1)
        # Every unvisited vertex still needs two cycle neighbors, all of
        # which lie among the other unvisited vertices, `cur` and vertex 0.
        rest = full & ~visited
        avail = rest | (1 << cur) | 1
        r = rest
        while r:
            low = r & -r
            v = low.bit_length() - 1
            if (adj[v] & (avail & ~low)).bit_count() < 2:
                return False
            r ^= low
        cand = adj[cur] & rest
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            path.append(w)
            if dfs(w, visited | low):
                return True
            path.pop()
            cand ^= low
        return False

    try:
        if dfs(0, 1):
            return FOUND, list(path), nodes
        return EXHAUSTED, None, nodes
    except _Budget:
        return OVER_BUDGET, None, nodes


def independence_number(adj, n: int, max_nodes: int):
    """Branch-and-bound maximum independent set size.

    Returns (status, size, nodes).  Branching vertex: maximum degree inside
    the candidate set, ties to the lowest id; bound: |current| + |candidates|.
    """
    best = 0
    nodes = 0

    def go(cand: int, size: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > max_nodes:
            raise _Budget
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = size
            return
        pick = -1
        pick_deg = -1
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            d = (adj[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
            c ^= low
        go(cand & ~(adj[pick] | (1 << pick)), size + 1)
        go(cand & ~(1 << pick), size)

    try:
        go((1 << n) - 1, 0)
        return FOUND, best, nodes
    except _Budget:
        return OVER_BUDGET, best, nodes

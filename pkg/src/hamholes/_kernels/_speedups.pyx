# cython: boundscheck=False, wraparound=False
"""Compiled kernels for graphs on at most 64 vertices.

Twin of ``_pure.py``: same algorithms, same search order, same budget
accounting, single-word uint64 bitmasks instead of Python ints.  Any change
here must be mirrored there (the test suite cross-checks the two backends).
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

FOUND = 0
EXHAUSTED = 1
OVER_BUDGET = 2

cdef int64_t _MAX_NODES_CAP = <int64_t>1 << 62


cdef uint64_t _hole_go(uint64_t* adj, int n, int a, int b, uint64_t full,
                       int start, int picked, uint64_t xmask, uint64_t closed,
                       bint* found):
    cdef uint64_t rest = full & ~closed
    cdef uint64_t hit
    cdef int v
    if __builtin_popcountll(rest) < b:
        return 0
    if picked == a:
        found[0] = True
        return xmask
    for v in range(start, n - (a - picked) + 1):
        hit = _hole_go(adj, n, a, b, full, v + 1, picked + 1,
                       xmask | (<uint64_t>1 << v),
                       closed | adj[v] | (<uint64_t>1 << v), found)
        if found[0]:
            return hit
    return 0


def hole_search(adj, int n, int a, int b):
    cdef uint64_t cadj[64]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    cdef uint64_t full = (<uint64_t>0 - 1) >> (64 - n) if n < 64 else <uint64_t>0 - 1
    cdef bint found = False
    cdef uint64_t res = _hole_go(&cadj[0], n, a, b, full, 0, 0, 0, 0, &found)
    if found:
        return int(res)
    return None


cdef struct HamState:
    uint64_t* adj
    int n
    uint64_t full
    int* path
    int depth
    int64_t nodes
    int64_t max_nodes
    bint over


cdef bint _ham_dfs(HamState* st, int cur, uint64_t visited):
    cdef uint64_t rest, avail, r, low, cand
    cdef int v, w
    st.nodes += 1
    if st.nodes > st.max_nodes:
        st.over = True
        return False
    if st.depth == st.n:
        return (st.adj[cur] & 1) != 0
    rest = st.full & ~visited
    avail = rest | (<uint64_t>1 << cur) | 1
    r = rest
    while r:
        low = r & (<uint64_t>0 - r)
        v = __builtin_ctzll(low)
        if __builtin_popcountll(st.adj[v] & (avail & ~low)) < 2:
            return False
        r ^= low
    cand = st.adj[cur] & rest
    while cand:
        low = cand & (<uint64_t>0 - cand)
        w = __builtin_ctzll(low)
        st.path[st.depth] = w
        st.depth += 1
        if _ham_dfs(st, w, visited | low):
            return True
        if st.over:
            return False
        st.depth -= 1
        cand ^= low
    return False


def hamilton_cycle_search(adj, int n, max_nodes):
    cdef uint64_t cadj[64]
    cdef int cpath[64]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    cpath[0] = 0
    cdef HamState st
    st.adj = &cadj[0]
    st.n = n
    st.full = (<uint64_t>0 - 1) >> (64 - n) if n < 64 else <uint64_t>0 - 1
    st.path = &cpath[0]
    st.depth = 1
    st.nodes = 0
    st.max_nodes = min(max_nodes, _MAX_NODES_CAP)
    st.over = False
    cdef bint hit = _ham_dfs(&st, 0, 1)
    if st.over:
        return OVER_BUDGET, None, int(st.nodes)
    if hit:
        return FOUND, [cpath[i] for i in range(n)], int(st.nodes)
    return EXHAUSTED, None, int(st.nodes)


cdef struct MisState:
    uint64_t* adj
    int best
    int64_t nodes
    int64_t max_nodes
    bint over


cdef void _mis_go(MisState* st, uint64_t cand, int size):
    cdef uint64_t c, low
    cdef int pick, pick_deg, v, d
    st.nodes += 1
    if st.nodes > st.max_nodes:
        st.over = True
        return
    if size + __builtin_popcountll(cand) <= st.best:
        return
    if cand == 0:
        st.best = size
        return
    pick = -1
    pick_deg = -1
    c = cand
    while c:
        low = c & (<uint64_t>0 - c)
        v = __builtin_ctzll(low)
        d = __builtin_popcountll(st.adj[v] & cand)
        if d > pick_deg:
            pick = v
            pick_deg = d
        c ^= low
    _mis_go(st, cand & ~(st.adj[pick] | (<uint64_t>1 << pick)), size + 1)
    if st.over:
        return
    _mis_go(st, cand & ~(<uint64_t>1 << pick), size)


def independence_number(adj, int n, max_nodes):
    cdef uint64_t cadj[64]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    cdef MisState st
    st.adj = &cadj[0]
    st.best = 0
    st.nodes = 0
    st.max_nodes = min(max_nodes, _MAX_NODES_CAP)
    st.over = False
    _mis_go(&st, (<uint64_t>0 - 1) >> (64 - n) if n < 64 else <uint64_t>0 - 1, 0)
    if st.over:
        return OVER_BUDGET, int(st.best), int(st.nodes)
    return FOUND, int(st.best), int(st.nodes)

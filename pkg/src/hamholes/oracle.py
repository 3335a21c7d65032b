"""Exhaustive exact solvers used as ground truth in tests and experiments.

Everything here is exact-or-abort: answers are computed by full enumeration
under an explicit work budget, and exceeding the budget raises instead of
degrading to an approximation.  None of these routines sit on the main
algorithms' hot path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from hamholes import _kernels
from hamholes.errors import BudgetExceededError
from hamholes.graph import Graph, _bits, components, min_degree
from hamholes.hamilton import CycleSeq


@dataclass(frozen=True)
class WorkBudget:
    """Cap on node expansions / subset probes for one oracle invocation."""

    max_probes: int = 10**8

    def __post_init__(self):
        if self.max_probes < 1:
            raise ValueError("budget must be positive")


DEFAULT_BUDGET = WorkBudget()


def is_hamiltonian_exact(
    g: Graph, budget: WorkBudget = DEFAULT_BUDGET
) -> tuple[bool, CycleSeq | None]:
    """Exact Hamiltonicity with a witness cycle on success.

    Trivial rejections (min degree < 2, disconnected) are free; otherwise a
    backtracking search with a two-available-neighbors prune runs under the
    budget, counting node expansions.
    """
    if g.n < 3:
        raise ValueError(f"Hamiltonicity needs n >= 3, got {g.n}")
    if min_degree(g) < 2 or len(components(g)) > 1:
        return False, None
    status, order, _ = _kernels.hamilton_cycle_search(
        g.adj_bits, g.n, budget.max_probes
    )
    if status == _kernels.OVER_BUDGET:
        raise BudgetExceededError(
            f"hamiltonicity search exceeded {budget.max_probes} node expansions"
        )
    if status == _kernels.FOUND:
        return True, CycleSeq(g, order)
    return False, None


def independence_number_exact(g: Graph, budget: WorkBudget = DEFAULT_BUDGET) -> int:
    """Exact maximum independent set size by branch and bound."""
    if g.n == 0:
        return 0
    status, best, _ = _kernels.independence_number(g.adj_bits, g.n, budget.max_probes)
    if status == _kernels.OVER_BUDGET:
        raise BudgetExceededError(
            f"independence search exceeded {budget.max_probes} node expansions"
        )
    return best


def _connected_within(g: Graph, mask: int) -> bool:
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= g.adj_bits[v]
        frontier = grow & mask & ~comp
        comp |= frontier
    return comp == mask


def vertex_connectivity_exact(g: Graph, budget: WorkBudget = DEFAULT_BUDGET) -> int:
    """Exact vertex connectivity by removal-set enumeration.

    Scans removal sets by increasing size; the first size whose removal
    leaves a disconnected graph on >= 2 vertices is kappa.  Complete graphs
    have no such set and use the n-1 convention.  Each candidate set costs
    one budget probe.
    """
    if g.n < 1:
        raise ValueError("connectivity needs a nonempty graph")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    probes = 0
    for size in range(0, g.n - 1):
        for cut in itertools.combinations(range(g.n), size):
            probes += 1
            if probes > budget.max_probes:
                raise BudgetExceededError(
                    f"connectivity enumeration exceeded {budget.max_probes} probes"
                )
            cut_mask = 0
            for v in cut:
                cut_mask |= 1 << v
            remaining = ((1 << g.n) - 1) & ~cut_mask
            if not _connected_within(g, remaining):
                return size
    # A non-complete graph always has a disconnecting set (remove everything
    # except a non-adjacent pair), so this is the complete-graph convention.
    return g.n - 1


def _hamilton_cycles(g: Graph, counter: list[int], max_probes: int):
    """Yield the edge lists of all Hamilton cycles of g, each exactly once.

    Cycles are anchored at vertex 0 and emitted with second vertex < last
    vertex to skip reversals.  Shares the caller's probe counter.
    """
    n = g.n
    full = (1 << n) - 1
    adj = g.adj_bits
    path = [0]

    def dfs(cur: int, visited: int):
        counter[0] += 1
        if counter[0] > max_probes:
            raise BudgetExceededError(
                f"edge-disjoint search exceeded {max_probes} node expansions"
            )
        if len(path) == n:
            if (adj[cur] & 1) and path[1] < path[-1]:
                yield [(path[i - 1], path[i]) for i in range(n)]
            return
        rest = full & ~visited
        avail = rest | (1 << cur) | 1
        r = rest
        while r:
            low = r & -r
            v = low.bit_length() - 1
            if (adj[v] & (avail & ~low)).bit_count() < 2:
                return
            r ^= low
        cand = adj[cur] & rest
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            path.append(w)
            yield from dfs(w, visited | low)
            path.pop()
            cand ^= low

    yield from dfs(0, 1)


def exists_edge_disjoint_hc_exact(
    g: Graph, r: int, budget: WorkBudget = DEFAULT_BUDGET
) -> bool:
    """Whether g contains r pairwise edge-disjoint Hamilton cycles, exactly.

    Nested backtracking: enumerate Hamilton cycles of the current graph and
    recurse on the graph minus each one.  Cheap necessary conditions
    (m >= r*n, min degree >= 2r) prune each level.  Intended for small
    instances (about n <= 10, r <= 2); the budget is shared across the whole
    nested search.
    """
    if g.n < 3:
        raise ValueError(f"edge-disjoint search needs n >= 3, got {g.n}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    counter = [0]

    def solve(h: Graph, need: int) -> bool:
        if h.m < need * h.n or min_degree(h) < 2 * need:
            return False
        if need == 1:
            remaining = budget.max_probes - counter[0]
            if remaining <= 0:
                raise BudgetExceededError(
                    f"edge-disjoint search exceeded {budget.max_probes} node expansions"
                )
            status, _, used = _kernels.hamilton_cycle_search(
                h.adj_bits, h.n, remaining
            )
            counter[0] += used
            if status == _kernels.OVER_BUDGET:
                raise BudgetExceededError(
                    f"edge-disjoint search exceeded {budget.max_probes} node expansions"
                )
            return status == _kernels.FOUND
        for cycle_edges in _hamilton_cycles(h, counter, budget.max_probes):
            if solve(h.remove_edges(cycle_edges), need - 1):
                return True
        return False

    return solve(g, r)

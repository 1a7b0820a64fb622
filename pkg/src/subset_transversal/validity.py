"""T-forest / T-bipartite tests and solution checking for the three problems."""

from dataclasses import dataclass, field
from enum import Enum

from .graph import _block_masks, is_bipartite_mask, members, to_mask


class Problem(str, Enum):
    SVC = "svc"
    SFVS = "sfvs"
    SOCT = "soct"


@dataclass(frozen=True)
class Instance:
    graph: object
    terminals: int
    problem: Problem
    s: int | None = None

    def __post_init__(self):
        t = to_mask(self.terminals)
        object.__setattr__(self, "terminals", t)
        object.__setattr__(self, "problem", Problem(self.problem))
        if t & ~self.graph.all:
            raise ValueError("terminal set is not a subset of V(G)")
        if self.s is not None and self.s < 0:
            raise ValueError("s must be non-negative")


@dataclass
class Solution:
    """A transversal ``vertices`` (bitmask) for ``problem``."""

    problem: Problem
    vertices: int
    validated: bool = False
    stats: dict = field(default_factory=dict)

    @property
    def size(self):
        return self.vertices.bit_count()

    def vertex_list(self):
        return members(self.vertices)

    def __len__(self):
        return self.size


def is_t_forest(G, T, within=None):
    """True iff no cycle of ``G[within]`` passes through a vertex of ``T``.

    A vertex lies on a cycle exactly when it belongs to a block with at least
    three vertices.
    """
    within = G.all if within is None else within
    T = to_mask(T) & within
    if not T:
        return True
    for block in _block_masks(G, within):
        if block & T and block.bit_count() >= 3:
            return False
    return True


def is_t_bipartite(G, T, within=None):
    """True iff no odd cycle of ``G[within]`` passes through a vertex of ``T``.

    Every vertex of a non-bipartite block lies on some odd cycle, so it is
    enough to test the blocks that meet ``T``.
    """
    within = G.all if within is None else within
    T = to_mask(T) & within
    if not T:
        return True
    if is_bipartite_mask(G, within):
        return True
    for block in _block_masks(G, within):
        if block & T and block.bit_count() >= 3 and not is_bipartite_mask(G, block):
            return False
    return True


def _union_adj(G, mask):
    out = 0
    for v in members(mask):
        out |= G.adj[v]
    return out


def t_walk_parities(G, T, source, within=None):
    """Vertices reachable from ``source`` by an even / odd walk through a terminal.

    Returns ``(even, odd)`` masks.  In a bipartite ``G[within]`` walk and path
    parities agree, so this answers even T-path queries there.
    """
    within = G.all if within is None else within
    T = to_mask(T)
    start = 1 << source
    # reach[parity][hit]
    reach = [[0, 0], [0, 0]]
    hit = 1 if T & start else 0
    reach[0][hit] = start
    frontier = [[0, 0], [0, 0]]
    frontier[0][hit] = start
    while any(frontier[p][h] for p in (0, 1) for h in (0, 1)):
        nxt = [[0, 0], [0, 0]]
        for p in (0, 1):
            q = 1 - p
            step0 = _union_adj(G, frontier[p][0]) & within
            step1 = _union_adj(G, frontier[p][1]) & within
            nxt[q][0] |= step0 & ~T
            nxt[q][1] |= (step0 & T) | step1
        for p in (0, 1):
            for h in (0, 1):
                nxt[p][h] &= ~reach[p][h]
                reach[p][h] |= nxt[p][h]
        frontier = nxt
    return reach[0][1], reach[1][1]


def t_vertex_cover_ok(G, T, S):
    """Every edge with an endpoint in ``T`` has an endpoint in ``S``."""
    free_terminals = T & ~S
    keep = G.all & ~S
    for t in members(free_terminals):
        if G.adj[t] & keep:
            return False
    return True


def is_valid(G, T, problem, S):
    """Mask-level validity check shared by solvers and the oracle."""
    keep = G.all & ~S
    if problem is Problem.SVC:
        return t_vertex_cover_ok(G, T, S)
    if problem is Problem.SFVS:
        return is_t_forest(G, T & keep, keep)
    return is_t_bipartite(G, T & keep, keep)


def verify_solution(inst, S):
    S = to_mask(S)
    if S & ~inst.graph.all:
        raise ValueError("solution is not a subset of V(G)")
    return is_valid(inst.graph, inst.terminals, inst.problem, S)


def validated(inst, S, **stats):
    """Build a ``Solution`` and certify it; invalid sets are a bug, not a result."""
    S = to_mask(S)
    if not verify_solution(inst, S):
        raise AssertionError(f"{inst.problem.value} solver produced an invalid set {members(S)}")
    return Solution(inst.problem, S, True, dict(stats))


def minimum_solution_bound_holds(T, S):
    """Every minimum solution S satisfies |S \\ T| <= |T \\ S|."""
    T, S = to_mask(T), to_mask(S)
    return (S & ~T).bit_count() <= (T & ~S).bit_count()

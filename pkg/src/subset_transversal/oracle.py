"""Exponential-time ground truth for the polynomial solvers.

Everything here is deliberately naive: subset enumeration for minimum
transversals and explicit simple-cycle enumeration for the T-forest and
T-bipartite predicates.
"""

from itertools import combinations

from .errors import InstanceTooLarge
from .graph import members, to_mask
from .validity import Instance, Problem, Solution, is_valid

MAX_BRUTE_N = 24
MAX_CYCLE_N = 12


def brute_force_minimum(inst):
    """Lexicographically first minimum transversal, by increasing size.

    Every minimum solution satisfies |S \\ T| <= |T \\ S|, i.e. |S| <= |T|, so
    the search never looks past size |T| (T itself is always a solution) and
    skips sets violating the bound.
    """
    G, T = inst.graph, inst.terminals
    if G.n > MAX_BRUTE_N:
        raise InstanceTooLarge(f"brute force is limited to n <= {MAX_BRUTE_N}")
    problem = inst.problem
    tested = 0
    for k in range(T.bit_count() + 1):
        for combo in combinations(range(G.n), k):
            S = 0
            for v in combo:
                S |= 1 << v
            if (S & ~T).bit_count() > (T & ~S).bit_count():
                continue
            tested += 1
            if is_valid(G, T, problem, S):
                return Solution(problem, S, True, {"route": "brute", "tested": tested})
    raise AssertionError("T itself must be a solution")


def brute_force_size(G, T, problem):
    return brute_force_minimum(Instance(G, T, problem)).size


def minimum_vertex_cover(G):
    """Minimum vertex cover, as Subset Vertex Cover with every vertex a terminal."""
    return brute_force_minimum(Instance(G, G.all, Problem.SVC))


def brute_force_extension(G, T, problem, removed, free):
    """Smallest valid ``removed | X`` over subsets ``X`` of ``free``.

    Vertices outside ``removed | free`` are kept.  Returns the mask or ``None``
    when no extension is valid.
    """
    T, removed, free = to_mask(T), to_mask(removed), to_mask(free)
    pool = members(free)
    for k in range(len(pool) + 1):
        for combo in combinations(pool, k):
            S = removed
            for v in combo:
                S |= 1 << v
            if is_valid(G, T, problem, S):
                return S
    return None


def simple_cycles(G, within=None):
    """Yield each simple cycle of ``G[within]`` once, as a vertex list.

    A cycle is reported from its smallest vertex, in the direction whose
    second vertex is smaller than its last.
    """
    within = G.all if within is None else to_mask(within)
    if within.bit_count() > MAX_CYCLE_N:
        raise InstanceTooLarge(f"cycle enumeration is limited to n <= {MAX_CYCLE_N}")
    for start in members(within):
        yield from _cycles_from(G.adj, start, within & ~((2 << start) - 1), [start], 1 << start)


def _cycles_from(adj, start, allowed, path, used):
    v = path[-1]
    for w in members(adj[v] & allowed & ~used):
        path.append(w)
        yield from _cycles_from(adj, start, allowed, path, used | 1 << w)
        path.pop()
    if len(path) >= 3 and adj[v] >> start & 1 and path[1] < path[-1]:
        yield list(path)


def naive_is_t_forest(G, T, within=None):
    T = to_mask(T)
    return not any(to_mask(c) & T for c in simple_cycles(G, within))


def naive_is_t_bipartite(G, T, within=None):
    T = to_mask(T)
    return not any(len(c) % 2 == 1 and to_mask(c) & T for c in simple_cycles(G, within))

"""Instance generators: seeded random graphs, the split-graph reduction, fixtures.

Randomness comes from ``random.Random(seed)`` (MT19937 seeded with the integer
seed).  Only two primitives are drawn from it: ``rng.random()`` (53-bit double,
the reference ``genrand_res53``) for edge coins, and ``_pick(rng, k)`` =
``int(rng.random() * k)`` for uniform choices, so any MT19937 port reproduces
the fixtures.
"""

import random

from .errors import GiveUp, UnknownFixture
from .graph import Graph, members
from .recognition import find_induced, is_split, sp1_p3, sp1_p4
from .validity import Instance, Problem

REJECTION_BUDGET = 10_000


def _pick(rng, k):
    return int(rng.random() * k)


def gnp(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_cograph(n, seed):
    """Random binary cotree with ``n`` leaves and fair-coin union/join labels.

    Repeatedly merges two uniformly chosen subtrees until one remains.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    parts = [1 << v for v in range(n)]
    adj = [0] * n
    while len(parts) > 1:
        a = parts.pop(_pick(rng, len(parts)))
        b = parts.pop(_pick(rng, len(parts)))
        if rng.random() < 0.5:
            for v in members(a):
                adj[v] |= b
            for v in members(b):
                adj[v] |= a
        parts.append(a | b)
    return Graph.from_adjacency(adj)


def random_cliques(n, rng, max_size=None):
    """Disjoint union of cliques with random sizes (a P3-free graph)."""
    max_size = max_size or n
    sizes = []
    left = n
    while left:
        k = 1 + _pick(rng, min(left, max_size))
        sizes.append(k)
        left -= k
    edges, offset = [], 0
    for k in sizes:
        edges.extend((offset + i, offset + j) for i in range(k) for j in range(i + 1, k))
        offset += k
    return _shuffled(Graph.from_edges(n, edges), rng)


def _shuffled(G, rng):
    perm = list(range(G.n))
    for i in range(G.n - 1, 0, -1):
        j = _pick(rng, i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return Graph.from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def _edge_walk(n, pattern, rng, steps):
    """Random edge toggles from a clique union, each kept only if the graph stays in class."""
    G = random_cliques(n, rng)
    adj = list(G.adj)
    for _ in range(steps):
        u, v = _pick(rng, n), _pick(rng, n)
        if u == v:
            continue
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        if find_induced(Graph.from_adjacency(adj), pattern) is not None:
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
    return Graph.from_adjacency(adj)


def random_in_class(n, s, p=0.5, seed=0, mode="auto", budget=REJECTION_BUDGET, family=sp1_p3):
    """Random ``family(s)``-free graph on ``n`` vertices, (sP1+P3)-free by default.

    ``mode="rejection"`` draws G(n, p) until one is in the class and raises
    ``GiveUp`` after ``budget`` draws.  ``mode="walk"`` starts from a random
    clique union and toggles random edges, rejecting toggles that leave the
    class.  ``mode="auto"`` tries a short rejection run, then the walk.
    """
    rng = random.Random(seed)
    pattern = family(s)
    if mode == "walk":
        G = _edge_walk(n, pattern, rng, steps=3 * n * n // 2 + 1)
    elif mode in ("rejection", "auto"):
        if mode == "rejection" and n > 40:
            raise ValueError("rejection mode is limited to n <= 40")
        tries = budget if mode == "rejection" else min(budget, 200)
        witness = None
        for _ in range(tries):
            G = gnp(n, p, rng)
            witness = find_induced(G, pattern)
            if witness is None:
                return G
        if mode == "rejection":
            raise GiveUp(f"no {pattern.name}-free G({n}, {p}) in {tries} draws", tries, witness)
        G = _edge_walk(n, pattern, rng, steps=3 * n * n // 2 + 1)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if find_induced(G, pattern) is not None:
        raise AssertionError("generated graph left the class")
    return G


def random_graph(n, p, seed):
    return gnp(n, p, random.Random(seed))


def random_terminals(n, rng, density=0.5):
    return sum(1 << v for v in range(n) if rng.random() < density)


def reduce_vc_to_soct_split(G):
    """Split graph G' with V(G') = V + E: V a clique, edge-vertex ``e`` joined to its ends.

    The terminals are the edge-vertices.  G has a vertex cover of size k iff
    G' has an odd T-cycle transversal of size k.  Edge-vertex ``G.n + i``
    stands for the i-th edge of ``G.edges()``.
    """
    n = G.n
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    terminals = 0
    for i, (a, b) in enumerate(G.edges()):
        e = n + i
        edges.extend([(a, e), (b, e)])
        terminals |= 1 << e
    H = Graph.from_edges(n + G.m, edges)
    if not is_split(H):
        raise AssertionError("reduction output is not split")
    return Instance(H, terminals, Problem.SOCT)


def project_to_vertex_cover(G, S):
    """Turn an odd T-cycle transversal of the reduced graph into a cover of ``G``.

    Each removed edge-vertex is replaced by one of its endpoints.
    """
    cover = S & G.all
    for i, (a, b) in enumerate(G.edges()):
        if S >> (G.n + i) & 1:
            cover |= 1 << (a if not cover >> b & 1 else b)
    return cover


# --- named fixtures --------------------------------------------------------------

HOUSE_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (2, 4)]
HOUSE_APEX = 1
HOUSE_SQUARE = 4

# outer cycle 0..4 (0 on top, clockwise), inner pentagram 5..9, spokes i -- i+5
PETERSEN_EDGES = ([(i, (i + 1) % 5) for i in range(5)]
                  + [(i, i + 5) for i in range(5)]
                  + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
PETERSEN_SQUARES = (2, 3, 4, 5)
PETERSEN_BLACK_LEFT = (1, 3, 5)
PETERSEN_BLACK_RIGHT = (2, 4, 5)


def house():
    return Graph.from_edges(5, HOUSE_EDGES)


def petersen():
    return Graph.from_edges(10, PETERSEN_EDGES)


def fixture(name, problem=Problem.SOCT):
    if name == "house":
        return Instance(house(), 1 << HOUSE_SQUARE, problem)
    if name == "petersen":
        return Instance(petersen(), sum(1 << v for v in PETERSEN_SQUARES), problem)
    if name == "fig5_p4":
        inst = reduce_vc_to_soct_split(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
        return Instance(inst.graph, inst.terminals, problem)
    raise UnknownFixture(f"unknown fixture {name!r}; expected house, petersen or fig5_p4")


# --- seeded instances ---------------------------------------------------------------

FAMILIES = ("cograph", "sp1p3", "sp1p4", "gnp")
TERMINAL_SEED_OFFSET = 0x9E3779B9


def random_instance(family, n, seed, problem, s=0, p=0.5, density=None, mode="auto"):
    """Seeded instance: the graph comes from ``seed``, the terminals from
    ``random.Random(seed + TERMINAL_SEED_OFFSET)`` (each vertex joins T with
    probability ``density``, itself drawn uniformly when ``None``)."""
    if family == "cograph":
        G = random_cograph(n, seed)
    elif family == "sp1p3":
        G = random_in_class(n, s, p=p, seed=seed, mode=mode)
    elif family == "sp1p4":
        G = random_in_class(n, s, p=p, seed=seed, mode=mode, family=sp1_p4)
    elif family == "gnp":
        G = random_graph(n, p, seed)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    rng = random.Random(seed + TERMINAL_SEED_OFFSET)
    if density is None:
        density = rng.random()
    return Instance(G, random_terminals(n, rng, density), problem)

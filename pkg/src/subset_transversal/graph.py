"""Simple undirected graphs over dense vertex ids, with bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  All algorithms in the package pass such masks around; ``to_mask`` and
``members`` convert to and from ordinary iterables at the API boundary.
"""

from dataclasses import dataclass, field

from .errors import FormatError, SelfLoop, VertexOutOfRange


def to_mask(vertices):
    """Return ``vertices`` as a bitmask; ints are passed through unchanged."""
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask):
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask):
    return mask.bit_count()


def lowest(mask):
    """Smallest member of a non-empty mask."""
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.
    """

    n: int
    adj: tuple
    m: int = field(default=0)

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n):
                raise VertexOutOfRange(u, n)
            if not (0 <= v < n):
                raise VertexOutOfRange(v, n)
            if u == v:
                raise SelfLoop(u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        m = sum(a.bit_count() for a in adj) // 2
        return cls(n, tuple(adj), m)

    @classmethod
    def from_adjacency(cls, adj):
        adj = tuple(adj)
        for v, a in enumerate(adj):
            if a >> v & 1:
                raise SelfLoop(v)
        m = sum(a.bit_count() for a in adj) // 2
        return cls(len(adj), adj, m)

    @property
    def all(self):
        """Mask of every vertex."""
        return (1 << self.n) - 1

    def neighbors(self, v):
        return members(self.adj[v])

    def degree(self, v, within=None):
        a = self.adj[v] if within is None else self.adj[v] & within
        return a.bit_count()

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def degree_sequence(self):
        return tuple(a.bit_count() for a in self.adj)

    def neighborhood(self, mask):
        """Open neighbourhood N(U) of a vertex set: neighbours outside U."""
        out = 0
        for v in members(mask):
            out |= self.adj[v]
        return out & ~mask

    def closed_neighborhood(self, mask):
        return self.neighborhood(mask) | mask

    def edges_within(self, mask):
        return sum((self.adj[v] & mask).bit_count() for v in members(mask)) // 2

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(n, edges):
    return Graph.from_edges(n, edges)


def induced_subgraph(G, S):
    """Return ``(G[S], relabel)`` where ``relabel[i]`` is the original id of new vertex ``i``."""
    S = to_mask(S)
    relabel = members(S)
    index = {v: i for i, v in enumerate(relabel)}
    adj = []
    for v in relabel:
        a = 0
        for w in members(G.adj[v] & S):
            a |= 1 << index[w]
        adj.append(a)
    return Graph.from_adjacency(adj), relabel


def complement(G):
    full = G.all
    return Graph.from_adjacency((~G.adj[v] & full) & ~(1 << v) for v in range(G.n))


def disjoint_union(G, H):
    shift = G.n
    adj = list(G.adj) + [a << shift for a in H.adj]
    return Graph.from_adjacency(adj)


def join(G, H):
    shift = G.n
    g_all, h_all = G.all, H.all << shift
    adj = [a | h_all for a in G.adj] + [(a << shift) | g_all for a in H.adj]
    return Graph.from_adjacency(adj)


def component_of(G, v, within):
    """Vertex set of the component of ``G[within]`` containing ``v``."""
    comp = frontier = 1 << v
    adj = G.adj
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & within & ~comp
        comp |= frontier
    return comp


def connected_components(G, within=None):
    """Components of ``G[within]`` as masks, ordered by smallest vertex."""
    remaining = G.all if within is None else within
    within = remaining
    comps = []
    while remaining:
        c = component_of(G, lowest(remaining), within)
        comps.append(c)
        remaining &= ~c
    return comps


def is_connected(G, within=None):
    within = G.all if within is None else within
    if not within:
        return True
    return component_of(G, lowest(within), within) == within


def _bfs_layers(G, root, within):
    layers = []
    seen = frontier = 1 << root
    adj = G.adj
    while frontier:
        layers.append(frontier)
        nxt = 0
        for v in members(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return layers


def two_coloring(G, within=None):
    """A proper 2-colouring of ``G[within]`` as ``{vertex: 0|1}``, or ``None``."""
    within = G.all if within is None else within
    colors = {}
    remaining = within
    while remaining:
        layers = _bfs_layers(G, lowest(remaining), within)
        for depth, layer in enumerate(layers):
            for v in members(layer):
                if G.adj[v] & layer:
                    return None
                colors[v] = depth & 1
            remaining &= ~layer
    return colors


def is_bipartite_mask(G, within):
    """Fast boolean form of ``two_coloring`` used in hot loops."""
    adj = G.adj
    remaining = within
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                a = adj[low.bit_length() - 1]
                if a & frontier:
                    return False
                nxt |= a
                f ^= low
            frontier = nxt & within & ~seen
            seen |= frontier
        remaining &= ~seen
    return True


def odd_cycle(G, within=None):
    """An odd cycle of ``G[within]`` as a vertex list, or ``None`` if bipartite."""
    within = G.all if within is None else within
    remaining = within
    while remaining:
        root = lowest(remaining)
        parent = {root: None}
        depth = {root: 0}
        order = [root]
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for w in members(G.adj[v] & within):
                if w not in depth:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    order.append(w)
                elif depth[w] == depth[v]:
                    # climb both BFS branches to their meeting point
                    left, right = [v], [w]
                    a, b = v, w
                    while parent[a] != parent[b]:
                        a, b = parent[a], parent[b]
                        left.append(a)
                        right.append(b)
                    left.append(parent[a])
                    return left + right[::-1]
        remaining &= ~to_mask(order)
    return None


def is_bipartite(G, within=None):
    """Return ``(coloring, None)`` when bipartite, else ``(None, odd_cycle)``."""
    coloring = two_coloring(G, within)
    if coloring is not None:
        return coloring, None
    return None, odd_cycle(G, within)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of a graph: maximal 2-connected subgraphs, bridges as 2-vertex blocks."""

    blocks: tuple
    cut_vertices: int
    non_trivial: tuple
    bipartite: tuple

    def blocks_containing(self, v):
        return [i for i, b in enumerate(self.blocks) if b >> v & 1]


def _block_masks(G, within):
    """Hopcroft-Tarjan biconnected components of ``G[within]``, iterative."""
    adj = G.adj
    disc = {}
    low = {}
    blocks = []
    counter = 0
    for root in members(within):
        if root in disc or not adj[root] & within:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(members(adj[root] & within)))]
        edges = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if w not in disc:
                    edges.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(members(adj[w] & within))))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edges.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                block = 0
                while True:
                    a, b = edges.pop()
                    block |= (1 << a) | (1 << b)
                    if a == u and b == v:
                        break
                blocks.append(block)
    return blocks


def block_decomposition(G, within=None):
    within = G.all if within is None else within
    blocks = _block_masks(G, within)
    seen_once = seen_twice = 0
    for b in blocks:
        seen_twice |= seen_once & b
        seen_once |= b
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=seen_twice,
        non_trivial=tuple(b.bit_count() >= 3 for b in blocks),
        bipartite=tuple(is_bipartite_mask(G, b) for b in blocks),
    )


# --- text format -------------------------------------------------------------
#
#   p <n> <m>
#   e <u> <v>        (1-indexed, m lines)
#   t <v>            (terminals, zero or more)
#   c ...            (comments)


def parse_instance(text):
    """Parse the instance text format into ``(Graph, terminal_mask)``."""
    n = None
    declared_m = None
    edges = []
    terminals = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise FormatError("duplicate problem line", lineno)
            if len(tokens) != 3:
                raise FormatError("expected 'p <n> <m>'", lineno)
            n, declared_m = _ints(tokens[1:], lineno)
            if n < 0 or declared_m < 0:
                raise FormatError("negative size", lineno)
            continue
        if n is None:
            raise FormatError(f"'{kind}' line before problem line", lineno)
        if kind == "e":
            if len(tokens) != 3:
                raise FormatError("expected 'e <u> <v>'", lineno)
            u, v = _ints(tokens[1:], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise FormatError(f"vertex {x} out of range 1..{n}", lineno)
            if u == v:
                raise FormatError(f"self-loop on vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        elif kind == "t":
            if len(tokens) != 2:
                raise FormatError("expected 't <v>'", lineno)
            (v,) = _ints(tokens[1:], lineno)
            if not 1 <= v <= n:
                raise FormatError(f"terminal {v} out of range 1..{n}", lineno)
            terminals |= 1 << (v - 1)
        else:
            raise FormatError(f"unknown line type '{kind}'", lineno)
    if n is None:
        raise FormatError("missing problem line")
    if len(edges) != declared_m:
        raise FormatError(f"declared {declared_m} edges but found {len(edges)}")
    return Graph.from_edges(n, edges), terminals


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)}", lineno) from None


def format_instance(G, terminals=0, comments=()):
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    lines.extend(f"t {v + 1}" for v in members(to_mask(terminals)))
    return "\n".join(lines) + "\n"


def read_instance(path):
    with open(path) as fh:
        return parse_instance(fh.read())


def write_instance(path, G, terminals=0, comments=()):
    with open(path, "w") as fh:
        fh.write(format_instance(G, terminals, comments))


# Solution files hold one 1-indexed vertex per line; blank lines and "c" lines are skipped.


def parse_solution(text, n):
    S = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if len(tokens) != 1:
            raise FormatError("expected one vertex per line", lineno)
        (v,) = _ints(tokens, lineno)
        if not 1 <= v <= n:
            raise FormatError(f"vertex {v} out of range 1..{n}", lineno)
        S |= 1 << (v - 1)
    return S


def format_solution(S):
    return "".join(f"{v + 1}\n" for v in members(to_mask(S)))

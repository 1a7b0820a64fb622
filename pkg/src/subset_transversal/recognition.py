"""Hereditary class membership: cographs and their binary cotrees, H-freeness."""

from dataclasses import dataclass

from .errors import NotCograph, NotInClass, PatternTooLarge
from .graph import Graph, component_of, lowest, members, to_mask

LEAF, UNION, JOIN = "leaf", "union", "join"

MAX_PATTERN = 12


# --- cotrees -----------------------------------------------------------------


@dataclass(frozen=True)
class Cotree:
    """A binary (modified) cotree stored as an arena.

    Children always precede their parent, so iterating ``range(len(kind))``
    is a valid bottom-up order.  ``mask[x]`` is the vertex set of ``G_x``.
    """

    kind: tuple
    left: tuple
    right: tuple
    vertex: tuple
    mask: tuple
    root: int

    def __len__(self):
        return len(self.kind)

    def to_graph(self, n=None):
        """Rebuild the graph the cotree describes."""
        if n is None:
            n = self.mask[self.root].bit_length()
        adj = [0] * n
        for x, k in enumerate(self.kind):
            if k == JOIN:
                a, b = self.mask[self.left[x]], self.mask[self.right[x]]
                for v in members(a):
                    adj[v] |= b
                for v in members(b):
                    adj[v] |= a
        return Graph.from_adjacency(adj)

    def to_text(self, x=None):
        """Nested text form, e.g. ``(J (U 0 1) 2)``."""
        x = self.root if x is None else x
        if self.kind[x] == LEAF:
            return str(self.vertex[x])
        tag = "J" if self.kind[x] == JOIN else "U"
        return f"({tag} {self.to_text(self.left[x])} {self.to_text(self.right[x])})"


class _CotreeBuilder:
    def __init__(self):
        self.kind, self.left, self.right, self.vertex, self.mask = [], [], [], [], []

    def add(self, kind, left=-1, right=-1, vertex=-1, mask=0):
        self.kind.append(kind)
        self.left.append(left)
        self.right.append(right)
        self.vertex.append(vertex)
        self.mask.append(mask)
        return len(self.kind) - 1

    def leaf(self, v):
        return self.add(LEAF, vertex=v, mask=1 << v)

    def fold(self, kind, children):
        node = children[0]
        for child in children[1:]:
            node = self.add(kind, node, child, mask=self.mask[node] | self.mask[child])
        return node

    def freeze(self, root):
        return Cotree(tuple(self.kind), tuple(self.left), tuple(self.right),
                      tuple(self.vertex), tuple(self.mask), root)


def _co_component_of(G, v, within):
    comp = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in members(frontier):
            nxt |= within & ~G.adj[u]
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def _split(G, within, co):
    parts = []
    remaining = within
    while remaining:
        v = lowest(remaining)
        c = _co_component_of(G, v, within) if co else component_of(G, v, within)
        parts.append(c)
        remaining &= ~c
    return parts


def find_p4(G, within=None):
    """Vertices ``[a, b, c, d]`` of an induced path a-b-c-d, or ``None``."""
    within = G.all if within is None else within
    adj = G.adj
    for b in members(within):
        for c in members(adj[b] & within):
            if c < b:
                continue
            ends_b = adj[b] & ~adj[c] & within & ~(1 << c)
            ends_c = adj[c] & ~adj[b] & within & ~(1 << b)
            if not ends_b or not ends_c:
                continue
            for a in members(ends_b):
                d_opts = ends_c & ~adj[a]
                if d_opts:
                    return [a, b, c, lowest(d_opts)]
    return None


def build_modified_cotree(G, within=None):
    """Binary cotree of the cograph ``G[within]``; raises ``NotCograph`` carrying a P4.

    Multiway nodes are folded left in ascending order of their parts' smallest
    vertex, so the result is deterministic.
    """
    within = G.all if within is None else within
    if not within:
        raise ValueError("cotree needs at least one vertex")
    builder = _CotreeBuilder()

    def build(within):
        if within & (within - 1) == 0:
            return builder.leaf(lowest(within))
        parts = _split(G, within, co=False)
        kind = UNION
        if len(parts) == 1:
            parts = _split(G, within, co=True)
            kind = JOIN
            if len(parts) == 1:
                raise NotCograph(find_p4(G, within))
        return builder.fold(kind, [build(p) for p in parts])

    return builder.freeze(build(within))


def is_cograph(G):
    return G.n == 0 or find_p4(G) is None


# --- patterns ------------------------------------------------------------------


@dataclass(frozen=True)
class PatternGraph:
    name: str
    graph: Graph

    def __post_init__(self):
        if self.graph.n > MAX_PATTERN:
            raise PatternTooLarge(f"{self.name} has {self.graph.n} > {MAX_PATTERN} vertices")


def _linear_forest(name, path_lengths):
    edges, offset = [], 0
    for length in path_lengths:
        edges.extend((offset + i, offset + i + 1) for i in range(length - 1))
        offset += length
    return PatternGraph(name, Graph.from_edges(offset, edges))


def path(r):
    return _linear_forest(f"P{r}", [r])


def cycle(r):
    return PatternGraph(f"C{r}", Graph.from_edges(r, [(i, (i + 1) % r) for i in range(r)]))


def complete(r):
    return PatternGraph(f"K{r}", Graph.from_edges(r, [(i, j) for i in range(r) for j in range(i + 1, r)]))


def independent(s):
    return _linear_forest(f"{s}P1", [1] * s)


def matching(s):
    return _linear_forest(f"{s}P2", [2] * s)


def sp1_p3(s):
    return _linear_forest(f"{s}P1+P3" if s else "P3", [1] * s + [3])


def sp1_p4(s):
    return _linear_forest(f"{s}P1+P4" if s else "P4", [1] * s + [4])


def claw():
    return PatternGraph("K1,3", Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))


def _as_pattern(H):
    if isinstance(H, PatternGraph):
        return H
    if H.n > MAX_PATTERN:
        raise PatternTooLarge(f"pattern has {H.n} > {MAX_PATTERN} vertices")
    return PatternGraph("H", H)


def _search_order(H):
    """Pattern vertices ordered so each one is adjacent to an earlier one when possible."""
    order, placed = [], 0
    remaining = H.all
    while remaining:
        frontier = H.neighborhood(placed) & remaining if placed else 0
        pool = frontier or remaining
        v = max(members(pool), key=lambda u: (H.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        remaining &= ~(1 << v)
    return order


def find_induced(G, H, within=None):
    """Injective map from the pattern into ``G`` that preserves edges and non-edges.

    Returns a list ``phi`` with ``phi[i]`` the image of pattern vertex ``i``, or
    ``None`` if ``G[within]`` is H-free.
    """
    H = _as_pattern(H).graph
    within = G.all if within is None else within
    k = H.n
    if k == 0:
        return []
    if k > within.bit_count():
        return None
    order = _search_order(H)
    position = {v: i for i, v in enumerate(order)}
    # twins in H are interchangeable; force their images to increase
    twin_before = [None] * k
    for i, v in enumerate(order):
        for u in order[:i]:
            nv, nu = H.adj[v] & ~(1 << u), H.adj[u] & ~(1 << v)
            if nv == nu:
                twin_before[i] = position[u]
    min_degree = [H.degree(v) for v in order]
    gdeg = [G.degree(v, within) for v in range(G.n)]
    images = [0] * k
    adj = G.adj

    def extend(i, used):
        if i == k:
            return True
        v = order[i]
        cand = within & ~used
        for j in range(i):
            if H.adj[v] >> order[j] & 1:
                cand &= adj[images[j]]
            else:
                cand &= ~adj[images[j]]
            if not cand:
                return False
        tb = twin_before[i]
        if tb is not None:
            cand &= ~((2 << images[tb]) - 1)
        need = min_degree[i]
        for w in members(cand):
            if gdeg[w] < need:
                continue
            images[i] = w
            if extend(i + 1, used | 1 << w):
                return True
        return False

    if not extend(0, 0):
        return None
    phi = [0] * k
    for i, v in enumerate(order):
        phi[v] = images[i]
    return phi


def is_free(G, H, within=None):
    return find_induced(G, H, within) is None


def check_induced(G, H, phi):
    """True when ``phi`` is an induced copy of the pattern in ``G``."""
    H = _as_pattern(H).graph
    if len(phi) != H.n or len(set(phi)) != H.n:
        return False
    for i in range(H.n):
        for j in range(i + 1, H.n):
            if H.has_edge(i, j) != G.has_edge(phi[i], phi[j]):
                return False
    return True


def require_free(G, H, within=None):
    """Raise ``NotInClass`` with a witness unless ``G`` is H-free."""
    H = _as_pattern(H)
    phi = find_induced(G, H, within)
    if phi is not None:
        raise NotInClass(H.name, phi)


def smallest_free_s(G, family, s_max):
    """Smallest ``s <= s_max`` with ``G`` free of ``family(s)``, else ``None``."""
    for s in range(s_max + 1):
        if find_induced(G, family(s)) is None:
            return s
    return None


@dataclass(frozen=True)
class ClassReport:
    is_p4_free: bool
    is_split: bool
    sp1p3_s: int | None
    sp1p4_s: int | None
    is_claw_free: bool


def is_split(G):
    return all(find_induced(G, H) is None for H in (cycle(4), cycle(5), matching(2)))


def classify(G, s_max=3):
    if s_max > 8:
        raise ValueError("s_max must be at most 8")
    return ClassReport(
        is_p4_free=find_induced(G, path(4)) is None,
        is_split=is_split(G),
        sp1p3_s=smallest_free_s(G, sp1_p3, s_max),
        sp1p4_s=smallest_free_s(G, sp1_p4, s_max),
        is_claw_free=find_induced(G, claw()) is None,
    )


__all__ = [
    "Cotree", "PatternGraph", "ClassReport", "build_modified_cotree", "find_p4",
    "find_induced", "check_induced", "require_free", "classify", "is_cograph",
    "is_free", "is_split", "smallest_free_s", "path", "cycle", "complete",
    "independent", "matching", "sp1_p3", "sp1_p4", "claw", "to_mask",
]

"""Subset Feedback Vertex Set on (sP1+P3)-free graphs.

The solver looks for a maximum T-forest ``F_T`` (the complement of the answer)
under three mutually exhaustive shapes of ``G[F_T & T]``:

1. at least ``2s`` components (each then a single vertex or an edge);
2. fewer than ``2s`` components, all of at most ``max(7, 4s-2)`` vertices;
3. fewer than ``2s`` components, one a big star-like tree.

Each case guesses a bounded piece of the forest and completes it with
``extend_mask`` over a remainder that induces a union of cliques.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import NotATree, NotInClass, PreconditionViolated
from .graph import Graph, connected_components, is_connected, lowest, members, to_mask
from .recognition import find_induced, sp1_p3, smallest_free_s
from .svc import lex_less
from .validity import Instance, Problem, is_t_forest, validated

ORACLE_FALLBACK_N = 16


# --- big trees ---------------------------------------------------------------


@dataclass(frozen=True)
class TreeShape:
    """``kind`` is "small", or "star" with the spider fields filled in."""

    kind: str
    center: int | None = None
    leaves: tuple = ()
    middle: tuple = ()
    far: tuple = ()


def small_tree_bound(s):
    return max(7, 4 * s - 2)


def classify_tree_sp1p3(R, s):
    if R.n == 0 or R.m != R.n - 1 or not is_connected(R):
        raise NotATree(f"graph with n={R.n}, m={R.m} is not a tree")
    phi = find_induced(R, sp1_p3(s))
    if phi is not None:
        raise NotInClass(sp1_p3(s).name, phi)
    if R.n <= small_tree_bound(s):
        return TreeShape("small")
    high = [v for v in range(R.n) if R.degree(v) > 2]
    if len(high) != 1:
        raise AssertionError(f"(sP1+P3)-free tree on {R.n} vertices has {len(high)} branch vertices")
    r = high[0]
    nbrs = R.neighbors(r)
    middle = tuple(v for v in nbrs if R.degree(v) == 2)
    leaves = tuple(v for v in nbrs if R.degree(v) == 1)
    far = tuple(members(R.neighborhood(to_mask(middle)) & ~(1 << r)))
    assert len(middle) <= max(s - 1, 0) and len(nbrs) >= 3 * s - 1
    return TreeShape("star", r, leaves, middle, far)


# --- completing a partial solution over a union of cliques ---------------------------


def keep_in_clique(G, T, U, y):
    """Largest ``U' <= U`` with no T-cycle in ``G[U' + y]``; ``y`` is the only outside neighbour.

    ``y`` is ``None`` when the clique ``U`` has no kept neighbour at all.
    """
    if U & (U - 1) == 0:
        return U
    if y is None or not T >> y & 1:
        plain = U & ~T
        if plain.bit_count() >= 2:
            return plain
        away = U if y is None else U & ~G.adj[y]
        if away:
            u = lowest(away)
            return 1 << u | 1 << lowest(U & ~(1 << u))
        return U & -U
    near = U & G.adj[y]
    far = U & ~near
    far_plain = far & ~T
    if far_plain.bit_count() >= 2:
        near_plain = near & ~T
        return far_plain | (near_plain & -near_plain)
    if far:
        u = lowest(far)
        return 1 << u | 1 << lowest(U & ~(1 << u))
    return near & -near


def extend_mask(G, T, keep, removed, Z):
    """Cheapest removal set containing ``removed`` that keeps ``keep`` and fixes ``Z``.

    Requires ``G[Z]`` to be a union of cliques and at most one vertex of
    ``keep`` to have neighbours in ``Z``.
    """
    out = removed
    for U in connected_components(G, Z):
        attach = G.neighborhood(U) & keep
        y = lowest(attach) if attach else None
        out |= U & ~keep_in_clique(G, T, U, y)
    return out


def _is_clique_union(G, Z):
    return all(G.edges_within(U) == U.bit_count() * (U.bit_count() - 1) // 2
               for U in connected_components(G, Z))


def sfvs_extend_p3free(G, T, Vp, Sp):
    """Minimum T-feedback vertex set ``S`` with ``Sp <= S`` and ``Vp - Sp`` disjoint from ``S``."""
    T, Vp, Sp = to_mask(T), to_mask(Vp), to_mask(Sp)
    if Sp & ~Vp:
        raise PreconditionViolated("Sp is not a subset of Vp")
    keep = Vp & ~Sp
    if not is_t_forest(G, T & keep, keep):
        raise PreconditionViolated("Sp is not a T-feedback vertex set of G[Vp]")
    Z = G.all & ~Vp
    if not _is_clique_union(G, Z):
        raise PreconditionViolated("G - Vp is not P3-free")
    if (G.neighborhood(Z) & keep).bit_count() > 1:
        raise PreconditionViolated("more than one kept vertex has neighbours outside Vp")
    S = extend_mask(G, T, keep, Sp, Z)
    return validated(Instance(G, T, Problem.SFVS), S, route="extend")


# --- the three cases -----------------------------------------------------------


@dataclass
class _Best:
    G: Graph
    T: int
    stats: dict = field(default_factory=dict)
    mask: int | None = None
    case: str | None = None

    def offer(self, S, case):
        self.stats[f"{case}_candidates"] = self.stats.get(f"{case}_candidates", 0) + 1
        keep = self.G.all & ~S
        if not is_t_forest(self.G, self.T & keep, keep):
            self.stats["rejected_invalid"] = self.stats.get("rejected_invalid", 0) + 1
            return
        key = f"{case}_best"
        self.stats[key] = min(self.stats.get(key, S.bit_count()), S.bit_count())
        if self.mask is not None and not lex_less(S, self.mask):
            return
        self.mask, self.case = S, case


def _component_units(G, T):
    """Single terminals and terminal edges, the possible components of ``A``."""
    units = [1 << v for v in members(T)]
    units += [1 << u | 1 << v for u, v in G.edges() if T >> u & 1 and T >> v & 1]
    return sorted(units, key=lambda m: (lowest(m), m))


def _anticomplete_unit_sets(G, units, count):
    """Choices of ``count`` units that are pairwise disjoint and non-adjacent."""
    chosen = []

    def rec(start, used, blocked):
        if len(chosen) == count:
            yield used
            return
        for i in range(start, len(units)):
            u = units[i]
            if u & blocked:
                continue
            chosen.append(u)
            yield from rec(i + 1, used | u, blocked | G.closed_neighborhood(u))
            chosen.pop()

    yield from rec(0, 0, 0)


def _case1(G, T, s, best):
    k = 2 * s
    for A in _anticomplete_unit_sets(G, _component_units(G, T), k):
        best.stats["case1_A"] = best.stats.get("case1_A", 0) + 1
        pairs = [U for U in connected_components(G, A) if U.bit_count() == 2]
        pair_area = 0
        for P in pairs:
            pair_area |= G.neighborhood(P)
        NA = G.neighborhood(A)
        Z = G.all & ~(NA | A)
        pool = members(NA)
        for size in range(min(2 * s + 1, len(pool)) + 1):
            for combo in combinations(pool, size):
                Y = to_mask(combo)
                Y2 = [y for y in combo if (G.adj[y] & A).bit_count() >= 2]
                if len(Y2) > 1:
                    continue
                if Y & ~to_mask(Y2) & pair_area:
                    continue
                keep = A | Y
                # adjacent single-attachment vertices are possible when s == 1
                if not is_t_forest(G, T & keep, keep):
                    continue
                if (G.neighborhood(Z) & keep).bit_count() > 1:
                    best.stats["case1_skipped"] = best.stats.get("case1_skipped", 0) + 1
                    continue
                best.offer(extend_mask(G, T, keep, NA & ~Y, Z), "case1")


def _case2(G, T, s, best):
    limit = small_tree_bound(s)
    terminals = members(T)
    others = members(G.all & ~T)
    for size in range(len(terminals) + 1):
        for fcombo in combinations(terminals, size):
            F = to_mask(fcombo)
            comps = connected_components(G, F)
            if len(comps) > 2 * s - 1 or any(c.bit_count() > limit for c in comps):
                continue
            if G.edges_within(F) != size - len(comps):
                continue
            base = T & ~F
            for k in range(size + 1):
                if best.mask is not None and base.bit_count() + k > best.mask.bit_count():
                    break
                found = False
                for scombo in combinations(others, k):
                    S = base | to_mask(scombo)
                    keep = G.all & ~S
                    if is_t_forest(G, T & keep, keep):
                        best.offer(S, "case2")
                        found = True
                        break
                if found:
                    break


def _spider_root(G, D, s):
    """The branch vertex of ``G[D]`` if it is a spider with legs of length <= 2, else None."""
    n = D.bit_count()
    if G.edges_within(D) != n - 1 or not is_connected(G, D):
        return None
    high = [v for v in members(D) if (G.adj[v] & D).bit_count() > 2]
    if len(high) != 1:
        return None
    r = high[0]
    ring = G.adj[r] & D
    far = D & ~ring & ~(1 << r)
    if far.bit_count() > s - 1:
        return None
    for v in members(far):
        if (G.adj[v] & D).bit_count() != 1 or not G.adj[v] & ring:
            return None
    return r


def _case3(G, T, s, best):
    size = max(8, 4 * s - 1)
    nonterminals = members(G.all & ~T)
    for bcombo in combinations(members(T), size):
        B = to_mask(bcombo)
        if G.edges_within(B) != size - 1 or not is_connected(G, B):
            continue
        best.stats["case3_B"] = best.stats.get("case3_B", 0) + 1
        for k in range(s):
            for lcombo in combinations(nonterminals, k):
                L = to_mask(lcombo)
                D = B | L
                r = _spider_root(G, D, s)
                if r is None or not B >> r & 1:
                    continue
                ring = G.adj[r] & D
                if L & ring:
                    continue
                core = D & ~(1 << r)
                reach = G.closed_neighborhood(core)
                removed = reach & ~D
                Z = G.all & ~reach
                best.offer(extend_mask(G, T, D, removed, Z), "case3")


def sfvs_sp1p3free_mask(G, T, s, stats=None):
    best = _Best(G, T, stats if stats is not None else {})
    _case1(G, T, s, best)
    if s >= 1:
        _case2(G, T, s, best)
        _case3(G, T, s, best)
    if best.mask is None:
        raise AssertionError("no case produced a T-feedback vertex set")
    best.stats["winning_case"] = best.case
    return best.mask


def sfvs_sp1p3free(G, T, s):
    T = to_mask(T)
    phi = find_induced(G, sp1_p3(s))
    if phi is not None:
        raise NotInClass(sp1_p3(s).name, phi)
    stats = {}
    S = sfvs_sp1p3free_mask(G, T, s, stats)
    return validated(Instance(G, T, Problem.SFVS), S, route="sp1p3free", s=s, **stats)


def sfvs_solve(inst, s_max=3, allow_brute=True):
    """Route an SFVS instance to the (sP1+P3)-free solver or, when tiny, to brute force."""
    from .oracle import brute_force_minimum

    G, T = inst.graph, inst.terminals
    if inst.s is not None:
        return sfvs_sp1p3free(G, T, inst.s)
    s = smallest_free_s(G, sp1_p3, s_max)
    if s is not None:
        return sfvs_sp1p3free(G, T, s)
    if allow_brute and G.n <= ORACLE_FALLBACK_N:
        return brute_force_minimum(inst)
    pattern = sp1_p3(s_max)
    raise NotInClass(pattern.name, find_induced(G, pattern))

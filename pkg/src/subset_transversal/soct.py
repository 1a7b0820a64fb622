"""Subset Odd Cycle Transversal on P4-free and (sP1+P3)-free graphs.

The (sP1+P3)-free solver searches for a maximum T-bipartite remainder ``B_T``.
Case 1 covers remainders with few terminals by brute force over a bounded
terminal part.  Case 2 fixes an independent set ``A`` of kept terminals; the
vertices outside ``N[A]`` then induce a union of cliques, and every clique is
settled on its own against the kept neighbours of ``A``.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .errors import NotInClass
from .graph import connected_components, is_bipartite_mask, lowest, members, to_mask
from .recognition import build_modified_cotree, find_induced, find_p4, path, smallest_free_s, sp1_p3
from .svc import first_minimum, lex_less, svc_cotree_table
from .validity import Instance, Problem, is_t_bipartite, t_walk_parities, validated

ORACLE_FALLBACK_N = 16


# --- P4-free ---------------------------------------------------------------------


JOIN_CHOICES = ("left", "right", "terminals", "independent", "left_point", "right_point")


def soct_cotree_mask(G, T, tree, choices=None):
    """Cotree DP; ``choices`` (a Counter) records which join candidate won.

    At a join node with both kept sides non-empty, either both sides are
    independent (a complete bipartite remainder), or one side keeps a single
    non-terminal while the other only needs its terminals isolated, or no
    terminal is kept at all.
    """
    cover = svc_cotree_table(G, T, tree)
    full_cover = svc_cotree_table(G, G.all, tree)
    best = [0] * len(tree)
    for x, kind in enumerate(tree.kind):
        if kind == "union":
            best[x] = best[tree.left[x]] | best[tree.right[x]]
        elif kind == "join":
            y, z = tree.left[x], tree.right[x]
            vy, vz = tree.mask[y], tree.mask[z]
            candidates = [
                best[y] | vz,
                best[z] | vy,
                T & tree.mask[x],
                full_cover[y] | full_cover[z],
            ]
            lone_z, lone_y = vz & ~T, vy & ~T
            if lone_z:
                candidates.append(cover[y] | (vz & ~(lone_z & -lone_z)))
            if lone_y:
                candidates.append(cover[z] | (vy & ~(lone_y & -lone_y)))
            best[x] = first_minimum(candidates)
            if choices is not None:
                i = candidates.index(best[x])
                if i == 4 and not vz & ~T:
                    i = 5
                choices[JOIN_CHOICES[i]] += 1
    return best[tree.root]


def soct_p4free(G, T):
    T = to_mask(T)
    witness = find_p4(G)
    if witness is not None:
        raise NotInClass("P4", witness)
    inst = Instance(G, T, Problem.SOCT)
    if G.n == 0:
        return validated(inst, 0, route="p4free")
    choices = Counter()
    S = soct_cotree_mask(G, T, build_modified_cotree(G), choices)
    return validated(inst, S, route="p4free",
                     join_choice={k: choices[k] for k in JOIN_CHOICES})


# --- shared bookkeeping ---------------------------------------------------------------


@dataclass
class _Best:
    G: object
    T: int
    stats: dict = field(default_factory=dict)
    mask: int | None = None
    case: str | None = None

    def offer(self, S, case):
        self.stats[f"{case}_candidates"] = self.stats.get(f"{case}_candidates", 0) + 1
        keep = self.G.all & ~S
        if not is_t_bipartite(self.G, self.T & keep, keep):
            self.stats["rejected_invalid"] = self.stats.get("rejected_invalid", 0) + 1
            return
        key = f"{case}_best"
        self.stats[key] = min(self.stats.get(key, S.bit_count()), S.bit_count())
        if self.mask is None or lex_less(S, self.mask):
            self.mask, self.case = S, case


def _bump(stats, key):
    stats[key] = stats.get(key, 0) + 1


@dataclass
class SoctCaseContext:
    """One guess of Case 2: the kept skeleton and the clique remainder ``Z``.

    ``Y1``/``Y2`` hold the kept neighbours of ``A`` with one / several
    neighbours in ``A``.  For Case 2b, ``A`` plays the role of ``A0`` and
    ``Y2`` that of ``Y2'``; ``Y0`` is then all of ``N(A)``.
    """

    A: int
    Y1: int
    Y2: int
    Z: int
    Y0: int = 0
    kept: int = 0

    @property
    def Y(self):
        return self.Y1 | self.Y2


# --- Case 1 ----------------------------------------------------------------------


def case1_bound(s):
    return max(3, 4 * s - 3)


def _case1(G, T, s, best):
    plain = G.all & ~T
    best.offer(T, "case1")
    others = members(plain)
    for size in range(1, min(case1_bound(s), T.bit_count()) + 1):
        for bcombo in combinations(members(T), size):
            B = to_mask(bcombo)
            if not is_bipartite_mask(G, B):
                continue
            base = T & ~B
            for k in range(size):
                if best.mask is not None and base.bit_count() + k > best.mask.bit_count():
                    break
                hit = None
                for scombo in combinations(others, k):
                    S = base | to_mask(scombo)
                    keep = G.all & ~S
                    if is_t_bipartite(G, T & keep, keep):
                        hit = S
                        break
                if hit is not None:
                    best.offer(hit, "case1")
                    break


# --- clique selection shared by Cases 2a and 2b ------------------------------------------


def best_clique_part(G, T, U, W):
    """Largest ``U' <= U`` (``U`` a clique) that can join a kept skeleton.

    ``W`` is the set of kept skeleton vertices that ``U`` may touch; any two
    of them are assumed to be joined by an even path through a terminal.  Two
    kept vertices of ``U`` with different attachments would then close an odd
    T-cycle, so either at most one kept vertex is attached, or all attached
    ones see exactly one common non-terminal ``w``.
    """
    att = {u: G.adj[u] & W for u in members(U)}
    free = sum(1 << u for u, a in att.items() if not a) & ~T
    options = [free]
    by_w = {}
    for u, a in att.items():
        if a and not T >> u & 1:
            options.append(free | 1 << u)
            if a & (a - 1) == 0 and not T & a:
                by_w[a] = by_w.get(a, 0) | 1 << u
    options.extend(free | q for q in by_w.values())
    big = max(options, key=lambda m: (m.bit_count(), -m))
    if big.bit_count() >= 3:
        return big
    verts = members(U)
    for i, u1 in enumerate(verts):
        for u2 in verts[i + 1:]:
            a1, a2 = att[u1], att[u2]
            if not a1 or not a2:
                return 1 << u1 | 1 << u2
            if (a1 == a2 and a1 & (a1 - 1) == 0 and not T & (a1 | 1 << u1 | 1 << u2)):
                return 1 << u1 | 1 << u2
    return U & -U


# --- Case 2a ------------------------------------------------------------------------


def case2_a_size(s):
    return max(2, 2 * s - 1)


def _independent_subsets(G, pool, size):
    for combo in combinations(pool, size):
        m = to_mask(combo)
        if not G.edges_within(m):
            yield m


def case2a_contexts(G, T, s):
    """Every (A, Y1, Y2) guess of Case 2a that passes the structural filters."""
    a_size = case2_a_size(s)
    y_limit = max(4, 3 * s) - 1
    for A in _independent_subsets(G, members(T), a_size):
        NA = G.neighborhood(A)
        single = [v for v in members(NA) if (G.adj[v] & A).bit_count() == 1]
        multi = [v for v in members(NA) if (G.adj[v] & A).bit_count() >= max(2, s)]
        Z = G.all & ~(NA | A)
        for k1 in range(min(len(single), a_size, y_limit) + 1):
            for c1 in combinations(single, k1):
                seen = 0
                for y in c1:
                    a = G.adj[y] & A
                    if seen & a:
                        break
                    seen |= a
                else:
                    Y1 = to_mask(c1)
                    yield from _y2_choices(G, T, A, Y1, multi, Z, y_limit - k1)


def _y2_choices(G, T, A, Y1, multi, Z, room):
    chosen = []

    def rec(start):
        Y2 = to_mask(chosen)
        keep = A | Y1 | Y2
        if is_t_bipartite(G, T & keep, keep):
            yield SoctCaseContext(A, Y1, Y2, Z)
        if len(chosen) == room:
            return
        for i in range(start, len(multi)):
            y = multi[i]
            if any(G.has_edge(y, x) or not G.adj[y] & G.adj[x] & A for x in chosen):
                continue
            chosen.append(y)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


def _case2a(G, T, s, best):
    for ctx in case2a_contexts(G, T, s):
        _bump(best.stats, "case2a_guesses")
        skeleton = ctx.A | ctx.Y
        kept = skeleton
        for U in connected_components(G, ctx.Z):
            plus = 0
            for u in members(U):
                trial = skeleton | 1 << u
                if is_t_bipartite(G, T & trial, trial):
                    plus |= 1 << u
            if plus:
                kept |= best_clique_part(G, T, plus, ctx.Y2)
        ctx.kept = kept
        best.offer(G.all & ~kept, "case2a")


# --- Case 2b ------------------------------------------------------------------------


def case2b_y2_size(s):
    return max(2, s + 1)


def case2b_contexts(G, T, s):
    """Every (A0, Y2') pair of Case 2b: ``A0`` independent in ``T``, ``Y2'`` independent,
    each ``y`` with at least ``max(2, s)`` neighbours in ``A0``, any two sharing one,
    and every vertex of ``A0`` seen by ``Y2'``."""
    y_size = case2b_y2_size(s)
    for a_size in range(max(s, 2), case2_a_size(s) + 1):
        for A in _independent_subsets(G, members(T), a_size):
            NA = G.neighborhood(A)
            pool = [v for v in members(NA) if (G.adj[v] & A).bit_count() >= max(2, s)]
            for combo in combinations(pool, y_size):
                Y2 = to_mask(combo)
                if G.edges_within(Y2) or G.neighborhood(Y2) & A != A:
                    continue
                if any(not G.adj[x] & G.adj[y] & A for x, y in combinations(combo, 2)):
                    continue
                if not _even_t_linked(G, T, A | Y2, combo):
                    continue
                yield SoctCaseContext(A, 0, Y2, G.all & ~(NA | A), Y0=NA)


def _even_t_linked(G, T, within, vertices):
    """Every two of ``vertices`` are joined by an even T-path inside the bipartite ``G[within]``."""
    for i, y in enumerate(vertices[:-1]):
        even, _ = t_walk_parities(G, T, y, within)
        if to_mask(vertices[i + 1:]) & ~even:
            return False
    return True


def _case2b(G, T, s, best):
    for ctx in case2b_contexts(G, T, s):
        _bump(best.stats, "case2b_guesses")
        Y2 = ctx.Y2
        # kept vertices of N(A0) must avoid Y2' and each other (even T-paths join them all)
        eligible = ctx.Y0 & ~Y2 & ~G.neighborhood(Y2)
        comps = connected_components(G, ctx.Z)
        base = {}
        gain = {}
        for U in comps:
            keys = G.neighborhood(U) & eligible
            base[U] = best_clique_part(G, T, U, Y2)
            if keys and keys & (keys - 1) == 0:
                with_key = best_clique_part(G, T, U, Y2 | keys)
                y = lowest(keys)
                gain[y] = gain.get(y, 0) + with_key.bit_count() - base[U].bit_count()
            elif keys:
                _bump(best.stats, "case2b_multi_key")
        chosen = 0
        for W in connected_components(G, eligible):
            score, pick = max((1 + gain.get(y, 0), -y) for y in members(W))
            if score > 0:
                chosen |= 1 << -pick
        attach = Y2 | chosen
        kept = ctx.A | attach
        for U in comps:
            kept |= best_clique_part(G, T, U, attach)
        ctx.kept = kept
        best.offer(G.all & ~kept, "case2b")


# --- entry points -------------------------------------------------------------------------


def _run(G, T, s, case):
    best = _Best(G, to_mask(T))
    case(G, best.T, s, best)
    if best.mask is None:
        return None, best.stats
    return best.mask, best.stats


def _as_solution(G, T, S, stats, route, s):
    inst = Instance(G, T, Problem.SOCT)
    if S is None:
        return None
    return validated(inst, S, route=route, s=s, **stats)


def soct_case1(G, T, s):
    S, stats = _run(G, T, s, _case1)
    return _as_solution(G, to_mask(T), S, stats, "case1", s)


def soct_case2a(G, T, s):
    """Best Case 2a remainder, or ``None`` when no guess survives the filters."""
    S, stats = _run(G, T, s, _case2a)
    return _as_solution(G, to_mask(T), S, stats, "case2a", s)


def soct_case2b(G, T, s):
    """Best Case 2b remainder, or ``None`` when no guess survives the filters."""
    S, stats = _run(G, T, s, _case2b)
    return _as_solution(G, to_mask(T), S, stats, "case2b", s)


def soct_sp1p3free_mask(G, T, s, stats=None):
    best = _Best(G, T, stats if stats is not None else {})
    _case1(G, T, s, best)
    _case2a(G, T, s, best)
    _case2b(G, T, s, best)
    best.stats["winning_case"] = best.case
    return best.mask


def soct_sp1p3free(G, T, s):
    T = to_mask(T)
    phi = find_induced(G, sp1_p3(s))
    if phi is not None:
        raise NotInClass(sp1_p3(s).name, phi)
    stats = {}
    S = soct_sp1p3free_mask(G, T, s, stats)
    return validated(Instance(G, T, Problem.SOCT), S, route="sp1p3free", s=s, **stats)


def soct_solve(inst, s_max=3, allow_brute=True):
    """Route a SOCT instance: cographs, then (sP1+P3)-free graphs, then brute force when tiny."""
    from .oracle import brute_force_minimum

    G, T = inst.graph, inst.terminals
    if inst.s is not None:
        return soct_sp1p3free(G, T, inst.s)
    if find_induced(G, path(4)) is None:
        return soct_p4free(G, T)
    s = smallest_free_s(G, sp1_p3, s_max)
    if s is not None:
        return soct_sp1p3free(G, T, s)
    if allow_brute and G.n <= ORACLE_FALLBACK_N:
        return brute_force_minimum(inst)
    pattern = sp1_p3(s_max)
    raise NotInClass(pattern.name, find_induced(G, pattern))

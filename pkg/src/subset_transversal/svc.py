"""Subset Vertex Cover on P4-free and (sP1+P4)-free graphs."""

from .errors import NotInClass
from .graph import members, to_mask
from .recognition import JOIN, UNION, build_modified_cotree, find_induced, smallest_free_s, sp1_p4
from .validity import Instance, Problem, validated


def lex_less(a, b):
    """Order on vertex masks: smaller first, then lexicographically on sorted members."""
    ca, cb = a.bit_count(), b.bit_count()
    if ca != cb:
        return ca < cb
    diff = a ^ b
    return bool(diff and a & diff & -diff)


def first_minimum(candidates):
    """Smallest candidate by size; earlier entries win ties."""
    best = None
    for c in candidates:
        if best is None or c.bit_count() < best.bit_count():
            best = c
    return best


def svc_cotree_table(G, T, tree):
    """Minimum (T & V(G_x))-vertex cover of ``G_x`` for every cotree node ``x``.

    Leaves contribute nothing, a union node takes both children's covers, and
    a join node needs one whole side removed unless every terminal is removed.
    """
    best = [0] * len(tree)
    for x, kind in enumerate(tree.kind):
        if kind == UNION:
            best[x] = best[tree.left[x]] | best[tree.right[x]]
        elif kind == JOIN:
            y, z = tree.left[x], tree.right[x]
            best[x] = first_minimum((
                best[y] | tree.mask[z],
                best[z] | tree.mask[y],
                T & tree.mask[x],
            ))
    return best


def svc_cotree_mask(G, T, within=None, cotree=None):
    """Minimum T-vertex cover of the cograph ``G[within]``."""
    within = G.all if within is None else within
    if not within:
        return 0
    tree = cotree or build_modified_cotree(G, within)
    return svc_cotree_table(G, T, tree)[tree.root]


def svc_p4free(G, T):
    T = to_mask(T)
    S = svc_cotree_mask(G, T)
    return validated(Instance(G, T, Problem.SVC), S, route="p4free")


def branch_mask(G, T, within, inner):
    """Try each terminal ``u`` as kept: then N(u) is removed and ``inner`` solves the rest.

    ``inner(T', within')`` must return a mask.  The set of all terminals is the
    fallback candidate.
    """
    T &= within
    best = T
    for u in members(T):
        closed = (G.adj[u] | 1 << u) & within
        rest = within & ~closed
        candidate = inner(T & rest, rest) | (G.adj[u] & within)
        if lex_less(candidate, best):
            best = candidate
    return best


def svc_extension_branch(G, T, inner_solver):
    """One branching layer: ``inner_solver(G, T', within')`` returns a mask."""
    T = to_mask(T)
    S = branch_mask(G, T, G.all, lambda t, w: inner_solver(G, t, w))
    return validated(Instance(G, T, Problem.SVC), S, route="branch")


def _nested(G, s):
    if s == 0:
        return lambda T, within: svc_cotree_mask(G, T, within)
    inner = _nested(G, s - 1)
    return lambda T, within: branch_mask(G, T, within, inner)


def svc_sp1p4free_mask(G, T, s, within=None):
    within = G.all if within is None else within
    return _nested(G, s)(T & within, within)


def svc_sp1p4free(G, T, s):
    T = to_mask(T)
    phi = find_induced(G, sp1_p4(s))
    if phi is not None:
        raise NotInClass(sp1_p4(s).name, phi)
    S = svc_sp1p4free_mask(G, T, s)
    return validated(Instance(G, T, Problem.SVC), S, route="sp1p4free", s=s)


ORACLE_FALLBACK_N = 16


def svc_solve(inst, s_max=3, allow_brute=True):
    """Route an SVC instance: cographs, then (sP1+P4)-free graphs, then brute force when tiny."""
    from .oracle import brute_force_minimum

    G, T = inst.graph, inst.terminals
    if inst.s is not None:
        return svc_sp1p4free(G, T, inst.s)
    s = smallest_free_s(G, sp1_p4, s_max)
    if s == 0:
        return svc_p4free(G, T)
    if s is not None:
        return svc_sp1p4free(G, T, s)
    if allow_brute and G.n <= ORACLE_FALLBACK_N:
        return brute_force_minimum(inst)
    pattern = sp1_p4(s_max)
    raise NotInClass(pattern.name, find_induced(G, pattern))

"""Subset Vertex Cover, Subset Feedback Vertex Set and Subset Odd Cycle Transversal
on H-free graphs, with exact brute-force oracles and instance generators.

Vertex sets are Python ints used as bitmasks: bit ``v`` set means vertex ``v``
is a member.  Functions that take a vertex set also accept any iterable of
vertices.
"""

from .errors import (FormatError, GiveUp, InstanceTooLarge, NotATree, NotCograph, NotInClass,
                     PatternTooLarge, PreconditionViolated, SelfLoop, TransversalError,
                     UnknownFixture, VertexOutOfRange)
from .generators import (fixture, house, petersen, project_to_vertex_cover, random_cograph,
                         random_graph, random_in_class, reduce_vc_to_soct_split)
from .graph import (BlockDecomposition, Graph, block_decomposition, complement,
                    connected_components, disjoint_union, format_instance, induced_subgraph,
                    is_bipartite, join, members, parse_instance, read_instance, to_mask,
                    write_instance)
from .oracle import brute_force_minimum, minimum_vertex_cover
from .recognition import (Cotree, PatternGraph, build_modified_cotree, check_induced, classify,
                          find_induced, is_cograph, is_split, sp1_p3, sp1_p4)
from .sfvs import classify_tree_sp1p3, sfvs_extend_p3free, sfvs_solve, sfvs_sp1p3free
from .soct import (soct_case1, soct_case2a, soct_case2b, soct_p4free, soct_solve,
                   soct_sp1p3free)
from .svc import svc_extension_branch, svc_p4free, svc_solve, svc_sp1p4free
from .validity import (Instance, Problem, Solution, is_t_bipartite, is_t_forest, is_valid,
                       verify_solution)


def solve(inst, **kwargs):
    """Solve ``inst`` with the polynomial route for its problem, falling back to brute force."""
    return {Problem.SVC: svc_solve, Problem.SFVS: sfvs_solve, Problem.SOCT: soct_solve}[inst.problem](
        inst, **kwargs)


__all__ = [
    "BlockDecomposition", "Cotree", "FormatError", "GiveUp", "Graph", "Instance",
    "InstanceTooLarge", "NotATree", "NotCograph", "NotInClass", "PatternGraph",
    "PatternTooLarge", "PreconditionViolated", "Problem", "SelfLoop", "Solution",
    "TransversalError", "UnknownFixture", "VertexOutOfRange", "block_decomposition",
    "brute_force_minimum", "build_modified_cotree", "check_induced", "classify",
    "classify_tree_sp1p3", "complement", "connected_components", "disjoint_union",
    "find_induced", "fixture", "format_instance", "house", "induced_subgraph", "is_bipartite",
    "is_cograph", "is_split", "is_t_bipartite", "is_t_forest", "is_valid", "join", "members",
    "minimum_vertex_cover", "parse_instance", "petersen", "project_to_vertex_cover",
    "random_cograph", "random_graph", "random_in_class", "read_instance",
    "reduce_vc_to_soct_split", "sfvs_extend_p3free", "sfvs_solve", "sfvs_sp1p3free",
    "soct_case1", "soct_case2a", "soct_case2b", "soct_p4free", "soct_solve", "soct_sp1p3free",
    "solve", "sp1_p3", "sp1_p4", "svc_extension_branch", "svc_p4free", "svc_solve",
    "svc_sp1p4free", "to_mask", "verify_solution", "write_instance",
]

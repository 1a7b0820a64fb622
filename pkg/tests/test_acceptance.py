"""Acceptance gate.

Each test checks one criterion at its pinned tolerance (exact sizes, fixed
instance counts, wall-clock limits) and logs a PASS/FAIL line that is echoed
in the terminal summary.  The big oracle suites are computed once per module.
"""

import random
import time
from dataclasses import dataclass

import pytest

from families import cographs, sp1p3_graphs, sp1p4_graphs
from subset_transversal import (Instance, NotInClass, Problem, brute_force_minimum,
                                build_modified_cotree, check_induced, disjoint_union, find_induced,
                                fixture, is_t_bipartite, is_t_forest, minimum_vertex_cover,
                                project_to_vertex_cover, random_graph, reduce_vc_to_soct_split,
                                sfvs_sp1p3free, soct_p4free, soct_solve, soct_sp1p3free, sp1_p3,
                                sp1_p4, svc_p4free, svc_sp1p4free, to_mask, verify_solution)
from subset_transversal.generators import (PETERSEN_BLACK_LEFT, PETERSEN_BLACK_RIGHT,
                                           random_terminals)
from subset_transversal.oracle import naive_is_t_bipartite, naive_is_t_forest
from subset_transversal.recognition import path
from subset_transversal.validity import minimum_solution_bound_holds

COGRAPHS = 500
SP1P4_PER_S = 300
SP1P3_PER_S = 500
REDUCTION_GRAPHS = 100
BLOCK_TEST_GRAPHS = 500
OUT_OF_CLASS = 100


@dataclass
class Record:
    suite: str
    seed: int
    inst: Instance
    solver: int
    oracle: int


def check(log, cid, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  C{cid:<2} {title}: {detail}"
    log.append(line)
    print(line)
    assert ok, line


def _solve_and_compare(suite, seed, G, T, problem, solver, clock):
    inst = Instance(G, T, problem)
    start = time.perf_counter()
    S = solver(G, T).vertices
    oracle = brute_force_minimum(inst).vertices
    clock[problem] = clock.get(problem, 0.0) + time.perf_counter() - start
    return Record(suite, seed, inst, S, oracle)


@pytest.fixture(scope="module")
def suites():
    clock = {}
    records = []
    cograph_list = list(cographs(COGRAPHS))
    for seed, G, T in cograph_list:
        records.append(_solve_and_compare("cograph", seed, G, T, Problem.SVC, svc_p4free, clock))
        records.append(_solve_and_compare("cograph", seed, G, T, Problem.SOCT, soct_p4free, clock))
    for s in (1, 2):
        for seed, G, T in sp1p4_graphs(s, SP1P4_PER_S):
            records.append(_solve_and_compare(
                f"sp1p4 s={s}", seed, G, T, Problem.SVC, lambda G, T, s=s: svc_sp1p4free(G, T, s), clock))
    for s in (0, 1, 2):
        for seed, G, T in sp1p3_graphs(s, SP1P3_PER_S):
            for problem, solver in ((Problem.SFVS, sfvs_sp1p3free), (Problem.SOCT, soct_sp1p3free)):
                records.append(_solve_and_compare(
                    f"sp1p3 s={s}", seed, G, T, problem, lambda G, T, f=solver, s=s: f(G, T, s), clock))
    return {"records": records, "clock": clock, "cographs": cograph_list}


def _equivalence(records, problem, suites_wanted):
    chosen = [r for r in records if r.inst.problem is problem and r.suite.split(" ")[0] in suites_wanted]
    bad = [r for r in chosen if r.solver.bit_count() != r.oracle.bit_count()]
    counts = {}
    for r in chosen:
        counts[r.suite] = counts.get(r.suite, 0) + 1
    return chosen, bad, counts


def test_c1_house_fixture(acceptance_log):
    start = time.perf_counter()
    inst = fixture("house")
    sizes = {
        "auto": soct_solve(inst).size,
        "sp1p3free s=1": soct_sp1p3free(inst.graph, inst.terminals, 1).size,
        "brute": brute_force_minimum(inst).size,
    }
    elapsed = time.perf_counter() - start
    ok = all(v == 1 for v in sizes.values()) and elapsed < 1.0
    check(acceptance_log, 1, "house fixture SOCT minimum is 1", ok,
          f"sizes {sizes}, {elapsed * 1000:.0f} ms (limit 1 s)")


def test_c2_petersen_black_sets(acceptance_log):
    start = time.perf_counter()
    verdicts = {}
    for name, black in (("left", PETERSEN_BLACK_LEFT), ("right", PETERSEN_BLACK_RIGHT)):
        for problem in (Problem.SOCT, Problem.SFVS):
            verdicts[f"{name}/{problem.value}"] = verify_solution(fixture("petersen", problem), black)
    elapsed = time.perf_counter() - start
    ok = all(verdicts.values()) and elapsed < 1.0
    check(acceptance_log, 2, "Petersen black sets are valid", ok,
          f"{verdicts}, {elapsed * 1000:.0f} ms (limit 1 s)")


def test_c3_svc_oracle_equivalence(acceptance_log, suites):
    chosen, bad, counts = _equivalence(suites["records"], Problem.SVC, {"cograph", "sp1p4"})
    elapsed = suites["clock"][Problem.SVC]
    ok = (not bad and counts.get("cograph", 0) >= 500 and counts.get("sp1p4 s=1", 0) >= 300
          and counts.get("sp1p4 s=2", 0) >= 300 and elapsed < 600)
    check(acceptance_log, 3, "SVC solver size equals oracle", ok,
          f"{counts}, {len(bad)} mismatches, {elapsed:.1f} s (limit 600 s)")


def test_c4_sfvs_oracle_equivalence(acceptance_log, suites):
    chosen, bad, counts = _equivalence(suites["records"], Problem.SFVS, {"sp1p3"})
    elapsed = suites["clock"][Problem.SFVS]
    ok = not bad and all(counts.get(f"sp1p3 s={s}", 0) >= 500 for s in (0, 1, 2)) and elapsed < 1800
    check(acceptance_log, 4, "SFVS solver size equals oracle", ok,
          f"{counts}, {len(bad)} mismatches, {elapsed:.1f} s (limit 1800 s)")


def test_c5_soct_oracle_equivalence(acceptance_log, suites):
    chosen, bad, counts = _equivalence(suites["records"], Problem.SOCT, {"sp1p3", "cograph"})
    elapsed = suites["clock"][Problem.SOCT]
    ok = (not bad and counts.get("cograph", 0) >= 500
          and all(counts.get(f"sp1p3 s={s}", 0) >= 500 for s in (0, 1, 2)) and elapsed < 1800)
    check(acceptance_log, 5, "SOCT solver size equals oracle", ok,
          f"{counts}, {len(bad)} mismatches, {elapsed:.1f} s (limit 1800 s)")


def _reduction_graphs(count):
    """Seeded graphs on at most 9 vertices whose reduced instance stays within the oracle's reach."""
    seed = 0
    while count:
        rng = random.Random(seed)
        n = 1 + int(rng.random() * 9)
        G = random_graph(n, 0.2 + 0.3 * rng.random(), seed)
        seed += 1
        if n + G.m <= 24:
            count -= 1
            yield G


@pytest.fixture(scope="module")
def reductions():
    """(G, minimum vertex cover, reduced instance, its minimum SOCT) plus the elapsed time."""
    start = time.perf_counter()
    runs = []
    for G in _reduction_graphs(REDUCTION_GRAPHS):
        inst = reduce_vc_to_soct_split(G)
        runs.append((G, minimum_vertex_cover(G).vertices, inst, brute_force_minimum(inst).vertices))
    return runs, time.perf_counter() - start


def test_c6_reduction(acceptance_log, reductions):
    runs, elapsed = reductions
    bad = []
    for G, cover, _, S in runs:
        projected = project_to_vertex_cover(G, S)
        covers = all(projected >> u & 1 or projected >> v & 1 for u, v in G.edges())
        if not (cover.bit_count() == S.bit_count() == projected.bit_count() and covers):
            bad.append(G.edges())
    ok = not bad and len(runs) == REDUCTION_GRAPHS and elapsed < 300
    check(acceptance_log, 6, "min vertex cover equals min SOCT of the split reduction", ok,
          f"{len(runs)} graphs (n <= 9), {len(bad)} mismatches, {elapsed:.1f} s (limit 300 s)")


def test_c7_block_tests_match_cycle_enumeration(acceptance_log):
    start = time.perf_counter()
    bad = 0
    for seed in range(BLOCK_TEST_GRAPHS):
        rng = random.Random(seed)
        n = 1 + int(rng.random() * 9)
        G = random_graph(n, rng.random(), seed)
        T = random_terminals(n, rng, rng.random())
        if is_t_forest(G, T) != naive_is_t_forest(G, T) or is_t_bipartite(G, T) != naive_is_t_bipartite(G, T):
            bad += 1
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    check(acceptance_log, 7, "block-based T-forest/T-bipartite tests match cycle enumeration", ok,
          f"{BLOCK_TEST_GRAPHS} graphs (n <= 9), {bad} disagreements, {elapsed:.1f} s (limit 300 s)")


def test_c8_minimum_solution_bound(acceptance_log, suites, reductions):
    pairs = [(r.inst.terminals, S) for r in suites["records"] for S in (r.solver, r.oracle)]
    for G, cover, inst, S in reductions[0]:
        pairs += [(G.all, cover), (inst.terminals, S)]
    bad = [p for p in pairs if not minimum_solution_bound_holds(*p)]
    check(acceptance_log, 8, "|S \\ T| <= |T \\ S| on every emitted minimum", not bad,
          f"{len(pairs)} solutions, {len(bad)} violations")


def _out_of_class_inputs(count):
    """Graphs with a planted forbidden pattern, paired with the solver that must refuse them."""
    routes = [
        ("soct p4free", path(4), lambda G, T: soct_p4free(G, T)),
        ("svc P1+P4", sp1_p4(1), lambda G, T: svc_sp1p4free(G, T, 1)),
        ("svc 2P1+P4", sp1_p4(2), lambda G, T: svc_sp1p4free(G, T, 2)),
        ("sfvs P3", sp1_p3(0), lambda G, T: sfvs_sp1p3free(G, T, 0)),
        ("sfvs P1+P3", sp1_p3(1), lambda G, T: sfvs_sp1p3free(G, T, 1)),
        ("soct 2P1+P3", sp1_p3(2), lambda G, T: soct_sp1p3free(G, T, 2)),
    ]
    for i in range(count):
        name, pattern, solver = routes[i % len(routes)]
        rng = random.Random(i)
        host = random_graph(int(rng.random() * 7), rng.random(), 40000 + i)
        G = disjoint_union(host, pattern.graph) if rng.random() < 0.5 else disjoint_union(pattern.graph, host)
        yield name, pattern, solver, G, random_terminals(G.n, rng, 0.5)


def test_c9_structural_invariants(acceptance_log, suites):
    cotree_bad = sum(1 for _, G, _ in suites["cographs"] if build_modified_cotree(G).to_graph(G.n) != G)
    invalid = sum(1 for r in suites["records"] if not verify_solution(r.inst, r.solver))
    witness_bad = 0
    for _, pattern, solver, G, T in _out_of_class_inputs(OUT_OF_CLASS):
        try:
            solver(G, T)
        except NotInClass as exc:
            phi = exc.witness
            if not (check_induced(G, pattern, phi) and find_induced(G, pattern, to_mask(phi)) is not None):
                witness_bad += 1
        else:
            witness_bad += 1
    ok = not cotree_bad and not invalid and not witness_bad
    check(acceptance_log, 9, "cotree round-trip, verified outputs, NotInClass witnesses", ok,
          f"{len(suites['cographs'])} cotrees ({cotree_bad} bad), {len(suites['records'])} outputs "
          f"({invalid} invalid), {OUT_OF_CLASS} out-of-class inputs ({witness_bad} bad witnesses)")


def test_c10_soct_at_most_sfvs(acceptance_log, suites):
    by_instance = {}
    for r in suites["records"]:
        if r.suite.startswith("sp1p3"):
            key = (r.suite, r.seed)
            by_instance.setdefault(key, {})[r.inst.problem] = r.solver.bit_count()
    shared = [v for v in by_instance.values() if len(v) == 2]
    bad = sum(1 for v in shared if v[Problem.SOCT] > v[Problem.SFVS])
    check(acceptance_log, 10, "minSOCT <= minSFVS on shared instances", not bad and len(shared) >= 1500,
          f"{len(shared)} instances, {bad} violations")

import pytest
from hypothesis import given
from networkx.algorithms.isomorphism import GraphMatcher

from support import complete_graph, cycle_graph, graphs, path_graph, to_nx
from subset_transversal import (Graph, NotCograph, PatternTooLarge, build_modified_cotree,
                                check_induced, classify, find_induced, is_cograph, is_split,
                                random_cograph, sp1_p3, sp1_p4)
from subset_transversal.recognition import (claw, complete, cycle, find_p4, matching, path,
                                            require_free, smallest_free_s)
from subset_transversal.errors import NotInClass

P4 = path_graph(4)


def test_cotree_round_trip_on_seeded_cographs():
    for seed in range(80):
        G = random_cograph(1 + seed % 14, seed)
        tree = build_modified_cotree(G)
        assert tree.to_graph(G.n) == G
        assert all(k == "leaf" or tree.left[x] < x and tree.right[x] < x
                   for x, k in enumerate(tree.kind))
        assert len(tree) == 2 * G.n - 1


def test_cotree_text_form():
    K3 = complete_graph(3)
    assert build_modified_cotree(K3).to_text() == "(J (J 0 1) 2)"
    assert build_modified_cotree(Graph.from_edges(2, [])).to_text() == "(U 0 1)"


def test_p4_is_rejected_with_witness():
    with pytest.raises(NotCograph) as exc:
        build_modified_cotree(P4)
    assert check_induced(P4, path(4), exc.value.witness)
    assert not is_cograph(P4) and is_cograph(Graph.from_edges(0, []))


@given(graphs(max_n=9, min_n=1))
def test_cograph_recognition_agrees_with_p4_search(G):
    witness = find_p4(G)
    assert (witness is None) == (find_induced(G, path(4)) is None)
    if witness is None:
        assert build_modified_cotree(G).to_graph(G.n) == G
    else:
        assert check_induced(G, path(4), witness)


def _networkx_contains(G, H):
    return GraphMatcher(to_nx(G), to_nx(H.graph)).subgraph_is_isomorphic()


@pytest.mark.parametrize("pattern", [sp1_p3(0), sp1_p3(1), sp1_p3(2), sp1_p4(1), claw(),
                                     cycle(4), matching(2), complete(3)],
                         ids=lambda p: p.name)
@given(G=graphs(max_n=8))
def test_find_induced_agrees_with_networkx(pattern, G):
    phi = find_induced(G, pattern)
    assert (phi is not None) == _networkx_contains(G, pattern)
    if phi is not None:
        assert check_induced(G, pattern, phi)


def test_find_induced_respects_within():
    C5 = cycle_graph(5)
    assert find_induced(C5, path(4)) is not None
    assert find_induced(C5, path(4), within=0b00111) is None


def test_check_induced_rejects_non_induced_maps():
    K3 = complete_graph(3)
    assert not check_induced(K3, path(3), [0, 1, 2])
    assert not check_induced(P4, path(3), [0, 0, 1])


def test_pattern_size_guard():
    with pytest.raises(PatternTooLarge):
        sp1_p3(10)
    with pytest.raises(PatternTooLarge):
        find_induced(P4, Graph.from_edges(13, []))


def test_require_free_raises_not_in_class():
    with pytest.raises(NotInClass) as exc:
        require_free(cycle_graph(5), sp1_p3(0))
    assert check_induced(cycle_graph(5), sp1_p3(0), exc.value.witness)


def test_classify_examples():
    report = classify(cycle_graph(5))
    assert not report.is_p4_free and not report.is_split
    assert report.sp1p3_s == 1 and report.sp1p4_s == 1 and report.is_claw_free
    assert classify(P4).sp1p4_s == 1 and classify(P4).sp1p3_s == 1
    K4 = complete_graph(4)
    assert classify(K4).sp1p3_s == 0 and is_split(K4)
    with pytest.raises(ValueError):
        classify(P4, s_max=9)


def test_smallest_free_s():
    # 3 isolated vertices plus a P3 needs s = 4
    G = Graph.from_edges(6, [(0, 1), (1, 2)])
    assert smallest_free_s(G, sp1_p3, 3) is None
    assert smallest_free_s(G, sp1_p3, 4) == 4

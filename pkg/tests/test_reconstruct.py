import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import figure_graph
from test_graphs import graphs
from powergraph.catalog import default_catalog
from powergraph.graphs import Graph, enhanced_power_graph, power_graph
from powergraph.groups import is_prime_power, make_group, parse_spec
from powergraph.reconstruct import (
    COMPLETE,
    CYCLIC_NON_PRIME_POWER,
    NON_CYCLIC,
    classify_input,
    decide_pair,
    difference_graph_from_power,
    find_witness,
    reconstruct_enhanced,
)
from powergraph.twins import twin_counts


def group(text):
    return make_group(parse_spec(text))


def test_classify_examples():
    assert classify_input(power_graph(group("c 9"))) == COMPLETE
    assert classify_input(power_graph(group("c 6"))) == CYCLIC_NON_PRIME_POWER
    assert classify_input(figure_graph()) == NON_CYCLIC
    assert classify_input(power_graph(group("q 3"))) == NON_CYCLIC
    assert classify_input(Graph.empty(2)) == NON_CYCLIC
    assert classify_input(Graph.complete(2)) == COMPLETE


def test_decide_pair_figure():
    X = figure_graph()
    T = twin_counts(X)
    # v8, v9: N = 1, 2; common neighbours v1 (N=1) and v11 (N=2)
    assert decide_pair(X, T, 7, 8)
    assert find_witness(X, T, 7, 8) == 10
    # v2, v3: both N = 1, only common neighbour v1 with N = 1
    assert not decide_pair(X, T, 1, 2)


def test_decide_pair_rejects_bad_pairs():
    X = figure_graph()
    T = twin_counts(X)
    with pytest.raises(ValueError):
        decide_pair(X, T, 3, 3)
    with pytest.raises(ValueError):
        decide_pair(X, T, 0, 5)


def test_decide_pair_s3_never_adds():
    X = power_graph(group("s 3"))
    T = twin_counts(X)
    for a, b in X.iter_non_edges():
        assert not decide_pair(X, T, a, b)


def test_reconstruct_figure():
    Y, report = reconstruct_enhanced(figure_graph())
    assert report.input_class == NON_CYCLIC
    assert report.universal_count == 1
    assert report.added_edges == ((7, 8), (7, 9))
    assert report.witnesses == {(7, 8): 10, (7, 9): 10}
    assert Y.edge_count == 21
    assert not report.certified


def test_reconstruct_cyclic_6():
    Y, report = reconstruct_enhanced(power_graph(group("c 6")))
    assert report.input_class == CYCLIC_NON_PRIME_POWER
    assert report.universal_count == 3
    assert Y == Graph.complete(6)
    assert set(report.added_edges) == Y.difference(power_graph(group("c 6")))


def test_reconstruct_complete_is_unchanged():
    for n in (0, 1, 2, 7):
        K = Graph.complete(n)
        Y, report = reconstruct_enhanced(K)
        assert Y == K and report.added_edges == () and report.input_class == COMPLETE
    Y, _ = reconstruct_enhanced(power_graph(group("c 7")))
    assert Y == Graph.complete(7)


def test_difference_graph_examples():
    d = difference_graph_from_power(figure_graph())
    assert d.vertices == (7, 8, 9)
    assert d.graph.edges() == [(0, 1), (0, 2)]
    assert difference_graph_from_power(power_graph(group("c 4"))).graph.vertex_count == 0
    assert difference_graph_from_power(power_graph(group("s 3"))).graph.vertex_count == 0


def test_reconstruction_is_deterministic():
    X = power_graph(group("d 15"))
    assert reconstruct_enhanced(X) == reconstruct_enhanced(X)


@pytest.mark.parametrize("entry", default_catalog(48), ids=lambda e: e.name)
def test_oracle_equivalence(entry):
    G = make_group(entry.spec)
    X = power_graph(G)
    Y, report = reconstruct_enhanced(X)
    assert set(Y.edges()) == oracles.enhanced_edges(G.table.tolist())
    assert X.is_subgraph_of(Y)
    d = difference_graph_from_power(X)
    diff = {(d.vertices[a], d.vertices[b]) for a, b in d.graph.edges()}
    assert diff == enhanced_power_graph(G).difference(X)
    eppo = all(o == 1 or is_prime_power(o) for o in G.orders)
    assert (d.graph.vertex_count == 0) == eppo


@pytest.mark.parametrize("text", ["d 30", "product c:2 c:10", "product c:2 c:2 c:5", "s 5"])
def test_oracle_equivalence_beyond_catalog(text):
    G = group(text)
    Y, _ = reconstruct_enhanced(power_graph(G))
    assert Y == enhanced_power_graph(G)


@given(graphs(max_n=8))
@settings(max_examples=200)
def test_report_invariants_on_arbitrary_graphs(X):
    # not power graphs in general: only structural guarantees hold
    Y, report = reconstruct_enhanced(X)
    added = set(report.added_edges)
    assert not added & X.edge_set()
    assert Y.edge_set() == X.edge_set() | added
    assert Y.vertex_count == X.vertex_count
    T = report.twin_counts
    for (a, b), c in report.witnesses.items():
        assert X.has_edge(a, c) and X.has_edge(b, c)
        assert T[c] > T[a] if T[a] == T[b] else T[c] >= max(T[a], T[b])


@given(st.sampled_from(default_catalog(24)))
def test_relabelling_commutes_with_reconstruction(entry):
    # reconstruction never looks at labels: permuting vertices permutes the output
    G = make_group(entry.spec)
    X = power_graph(G)
    n = X.vertex_count
    perm = list(reversed(range(n)))
    Xp = Graph.from_edges(n, [(perm[a], perm[b]) for a, b in X.edges()])
    Y, _ = reconstruct_enhanced(X)
    Yp, _ = reconstruct_enhanced(Xp)
    assert Yp == Graph.from_edges(n, [(perm[a], perm[b]) for a, b in Y.edges()])

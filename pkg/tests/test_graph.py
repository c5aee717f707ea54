import pytest
from hypothesis import given, strategies as st

from crimnet.graph import Edge, GraphError, WeightedGraph, induced_subgraph, new_graph
from crimnet.metrics import degrees


@st.composite
def edge_lists(draw, max_nodes=15):
    n = draw(st.integers(2, max_nodes))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda t: t[0] != t[1])
    edges = draw(st.lists(st.tuples(pairs, st.integers(1, 9)), max_size=40))
    return n, [(u, v, w) for (u, v), w in edges]


def test_new_graph():
    assert new_graph(0).node_count == 0
    assert new_graph(0).edge_count == 0
    g = new_graph(101)
    assert g.node_count == 101 and g.edge_count == 0
    assert all(g.degree_of(u) == 0 for u in new_graph(5).nodes())
    with pytest.raises(GraphError):
        new_graph(-1)


def test_add_edge_and_accumulation():
    g = new_graph(2).add_edge(0, 1, 3)
    assert g.edge_count == 1 and g.weight(0, 1) == 3
    g = new_graph(2).add_edge(0, 1, 2).add_edge(1, 0, 3)
    assert g.edge_count == 1
    assert g.weight(0, 1) == g.weight(1, 0) == 5


@pytest.mark.parametrize("u,v,w", [(0, 0, 1), (0, 5, 1), (-1, 0, 1), (0, 1, 0), (0, 1, -2), (0, 1, 1.5)])
def test_add_edge_rejects(u, v, w):
    with pytest.raises(GraphError):
        new_graph(3).add_edge(u, v, w)


def test_self_loop_message():
    with pytest.raises(GraphError, match="self-loop"):
        new_graph(1).add_edge(0, 0, 1)


def test_neighbors():
    star = WeightedGraph.from_edges(4, [(0, 3), (0, 1), (0, 2)])
    assert star.neighbors(0) == [(1, 1), (2, 1), (3, 1)]
    assert new_graph(3).neighbors(1) == []
    tri = WeightedGraph.from_edges(3, [(0, 2, 7), (0, 1, 2), (1, 2, 1)])
    assert tri.neighbors(0) == [(1, 2), (2, 7)]
    with pytest.raises(GraphError):
        tri.neighbors(3)


def test_edge_is_unordered():
    assert Edge.of(3, 1, 2) == Edge.of(1, 3, 2) == Edge(1, 3, 2)


def test_induced_subgraph():
    tri = WeightedGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    sub, mapping = induced_subgraph(tri, {0, 1})
    assert sub.node_count == 2 and sub.edge_count == 1
    assert mapping == {0: 0, 1: 1}

    path = WeightedGraph.from_edges(3, [(0, 1), (1, 2)])
    sub, mapping = induced_subgraph(path, {0, 2})
    assert sub.node_count == 2 and sub.edge_count == 0
    assert mapping == {0: 0, 2: 1}

    with pytest.raises(GraphError):
        induced_subgraph(path, {0, 7})


def test_induced_subgraph_keeps_weights_and_relabels():
    g = WeightedGraph.from_edges(5, [(1, 3, 4), (3, 4, 2), (0, 1, 9)])
    sub, mapping = induced_subgraph(g, [4, 3, 1])
    assert mapping == {1: 0, 3: 1, 4: 2}
    assert sub.edges() == [Edge(0, 1, 4), Edge(1, 2, 2)]


@given(edge_lists())
def test_handshake_and_symmetry(data):
    n, edges = data
    g = WeightedGraph.from_edges(n, edges)
    assert sum(degrees(g)) == 2 * g.edge_count
    adj = g.adjacency()
    for u in range(n):
        for v, w in adj[u].items():
            assert adj[v][u] == w
    assert sum(len(a) for a in adj) == 2 * g.edge_count


@given(edge_lists())
def test_insertion_order_irrelevant(data):
    n, edges = data
    forward = WeightedGraph.from_edges(n, edges)
    backward = WeightedGraph.from_edges(n, [(v, u, w) for u, v, w in reversed(edges)])
    assert forward == backward
    assert forward.edge_count == backward.edge_count
    assert forward.edge_count == len({frozenset((u, v)) for u, v, _ in edges})


@given(edge_lists())
def test_full_induced_subgraph_is_identity(data):
    n, edges = data
    g = WeightedGraph.from_edges(n, edges)
    sub, mapping = induced_subgraph(g, range(n))
    assert mapping == {i: i for i in range(n)}
    assert sub == g
    assert degrees(sub) == degrees(g)


def test_without_edge_leaves_original_intact():
    g = WeightedGraph.from_edges(3, [(0, 1), (1, 2)])
    h = g.without_edge(1, 0)
    assert h.edge_count == 1 and not h.has_edge(0, 1)
    assert g.edge_count == 2 and g.has_edge(0, 1)

import pytest
from hypothesis import given, strategies as st

from forceps import (
    Graph,
    VertexSet,
    cartesian_product,
    connected_components,
    delete_edge,
    induced_subgraph,
    relabel,
)
from forceps.families import complete, cycle, path


masks = st.integers(min_value=0, max_value=(1 << 10) - 1)


@given(masks, masks)
def test_vertexset_matches_set_semantics(a, b):
    va, vb = VertexSet.from_mask(10, a), VertexSet.from_mask(10, b)
    sa, sb = set(va), set(vb)
    assert set(va | vb) == sa | sb
    assert set(va & vb) == sa & sb
    assert set(va - vb) == sa - sb
    assert set(va.complement()) == set(range(10)) - sa
    assert len(va) == len(sa)
    assert (va <= vb) == (sa <= sb)
    assert va.isdisjoint(vb) == sa.isdisjoint(sb)
    assert list(va) == sorted(sa)  # ascending iteration


def test_vertexset_validation():
    with pytest.raises(ValueError):
        VertexSet(3, [3])
    with pytest.raises(ValueError):
        VertexSet.from_mask(3, 1 << 5)
    with pytest.raises(ValueError):
        VertexSet(2, [0]).union(VertexSet(3, [0]))
    with pytest.raises(AttributeError):
        VertexSet(2, [0]).mask = 3


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(65, tuple([0] * 65))


def test_graph_accessors():
    g = path(4)
    assert g.degrees() == (1, 2, 2, 1)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.num_edges() == 3
    assert g.min_degree() == 1 and g.max_degree() == 2
    assert list(g.neighbors(1)) == [0, 2]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)


def test_delete_edge():
    assert delete_edge(path(3), 1, 2).edges() == [(0, 1)]
    assert delete_edge(cycle(4), 0, 3).edges() == path(4).edges()
    k3_minus = delete_edge(complete(3), 0, 1)
    assert k3_minus.degrees() == (1, 1, 2)
    with pytest.raises(ValueError):
        delete_edge(path(3), 0, 2)


def test_connected_components_order():
    g = Graph.from_edges(3, [(0, 1)])
    assert [list(c) for c in connected_components(g)] == [[0, 1], [2]]
    assert [list(c) for c in connected_components(cycle(5))] == [[0, 1, 2, 3, 4]]
    empty3 = Graph.from_edges(3, [])
    assert [list(c) for c in connected_components(empty3)] == [[0], [1], [2]]


def test_cartesian_product_k2_k2_is_c4():
    p = cartesian_product(complete(2), complete(2))
    assert p.n == 4 and p.num_edges() == 4
    assert all(d == 2 for d in p.degrees())


@given(st.integers(2, 4), st.integers(2, 4), st.data())
def test_product_degree_sum(a, b, data):
    ga = Graph.from_edges(a, [(u, v) for u in range(a) for v in range(u + 1, a)
                              if data.draw(st.booleans())])
    gb = Graph.from_edges(b, [(u, v) for u in range(b) for v in range(u + 1, b)
                              if data.draw(st.booleans())])
    p = cartesian_product(ga, gb)
    for x in range(a):
        for y in range(b):
            assert p.degree(x * b + y) == ga.degree(x) + gb.degree(y)


def test_product_capacity_guard():
    with pytest.raises(ValueError):
        cartesian_product(path(9), path(9))


def test_induced_subgraph():
    g = cycle(5)
    sub, back = induced_subgraph(g, VertexSet(5, [0, 1, 3]))
    assert back == (0, 1, 3)
    assert sub.edges() == [(0, 1)]


def test_relabel_roundtrip():
    g = path(4)
    perm = [2, 0, 3, 1]
    h = relabel(g, perm)
    inverse = {p: v for v, p in enumerate(perm)}
    assert relabel(h, inverse) == g
    with pytest.raises(ValueError):
        relabel(g, [0, 0, 1, 2])

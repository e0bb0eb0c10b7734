import pytest

from protrusionkit.graphs import (Graph, PathFamily, complete_graph, constrict,
                                  contract_edge, count_cliques, cycle_graph,
                                  disjoint_union, is_isomorphic, path_graph,
                                  star_graph, theta_graph)


def test_basic_invariants():
    g = Graph(range(4), [(0, 1), (1, 2)])
    assert g.n == 4 and g.m == 2
    assert g.neighbors(1) == frozenset({0, 2})
    assert g.edges() == ((0, 1), (1, 2))
    assert g.components() == (frozenset({0, 1, 2}), frozenset({3}))


def test_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 0)])
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 2)])
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 1), (1, 0)])


def test_host_rejects_multiplicity():
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 1)], {(0, 1): 2})
    assert theta_graph(3).multiplicity(0, 1) == 3


def test_induced_preserves_order():
    g = Graph([5, 3, 8], [(5, 3), (3, 8)])
    sub = g.induced({8, 5})
    assert sub.vertices == (5, 8)
    assert sub.m == 0


def test_contract_triangle_to_edge():
    g = cycle_graph(3)
    out = contract_edge(g, (0, 1))
    assert out.n == 2 and out.m == 1


def test_contract_path():
    out = contract_edge(path_graph(3), (0, 1))
    assert is_isomorphic(out, path_graph(2))


def test_contract_clique():
    out = contract_edge(complete_graph(4), (1, 2))
    assert is_isomorphic(out, complete_graph(3))
    # fresh vertex is appended last in the order
    assert out.vertices[-1] == 4


def test_contract_missing_edge():
    with pytest.raises(ValueError, match="edge not found"):
        contract_edge(path_graph(3), (0, 2))


def test_constrict_path():
    g = path_graph(3)
    out = constrict(g, PathFamily([[0, 1, 2]]))
    assert set(out.vertices) == {0, 2} and out.has_edge(0, 2)


def test_constrict_c5_shortcut():
    out = constrict(cycle_graph(5), PathFamily([[0, 1, 2]]))
    assert is_isomorphic(out, cycle_graph(4))


def test_constrict_c6_two_subpaths():
    # apply the definition by hand: 4 vertices and 4 edges remain
    out = constrict(cycle_graph(6), PathFamily([[0, 1, 2], [3, 4, 5]]))
    assert out.n == 4 and out.m == 4
    assert is_isomorphic(out, cycle_graph(4))


def test_constrict_rejects_adjacent_endpoints():
    with pytest.raises(ValueError, match="invalid path family"):
        constrict(cycle_graph(3), PathFamily([[0, 1, 2]]))


def test_constrict_rejects_shared_inner_vertex():
    g = Graph(range(5), [(0, 1), (1, 2), (3, 1), (1, 4)])
    with pytest.raises(ValueError, match="invalid path family"):
        constrict(g, PathFamily([[0, 1, 2], [3, 1, 4]]))


def test_count_cliques():
    assert count_cliques(complete_graph(3)) == 8
    assert count_cliques(Graph(range(2))) == 3
    assert count_cliques(path_graph(3)) == 6


def test_count_cliques_cap():
    with pytest.raises(ValueError, match="clique census"):
        count_cliques(Graph(range(41)))


def test_isomorphism():
    assert is_isomorphic(cycle_graph(4), Graph([7, 8, 9, 10], [(7, 8), (8, 9), (9, 10), (10, 7)]))
    assert not is_isomorphic(cycle_graph(4), path_graph(4))
    assert not is_isomorphic(theta_graph(2), theta_graph(3))


def test_disjoint_union():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    assert g.n == 6 and g.m == 6 and len(g.components()) == 2


def test_star():
    g = star_graph(3)
    assert g.degree(0) == 3 and g.m == 3

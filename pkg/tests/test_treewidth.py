import random

import pytest

from protrusionkit.graphs import Graph, complete_graph, cycle_graph, path_graph
from protrusionkit.generators import random_graph, tree
from protrusionkit.treewidth import (TreeDecomposition, exact_treewidth,
                                     heuristic_decomposition, make_nice,
                                     rooted_component_decompositions,
                                     validate_decomposition)

from support import brute_force_treewidth


def fs(*xs):
    return frozenset(xs)


def test_validate_single_bag_triangle():
    td = TreeDecomposition((fs(0, 1, 2),), (-1,))
    rep = validate_decomposition(complete_graph(3), td)
    assert rep.ok and rep.width == 2


def test_validate_path_decomposition():
    td = TreeDecomposition((fs(0, 1), fs(1, 2)), (-1, 0))
    rep = validate_decomposition(path_graph(3), td)
    assert rep.ok and rep.width == 1


def test_validate_uncovered_edge():
    td = TreeDecomposition((fs(0), fs(2)), (-1, 0))
    rep = validate_decomposition(path_graph(3), td)
    assert any("edge 0-1" in v for v in rep.violations)


def test_validate_disconnected_occurrence():
    td = TreeDecomposition((fs(0, 1), fs(1, 2), fs(0, 2)), (-1, 0, 1))
    g = Graph(range(3), [(0, 1), (1, 2), (0, 2)])
    rep = validate_decomposition(g, td)
    assert any("not connected" in v for v in rep.violations)


@pytest.mark.parametrize("g,expected", [
    (complete_graph(4), 3),
    (path_graph(5), 1),
    (cycle_graph(5), 2),
    (complete_graph(1), 0),
    (Graph(range(3)), 0),
])
def test_exact_treewidth_values(g, expected):
    w, td = exact_treewidth(g)
    assert w == expected
    assert validate_decomposition(g, td).ok
    assert td.width == w


def test_exact_treewidth_cap():
    with pytest.raises(ValueError, match="use heuristic_decomposition"):
        exact_treewidth(Graph(range(21)))


def test_exact_matches_brute_force_elimination():
    rng = random.Random(11)
    cases = [(rng.randint(2, 6), i) for i in range(12)] + [(7, 100), (8, 101)]
    for n, seed in cases:
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), seed)
        w, td = exact_treewidth(g)
        assert w == brute_force_treewidth(g)
        assert validate_decomposition(g, td).ok


def test_heuristic_tree_width_one():
    g = tree(50, 3)
    td = heuristic_decomposition(g)
    assert td.width == 1
    assert validate_decomposition(g, td).ok


def test_heuristic_k5():
    assert heuristic_decomposition(complete_graph(5)).width == 4


def test_heuristic_c6_cross_checked():
    td = heuristic_decomposition(cycle_graph(6))
    exact_w, _ = exact_treewidth(cycle_graph(6))
    assert exact_w == 2
    assert td.width == 2
    assert validate_decomposition(cycle_graph(6), td).ok


def test_heuristic_never_beats_exact():
    rng = random.Random(23)
    for trial in range(25):
        n = rng.randint(2, 10)
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), trial + 900)
        assert heuristic_decomposition(g).width >= exact_treewidth(g)[0]


def test_rooted_component_decompositions_triangle_plus_apex():
    g = Graph(range(4), [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])
    out = rooted_component_decompositions(g, {3}, 3)
    assert len(out) == 1
    comp, td = out[0]
    assert comp == fs(0, 1, 2)
    assert td.width <= 2
    assert td.parent[0] == -1  # rooted at the smallest bag index


def test_rooted_component_decompositions_two_components():
    g = Graph(range(5), [(0, 1), (2, 3), (0, 4), (2, 4)])
    out = rooted_component_decompositions(g, {4}, 2)
    assert len(out) == 2


def test_rooted_component_decompositions_k5_minus_two():
    out = rooted_component_decompositions(complete_graph(5), {0, 1}, 3)
    assert len(out) == 1
    assert out[0][1].width == 2


def test_rooted_component_decomposition_bound_violation():
    with pytest.raises(ValueError, match="modulator invalid"):
        rooted_component_decompositions(complete_graph(5), {0}, 2)


def test_make_nice_single_bag():
    td = TreeDecomposition((fs(0, 1, 2),), (-1,))
    nice = make_nice(td, complete_graph(3))
    assert nice.kinds.count("leaf") == 1
    assert nice.kinds.count("introduce") == 3
    assert validate_decomposition(complete_graph(3), nice).ok


def test_make_nice_path_has_one_forget():
    # rooted at {b, c}: the chain forgets vertex a exactly once
    td = TreeDecomposition((fs(0, 1), fs(1, 2)), (1, -1))
    nice = make_nice(td, path_graph(3))
    forgets = [i for i, k in enumerate(nice.kinds) if k == "forget"]
    assert len(forgets) == 1
    ch = nice.children()
    forgotten = nice.bags[ch[forgets[0]][0]] - nice.bags[forgets[0]]
    assert forgotten == fs(0)


def _check_nice(nice, g):
    rep = validate_decomposition(g, nice)
    assert rep.ok
    ch = nice.children()
    for i, kind in enumerate(nice.kinds):
        kids = ch[i]
        if kind == "leaf":
            assert not kids
        elif kind == "join":
            assert len(kids) == 2
            assert nice.bags[kids[0]] == nice.bags[i] == nice.bags[kids[1]]
        elif kind == "introduce":
            assert len(kids) == 1
            assert len(nice.bags[i] - nice.bags[kids[0]]) == 1
            assert nice.bags[kids[0]] <= nice.bags[i]
        elif kind == "forget":
            assert len(kids) == 1
            assert len(nice.bags[kids[0]] - nice.bags[i]) == 1
            assert nice.bags[i] <= nice.bags[kids[0]]
        else:
            raise AssertionError(kind)


def test_make_nice_preserves_width_and_validity():
    rng = random.Random(31)
    for trial in range(25):
        n = rng.randint(1, 10)
        g = random_graph(n, rng.randint(0, min(2 * n, n * (n - 1) // 2)), trial + 50)
        w, td = exact_treewidth(g)
        nice = make_nice(td, g)
        assert nice.width == td.width
        _check_nice(nice, g)
        # node count stays O(width * n)
        assert len(nice.bags) <= 4 * (td.width + 2) * max(1, g.n)


def test_make_nice_rejects_invalid():
    td = TreeDecomposition((fs(0),), (-1,))
    with pytest.raises(ValueError, match="decomposition invalid"):
        make_nice(td, path_graph(3))


def test_td_json_round_trip():
    _w, td = exact_treewidth(cycle_graph(5))
    data = td.to_json()
    assert data["width"] == td.width
    again = TreeDecomposition.from_json(data)
    assert again == td

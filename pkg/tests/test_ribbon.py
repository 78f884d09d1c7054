import pytest

from deltachroma.binary import delta_matroid_of_matrix, is_binary, is_even
from deltachroma.ribbon import (
    ChordDiagram,
    RibbonEdge,
    RibbonError,
    RibbonGraph,
    all_chord_diagrams,
    all_ribbon_graphs,
    boundary_components,
    delta_matroid_of_ribbon_graph,
    euler_genus,
    family_layouts,
    intersection_graph,
    is_orientable,
    two_vertex_family,
)
from deltachroma.setsystem import elements_of

BRIDGE = RibbonGraph((("a",), ("b",)), (RibbonEdge("a", "b"),))
TWISTED_LOOP = RibbonGraph((("a", "b"),), (RibbonEdge("a", "b", True),))
PLAIN_LOOP = RibbonGraph((("a", "b"),), (RibbonEdge("a", "b"),))


def test_validation():
    with pytest.raises(RibbonError):
        RibbonGraph((("a", "a"),), ())
    with pytest.raises(RibbonError):
        RibbonGraph((("a", "b"),), (RibbonEdge("a", "c"),))
    with pytest.raises(RibbonError):
        RibbonGraph((("a",), ("b",)), ())
    with pytest.raises(RibbonError):
        RibbonGraph((("a", "b", "c"),), (RibbonEdge("a", "b"),))
    with pytest.raises(RibbonError):
        ChordDiagram((("a", "b"),), (RibbonEdge("a", "b", True),))


def test_small_surfaces():
    point = RibbonGraph(((),), ())
    assert boundary_components(point) == 1 and euler_genus(point) == 0
    assert boundary_components(PLAIN_LOOP) == 2 and euler_genus(PLAIN_LOOP) == 0
    assert boundary_components(TWISTED_LOOP) == 1 and euler_genus(TWISTED_LOOP) == 1
    torus = ChordDiagram.from_word("abab")
    assert boundary_components(torus) == 1 and euler_genus(torus) == 2
    assert boundary_components(ChordDiagram.from_word("aabb")) == 3
    assert boundary_components(BRIDGE, 0) == 2


def test_quasi_tree_delta_matroids():
    assert delta_matroid_of_ribbon_graph(BRIDGE).sets() == [(0,)]
    assert delta_matroid_of_ribbon_graph(TWISTED_LOOP).sets() == [(), (0,)]
    assert delta_matroid_of_ribbon_graph(PLAIN_LOOP).sets() == [()]
    assert delta_matroid_of_ribbon_graph(ChordDiagram.from_word("abab")).sets() == [(), (0, 1)]


def test_orientability():
    assert is_orientable(BRIDGE) and is_orientable(PLAIN_LOOP)
    assert not is_orientable(TWISTED_LOOP)
    # a single twist on a two-vertex cycle can be undone by flipping a vertex
    G = RibbonGraph((("a", "c"), ("b", "d")), (RibbonEdge("a", "b", True), RibbonEdge("c", "d", True)))
    assert is_orientable(G)


def _spanning_trees(G):
    V = G.num_vertices
    out = set()
    for S in range(1 << G.num_edges):
        es = elements_of(S)
        if len(es) != V - 1:
            continue
        parent = list(range(V))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for e in es:
            u, v = G.endpoints(e)
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            out.add(S)
    return out


def test_plane_quasi_trees_are_spanning_trees():
    checked = 0
    for G in all_ribbon_graphs(3):
        if euler_genus(G) == 0:
            assert set(delta_matroid_of_ribbon_graph(G).feasible) == _spanning_trees(G)
            checked += 1
    assert checked > 50


def test_genus_is_consistent():
    for G in all_ribbon_graphs(3):
        g = euler_genus(G)
        assert g >= 0
        if is_orientable(G):
            assert g % 2 == 0


def test_ribbon_delta_matroids_binary_and_parity_up_to_three_edges():
    for G in all_ribbon_graphs(3):
        D = delta_matroid_of_ribbon_graph(G)
        assert is_binary(D)
        assert is_even(D) == is_orientable(G)


def test_intersection_graph_examples():
    assert intersection_graph(ChordDiagram.from_word("abab")).edges == {(0, 1)}
    assert intersection_graph(ChordDiagram.from_word("abcabc")).edges == {(0, 1), (0, 2), (1, 2)}
    assert intersection_graph(ChordDiagram.from_word("aabb")).edges == frozenset()
    with pytest.raises(RibbonError):
        intersection_graph(BRIDGE)


@pytest.mark.parametrize("m", range(5))
def test_interlacement(m):
    count = 0
    for C in all_chord_diagrams(m):
        A = intersection_graph(C).adjacency()
        assert delta_matroid_of_ribbon_graph(C) == delta_matroid_of_matrix(A)
        count += 1
    assert count == [1, 1, 3, 15, 105][m]


def test_two_vertex_family_shape():
    G = two_vertex_family(4, 2, ((0, 2, 2, 1), (0, 1, 3, 3)))
    assert G.num_vertices == 2 and G.num_edges == 4
    assert [G.is_loop(e) for e in range(4)] == [False, False, True, True]
    assert is_orientable(G)
    with pytest.raises(RibbonError):
        two_vertex_family(3, 2, ((0, 1), (0, 1, 2)))
    with pytest.raises(RibbonError):
        two_vertex_family(3, 1, ((0,), (0, 1, 1, 2, 2)))


def test_family_layout_counts():
    counts = {(n, k): sum(1 for _ in family_layouts(n, k)) for n, k in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)]}
    assert counts == {(2, 2): 1, (3, 2): 6, (3, 3): 4, (4, 2): 78, (4, 3): 48}
    for layout in family_layouts(4, 2):
        two_vertex_family(4, 2, layout)

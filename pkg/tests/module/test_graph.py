""" тесты графа коммутирования """
import pytest

from src.errors import BadParameter, DuplicateVertex, SelfLoop, UnknownEndpoint, \
    UnknownVertex
from src.graph import build_graph, central_vertices, complement_components, \
    cycle_graph, cycle_with_chord, induced, is_clique, is_cycle, is_independent, \
    is_synchronised, link, relabel, star, synchronised_split
from src.graph_catalog import SMALL_GRAPH_MAX_VERTICES, small_graphs


def test_build_path(p4):
    """ проверка построения пути t-a-b-c """
    assert p4.vertices == ("a", "b", "c", "t")
    assert p4.has_edge("t", "a") and p4.has_edge("a", "b") and p4.has_edge("b", "c")
    assert not p4.has_edge("t", "c")
    assert p4.edge_list() == [("a", "b"), ("a", "t"), ("b", "c")]


def test_single_vertex():
    """ одна вершина без рёбер """
    g = build_graph(["a"], [])
    assert len(g) == 1
    assert link(g, {"a"}) == frozenset()


@pytest.mark.parametrize("vertices,edges,error", [
    (["a", "b"], [("a", "a")], SelfLoop),
    (["a", "a"], [], DuplicateVertex),
    (["a"], [("a", "z")], UnknownEndpoint),
])
def test_build_errors(vertices, edges, error):
    """ проверка отказов при построении графа """
    with pytest.raises(error):
        build_graph(vertices, edges)


def test_link_and_star(c5p, c4p, graphs):
    """ проверка звеньев и звёзд """
    assert link(c5p, {"t"}) == {"a1", "a4"}
    assert link(c4p, {"b", "d"}) == {"a", "c"}
    assert link(graphs["N3"], {"a"}) == frozenset()
    assert star(c5p, "t") == {"t", "a1", "a4"}
    with pytest.raises(BadParameter):
        link(c5p, set())
    with pytest.raises(UnknownVertex):
        link(c5p, {"z"})


def test_cliques_and_independence(c5p, c4, c4p):
    """ проверка клик и независимых множеств """
    assert is_clique(c5p, {"a1", "a4"})
    assert is_clique(c5p, set())
    assert is_clique(c5p, {"a2"})
    assert not is_clique(c4, {"a", "c"})
    assert is_clique(c4p, {"a", "c"})
    assert is_independent(c4p, {"b", "d"})
    assert is_independent(c5p, {"a3"})
    assert not is_independent(c5p, {"a1", "a2"})


def test_synchronised(c4p, p3, p4, clique_witness_graph):
    """ проверка синхронизированных множеств """
    assert is_synchronised(c4p, {"a", "c"})
    assert is_synchronised(c4p, {"b", "d"})
    assert is_synchronised(p3, {"a", "b", "c"})
    # st(a) = {a, b} и st(c) = {b, c} лежат в {a, c} ∪ lk({a, c}) = {a, b, c}
    assert is_synchronised(p3, {"a", "c"})
    assert not is_synchronised(p4, {"a", "b"})
    assert not is_synchronised(clique_witness_graph, {"a", "t"})


def test_synchronised_split(c4p):
    """ проверка разбиения A = Y ∪ lk(Y) ∪ X """
    y, lk, rest = synchronised_split(c4p, {"a"})
    assert y == {"a"}
    assert lk == {"b", "c", "d"}
    assert rest == frozenset()


def test_complement_components(graphs, c5p):
    """ проверка компонент дополнительного графа """
    assert complement_components(graphs["K3"], {"a", "b", "c"}) == [["a"], ["b"], ["c"]]
    assert complement_components(graphs["N2"], {"a", "b"}) == [["a", "b"]]
    assert complement_components(c5p, {"a1", "a3"}) == [["a1", "a3"]]
    assert complement_components(c5p, set()) == []


def test_cycle_with_chord():
    """ проверка семейства C'_n """
    g = cycle_with_chord(5)
    assert g.vertices == ("t", "a1", "a2", "a3", "a4")
    assert len(g.edges) == 6
    assert is_clique(g, link(g, {"t"}))
    assert len(cycle_with_chord(7).edges) == 8
    with pytest.raises(BadParameter):
        cycle_with_chord(4)


def test_cycles():
    """ проверка распознавания циклов """
    assert is_cycle(cycle_graph(5))
    assert not is_cycle(cycle_with_chord(5))
    with pytest.raises(BadParameter):
        cycle_graph(3)


def test_central_and_induced(graphs, c5p):
    """ проверка центра и полных подграфов """
    assert central_vertices(graphs["K1,3"]) == {"t"}
    assert central_vertices(graphs["paw"]) == {"c"}
    assert central_vertices(c5p) == frozenset()
    sub = induced(c5p, {"a1", "a2", "t"})
    assert sub.vertices == ("t", "a1", "a2")
    assert sub.edge_list() == [("t", "a1"), ("a1", "a2")]


def test_relabel(p4):
    """ проверка смены порядка вершин """
    g = relabel(p4, ["t", "a", "b", "c"])
    assert g.vertices == ("t", "a", "b", "c")
    assert g.edges == p4.edges
    with pytest.raises(BadParameter):
        relabel(p4, ["t", "a"])


def test_small_catalog(graphs):
    """ каталог малых графов: 12 графов не больше чем на 5 вершинах, C'6 вне его """
    small = small_graphs()
    assert len(small) == 12
    assert all(len(g) <= SMALL_GRAPH_MAX_VERTICES for g in small.values())
    assert "C'6" in graphs and "C'6" not in small
    assert is_clique(small["K4"], small["K4"].vertices)
    assert is_independent(small["N3"], small["N3"].vertices)
    assert is_cycle(small["C5"])

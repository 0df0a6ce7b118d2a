""" именованные графы коммутирования для примеров и проверок """
from typing import Dict

from src.graph import CommutationGraph, build_graph, cycle_graph, cycle_with_chord

# граница числа вершин для сверок с оракулами
SMALL_GRAPH_MAX_VERTICES = 5


def define_graphs() -> Dict[str, CommutationGraph]:
    """define_graphs набор именованных графов

    Returns:
        Dict[str, CommutationGraph]: имя -> граф
    """
    graphs = {}

    # путь a-b-c
    graphs["P3"] = build_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])

    # путь t-a-b-c
    graphs["P4"] = build_graph(["a", "b", "c", "t"],
                               [("t", "a"), ("a", "b"), ("b", "c")])

    # квадрат и квадрат с диагональю a-c
    square = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
    graphs["C4"] = build_graph(["a", "b", "c", "d"], square)
    graphs["C4'"] = build_graph(["a", "b", "c", "d"], square + [("a", "c")])

    graphs["C5"] = cycle_graph(5)
    graphs["C'5"] = cycle_with_chord(5)
    # шесть вершин: дополнительный граф, вне каталога малых графов
    graphs["C'6"] = cycle_with_chord(6)

    graphs["K3"] = build_graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    graphs["K4"] = build_graph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])

    # свободные группы
    graphs["N2"] = build_graph(["a", "b"], [])
    graphs["N3"] = build_graph(["a", "b", "c"], [])

    # звезда K_1,3 с центром t
    graphs["K1,3"] = build_graph(["a", "b", "c", "t"],
                                 [("t", "a"), ("t", "b"), ("t", "c")])

    # треугольник a-b-c с хвостом c-d
    graphs["paw"] = build_graph(["a", "b", "c", "d"],
                                [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])

    return graphs


def small_graphs() -> Dict[str, CommutationGraph]:
    """ графы каталога не больше чем на SMALL_GRAPH_MAX_VERTICES вершинах """
    return {name: g for name, g in define_graphs().items()
            if len(g) <= SMALL_GRAPH_MAX_VERTICES}

""" вспомогательный код для модульных тестов """
from typing import Dict

import pytest

from src.graph import CommutationGraph, build_graph
from src.graph_catalog import define_graphs
from src.word_types import Word
from src.words import parse_word


@pytest.fixture(scope="session")
def graphs() -> Dict[str, CommutationGraph]:
    """ именованные графы """
    return define_graphs()


@pytest.fixture(scope="session")
def c5p(graphs) -> CommutationGraph:
    """ граф C'_5: цикл t-a1-a2-a3-a4-t с хордой a1-a4 """
    return graphs["C'5"]


@pytest.fixture(scope="session")
def p4(graphs) -> CommutationGraph:
    """ путь t-a-b-c """
    return graphs["P4"]


@pytest.fixture(scope="session")
def p3(graphs) -> CommutationGraph:
    """ путь a-b-c """
    return graphs["P3"]


@pytest.fixture(scope="session")
def c4(graphs) -> CommutationGraph:
    """ квадрат без диагонали """
    return graphs["C4"]


@pytest.fixture(scope="session")
def c4p(graphs) -> CommutationGraph:
    """ квадрат с диагональю a-c """
    return graphs["C4'"]


@pytest.fixture(scope="session")
def free2(graphs) -> CommutationGraph:
    """ свободная группа ранга 2 """
    return graphs["N2"]


@pytest.fixture(scope="session")
def commuting_ab() -> CommutationGraph:
    """ два коммутирующих образующих """
    return build_graph(["a", "b"], [("a", "b")])


@pytest.fixture(scope="session")
def clique_witness_graph() -> CommutationGraph:
    """ клика {a, t}, не являющаяся синхронизированной: рёбра a-t, x-t, a-b """
    return build_graph(["a", "b", "t", "x"], [("a", "t"), ("x", "t"), ("a", "b")])


@pytest.fixture
def word():
    """ разбор слова над графом """
    def _word(g: CommutationGraph, text: str) -> Word:
        return parse_word(text, g)
    return _word

""" граф коммутирования Γ частично коммутативной группы и запросы к нему """
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from src.config import A_PREFIX, T_VERTEX
from src.errors import BadParameter, DuplicateVertex, SelfLoop, \
    UnknownEndpoint, UnknownVertex


@dataclass(frozen=True)
class CommutationGraph:
    """ простой неориентированный граф: рёбра - пары коммутирующих образующих """
    vertices: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[str]]
    # служебные поля, вычисляются при создании
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)
    _adjacent: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    _nx: nx.Graph = field(init=False, repr=False, compare=False)
    _blocking: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {name: i for i, name in enumerate(self.vertices)}
        adjacent = [set() for _ in self.vertices]
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            u, v = tuple(edge)
            adjacent[index[u]].add(index[v])
            adjacent[index[v]].add(index[u])
            graph.add_edge(u, v)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adjacent", tuple(frozenset(a) for a in adjacent))
        object.__setattr__(self, "_nx", graph)
        # для каждой вершины - номера некоммутирующих с ней вершин, включая её саму
        blocking = tuple(
            tuple(j for j in range(len(self.vertices)) if j == i or j not in adjacent[i])
            for i in range(len(self.vertices)))
        object.__setattr__(self, "_blocking", blocking)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        """index порядковый номер вершины в порядке объявления

        Args:
            name (str): имя вершины

        Raises:
            UnknownVertex: вершины нет в графе

        Returns:
            int: номер, начиная с 0
        """
        try:
            return self._index[name]
        except KeyError as e:
            raise UnknownVertex(f"неизвестная вершина {name}") from e

    def name(self, index: int) -> str:
        """ имя вершины по номеру """
        return self.vertices[index]

    def adjacent_indices(self, index: int) -> FrozenSet[int]:
        """ номера соседей вершины """
        return self._adjacent[index]

    def blocking_indices(self, index: int) -> Tuple[int, ...]:
        """ номера вершин, не коммутирующих с данной, вместе с ней самой """
        return self._blocking[index]

    def commute(self, i: int, j: int) -> bool:
        """ коммутируют ли образующие с номерами i и j """
        return i == j or j in self._adjacent[i]

    def neighbours(self, name: str) -> FrozenSet[str]:
        """ lk(x) для одной вершины """
        return frozenset(self.vertices[j] for j in self._adjacent[self.index(name)])

    def has_edge(self, u: str, v: str) -> bool:
        """ есть ли ребро u-v """
        return self.index(v) in self._adjacent[self.index(u)]

    def ordered(self, names: Iterable[str]) -> List[str]:
        """ вершины множества в порядке объявления """
        return sorted(names, key=self.index)

    @property
    def nx_graph(self) -> nx.Graph:
        """ представление networkx (только для чтения) """
        return self._nx

    def edge_list(self) -> List[Tuple[str, str]]:
        """ рёбра в детерминированном порядке """
        pairs = [tuple(self.ordered(edge)) for edge in self.edges]
        return sorted(pairs, key=lambda p: (self.index(p[0]), self.index(p[1])))


def build_graph(vertices: Sequence[str],
                edges: Iterable[Tuple[str, str]]) -> CommutationGraph:
    """build_graph построение графа коммутирования

    Args:
        vertices (Sequence[str]): имена образующих в порядке объявления
        edges (Iterable[Tuple[str, str]]): пары коммутирующих образующих

    Raises:
        DuplicateVertex: имя вершины повторяется
        SelfLoop: петля
        UnknownEndpoint: конец ребра не объявлен

    Returns:
        CommutationGraph: граф с вершинами в порядке объявления
    """
    seen = set()
    for name in vertices:
        if name in seen:
            raise DuplicateVertex(f"вершина {name} объявлена повторно")
        seen.add(name)

    edge_set = set()
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"петля в вершине {u}")
        for endpoint in (u, v):
            if endpoint not in seen:
                raise UnknownEndpoint(f"конец ребра {endpoint} не объявлен")
        edge_set.add(frozenset((u, v)))

    return CommutationGraph(vertices=tuple(vertices), edges=frozenset(edge_set))


def check_subset(g: CommutationGraph, subset: Iterable[str]) -> FrozenSet[str]:
    subset = frozenset(subset)
    for name in subset:
        if name not in g:
            raise UnknownVertex(f"неизвестная вершина {name}")
    return subset


def link(g: CommutationGraph, subset: Iterable[str]) -> FrozenSet[str]:
    """link звено lk(Y) - пересечение звеньев вершин множества

    Args:
        g (CommutationGraph): граф
        subset (Iterable[str]): непустое множество вершин Y

    Raises:
        UnknownVertex: вершина не из графа
        BadParameter: пустое Y

    Returns:
        FrozenSet[str]: lk(Y)
    """
    subset = check_subset(g, subset)
    if not subset:
        raise BadParameter("звено пустого множества не определено")
    result = None
    for name in subset:
        nbrs = g.neighbours(name)
        result = nbrs if result is None else result & nbrs
    return frozenset(result)


def star(g: CommutationGraph, name: str) -> FrozenSet[str]:
    """ звезда st(x) = lk(x) ∪ {x} """
    return g.neighbours(name) | {name}


def is_clique(g: CommutationGraph, subset: Iterable[str]) -> bool:
    """ является ли множество кликой (пустое и одноэлементное - да) """
    names = g.ordered(check_subset(g, subset))
    return all(g.has_edge(u, v)
               for i, u in enumerate(names) for v in names[i + 1:])


def is_independent(g: CommutationGraph, subset: Iterable[str]) -> bool:
    """ является ли множество независимым (без рёбер) """
    names = g.ordered(check_subset(g, subset))
    return not any(g.has_edge(u, v)
                   for i, u in enumerate(names) for v in names[i + 1:])


def is_synchronised(g: CommutationGraph, subset: Iterable[str]) -> bool:
    """is_synchronised синхронизировано ли множество:
    st(v) ⊆ Y ∪ lk(Y) для всех v из Y

    Args:
        g (CommutationGraph): граф
        subset (Iterable[str]): непустое множество Y

    Returns:
        bool: результат проверки
    """
    subset = check_subset(g, subset)
    closure = subset | link(g, subset)
    return all(star(g, v) <= closure for v in subset)


def synchronised_split(g: CommutationGraph, subset: Iterable[str]) \
        -> Tuple[FrozenSet[str], FrozenSet[str], FrozenSet[str]]:
    """ разбиение A = Y ∪ lk(Y) ∪ X """
    subset = check_subset(g, subset)
    lk = link(g, subset)
    rest = frozenset(g.vertices) - subset - lk
    return subset, lk, rest


def complement_components(g: CommutationGraph,
                          subset: Iterable[str]) -> List[List[str]]:
    """complement_components компоненты связности дополнительного графа Δ на Y

    Args:
        g (CommutationGraph): граф
        subset (Iterable[str]): множество Y

    Returns:
        List[List[str]]: компоненты в порядке объявления вершин
    """
    subset = check_subset(g, subset)
    if not subset:
        return []
    delta = nx.complement(g.nx_graph.subgraph(subset))
    components = [g.ordered(c) for c in nx.connected_components(delta)]
    return sorted(components, key=lambda c: g.index(c[0]))


def central_vertices(g: CommutationGraph) -> FrozenSet[str]:
    """ вершины, смежные со всеми остальными (центр группы) """
    return frozenset(v for v in g.vertices
                     if len(g.neighbours(v)) == len(g.vertices) - 1)


def induced(g: CommutationGraph, subset: Iterable[str]) -> CommutationGraph:
    """ полный подграф Γ_Y с унаследованным порядком вершин """
    subset = check_subset(g, subset)
    names = g.ordered(subset)
    edges = [tuple(edge) for edge in g.edges if edge <= subset]
    return build_graph(names, edges)


def add_edge(g: CommutationGraph, u: str, v: str) -> CommutationGraph:
    """ новый граф с добавленным ребром u-v """
    return build_graph(g.vertices, g.edge_list() + [(u, v)])


def relabel(g: CommutationGraph, order: Sequence[str]) -> CommutationGraph:
    """ тот же граф с другим порядком объявления вершин """
    if sorted(order) != sorted(g.vertices):
        raise BadParameter("новый порядок должен содержать те же вершины")
    return build_graph(order, g.edge_list())


def _h_name(i: int) -> str:
    return f"{A_PREFIX}{i}"


def cycle_graph(n: int) -> CommutationGraph:
    """cycle_graph цикл C_n на вершинах t, a1, ..., a_{n-1}

    Args:
        n (int): число вершин, не меньше 4

    Returns:
        CommutationGraph: цикл t-a1-...-a_{n-1}-t
    """
    if n < 4:
        raise BadParameter(f"цикл C_n определён при n >= 4, получено {n}")
    names = [T_VERTEX] + [_h_name(i) for i in range(1, n)]
    edges = [(T_VERTEX, _h_name(1)), (_h_name(n - 1), T_VERTEX)]
    edges += [(_h_name(i), _h_name(i + 1)) for i in range(1, n - 1)]
    return build_graph(names, edges)


def cycle_with_chord(n: int) -> CommutationGraph:
    """cycle_with_chord граф C'_n: цикл с хордой a1-a_{n-1}

    Args:
        n (int): число вершин, не меньше 5

    Raises:
        BadParameter: n < 5

    Returns:
        CommutationGraph: граф C'_n
    """
    if n < 5:
        raise BadParameter(f"граф C'_n определён при n >= 5, получено {n}")
    return add_edge(cycle_graph(n), _h_name(1), _h_name(n - 1))


def is_cycle(g: CommutationGraph) -> bool:
    """ является ли граф простым циклом """
    return len(g) >= 3 and nx.is_connected(g.nx_graph) and \
        all(deg == 2 for _, deg in g.nx_graph.degree())

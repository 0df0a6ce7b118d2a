""" медленные переборные проверки для сверки с библиотекой на малых примерах """
from collections import deque
from itertools import product
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from src.graph import CommutationGraph
from src.words import all_letters, minimal_letters, shortlex_key

Letters = Tuple[int, ...]


def _rewrites(g: CommutationGraph, letters: Letters) -> Iterator[Letters]:
    for i in range(len(letters) - 1):
        x, y = letters[i], letters[i + 1]
        if x == -y:
            yield letters[:i] + letters[i + 2:]
        elif abs(x) != abs(y) and g.commute(abs(x) - 1, abs(y) - 1):
            yield letters[:i] + (y, x) + letters[i + 2:]


def rewriting_class(g: CommutationGraph, letters: Sequence[int]) -> Set[Letters]:
    """ все слова, получаемые перестановками коммутирующих соседей и сокращениями """
    start = tuple(letters)
    seen = {start}
    frontier = deque([start])
    while frontier:
        current = frontier.popleft()
        for moved in _rewrites(g, current):
            if moved not in seen:
                seen.add(moved)
                frontier.append(moved)
    return seen


def rewriting_geodesic(g: CommutationGraph, letters: Sequence[int]) -> Letters:
    """ наименьшее в shortlex слово наименьшей длины в классе переписывания """
    return min(rewriting_class(g, letters), key=shortlex_key)


class CayleyBall:
    """ шар графа Кэли: вершина - наименьшая в shortlex геодезическая элемента,
    шаг по букве находится переписыванием и запоминается """

    def __init__(self, g: CommutationGraph):
        self._graph = g
        self._steps: Dict[Tuple[Letters, int], Letters] = {}

    def step(self, element: Letters, x: int) -> Letters:
        """ вершина element·x """
        key = (element, x)
        if key not in self._steps:
            self._steps[key] = rewriting_geodesic(self._graph, element + (x,))
        return self._steps[key]

    def walk(self, max_len: int) -> Iterator[Tuple[Letters, Letters]]:
        """ все слова длины <= max_len и вершины, в которые они ведут из единицы """
        alphabet = all_letters(self._graph)
        stack: List[Tuple[Letters, Letters]] = [((), ())]
        while stack:
            word, element = stack.pop()
            yield word, element
            if len(word) < max_len:
                stack += [(word + (x,), self.step(element, x)) for x in alphabet]

    def elements(self, max_len: int) -> List[Letters]:
        """ вершины шара радиуса max_len в порядке shortlex """
        return sorted({element for _, element in self.walk(max_len)}, key=shortlex_key)


def words_up_to(g: CommutationGraph, max_len: int, names: Sequence[str] = None) -> List[Letters]:
    """ все слова (не обязательно редуцированные) длины <= max_len """
    alphabet = all_letters(g, names)
    result: List[Letters] = []
    for size in range(max_len + 1):
        result += list(product(alphabet, repeat=size))
    return result


def is_proper_power_naive(sequence: Sequence) -> bool:
    """ совпадает ли циклическое слово со своим сдвигом на собственный делитель длины """
    size = len(sequence)
    return any(size % q == 0 and tuple(sequence[q:]) + tuple(sequence[:q]) == tuple(sequence)
               for q in range(1, size))


def conjugacy_orbit(g: CommutationGraph, letters: Sequence[int], max_len: int) -> Set[Letters]:
    """ геодезические элементов, сопряжённых с данным, длины <= max_len
    (сопряжение по одной букве за шаг) """
    alphabet = all_letters(g)
    start = minimal_letters(g, letters)
    seen = {start}
    frontier = deque([start])
    while frontier:
        current = frontier.popleft()
        for x in alphabet:
            moved = minimal_letters(g, (-x,) + current + (x,))
            if len(moved) <= max_len and moved not in seen:
                seen.add(moved)
                frontier.append(moved)
    return seen


def in_maln_direct(g: CommutationGraph, clique: Sequence[str], letters: Sequence[int],
                   ball: int = 2) -> bool:
    """ w вне <B> и w^-1 v w вне <B> для всех нетривиальных v из шара <B> """
    indices = {g.index(name) for name in clique}

    def inside(word: Letters) -> bool:
        return all(abs(x) - 1 in indices for x in word)

    w = minimal_letters(g, letters)
    if inside(w):
        return False
    inverse = tuple(-x for x in reversed(w))
    for v in words_up_to(g, ball, list(clique)):
        if not minimal_letters(g, v):
            continue
        if inside(minimal_letters(g, inverse + v + w)):
            return False
    return True

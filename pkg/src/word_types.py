""" типы данных для слов над A ∪ A^-1 """
from dataclasses import dataclass
from typing import Tuple

from src.graph import CommutationGraph


@dataclass(frozen=True)
class Word:
    """ слово: буквы кодируются числами ±(номер образующего + 1) """
    letters: Tuple[int, ...]
    graph: CommutationGraph

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        """ пустое ли слово """
        return not self.letters


@dataclass(frozen=True)
class NormalForm:
    """ каноническое минимальное слово элемента группы """
    word: Word
    canonical: bool = True  # признак того, что форма получена minimal_form

    @property
    def letters(self) -> Tuple[int, ...]:
        """ буквы канонической формы """
        return self.word.letters

    @property
    def graph(self) -> CommutationGraph:
        """ граф коммутирования """
        return self.word.graph

    def __len__(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class CyclicDecomposition:
    """ разложение g = u^-1 · v · u с циклически минимальным ядром v """
    conjugator: NormalForm  # u
    core: NormalForm        # v

""" типы данных для параболических подгрупп и двойных смежных классов """
from dataclasses import dataclass
from typing import FrozenSet

from src.graph import CommutationGraph
from src.word_types import NormalForm


@dataclass(frozen=True)
class ParabolicContext:
    """ каноническая параболическая подгруппа <Y> группы G(Γ) """
    graph: CommutationGraph
    subset: FrozenSet[str]


@dataclass(frozen=True)
class DoubleCosetRep:
    """ разложение w = left · core · right, left и right из <Y> """
    left: NormalForm
    core: NormalForm
    right: NormalForm

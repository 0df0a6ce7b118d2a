""" типы данных переписи нормальных форм над графами C'_n """
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from src.config import CONVENTION_FORMULA
from src.errors import BadParameter
from src.word_types import Word


@dataclass(frozen=True)
class CensusParams:
    """ параметры переписи: граф C'_n, бюджет длины кусков d, бюджет t-длины k """
    n: int
    d: int
    k: int = 0

    def __post_init__(self):
        if self.n < 5:
            raise BadParameter(f"перепись определена при n >= 5, получено {self.n}")
        if self.d < 0 or self.k < 0:
            raise BadParameter("бюджеты d и k должны быть неотрицательными")

    @property
    def alpha(self) -> int:
        """ 2n - 5 """
        return 2 * self.n - 5

    @property
    def gamma(self) -> int:
        """ 2n - 7 """
        return 2 * self.n - 7

    @property
    def beta(self) -> int:
        """ 2n - 9 """
        return 2 * self.n - 9


@dataclass(frozen=True)
class Composition:
    """ композиция числа: положительные части """
    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise BadParameter(f"части композиции должны быть положительными: {self.parts}")

    @property
    def total(self) -> int:
        """ сумма частей """
        return sum(self.parts)


@dataclass
class CensusRow:
    """ счётчики переписи; у каждого значения есть источник ENUMERATED/FORMULA """
    n: int
    d: int
    k: int
    convention: str = CONVENTION_FORMULA
    values: Dict[str, int] = field(default_factory=dict)
    sources: Dict[str, str] = field(default_factory=dict)

    def put(self, name: str, value: int, source: str):
        """ записать счётчик """
        self.values[name] = value
        self.sources[name] = source

    def __getitem__(self, name: str) -> int:
        return self.values[name]

    def __contains__(self, name: str) -> bool:
        return name in self.values


@dataclass(frozen=True)
class ComposedWord:
    """ элемент L(d,k): слой, куски, показатели при t и само слово """
    stratum: str
    chunks: Tuple[Tuple[int, ...], ...]
    exponents: Tuple[int, ...]
    word: Word


@dataclass(frozen=True)
class ZFlags:
    """ флаги условий z1..z4 и их конъюнкция zY """
    z1: bool
    z2: bool
    z3: bool
    z4: bool

    @property
    def zy(self) -> bool:
        """ выполнены все четыре условия """
        return self.z1 and self.z2 and self.z3 and self.z4


@dataclass
class DensityRow:
    """ строка оценки плотности для (n, d, k) """
    n: int
    d: int
    k: int
    counts: Dict[str, int]
    z: Dict[str, int]
    rho_hat: Fraction
    mode: str
    seed: Optional[int] = None
    samples: Optional[int] = None
    # стандартные ошибки долей в режиме выборки
    stderr: Dict[str, float] = field(default_factory=dict)


@dataclass
class SymbolPool:
    """ куски одной позиции составного слова, сгруппированные по символам D+ """
    trivial: int                                   # вес куска с тривиальным символом
    symbols: Dict[Tuple[str, int], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        """ общее число кусков позиции """
        return self.trivial + sum(self.symbols.values())

    def get(self, name: str, orientation: int) -> int:
        """ число кусков с ориентированным символом """
        return self.symbols.get((name, orientation), 0)

    def names(self) -> set:
        """ имена символов без ориентации """
        return {name for name, _ in self.symbols}


@dataclass(frozen=True)
class BoundCheck:
    """ проверка двусторонней оценки lower <= value <= upper """
    name: str
    lower: Fraction
    value: int
    upper: Fraction

    @property
    def holds(self) -> bool:
        """ выполнена ли оценка """
        return self.lower <= self.value <= self.upper


@dataclass
class UniquenessReport:
    """ итог проверки единственности нормальных форм """
    n: int
    max_len: int
    mode: str
    elements: int
    violations: list = field(default_factory=list)

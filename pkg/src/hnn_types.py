""" типы данных для HNN-разложения относительно образующего t """
from dataclasses import dataclass
from typing import Sequence, Tuple

from src.graph import CommutationGraph
from src.word_types import NormalForm, Word

# буква σ-слова: (имя символа "[...]" или t, знак ±1)
SigmaLetter = Tuple[str, int]


@dataclass(frozen=True)
class HnnWord:
    """ разложение g0 t^e1 g1 ... t^em gm, куски gi - нормальные формы над A∖{t} """
    t: str
    chunks: Tuple[NormalForm, ...]
    signs: Tuple[int, ...]

    @property
    def graph(self) -> CommutationGraph:
        """ граф коммутирования """
        return self.chunks[0].graph

    @property
    def letters(self) -> Tuple[int, ...]:
        """ буквы слова g0 t^e1 g1 ... t^em gm """
        t_letter = self.graph.index(self.t) + 1
        result = list(self.chunks[0].letters)
        for sign, chunk in zip(self.signs, self.chunks[1:]):
            result.append(sign * t_letter)
            result += chunk.letters
        return tuple(result)

    def to_word(self) -> Word:
        """ слово над A ∪ A^-1 """
        return Word(self.letters, self.graph)

    @classmethod
    def from_chunks(cls, g: CommutationGraph, t: str,
                    chunks: Sequence[Sequence[int]], signs: Sequence[int],
                    reduce: bool = True) -> "HnnWord":
        """from_chunks сборка разложения из кусков и знаков

        Args:
            g (CommutationGraph): граф
            t (str): выделенный образующий
            chunks (Sequence[Sequence[int]]): буквы кусков g0..gm без t
            signs (Sequence[int]): знаки e1..em
            reduce (bool): выполнять ли редукцию Бриттона

        Returns:
            HnnWord: разложение (при reduce=False - ровно из данных кусков)
        """
        # pylint: disable=import-outside-toplevel
        from src.hnn import assemble
        return assemble(g, t, chunks, signs, reduce)


@dataclass(frozen=True)
class SigmaWord:
    """ слово в F(D+) * <t> из единичных букв, свободно редуцированное """
    letters: Tuple[SigmaLetter, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "SigmaWord":
        """ обратное σ-слово """
        return SigmaWord(tuple((name, -sign) for name, sign in reversed(self.letters)))


@dataclass(frozen=True)
class UniquePositionSplit:
    """ циклический сдвиг корня, равный a·b с однозначно расположенными a и b """
    a: SigmaWord
    b: SigmaWord
    rotation: int

""" типы отчёта о проверке условий теорем о свободе для G = G(Γ)/N(s^n) """
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.word_types import NormalForm


@dataclass
class TheoremRecord:
    """ проверка условий основной теоремы для одного кандидата t """
    t: str
    lk_clique: bool
    t_thick: Optional[bool]            # None, если lk(t) не клика
    cyclically_t_thick: Optional[bool]
    not_in_star: bool
    t_root: bool
    verdict: str
    failed: List[str] = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        """ выполнены ли все четыре условия """
        return not self.failed


@dataclass(frozen=True)
class CliqueWitness:
    """ свидетель невложения: x вне supp(s) ∪ lk(s), [x,t]=1, [x,a]≠1 """
    t: str
    x: str
    a: str
    relation: str


@dataclass
class AmalgamRecord:
    """ проверка синхронизированности носителя """
    synchronised: bool
    supp_clique: bool
    supp_independent: bool
    # (Y, lk(Y), X), только для синхронизированного носителя
    decomposition: Optional[Tuple[Tuple[str, ...], Tuple[str, ...], Tuple[str, ...]]] = None
    witnesses: List[CliqueWitness] = field(default_factory=list)


@dataclass(frozen=True)
class Conclusion:
    """ заключение о подгруппе Магнуса <subset> """
    subset: Tuple[str, ...]
    status: str
    justification: str


@dataclass
class FreiReport:
    """ итоговый отчёт """
    s: NormalForm
    n: int
    per_t: List[TheoremRecord]
    amalgam: AmalgamRecord
    conclusions: List[Conclusion]
    order_of_s: Optional[int]
    word_problem: str
    conjugacy_problem: str

""" типы данных для заданий и сообщений пула вычислителей переписи """
from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass
class CensusTask:
    """ задание: перечислить нормальные формы с данной первой буквой """
    task_id: int
    n: int
    d: int
    mode: Optional[str]
    first: Optional[int]    # None - только единица


@dataclass
class CensusResult:
    """ ответ вычислителя на задание """
    task_id: int
    source: str                                      # имя вычислителя
    stats: Dict[str, int] = field(default_factory=dict)
    error: Optional[Exception] = None


@dataclass
class ControlEvent:
    """ управляющая команда для вычислителя (например, для остановки работы) """
    operation: str  # код операции
    parameters: Any = None

""" парсер текстового файла с графом коммутирования """
import re
from typing import List, Optional, Tuple

from src.component import LoggedComponent
from src.config import LOG_DEBUG, LOG_ERROR
from src.errors import GraphFileError, PcGroupError
from src.graph import CommutationGraph, build_graph

NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class GraphFileParser(LoggedComponent):
    """
    Класс для разбора файлов графа коммутирования.

    Формат: строка `vertices <имя>...`, затем строки `edge <u> <v>`,
    символ `#` начинает комментарий.

    Attributes:
        file_path (str): Путь к файлу графа.
    """
    log_prefix = "[ГРАФ]"

    def __init__(self, file_path: str):
        """
        Инициализирует GraphFileParser с заданным путем к файлу.

        Args:
            file_path (str): Путь к файлу графа.
        """
        self.file_path = file_path

    def parse(self) -> CommutationGraph:
        """
        Читает файл и строит граф.

        Returns:
            CommutationGraph: граф в порядке объявления вершин.
        """
        try:
            with open(self.file_path, 'r', encoding='utf-8') as file:
                text = file.read()
        except OSError as e:
            self._log_message(LOG_ERROR, f"не удалось открыть {self.file_path}: {e}")
            raise GraphFileError(f"не удалось прочитать файл {self.file_path}") from e
        return self.parse_text(text)

    def parse_text(self, text: str) -> CommutationGraph:
        """
        Разбирает содержимое файла графа.

        Args:
            text (str): текст файла

        Returns:
            CommutationGraph: граф
        """
        vertices: Optional[List[str]] = None
        edges: List[Tuple[str, str]] = []

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            keyword, args = parts[0], parts[1:]

            if keyword == "vertices":
                if vertices is not None:
                    raise GraphFileError(f"строка {number}: повторная строка vertices")
                if edges:
                    raise GraphFileError(f"строка {number}: vertices после edge")
                self._check_names(number, args)
                vertices = args
            elif keyword == "edge":
                if vertices is None:
                    raise GraphFileError(f"строка {number}: edge до строки vertices")
                if len(args) != 2:
                    raise GraphFileError(f"строка {number}: ребро задаётся двумя вершинами")
                self._check_names(number, args)
                edges.append((args[0], args[1]))
            else:
                raise GraphFileError(f"строка {number}: неизвестное ключевое слово {keyword}")

        if vertices is None:
            raise GraphFileError("в файле нет строки vertices")

        self._log_message(LOG_DEBUG, f"вершин: {len(vertices)}, рёбер: {len(edges)}")
        try:
            return build_graph(vertices, edges)
        except PcGroupError as e:
            self._log_message(LOG_ERROR, f"некорректный граф: {e}")
            raise

    @staticmethod
    def _check_names(number: int, names: List[str]):
        for name in names:
            if not NAME_RE.match(name):
                raise GraphFileError(f"строка {number}: недопустимое имя {name}")


def format_graph(g: CommutationGraph) -> str:
    """ запись графа в формате файла """
    lines = ["vertices " + " ".join(g.vertices)]
    lines += [f"edge {u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"

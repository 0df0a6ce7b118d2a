""" исключения библиотеки """


class PcGroupError(ValueError):
    """ базовая ошибка предметной области """


class DuplicateVertex(PcGroupError):
    """ повторное объявление вершины """


class UnknownEndpoint(PcGroupError):
    """ ребро ссылается на необъявленную вершину """


class SelfLoop(PcGroupError):
    """ петля в графе коммутирования """


class UnknownVertex(PcGroupError):
    """ вершина отсутствует в графе """


class BadParameter(PcGroupError):
    """ параметр вне допустимого диапазона """


class GraphFileError(PcGroupError):
    """ ошибка формата файла графа """


class WordSyntaxError(PcGroupError):
    """ ошибка синтаксиса слова """


class UnknownGenerator(PcGroupError):
    """ в слове встречается неизвестный образующий """


class ZeroExponent(PcGroupError):
    """ нулевой показатель степени """


class NotCyclicallyMinimal(PcGroupError):
    """ слово не является циклически минимальным """


class NotAClique(PcGroupError):
    """ множество вершин не является кликой """


class LinkNotClique(PcGroupError):
    """ звено lk(t) не является кликой """


class NoSplitFound(PcGroupError):
    """ не найдено разложение на однозначно расположенные подслова """


class TNotInSupport(PcGroupError):
    """ выделенный образующий не входит в носитель """


class ConflictingVerdicts(PcGroupError):
    """ противоречащие друг другу заключения """


class BadAlphabet(PcGroupError):
    """ буква вне алфавита подгруппы H """


class BudgetExceeded(PcGroupError):
    """ превышен бюджет перебора """


class NonIntegralFormula(PcGroupError):
    """ деление в замкнутой формуле оказалось неточным """


class BadSeed(PcGroupError):
    """ отсутствует или некорректно зерно генератора """



class WorkerDied(PcGroupError):
    """ вычислитель завершился, не вернув ответ """

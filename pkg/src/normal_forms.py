""" нормальные формы элементов подгруппы H = <a1, ..., a_{n-1}> графа C'_n """
from typing import Iterator, List, Optional, Sequence, Tuple

from src.config import MAX_ENUMERATION, NF_MODE_GENERAL, NF_MODE_SQUARE
from src.errors import BadAlphabet, BadParameter, BudgetExceeded
from src.words import letters_of

Letters = Tuple[int, ...]


def default_mode(n: int) -> str:
    """ при n = 5 по умолчанию используются формы w1·w2 """
    return NF_MODE_SQUARE if n == 5 else NF_MODE_GENERAL


def check_mode(n: int, mode: Optional[str]) -> str:
    """ проверка режима нормальных форм """
    mode = default_mode(n) if mode is None else mode
    if mode not in (NF_MODE_SQUARE, NF_MODE_GENERAL):
        raise BadParameter(f"неизвестный режим нормальных форм {mode}")
    if mode == NF_MODE_SQUARE and n != 5:
        raise BadParameter("формы w1·w2 определены только при n = 5")
    return mode


def a_letter(i: int, sign: int = 1) -> int:
    """ буква a_i^{±1} в нумерации графа C'_n (t имеет номер 0) """
    return sign * (i + 1)


def a_index(x: int) -> int:
    """ номер i образующего a_i буквы """
    return abs(x) - 1


def h_letters(n: int) -> Letters:
    """ алфавит H: a1, a1^-1, ..., a_{n-1}, a_{n-1}^-1 """
    return tuple(a_letter(i, s) for i in range(1, n) for s in (1, -1))


def u_letters(n: int) -> Letters:
    """ буквы подгруппы U = <a1, a_{n-1}> """
    return (a_letter(1), a_letter(1, -1), a_letter(n - 1), a_letter(n - 1, -1))


def _shift(n: int, i: int, step: int) -> int:
    # индексы по модулю n-1 в диапазоне 1..n-1
    return (i - 1 + step) % (n - 1) + 1


def extends_normal_form(n: int, word: Sequence[int], x: int, mode: str) -> bool:
    """extends_normal_form остаётся ли слово нормальной формой после дописывания x

    Args:
        n (int): параметр графа
        word (Sequence[int]): нормальная форма
        x (int): дописываемая буква
        mode (str): режим нормальных форм

    Returns:
        bool: результат проверки
    """
    if word and word[-1] == -x:
        return False
    i = a_index(x)
    if mode == NF_MODE_SQUARE:
        if i % 2 == 0:
            return all(a_index(y) % 2 == 0 for y in word)
        return True

    # запрещён фактор a_{i+1}^e a_{i-1}^b a_i^d, b может быть нулём
    before, after = _shift(n, i, -1), _shift(n, i, 1)
    position = len(word) - 1
    while position >= 0 and a_index(word[position]) == before:
        position -= 1
    return not (position >= 0 and a_index(word[position]) == after)


def is_normal_form(n: int, w, mode: Optional[str] = None) -> bool:
    """is_normal_form является ли слово нормальной формой элемента H

    Общий режим: свободно редуцированное слово без факторов
    a_{i+1}^e a_{i-1}^b a_i^d (b может быть нулём, индексы по модулю n-1).
    Режим w1·w2 (n = 5): w1 редуцировано над {a2, a4}, w2 - над {a1, a3}.

    Args:
        n (int): параметр графа C'_n
        w: слово над графом C'_n или последовательность букв
        mode (Optional[str]): режим; по умолчанию w1·w2 при n = 5

    Raises:
        BadAlphabet: буква вне {a1, ..., a_{n-1}}^{±1}

    Returns:
        bool: результат проверки
    """
    mode = check_mode(n, mode)
    letters = letters_of(w)
    for x in letters:
        if not 1 <= a_index(x) <= n - 1:
            raise BadAlphabet(f"буква с номером {a_index(x)} не из алфавита H")
    prefix: List[int] = []
    for x in letters:
        if not extends_normal_form(n, prefix, x, mode):
            return False
        prefix.append(x)
    return True


def iterate_normal_forms(n: int, d: int, mode: Optional[str] = None,
                         prefix: Sequence[int] = ()) -> Iterator[Letters]:
    """iterate_normal_forms обход в глубину нормальных форм длины <= d

    Args:
        n (int): параметр графа
        d (int): бюджет длины
        mode (Optional[str]): режим нормальных форм
        prefix (Sequence[int]): общее начало (само должно быть нормальной формой)

    Raises:
        BudgetExceeded: слишком много форм

    Yields:
        Letters: нормальные формы, начинающиеся с prefix
    """
    mode = check_mode(n, mode)
    alphabet = h_letters(n)
    produced = 0
    stack = [tuple(prefix)] if len(prefix) <= d else []
    while stack:
        word = stack.pop()
        produced += 1
        if produced > MAX_ENUMERATION:
            raise BudgetExceeded(f"более {MAX_ENUMERATION} нормальных форм")
        yield word
        if len(word) < d:
            for x in reversed(alphabet):
                if extends_normal_form(n, word, x, mode):
                    stack.append(word + (x,))


def iterate_lu(n: int, d: int) -> Iterator[Letters]:
    """ элементы a_{n-1}^p a1^q с |p| + |q| <= d """
    for p in range(-d, d + 1):
        for q in range(-(d - abs(p)), d - abs(p) + 1):
            sign_p = 1 if p > 0 else -1
            sign_q = 1 if q > 0 else -1
            yield (a_letter(n - 1, sign_p),) * abs(p) + (a_letter(1, sign_q),) * abs(q)

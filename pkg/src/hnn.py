""" HNN-разложение относительно образующего t, отображение σ, t-толщина,
t-корни и разложение σ-корня на однозначно расположенные подслова """
from typing import FrozenSet, List, Sequence, Tuple

from src.cosets import coset_symbol, in_maln, parabolic_context
from src.errors import LinkNotClique, NoSplitFound
from src.graph import CommutationGraph, is_clique, link
from src.hnn_types import HnnWord, SigmaLetter, SigmaWord, UniquePositionSplit
from src.words import WordLike, format_letters, generator, letters_of, \
    minimal_letters, normal_form, support


def _t_letter(g: CommutationGraph, t: str) -> int:
    return g.index(t) + 1


def _in_subgroup(g: CommutationGraph, names: FrozenSet[str], letters: Sequence[int]) -> bool:
    return all(g.name(generator(x)) in names for x in minimal_letters(g, letters))


def split_at_t(g: CommutationGraph, t: str,
               letters: Sequence[int]) -> Tuple[List[List[int]], List[int]]:
    """ разбиение букв на куски без t и знаки t-букв """
    t_letter = _t_letter(g, t)
    chunks: List[List[int]] = [[]]
    signs: List[int] = []
    for x in letters:
        if abs(x) == t_letter:
            signs.append(1 if x > 0 else -1)
            chunks.append([])
        else:
            chunks[-1].append(x)
    return chunks, signs


def assemble(g: CommutationGraph, t: str, chunks: Sequence[Sequence[int]],
             signs: Sequence[int], reduce: bool = True) -> HnnWord:
    """assemble сборка HNN-слова с редукцией Бриттона

    Самый левый защемляемый фрагмент t^e u t^-e (u из U = <lk(t)>)
    заменяется на u, пока такие фрагменты есть.

    Args:
        g (CommutationGraph): граф
        t (str): выделенный образующий
        chunks (Sequence[Sequence[int]]): куски g0..gm
        signs (Sequence[int]): знаки e1..em
        reduce (bool): выполнять ли редукцию

    Returns:
        HnnWord: разложение с каноническими кусками
    """
    chunks = [list(minimal_letters(g, c)) for c in chunks]
    signs = list(signs)
    lk = link(g, {t})
    while reduce:
        for i in range(1, len(chunks) - 1):
            if signs[i - 1] == -signs[i] and _in_subgroup(g, lk, chunks[i]):
                merged = chunks[i - 1] + chunks[i] + chunks[i + 1]
                chunks[i - 1:i + 2] = [list(minimal_letters(g, merged))]
                del signs[i - 1:i + 1]
                break
        else:
            break
    return HnnWord(t=t, chunks=tuple(normal_form(g, c) for c in chunks),
                   signs=tuple(signs))


def hnn_factorize(g: CommutationGraph, t: str, w: WordLike) -> HnnWord:
    """hnn_factorize приведённое разложение элемента относительно t

    Args:
        g (CommutationGraph): граф
        t (str): выделенный образующий
        w (WordLike): слово

    Raises:
        UnknownVertex: t не вершина графа

    Returns:
        HnnWord: приведённое разложение
    """
    chunks, signs = split_at_t(g, t, letters_of(w))
    return assemble(g, t, chunks, signs)


def t_length(h: HnnWord) -> int:
    """ число t-букв |p|_t """
    return len(h.signs)


def format_hnn(h: HnnWord) -> str:
    """ запись HNN-слова """
    return format_letters(h.graph, h.letters)


def _wrap_letters(h: HnnWord) -> Tuple[int, ...]:
    return h.chunks[-1].letters + h.chunks[0].letters


def is_cyclically_reduced_hnn(g: CommutationGraph, t: str, h: HnnWord) -> bool:
    """ приведено ли произведение h·h: m <= 1, или gm·g0 вне U, или em = e1 """
    if len(h.signs) <= 1:
        return True
    if not _in_subgroup(g, link(g, {t}), _wrap_letters(h)):
        return True
    return h.signs[-1] == h.signs[0]


def rotate_hnn(g: CommutationGraph, h: HnnWord, i: int) -> HnnWord:
    """rotate_hnn циклический сдвиг, начинающийся с t-буквы номер i

    Args:
        g (CommutationGraph): граф
        h (HnnWord): разложение с m >= 1
        i (int): номер t-буквы, 0 <= i < m

    Returns:
        HnnWord: t^e(i+1) g(i+1) ... t^em (gm g0) t^e1 ... gi без редукции
    """
    letters = h.letters
    t_letter = _t_letter(g, h.t)
    positions = [p for p, x in enumerate(letters) if abs(x) == t_letter]
    start = positions[i]
    chunks, signs = split_at_t(g, h.t, letters[start:] + letters[:start])
    return assemble(g, h.t, chunks, signs, reduce=False)


def end_with_t(g: CommutationGraph, h: HnnWord) -> HnnWord:
    """end_with_t сопряжение кусков gm: (gm g0) t^e1 g1 ... t^em

    Стык gm·g0 становится одним куском, последний кусок пуст.

    Args:
        g (CommutationGraph): граф
        h (HnnWord): разложение

    Returns:
        HnnWord: сопряжённое разложение без редукции; h при m = 0 или пустом gm
    """
    if not h.signs or not h.chunks[-1].letters:
        return h
    chunks = [_wrap_letters(h)] + [c.letters for c in h.chunks[1:-1]] + [()]
    return assemble(g, h.t, chunks, h.signs, reduce=False)


def free_reduce_sigma(letters: Sequence[SigmaLetter]) -> Tuple[SigmaLetter, ...]:
    """ свободная редукция единичных букв F(D+) * <t> """
    stack: List[SigmaLetter] = []
    for name, sign in letters:
        if stack and stack[-1] == (name, -sign):
            stack.pop()
        else:
            stack.append((name, sign))
    return tuple(stack)


def sigma(g: CommutationGraph, t: str, h: HnnWord) -> SigmaWord:
    """sigma образ σ(h) в F(D+) * <t>

    Куски заменяются символами двойных классов U g U, единичные символы
    отбрасываются, результат свободно редуцируется.

    Args:
        g (CommutationGraph): граф
        t (str): выделенный образующий
        h (HnnWord): разложение

    Returns:
        SigmaWord: σ(h)
    """
    ctx = parabolic_context(g, link(g, {t}))
    letters: List[SigmaLetter] = []
    for i, chunk in enumerate(h.chunks):
        name, orientation = coset_symbol(ctx, chunk)
        if name:
            letters.append((name, orientation))
        if i < len(h.signs):
            letters.append((t, h.signs[i]))
    return SigmaWord(free_reduce_sigma(letters))


def format_sigma(s: SigmaWord) -> str:
    """ запись σ-слова, серии одной буквы сворачиваются в имя^k """
    if not s.letters:
        return "1"
    parts = []
    i = 0
    while i < len(s.letters):
        j = i
        while j < len(s.letters) and s.letters[j] == s.letters[i]:
            j += 1
        name, sign = s.letters[i]
        power = sign * (j - i)
        parts.append(name if power == 1 else f"{name}^{power}")
        i = j
    return " ".join(parts)


def cyclically_reduce_sigma(s: SigmaWord) -> SigmaWord:
    """ циклическая редукция σ-слова """
    letters = list(free_reduce_sigma(s.letters))
    while len(letters) >= 2 and letters[0] == (letters[-1][0], -letters[-1][1]):
        letters = letters[1:-1]
    return SigmaWord(tuple(letters))


def sigma_period(s: SigmaWord) -> int:
    """sigma_period длина примитивного периода циклического σ-слова

    Период находится по функции отказов (префикс-функции) последовательности.

    Args:
        s (SigmaWord): циклически редуцированное σ-слово

    Returns:
        int: p, такое что s = q^(L/p) с примитивным q; 0 для пустого слова
    """
    letters = s.letters
    size = len(letters)
    if size == 0:
        return 0
    failure = [0] * size
    k = 0
    for i in range(1, size):
        while k and letters[i] != letters[k]:
            k = failure[k - 1]
        if letters[i] == letters[k]:
            k += 1
        failure[i] = k
    period = size - failure[-1]
    return period if size % period == 0 else size


def t_root_of(g: CommutationGraph, t: str, h: HnnWord) -> Tuple[SigmaWord, int]:
    """ примитивный корень и показатель циклически редуцированного σ
    от сдвига h, оканчивающегося t-буквой """
    reduced = cyclically_reduce_sigma(sigma(g, t, end_with_t(g, h)))
    period = sigma_period(reduced)
    if period == 0:
        return reduced, 1
    return SigmaWord(reduced.letters[:period]), len(reduced) // period


def is_t_root(g: CommutationGraph, t: str, h: HnnWord) -> bool:
    """ не является ли циклически редуцированное σ сдвига h, оканчивающегося
    t-буквой, собственной степенью """
    return t_root_of(g, t, h)[1] == 1


def _thickness_link(g: CommutationGraph, t: str) -> FrozenSet[str]:
    lk = link(g, {t})
    if not is_clique(g, lk):
        raise LinkNotClique(f"lk({t}) = {sorted(lk)} не клика")
    return lk


def _chunk_thick(g: CommutationGraph, lk: FrozenSet[str], letters: Sequence[int]) -> bool:
    if not lk:
        return True
    return support(g, letters) <= lk or in_maln(g, lk, letters)


def is_t_thick(g: CommutationGraph, t: str, h: HnnWord) -> bool:
    """is_t_thick все ли куски лежат в U ∪ Maln_H(U)

    Args:
        g (CommutationGraph): граф
        t (str): выделенный образующий
        h (HnnWord): приведённое разложение

    Raises:
        LinkNotClique: lk(t) не клика

    Returns:
        bool: t-толщина
    """
    lk = _thickness_link(g, t)
    return all(_chunk_thick(g, lk, chunk.letters) for chunk in h.chunks)


def is_cyclically_t_thick(g: CommutationGraph, t: str, h: HnnWord) -> bool:
    """ t-толщина, циклическая приведённость и толщина стыка gm·g0 """
    lk = _thickness_link(g, t)
    return is_t_thick(g, t, h) and is_cyclically_reduced_hnn(g, t, h) \
        and _chunk_thick(g, lk, _wrap_letters(h))


def _occurrences(cyclic: Sequence[SigmaLetter], segment: Sequence[SigmaLetter]) -> int:
    size = len(cyclic)
    doubled = list(cyclic) * 2
    return sum(1 for i in range(size) if doubled[i:i + len(segment)] == list(segment))


def _uniquely_positioned(cyclic, inverse, segment) -> bool:
    return _occurrences(cyclic, segment) == 1 and _occurrences(inverse, segment) == 0


def unique_position_factorization(root: SigmaWord) -> UniquePositionSplit:
    """unique_position_factorization сдвиг корня вида a·b с однозначно
    расположенными непустыми a и b

    Сдвиги перебираются с нулевого; внутри сдвига сначала пробуются
    разрезы, где a оканчивается t-буквой.

    Args:
        root (SigmaWord): циклически редуцированный примитивный корень

    Raises:
        NoSplitFound: корень не редуцирован, является степенью или разреза нет

    Returns:
        UniquePositionSplit: найденный разрез
    """
    letters = root.letters
    size = len(letters)
    if cyclically_reduce_sigma(root).letters != letters:
        raise NoSplitFound("σ-слово не циклически редуцировано")
    if size < 2:
        raise NoSplitFound("слово короче двух букв")
    if sigma_period(root) != size:
        raise NoSplitFound("σ-слово является собственной степенью")

    inverse = root.inverse().letters
    for rotation in range(size):
        rotated = letters[rotation:] + letters[:rotation]
        cuts = sorted(range(1, size), key=lambda c: (not _is_t_symbol(rotated[c - 1]), c))
        for cut in cuts:
            a, b = rotated[:cut], rotated[cut:]
            if _uniquely_positioned(letters, inverse, a) and \
                    _uniquely_positioned(letters, inverse, b):
                return UniquePositionSplit(a=SigmaWord(a), b=SigmaWord(b), rotation=rotation)
    raise NoSplitFound("не найден разрез на однозначно расположенные подслова")


def _is_t_symbol(letter: SigmaLetter) -> bool:
    return not letter[0].startswith("[")

""" слова над A ∪ A^-1: минимальные формы, равенство, циклическая редукция,
блочное разложение и проверка сопряжённости в группе G(Γ) """
import re
from collections import Counter, deque
from typing import FrozenSet, List, Sequence, Tuple, Union

from src.config import MAX_CONJUGACY_STATES
from src.errors import BudgetExceeded, NotCyclicallyMinimal, UnknownGenerator, \
    WordSyntaxError, ZeroExponent
from src.graph import CommutationGraph, complement_components, star
from src.word_types import CyclicDecomposition, NormalForm, Word

Letters = Tuple[int, ...]
WordLike = Union[Word, NormalForm]

TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^([+-]?\d+))?$")


def letters_of(w: Union[WordLike, Sequence[int]]) -> Letters:
    """ буквы слова, нормальной формы или готовой последовательности """
    if isinstance(w, (Word, NormalForm)):
        return w.letters
    return tuple(w)


def generator(x: int) -> int:
    """ номер образующего буквы """
    return abs(x) - 1


def letter_order_key(x: int) -> int:
    """ порядок букв: a < a^-1 < b < b^-1 < ... в порядке объявления вершин """
    return 2 * (abs(x) - 1) + (0 if x > 0 else 1)


def shortlex_key(letters: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """ ключ сравнения слов в порядке shortlex """
    return len(letters), tuple(letter_order_key(x) for x in letters)


def invert_letters(letters: Sequence[int]) -> Letters:
    """ буквы обратного слова """
    return tuple(-x for x in reversed(letters))


def free_reduce(letters: Sequence[int]) -> Letters:
    """ свободная редукция (сокращение соседних x x^-1) """
    stack: List[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def all_letters(g: CommutationGraph, names: Sequence[str] = None) -> Letters:
    """ все буквы x, x^-1 над заданными вершинами (по умолчанию - над всеми) """
    names = g.vertices if names is None else g.ordered(names)
    result = []
    for name in names:
        x = g.index(name) + 1
        result += [x, -x]
    return tuple(result)


def parse_word(text: str, g: CommutationGraph) -> Word:
    """parse_word разбор записи слова

    Args:
        text (str): токены `имя` или `имя^k` через пробел, либо `1`
        g (CommutationGraph): граф

    Raises:
        WordSyntaxError: ошибка синтаксиса
        UnknownGenerator: неизвестный образующий
        ZeroExponent: показатель 0

    Returns:
        Word: слово с раскрытыми степенями
    """
    tokens = text.split()
    if not tokens:
        raise WordSyntaxError("пустая запись, тождество обозначается 1")
    if tokens == ["1"]:
        return Word((), g)

    letters: List[int] = []
    for token in tokens:
        if token == "1":
            raise WordSyntaxError("токен 1 допустим только как всё слово")
        match = TOKEN_RE.match(token)
        if match is None:
            raise WordSyntaxError(f"неверный токен {token!r}")
        name, exponent = match.group(1), match.group(2)
        if name not in g:
            raise UnknownGenerator(f"неизвестный образующий {name}")
        power = 1 if exponent is None else int(exponent)
        if power == 0:
            raise ZeroExponent(f"нулевой показатель в токене {token!r}")
        x = g.index(name) + 1
        letters.extend([x if power > 0 else -x] * abs(power))
    return Word(tuple(letters), g)


def format_letters(g: CommutationGraph, letters: Sequence[int]) -> str:
    """ каноническая запись: серии одной буквы сворачиваются в имя^k """
    if not letters:
        return "1"
    parts = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        name = g.name(generator(letters[i]))
        power = (j - i) if letters[i] > 0 else -(j - i)
        parts.append(name if power == 1 else f"{name}^{power}")
        i = j
    return " ".join(parts)


def format_word(w: WordLike) -> str:
    """ запись слова или нормальной формы """
    return format_letters(w.graph, w.letters)


def minimal_letters(g: CommutationGraph, letters: Sequence[int]) -> Letters:
    """minimal_letters каноническая минимальная форма в виде букв

    Буквы укладываются в кучу: каждая буква ложится на стопки всех
    некоммутирующих с ней образующих; буква сокращается с вершиной своей
    стопки, если между ними нет некоммутирующих букв. Затем куча
    разбирается жадно по наименьшему доступному образующему.

    Args:
        g (CommutationGraph): граф
        letters (Sequence[int]): буквы

    Returns:
        Letters: кратчайшее в порядке shortlex геодезическое слово
    """
    piles = [deque() for _ in g.vertices]
    count = 0
    for x in letters:
        i = abs(x) - 1
        sign = 1 if x > 0 else -1
        if piles[i] and piles[i][-1] == -sign:
            count -= 1
            for j in g.blocking_indices(i):
                piles[j].pop()
        else:
            count += 1
            for j in g.blocking_indices(i):
                piles[j].append(sign if j == i else 0)

    result = []
    while len(result) < count:
        i = next(j for j, pile in enumerate(piles) if pile and pile[0])
        result.append((i + 1) * piles[i][0])
        for j in g.blocking_indices(i):
            piles[j].popleft()
    return tuple(result)


def normal_form(g: CommutationGraph, letters: Sequence[int]) -> NormalForm:
    """ нормальная форма по набору букв """
    return NormalForm(Word(minimal_letters(g, letters), g))


def minimal_form(g: CommutationGraph, w: WordLike) -> NormalForm:
    """minimal_form каноническая минимальная форма элемента

    Args:
        g (CommutationGraph): граф
        w (WordLike): слово

    Returns:
        NormalForm: геодезическая форма, наименьшая в порядке shortlex
    """
    return normal_form(g, letters_of(w))


def equal(g: CommutationGraph, w1: WordLike, w2: WordLike) -> bool:
    """ равны ли слова как элементы группы """
    return minimal_letters(g, letters_of(w1)) == minimal_letters(g, letters_of(w2))


def length(g: CommutationGraph, w: WordLike) -> int:
    """ длина l(g) элемента """
    return len(minimal_letters(g, letters_of(w)))


def support(g: CommutationGraph, w: WordLike) -> FrozenSet[str]:
    """ носитель supp(g) минимальной формы """
    return frozenset(g.name(generator(x)) for x in minimal_letters(g, letters_of(w)))


def inverse(w: WordLike) -> Word:
    """ обратное слово """
    return Word(invert_letters(w.letters), w.graph)


def multiply(w1: WordLike, w2: WordLike) -> Word:
    """ конкатенация слов """
    return Word(w1.letters + w2.letters, w1.graph)


def power(w: WordLike, exponent: int) -> Word:
    """ степень слова (отрицательная - степень обратного) """
    base = w.letters if exponent >= 0 else invert_letters(w.letters)
    return Word(base * abs(exponent), w.graph)


def centralizer_generators(g: CommutationGraph, name: str) -> FrozenSet[str]:
    """ образующие централизатора образующего: C(x) = <st(x)> """
    return star(g, name)


def _divisor_positions(g: CommutationGraph, letters: Sequence[int]) -> List[Tuple[int, int]]:
    blocked = set()
    result = []
    for position, x in enumerate(letters):
        i = abs(x) - 1
        if i not in blocked:
            result.append((position, x))
        blocked.update(g.blocking_indices(i))
    return result


def left_divisor_positions(g: CommutationGraph,
                           letters: Sequence[int]) -> List[Tuple[int, int]]:
    """ позиции и буквы левых делителей минимального слова """
    return _divisor_positions(g, letters)


def right_divisor_positions(g: CommutationGraph,
                            letters: Sequence[int]) -> List[Tuple[int, int]]:
    """ позиции и буквы правых делителей минимального слова """
    last = len(letters) - 1
    return [(last - p, x) for p, x in _divisor_positions(g, letters[::-1])]


def left_divisors(g: CommutationGraph, w: WordLike) -> FrozenSet[int]:
    """ буквы - левые делители элемента """
    m = minimal_letters(g, letters_of(w))
    return frozenset(x for _, x in left_divisor_positions(g, m))


def right_divisors(g: CommutationGraph, w: WordLike) -> FrozenSet[int]:
    """ буквы - правые делители элемента """
    m = minimal_letters(g, letters_of(w))
    return frozenset(x for _, x in right_divisor_positions(g, m))


def _reducible_pair(g: CommutationGraph, letters: Sequence[int]):
    right = {x: p for p, x in right_divisor_positions(g, letters)}
    candidates = sorted((letter_order_key(x), p, right[-x])
                        for p, x in left_divisor_positions(g, letters) if -x in right)
    return candidates[0][1:] if candidates else None


def is_cyclically_minimal(g: CommutationGraph, w: WordLike) -> bool:
    """is_cyclically_minimal нет буквы y, которая левый делитель, а y^-1 правый

    Args:
        g (CommutationGraph): граф
        w (WordLike): слово

    Returns:
        bool: циклически минимален ли элемент
    """
    return _reducible_pair(g, minimal_letters(g, letters_of(w))) is None


def cyclic_reduce(g: CommutationGraph, w: WordLike) -> CyclicDecomposition:
    """cyclic_reduce разложение g = u^-1 · v · u с циклически минимальным v

    Args:
        g (CommutationGraph): граф
        w (WordLike): слово

    Returns:
        CyclicDecomposition: (u, v), l(w) = 2 l(u) + l(v)
    """
    current = list(minimal_letters(g, letters_of(w)))
    prefix = []
    while True:
        pair = _reducible_pair(g, current)
        if pair is None:
            break
        front, back = pair
        prefix.append(current[front])
        current = [x for i, x in enumerate(current) if i not in (front, back)]
    return CyclicDecomposition(
        conjugator=normal_form(g, invert_letters(prefix)),
        core=normal_form(g, current))


def block_decomposition(g: CommutationGraph, v: WordLike) -> List[NormalForm]:
    """block_decomposition разложение циклически минимального элемента на блоки
    по компонентам дополнительного графа на носителе

    Args:
        g (CommutationGraph): граф
        v (WordLike): циклически минимальный элемент

    Raises:
        NotCyclicallyMinimal: элемент не циклически минимален

    Returns:
        List[NormalForm]: попарно коммутирующие блоки, произведение равно v
    """
    letters = minimal_letters(g, letters_of(v))
    if _reducible_pair(g, letters) is not None:
        raise NotCyclicallyMinimal(f"{format_letters(g, letters)} не циклически минимально")
    supp = {g.name(generator(x)) for x in letters}
    blocks = []
    for component in complement_components(g, supp):
        members = {g.index(name) for name in component}
        blocks.append(normal_form(g, [x for x in letters if generator(x) in members]))
    return blocks


def _cyclic_moves(g: CommutationGraph, letters: Letters):
    for p, x in left_divisor_positions(g, letters):
        yield minimal_letters(g, letters[:p] + letters[p + 1:] + (x,))
    for p, x in right_divisor_positions(g, letters):
        yield minimal_letters(g, (x,) + letters[:p] + letters[p + 1:])


def conjugate_test(g: CommutationGraph, w1: WordLike, w2: WordLike) -> bool:
    """conjugate_test сопряжены ли элементы

    Ядра циклической редукции сравниваются после замыкания первого ядра
    относительно циклических перестановок u·v -> v·u.

    Args:
        g (CommutationGraph): граф
        w1 (WordLike): первое слово
        w2 (WordLike): второе слово

    Raises:
        BudgetExceeded: замыкание слишком велико

    Returns:
        bool: сопряжены ли w1 и w2
    """
    source = cyclic_reduce(g, w1).core.letters
    target = cyclic_reduce(g, w2).core.letters
    if source == target:
        return True
    if Counter(source) != Counter(target):
        return False

    seen = {source}
    frontier = deque([source])
    while frontier:
        current = frontier.popleft()
        for moved in _cyclic_moves(g, current):
            if moved == target:
                return True
            if moved not in seen:
                seen.add(moved)
                frontier.append(moved)
                if len(seen) > MAX_CONJUGACY_STATES:
                    raise BudgetExceeded("слишком большой класс циклических перестановок")
    return False

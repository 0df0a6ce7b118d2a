""" двойные смежные классы <Y> w <Y> и проверка принадлежности Maln """
from typing import Iterable, List, Tuple

from src.coset_types import DoubleCosetRep, ParabolicContext
from src.errors import BadParameter, NotAClique
from src.graph import CommutationGraph, check_subset, is_clique
from src.word_types import NormalForm
from src.words import WordLike, format_letters, generator, invert_letters, \
    left_divisor_positions, letters_of, minimal_letters, normal_form, \
    right_divisor_positions, shortlex_key, support


def parabolic_context(g: CommutationGraph, subset: Iterable[str]) -> ParabolicContext:
    """ контекст <Y> с проверкой вершин """
    return ParabolicContext(graph=g, subset=check_subset(g, subset))


def _subset_indices(ctx: ParabolicContext) -> frozenset:
    return frozenset(ctx.graph.index(name) for name in ctx.subset)


def parabolic_member(ctx: ParabolicContext, w: WordLike) -> bool:
    """ лежит ли элемент в <Y> """
    return support(ctx.graph, w) <= ctx.subset


def _strip_left(ctx: ParabolicContext, letters: List[int]) -> Tuple[List[int], List[int]]:
    members = _subset_indices(ctx)
    taken = []
    while True:
        found = [(p, x) for p, x in left_divisor_positions(ctx.graph, letters)
                 if generator(x) in members]
        if not found:
            return taken, letters
        positions = {p for p, _ in found}
        taken += [x for _, x in found]
        letters = [x for i, x in enumerate(letters) if i not in positions]


def _strip_right(ctx: ParabolicContext, letters: List[int]) -> Tuple[List[int], List[int]]:
    members = _subset_indices(ctx)
    taken = []
    while True:
        found = [(p, x) for p, x in right_divisor_positions(ctx.graph, letters)
                 if generator(x) in members]
        if not found:
            return letters, taken
        positions = {p for p, _ in found}
        taken = [x for _, x in sorted(found)] + taken
        letters = [x for i, x in enumerate(letters) if i not in positions]


def strip_divisors(ctx: ParabolicContext, w: WordLike) -> DoubleCosetRep:
    """strip_divisors отделение максимального левого, затем правого делителя из <Y>

    Args:
        ctx (ParabolicContext): подгруппа <Y>
        w (WordLike): слово

    Returns:
        DoubleCosetRep: left · core · right = w, длины складываются
    """
    g = ctx.graph
    letters = list(minimal_letters(g, letters_of(w)))
    left, rest = _strip_left(ctx, letters)
    core, right = _strip_right(ctx, rest)
    return DoubleCosetRep(left=normal_form(g, left),
                          core=normal_form(g, core),
                          right=normal_form(g, right))


def double_coset_rep(ctx: ParabolicContext, w: WordLike) -> NormalForm:
    """ канонический представитель d класса <Y> w <Y> (кратчайший элемент) """
    return strip_divisors(ctx, w).core


def in_maln(g: CommutationGraph, clique: Iterable[str], w: WordLike) -> bool:
    """in_maln принадлежит ли w множеству Maln(<B>) для клики B

    Для w вне <B>: для каждого b из B найдётся x из supp(w)∖B, не смежный с b.

    Args:
        g (CommutationGraph): граф
        clique (Iterable[str]): непустая клика B
        w (WordLike): слово

    Raises:
        BadParameter: пустое B
        NotAClique: B не клика

    Returns:
        bool: результат проверки
    """
    clique = check_subset(g, clique)
    if not clique:
        raise BadParameter("множество B должно быть непустым")
    if not is_clique(g, clique):
        raise NotAClique(f"{sorted(clique)} не клика")
    supp = support(g, w)
    outside = supp - clique
    if not outside:
        return False
    return all(any(not g.has_edge(x, b) for x in outside) for b in clique)


def coset_symbol(ctx: ParabolicContext, w: WordLike) -> Tuple[str, int]:
    """coset_symbol символ двойного класса в алфавите D+ и ориентация

    Из d и представителя класса d^-1 меньший в shortlex даёт имя символа.

    Args:
        ctx (ParabolicContext): подгруппа U
        w (WordLike): слово

    Returns:
        Tuple[str, int]: ("[...]", +1 или -1); для класса единицы ("", 0)
    """
    core = double_coset_rep(ctx, w).letters
    if not core:
        return "", 0
    mirror = double_coset_rep(ctx, invert_letters(core)).letters
    if shortlex_key(core) <= shortlex_key(mirror):
        return f"[{format_letters(ctx.graph, core)}]", 1
    return f"[{format_letters(ctx.graph, mirror)}]", -1

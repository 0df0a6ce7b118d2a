""" точный подсчёт составных слов, σ-образ которых не является собственной степенью """
from itertools import product
from math import factorial
from typing import Dict, List, Sequence, Tuple

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius
from sympy.utilities.iterables import multiset_partitions

from src.census_types import SymbolPool
from src.config import T_VERTEX
from src.hnn import cyclically_reduce_sigma, sigma_period
from src.hnn_types import SigmaWord


def signed_compositions(k: int) -> List[Tuple[int, ...]]:
    """signed_compositions показатели a1..ar при t: композиции l <= k со знаками

    Args:
        k (int): бюджет t-длины

    Returns:
        List[Tuple[int, ...]]: все наборы ненулевых показателей с суммой модулей от 1 до k
    """
    result = []
    for total in range(1, k + 1):
        for mask in range(1 << (total - 1)):
            parts, run = [], 1
            for bit in range(total - 1):
                if mask >> bit & 1:
                    parts.append(run)
                    run = 1
                else:
                    run += 1
            parts.append(run)
            for signs in product((1, -1), repeat=len(parts)):
                result.append(tuple(s * p for s, p in zip(signs, parts)))
    return result


def is_root_pattern(labels: Sequence[Tuple[str, int]], exponents: Sequence[int]) -> bool:
    """ не является ли циклическое слово x1 t^E1 ... xr t^Er собственной степенью """
    letters = []
    for label, exponent in zip(labels, exponents):
        letters.append(label)
        sign = 1 if exponent > 0 else -1
        letters += [(T_VERTEX, sign)] * abs(exponent)
    reduced = cyclically_reduce_sigma(SigmaWord(tuple(letters)))
    return sigma_period(reduced) == len(reduced)


class RootCounter:
    """
    Подсчёт составных слов u·g1 t^a1 g2 t^a2 ... gr t^ar с σ-образом,
    не являющимся собственной степенью.

    Позиция 1 берёт куски из first, позиции 2..r - из other. Тривиальные
    символы сливают соседние степени t. Если все слитые показатели
    ненулевые, слово циклически редуцировано и примитивные назначения
    считаются обращением Мёбиуса по периодам. Иначе перебираются шаблоны
    равенства символов с включениями-исключениями по решётке разбиений.
    """

    def __init__(self, first: SymbolPool, other: SymbolPool):
        self._first = first
        self._other = other
        self._names = sorted(first.names() | other.names())
        self._power_sums: Dict[Tuple[int, int], int] = {}
        self._memo: Dict[Tuple, int] = {}

    def total(self, exponents: Sequence[int]) -> int:
        """ число наборов кусков для данных показателей """
        return self._first.total * self._other.total ** (len(exponents) - 1)

    def roots(self, exponents: Sequence[int]) -> int:
        """roots число наборов кусков, дающих t-корень

        Args:
            exponents (Sequence[int]): ненулевые показатели a1..ar

        Returns:
            int: число наборов
        """
        size = len(exponents)
        count = 0
        for mask in range(1 << size):
            weight = 1
            for i in range(size):
                if mask >> i & 1:
                    weight *= self._first.trivial if i == 0 else self._other.trivial
            if weight == 0:
                continue
            nontrivial = [i for i in range(size) if not mask >> i & 1]
            if not nontrivial:
                if abs(sum(exponents)) <= 1:
                    count += weight
                continue
            merged = []
            for idx, j in enumerate(nontrivial):
                stop = nontrivial[(idx + 1) % len(nontrivial)]
                total, i = 0, j
                while True:
                    total += exponents[i]
                    i = (i + 1) % size
                    if i == stop:
                        break
                merged.append(total)
            kinds = tuple(j == 0 for j in nontrivial)
            count += weight * self._assignments(tuple(merged), kinds)
        return count

    def _pool(self, is_first: bool) -> SymbolPool:
        return self._first if is_first else self._other

    def _power_sum(self, m1: int, m2: int) -> int:
        key = (m1, m2)
        if key not in self._power_sums:
            self._power_sums[key] = sum(
                self._first.get(name, o) ** m1 * self._other.get(name, o) ** m2
                for name in self._names for o in (1, -1))
        return self._power_sums[key]

    def _assignments(self, merged: Tuple[int, ...], kinds: Tuple[bool, ...]) -> int:
        key = (merged, kinds)
        if key not in self._memo:
            if all(merged):
                self._memo[key] = self._periodic(merged, kinds)
            else:
                self._memo[key] = self._patterns(merged, kinds)
        return self._memo[key]

    def _periodic(self, merged: Tuple[int, ...], kinds: Tuple[bool, ...]) -> int:
        size = len(merged)
        result = 0
        for q in divisors(size):
            mu = int(mobius(size // q))
            if mu == 0:
                continue
            if any(merged[j] != merged[(j + q) % size] for j in range(size)):
                continue
            periodic = 1
            for c in range(q):
                members = range(c, size, q)
                m1 = sum(1 for j in members if kinds[j])
                periodic *= self._power_sum(m1, len(members) - m1)
            result += mu * periodic
        return result

    def _patterns(self, merged: Tuple[int, ...], kinds: Tuple[bool, ...]) -> int:
        size = len(merged)
        result = 0
        for partition in multiset_partitions(list(range(size))):
            owner = {j: b for b, block in enumerate(partition) for j in block}
            leaders = {block[0] for block in partition}
            followers = [j for j in range(size) if j not in leaders]
            for signs in product((1, -1), repeat=len(followers)):
                orientation = dict.fromkeys(leaders, 1)
                orientation.update(zip(followers, signs))
                labels = [(f"x{owner[j]}", orientation[j]) for j in range(size)]
                if is_root_pattern(labels, merged):
                    result += self._exact(partition, orientation, kinds)
        return result

    def _block_weights(self, block, orientation, kinds) -> Dict[str, int]:
        weights = {}
        for name in self._names:
            value = 0
            for s in (1, -1):
                term = 1
                for j in block:
                    term *= self._pool(kinds[j]).get(name, orientation[j] * s)
                value += term
            weights[name] = value
        return weights

    def _exact(self, partition, orientation, kinds) -> int:
        # назначения, в которых блоки получают попарно различные символы
        weights = [self._block_weights(block, orientation, kinds) for block in partition]
        result = 0
        for coarse in multiset_partitions(list(range(len(partition)))):
            mu = 1
            product_value = 1
            for group in coarse:
                mu *= (-1) ** (len(group) - 1) * factorial(len(group) - 1)
                group_sum = 0
                for name in self._names:
                    term = 1
                    for b in group:
                        term *= weights[b][name]
                    group_sum += term
                product_value *= group_sum
            result += mu * product_value
        return result

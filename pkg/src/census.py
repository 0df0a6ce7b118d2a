""" перепись нормальных форм над графами C'_n: проверка замкнутых формул
и оценок, классификация составных слов и оценка асимптотической плотности """
import csv
import random
from bisect import bisect_right
from fractions import Fraction
from itertools import product
from math import sqrt
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import Integer
from sympy import sqrt as exact_sqrt

from src.census_types import BoundCheck, CensusParams, CensusRow, \
    ComposedWord, DensityRow, SymbolPool, UniquenessReport, ZFlags
from src.component import LoggedComponent
from src.config import CONVENTION_FORMULA, CONVENTION_STRICT, CSV_COLUMNS, \
    DEFAULT_SAMPLES, LOG_DEBUG, LOG_INFO, MAX_CENSUS_D, MAX_CENSUS_K, \
    MAX_ENUMERATION, MODE_EXHAUSTIVE, MODE_SAMPLE, NF_MODE_GENERAL, \
    NF_MODE_SQUARE, SOURCE_ENUMERATED, SOURCE_FORMULA, STRATUM_ONE, \
    STRATUM_TWO, STRATUM_ZERO, T_VERTEX, UNIQUENESS_MAX_LEN
from src.cosets import coset_symbol, in_maln, parabolic_context
from src.errors import BadParameter, BadSeed, BudgetExceeded, NonIntegralFormula
from src.graph import CommutationGraph, cycle_with_chord
from src.hnn import is_t_root, is_t_thick
from src.hnn_types import HnnWord
from src.normal_forms import a_index, check_mode, h_letters, is_normal_form, \
    iterate_normal_forms, u_letters
from src.sigma_count import RootCounter, signed_compositions
from src.word_types import Word
from src.words import is_cyclically_minimal, left_divisors, minimal_letters

Letters = Tuple[int, ...]


def u_names(n: int) -> Tuple[str, str]:
    """ образующие подгруппы U = lk(t) графа C'_n """
    return "a1", f"a{n - 1}"


def _in_u(n: int, letters: Letters) -> bool:
    return set(letters) <= set(u_letters(n))


def first_letter_stats(n: int, d: int, mode: Optional[str], first: Optional[int]) -> Dict[str, int]:
    """first_letter_stats счётчики по нормальным формам с данной первой буквой

    Args:
        n (int): параметр графа
        d (int): бюджет длины
        mode (Optional[str]): режим нормальных форм
        first (Optional[int]): первая буква; None - только единица

    Returns:
        Dict[str, int]: l_H, S<m>, l_U, l_HU, e, e_prime, l_d0, split_a/b/c
    """
    stats = dict.fromkeys(("l_H", "l_U", "l_HU", "e", "e_prime", "l_d0",
                           "split_a", "split_b", "split_c"), 0)
    if first is None:
        stats.update(l_H=1, l_U=1, l_HU=1, l_d0=1, S0=1)
        return stats
    g = cycle_with_chord(n)
    u = u_names(n)
    for letters in iterate_normal_forms(n, d, mode, prefix=(first,)):
        word = Word(letters, g)
        key = f"S{len(letters)}"
        stats[key] = stats.get(key, 0) + 1
        stats["l_H"] += 1
        in_u = _in_u(n, letters)
        thick = in_u or in_maln(g, u, word)
        if in_u:
            stats["l_U"] += 1
        if not thick:
            stats["e_prime"] += 1
        if is_cyclically_minimal(g, word):
            stats["l_d0"] += 1
        if any(a_index(x) in (1, n - 1) for x in left_divisors(g, word)):
            continue
        stats["l_HU"] += 1
        if not thick:
            stats["e"] += 1
        i = a_index(letters[0])
        if i == 2:
            stats["split_b"] += 1
        elif i == n - 2:
            stats["split_c"] += 1
        else:
            stats["split_a"] += 1
    return stats


def _exact(value: Fraction, name: str) -> int:
    if value.denominator != 1:
        raise NonIntegralFormula(f"{name} = {value} не целое")
    return value.numerator


def _quotient_formula(top: int, bottom: int, k: int, name: str) -> int:
    """ (top / bottom) · ((2 bottom + 1)^k - 1) """
    return _exact(Fraction(top, bottom) * ((2 * bottom + 1) ** k - 1), name)


def closed_formulas(params: CensusParams, row: Optional[CensusRow] = None) -> CensusRow:
    """closed_formulas значения замкнутых формул

    При n = 5 все величины вычисляются по формулам; при n >= 6 формулы
    для l^i, l^ii и z2^(ii) берут l_H, l_H^U, e, e' из перечисленной строки.

    Args:
        params (CensusParams): параметры
        row (Optional[CensusRow]): перечисленные значения (нужны при n >= 6)

    Raises:
        NonIntegralFormula: деление оказалось неточным
        BadParameter: при n >= 6 не передана перечисленная строка

    Returns:
        CensusRow: значения с источником FORMULA
    """
    n, d, k = params.n, params.d, params.k
    result = CensusRow(n, d, k)
    l_u = 1 + 2 * d * (d + 1)
    result.put("l_U", l_u, SOURCE_FORMULA)
    if n == 5:
        l_h = _exact(1 + Fraction(8 * d * 3 ** d, 3), "l_H")
        l_hu = _exact(Fraction(3 ** d, 3) * (3 + 2 * d), "l_HU")
        e = 2 * (3 ** d - 1)
        e_prime = 8 * (3 ** d - 1) - 4 * d * (2 + d)
        for m in range(1, d + 1):
            result.put(f"S{m}", _exact(Fraction(8 * 3 ** m * (2 * m + 1), 9), f"S{m}"),
                       SOURCE_FORMULA)
        result.put("l_H", l_h, SOURCE_FORMULA)
        result.put("l_HU", l_hu, SOURCE_FORMULA)
        result.put("e", e, SOURCE_FORMULA)
        result.put("e_prime", e_prime, SOURCE_FORMULA)
    elif row is None:
        raise BadParameter("при n >= 6 формулам нужны перечисленные l_H, l_HU, e, e_prime")
    else:
        l_h, l_hu, e, e_prime = row["l_H"], row["l_HU"], row["e"], row["e_prime"]

    t_h, t_hu = l_h - e_prime, l_hu - e
    result.put("t_H", t_h, SOURCE_FORMULA)
    result.put("t_HU", t_hu, SOURCE_FORMULA)
    result.put("l1", 2 * k * l_u, SOURCE_FORMULA)
    result.put("l2", _quotient_formula(l_h, l_hu, k, "l^ii"), SOURCE_FORMULA)
    result.put("z2_ii", _quotient_formula(t_h, t_hu, k, "z2^ii"), SOURCE_FORMULA)
    return result


def type_ii_shape_formula(l_h: int, l_hu: int, r: int) -> int:
    """ число слов типа (ii) для одной композиции из r частей: 2^r l_H (l_H^U)^(r-1) """
    return 2 ** r * l_h * l_hu ** (r - 1)


def power_bound(a: int, b: int, c: int, k: int):
    """power_bound верхняя оценка числа собственных t-степеней в L^2(d,k)

    Args:
        a (int): l_H^U(d)
        b (int): l_H(d)
        c (int): 2d
        k (int): бюджет t-длины

    Returns:
        точное выражение sympy; None, если a <= c или c <= 0
    """
    if a <= c or c <= 0:
        return None
    ratio = 2 * exact_sqrt(c) * (exact_sqrt(a) + exact_sqrt(c))
    return 2 * exact_sqrt(a) * b * c * ratio ** k / ((Integer(a) - c) * (ratio - 1))


def bounds(params: CensusParams, row: CensusRow) -> List[BoundCheck]:
    """bounds двусторонние оценки для n >= 6

    Args:
        params (CensusParams): параметры
        row (CensusRow): перечисленные значения

    Returns:
        List[BoundCheck]: оценки l_{H,S}(m), l_H(d) и нетривиальной части l_H^U(d)
    """
    n, d = params.n, params.d
    alpha, gamma = params.alpha, params.gamma
    checks = []
    for m in range(1, d + 1):
        checks.append(BoundCheck(f"l_HS({m})", Fraction(2 * (n - 1) * gamma ** (m - 1)),
                                 row[f"S{m}"], Fraction(2 * (n - 1) * alpha ** (m - 1))))
    checks.append(BoundCheck("l_H", 1 + Fraction(n - 1, n - 4) * (gamma ** d - 1),
                             row["l_H"], 1 + Fraction(n - 1, n - 3) * (alpha ** d - 1)))
    checks.append(BoundCheck("l_HU-1", Fraction(gamma ** d - 1), row["l_HU"] - 1,
                             Fraction(alpha ** d - 1)))
    return checks


class NormalFormCensus(LoggedComponent):
    """ перепись над C'_n для заданных (n, d, k) """
    log_prefix = "[ПЕРЕПИСЬ]"

    def __init__(self, params: CensusParams, mode: Optional[str] = None,
                 convention: str = CONVENTION_FORMULA, workers: int = 1):
        if params.d > MAX_CENSUS_D or params.k > MAX_CENSUS_K:
            raise BudgetExceeded(f"d <= {MAX_CENSUS_D}, k <= {MAX_CENSUS_K}")
        if convention not in (CONVENTION_FORMULA, CONVENTION_STRICT):
            raise BadParameter(f"неизвестное соглашение {convention}")
        if workers < 1:
            raise BadParameter("число вычислителей должно быть положительным")
        self._params = params
        self._mode = check_mode(params.n, mode)
        self._convention = convention
        self._workers = workers
        self._graph = cycle_with_chord(params.n)
        self._ctx = parabolic_context(self._graph, u_names(params.n))
        self._stats: Optional[Dict[str, int]] = None
        self._tables: Optional[Dict[str, list]] = None
        self._counters: Dict[bool, RootCounter] = {}
        self._row: Optional[CensusRow] = None

    @property
    def params(self) -> CensusParams:
        """ параметры переписи """
        return self._params

    @property
    def graph(self) -> CommutationGraph:
        """ граф C'_n """
        return self._graph

    @property
    def convention(self) -> str:
        """ соглашение о словах типа (ii) """
        return self._convention

    # --- перечисление L_H(d) ---

    def stats(self) -> Dict[str, int]:
        """stats счётчики по всем нормальным формам длины <= d

        Перечисление делится по первой букве; при workers > 1 части
        считаются в отдельных процессах.

        Returns:
            Dict[str, int]: суммы счётчиков first_letter_stats
        """
        if self._stats is None:
            n, d = self._params.n, self._params.d
            firsts = list(h_letters(n)) if d > 0 else []
            if self._workers > 1 and firsts:
                # pylint: disable=import-outside-toplevel
                from src.census_workers import WorkerPool
                parts = WorkerPool(self._workers).map_first_letters(n, d, self._mode, firsts)
            else:
                parts = [first_letter_stats(n, d, self._mode, first) for first in firsts]
            total = first_letter_stats(n, d, self._mode, None)
            for part in parts:
                for key, value in part.items():
                    total[key] = total.get(key, 0) + value
            if total["l_H"] > MAX_ENUMERATION:
                raise BudgetExceeded(f"l_H = {total['l_H']} больше {MAX_ENUMERATION}")
            self._stats = total
            self._log_message(LOG_INFO, f"перечислено l_H({d}) = {total['l_H']}")
        return self._stats

    def count_LH_by_length(self) -> List[int]:
        """ l_{H,S}(m) для m = 0..d """
        stats = self.stats()
        return [stats.get(f"S{m}", 0) for m in range(self._params.d + 1)]

    def enumerate_LH(self) -> CensusRow:
        """ l_H(d) и l_{H,S}(m); при n = 5 также число форм общего режима """
        stats = self.stats()
        row = CensusRow(self._params.n, self._params.d, self._params.k, self._convention)
        row.put("l_H", stats["l_H"], SOURCE_ENUMERATED)
        for m in range(1, self._params.d + 1):
            row.put(f"S{m}", stats.get(f"S{m}", 0), SOURCE_ENUMERATED)
        if self._params.n == 5:
            other = NF_MODE_GENERAL if self._mode == NF_MODE_SQUARE else NF_MODE_SQUARE
            count = sum(1 for _ in iterate_normal_forms(5, self._params.d, other))
            row.put(f"l_H_{other}", count, SOURCE_ENUMERATED)
        return row

    def enumerate_LHU(self) -> CensusRow:
        """ l_H^U(d), разбиение a/b/c по первой букве и e(d) """
        stats = self.stats()
        row = CensusRow(self._params.n, self._params.d, self._params.k, self._convention)
        for key in ("l_HU", "split_a", "split_b", "split_c", "e"):
            row.put(key, stats[key], SOURCE_ENUMERATED)
        return row

    def enumerate_LU(self) -> int:
        """ l_U(d) """
        return self.stats()["l_U"]

    def _pool_totals(self, thick: bool = False) -> Tuple[int, int]:
        stats = self.stats()
        l_h, l_hu = stats["l_H"], stats["l_HU"]
        if thick:
            l_h, l_hu = l_h - stats["e_prime"], l_hu - stats["e"]
        if self._convention == CONVENTION_STRICT:
            return l_h - stats["l_U"], l_hu - 1
        return l_h, l_hu

    def census_row(self) -> CensusRow:
        """census_row все счётчики для (n, d, k)

        Слои L^1 и L^2 пересчитываются обходом составных слов, если
        |L(d,k)| <= MAX_ENUMERATION; иначе берутся произведения размеров
        перечисленных таблиц кусков с источником FORMULA.

        Returns:
            CensusRow: значения и их источники
        """
        if self._row is not None:
            return self._row
        stats = self.stats()
        k = self._params.k
        row = self.enumerate_LH()
        for key, value in self.enumerate_LHU().values.items():
            row.put(key, value, SOURCE_ENUMERATED)
        row.put("l_U", stats["l_U"], SOURCE_ENUMERATED)
        row.put("e_prime", stats["e_prime"], SOURCE_ENUMERATED)
        row.put("t_H", stats["l_H"] - stats["e_prime"], SOURCE_ENUMERATED)
        row.put("t_HU", stats["l_HU"] - stats["e"], SOURCE_ENUMERATED)
        row.put("l_d0", stats["l_d0"], SOURCE_ENUMERATED)

        layers = {"l1": 2 * k * stats["l_U"],
                  "l2": self._type_ii_total(*self._pool_totals()),
                  "z2_ii": self._type_ii_total(*self._pool_totals(thick=True))}
        source = SOURCE_FORMULA
        if stats["l_d0"] + layers["l1"] + layers["l2"] <= MAX_ENUMERATION:
            layers = self._walk_layers()
            source = SOURCE_ENUMERATED
        else:
            self._log_message(LOG_INFO, "слои L^1, L^2 вне бюджета перебора, "
                                        "счётчики по размерам таблиц")
        for key, value in layers.items():
            row.put(key, value, source)
        row.put("l_dk", row["l_d0"] + row["l1"] + row["l2"], source)
        if self._convention == CONVENTION_STRICT:
            # расхождение строгого подсчёта с формулой
            formula = _quotient_formula(stats["l_H"], stats["l_HU"], k, "l^ii")
            row.put("l2_residual", row["l2"] - formula, source)
        self._row = row
        return row

    def _walk_layers(self) -> Dict[str, int]:
        """ число слов L^1, L^2 и слов L^2 со всеми толстыми кусками """
        counts = {"l1": 0, "l2": 0, "z2_ii": 0}
        for stratum, entries, _ in self._strata():
            if stratum == STRATUM_ONE:
                counts["l1"] += 1
            elif stratum == STRATUM_TWO:
                counts["l2"] += 1
                counts["z2_ii"] += all(entry[2] for entry in entries)
        return counts

    def _type_ii_total(self, first: int, other: int) -> int:
        return sum(first * other ** (len(alphas) - 1)
                   for alphas in signed_compositions(self._params.k))

    # --- таблицы кусков для классификации и плотности ---

    def _build_tables(self) -> Dict[str, list]:
        if self._tables is not None:
            return self._tables
        n, d = self._params.n, self._params.d
        g, u = self._graph, u_names(n)
        lh, lhu, lu, l0 = [], [], [], []
        for letters in iterate_normal_forms(n, d, self._mode):
            word = Word(letters, g)
            in_u = _in_u(n, letters)
            entry = (letters, coset_symbol(self._ctx, word),
                     in_u or in_maln(g, u, word), in_u)
            lh.append(entry)
            if in_u:
                lu.append(entry)
            if is_cyclically_minimal(g, word):
                l0.append(entry)
            if not any(a_index(x) in (1, n - 1) for x in left_divisors(g, word)):
                lhu.append(entry)
        if self._convention == CONVENTION_STRICT:
            first = [e for e in lh if not e[3]]
            other = [e for e in lhu if e[0]]
        else:
            first, other = lh, lhu
        self._tables = {"LH": lh, "LHU": lhu, "LU": lu, "L0": l0,
                        "first": first, "other": other}
        self._log_message(LOG_DEBUG, f"таблицы кусков: {len(lh)} / {len(lhu)}")
        return self._tables

    def _pool(self, entries: list, thick: bool) -> SymbolPool:
        pool = SymbolPool(trivial=0)
        for _, (name, orientation), is_thick, _ in entries:
            if thick and not is_thick:
                continue
            if not name:
                pool.trivial += 1
            else:
                key = (name, orientation)
                pool.symbols[key] = pool.symbols.get(key, 0) + 1
        return pool

    def _root_counter(self, thick: bool) -> RootCounter:
        if thick not in self._counters:
            tables = self._build_tables()
            self._counters[thick] = RootCounter(self._pool(tables["first"], thick),
                                                self._pool(tables["other"], thick))
        return self._counters[thick]

    def type_ii_roots(self, thick: bool = False) -> int:
        """ число слов L^2(d,k), σ-образ которых не собственная степень """
        counter = self._root_counter(thick)
        return sum(counter.roots(alphas) for alphas in signed_compositions(self._params.k))

    def type_ii_powers(self) -> int:
        """ число собственных t-степеней в L^2(d,k) """
        return self.census_row()["l2"] - self.type_ii_roots()

    # --- составные слова ---

    def _compose(self, stratum: str, chunks, exponents) -> ComposedWord:
        t_letter = self._graph.index(T_VERTEX) + 1
        letters: List[int] = []
        for i, chunk in enumerate(chunks):
            letters += chunk
            if i < len(exponents):
                sign = 1 if exponents[i] > 0 else -1
                letters += [sign * t_letter] * abs(exponents[i])
        return ComposedWord(stratum=stratum, chunks=tuple(tuple(c) for c in chunks),
                            exponents=tuple(exponents), word=Word(tuple(letters), self._graph))

    def iterate_composed(self) -> Iterator[ComposedWord]:
        """iterate_composed все элементы L(d,k) = L(d,0) ∪ L^1 ∪ L^2 по определению

        Raises:
            BudgetExceeded: |L(d,k)| больше MAX_ENUMERATION

        Yields:
            ComposedWord: составные слова
        """
        row = self.census_row()
        if row["l_dk"] > MAX_ENUMERATION:
            raise BudgetExceeded(f"l(d,k) = {row['l_dk']} больше {MAX_ENUMERATION}")
        for stratum, entries, exponents in self._strata():
            yield self._compose(stratum, [entry[0] for entry in entries], exponents)

    def _strata(self) -> Iterator[Tuple[str, tuple, Tuple[int, ...]]]:
        """ слои L(d,0), L^1, L^2: слой, записи таблиц кусков, показатели при t """
        tables = self._build_tables()
        k = self._params.k
        for entry in tables["L0"]:
            yield STRATUM_ZERO, (entry,), ()
        for entry in tables["LU"]:
            for length in range(1, k + 1):
                for sign in (1, -1):
                    yield STRATUM_ONE, (entry,), (sign * length,)
        for alphas in signed_compositions(k):
            positions = [tables["first"]] + [tables["other"]] * (len(alphas) - 1)
            for entries in product(*positions):
                yield STRATUM_TWO, entries, alphas

    def hnn_of(self, cw: ComposedWord) -> HnnWord:
        """ HNN-слово составного слова: куски как есть, без редукции """
        chunks, signs = [], []
        for i, chunk in enumerate(cw.chunks):
            chunks.append(chunk)
            if i < len(cw.exponents):
                sign = 1 if cw.exponents[i] > 0 else -1
                signs += [sign] * abs(cw.exponents[i])
                chunks += [()] * (abs(cw.exponents[i]) - 1)
        if len(chunks) == len(signs):
            chunks.append(())
        return HnnWord.from_chunks(self._graph, T_VERTEX, chunks, signs, reduce=False)

    def classify_Z(self, cw: ComposedWord) -> ZFlags:
        """classify_Z условия z1..z4 для составного слова

        Args:
            cw (ComposedWord): элемент L(d,k)

        Returns:
            ZFlags: z1 - номинальная t-длина >= 1; z2 - z1 и все куски толстые;
            z3 - слово не из L^1 и не из L_U; z4 - σ не собственная степень
        """
        h = self.hnn_of(cw)
        z1 = cw.stratum != STRATUM_ZERO
        z2 = z1 and is_t_thick(self._graph, T_VERTEX, h)
        if cw.stratum == STRATUM_ONE:
            z3 = False
        elif cw.stratum == STRATUM_ZERO:
            z3 = not _in_u(self._params.n, cw.chunks[0])
        else:
            z3 = True
        z4 = is_t_root(self._graph, T_VERTEX, h)
        return ZFlags(z1=z1, z2=z2, z3=z3, z4=z4)

    # --- плотность ---

    def exact_tallies(self) -> Dict[str, int]:
        """exact_tallies точные |Z_i ∩ L(d,k)| и |L_Y ∩ L(d,k)|

        Returns:
            Dict[str, int]: z1, z2, z3, z4, zY
        """
        row = self.census_row()
        k = self._params.k
        roots = self.type_ii_roots()
        return {
            "z1": row["l1"] + row["l2"],
            "z2": row["l1"] + row["z2_ii"],
            "z3": row["l_d0"] - row["l_U"] + row["l2"],
            "z4": row["l_d0"] + (2 * row["l_U"] if k >= 1 else 0) + roots,
            "zY": self.type_ii_roots(thick=True),
        }

    def _sample_composed(self, rng: random.Random, row: CensusRow,
                         shapes: List[Tuple[int, ...]], cumulative: List[int]) -> ComposedWord:
        tables = self._build_tables()
        x = rng.randrange(row["l_dk"])
        if x < row["l_d0"]:
            return self._compose(STRATUM_ZERO, [tables["L0"][x][0]], [])
        x -= row["l_d0"]
        if x < row["l1"]:
            k = self._params.k
            entry = tables["LU"][x // (2 * k)]
            rest = x % (2 * k)
            sign = 1 if rest % 2 == 0 else -1
            return self._compose(STRATUM_ONE, [entry[0]], [sign * (rest // 2 + 1)])
        x -= row["l1"]
        alphas = shapes[bisect_right(cumulative, x)]
        chunks = [rng.choice(tables["first"])[0]]
        chunks += [rng.choice(tables["other"])[0] for _ in range(len(alphas) - 1)]
        return self._compose(STRATUM_TWO, chunks, alphas)

    def density(self, mode: str = MODE_EXHAUSTIVE, samples: int = DEFAULT_SAMPLES,
                seed: Optional[int] = None) -> DensityRow:
        """density оценка доли L_Y в L(d,k)

        Args:
            mode (str): exhaustive - точный подсчёт, sample - равномерная выборка
            samples (int): объём выборки
            seed (Optional[int]): зерно генератора (обязательно для выборки)

        Raises:
            BadSeed: нет зерна или оно отрицательно
            BadParameter: неизвестный режим или объём выборки

        Returns:
            DensityRow: счётчики, доли и режим
        """
        row = self.census_row()
        counts = {key: row[key] for key in
                  ("l_H", "l_U", "l_HU", "e", "e_prime", "l_d0", "l1", "l2", "l_dk")}
        p = self._params
        if mode == MODE_EXHAUSTIVE:
            z = self.exact_tallies()
            return DensityRow(p.n, p.d, p.k, counts, z, Fraction(z["zY"], row["l_dk"]),
                              mode, seed)
        if mode != MODE_SAMPLE:
            raise BadParameter(f"неизвестный режим {mode}")
        if seed is None or seed < 0:
            raise BadSeed("для выборки нужно неотрицательное зерно --seed")
        if samples < 1:
            raise BadParameter("объём выборки должен быть положительным")

        rng = random.Random(seed)
        shapes = signed_compositions(p.k)
        first, other = self._pool_totals()
        cumulative, running = [], 0
        for alphas in shapes:
            running += first * other ** (len(alphas) - 1)
            cumulative.append(running)
        z = dict.fromkeys(("z1", "z2", "z3", "z4", "zY"), 0)
        for _ in range(samples):
            flags = self.classify_Z(self._sample_composed(rng, row, shapes, cumulative))
            for key, value in (("z1", flags.z1), ("z2", flags.z2), ("z3", flags.z3),
                               ("z4", flags.z4), ("zY", flags.zy)):
                z[key] += int(value)
        stderr = {}
        for key, hits in z.items():
            share = hits / samples
            stderr[key] = sqrt(share * (1 - share) / samples)
        self._log_message(LOG_INFO, f"выборка {samples} слов, зерно {seed}")
        return DensityRow(p.n, p.d, p.k, counts, z, Fraction(z["zY"], samples),
                          mode, seed, samples, stderr)


def verify_unique_normal_forms(n: int, max_len: int = UNIQUENESS_MAX_LEN,
                               mode: Optional[str] = None) -> UniquenessReport:
    """verify_unique_normal_forms у каждого элемента ровно одна нормальная форма

    Все свободно редуцированные слова длины <= max_len над H группируются
    по каноническому элементу; в каждой группе должна быть ровно одна
    нормальная форма, и её длина равна длине элемента.

    Args:
        n (int): параметр графа
        max_len (int): длина слов
        mode (Optional[str]): режим нормальных форм

    Returns:
        UniquenessReport: число элементов и нарушения
    """
    mode = check_mode(n, mode)
    g = cycle_with_chord(n)
    alphabet = h_letters(n)
    forms: Dict[Letters, List[Letters]] = {}
    stack: List[Letters] = [()]
    while stack:
        word = stack.pop()
        key = minimal_letters(g, word)
        bucket = forms.setdefault(key, [])
        if is_normal_form(n, word, mode):
            bucket.append(word)
        if len(word) < max_len:
            stack += [word + (x,) for x in alphabet if not word or word[-1] != -x]
    violations = [(key, found) for key, found in forms.items()
                  if len(found) != 1 or len(found[0]) != len(key)]
    return UniquenessReport(n=n, max_len=max_len, mode=mode,
                            elements=len(forms), violations=violations)


def density_row_to_dict(row: DensityRow) -> dict:
    """ строка плотности в формате столбцов CSV (и для JSON) """
    values = {"n": row.n, "d": row.d, "k": row.k,
              "l_H": row.counts["l_H"], "l_U": row.counts["l_U"],
              "l_HU": row.counts["l_HU"], "e": row.counts["e"],
              "e_prime": row.counts["e_prime"], "l1": row.counts["l1"],
              "l2": row.counts["l2"], "l_dk": row.counts["l_dk"],
              "rho_hat": f"{float(row.rho_hat):.10f}", "mode": row.mode,
              "seed": "" if row.seed is None else row.seed}
    values.update({key: row.z[key] for key in ("z1", "z2", "z3", "z4", "zY")})
    return {key: values[key] for key in CSV_COLUMNS}


def write_density_csv(rows: List[DensityRow], stream):
    """ запись строк плотности в CSV со столбцами CSV_COLUMNS """
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(density_row_to_dict(row))


def census_row_to_dict(row: CensusRow) -> dict:
    """ строка переписи для JSON: значения и источники """
    return {"n": row.n, "d": row.d, "k": row.k, "convention": row.convention,
            "values": dict(row.values), "sources": dict(row.sources)}


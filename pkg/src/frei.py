""" модуль проверки условий теорем о свободе для одноопределяющих
фактор-групп G = G(Γ)/N(s^n) """
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from src.component import LoggedComponent
from src.config import DECIDABLE, INDEPENDENT_CONJUGACY_MIN_N, \
    JUSTIFY_AMALGAM, JUSTIFY_CENTRAL, JUSTIFY_CLIQUE, \
    JUSTIFY_CLIQUE_CONVERSE, JUSTIFY_INDEPENDENT, JUSTIFY_MAIN, JUSTIFY_NONE, \
    JUSTIFY_RESTRICTED, LOG_DEBUG, LOG_ERROR, LOG_INFO, MAIN_EMBEDS_MIN_N, \
    MAIN_WORD_PROBLEM_MIN_N, STATUS_DOES_NOT_EMBED, STATUS_EMBEDS, \
    STATUS_UNKNOWN, UNKNOWN
from src.errors import BadParameter, ConflictingVerdicts, \
    NotCyclicallyMinimal, PcGroupError, TNotInSupport
from src.graph import CommutationGraph, add_edge, central_vertices, \
    induced, is_clique, is_cycle, is_independent, is_synchronised, link, \
    star, synchronised_split
from src.hnn import end_with_t, hnn_factorize, is_cyclically_t_thick, is_t_root, \
    is_t_thick
from src.report_types import AmalgamRecord, CliqueWitness, Conclusion, \
    FreiReport, TheoremRecord
from src.word_types import NormalForm, Word
from src.words import WordLike, format_letters, format_word, generator, \
    is_cyclically_minimal, minimal_form, power, support

# имена условий основной теоремы
HYP_LK_CLIQUE = "lk_clique"
HYP_T_THICK = "t_thick"
HYP_NOT_IN_STAR = "not_in_star"
HYP_T_ROOT = "t_root"


class FreiChecker(LoggedComponent):
    """ проверка условий теорем и сборка вердиктов о подгруппах Магнуса """
    log_prefix = "[СВОБОДА]"

    def __init__(self, g: CommutationGraph):
        self._graph = g

    @property
    def graph(self) -> CommutationGraph:
        """ граф коммутирования """
        return self._graph

    def _canonical_minimal(self, s: WordLike) -> NormalForm:
        g = self._graph
        nf = minimal_form(g, s)
        if not nf.letters:
            raise BadParameter("соотношение s должно быть нетривиальным")
        if not is_cyclically_minimal(g, nf):
            self._log_message(LOG_ERROR, f"{format_word(nf)} не циклически минимально")
            raise NotCyclicallyMinimal(f"{format_word(nf)} не циклически минимально")
        return nf

    def _complement(self, removed: Iterable[str]) -> Tuple[str, ...]:
        removed = set(removed)
        return tuple(v for v in self._graph.vertices if v not in removed)

    def check_theorem_main(self, s: WordLike, t: str, n: int) -> TheoremRecord:
        """check_theorem_main условия основной теоремы для кандидата t

        Args:
            s (WordLike): соотношение
            t (str): кандидат из supp(s)
            n (int): показатель

        Raises:
            NotCyclicallyMinimal: s не циклически минимально
            TNotInSupport: t не входит в supp(s)

        Returns:
            TheoremRecord: флаги условий и вердикт
        """
        g = self._graph
        nf = self._canonical_minimal(s)
        supp = support(g, nf)
        if t not in supp:
            raise TNotInSupport(f"{t} не входит в supp({format_word(nf)})")

        lk_clique = is_clique(g, link(g, {t}))
        h = end_with_t(g, hnn_factorize(g, t, nf))
        t_thick = is_t_thick(g, t, h) if lk_clique else None
        cyclic_thick = is_cyclically_t_thick(g, t, h) if lk_clique else None
        not_in_star = not supp <= star(g, t)
        t_root = is_t_root(g, t, h)

        failed = [name for name, value in ((HYP_LK_CLIQUE, lk_clique),
                                           (HYP_T_THICK, t_thick),
                                           (HYP_NOT_IN_STAR, not_in_star),
                                           (HYP_T_ROOT, t_root)) if value is False]
        verdict = STATUS_EMBEDS if not failed and n >= MAIN_EMBEDS_MIN_N else STATUS_UNKNOWN
        self._log_message(LOG_DEBUG, f"t={t}: нарушены {failed}, вердикт {verdict}")
        return TheoremRecord(t=t, lk_clique=lk_clique, t_thick=t_thick,
                             cyclically_t_thick=cyclic_thick,
                             not_in_star=not_in_star, t_root=t_root,
                             verdict=verdict, failed=failed)

    def _clique_witness(self, nf: NormalForm, supp: FrozenSet[str],
                        t: str, n: int) -> Optional[CliqueWitness]:
        g = self._graph
        outside = supp | link(g, supp)
        for x in g.ordered(g.neighbours(t) - outside):
            for a in g.ordered(supp):
                if a != t and not g.has_edge(x, a):
                    t_letter = g.index(t) + 1
                    rest = [y for y in power(nf, n).letters if abs(y) != t_letter]
                    relation = f"[{x}, {format_letters(g, rest)}]"
                    return CliqueWitness(t=t, x=x, a=a, relation=relation)
        return None

    def check_amalgam(self, s: WordLike, n: int) -> Tuple[AmalgamRecord, List[Conclusion], Dict]:
        """check_amalgam разложение в amalgam при синхронизированном носителе
        и следствия для клики и независимого носителя

        Args:
            s (WordLike): соотношение
            n (int): показатель

        Raises:
            NotCyclicallyMinimal: s не циклически минимально

        Returns:
            Tuple[AmalgamRecord, List[Conclusion], Dict]: запись, заключения,
            порядок s и разрешимость проблем равенства и сопряжённости
        """
        g = self._graph
        nf = self._canonical_minimal(s)
        supp = support(g, nf)
        synchronised = is_synchronised(g, supp)
        clique = is_clique(g, supp)
        independent = is_independent(g, supp)
        record = AmalgamRecord(synchronised=synchronised, supp_clique=clique,
                               supp_independent=independent)
        conclusions: List[Conclusion] = []
        facts = {"order_of_s": None, "word_problem": UNKNOWN, "conjugacy_problem": UNKNOWN}

        if synchronised:
            y, lk, rest = synchronised_split(g, supp)
            record.decomposition = (tuple(g.ordered(y)), tuple(g.ordered(lk)),
                                    tuple(g.ordered(rest)))
            complement = self._complement(supp)
            if complement:
                conclusions.append(Conclusion(complement, STATUS_EMBEDS, JUSTIFY_AMALGAM))
            if clique or independent:
                tag = JUSTIFY_CLIQUE if clique else JUSTIFY_INDEPENDENT
                for t in g.ordered(supp):
                    conclusions.append(Conclusion(self._complement({t}), STATUS_EMBEDS, tag))
                facts["order_of_s"] = n
                facts["word_problem"] = DECIDABLE
                if clique or n >= INDEPENDENT_CONJUGACY_MIN_N:
                    facts["conjugacy_problem"] = DECIDABLE
        elif clique:
            for t in g.ordered(supp):
                witness = self._clique_witness(nf, supp, t, n)
                if witness is not None:
                    record.witnesses.append(witness)
                    conclusions.append(Conclusion(self._complement({t}),
                                                  STATUS_DOES_NOT_EMBED,
                                                  JUSTIFY_CLIQUE_CONVERSE))
        return record, conclusions, facts

    def _restricted_conclusions(self, nf: NormalForm, n: int) -> List[Conclusion]:
        g = self._graph
        if len(g) < 5 or not is_cycle(g):
            return []
        conclusions = []
        for t in g.ordered(support(g, nf)):
            lk = link(g, {t})
            if is_clique(g, lk):
                continue
            u, v = g.ordered(lk)
            chorded = FreiChecker(add_edge(g, u, v))
            chorded.log_level = self.log_level
            try:
                record = chorded.check_theorem_main(nf, t, n)
            except PcGroupError:
                continue
            if record.verdict == STATUS_EMBEDS:
                conclusions.append(Conclusion(self._complement({t, u, v}),
                                              STATUS_EMBEDS, JUSTIFY_RESTRICTED))
        return conclusions

    def _central_conclusions(self, nf: NormalForm, n: int) -> List[Conclusion]:
        g = self._graph
        centre = central_vertices(g)
        supp = support(g, nf)
        if not centre or centre == frozenset(g.vertices) or supp & centre:
            return []
        reduced_graph = induced(g, frozenset(g.vertices) - centre)
        reduced = FreiChecker(reduced_graph)
        reduced.log_level = self.log_level
        # перенумерация букв на подграфе
        letters = [(reduced_graph.index(g.name(generator(x))) + 1) * (1 if x > 0 else -1)
                   for x in nf.letters]
        conclusions = []
        for t in reduced_graph.ordered(supp):
            try:
                record = reduced.check_theorem_main(
                    minimal_form(reduced_graph, Word(tuple(letters), reduced_graph)), t, n)
            except PcGroupError:
                continue
            if record.verdict == STATUS_EMBEDS:
                conclusions.append(Conclusion(self._complement({t}),
                                              STATUS_EMBEDS, JUSTIFY_CENTRAL))
        return conclusions

    def magnus_verdict(self, s: WordLike, n: int) -> FreiReport:
        """magnus_verdict полный отчёт: основная теорема для каждого t из supp(s),
        теорема об amalgam и следствия, дополнительные редукции

        Args:
            s (WordLike): соотношение
            n (int): показатель, n >= 1

        Raises:
            BadParameter: n < 1 или s тривиально
            ConflictingVerdicts: противоречащие заключения

        Returns:
            FreiReport: отчёт
        """
        if n < 1:
            raise BadParameter(f"показатель n должен быть положительным, получено {n}")
        g = self._graph
        nf = self._canonical_minimal(s)
        self._log_message(LOG_INFO, f"проверка s={format_word(nf)}, n={n}")

        per_t = [self.check_theorem_main(nf, t, n) for t in g.ordered(support(g, nf))]
        amalgam, conclusions, facts = self.check_amalgam(nf, n)

        main = [Conclusion(self._complement({r.t}), STATUS_EMBEDS, JUSTIFY_MAIN)
                for r in per_t if r.verdict == STATUS_EMBEDS]
        if main:
            facts["order_of_s"] = n
            if n >= MAIN_WORD_PROBLEM_MIN_N:
                facts["word_problem"] = DECIDABLE
        conclusions = main + conclusions
        conclusions += self._restricted_conclusions(nf, n)
        conclusions += self._central_conclusions(nf, n)
        decided = {frozenset(c.subset) for c in conclusions}
        for r in per_t:
            subset = self._complement({r.t})
            if frozenset(subset) not in decided:
                conclusions.append(Conclusion(subset, STATUS_UNKNOWN, JUSTIFY_NONE))

        _check_conflicts(conclusions)
        return FreiReport(s=nf, n=n, per_t=per_t, amalgam=amalgam,
                          conclusions=conclusions, order_of_s=facts["order_of_s"],
                          word_problem=facts["word_problem"],
                          conjugacy_problem=facts["conjugacy_problem"])


def _check_conflicts(conclusions: List[Conclusion]):
    statuses: Dict[FrozenSet[str], set] = {}
    for c in conclusions:
        statuses.setdefault(frozenset(c.subset), set()).add(c.status)
    for subset, found in statuses.items():
        if {STATUS_EMBEDS, STATUS_DOES_NOT_EMBED} <= found:
            raise ConflictingVerdicts(f"для <{sorted(subset)}> получены оба вердикта")


def check_theorem_main(g: CommutationGraph, s: WordLike, t: str, n: int) -> TheoremRecord:
    """ условия основной теоремы для кандидата t """
    return FreiChecker(g).check_theorem_main(s, t, n)


def check_amalgam(g: CommutationGraph, s: WordLike, n: int):
    """ условия теоремы об amalgam и следствий """
    return FreiChecker(g).check_amalgam(s, n)


def magnus_verdict(g: CommutationGraph, s: WordLike, n: int) -> FreiReport:
    """ полный отчёт о подгруппах Магнуса """
    return FreiChecker(g).magnus_verdict(s, n)


def report_to_dict(report: FreiReport) -> dict:
    """report_to_dict представление отчёта для JSON

    Args:
        report (FreiReport): отчёт

    Returns:
        dict: ключи s, n, per_t, amalgam, conclusions, order_of_s,
        word_problem, conjugacy_problem
    """
    amalgam = report.amalgam
    decomposition = None
    if amalgam.decomposition is not None:
        y, lk, rest = amalgam.decomposition
        decomposition = {"Y": list(y), "lk": list(lk), "X": list(rest)}
    return {
        "s": format_word(report.s),
        "n": report.n,
        "per_t": [{
            "t": r.t,
            "lk_clique": r.lk_clique,
            "t_thick": r.t_thick,
            "cyclically_t_thick": r.cyclically_t_thick,
            "not_in_star": r.not_in_star,
            "t_root": r.t_root,
            "verdict": r.verdict,
            "failed": list(r.failed),
        } for r in report.per_t],
        "amalgam": {
            "synchronised": amalgam.synchronised,
            "supp_clique": amalgam.supp_clique,
            "supp_independent": amalgam.supp_independent,
            "decomposition": decomposition,
            "witnesses": [{"t": w.t, "x": w.x, "a": w.a, "relation": w.relation}
                          for w in amalgam.witnesses],
        },
        "conclusions": [{"subset": list(c.subset), "status": c.status,
                         "justification": c.justification}
                        for c in report.conclusions],
        "order_of_s": report.order_of_s if report.order_of_s is not None else UNKNOWN,
        "word_problem": report.word_problem,
        "conjugacy_problem": report.conjugacy_problem,
    }


def format_report(report: FreiReport) -> str:
    """ читаемое текстовое представление отчёта """
    lines = [f"s = {format_word(report.s)}, n = {report.n}"]
    for r in report.per_t:
        thick = "-" if r.t_thick is None else r.t_thick
        lines.append(f"  t={r.t}: lk_clique={r.lk_clique} t_thick={thick} "
                     f"not_in_star={r.not_in_star} t_root={r.t_root} -> {r.verdict}")
    a = report.amalgam
    lines.append(f"  supp(s): synchronised={a.synchronised} clique={a.supp_clique} "
                 f"independent={a.supp_independent}")
    for w in a.witnesses:
        lines.append(f"  свидетель: t={w.t} x={w.x} a={w.a} соотношение {w.relation}")
    for c in report.conclusions:
        lines.append(f"  <{', '.join(c.subset)}>: {c.status} ({c.justification})")
    order = report.order_of_s if report.order_of_s is not None else UNKNOWN
    lines.append(f"  порядок s: {order}; проблема равенства: {report.word_problem}; "
                 f"проблема сопряжённости: {report.conjugacy_problem}")
    return "\n".join(lines)

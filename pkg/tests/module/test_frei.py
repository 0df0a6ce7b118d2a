""" тесты проверки условий теорем о свободе """
import json
from pathlib import Path

import pytest

from src.config import DECIDABLE, JUSTIFY_AMALGAM, JUSTIFY_CENTRAL, JUSTIFY_CLIQUE, \
    JUSTIFY_CLIQUE_CONVERSE, JUSTIFY_INDEPENDENT, JUSTIFY_MAIN, JUSTIFY_RESTRICTED, \
    STATUS_DOES_NOT_EMBED, STATUS_EMBEDS, STATUS_UNKNOWN, UNKNOWN
from src.errors import BadParameter, NotCyclicallyMinimal, TNotInSupport
from src.frei import HYP_NOT_IN_STAR, HYP_T_ROOT, HYP_T_THICK, check_amalgam, \
    check_theorem_main, format_report, magnus_verdict, report_to_dict
from src.graph import cycle_graph, relabel
from src.word_types import Word
from src.words import conjugate_test, format_word, parse_word

FIXTURES = Path(__file__).parent.parent / "fixtures"


def _conclusions(report):
    return {(c.subset, c.status, c.justification) for c in report.conclusions}


def _golden(name: str) -> dict:
    with open(FIXTURES / name, encoding="utf-8") as file:
        return json.load(file)


def test_main_theorem_chord(c5p, word):
    """ C'_5, s = a2 a3 t: все условия выполнены для t """
    record = check_theorem_main(c5p, word(c5p, "a2 a3 t"), "t", 3)
    assert record.hypotheses_hold
    assert record.verdict == STATUS_EMBEDS


def test_main_theorem_path(p4, word):
    """ путь t-a-b-c, s = c t: <a, b, c> вкладывается """
    report = magnus_verdict(p4, word(p4, "c t"), 3)
    assert (("a", "b", "c"), STATUS_EMBEDS, JUSTIFY_MAIN) in _conclusions(report)
    assert report.order_of_s == 3


def test_not_thick(p3, word):
    """ путь a-b-c, s = a b c, t = c: s не c-толстое """
    record = check_theorem_main(p3, word(p3, "a b c"), "c", 3)
    assert record.t_thick is False
    assert HYP_T_THICK in record.failed
    assert record.verdict == STATUS_UNKNOWN


def test_small_exponent(c5p, word):
    """ при n < 3 основная теорема не даёт вложения """
    record = check_theorem_main(c5p, word(c5p, "a2 a3 t"), "t", 2)
    assert record.hypotheses_hold
    assert record.verdict == STATUS_UNKNOWN


def test_golden_reports(p4, c5p, word):
    """ сверка полных отчётов с эталонами """
    assert report_to_dict(magnus_verdict(p4, word(p4, "c t"), 3)) == _golden("p4_ct.json")
    assert report_to_dict(magnus_verdict(c5p, word(c5p, "a2 a3 t"), 3)) == \
        _golden("c5p_a2a3t.json")


def test_word_problem_threshold(c5p, word):
    """ при n >= 4 проблема равенства разрешима """
    report = magnus_verdict(c5p, word(c5p, "a2 a3 t"), 4)
    assert report.word_problem == DECIDABLE
    assert report.order_of_s == 4
    assert "порядок s: 4" in format_report(report)


def test_synchronised_clique(c4p, word):
    """ квадрат с диагональю, s = a c: синхронизированная клика """
    record, conclusions, facts = check_amalgam(c4p, word(c4p, "a c"), 2)
    assert record.synchronised and record.supp_clique
    assert record.decomposition == (("a", "c"), ("b", "d"), ())
    found = {(c.subset, c.justification) for c in conclusions}
    assert (("b", "c", "d"), JUSTIFY_CLIQUE) in found
    assert (("a", "b", "d"), JUSTIFY_CLIQUE) in found
    assert (("b", "d"), JUSTIFY_AMALGAM) in found
    assert facts == {"order_of_s": 2, "word_problem": DECIDABLE,
                     "conjugacy_problem": DECIDABLE}


def test_synchronised_independent(c4, word):
    """ квадрат, s = b d: синхронизированное независимое множество """
    report = magnus_verdict(c4, word(c4, "b d"), 1)
    assert (("a", "c", "d"), STATUS_EMBEDS, JUSTIFY_INDEPENDENT) in _conclusions(report)
    assert report.order_of_s == 1
    assert report.word_problem == DECIDABLE
    assert report.conjugacy_problem == UNKNOWN
    assert magnus_verdict(c4, word(c4, "b d"), 2).conjugacy_problem == DECIDABLE


def test_clique_converse(clique_witness_graph, word):
    """ несинхронизированная клика: свидетели невложения """
    g = clique_witness_graph
    report = magnus_verdict(g, word(g, "a t"), 2)
    assert not report.amalgam.synchronised
    assert report.amalgam.supp_clique
    witnesses = {(w.t, w.x, w.a) for w in report.amalgam.witnesses}
    assert witnesses == {("a", "b", "t"), ("t", "x", "a")}
    conclusions = _conclusions(report)
    assert (("b", "t", "x"), STATUS_DOES_NOT_EMBED, JUSTIFY_CLIQUE_CONVERSE) in conclusions
    assert (("a", "b", "x"), STATUS_DOES_NOT_EMBED, JUSTIFY_CLIQUE_CONVERSE) in conclusions
    relations = {w.x: w.relation for w in report.amalgam.witnesses}
    assert relations["x"] == "[x, a^2]"


def test_single_letter(p4, word):
    """ s = t: условие s вне <st(t)> нарушено, носитель - клика """
    report = magnus_verdict(p4, word(p4, "t"), 5)
    assert HYP_NOT_IN_STAR in report.per_t[0].failed
    assert report.per_t[0].verdict == STATUS_UNKNOWN
    assert (("a", "b", "c"), STATUS_EMBEDS, JUSTIFY_CLIQUE) in _conclusions(report)
    assert report.order_of_s == 5


def test_free_group(free2, word):
    """ свободная группа: пустое звено допускается """
    report = magnus_verdict(free2, word(free2, "a b"), 3)
    assert all(r.verdict == STATUS_EMBEDS for r in report.per_t)
    conclusions = _conclusions(report)
    assert (("b",), STATUS_EMBEDS, JUSTIFY_MAIN) in conclusions
    assert (("a",), STATUS_EMBEDS, JUSTIFY_MAIN) in conclusions


def test_restricted_on_cycle(word):
    """ на цикле C_5 хорда в звене t даёт вложение меньшей подгруппы """
    g = cycle_graph(5)
    report = magnus_verdict(g, word(g, "a2 a3 t"), 3)
    conclusions = _conclusions(report)
    assert (("a2", "a3"), STATUS_EMBEDS, JUSTIFY_RESTRICTED) in conclusions
    assert (("a1", "a2", "a3", "a4"), STATUS_UNKNOWN, "HYPOTHESES_FAIL") in conclusions


def test_central_reduction(graphs, word):
    """ звезда K_1,3: центр отбрасывается, если s его не содержит """
    g = graphs["K1,3"]
    report = magnus_verdict(g, word(g, "a b"), 3)
    assert (("b", "c", "t"), STATUS_EMBEDS, JUSTIFY_CENTRAL) in _conclusions(report)
    assert all(r.verdict == STATUS_UNKNOWN for r in report.per_t)


@pytest.mark.parametrize("text,n,error", [
    ("1", 3, BadParameter),
    ("a b a^-1", 3, NotCyclicallyMinimal),
    ("a b", 0, BadParameter),
])
def test_errors(free2, word, text, n, error):
    """ проверка отказов """
    with pytest.raises(error):
        magnus_verdict(free2, word(free2, text), n)


def test_t_not_in_support(p4, word):
    """ кандидат t вне носителя """
    with pytest.raises(TNotInSupport):
        check_theorem_main(p4, word(p4, "c t"), "a", 3)


def test_main_theorem_conjugates(c5p, word):
    """ σ(s) = ([a2^2 a3^2] t)^2: s не t-корень ни в одном циклическом сдвиге """
    s = word(c5p, "a2^2 a3^2 t a1 a2^2 a3^2 t")
    other = word(c5p, "a2 a3 t a1 a2^2 a3^2 t a2 a3")
    assert conjugate_test(c5p, s, other)
    for base in (s, other):
        letters = base.letters
        for i in range(len(letters)):
            rotated = Word(letters[i:] + letters[:i], c5p)
            record = check_theorem_main(c5p, rotated, "t", 3)
            assert record.t_root is False
            assert record.failed == [HYP_T_ROOT]
            assert record.verdict == STATUS_UNKNOWN


def _verdicts(report):
    per_t = {r.t: (r.verdict, tuple(sorted(r.failed))) for r in report.per_t}
    conclusions = {(frozenset(c.subset), c.status, c.justification)
                   for c in report.conclusions}
    return per_t, conclusions, report.order_of_s, report.word_problem, \
        report.conjugacy_problem


@pytest.mark.parametrize("name,text,n", [
    ("P4", "c t", 3),
    ("C'5", "a2 a3 t", 3),
    ("C'5", "a2^2 a3^2 t a1 a2^2 a3^2 t", 3),
    ("C4'", "a c", 2),
    ("C4", "b d", 2),
    ("K1,3", "a b", 3),
    ("N2", "a b", 3),
])
def test_verdicts_under_relabelling(graphs, word, name, text, n):
    """ вердикты не зависят от порядка объявления вершин """
    g = graphs[name]
    s = word(g, text)
    expected = _verdicts(magnus_verdict(g, s, n))
    for order in (list(reversed(g.vertices)), list(g.vertices[1:]) + [g.vertices[0]]):
        h = relabel(g, order)
        assert _verdicts(magnus_verdict(h, parse_word(format_word(s), h), n)) == expected


def test_clique_converse_under_relabelling(clique_witness_graph, word):
    """ свидетели невложения не зависят от порядка вершин """
    g = clique_witness_graph
    h = relabel(g, ["x", "t", "b", "a"])
    report = magnus_verdict(h, parse_word("a t", h), 2)
    assert {(w.t, w.x, w.a) for w in report.amalgam.witnesses} == \
        {("a", "b", "t"), ("t", "x", "a")}
    assert _verdicts(report) == _verdicts(magnus_verdict(g, word(g, "a t"), 2))

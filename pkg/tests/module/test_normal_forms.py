""" тесты нормальных форм подгруппы H графа C'_n """
import pytest

from src.census import verify_unique_normal_forms
from src.config import NF_MODE_GENERAL, NF_MODE_SQUARE, UNIQUENESS_MAX_LEN
from src.errors import BadAlphabet, BadParameter, BudgetExceeded
from src.graph import cycle_with_chord
from src.normal_forms import a_letter, check_mode, default_mode, h_letters, \
    is_normal_form, iterate_lu, iterate_normal_forms, u_letters
from src.words import minimal_letters, parse_word


def _letters(n, text):
    return parse_word(text, cycle_with_chord(n)).letters


def test_modes():
    """ проверка выбора режима """
    assert default_mode(5) == NF_MODE_SQUARE
    assert default_mode(6) == NF_MODE_GENERAL
    assert check_mode(5, NF_MODE_GENERAL) == NF_MODE_GENERAL
    with pytest.raises(BadParameter):
        check_mode(6, NF_MODE_SQUARE)
    with pytest.raises(BadParameter):
        check_mode(5, "lex")


def test_letters():
    """ проверка нумерации букв """
    assert a_letter(1) == 2 and a_letter(4, -1) == -5
    assert h_letters(5) == (2, -2, 3, -3, 4, -4, 5, -5)
    assert set(u_letters(6)) == {2, -2, 6, -6}


def test_general_rule():
    """ запрещённые подслова a_{i+1} a_{i-1}^b a_i """
    assert not is_normal_form(6, _letters(6, "a3 a1 a2"))
    assert is_normal_form(6, _letters(6, "a1 a2 a3"))
    # при b = 0 запрещено и a2 a1
    assert not is_normal_form(6, _letters(6, "a2 a1 a3"))
    # индексы по модулю n-1: a1 a5 запрещено, a5 a1 допустимо
    assert not is_normal_form(6, _letters(6, "a1 a5"))
    assert is_normal_form(6, _letters(6, "a5 a1"))
    assert not is_normal_form(6, _letters(6, "a2 a2^-1"))
    assert is_normal_form(6, ())


def test_square_rule():
    """ формы w1·w2 при n = 5 """
    assert is_normal_form(5, _letters(5, "a2 a4 a1"))
    assert not is_normal_form(5, _letters(5, "a1 a2"))
    assert is_normal_form(5, _letters(5, "a4^2 a2^-1 a3 a1"))
    assert is_normal_form(5, _letters(5, "a2 a1"), NF_MODE_GENERAL) is False


def test_bad_alphabet():
    """ буква t не из алфавита H """
    with pytest.raises(BadAlphabet):
        is_normal_form(5, _letters(5, "t a2"))


def test_iterate_counts():
    """ число форм длины <= d """
    assert sum(1 for _ in iterate_normal_forms(5, 1)) == 9
    assert sum(1 for _ in iterate_normal_forms(5, 3)) == 217
    assert sum(1 for _ in iterate_normal_forms(5, 3, NF_MODE_GENERAL)) == 217
    assert sum(1 for _ in iterate_normal_forms(6, 0)) == 1
    assert sum(1 for _ in iterate_normal_forms(7, 2)) == 121
    assert all(w[0] == 3 for w in iterate_normal_forms(5, 2, prefix=(3,)))


def test_iterate_budget(monkeypatch):
    """ перебор ограничен """
    monkeypatch.setattr("src.normal_forms.MAX_ENUMERATION", 10)
    with pytest.raises(BudgetExceeded):
        list(iterate_normal_forms(5, 2))


def test_lu():
    """ элементы a_{n-1}^p a1^q """
    assert [len(list(iterate_lu(5, d))) for d in range(4)] == [1, 5, 13, 25]
    for letters in iterate_lu(5, 2):
        assert is_normal_form(5, letters)


@pytest.mark.parametrize("n,mode", [
    (5, NF_MODE_SQUARE),
    (5, NF_MODE_GENERAL),
    (6, NF_MODE_GENERAL),
    pytest.param(7, NF_MODE_GENERAL, marks=pytest.mark.slow),
])
def test_unique_normal_forms(n, mode):
    """ у каждого элемента длины <= 5 ровно одна нормальная форма, и она геодезическая """
    report = verify_unique_normal_forms(n, UNIQUENESS_MAX_LEN, mode)
    assert report.max_len == 5
    assert report.violations == []
    assert report.elements == sum(1 for _ in iterate_normal_forms(n, UNIQUENESS_MAX_LEN, mode))


def test_square_and_general_agree():
    """ при n = 5 оба режима выбирают по форме для одних и тех же элементов """
    square = {minimal_letters(cycle_with_chord(5), w)
              for w in iterate_normal_forms(5, UNIQUENESS_MAX_LEN, NF_MODE_SQUARE)}
    general = {minimal_letters(cycle_with_chord(5), w)
               for w in iterate_normal_forms(5, UNIQUENESS_MAX_LEN, NF_MODE_GENERAL)}
    assert square == general
    assert len(square) == 1 + 8 * 5 * 3 ** 4

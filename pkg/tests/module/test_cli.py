""" тесты интерфейса командной строки """
import json

import pytest

from src.cli import run

P4_TEXT = "vertices a b c t\nedge t a\nedge a b\nedge b c\n"


@pytest.fixture(name="p4_file")
def fixture_p4_file(tmp_path):
    """ файл графа t-a-b-c """
    path = tmp_path / "p4.graph"
    path.write_text(P4_TEXT, encoding="utf-8")
    return str(path)


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


@pytest.mark.parametrize("argv,expected", [
    (["normalize", "--word", "t a t^-1"], "a"),
    (["equal", "--word", "a b", "--word2", "b a"], "true"),
    (["equal", "--word", "c t", "--word2", "t c"], "false"),
    (["conjugate", "--word", "c t", "--word2", "t c"], "true"),
    (["support", "--word", "t c t^-1"], "c t"),
])
def test_word_commands(capsys, p4_file, argv, expected):
    """ команды над словами """
    code, out, _ = _run(capsys, argv + ["--graph", p4_file])
    assert code == 0
    assert out == expected


def test_hnn_and_sigma(capsys, p4_file):
    """ HNN-разложение и σ-образ """
    code, out, _ = _run(capsys, ["hnn", "--graph", p4_file, "--word", "c t c", "--t", "t"])
    assert code == 0
    assert out.endswith("t-длина: 1")
    code, out, _ = _run(capsys, ["sigma", "--graph", p4_file, "--word", "c t", "--t", "c"])
    assert code == 0
    assert out.endswith("t-корень: true")
    code, out, _ = _run(capsys, ["sigma", "--graph", p4_file, "--word", "c t",
                                 "--t", "c", "--json"])
    assert json.loads(out)["t_root"] is True


def test_check(capsys, p4_file):
    """ проверка условий для s = c t """
    code, out, _ = _run(capsys, ["check", "--graph", p4_file, "--word", "c t",
                                 "--n", "3", "--json"])
    assert code == 0
    report = json.loads(out)
    assert [r["t"] for r in report["per_t"]] == ["c", "t"]
    assert len(report["conclusions"]) == 2

    code, out, _ = _run(capsys, ["check", "--graph", p4_file, "--word", "c t",
                                 "--n", "3", "--t", "c", "--json"])
    report = json.loads(out)
    assert [r["t"] for r in report["per_t"]] == ["c"]
    assert [c["subset"] for c in report["conclusions"]] == [["a", "b", "t"]]

    code, out, _ = _run(capsys, ["check", "--graph", p4_file, "--word", "c t", "--n", "3"])
    assert code == 0
    assert "порядок s: 3" in out


def test_domain_errors(capsys, p4_file):
    """ ошибки предметной области дают код 1 """
    code, _, err = _run(capsys, ["check", "--graph", p4_file, "--word", "c t",
                                 "--n", "3", "--t", "a"])
    assert code == 1
    assert err.startswith("ошибка:")
    code, _, _ = _run(capsys, ["normalize", "--graph", p4_file, "--word", "z"])
    assert code == 1
    code, _, _ = _run(capsys, ["normalize", "--graph", p4_file + ".missing", "--word", "a"])
    assert code == 1
    code, _, _ = _run(capsys, ["census", "--n", "4"])
    assert code == 1
    code, _, _ = _run(capsys, ["density", "--n", "5", "--k", "1", "--mode", "sample"])
    assert code == 1


@pytest.mark.parametrize("argv", [
    [],
    ["rewrite"],
    ["normalize", "--word", "a"],
    ["equal", "--graph", "g", "--word", "a"],
    ["hnn", "--graph", "g", "--word", "a"],
    ["check", "--graph", "g", "--word", "a"],
    ["census"],
    ["census", "--n", "5", "--workers", "0"],
])
def test_usage_errors(capsys, argv):
    """ ошибки использования дают код 2 """
    code, _, _ = _run(capsys, argv)
    assert code == 2


def test_census(capsys):
    """ перепись C'_5 при d = 1, k = 1 """
    code, out, _ = _run(capsys, ["census", "--n", "5", "--d", "1", "--k", "1"])
    assert code == 0
    assert "l_H = 9 (формула 9, совпадает)" in out
    assert "l_dk = 37" in out
    assert "собственные t-степени: 0" in out
    assert "РАСХОДИТСЯ" not in out

    code, out, _ = _run(capsys, ["census", "--n", "5", "--d", "1", "--k", "1", "--json"])
    data = json.loads(out)
    assert data["enumerated"]["values"]["l_dk"] == 37
    assert data["formula"]["values"]["l2"] == 18
    assert data["powers"]["count"] == 0
    assert data["bounds"] == []


def test_census_bounds(capsys):
    """ при n >= 6 печатаются оценки """
    code, out, _ = _run(capsys, ["census", "--n", "7", "--d", "2"])
    assert code == 0
    assert "48 <= l_HU-1 = 76 <= 80: да" in out


def test_density(capsys, tmp_path):
    """ плотность в CSV, JSON и в файл """
    code, out, _ = _run(capsys, ["density", "--n", "5", "--d", "1", "--k", "1"])
    assert code == 0
    assert out.splitlines()[1] == \
        "5,1,1,9,5,5,4,4,10,18,37,28,20,22,37,10,0.2702702703,exhaustive,"

    code, out, _ = _run(capsys, ["density", "--n", "5", "--d", "1", "--k", "1",
                                 "--mode", "sample", "--samples", "50", "--seed", "3",
                                 "--json"])
    data = json.loads(out)
    assert data["mode"] == "sample" and data["seed"] == 3
    assert set(data["stderr"]) == {"z1", "z2", "z3", "z4", "zY"}

    target = tmp_path / "density.csv"
    code, out, _ = _run(capsys, ["density", "--n", "5", "--d", "1", "--k", "1",
                                 "--out", str(target)])
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8").startswith("n,d,k,")


def test_out_unwritable(capsys, tmp_path):
    """ недоступный файл вывода даёт код 1 """
    target = tmp_path / "missing" / "density.csv"
    code, out, err = _run(capsys, ["density", "--n", "5", "--d", "1", "--k", "1",
                                   "--out", str(target)])
    assert code == 1 and out == ""
    assert err.startswith("ошибка:")

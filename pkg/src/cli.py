""" интерфейс командной строки: python -m src.cli <команда> [флаги] """
import argparse
import io
import json
import sys
from typing import List, Optional

from src.census import NormalFormCensus, bounds, census_row_to_dict, closed_formulas, \
    density_row_to_dict, power_bound, write_density_csv
from src.census_types import CensusParams
from src.config import CONVENTION_FORMULA, CONVENTION_STRICT, DEFAULT_SAMPLES, \
    MODE_EXHAUSTIVE, MODE_SAMPLE, NF_MODE_GENERAL, NF_MODE_SQUARE
from src.errors import PcGroupError, TNotInSupport
from src.frei import format_report, magnus_verdict, report_to_dict
from src.graph_parser import GraphFileParser
from src.hnn import format_hnn, format_sigma, hnn_factorize, is_t_root, sigma, t_length
from src.words import conjugate_test, equal, format_word, minimal_form, parse_word, support

GRAPH_COMMANDS = ("normalize", "equal", "conjugate", "support", "hnn", "sigma", "check")
TWO_WORD_COMMANDS = ("equal", "conjugate")
T_COMMANDS = ("hnn", "sigma")


def build_parser() -> argparse.ArgumentParser:
    """ разбор аргументов командной строки """
    parser = argparse.ArgumentParser(
        prog="python -m src.cli",
        description="вычисления в частично коммутативных группах")
    parser.add_argument("command", choices=GRAPH_COMMANDS + ("census", "density"),
                        help="выполняемая команда")
    parser.add_argument("--graph", help="файл графа коммутирования")
    parser.add_argument("--word", help="слово, например \"a b^-1 t^2\"")
    parser.add_argument("--word2", help="второе слово для equal и conjugate")
    parser.add_argument("--t", help="выделенный образующий")
    parser.add_argument("--n", type=int,
                        help="показатель соотношения (check) или параметр графа C'_n")
    parser.add_argument("--d", type=int, default=1, help="бюджет длины кусков")
    parser.add_argument("--k", type=int, default=0, help="бюджет t-длины")
    parser.add_argument("--mode", choices=(MODE_EXHAUSTIVE, MODE_SAMPLE),
                        default=MODE_EXHAUSTIVE, help="режим оценки плотности")
    parser.add_argument("--nf-mode", choices=(NF_MODE_SQUARE, NF_MODE_GENERAL),
                        help="нормальные формы подгруппы H (по умолчанию square при n=5)")
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                        help="объём выборки")
    parser.add_argument("--seed", type=int, help="зерно генератора для выборки")
    parser.add_argument("--convention", choices=(CONVENTION_FORMULA, CONVENTION_STRICT),
                        default=CONVENTION_FORMULA, help="подсчёт слов типа (ii)")
    parser.add_argument("--workers", type=int, default=1,
                        help="число процессов для перечисления")
    parser.add_argument("--json", action="store_true", help="вывод в JSON")
    parser.add_argument("--out", help="файл для вывода вместо стандартного потока")
    return parser


def _check_usage(parser: argparse.ArgumentParser, args: argparse.Namespace):
    if args.command in GRAPH_COMMANDS:
        if args.graph is None or args.word is None:
            parser.error(f"команде {args.command} нужны --graph и --word")
        if args.command in TWO_WORD_COMMANDS and args.word2 is None:
            parser.error(f"команде {args.command} нужен --word2")
        if args.command in T_COMMANDS and args.t is None:
            parser.error(f"команде {args.command} нужен --t")
        if args.command == "check" and args.n is None:
            parser.error("команде check нужен --n")
    elif args.n is None:
        parser.error(f"команде {args.command} нужен --n")
    if args.workers < 1:
        parser.error("--workers должен быть положительным")


def _dump(data) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def _word_commands(args: argparse.Namespace) -> str:
    g = GraphFileParser(args.graph).parse()
    w = parse_word(args.word, g)
    if args.command == "normalize":
        result = format_word(minimal_form(g, w))
        return _dump({"word": result}) if args.json else result
    if args.command in TWO_WORD_COMMANDS:
        w2 = parse_word(args.word2, g)
        test = equal if args.command == "equal" else conjugate_test
        value = test(g, w, w2)
        return _dump({args.command: value}) if args.json else str(value).lower()
    if args.command == "support":
        names = g.ordered(support(g, w))
        return _dump({"support": names}) if args.json else " ".join(names)
    if args.command == "check":
        report = magnus_verdict(g, w, args.n)
        if args.t is not None:
            if args.t not in {r.t for r in report.per_t}:
                raise TNotInSupport(f"{args.t} не входит в supp(s)")
            report.per_t = [r for r in report.per_t if r.t == args.t]
            report.conclusions = [c for c in report.conclusions if args.t not in c.subset]
        return _dump(report_to_dict(report)) if args.json else format_report(report)

    h = hnn_factorize(g, args.t, w)
    if args.command == "hnn":
        if args.json:
            return _dump({"chunks": [format_word(c) for c in h.chunks],
                          "signs": list(h.signs), "t_length": t_length(h)})
        return f"{format_hnn(h)}\nt-длина: {t_length(h)}"
    image = format_sigma(sigma(g, args.t, h))
    root = is_t_root(g, args.t, h)
    if args.json:
        return _dump({"sigma": image, "t_root": root})
    return f"{image}\nt-корень: {str(root).lower()}"


def _census(args: argparse.Namespace) -> str:
    params = CensusParams(args.n, args.d, args.k)
    census = NormalFormCensus(params, args.nf_mode, args.convention, args.workers)
    row = census.census_row()
    formula = closed_formulas(params, row)
    checks = bounds(params, row) if params.n >= 6 else []
    powers = census.type_ii_powers()
    estimate = power_bound(row["l_HU"], row["l_H"], 2 * params.d, params.k)
    estimate_value = None if estimate is None else float(estimate)
    if args.json:
        return _dump({
            "enumerated": census_row_to_dict(row),
            "formula": census_row_to_dict(formula),
            "bounds": [{"name": b.name, "lower": str(b.lower), "value": b.value,
                        "upper": str(b.upper), "holds": b.holds} for b in checks],
            "powers": {"count": powers, "bound": estimate_value},
        })
    lines = [f"n = {params.n}, d = {params.d}, k = {params.k}, соглашение {row.convention}"]
    for name, value in row.values.items():
        line = f"  {name} = {value}"
        if name in formula:
            mark = "совпадает" if formula[name] == value else "РАСХОДИТСЯ"
            line += f" (формула {formula[name]}, {mark})"
        lines.append(line)
    for b in checks:
        lines.append(f"  {b.lower} <= {b.name} = {b.value} <= {b.upper}: "
                     f"{'да' if b.holds else 'НЕТ'}")
    bound_text = "нет" if estimate_value is None else f"{estimate_value:.6g}"
    lines.append(f"  собственные t-степени: {powers}, оценка сверху: {bound_text}")
    return "\n".join(lines)


def _density(args: argparse.Namespace) -> str:
    params = CensusParams(args.n, args.d, args.k)
    census = NormalFormCensus(params, args.nf_mode, args.convention, args.workers)
    row = census.density(args.mode, args.samples, args.seed)
    if args.json:
        data = density_row_to_dict(row)
        data["stderr"] = row.stderr
        return _dump(data)
    stream = io.StringIO()
    write_density_csv([row], stream)
    return stream.getvalue().rstrip("\n")


def run(argv: Optional[List[str]] = None) -> int:
    """run выполнение одной команды

    Args:
        argv (Optional[List[str]]): аргументы без имени программы

    Returns:
        int: 0 - успех, 1 - ошибка предметной области, 2 - ошибка использования
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_usage(parser, args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        if args.command == "census":
            output = _census(args)
        elif args.command == "density":
            output = _density(args)
        else:
            output = _word_commands(args)
    except PcGroupError as e:
        print(f"ошибка: {e}", file=sys.stderr)
        return 1

    if args.out is not None:
        try:
            with open(args.out, 'w', encoding='utf-8') as file:
                file.write(output + "\n")
        except OSError as e:
            print(f"ошибка: {e}", file=sys.stderr)
            return 1
    else:
        print(output)
    return 0


if __name__ == "__main__":
    sys.exit(run())

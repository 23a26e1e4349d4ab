import csv
import io

import pytest

from pointideal.bench import coefficient_of_variation, records_to_csv, run_bench, summarize, format_summary
from pointideal.cli import main
from pointideal.io import ParseError, format_variety, parse_variety
from pointideal.rng import random_variety


def test_parse_variety():
    v = parse_variety("p 3\nn 2\nm 2\n0 0\n1 1")
    assert v.p == 3 and v.n_vars == 2 and v.points == ((0, 0), (1, 1))


@pytest.mark.parametrize("text", [
    "p 3\nn 2\nm 2\n0 3\n1 1\n",      # out of range
    "p 4\nn 2\nm 1\n0 0\n",           # not prime
    "p 3\nn 2\nm 2\n0 0 1\n1 1\n",    # row length
    "p 3\nn 2\nm 3\n0 0\n1 1\n",      # row count
    "p 3\nn 2\nm 0\n",                # empty
    "q 3\nn 2\nm 1\n0 0\n",           # header
    "p 3\nn 2\nm 1\n0 x\n",           # non-integer
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_variety(text)


def test_duplicates_strict_and_lenient():
    text = "p 3\nn 2\nm 3\n0 0\n1 1\n0 0\n"
    with pytest.raises(ParseError):
        parse_variety(text, strict=True)
    with pytest.warns(UserWarning):
        v = parse_variety(text)
    assert v.m == 2


def test_format_round_trip():
    v = random_variety(5, 3, 4, 9)
    assert parse_variety(format_variety(v), strict=True) == v


@pytest.fixture
def vfile(tmp_path):
    path = tmp_path / "v.txt"
    path.write_text("p 3\nn 2\nm 2\n0 0\n1 1\n")
    return path


def test_gb_both_algorithms_agree(vfile, capsys):
    assert main(["gb", str(vfile)]) == 0
    ess = capsys.readouterr().out
    assert main(["gb", str(vfile), "--algorithm", "bma"]) == 0
    bma = capsys.readouterr().out
    assert ess == "x2^2 + 2*x2\nx1 + 2*x2\nSM: 1, x2\nEV: x2\n"
    assert bma == "x2^2 + 2*x2\nx1 + 2*x2\nSM: 1, x2\n"


def test_gb_single_point(tmp_path, capsys):
    path = tmp_path / "s.txt"
    path.write_text("p 5\nn 3\nm 1\n1 2 3\n")
    assert main(["gb", str(path)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert sorted(out[:3]) == ["x1 + 4", "x2 + 3", "x3 + 2"]
    assert out[3:] == ["SM: 1", "EV:"]


def test_gb_with_order_flags(vfile, capsys):
    assert main(["gb", str(vfile), "--order", "grevlex", "--varorder", "2,1"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "EV: x1"


def test_bad_file_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("p 3\nn 2\nm 1\n0 7\n")
    assert main(["gb", str(path)]) == 2
    assert "out of range" in capsys.readouterr().err
    assert main(["gb", str(tmp_path / "missing.txt")]) == 2
    assert main(["gb", str(path), "--order", "nope"]) == 2


def test_verify_command(vfile, capsys):
    assert main(["verify", str(vfile), "--oracle"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == [f"{name}: PASS" for name in
                     ("check_vanishing", "check_reduced", "check_sm", "check_rel_shape",
                      "check_result_equivalence")]


def test_gen_command(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "--p", "3", "--n", "4", "--m", "5", "--seed", "1", "--out", str(out)]) == 0
    assert parse_variety(out.read_text(), strict=True) == random_variety(3, 4, 5, 1)
    assert main(["gen", "--p", "2", "--n", "2", "--m", "5"]) == 2


def test_bench_row_count_and_verify():
    records = run_bench([3], [100], [5], ["lex"], seeds=10, verify=True)
    rows = list(csv.reader(io.StringIO(records_to_csv(records))))
    assert rows[0] == ["algorithm", "p", "n", "m", "order", "seed", "micros"]
    assert len(rows) == 21
    assert {r[0] for r in rows[1:]} == {"essbm", "bma"}
    assert all(int(r[6]) >= 0 for r in rows[1:])
    keys = [tuple(r[:6]) for r in rows[1:]]
    assert len(set(keys)) == len(keys)


def test_bench_grid_row_count(tmp_path):
    records = run_bench([2, 3], [6], [3, 4], ["lex", "grevlex"], seeds=2)
    assert len(records) == 2 * (2 * 1 * 2 * 2) * 2


def test_bench_infeasible_cell(capsys):
    with pytest.raises(ValueError):
        run_bench([2], [2], [5], ["lex"], seeds=1)
    assert main(["bench", "--p", "2", "--n", "2", "--m", "5", "--seeds", "1"]) == 2


def test_summary_cov():
    records = run_bench([3], [10], [3], ["lex"], seeds=1)
    rows = summarize(records)
    assert all(r["cov"] is None for r in rows)
    assert ",NA" in format_summary(rows)
    assert coefficient_of_variation([2.0, 2.0, 2.0]) == 0
    assert coefficient_of_variation([1.0, 3.0]) == pytest.approx(2 ** 0.5 / 2)


def test_bench_command_writes_files(tmp_path):
    out, summary = tmp_path / "b.csv", tmp_path / "s.csv"
    assert main(["bench", "--n", "8", "--m", "3", "--seeds", "2", "--order", "lex",
                 "--order", "grevlex", "--verify", "--out", str(out), "--summary", str(summary)]) == 0
    assert len(out.read_text().splitlines()) == 1 + 2 * 2 * 2
    assert len(summary.read_text().splitlines()) == 1 + 4


def test_bench_parallel_jobs():
    records = run_bench([3], [8], [3, 4], ["lex"], seeds=2, jobs=2)
    assert [(r.algorithm, r.m, r.seed) for r in records] == [
        (a, m, s) for m in (3, 4) for s in (0, 1) for a in ("essbm", "bma")]

import csv
import io
import json

import pytest

from rulerwrap import cli, solvers
from rulerwrap.core import SolveOutcome, WrapWitness, Partition


@pytest.fixture
def write(tmp_path):
    def _write(text, name="inst.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


@pytest.mark.parametrize("algorithm", ["grid", "quartic", "brute"])
def test_solve_feasible(capsys, write, algorithm):
    path = write("6 3 3\n1 1 2 2 3 3\n")
    code, out = run(capsys, "solve", "--input", path, "--algorithm", algorithm, "--json")
    rec = json.loads(out.out)
    assert code == 0
    assert rec["feasible"] and rec["algorithm"] == algorithm and not rec["rotated"]
    assert len(rec["breakpoints"]) == len(rec["side_sums"]) + 1
    assert set(rec["counters"]) == {"pairs", "points", "queries"}
    assert sum(rec["side_sums"]) == 12


@pytest.mark.parametrize("algorithm", ["grid", "quartic", "brute"])
def test_solve_infeasible(capsys, write, algorithm):
    path = write('{"lengths":[3,1,1],"height":1,"width":3}', "i.json")
    code, out = run(capsys, "solve", "--input", path, "--algorithm", algorithm, "--json")
    rec = json.loads(out.out)
    assert code == 1
    assert rec["feasible"] is False and "breakpoints" not in rec


def test_solve_rotated_with_svg(capsys, write, tmp_path):
    path = write("1 5 4\n5\n")
    svg = tmp_path / "out.svg"
    code, out = run(capsys, "solve", "--input", path, "--allow-rotate", "--svg", str(svg))
    assert code == 0
    assert "rotated: yes" in out.out
    assert svg.read_text().startswith("<svg")


def test_parse_error_exit_code(capsys, write):
    code, out = run(capsys, "solve", "--input", write("1 0 0\n0\n"))
    assert code == 2 and "non-positive" in out.err


def test_brute_budget_exit_code(capsys, write):
    path = write("25 5 5\n" + " ".join(["1"] * 25) + "\n")
    code, out = run(capsys, "solve", "--input", path, "--algorithm", "brute")
    assert code == 2 and "limit" in out.err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["solve"])
    assert info.value.code == 2


def test_verification_failure(capsys, write, monkeypatch):
    bogus = SolveOutcome(True, WrapWitness(Partition([0, 1, 3]), (3, 2)))
    monkeypatch.setattr(cli, "solve", lambda *a, **k: bogus)
    code, out = run(capsys, "solve", "--input", write("3 1 3\n3 1 1\n"))
    assert code == 3 and "verification" in out.err


@pytest.mark.parametrize("lengths, expected", [("1 2", [[0, 3], [1, 2]]), ("1", [[0, 1]])])
@pytest.mark.parametrize("algorithm", ["grid", "quartic", "brute"])
def test_frontier(capsys, write, lengths, expected, algorithm):
    n = len(lengths.split())
    code, out = run(capsys, "frontier", "--input", write(f"{n} 0 0\n{lengths}\n"), "--algorithm", algorithm)
    assert code == 0 and json.loads(out.out) == expected


def test_frontier_algorithms_agree(capsys, write):
    code, out = run(capsys, "gen", "--n", "10", "--seed", "4")
    path = write(out.out, "g.json")
    results = {a: run(capsys, "frontier", "--input", path, "--algorithm", a)[1].out for a in solvers.ALGORITHMS}
    assert len(set(results.values())) == 1
    pairs = json.loads(results["grid"])
    assert pairs == sorted(pairs)


def test_gen_text_round_trip(capsys, write):
    code, out = run(capsys, "gen", "--n", "12", "--max-len", "6", "--seed", "2", "--format", "text")
    assert code == 0
    code, again = run(capsys, "gen", "--n", "12", "--max-len", "6", "--seed", "2", "--format", "text")
    assert out.out == again.out
    code, _ = run(capsys, "verify", "--input", write(out.out), "--breakpoints", "0,0,12")
    assert code in (0, 1)


def test_verify(capsys, write):
    path = write("6 3 3\n1 1 2 2 3 3\n")
    code, out = run(capsys, "verify", "--input", path, "--breakpoints", "0,1,2,3,4,5,6")
    assert code == 0 and out.out.startswith("valid")
    code, out = run(capsys, "verify", "--input", path, "--breakpoints", "0,4,6")
    assert code == 1 and "violated: s1=6 > h=3" in out.out
    code, out = run(capsys, "verify", "--input", path, "--breakpoints", "0,4,4,6")
    assert code == 2


def test_bench_csv(capsys):
    code, out = run(capsys, "bench", "--sizes", "8,30", "--reps", "2", "--algorithms", "grid,brute,quartic")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.out)))
    assert [(r["algorithm"], r["n"], r["rep"]) for r in rows] == [
        ("grid", "8", "0"), ("grid", "8", "1"), ("grid", "30", "0"), ("grid", "30", "1"),
        ("brute", "8", "0"), ("brute", "8", "1"), ("brute", "30", "0"),
        ("quartic", "8", "0"), ("quartic", "8", "1"), ("quartic", "30", "0"), ("quartic", "30", "1"),
    ]
    assert "limit" in rows[6]["error"]
    grid30 = rows[2]
    assert int(grid30["queries"]) == 30 * 29 // 2
    # same instance stream for every algorithm
    assert rows[0]["feasible"] == rows[4]["feasible"] == rows[7]["feasible"]

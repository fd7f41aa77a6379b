import csv
import io
import json
import subprocess
import sys

import pytest

from znperfect.cli import VERIFY_COLUMNS, main, read_n_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize(
    "n, expected", [("2310", "2 * 3 * 5 * 7 * 11"), ("1", "1"), ("12", "2^2 * 3")]
)
def test_factor(capsys, n, expected):
    code, out, _ = run(capsys, "factor", n)
    assert code == 0 and out.strip() == expected


def test_factor_zero_rejected(capsys):
    code, _, err = run(capsys, "factor", "0")
    assert code == 2 and "positive" in err


def test_graph_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "12", "--format", "dimacs")
    assert code == 0 and "p edge 4 4" in out.splitlines()

    code, out, _ = run(capsys, "graph", "7", "--format", "json")
    doc = json.loads(out)
    assert doc["vertices"] == [] and doc["edges"] == []

    code, out, _ = run(capsys, "graph", "30", "--format", "dot")
    assert out.count(" -- ") == 9
    assert sum(1 for ln in out.splitlines() if ln.strip().endswith(";") and "--" not in ln) == 6

    target = tmp_path / "g.dimacs"
    assert main(["graph", "12", "--format", "dimacs", "--complement", "-o", str(target)]) == 0
    assert "p edge 4 2" in target.read_text().splitlines()


def test_graph_unknown_format():
    with pytest.raises(SystemExit) as exc:
        main(["graph", "12", "--format", "gml"])
    assert exc.value.code == 2


def test_perfect(capsys):
    code, out, _ = run(capsys, "perfect", "210")
    assert code == 0 and json.loads(out)["verdict"] == "perfect"

    code, out, _ = run(capsys, "perfect", "2310")
    doc = json.loads(out)
    assert code == 1 and doc["verdict"] == "not_perfect"
    assert doc["certificate"]["cycle"] == [30, 105, 385, 154, 66]

    code, out, _ = run(capsys, "perfect", "7")
    assert code == 0 and json.loads(out)["verdict"] == "degenerate_perfect"


def test_perfect_all_lengths_and_search_witness(capsys):
    code, out, _ = run(capsys, "perfect", "1680", "--all-lengths")
    doc = json.loads(out)
    assert code == 0 and doc["all_lengths"]["long_cycle_found"] is False

    code, out, _ = run(capsys, "perfect", "2310", "--witness", "search")
    doc = json.loads(out)
    assert code == 1 and doc["certificate"]["length"] == 5 and doc["witness_method"] == "search"


def test_perfect_infeasible(capsys):
    code, _, err = run(capsys, "perfect", "27720", "--witness", "search")
    assert code == 2 and "search-infeasible" in err
    code, _, _ = run(capsys, "perfect", "30030", "--witness", "search", "--cap", "10")
    assert code == 2


def test_hole(capsys):
    code, out, _ = run(capsys, "hole", "2310", "--method", "paper")
    assert code == 0 and json.loads(out)["cycle"] == [30, 105, 385, 154, 66]
    code, out, _ = run(capsys, "hole", "2310")
    assert code == 0 and json.loads(out)["length"] == 5
    code, out, _ = run(capsys, "hole", "210")
    assert code == 1 and json.loads(out)["hole"] is None
    code, _, err = run(capsys, "hole", "210", "--method", "paper")
    assert code == 2 and "5 distinct primes" in err


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "12")
    doc = json.loads(out)
    assert code == 0 and doc["omega"] == doc["chi"] == 3


def test_verify_max_100(capsys):
    code, out, err = run(capsys, "verify", "--max", "100")
    rows = csv_rows(out)
    assert code == 0
    assert list(rows[0].keys()) == VERIFY_COLUMNS
    assert [int(r["n"]) for r in rows] == list(range(1, 101))
    assert all(r["verdict"] in ("perfect", "degenerate_perfect") for r in rows)
    assert "0 violations" in err


def test_verify_max_1(capsys):
    code, out, _ = run(capsys, "verify", "--max", "1")
    rows = csv_rows(out)
    assert code == 0 and len(rows) == 1 and rows[0]["verdict"] == "degenerate_perfect"


def test_verify_n_list(capsys, tmp_path):
    lst = tmp_path / "ns.txt"
    lst.write_text("{2310, 30030}\n")
    code, out, _ = run(capsys, "verify", "--n-list", str(lst))
    rows = csv_rows(out)
    assert code == 0
    assert [(r["n"], r["verdict"], r["hole_length"]) for r in rows] == [
        ("2310", "not_perfect", "5"),
        ("30030", "not_perfect", "5"),
    ]
    assert all(r["omega"] == r["chi"] for r in rows)


def test_verify_counts_infeasible(capsys, tmp_path):
    lst = tmp_path / "ns.txt"
    lst.write_text("12 27720\n")
    code, out, err = run(capsys, "verify", "--n-list", str(lst))
    rows = csv_rows(out)
    assert code == 2
    assert rows[1]["verdict"] == "infeasible" and "1 infeasible" in err


def strip_elapsed(text):
    return [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in csv_rows(text)]


def test_verify_independent_of_jobs(capsys):
    _, serial, _ = run(capsys, "verify", "--max", "300")
    _, parallel, _ = run(capsys, "verify", "--max", "300", "--jobs", "3")
    assert strip_elapsed(serial) == strip_elapsed(parallel)


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "--max", "12", "--table")
    assert code == 0 and out.splitlines()[0].split() == VERIFY_COLUMNS


def test_read_n_list_formats(tmp_path):
    p = tmp_path / "l"
    p.write_text("# header\n2310, 30030\n[12 18]\n")
    assert read_n_list(str(p)) == [2310, 30030, 12, 18]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "znperfect", "perfect", "2310"], capture_output=True, text=True
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["verdict"] == "not_perfect"

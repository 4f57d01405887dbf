import json
import subprocess
import sys

import pytest

from qflag.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_query_examples(capsys):
    assert run(capsys, "coeff", "213", "213", "321")[:2] == (0, "q1\n")
    assert run(capsys, "gw", "213", "213", "321", "1", "0")[:2] == (0, "1\n")
    assert run(capsys, "product", "123", "213")[:2] == (0, "s[213]\n")
    assert run(capsys, "product", "213", "213")[:2] == (0, "q1*s[123] + s[312]\n")


def test_reduce_example(capsys):
    code, out, _ = run(capsys, "reduce", "213", "132", "132")
    assert code == 0
    assert out.strip() == "Classical, factor 1, value 1, (a,b,c)=(0,0,0)"
    code, out, _ = run(capsys, "reduce", "213", "132", "132", "--format", "json")
    assert json.loads(out) == {"kind": "Classical", "shift": [0, 0, 0], "min_length": 3,
                               "monomial": "1", "value": 1}


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "transition", "3", "--dot")
    assert code == 0
    assert out.count("->") == 15
    assert len({line.split('"')[1] for line in out.splitlines() if "->" in line}) == 6


def test_graph_text_and_csv(capsys):
    code, out, _ = run(capsys, "graph", "bruhat", "3")
    assert code == 0 and len(out.splitlines()) == 8
    code, out, _ = run(capsys, "graph", "bruhat", "3", "--format", "csv")
    assert out.splitlines()[0] == "from,to,label" and len(out.splitlines()) == 9


@pytest.mark.parametrize("kind", ["cyclic", "classical", "qqq", "reduce", "stability", "graph", "axioms"])
def test_verify_kinds_pass(capsys, kind):
    code, out, _ = run(capsys, "verify", kind, "3")
    assert code == 0, out
    assert "FAILED" not in out


def test_verify_cyclic_counts(capsys):
    code, out, _ = run(capsys, "verify", "cyclic", "3", "--format", "json")
    reports = json.loads(out)
    assert code == 0
    assert reports[0]["check"] == "cyclic" and reports[0]["tested"] == 216
    assert reports[0]["failed"] == 0 and reports[0]["profile"] == "transposed"


def test_verify_classical_4(capsys):
    code, out, _ = run(capsys, "verify", "classical", "4", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["check"] == "classical_limit" and report["failed"] == 0


def test_verify_graph_5(capsys):
    code, out, _ = run(capsys, "verify", "graph", "5")
    assert code == 0 and "graph n=5" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "coeff", "213", "2a3", "321")
    assert code == 2 and "position 1" in err
    assert run(capsys, "coeff", "213", "2134", "321")[0] == 2
    assert run(capsys, "gw", "213", "213", "321", "1")[0] == 2
    assert run(capsys, "gw", "213", "213", "321", "-1", "0")[0] == 2
    assert run(capsys, "verify", "cyclic", "6")[0] == 2
    assert run(capsys, "coeff", "2134567", "2134567", "7654321")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_csv_coeff(capsys):
    code, out, _ = run(capsys, "coeff", "213", "213", "321", "--format", "csv")
    assert code == 0 and out.splitlines() == ["exps,coeff", "1 0,1"]


def test_cache_round_trip_is_byte_identical(capsys, tmp_path):
    path = tmp_path / "t3.json.gz"
    assert run(capsys, "table", "3", "--cache", str(path))[0] == 0
    assert path.exists()
    queries = [("coeff", "213", "213", "321"), ("product", "321", "321"), ("gw", "321", "321", "321", "1", "1")]
    for fmt in ("text", "json"):
        for q in queries:
            fresh = run(capsys, *q, "--format", fmt)
            cached = run(capsys, *q, "--format", fmt, "--cache", str(path))
            assert fresh == cached


def test_env_var_sets_cache_directory(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QFLAG_CACHE_DIR", str(tmp_path))
    assert run(capsys, "table", "3")[0] == 0
    assert (tmp_path / "qflag-table-n3.json").exists()
    assert run(capsys, "coeff", "213", "213", "321")[1] == "q1\n"


def test_corrupt_cache_is_a_usage_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format_version": 99, "n": 3, "entries": []}))
    assert run(capsys, "coeff", "213", "213", "321", "--cache", str(path))[0] == 2


def test_deterministic_across_jobs(capsys, tmp_path):
    a = run(capsys, "table", "4", "--format", "json")
    b = run(capsys, "table", "4", "--format", "json", "--jobs", "2")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qflag", "coeff", "213", "213", "321"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "q1\n"

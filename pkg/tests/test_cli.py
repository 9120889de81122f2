import pytest

from bitpath.cli import main

G0_TEXT = "5\n1 2\n1 4\n2 3\n2 4\n3 4\n4 5\n5 1\n"


@pytest.fixture
def g0_file(tmp_path):
    p = tmp_path / "g0.txt"
    p.write_text(G0_TEXT)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_query_example(capsys, g0_file):
    code, out, _ = run(capsys, "query", "--graph", g0_file, "--from", "2", "--to", "5", "--one-based")
    assert code == 0
    assert out.splitlines() == ["2->4->5", "length 2"]


def test_query_flat_matches(capsys, g0_file):
    code, out, _ = run(capsys, "query", "--graph", g0_file, "--from", "2", "--to", "5",
                       "--one-based", "--flat")
    assert code == 0 and out.splitlines() == ["2->4->5", "length 2"]


def test_query_unreachable(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("3\n0 1\n")
    code, out, err = run(capsys, "query", "--graph", str(p), "--from", "1", "--to", "0")
    assert code == 1 and out == ""
    assert "there is no path between 1 and 0" in err


def test_build_then_query(capsys, g0_file, tmp_path):
    hfile = str(tmp_path / "h.json")
    code, _, err = run(capsys, "build", "--graph", g0_file, "--out", hfile, "--one-based")
    assert code == 0 and "levels 4" in err
    code, out, _ = run(capsys, "query", "--hierarchy", hfile, "--from", "2", "--to", "5", "--one-based")
    assert code == 0 and out.splitlines() == ["2->4->5", "length 2"]


def test_all_paths_and_truncation(capsys, tmp_path):
    p = tmp_path / "d.txt"
    p.write_text("4\n0 1\n0 2\n1 3\n2 3\n")
    code, out, _ = run(capsys, "query", "--graph", str(p), "--from", "0", "--to", "3", "--all-paths", "5")
    assert out.splitlines() == ["0->1->3", "0->2->3", "length 2"]
    code, out, err = run(capsys, "query", "--graph", str(p), "--from", "0", "--to", "3")
    assert out.splitlines() == ["0->1->3", "length 2"] and "truncated" in err


def test_weighted_query(capsys, tmp_path):
    p = tmp_path / "w.txt"
    p.write_text("3\n0 1 5/2\n0 2 1/2\n2 1 1/2\n")
    code, out, _ = run(capsys, "query", "--graph", str(p), "--from", "0", "--to", "1")
    assert code == 0 and out.splitlines() == ["0->2->1", "length 2", "cost 1"]


def test_enumerate(capsys, tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("2\n0 1\n1 0\n")
    code, out, _ = run(capsys, "enumerate", "--graph", str(p), "--from", "0", "--to", "0", "--length", "4")
    assert code == 0 and out.splitlines() == ["0->1->0->1->0"]
    code, _, _ = run(capsys, "enumerate", "--graph", str(p), "--from", "0", "--to", "0", "--length", "3")
    assert code == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--random", "20", "--max-v", "12", "--seed", "1")
    assert code == 0 and out.startswith("instances 20 mismatches 0")
    code, out, _ = run(capsys, "verify", "--random", "20", "--max-v", "12", "--weighted")
    assert code == 0


def test_bench_small(capsys, tmp_path):
    csv_path = tmp_path / "b.csv"
    code, out, _ = run(capsys, "bench", "--gen", "modmul", "--n", "200", "400", "--k", "3",
                       "--queries", "5", "--verify", "5", "--csv", str(csv_path))
    assert code == 0
    assert "oracle checks: 5 passed, 0 failed" in out and "scaling" in out
    rows = csv_path.read_text().splitlines()
    assert rows[0].startswith("n,source,target") and len(rows) == 11


def test_parse_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("5\n1 9\n")
    code, _, err = run(capsys, "query", "--graph", str(p), "--from", "1", "--to", "2", "--one-based")
    assert code == 2 and "line 2" in err


def test_usage_errors(capsys, g0_file):
    assert run(capsys, "query", "--graph", g0_file, "--from", "1")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    code, _, err = run(capsys, "query", "--graph", g0_file, "--from", "1", "--to", "9", "--one-based")
    assert code == 2 and "vertex 9" in err
    assert run(capsys, "query", "--graph", "/nonexistent/x", "--from", "0", "--to", "1")[0] == 2

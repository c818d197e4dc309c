import json

import pytest

from treepack.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_text(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "complete", "4")
    assert code == 0
    assert "p 4 6" in out
    assert "e 0 1" in out

    target = tmp_path / "k4.txt"
    code, out, _ = run(capsys, "gen", "complete", "4", "--out", str(target))
    assert code == 0 and out == ""
    assert "p 4 6" in target.read_text()


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "hypercube", "3", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["n"] == 8 and record["m"] == 12


def test_gen_multipartite_and_errors(capsys):
    code, out, _ = run(capsys, "gen", "multipartite", "3", "2")
    assert code == 0 and "p 6 12" in out
    code, _, err = run(capsys, "gen", "cycle", "2")
    assert code == 2 and "error:" in err


def test_product_files(capsys, tmp_path):
    p3 = tmp_path / "p3.txt"
    k4 = tmp_path / "k4.txt"
    run(capsys, "gen", "path", "3", "--out", str(p3))
    run(capsys, "gen", "complete", "4", "--out", str(k4))

    code, out, _ = run(capsys, "product", "cartesian", str(p3), str(p3))
    assert code == 0 and "p 9 12" in out and "# product cartesian n1=3 n2=3" in out

    code, out, _ = run(capsys, "product", "lex", str(p3), str(k4))
    assert code == 0 and "p 12 50" in out

    code, _, err = run(capsys, "product", "cartesian", str(p3), "missing.txt")
    assert code == 2 and "error:" in err


def test_pack_and_verify_round_trip(capsys, tmp_path):
    p3 = tmp_path / "p3.txt"
    k4 = tmp_path / "k4.txt"
    run(capsys, "gen", "path", "3", "--out", str(p3))
    run(capsys, "gen", "complete", "4", "--out", str(k4))

    packing = tmp_path / "packing.json"
    code, out, _ = run(capsys, "pack", "lex", str(p3), str(k4),
                       "--out", str(packing))
    assert code == 0
    record = json.loads(packing.read_text())
    assert record["method"] == "constructed-lex"
    assert record["bound"] == 4
    assert record["verified"] is True
    assert len(record["trees"]) == 4
    assert record["graph"] == "packing.json.graph"
    graph_file = tmp_path / "packing.json.graph"
    assert graph_file.exists()

    code, out, _ = run(capsys, "verify", str(graph_file), str(packing))
    assert code == 0
    assert out.startswith("PASS")

    # corrupt one edge: packing must now fail verification with exit 1
    record["trees"][0] = record["trees"][0][:-1]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(record))
    code, out, _ = run(capsys, "verify", str(graph_file), str(bad))
    assert code == 1
    assert out.startswith("FAIL")


def test_pack_cartesian_text_summary(capsys, tmp_path):
    k4 = tmp_path / "k4.txt"
    run(capsys, "gen", "complete", "4", "--out", str(k4))
    code, out, _ = run(capsys, "pack", "cartesian", str(k4), str(k4))
    assert code == 0
    assert "3 trees" in out and "verified=true" in out


def test_pack_with_factor_packing_override(capsys, tmp_path):
    k4 = tmp_path / "k4.txt"
    p3 = tmp_path / "p3.txt"
    run(capsys, "gen", "complete", "4", "--out", str(k4))
    run(capsys, "gen", "path", "3", "--out", str(p3))
    # a single spanning tree of K4 as the supplied factor packing
    override = tmp_path / "pk.json"
    override.write_text(json.dumps(
        {"method": "user", "trees": [[[0, 1], [0, 2], [0, 3]]]}))
    code, out, _ = run(capsys, "pack", "cartesian", str(k4), str(p3),
                       "--factor-packing", str(override), "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["bound"] == 1     # 1 + 1 - 1, not sigma(K4) + 1 - 1
    assert len(record["trees"]) == 1


def test_oracle_text_and_json(capsys, tmp_path):
    k4 = tmp_path / "k4.txt"
    run(capsys, "gen", "complete", "4", "--out", str(k4))
    code, out, _ = run(capsys, "oracle", str(k4))
    assert code == 0
    assert "sigma = 2" in out

    code, out, _ = run(capsys, "oracle", str(k4), "--format", "json")
    record = json.loads(out)
    assert record["sigma"] == 2
    assert record["certificate"]["bound"] == 2
    assert len(record["packing"]["trees"]) == 2


def test_oracle_rejects_disconnected(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 4 2\ne 0 1\ne 2 3\n")
    code, _, err = run(capsys, "oracle", str(bad))
    assert code == 2 and "error:" in err


def test_table_reports_loose_bounds_without_failing(capsys):
    code, out, _ = run(capsys, "table", "--strict")
    assert code == 0
    lines = out.splitlines()
    k5row = next(l for l in lines if l.startswith("K5 x C4"))
    assert "bound<sigma" in k5row
    assert " 2 " in k5row and " 3 " in k5row
    assert not any("!!" in l for l in lines)


def test_table_json_rows(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    by_name = {r["graph"]: r for r in rows}
    assert by_name["K4 x K4"]["sigma"] == 3
    assert by_name["K4 x K4"]["bound"] == 3
    assert by_name["K5 x C4"]["bound"] == 2
    assert by_name["K5 x C4"]["sigma"] == 3
    assert by_name["K3(2)"]["bound"] is None
    assert all(r["failures"] == [] for r in rows)


def test_stdout_deterministic(capsys, tmp_path):
    k4 = tmp_path / "k4.txt"
    run(capsys, "gen", "complete", "4", "--out", str(k4))
    _, out1, _ = run(capsys, "oracle", str(k4), "--format", "json")
    _, out2, _ = run(capsys, "oracle", str(k4), "--format", "json")
    assert out1 == out2


def test_run_record_on_stderr(capsys, tmp_path):
    k4 = tmp_path / "k4.txt"
    run(capsys, "gen", "complete", "4", "--out", str(k4))
    _, _, err = run(capsys, "pack", "cartesian", str(k4), str(k4))
    record = json.loads(err.strip().splitlines()[-1])
    assert record["command"] == "pack"
    assert record["verified"] is True
    assert "wall_time_s" in record


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2

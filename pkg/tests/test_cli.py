import json

import pytest

import fusionkit.cli as cli
import fusionkit.tadpole


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_fuse_a1_fusion(capsys):
    rc, out, _ = run(capsys, "fuse", "A1", "--weight", "2", "--level", "3")
    assert rc == 0
    assert out.splitlines() == ["0: 1", "2: 1"]


def test_fuse_a1_tensor(capsys):
    rc, out, _ = run(capsys, "fuse", "A1", "--weight", "2", "--tensor")
    assert rc == 0
    assert out.splitlines() == ["0: 1", "2: 1", "4: 1"]


def test_fuse_a2_fusion_json(capsys):
    rc, out, _ = run(capsys, "fuse", "A2", "--weight", "1,1", "--level", "2", "--json")
    assert rc == 0
    record = json.loads(out)
    assert record["algebra"] == "A2"
    assert record["level"] == 2
    assert record["entries"] == {"0,0": 1, "1,1": 1}


def test_fuse_oracle_method_agrees(capsys):
    rc_r, out_r, _ = run(capsys, "fuse", "G2", "--weight", "1,0", "--level", "3")
    rc_o, out_o, _ = run(capsys, "fuse", "G2", "--weight", "1,0", "--level", "3", "--method", "oracle")
    assert rc_r == rc_o == 0
    assert out_r == out_o


@pytest.mark.parametrize("argv", [
    ("fuse", "Q9", "--weight", "1", "--level", "2"),
    ("fuse", "A2", "--weight", "1", "--level", "3"),
    ("fuse", "A2", "--weight", "-1,0", "--level", "3"),
    ("fuse", "A2", "--weight", "1,1"),
    ("fuse", "A2", "--weight", "one,two", "--level", "3"),
    ("table", "nontrivial"),
    ("bogus",),
])
def test_usage_errors(capsys, argv):
    rc, _, _ = run(capsys, *argv)
    assert rc == 2


def test_help_exits_clean(capsys):
    assert run(capsys, "--help")[0] == 0


def test_level_errors(capsys):
    rc, _, err = run(capsys, "fuse", "A2", "--weight", "2,2", "--level", "2")
    assert rc == 3 and "error:" in err
    rc, _, err = run(capsys, "tadpole", "A2", "--level", "1")
    assert rc == 3


def test_tadpole_value(capsys):
    rc, out, _ = run(capsys, "tadpole", "B4", "--level", "7")
    assert rc == 0
    assert out.strip() == "220"


def test_tadpole_all_methods(capsys):
    rc, out, _ = run(capsys, "tadpole", "B4", "--level", "7", "--method", "all")
    assert rc == 0
    assert out.splitlines() == ["formula: 220", "enumeration: 220"]


def test_tadpole_zero(capsys):
    rc, out, _ = run(capsys, "tadpole", "A3", "--level", "4", "--zero")
    assert rc == 0
    assert out.strip() == "35"


def test_tadpole_no_closed_form(capsys):
    rc, _, err = run(capsys, "tadpole", "E7", "--level", "5")
    assert rc == 5 and "error:" in err


def test_tadpole_all_without_closed_form(capsys):
    rc, out, _ = run(capsys, "tadpole", "G2", "--level", "4", "--method", "all")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "formula: unavailable (no closed form)"
    assert lines[1].startswith("enumeration: ")


def test_tadpole_oracle_method(capsys):
    rc, out, _ = run(capsys, "tadpole", "A2", "--level", "3", "--method", "oracle")
    assert rc == 0
    rc2, out2, _ = run(capsys, "tadpole", "A2", "--level", "3", "--method", "enum")
    assert rc2 == 0 and out == out2


def test_tadpole_json(capsys):
    rc, out, _ = run(capsys, "tadpole", "B3", "--level", "5", "--json")
    record = json.loads(out)
    assert rc == 0
    assert record == {"command": "tadpole", "algebra": "B3", "level": 5,
                      "kind": "adjoint", "method": "formula", "value": 45}


def test_table_b_check(capsys):
    rc, out, _ = run(capsys, "table", "b-tadpoles", "--check")
    assert rc == 0
    assert out.strip() == "48/48 cells match"


def test_table_b_print(capsys):
    rc, out, _ = run(capsys, "table", "b-tadpoles")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].split() == ["level", "B3", "B4", "B5", "B6"]
    assert len(lines) == 13


def test_table_g2_check(capsys):
    rc, out, _ = run(capsys, "table", "g2-offdiag", "--check")
    assert rc == 0
    assert out.strip() == "12/12 rows match (4 starred)"


def test_table_g2_print(capsys):
    rc, out, _ = run(capsys, "table", "g2-offdiag")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert sum("pinned at node 2" in line for line in lines) == 4


def test_table_conditions_check(capsys):
    rc, out, _ = run(capsys, "table", "nontrivial", "--check")
    assert rc == 0
    lines = out.splitlines()
    assert "C4: 3 conditions match" in lines
    assert "B5: 4 conditions match" in lines
    assert "G2: 2 conditions match" in lines
    assert "E8: 0 conditions match" in lines


def test_table_conditions_for_algebra(capsys):
    rc, out, _ = run(capsys, "table", "nontrivial", "--algebra", "A3")
    assert rc == 0
    assert "every condition follows from dominance" in out
    rc, out, _ = run(capsys, "table", "nontrivial", "--algebra", "G2")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert all("node 2" in line for line in lines)


def test_verify_small(capsys):
    rc, out, _ = run(capsys, "verify", "--max-rank", "2", "--max-level", "3", "--suite", "rules")
    assert rc == 0
    assert out.strip().endswith("tasks, ok")


def test_verify_json(capsys):
    rc, out, _ = run(capsys, "verify", "--max-rank", "1", "--max-level", "2", "--suite", "tadpole", "--json")
    record = json.loads(out)
    assert rc == 0
    assert record["ok"] is True
    assert record["mismatches"] == []


def test_verify_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("FUSIONKIT_THREADS", "2")
    rc, out, _ = run(capsys, "verify", "--max-rank", "1", "--max-level", "2", "--suite", "tadpole")
    assert rc == 0


def test_verify_detects_bad_formula(capsys, monkeypatch):
    monkeypatch.setattr(fusionkit.tadpole, "adjoint_tadpole_formula",
                        lambda algebra, level: 10 ** 9)
    rc, _, err = run(capsys, "verify", "--max-rank", "1", "--max-level", "3", "--suite", "tadpole")
    assert rc == 4
    assert "adjoint tadpole (k=J)" in err


def test_tadpole_all_detects_disagreement(capsys, monkeypatch):
    monkeypatch.setattr(cli, "adjoint_tadpole_formula", lambda algebra, level: 999)
    rc, out, err = run(capsys, "tadpole", "A2", "--level", "3", "--method", "all")
    assert rc == 4
    assert "methods disagree" in err
    assert out.splitlines()[0] == "formula: 999"

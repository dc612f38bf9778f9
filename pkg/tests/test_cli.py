import json

import pytest

from ringlab.cli import main

TINY = """
[corpus]
n_range = [1, 3]
[families.a]
template = "{e}"
params = { e = { values = ["Zmod(6)", "Zmod(4)", "GF(4)", "Mat(2, Zmod(2))"] } }
"""


@pytest.fixture
def tiny(tmp_path):
    p = tmp_path / "tiny.toml"
    p.write_text(TINY)
    return str(p)


def test_check_z6(capsys):
    assert main(["check", "Zmod(6)", "--pred", "n-delta-u", "--n", "2"]) == 0
    assert capsys.readouterr().out.strip() == "n_delta_u(2) = true"


def test_check_matrix_six(capsys):
    assert main(["check", "Mat(2,Zmod(2))", "--pred", "n-delta-u", "--n", "6"]) == 0
    assert "= true" in capsys.readouterr().out


def test_check_reports_witness(capsys):
    assert main(["check", "Mat(2,Zmod(2))", "--pred", "n_delta_u", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "= false" in out and "witness: #" in out


def test_invariants_json(tmp_path, capsys):
    out = tmp_path / "inv.json"
    assert main(["invariants", "Zmod(4)", "--json", str(out)]) == 0
    text = capsys.readouterr().out
    assert "#2  2" in text
    rep = json.loads(out.read_text())
    assert rep["invariants"]["delta"]["ids"] == [0, 2]
    assert rep["delta_u_exponent"] == 1
    assert out.read_text() == json.dumps(rep, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def test_invariants_single_set(capsys):
    assert main(["invariants", "Mat(2, Zmod(2))", "--set", "units"]) == 0
    out = capsys.readouterr().out
    assert out.count("[[") == 6 and "elements:" not in out


@pytest.mark.parametrize("argv, status, code", [
    (["invariants", "Mat(2 Zmod(2))"], 2, "syntax"),
    (["check", "Zmod(6)", "--pred", "nonsense"], 2, "unknown-name"),
    (["check", "Zmod(6)", "--pred", "n-delta-u"], 2, "construction"),
    (["check", "Corner(Zmod(4), #2)", "--pred", "clean"], 2, "not-idempotent"),
    (["invariants", "Mat(9, Zmod(4))"], 3, "resource-cap"),
    (["theorems", "--only", "P7.77"], 2, "unknown-name"),
])
def test_error_exit_codes(capsys, argv, status, code):
    assert main(argv) == status
    err = capsys.readouterr().err
    assert f"[{code}]" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["check", "Zmod(6)"])
    assert e.value.code == 2


def test_theorems_only(tiny, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["theorems", "--corpus", tiny, "--only", "P2.10,p2.sl", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert set(rep) == {"schema_version", "tool_version", "corpus", "results", "summary"}
    assert {r["check_id"] for r in rep["results"]} == {"P2.10", "P2.SL"}
    assert "Zmod(6)" in {f["ring"] for f in rep["summary"]["flagged_discrepancies"]}
    assert "flagged: P2.SL Zmod(6)" in capsys.readouterr().out
    assert rep["corpus"]["expanded"] == sorted(rep["corpus"]["expanded"])


def test_theorems_report_is_deterministic(tiny, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["theorems", "--corpus", tiny, "--json", str(a)]) == 0
    assert main(["theorems", "--corpus", tiny, "--json", str(b), "--jobs", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_search(tiny, capsys):
    assert main(["search", "--corpus", tiny, "--formula", "delta_u & !reduced"]) == 0
    assert capsys.readouterr().out.split() == ["Zmod(4)"]
    assert main(["search", "--corpus", tiny, "--formula", "regular & n_delta_u(3)", "--assert-empty"]) == 1
    assert main(["search", "--corpus", tiny, "--formula", "regular & (n_delta_u(3)"]) == 2

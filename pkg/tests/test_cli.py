import json
import subprocess
import sys

import pytest

from conftest import ring
from pfisterlink.cli import emit, main
from pfisterlink.literals import parse_form, parse_pfister, parse_symbol, parse_symbol_sum, split_top
from pfisterlink.quadform import BilinearDiag, QuadraticForm, scale, tensor_bilinear
from pfisterlink.scenarios import SCENARIOS, Claim, Config, Report, run
from pfisterlink.symbols import PfisterForm, QPfisterSymbol

R = ring(("α", "β", "γ"))
a, b, g = R.gens


# --- literals ---------------------------------------------------------------


def test_split_top():
    assert split_top("((a,b)) + ((c))", "+") == ["((a,b)) ", " ((c))"]
    assert split_top("[a, (b + c)]", ",") == ["[a, (b + c)]"]
    assert split_top("a, [b, c]", ",") == ["a", " [b, c]"]
    with pytest.raises(SyntaxError):
        split_top("((a)", ",")
    with pytest.raises(SyntaxError):
        split_top("a)", ",")


def test_parse_symbols_and_forms():
    assert parse_pfister(R, "[[β, α]]") == PfisterForm((b,), a)
    assert parse_symbol(R, "((α, β))") == QPfisterSymbol([a, b])
    assert len(parse_symbol_sum(R, "0")) == 0
    assert parse_symbol_sum(R, "((α)) + ((α))").is_formally_hyperbolic()
    assert parse_form(R, "<α> _|_ [1, β]") == QuadraticForm.unary(a) + QuadraticForm.binary(R.one, b)
    assert parse_form(R, "[[β, α]]") == PfisterForm((b,), a).expand()
    pre = tensor_bilinear(BilinearDiag.pfister([g], R), QuadraticForm.binary(R.one, a))
    assert parse_form(R, "<<γ>>*[1, α]") == pre
    assert parse_form(R, "[β, α/β]") == scale(b, QuadraticForm.binary(R.one, a))


@pytest.mark.parametrize("text", ["[[α]", "((α, ))", "[α]", "<α, β>", "<<γ>>[1, α]", "{α}"])
def test_parse_errors(text):
    with pytest.raises(SyntaxError):
        if text.startswith("(("):
            parse_symbol(R, text)
        else:
            parse_form(R, text)


# --- reports ----------------------------------------------------------------


def test_report_round_trip_and_skeleton():
    r = Report("empty")
    assert r.ok and json.loads(r.to_json()) == {"scenario": "empty", "params": {}, "ok": True, "claims": [], "notes": []}
    r.add("x", "computed", True, value=(1, 2))
    r.cite("y", [r.claims[0]], "follows")
    back = Report.from_dict(json.loads(emit(r, "json")))
    assert back.to_json() == r.to_json()
    with pytest.raises(ValueError):
        Claim("z", "guess", True)


def test_theorem_cited_claims_do_not_decide_ok():
    r = Report("t")
    bad = r.add("premise", "computed", False)
    r.cite("conclusion", [bad], "c")
    assert not r.ok and r.claims[1].passed is False
    r2 = Report("t")
    r2.add("c", "theorem-cited", False)
    assert r2.ok


def test_run_is_deterministic():
    cfg = Config(trials=20)
    assert run("rels", cfg).to_json() == run("rels", cfg).to_json()


# --- command line -----------------------------------------------------------


def test_list(capsys):
    assert main(["list"]) == 0
    assert capsys.readouterr().out.split() == sorted(SCENARIOS)


def test_run_json_and_text(capsys):
    assert main(["run", "main8", "--n", "2", "--trials", "20"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["scenario"] == "main8" and d["ok"] is True
    assert main(["run", "pairs", "--format", "text"]) == 0
    assert capsys.readouterr().out.rstrip().endswith("OK")


def test_out_file_is_byte_identical(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["run", "rels", "--trials", "30", "--seed", "3", "--out", str(p1)]) == 0
    assert main(["run", "rels", "--trials", "30", "--seed", "3", "--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "main8", "--n", "9"],
        ["run", "counter36", "--n", "5", "--s", "4"],
        ["run", "nope"],
        ["run", "rels", "--field", "3"],
        ["run", "rels", "--field", "2^17"],
        ["run", "rels", "--trials", "0"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def _write(tmp_path, doc):
    p = tmp_path / "s.json"
    p.write_text(json.dumps(doc, ensure_ascii=False))
    return str(p)


def test_file_scenario_passes(tmp_path, capsys):
    doc = {
        "name": "demo",
        "variables": ["α", "β"],
        "claims": [
            {"kind": "witt_zero", "value": "((α, β)) + ((β, α))"},
            {"kind": "formally_zero", "value": "((α^2)) + ((α))"},
            {"kind": "anisotropic", "value": "[[β, α]]"},
            {"kind": "no_witness", "value": "[[β, α]]"},
        ],
    }
    assert main(["file", _write(tmp_path, doc), "--trials", "20", "--degree-bound", "1"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert [c["passed"] for c in d["claims"]] == [True] * 4


def test_file_failure_carries_point(tmp_path, capsys):
    doc = {"variables": ["α"], "claims": [{"kind": "witt_zero", "value": "((α))"}]}
    assert main(["file", _write(tmp_path, doc), "--field", "2^2", "--trials", "50"]) == 1
    d = json.loads(capsys.readouterr().out)
    c = d["claims"][0]
    assert d["ok"] is False and c["passed"] is False and len(c["detail"]["point"]) == 1


@pytest.mark.parametrize(
    "doc",
    [
        {"variables": ["α"], "claims": [{"kind": "bogus", "value": "0"}]},
        {"variables": ["α"], "claims": [{"kind": "witt_zero", "value": "((α)"}]},
        {"claims": []},
    ],
)
def test_bad_files_exit_2(tmp_path, doc):
    assert main(["file", _write(tmp_path, doc)]) == 2


def test_missing_file_exit_2(tmp_path):
    assert main(["file", str(tmp_path / "none.json")]) == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "pfisterlink.cli", "list"], capture_output=True, text=True)
    assert out.returncode == 0 and "main8" in out.stdout

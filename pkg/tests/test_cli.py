"""CLI surface: exit codes, JSON output, determinism, and the seed override."""

import json
import subprocess
import sys

from formk1.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith(("{", "[")) else out)


def test_trunc_decomp_worked_example(capsys):
    code, out = run_cli(["trunc", "decomp", "--ring", "Z", "--t", "3", "--p", "1+X+X^2"], capsys)
    assert code == 0
    assert out == {"a": ["1", "1", "0"]}


def test_gq_member_wraps_the_predicate(capsys):
    code, out = run_cli(
        [
            "gq", "member",
            "--ring", '{"kind":"ModularInt","m":4,"involution":"trivial","lambda":"3"}',
            "--matrix", '{"n":1,"entries":[["1","0"],["0","1"]]}',
        ],
        capsys,
    )
    assert code == 0 and out == {"member": True}


def test_gq_member_failed_check_exits_one(capsys):
    code, out = run_cli(
        ["gq", "member", "--ring", "Z/4", "--lambda", "3",
         "--matrix", '[["1","1"],["1","1"]]'],
        capsys,
    )
    assert code == 1 and out == {"member": False}


def test_matrix_from_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text('{"n":1,"entries":[["1","0"],["0","1"]]}')
    code, out = run_cli(
        ["gq", "member", "--ring", "Z/4", "--lambda", "3", "--matrix", str(path)],
        capsys,
    )
    assert code == 0 and out == {"member": True}


def test_malformed_input_exits_two(capsys):
    code, out = run_cli(["gq", "member", "--ring", "Z/4", "--matrix", "nonsense"], capsys)
    assert code == 2
    assert "error" in out and out["error"]["type"] == "ParseError"
    code, out = run_cli(["ring", "check", "--ring", "Weird"], capsys)
    assert code == 2 and "error" in out


def test_math_refusal_exits_one(capsys):
    code, out = run_cli(
        ["trunc", "descent", "--ring", "Z/4", "--t", "2", "--r", "1", "--k", "2",
         "--u", "1+2X"],
        capsys,
    )
    assert code == 1 and out["error"]["type"] == "KNotInvertible"


def test_ring_check_reports_bad_lambda(capsys):
    code, out = run_cli(["ring", "check", "--ring", "Z/4", "--lambda", "2"], capsys)
    assert code == 1
    bad = [c for c in out["checks"] if not c["passed"]]
    assert bad[0]["name"] == "lambda-unitary"


def test_gq_gen_and_word_eval(capsys):
    code, gen = run_cli(
        ["gq", "gen", "--ring", "Z/4", "--lambda", "3", "--family", "QE",
         "--i", "1", "--j", "2", "--a", "1", "--n", "3"],
        capsys,
    )
    assert code == 0 and gen["n"] == 3
    word = json.dumps({"factors": [
        {"family": "QE", "i": 1, "j": 2, "a": "1"},
        {"family": "QE", "i": 1, "j": 2, "a": "3"},
    ]})
    code, out = run_cli(
        ["word", "eval", "--ring", "Z/4", "--lambda", "3", "--word", word, "--n", "3"],
        capsys,
    )
    assert code == 0 and out["member"] is True
    assert out["entries"][0][0] == "1" and out["entries"][0][1] == "0"


def test_word_lift_roundtrip(capsys):
    word = json.dumps({"factors": [{
        "family": "REL",
        "conjugator": [{"family": "QE", "i": 1, "j": 2, "a": "1"}],
        "core": {"family": "QE", "i": 2, "j": 1, "a": "2"},
    }]})
    code, out = run_cli(
        ["word", "lift", "--ring", "Z/4", "--lambda", "3", "--ideal", '["2"]',
         "--word", word, "--n", "3"],
        capsys,
    )
    assert code == 0 and out["foldMatches"] is True
    assert out["word"]["factors"][0]["core"]["a"] == "(0,2)"


def test_kopeiko_cli_round(capsys):
    data = '{"r":1,"n":1,"a":[["2"]],"b":[["2"]],"c":[["2"]]}'
    code, out = run_cli(
        ["kopeiko", "validate", "--ring", "Z/4", "--lambda", "3", "--data", data],
        capsys,
    )
    assert code == 0 and out == {"valid": True}
    code, out = run_cli(
        ["kopeiko", "reduce", "--ring", "Z/4", "--lambda", "3", "--data", data],
        capsys,
    )
    assert code == 0
    assert out["hyperbolicPart"] == [["1+2X"]]
    assert out["hyperbolicPartInverse"] == [["1+2X"]]
    bad = '{"r":1,"n":1,"a":[["2"]],"b":[["1"]],"c":[["1"]]}'
    code, out = run_cli(
        ["kopeiko", "validate", "--ring", "Z/4", "--lambda", "3", "--data", bad],
        capsys,
    )
    assert code == 1 and out["valid"] is False and out["condition"] == 3


def test_reduce_cli(capsys):
    code, out = run_cli(
        ["reduce", "upper", "--ring", "Z", "--lambda", "-1",
         "--matrix", '[["1","5"],["0","1"]]'],
        capsys,
    )
    assert code == 0
    assert out["certificate"]["factors"] == [{"family": "T12", "block": [["-5"]]}]


def test_graded_cli(capsys):
    ring = json.dumps({"kind": "Graded", "componentRing": {"kind": "Integers"},
                       "topDegree": 4})
    code, out = run_cli(
        ["graded", "eval", "--ring", ring,
         "--element", '{"components":{"0":"2","1":"3"}}', "--at", "5"],
        capsys,
    )
    assert code == 0 and out == {"components": {"0": "2", "1": "15"}}


def test_verify_paper_subset_and_determinism(capsys):
    args = ["verify-paper", "--suite", "torsion-descent", "--seed", "7"]
    code, first = run_cli(args, capsys)
    assert code == 0 and first["ok"] is True
    code, second = run_cli(args, capsys)
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_seed_env_override(monkeypatch, capsys):
    monkeypatch.setenv("FORMK1_SEED", "99")
    code, out = run_cli(["verify-paper", "--suite", "torsion-descent"], capsys)
    assert code == 0 and out["seed"] == 99


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["trunc", "decomp", "--ring", "Z", "--t", "3", "--p", "1+X+X^2",
                 "--out", str(target)])
    assert code == 0
    assert json.loads(target.read_text()) == {"a": ["1", "1", "0"]}
    assert capsys.readouterr().out == ""


def test_pretty_output_is_tabular(capsys):
    code = main(["trunc", "decomp", "--ring", "Z", "--t", "3", "--p", "1+X+X^2",
                 "--pretty"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("a:")


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "formk1.cli", "trunc", "decomp", "--ring", "Z",
         "--t", "3", "--p", "1+X+X^2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"a": ["1", "1", "0"]}

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from graphprops import cli
from graphprops.graphcore import canonical_form, cycle_graph, to_graph6
from graphprops.properties import Builtin, dump_properties


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4")
    assert code == 0 and len(out.splitlines()) == 18
    code, out, _ = run(capsys, "enumerate", "--n", "1")
    assert out.splitlines() == ["@"]
    code, _, err = run(capsys, "enumerate", "--n", "9")
    assert code == 2 and "error" in err


def test_member(capsys):
    assert run(capsys, "member", "split", to_graph6(cycle_graph(4)))[:2] == (0, "false\n")
    assert run(capsys, "member", "O", "B?")[:2] == (0, "true\n")
    code, _, err = run(capsys, "member", "nosuch", "B?")
    assert code == 2 and "nosuch" in err
    assert run(capsys, "member", "O", "~~~")[0] == 2


def test_member_with_definitions(tmp_path, capsys):
    defs = tmp_path / "defs.json"
    defs.write_text(dump_properties({"mine": Builtin("bipartite")}))
    assert run(capsys, "member", "mine", "Cl", "--defs", str(defs))[:2] == (0, "true\n")


def test_partition(capsys):
    code, out, _ = run(capsys, "partition", "O*K", "C^")
    data = json.loads(out)
    assert code == 0 and data["member"]
    assert data["certificate"] == {"graph": "C^", "parts": [[0, 1], [2, 3]], "induced_parts": ["A?", "A_"]}


def test_forbidden(capsys):
    code, out, _ = run(capsys, "forbidden", "--property", "forests", "--n", "6")
    assert code == 0
    assert out.splitlines() == ["# relation: induced"] + [to_graph6(canonical_form(cycle_graph(k))) for k in range(3, 7)]


def test_verify_uniqueness_witnesses(capsys):
    code, out, _ = run(capsys, "verify", "theorem2", "--r", "2", "--s", "2", "--n", "7")
    report = json.loads(out)
    assert code == 0 and report["pass"] and report["schema"] == "graphprops.report/1"
    assert all(c["verdict"] == "pass" for c in report["checks"])


def test_verify_edge_criterion_headerless_file(tmp_path, capsys):
    path = tmp_path / "cycles.g6"
    path.write_text("".join(to_graph6(cycle_graph(k)) + "\n" for k in range(3, 7)))
    code, out, _ = run(capsys, "verify", "prop10", "--forbidden", str(path))
    report = json.loads(out)
    assert code == 0
    assert report["checks"][0]["detail"]["hereditary"] is True


def test_verify_factorisation(capsys):
    code, out, _ = run(capsys, "verify", "theorem7", "--property", "bipartite", "--n", "6")
    report = json.loads(out)
    assert code == 0
    count = next(c for c in report["checks"] if c["name"] == "factor_count")
    assert count["detail"] == {"dc": 2, "factors": 2}


@pytest.mark.parametrize(
    "argv",
    [
        ["prop1"],
        ["lemma5", "--n", "5"],
        ["lemma6", "--n", "5"],
        ["prop8"],
        ["prop9", "--property", "bounded_order(3)", "--n", "4"],
        ["prop10", "--property", "split"],
        ["roundtrips"],
    ],
)
def test_other_suites_pass(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    assert code == 0 and json.loads(out)["pass"]


def test_reports_are_byte_stable(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(capsys, "verify", "theorem7", "--n", "5", "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_failed_check_sets_exit_code(monkeypatch, capsys):
    def failing(args, defs):
        rep = cli.Report("prop8", {})
        rep.add("ok", True)
        rep.add("broken", False, "detail")
        return rep

    monkeypatch.setitem(cli.SUITE_RUNNERS, "prop8", failing)
    code, out, _ = run(capsys, "verify", "prop8", "--format", "text")
    assert code == 1 and "FAIL broken" in out


def test_usage_errors(capsys):
    assert run(capsys, "verify", "nosuch")[0] == 2
    assert run(capsys, "verify", "prop8", "--property", "split", "--n", "5")[0] == 2
    assert run(capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphprops", "member", "K", "Bw"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "true\n"

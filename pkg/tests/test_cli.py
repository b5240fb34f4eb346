import io
import json
import subprocess
import sys

import pytest

from tdcrit import canonical_form, complete_graph, cycle_graph, emit_graph6, family_Gk, family_R, is_isomorphic, parse_graph6, path_graph
from tdcrit.cli import main


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, stdin=io.StringIO(stdin))
    return code, [json.loads(line) for line in out.getvalue().splitlines()]


def g6(G):
    return emit_graph6(G)


def test_td():
    assert run(["td", g6(path_graph(8))])[1][0]["td"] == 4
    assert run(["td", g6(complete_graph(1))])[1][0]["td"] == 1
    assert run(["td", g6(cycle_graph(10))])[1][0]["td"] == 5
    code, (rec,) = run(["td", "--witness", g6(path_graph(4))])
    assert code == 0 and len(rec["witness"]) == 4 and max(rec["witness"]) == 3
    assert run(["td", "--cap", "3", g6(path_graph(8))])[1][0]["td"] is None


def test_stdin_and_file(tmp_path):
    text = g6(path_graph(3)) + "\n\n" + g6(complete_graph(4)) + "\n"
    code, recs = run(["td"], stdin=text)
    assert code == 0 and [r["td"] for r in recs] == [2, 4]
    f = tmp_path / "graphs.g6"
    f.write_text(text)
    assert [r["td"] for r in run(["td", "--file", str(f)])[1]] == [2, 4]


def test_exit_codes(monkeypatch):
    assert run(["td", "A\x7f"])[0] == 2
    assert run(["td", "A"])[0] == 2
    monkeypatch.setenv("TDCRIT_MAX_N", "5")
    assert run(["td", g6(path_graph(8))])[0] == 3
    monkeypatch.delenv("TDCRIT_MAX_N")
    assert run(["construct", "--host", g6(cycle_graph(6))] + ["--attach", "A_:0"] * 6)[0] == 4
    assert run(["construct", "--host", "A_", "--attach", "A_:x", "--attach", "A_:0"])[0] == 2
    assert run(["enumerate", "--k", "3", "--nmax", "9"])[0] == 3


def test_classify():
    code, (rec,) = run(["classify", g6(cycle_graph(6))])
    assert set(rec) == {"command", "graph6", "td", "minor_critical", "subgraph_critical",
                        "induced_subgraph_critical", "one_unique"}
    assert (rec["td"], rec["minor_critical"], rec["subgraph_critical"], rec["one_unique"]) == (4, False, True, False)
    rec = run(["classify", g6(complete_graph(4))])[1][0]
    assert all(rec[k] for k in ("minor_critical", "subgraph_critical", "induced_subgraph_critical", "one_unique"))
    rec = run(["classify", g6(family_Gk(2))])[1][0]
    assert (rec["td"], rec["subgraph_critical"], rec["one_unique"]) == (4, False, True)
    rec = run(["classify", "--witness", g6(cycle_graph(6))])[1][0]
    assert rec["failing_witness"][0] == "contract"


def test_rank_unique_transform_decompose():
    rec = run(["rank", "--labels", "1,2,1,3,1,2,1,4", g6(path_graph(8))])[1][0]
    assert rec["feasible"] and rec["optimal"]
    assert not run(["rank", "--labels", "1,1", "A_"])[1][0]["feasible"]
    rec = run(["unique", g6(path_graph(8))])[1][0]
    assert rec["one_unique"] and rec["min_t"] == [1] * 8
    rec = run(["unique", "--t", "1", g6(cycle_graph(6))])[1][0]
    assert rec["unique"] == [False] * 6
    rec = run(["transform", "--star-clique", "1", g6(path_graph(3))])[1][0]
    assert rec["result"] == "A_" and rec["td"] == 2
    rec = run(["transform", "--quotient", "0,2", g6(path_graph(3))])[1][0]
    assert rec["result"] == "A_"
    rec = run(["decompose", "--top-set", "1", g6(path_graph(3))])[1][0]
    assert rec["value"] == rec["td"] == 2 and rec["top_set_agrees"]


def test_enumerate():
    code, recs = run(["enumerate", "--k", "2", "--nmax", "4"])
    assert code == 0 and [r["graph6"] for r in recs] == ["A_"]
    recs = run(["enumerate", "--k", "3", "--nmax", "6"])[1]
    got = sorted(canonical_form(parse_graph6(r["graph6"])) for r in recs)
    assert got == sorted(canonical_form(G) for G in (complete_graph(3), path_graph(4)))


@pytest.mark.slow
def test_enumerate_stress_k4():
    recs = run(["enumerate", "--k", "4", "--nmax", "8", "--stress-conjectures"])[1]
    assert recs
    assert all(r["order"] <= 8 and r["max_degree"] <= 3 and r["one_unique"] for r in recs)


def test_stress_command():
    recs = run(["stress", "--k", "3", "--nmax", "6"])[1]
    assert recs[-1]["summary"] and recs[-1]["counterexamples"] == []
    assert len(recs) == 3


def test_construct():
    rec = run(["construct", "--family", "R", "--params", "k=4,t=1"])[1][0]
    assert is_isomorphic(parse_graph6(rec["graph6"]), family_R(4, 1)) and rec["td"] == 4
    rec = run(["construct", "--family", "Gk", "--params", "k=2"])[1][0]
    assert rec["td"] == 4 and rec["order"] == 5
    code, (rec,) = run(["construct", "--host", "A_", "--attach", "Ch:0", "--attach", "Ch:0"])
    assert code == 0 and rec["ok"] and rec["minor_critical"] and rec["td"] == 4
    assert is_isomorphic(parse_graph6(rec["graph6"]), path_graph(8))
    recs = run(["construct", "--s-family", "3"])[1]
    assert len(recs) == 1 and recs[0]["tree"]["kind"] == "adjoin"
    rec = run(["construct", "--family", "Q", "--params", "k=4,s=2,partition=1+1"])[1][0]
    assert rec["td"] == 4


def test_deterministic():
    argv = ["enumerate", "--k", "4", "--nmax", "6", "--stress-conjectures"]
    a, b = io.StringIO(), io.StringIO()
    main(argv, out=a)
    main(argv, out=b)
    assert a.getvalue() == b.getvalue() and a.getvalue()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tdcrit", "td", "Ch"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["td"] == 3
    proc = subprocess.run([sys.executable, "-m", "tdcrit", "td", "A"], capture_output=True, text=True)
    assert proc.returncode == 2 and "input error" in proc.stderr

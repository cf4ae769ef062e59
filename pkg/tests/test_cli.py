import json
import re

import pytest

from farmarb.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_simulate_example(capsys):
    code, out, _ = call(capsys, "simulate", "--chain", "s:7,10", "--start", "1,0,0,0,0,0")
    assert code == 0
    assert "final:  (1,0,0,-1,-1,0)" in out and "code:   (1,-1,0)" in out


def test_simulate_json(capsys):
    code, out, _ = call(capsys, "simulate", "--chain", "s:7,10", "--format", "json")
    data = json.loads(out)
    assert data["final"] == [1, 0, 0, -1, -1, 0] and data["code"] == [1, -1, 0]
    assert data["rates"]["AR"] == "3/2"


def test_simulate_empty_chain_echoes_start(capsys):
    code, out, _ = call(capsys, "simulate", "--chain", "w:", "--start", "[2,1,0,0,0,0]", "--format", "json")
    assert code == 0 and json.loads(out)["final"] == [2, 1, 0, 0, 0, 0]


def test_simulate_custom_base(capsys):
    base = '{"rates": {"FA": "1/2", "FR": "1/1", "FM": "3/1", "AR": "2/1", "AM": "6/1", "RM": "3/1"}, "alpha": "3/1"}'
    code, out, _ = call(capsys, "simulate", "--chain", "s:2", "--base", base, "--format", "json")
    assert code == 0 and json.loads(out)["rates"]["FA"] == "1/2"


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["simulate"],
    ["simulate", "--chain", "s:1,x"],
    ["simulate", "--chain", "s:13"],
    ["simulate", "--chain", "s:1", "--start", "1,2,3"],
    ["simulate", "--chain", "s:1", "--start", "{bad json"],
    ["simulate", "--chain", "s:1", "--alpha", "1/2"],
    ["simulate", "--chain", "s:1", "--base", "1,1,1,1,1,2"],
    ["search", "--depth", "-1"],
    ["search", "--budget-states", "0"],
    ["hull", "--format", "csv"],
])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 1


def test_hypothesis_verified(capsys):
    code, out, _ = call(capsys, "hypothesis", "--nu", "1")
    assert code == 0 and out.startswith("VERIFIED")


def test_budget_exceeded_is_not_a_verdict(capsys):
    code, _, err = call(capsys, "hypothesis", "--nu", "1", "--budget-states", "50")
    assert code == 1 and "budget" in err


def test_non_conforming_exit(capsys):
    code, _, err = call(capsys, "prodex", "--n-max", "2")
    assert code == 2 and "NON-CONFORMING" in err and '"first_mismatch"' not in err
    assert '"expected"' in err


def test_graph_dot(capsys):
    code, out, _ = call(capsys, "graph")
    assert code == 0
    assert out.startswith("digraph keygraph {")
    edges = re.findall(r'^\s+v\d+ -> v\d+ \[label="[\d,]+"\];$', out, re.M)
    labels = sum(len(e.split('label="')[1].split('"')[0].split(",")) for e in edges)
    assert labels == 13 * 12


def test_search_csv(capsys):
    code, out, _ = call(capsys, "search", "--depth", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "depth,states,balanced,max_magnitude"
    assert len(out.splitlines()) == 4


def test_json_independent_of_threads(capsys, monkeypatch):
    outs = []
    for t in ("1", "4"):
        outs.append(call(capsys, "search", "--depth", "6", "--format", "json", "--threads", t)[1])
    monkeypatch.setenv("FARM_THREADS", "3")
    outs.append(call(capsys, "search", "--depth", "6", "--format", "json")[1])
    assert outs[0] == outs[1] == outs[2]


def test_bad_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("FARM_THREADS", "zero")
    assert call(capsys, "hull")[0] == 1


def test_out_file(capsys, tmp_path):
    path = tmp_path / "t2.csv"
    code, out, _ = call(capsys, "table2", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert len(path.read_text(encoding="utf-8").splitlines()) == 28


def test_other_commands_run(capsys):
    for argv in (["matrices"], ["hull"], ["victorp", "--depth", "8"], ["growth", "--depth", "5"],
                 ["prop32"], ["stabilizer", "--chain", "s:10,3,6", "--max-len", "3"]):
        assert call(capsys, *argv)[0] == 0, argv
    assert call(capsys, "stabilizer")[0] == 2

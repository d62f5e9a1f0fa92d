import json
import subprocess
import sys

import pytest

from lollipop_blowup.blowup import split_family
from lollipop_blowup.cli import build_parser, main
from lollipop_blowup.constructions import lollipop
from lollipop_blowup.containment import blowup_contains
from lollipop_blowup.graph6 import decode_graph6
from lollipop_blowup.verify import SCHEMA, SCHEMA_VERSION, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_graph6(capsys):
    code, out, err = run(capsys, "construct", "--variant", "H", "--n", "10", "--p", "2",
                         "--q", "3", "--format", "graph6")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    assert decode_graph6(lines[0]).num_edges() == 33
    assert "33 edges" in err


def test_construct_predicted_json(capsys):
    code, out, _ = run(capsys, "construct", "--k", "4", "--l", "3", "--p", "2", "--n", "12")
    rec = json.loads(out)
    assert code == 0 and rec["construction"] == "H'(12,2,3)"
    assert rec["edges"] == rec["formula_edges"] == decode_graph6(rec["graph6"]).num_edges()


def test_ex_brute(capsys):
    code, out, _ = run(capsys, "ex-brute", "--n", "5", "--pattern-graph6", "Bw")
    assert code == 0 and json.loads(out)["max_edges"] == 6


def test_vc_and_blowup(capsys):
    _, out, _ = run(capsys, "vc", "--k", "5", "--l", "2")
    assert json.loads(out)["size"] == 4
    _, out, _ = run(capsys, "blowup", "--k", "3", "--l", "2", "--p", "2", "--format", "graph6")
    g = decode_graph6(out.strip())
    assert (g.n, g.num_edges()) == (10, 15)


def test_split_family_command(capsys):
    _, out, _ = run(capsys, "split-family", "--k", "3", "--l", "2", "--format", "graph6")
    got = {decode_graph6(line) for line in out.split()}
    assert len(got) == len(split_family(lollipop(3, 2), "independent"))


def test_decomp_family_command(capsys):
    _, out, _ = run(capsys, "decomp-family", "--k", "3", "--l", "2", "--p", "2", "--n", "6",
                    "--t-max", "10", "--format", "graph6")
    assert len(out.split()) == 3


def test_contains_command(capsys):
    _, out, _ = run(capsys, "contains", "--variant", "H", "--n", "20", "--p", "2", "--q", "4",
                    "--k", "3", "--l", "2")
    rec = json.loads(out)
    assert rec["result"] == "contains" and rec["witness"]["base_map"]
    _, out, _ = run(capsys, "contains", "--host-graph6", "Bw", "--pattern-graph6", "Bw")
    assert json.loads(out)["result"] == "contains"
    _, out, _ = run(capsys, "contains", "--variant", "H", "--n", "20", "--p", "2", "--q", "3",
                    "--k", "3", "--l", "2", "--budget", "1")
    assert json.loads(out)["result"] == "undecided"


@pytest.mark.parametrize("argv", [
    ["construct"],
    ["construct", "--variant", "H", "--n", "3", "--q", "9"],
    ["ex-brute", "--n", "5"],
    ["ex-brute", "--n", "12", "--pattern-graph6", "Bw"],
    ["vc", "--pattern-graph6", "B!"],
    ["verify", "--format", "graph6"],
    ["construct", "--n", "5", "--variant", "H", "--suite", "formulas"],
    ["contains", "--k", "3", "--l", "2", "--p", "2"],
    ["split-family", "--k", "3", "--l", "2", "--mode", "chi"],
])
def test_bad_flags_exit_with_usage(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_verify_freeness_example(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "freeness", "--k", "3", "--l", "2",
                       "--p", "2", "--n", "40")
    rep = json.loads(out)
    assert code == 0
    assert rep["schema"] == SCHEMA and rep["schema_version"] == SCHEMA_VERSION
    (case,) = rep["cases"]
    assert case["outcome"] == "pass"
    (host,) = case["evidence"]["hosts"]
    assert host["certificate"]["kind"] == "vertex-cover"
    assert host["search"] == {"result": "free"}
    assert blowup_contains(decode_graph6(host["graph6"]), 3, 2, 2) is None


def test_verify_failure_sets_exit_code(capsys, tmp_path):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps({"freeness": {"budget": None, "cells": [
        {"k": 3, "l": 2, "p": 2, "n": 20, "variant": "H", "q": 4}]}}))
    code, out, _ = run(capsys, "verify", "--suite", "freeness", "--config", str(cfg))
    rep = json.loads(out)
    assert code == 1 and rep["summary"]["fail"] == 1
    host = rep["cases"][0]["evidence"]["hosts"][0]
    assert host["search"]["result"] == "contains"
    assert host["certificate"] is None


def test_undecided_does_not_fail(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "saturation", "--k", "3", "--l", "2",
                       "--p", "2", "--n", "12", "--budget", "1")
    assert code == 0 and json.loads(out)["summary"]["undecided"] == 1


def test_verify_reports_are_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["verify", "--suite", "families", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_threads_do_not_change_report():
    one = run_suite("oracle-equivalence", seed=3, threads=1)
    two = run_suite("oracle-equivalence", seed=3, threads=2)
    assert one.to_json() == two.to_json()
    assert one.config["seed"] == 3


def test_timing_is_opt_in():
    assert "wall_time" not in run_suite("families").cases[0]
    assert "wall_time" in run_suite("families", timing=True).cases[0]


def test_thread_env_default(monkeypatch):
    monkeypatch.setenv("LOLLIPOP_THREADS", "3")
    assert build_parser().parse_args(["verify"]).threads == 3


def test_unknown_config_suite(capsys, tmp_path):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps({"nonsense": {}}))
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "formulas", "--config", str(cfg)])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lollipop_blowup", "vc", "--k", "3", "--l", "2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["size"] == 3

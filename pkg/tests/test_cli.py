import json

from thetagraph import complete_graph, cycle_graph, from_graph6, gen_H, spanning_theta, to_edge_list, to_graph6
from thetagraph.cli import main


def _records(out: str) -> list[dict]:
    return [json.loads(line) for line in out.splitlines() if line.startswith("{")]


def test_check_theta(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text(to_graph6(complete_graph(5)) + "\n" + to_graph6(cycle_graph(5)) + "\n")
    assert main(["check", "theta", str(path)]) == 1
    recs = _records(capsys.readouterr().out)
    assert recs[0]["theta"].startswith("theta") and recs[1]["theta"] is None


def test_check_free_reports_embedding(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text(to_edge_list(gen_H(7).graph))
    assert main(["check", "free", str(path), "--forbid", "K1,3"]) == 0
    assert main(["check", "free", str(path), "--forbid", "N1,2,3"]) == 1
    rec = _records(capsys.readouterr().out)[-1]
    assert rec["contains"] == "N1,2,3" and len(rec["embedding"]) == 9


def test_check_metrics(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text(to_graph6(complete_graph(4)) + "\n")
    assert main(["check", "metrics", str(path)]) == 0
    rec = _records(capsys.readouterr().out)[0]
    assert rec["kappa"] == 3 and rec["alpha"] == 1


def test_gen_h7_with_labels(capsys):
    assert main(["gen", "--family", "H7", "--links", "t,t,t,t", "--chain", "B(0,0)"]) == 0
    lines = capsys.readouterr().out.splitlines()
    g = from_graph6(lines[0])
    assert g.n == 14 and spanning_theta(g) is None
    assert any(line.endswith(" x_1") for line in lines[1:])


def test_gen_catalog_and_unfold_fold(tmp_path, capsys):
    assert main(["gen", "--family", "M2"]) == 0
    mfile = tmp_path / "m2.txt"
    mfile.write_text(capsys.readouterr().out)
    assert main(["unfold", str(mfile)]) == 0
    cfile = tmp_path / "c.txt"
    cfile.write_text(capsys.readouterr().out)
    assert main(["fold", str(cfile)]) == 0
    assert capsys.readouterr().out.splitlines()[0].split()[:2] == ["4", "7"]


def test_enum(capsys):
    assert main(["enum", "4", "--filter", "connected"]) == 0
    assert len(capsys.readouterr().out.split()) == 6


def test_verify_with_config_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("max_n = 7\nseed = 5\n")
    out = tmp_path / "rep.jsonl"
    assert main(["verify", "obs-p3", "--config", str(cfg), "--max-n", "6", "--out", str(out)]) == 0
    head = _records(capsys.readouterr().out)[0]
    assert head["params"] == {"max_n": 6, "seed": 5}
    assert out.read_text().startswith('{"params"')


def test_verify_failing_task_exit_code(capsys):
    # G7 at k = 4 contains an induced Z6, so the k_min + 1 sweep fails
    assert main(["verify", "counterexamples", "--k-extra", "1"]) == 1
    recs = _records(capsys.readouterr().out)
    summary = [r for r in recs if r["record"] == "summary"][0]
    assert summary["examined"] == 18 and summary["pass"] is False
    assert [r["reason"] for r in recs if r["record"] == "violation"] == ["G7(k=4): contains Z6"]


def test_usage_errors(tmp_path, capsys):
    assert main([]) == 2
    assert main(["check", "theta", str(tmp_path / "missing.txt")]) == 2
    assert main(["verify", "lemma-unfold", "--max-n", "9"]) == 2
    assert main(["gen", "--family", "G9", "--k", "3"]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("D?\n")
    assert main(["check", "theta", str(bad)]) == 2
    assert "error" in capsys.readouterr().err

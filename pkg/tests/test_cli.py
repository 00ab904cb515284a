import json

import pytest

from pathfactors.cli import main
from pathfactors.families import remark2
from pathfactors.graph import parse_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    docs = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    return code, docs, out, err


def test_analyze_triangle(capsys):
    code, [doc], _, _ = run(capsys, "analyze", "Bw", "--no-timing")
    assert code == 0
    assert doc["n"] == 3 and doc["kappa"] == 2 and doc["edges"] == 3
    assert doc["sun_toughness"]["value"] == "inf"
    assert doc["has_p3_factor"] is True
    assert doc["certificate"] == {"type": "path_factor", "paths": [[0, 1, 2]]}
    assert doc["input"]["graph6"] == "Bw"
    assert "timing_ms" not in doc


def test_analyze_remark1_family(capsys):
    code, [doc], _, _ = run(capsys, "analyze", "--family", "remark1", "--l", "1")
    assert code == 0
    assert doc["sun_toughness"]["value"] == "2/3"
    assert doc["kappa"] == 2
    assert doc["has_p3_factor"] is True
    assert "timing_ms" in doc


def test_analyze_is_deterministic(capsys):
    _, _, first, _ = run(capsys, "analyze", "--family", "petersen", "--no-timing")
    _, _, second, _ = run(capsys, "analyze", "--family", "petersen", "--no-timing")
    assert first == second


def test_malformed_input(capsys):
    code, docs, _, err = run(capsys, "analyze", "##")
    assert code == 2 and docs == []
    assert "malformed graph6" in err


def test_analyze_budget_marks_skipped(capsys):
    code, [doc], _, _ = run(capsys, "analyze", "--family", "remark2", "--m", "2", "--no-timing")
    assert code == 3
    assert set(doc["skipped"]) == {"sun_toughness", "certificate"}
    assert doc["kappa"] == 5


def test_certify_obstruction(capsys):
    code, [doc], _, _ = run(capsys, "certify", "C~")  # K4 has a factor
    assert code == 0 and doc["has_p3_factor"] is True
    code, [doc], _, _ = run(capsys, "certify", "--family", "star", "--n", "3")
    assert doc["certificate"] == {"type": "obstruction", "x": [0], "sun_count": 3}


def test_toughness_and_sigma(capsys):
    _, [doc], _, _ = run(capsys, "toughness", "--family", "star", "--n", "3")
    assert doc["value"] == "1/3" and doc["witness"] == [0]
    _, [doc], _, _ = run(capsys, "sigma", "--family", "cycle", "--n", "6")
    assert doc["value"] == 6 and doc["k"] == 3


def test_verify_deleted_remark2(capsys):
    code, [doc], _, _ = run(capsys, "verify", "deleted", "--m", "1", "--family", "remark2")
    assert code == 1
    assert doc["holds"] is False
    assert doc["removed"] == [[3, 4]]
    assert doc["obstruction"] == {"x": [0, 1, 2], "sun_count": 7}


def test_verify_critical_holds_and_budget(capsys):
    code, [doc], _, _ = run(capsys, "verify", "critical", "--l", "1", "--family", "complete", "--n", "5")
    assert code == 0 and doc["holds"] is True
    code, [doc], _, _ = run(
        capsys, "verify", "critical", "--l", "6", "--family", "complete", "--n", "14", "--budget", "10"
    )
    assert code == 3 and "skipped" in doc


def test_gen_remark2(capsys):
    code, _, out, _ = run(capsys, "gen", "--family", "remark2", "--m", "1")
    assert code == 0
    assert out.count("\n") == 1
    assert parse_graph6(out.strip()) == remark2(1)
    assert parse_graph6(out.strip()).n == 15


def test_gen_piped_into_analyze(capsys, tmp_path):
    _, _, out, _ = run(capsys, "gen", "--family", "remark1", "--l", "2")
    path = tmp_path / "r1.g6"
    path.write_text(out)
    code, [doc], _, _ = run(capsys, "analyze", str(path), "--no-timing")
    assert code == 0
    # s = (l+1)/3 = 1, still written as p/q
    assert doc["sun_toughness"]["value"] == "1/1"
    assert doc["kappa"] == 3


def test_edge_list_input(capsys, tmp_path):
    path = tmp_path / "c6.txt"
    path.write_text("6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    code, [doc], _, _ = run(capsys, "analyze", str(path), "--no-timing")
    assert code == 0 and doc["kappa"] == 2 and doc["lambda"] == 2


def test_hunt_exhaustive(capsys):
    code, [doc], _, err = run(capsys, "hunt", "--theorem", "T3", "--l", "1", "--exhaustive", "5", "--progress-every", "500")
    assert code == 0
    assert doc["counterexample_count"] == 0 and doc["total"] == 1024
    assert "graphs checked" in err


def test_hunt_requires_seed(capsys):
    code, _, _, err = run(capsys, "hunt", "--theorem", "T2", "--l", "1", "--gnp", "8", "0.5")
    assert code == 2 and "--seed" in err


def test_hunt_output_independent_of_jobs(capsys):
    args = ["hunt", "--theorem", "T5", "--m", "1", "--gnp", "8", "0.6", "--seed", "4", "--count", "30"]
    _, _, one, _ = run(capsys, *args, "--jobs", "1")
    _, _, two, _ = run(capsys, *args, "--jobs", "2")
    assert one == two


def test_missing_parameter(capsys):
    code, _, _, err = run(capsys, "verify", "critical", "Bw")
    assert code == 2 and "--l" in err
    with pytest.raises(SystemExit):
        main(["bogus"])

"""CLI dispatch, exit codes, and report determinism."""

import json

from conetower.cli import main, run, RunConfig


def _main_capture(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_tower_command_text(capsys, tmp_path):
    path = tmp_path / "tower.json"
    code, out = _main_capture(capsys, ["tower", "--k", "2", "--output", str(path)])
    assert code == 0
    assert "overall: PASS" in out
    doc = json.loads(path.read_text())
    assert doc["schema"] == "tower/1"
    assert doc["k"] == 2


def test_tower_k0_is_usage_error(capsys):
    code = main(["tower", "--k", "0"])
    assert code == 2


def test_unknown_command_is_usage_error():
    assert main(["frobnicate"]) == 2


def test_certify_json_deterministic(capsys):
    code1, out1 = _main_capture(capsys, ["certify", "--k", "2", "--format", "json"])
    code2, out2 = _main_capture(capsys, ["certify", "--k", "2", "--format", "json"])
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical reports
    doc = json.loads(out1)
    assert doc["schema"] == "cert/1"
    assert doc["status"] == "PASS"


def test_perturb_command(capsys):
    code, out = _main_capture(
        capsys, ["perturb", "--k", "1", "--N", "2", "--eps", "1", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "PASS"
    leaf_values = [
        b["outcome"].get("value")
        for b in doc["details"]["certificate"]["branches"]
        if b["verdict"] == "refuted"
    ]
    assert "-1/4" in leaf_values and "-1" in leaf_values


def test_perturb_failing_pair_exits_nonzero(capsys):
    code, out = _main_capture(
        capsys, ["perturb", "--k", "2", "--N", "3", "--eps", "1"]
    )
    assert code == 1
    assert "FAIL" in out


def test_perturb_search_command(capsys):
    code, out = _main_capture(capsys, ["perturb-search", "--k", "1", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["details"]["found"] == {"k": 1, "N": 2, "eps": "1"}


def test_normal_bundles_command(capsys):
    code, out = _main_capture(capsys, ["normal-bundles", "--k", "3", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["details"]["sequence"] == [[0, -2], [0, -2], [-1, -1]]


def test_splitting_command(capsys, tmp_path):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps([["z^2", "z"], ["0", "1"]]))
    code, out = _main_capture(capsys, ["splitting", "--matrix", str(path), "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["details"]["splitting"] == [-1, -1]


def test_splitting_rejects_non_cocycle(capsys, tmp_path):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps([["z", "0"], ["0", "z - 1"]]))
    code, out = _main_capture(capsys, ["splitting", "--matrix", str(path)])
    assert code == 1
    assert "FAIL" in out


def test_quadric_command(capsys):
    code, out = _main_capture(capsys, ["quadric", "--trials", "10", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["details"]["samples"] == 20


def test_real_slice_command(capsys):
    code, out = _main_capture(
        capsys,
        ["real-slice", "--k", "1", "--N", "2", "--eps", "1", "--samples", "50", "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["details"]["bounds"]["R4"] == "1"
    assert doc["details"]["bounds"]["coordinate_bound"] == "1/2"


def test_square_check_command(capsys):
    code, out = _main_capture(capsys, ["square-check", "--format", "json"])
    assert code == 0


def test_all_command_k1(capsys):
    code, out = _main_capture(capsys, ["all", "--k", "1", "--trials", "5", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "PASS"
    names = {c["name"] for c in doc["checks"]}
    assert any(n.startswith("normal-bundles") for n in names)
    assert any(n.startswith("lemma-square") for n in names)


def test_run_config_api():
    report = run(RunConfig(command="normal-bundles", k=1))
    assert report.status == "PASS"
    assert report.details["sequence"] == [[-1, -1]]

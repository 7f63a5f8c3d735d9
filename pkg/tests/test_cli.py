import json

import pytest

from duplexem.cli import main


def test_verify_all_deterministic(tmp_path, capsys):
    out1 = tmp_path / "run1"
    out2 = tmp_path / "run2"
    assert main(["verify-all", "--seed", "42", "--out", str(out1)]) == 0
    assert main(["verify-all", "--seed", "42", "--out", str(out2)]) == 0
    capsys.readouterr()
    assert (out1 / "verify.csv").read_bytes() == (out2 / "verify.csv").read_bytes()
    assert (out1 / "summary.json").read_bytes() == (out2 / "summary.json").read_bytes()


def test_verify_all_prints_table(tmp_path, capsys):
    assert main(["verify-all", "--seed", "7", "--out", str(tmp_path)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert any("pass" in line for line in lines)
    assert lines[-1].endswith("checks passed")


def test_dual_invariants_outputs(tmp_path, capsys):
    out = tmp_path / "dual"
    assert main(["dual-invariants", "--random", "50", "--seed", "3",
                 "--out", str(out)]) == 0
    capsys.readouterr()
    summary = json.loads((out / "summary.json").read_text())
    assert summary["passed"]
    body = (out / "dual_invariants.csv").read_text().splitlines()
    assert len(body) == 51


def test_ssh_solve_happy_path(tmp_path, capsys):
    cfg = tmp_path / "params.json"
    cfg.write_text(json.dumps({
        "t0": 1.0, "alpha1": 1.0, "alpha2": 0.15, "u": 0.1,
        "K_spring": 2.0, "N": 100, "a": 1.0, "occupation": "ground",
    }))
    out = tmp_path / "ssh"
    assert main(["ssh-solve", "--config", str(cfg), "--out", str(out)]) == 0
    capsys.readouterr()
    summary = json.loads((out / "summary.json").read_text())
    assert "q" in summary and "u0" in summary
    assert (out / "gap_solution.csv").exists()


def test_ssh_sweep_with_workers(tmp_path, capsys):
    cfg = tmp_path / "params.json"
    cfg.write_text(json.dumps({
        "t0": 1.0, "alpha1": 1.0, "alpha2": 0.15, "u": 0.1,
        "K_spring": 2.0, "N": 100, "a": 1.0,
        "u_scan": [-0.2, 0.2, 9],
    }))
    out1 = tmp_path / "serial"
    out2 = tmp_path / "parallel"
    assert main(["ssh-sweep", "--config", str(cfg), "--out", str(out1)]) == 0
    assert main(["ssh-sweep", "--config", str(cfg), "--out", str(out2),
                 "--jobs", "2"]) == 0
    capsys.readouterr()
    assert (out1 / "ground_state.csv").read_bytes() == \
        (out2 / "ground_state.csv").read_bytes()


def test_resonance_fit_inline_data(tmp_path, capsys):
    cfg = tmp_path / "res.json"
    cfg.write_text(json.dumps({
        "n": [0, 1, 2, 3, 4], "nu": [5.0, 4.99, 4.96, 4.91, 4.84],
    }))
    out = tmp_path / "res"
    assert main(["resonance-fit", "--config", str(cfg), "--out", str(out)]) == 0
    capsys.readouterr()
    summary = json.loads((out / "summary.json").read_text())
    assert summary["nu0"] == pytest.approx(5.0, abs=1e-10)
    assert summary["curvature"] == pytest.approx(0.01, abs=1e-10)


def test_unknown_config_key_exits_2(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text('{"bogus": 1}')
    assert main(["ssh-solve", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    capsys.readouterr()


def test_malformed_json_exits_2(tmp_path, capsys):
    cfg = tmp_path / "broken.json"
    cfg.write_text("{not json")
    assert main(["cavity-field", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    capsys.readouterr()


def test_cavity_field_and_quantize_and_currents(tmp_path, capsys):
    for cmd in ("cavity-field", "quantize", "currents"):
        out = tmp_path / cmd
        assert main([cmd, "--out", str(out)]) == 0
        assert (out / "summary.json").exists()
    capsys.readouterr()

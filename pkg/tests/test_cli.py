import json
import math
import subprocess
import sys

import pytest

from puptent.cli import main


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


class TestSolve:
    def test_json_report(self, capsys):
        code, out, _ = run_cli(
            ["solve", "--x", "0.25", "--y", "1.0", "--t", "0.01", "--json"], capsys
        )
        assert code == 0
        rep = json.loads(out)
        assert rep["theta_defect"] < 1e-12
        assert rep["embedding"]["verdict"] == "yes"

    def test_human_readable(self, capsys):
        code, out, _ = run_cli(["solve", "--x", "0.25", "--y", "1.0", "--t", "0.01"], capsys)
        assert code == 0
        assert "embedding: yes" in out


class TestGolden:
    def test_hex_corner_flags_collision(self, capsys):
        code, out, _ = run_cli(
            ["golden", "--x", "0.5", "--y", str(math.sqrt(3) / 2)], capsys
        )
        assert code == 0
        assert "hex-vertex" in out
        assert "[0, 7]" in out  # coincident pair

    def test_outside_domain_is_computation_error(self, capsys):
        code, _, err = run_cli(["golden", "--x", "0.7", "--y", "1.0"], capsys)
        assert code == 1
        assert "error" in err


class TestDeformProbeModulus:
    def test_deform_embedded_at_figure_parameter(self, capsys):
        code, out, _ = run_cli(
            ["deform", "--x", "0.25", "--y", "1.0", "--t", "0.125", "--json"], capsys
        )
        rep = json.loads(out)
        assert code == 0
        assert rep["embedding"]["verdict"] == "yes"

    def test_probe_table(self, capsys):
        code, out, _ = run_cli(
            ["probe", "--x", "0.25", "--y", "1.0", "--ts", "0.125,0.0625", "--json"],
            capsys,
        )
        assert code == 0
        table = json.loads(out)
        assert len(table["rows"]) == 2

    def test_modulus(self, capsys):
        code, out, _ = run_cli(
            ["modulus", "--x", "0.25", "--y", "1.0", "--json"], capsys
        )
        assert code == 0
        m = json.loads(out)
        assert m["distance_to_parameter"] < 1e-10


class TestSweep:
    def test_jsonl_output(self, tmp_path, capsys):
        out_file = tmp_path / "sweep.jsonl"
        code, _, err = run_cli(
            [
                "sweep",
                "--nx",
                "2",
                "--ny",
                "2",
                "--x-min",
                "0.2",
                "--x-max",
                "0.3",
                "--y-min",
                "1.0",
                "--y-max",
                "1.3",
                "--t",
                "0.01",
                "--out",
                str(out_file),
            ],
            capsys,
        )
        assert code == 0
        lines = out_file.read_text().strip().split("\n")
        assert len(lines) == 4
        assert all(json.loads(l)["embedded"] == "yes" for l in lines)
        assert json.loads(err)["summary"]["converged"] == 4


class TestExport:
    def test_obj(self, tmp_path, capsys):
        out_file = tmp_path / "tent.obj"
        code, _, _ = run_cli(
            ["export", "--x", "0.25", "--y", "1.0", "--t", "0.125", "--format", "obj", "--out", str(out_file)],
            capsys,
        )
        assert code == 0
        text = out_file.read_text()
        assert text.count("\nf ") + text.startswith("f ") == 16
        assert len([l for l in text.split("\n") if l.startswith("v ")]) == 8

    def test_json(self, tmp_path, capsys):
        out_file = tmp_path / "tent.json"
        code, _, _ = run_cli(
            ["export", "--x", "0.25", "--y", "1.0", "--t", "0", "--format", "json", "--out", str(out_file)],
            capsys,
        )
        assert code == 0
        rep = json.loads(out_file.read_text())
        assert rep["mode"] == "golden"


class TestUsage:
    def test_missing_subcommand_exits_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "puptent.cli"], capture_output=True, text=True
        )
        assert proc.returncode == 2

    def test_bad_flag_exits_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "puptent.cli", "golden", "--nope", "1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2

    def test_entry_point_verify_fast(self):
        proc = subprocess.run(
            [sys.executable, "-m", "puptent.cli", "verify", "--fast"],
            capture_output=True,
            text=True,
            timeout=300,
        )
        assert proc.returncode == 0, proc.stdout + proc.stderr
        assert "FAIL" not in proc.stdout

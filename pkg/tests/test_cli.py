import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from stripcoef.cli import main
from stripcoef.verify import BoundReport, VIOLATED
from stripcoef.cli import _exit_code

PI = np.pi


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "stripcoef", *args],
        capture_output=True,
        text=True,
    )
    return proc


class TestBoundsCommand:
    def test_strip_bound_value(self):
        proc = run_cli("bounds", "--alpha", "0.5", "--beta", "1.5")
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["command"] == "bounds"
        assert payload["version"]
        report = payload["reports"][0]
        assert abs(report["rhs"] - PI**2 / 96.0) < 1e-12
        assert "pi2_over_6" in report["context"]
        assert "roth" in report["context"]

    def test_dorff_bound_value(self):
        proc = run_cli("bounds", "--delta", str(PI / 2.0))
        report = json.loads(proc.stdout)["reports"][0]
        assert abs(report["rhs"] - PI**4 / 384.0) < 1e-12


class TestCoeffsCommand:
    def test_even_gammas_vanish_exactly(self):
        proc = run_cli("coeffs", "--alpha", "0.5", "--beta", "1.5", "--order", "8")
        assert proc.returncode == 0
        rows = json.loads(proc.stdout)["reports"]
        assert len(rows) == 8
        for row in rows:
            ctx = row["context"]
            if ctx["n"] % 2 == 0:
                assert ctx["gamma_re"] == 0.0
                assert ctx["gamma_im"] == 0.0
            assert ctx["slack"] >= 0.0

    def test_csv_format_round_trips(self):
        proc = run_cli(
            "coeffs", "--delta", "2.0", "--order", "8", "--output-format", "csv"
        )
        rows = list(csv.DictReader(io.StringIO(proc.stdout)))
        assert len(rows) == 8
        gamma1 = float(rows[0]["gamma_re"])
        assert abs(gamma1 - 0.5) < 1e-15
        # 17 significant digits: parse-back equals the binary value
        assert float(rows[1]["rhs"]) == 0.25


class TestVerifySharpnessCommand:
    def test_dorff_point(self):
        proc = run_cli(
            "verify-sharpness", "--delta", repr(PI / 2.0), "--order", "4096"
        )
        assert proc.returncode == 0
        report = json.loads(proc.stdout)["reports"][0]
        assert report["verdict"] == "holds-with-equality"
        assert abs(report["lhs"] - PI**4 / 384.0) <= report["tail_estimate"]

    def test_strip_point(self):
        proc = run_cli(
            "verify-sharpness", "--alpha", "0.5", "--beta", "1.5", "--order", "2048"
        )
        assert proc.returncode == 0


class TestCheckMembershipCommand:
    def test_small_sweep_passes(self):
        proc = run_cli(
            "check-membership",
            "--alpha", "0.0", "--beta", "2.0",
            "--samples", "3",
            "--order", "1500",
            "--seed", "11",
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert len(payload["reports"]) == 12  # four audits per sample
        assert all(r["verdict"] != "violated" for r in payload["reports"])

    def test_determinism_byte_identical(self):
        args = (
            "check-membership", "--delta", "2.2",
            "--samples", "2", "--order", "1500", "--seed", "42",
        )
        a, b = run_cli(*args), run_cli(*args)
        assert a.stdout == b.stdout
        assert a.stdout != ""

    def test_order_too_small_is_config_error(self):
        proc = run_cli(
            "check-membership", "--delta", "2.0", "--samples", "1", "--order", "64"
        )
        assert proc.returncode == 2
        record = json.loads(proc.stderr)
        assert record["kind"] == "config"


class TestGenerateCommand:
    def test_identity_member_matches_extremal(self, tmp_path):
        out = tmp_path / "member.csv"
        proc = run_cli(
            "generate",
            "--alpha", "0.5", "--beta", "1.5",
            "--schwarz", "identity",
            "--order", "16",
            "--output-path", str(out),
        )
        assert proc.returncode == 0
        rows = list(csv.DictReader(out.open()))
        assert [r["n"] for r in rows[:3]] == ["0", "1", "2"]
        from stripcoef.logcoef import extremal_strip
        from stripcoef.maps import StripParams

        f, _ = extremal_strip(StripParams(0.5, 1.5), 16)
        got = np.array([complex(float(r["re"]), float(r["im"])) for r in rows])
        assert np.max(np.abs(got - f.coeffs)) < 1e-16

    def test_seeded_random_member(self):
        a = run_cli("generate", "--delta", "2.0", "--order", "8", "--seed", "3")
        b = run_cli("generate", "--delta", "2.0", "--order", "8", "--seed", "3")
        assert a.stdout == b.stdout
        assert a.stdout.startswith("n,re,im")


class TestPolylogCommand:
    def test_theta_mode_reports_all_three(self):
        proc = run_cli("polylog", "--theta", repr(PI))
        assert proc.returncode == 0
        ctx = json.loads(proc.stdout)["reports"][0]["context"]
        assert abs(ctx["series_re"] - (-7.0 * PI**4 / 720.0)) < 1e-10
        assert ctx["symmetric_deviation"] < 1e-9
        assert ctx["series_vs_quadrature"] < 1e-8

    def test_point_mode(self):
        proc = run_cli("polylog", "--z-re", "0.25", "--z-im", "0.5")
        ctx = json.loads(proc.stdout)["reports"][0]["context"]
        assert ctx["series_vs_quadrature"] < 1e-8

    def test_missing_argument_is_config_error(self):
        proc = run_cli("polylog")
        assert proc.returncode == 2


class TestConfigErrors:
    def test_both_classes_rejected(self):
        proc = run_cli("bounds", "--alpha", "0.5", "--beta", "1.5", "--delta", "2.0")
        assert proc.returncode == 2
        assert json.loads(proc.stderr)["kind"] == "config"

    def test_missing_class_rejected(self):
        proc = run_cli("bounds")
        assert proc.returncode == 2

    def test_half_strip_rejected(self):
        proc = run_cli("bounds", "--alpha", "0.5")
        assert proc.returncode == 2

    def test_invalid_strip_order_rejected(self):
        proc = run_cli("bounds", "--alpha", "2.0", "--beta", "3.0")
        assert proc.returncode == 2

    def test_small_order_rejected(self):
        proc = run_cli("coeffs", "--delta", "2.0", "--order", "4")
        assert proc.returncode == 2

    def test_bad_radius_rejected(self):
        proc = run_cli("check-membership", "--delta", "2.0", "--radius", "1.5")
        assert proc.returncode == 2

    def test_unknown_command_usage_error(self):
        proc = run_cli("frobnicate")
        assert proc.returncode == 2


class TestExitCodeContract:
    def test_violated_report_forces_nonzero(self):
        ok = BoundReport(0.0, 1.0, 0.0, "holds", {})
        bad = BoundReport(2.0, 1.0, 0.0, VIOLATED, {})
        assert _exit_code([ok]) == 0
        assert _exit_code([ok, bad]) == 1

    def test_main_callable_in_process(self, capsys):
        code = main(["bounds", "--alpha", "0.5", "--beta", "1.5"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["command"] == "bounds"

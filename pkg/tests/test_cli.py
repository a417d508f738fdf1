"""CLI contract: exit codes, report schemas, determinism, config precedence."""

import json
import subprocess
import sys

import pytest

from qescal.cli import EXIT_BAD_INPUT, EXIT_CHECK_FAILED, EXIT_OK, main


def run(args):
    return main(args)


def test_spectrum_analytic_columns(tmp_path):
    assert (
        run(
            [
                "spectrum",
                "--alpha",
                "1",
                "--n-max",
                "4",
                "--grid-points",
                "900",
                "--out",
                str(tmp_path),
            ]
        )
        == EXIT_OK
    )
    data = json.loads((tmp_path / "spectrum.json").read_text())
    assert data["v_minus"]["analytic"] == ["14", "18", "22", "26", "30"]
    assert data["config"]["alpha"] == "1"
    assert max(data["v_minus"]["rel_errors"]) <= 1e-6


def test_spectrum_half_alpha(tmp_path):
    assert (
        run(
            ["spectrum", "--alpha", "0.5", "--n-max", "1", "--grid-points", "900", "--out", str(tmp_path)]
        )
        == EXIT_OK
    )
    data = json.loads((tmp_path / "spectrum.json").read_text())
    assert data["v_minus"]["analytic"] == ["12", "16"]
    assert data["v_plus"]["analytic"] == ["12", "16"]


def test_spectrum_csv_format(tmp_path):
    assert (
        run(
            [
                "spectrum",
                "--alpha",
                "1",
                "--n-max",
                "1",
                "--grid-points",
                "600",
                "--format",
                "csv",
                "--out",
                str(tmp_path),
            ]
        )
        == EXIT_OK
    )
    lines = (tmp_path / "spectrum.csv").read_text().splitlines()
    assert lines[0].startswith("# n,")
    assert len(lines) == 1 + 4  # two sectors x two levels
    wave = (tmp_path / "wave_comparison.csv").read_text().splitlines()
    assert wave[0] == "# r,v_minus,psi_numeric,psi_analytic"
    assert len(wave) == 1 + 600
    # numeric and analytic columns describe the same unit-norm state
    num_col = [float(line.split(",")[2]) for line in wave[1:]]
    ana_col = [float(line.split(",")[3]) for line in wave[1:]]
    dot = sum(a * b for a, b in zip(num_col, ana_col))
    assert dot == pytest.approx(1.0, abs=1e-5)


def test_verify_passes_on_tuned_parameters(tmp_path):
    assert run(["verify", "--alpha", "1", "--n-max", "3", "--out", str(tmp_path)]) == EXIT_OK
    data = json.loads((tmp_path / "verify.json").read_text())
    assert data["all_passed"] is True
    names = {rec["name"] for rec in data["checks"]}
    assert {
        "factorization_w2_pm_wprime",
        "exceptional_form_identity",
        "ladder_pipeline",
        "schrodinger_residual_symbolic",
        "orthonormality",
        "susy_phase",
        "pct_vminus_comparison",
        "ground_state_simplification",
    } <= names


def test_verify_detunes_to_failure(tmp_path):
    # breaking the conditional constraint must break the factorization checks
    assert (
        run(
            ["verify", "--alpha", "1", "--n-max", "2", "--detune-g1", "1.01", "--out", str(tmp_path)]
        )
        == EXIT_CHECK_FAILED
    )
    data = json.loads((tmp_path / "verify.json").read_text())
    by_name = {rec["name"]: rec for rec in data["checks"]}
    assert not by_name["factorization_w2_pm_wprime"]["passed"]
    assert not by_name["schrodinger_residual_symbolic"]["passed"]
    assert by_name["ground_state_simplification"]["passed"]


def test_invalid_inputs_exit_two(tmp_path):
    assert run(["verify", "--alpha", "-1"]) == EXIT_BAD_INPUT
    assert run(["spectrum", "--alpha", "nonsense"]) == EXIT_BAD_INPUT
    assert run(["manybody", "--N", "5"]) == EXIT_BAD_INPUT
    assert run(["pkq", "--g", "-0.75"]) == EXIT_BAD_INPUT
    assert run(["frobnicate"]) == EXIT_BAD_INPUT


def test_pkq_dimensions(tmp_path):
    assert run(["pkq", "--N", "3", "--k", "0", "--out", str(tmp_path)]) == EXIT_OK
    data = json.loads((tmp_path / "pkq_N3_k0.json").read_text())
    assert data["dimension"] == 1
    assert data["basis"] == [{"0,0,0": "1"}]

    assert run(["pkq", "--N", "3", "--k", "1", "--out", str(tmp_path)]) == EXIT_OK
    assert json.loads((tmp_path / "pkq_N3_k1.json").read_text())["dimension"] == 0

    assert run(["pkq", "--N", "3", "--k", "3", "--out", str(tmp_path)]) == EXIT_OK
    assert json.loads((tmp_path / "pkq_N3_k3.json").read_text())["dimension"] == 1


def test_manybody_qes_and_baseline(tmp_path):
    assert (
        run(
            ["manybody", "--N", "2", "--k", "0", "--n", "0", "--alpha", "1", "--out", str(tmp_path)]
        )
        == EXIT_OK
    )
    data = json.loads((tmp_path / "manybody.json").read_text())
    assert data["energy"] == "14"
    assert data["report"]["max_rel_residual"] <= 1e-5

    assert (
        run(
            [
                "manybody",
                "--N",
                "3",
                "--k",
                "0",
                "--n",
                "2",
                "--alpha",
                "1",
                "--baseline",
                "--out",
                str(tmp_path),
            ]
        )
        == EXIT_OK
    )
    data = json.loads((tmp_path / "manybody.json").read_text())
    assert data["kind"] == "harmonic"


def test_manybody_qes_energy_n2(tmp_path):
    assert (
        run(
            ["manybody", "--N", "3", "--k", "0", "--n", "2", "--alpha", "1", "--out", str(tmp_path)]
        )
        == EXIT_OK
    )
    data = json.loads((tmp_path / "manybody.json").read_text())
    assert data["energy"] == "22"


def test_dump_tables(tmp_path):
    assert (
        run(
            [
                "dump",
                "--alpha",
                "1",
                "--n",
                "0",
                "--r-max",
                "6",
                "--grid-points",
                "120",
                "--out",
                str(tmp_path),
            ]
        )
        == EXIT_OK
    )
    waves = (tmp_path / "waves.csv").read_text().splitlines()
    assert waves[0] == "# r,chi_plus_0,chi_minus_0"
    for line in waves[1:]:
        r, plus, minus = (float(tok) for tok in line.split(","))
        assert minus > 0  # nodeless ground state

    potentials = (tmp_path / "potentials.csv").read_text().splitlines()
    rows = [[float(tok) for tok in line.split(",")] for line in potentials[1:]]
    vminus_col = [row[2] for row in rows]
    # minimum of the tabulated column agrees with direct evaluation at that radius
    lowest = min(range(len(rows)), key=lambda i: vminus_col[i])
    from qescal.susy import make_params, partner_potential

    assert vminus_col[lowest] == partner_potential(make_params(1), "minus", rows[lowest][0])


def test_csv_round_trip_is_bit_exact(tmp_path):
    run(
        [
            "dump",
            "--alpha",
            "1",
            "--n",
            "1",
            "--r-max",
            "5",
            "--grid-points",
            "64",
            "--out",
            str(tmp_path),
        ]
    )
    from qescal.susy import chi_plus, make_params

    wave = chi_plus(make_params(1), 1)
    for line in (tmp_path / "waves.csv").read_text().splitlines()[1:]:
        r_text, plus_text, _ = line.split(",")
        assert float(plus_text) == wave(float(r_text))  # repr round-trips exactly


def test_config_file_with_flag_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("alpha = 2\nn-max = 1\ngrid-points = 600\n")
    out = tmp_path / "out"
    assert (
        run(["spectrum", "--config", str(cfg), "--alpha", "1", "--out", str(out)]) == EXIT_OK
    )
    data = json.loads((out / "spectrum.json").read_text())
    assert data["config"]["alpha"] == "1"  # flag wins
    assert data["config"]["n_max"] == 1  # file value survives
    assert data["config"]["grid_points"] == 600


def test_reports_are_deterministic(tmp_path):
    args = ["spectrum", "--alpha", "1", "--n-max", "2", "--grid-points", "700", "--out", str(tmp_path)]
    run(args)
    first = (tmp_path / "spectrum.json").read_bytes()
    run(args)
    assert (tmp_path / "spectrum.json").read_bytes() == first


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qescal.cli", "verify", "--alpha", "-2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_BAD_INPUT
    assert "alpha" in proc.stderr

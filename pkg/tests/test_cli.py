import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

from imagewell.cli import main

GOLDEN_CONVERGENCE_CSV = """\
terms,potential
20,-0.69258092698495177
200,-0.69314099267087892
2000,-0.69314711812240626
closed,-0.69314718055996405
"""


@pytest.fixture
def runner():
    return CliRunner()


def parse_csv(text):
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


def test_convergence_golden_bytes(runner):
    result = runner.invoke(main, ["convergence"])
    assert result.exit_code == 0
    assert result.output == GOLDEN_CONVERGENCE_CSV


def test_convergence_json_schema(runner):
    result = runner.invoke(main, ["convergence", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert set(payload) == {"rows", "closed_form"}
    assert [r["terms"] for r in payload["rows"]] == [20, 200, 2000]
    assert payload["rows"][0]["potential"] == pytest.approx(-0.6925809270, abs=1e-9)
    assert payload["closed_form"] == pytest.approx(-0.6931471806, abs=1e-9)


def test_convergence_domain_error(runner):
    result = runner.invoke(main, ["convergence", "--x", "1.5", "--L", "1.0"])
    assert result.exit_code == 2
    assert "between the planes" in result.stderr


def test_potential_columns_and_symmetry(runner):
    result = runner.invoke(main, ["potential", "--L", "2.0", "--samples", "9"])
    assert result.exit_code == 0
    header, rows = parse_csv(result.output)
    assert header == ["x", "closed", "closed_no_2gamma", "first_image"]
    assert len(rows) == 9
    closed = [float(r[1]) for r in rows]
    first = [float(r[3]) for r in rows]
    assert closed == pytest.approx(closed[::-1], rel=1e-13)  # symmetric samples
    assert all(f < c for f, c in zip(first, closed))


def test_solve_published_values(runner):
    result = runner.invoke(main, ["solve", "--L", "1", "--M", "100", "--n-states", "10"])
    assert result.exit_code == 0
    header, rows = parse_csv(result.output)
    assert header == ["N", "energy", "defect", "pib"]
    assert float(rows[0][1]) == pytest.approx(4.0122415062, rel=1e-8)
    assert float(rows[0][2]) == pytest.approx(0.0983071, abs=1e-5)
    assert float(rows[0][3]) == pytest.approx(math.pi**2 / 2, rel=1e-12)


def test_solve_rejects_excess_states(runner):
    result = runner.invoke(main, ["solve", "--L", "1", "--M", "4", "--n-states", "5"])
    assert result.exit_code == 2
    assert "n_states" in result.stderr


def test_solve_states_need_output_path(runner):
    result = runner.invoke(main, ["solve", "--L", "1", "--M", "20", "--states"])
    assert result.exit_code == 2
    assert "--output" in result.stderr


def test_solve_states_files(runner, tmp_path):
    out = tmp_path / "solve.csv"
    result = runner.invoke(main, [
        "solve", "--L", "1", "--M", "20", "--n-states", "3",
        "--states", "--output", str(out)])
    assert result.exit_code == 0
    assert out.exists()
    header, rows = parse_csv((tmp_path / "solve_states.csv").read_text())
    assert header == ["x", "psi_1", "psi_2", "psi_3"]
    assert len(rows) == 21
    assert [float(v) for v in rows[0][1:]] == [0.0, 0.0, 0.0]
    assert [float(v) for v in rows[-1][1:]] == [0.0, 0.0, 0.0]
    assert float(rows[0][0]) == 0.5 and float(rows[-1][0]) == -0.5


def test_solve_json_record(runner):
    result = runner.invoke(main, [
        "solve", "--L", "1", "--M", "30", "--n-states", "2", "--format", "json"])
    payload = json.loads(result.output)
    assert payload["M"] == 30 and payload["trusted_count"] == 15
    assert payload["parities"] == ["even", "odd"]
    assert len(payload["defects"]) == 2 and len(payload["pib"]) == 2
    assert "states" not in payload


def test_sweep_box_markers_and_consistency(runner):
    result = runner.invoke(main, [
        "sweep", "--L", "1", "--L", "2", "--n-states", "3", "--M", "100"])
    header, rows = parse_csv(result.output)
    assert header == ["L", "M", "E1", "E2", "E3", "pib1", "pib2", "pib3"]
    for row in rows:
        L = float(row[0])
        for n in (1, 2, 3):
            assert float(row[4 + n]) == pytest.approx(0.5 * (math.pi * n / L) ** 2,
                                                      rel=1e-12)
    solo = runner.invoke(main, ["solve", "--L", "1", "--M", "100", "--n-states", "3"])
    energies = [float(r[1]) for r in parse_csv(solo.output)[1]]
    assert [float(v) for v in rows[0][2:5]] == energies


def test_sweep_log_range(runner):
    result = runner.invoke(main, [
        "sweep", "--L-min", "1", "--L-max", "100", "--num", "5",
        "--n-states", "1", "--M", "64", "--format", "json"])
    payload = json.loads(result.output)
    Ls = [p["L"] for p in payload["points"]]
    assert len(Ls) == 5 and Ls[0] == 1.0 and Ls[-1] == pytest.approx(100.0)
    ratios = [b / a for a, b in zip(Ls, Ls[1:])]
    assert all(r == pytest.approx(ratios[0], rel=1e-12) for r in ratios)


def test_splitting_columns(runner):
    result = runner.invoke(main, ["splitting", "--L", "20", "--L", "30", "--M", "100"])
    header, rows = parse_csv(result.output)
    assert header == ["L", "dE_numeric", "dE_analytic_abs", "dE_analytic_signed"]
    for row in rows:
        assert float(row[2]) == abs(float(row[3]))
        assert float(row[1]) > 0.0
    # past the sign change at L = 8 the signed estimate is negative
    assert float(rows[0][3]) < 0.0


def test_waveforms_files(runner, tmp_path):
    result = runner.invoke(main, [
        "waveforms", "--L", "1", "--L", "20", "--M", "80",
        "--output", str(tmp_path)])
    assert result.exit_code == 0
    meta = json.loads((tmp_path / "waveforms_meta.json").read_text())
    assert [run["L"] for run in meta["runs"]] == [1.0, 20.0]
    assert meta["runs"][0]["parities"] == ["even", "odd"]
    header, rows = parse_csv((tmp_path / "waveforms_L1.csv").read_text())
    assert header == ["x", "psi_1", "psi_2"]
    assert len(rows) == 81
    psi1 = np.array([float(r[1]) for r in rows])
    psi2 = np.array([float(r[2]) for r in rows])
    assert psi1[0] == psi1[-1] == 0.0
    # ground state has no interior sign change, first excited exactly one
    def sign_changes(psi):
        core = psi[np.abs(psi) > 1e-9 * np.abs(psi).max()]
        return int(np.sum(np.diff(np.sign(core)) != 0))
    assert sign_changes(psi1) == 0
    assert sign_changes(psi2) == 1


def test_limits_desk_scale(runner):
    result = runner.invoke(main, [
        "limits", "--L", "10000", "--M", "600", "--n-states", "10"])
    header, rows = parse_csv(result.output)
    assert header == ["n", "calculated", "limiting"]
    for i, row in enumerate(rows):
        want = -1.0 / (32.0 * ((i // 2) + 1) ** 2)
        assert float(row[2]) == want
        assert float(row[1]) == pytest.approx(want, rel=1e-4)


def test_output_dir_env(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("IMAGEWELL_OUTPUT_DIR", str(tmp_path))
    result = runner.invoke(main, ["convergence"])
    assert result.exit_code == 0
    assert (tmp_path / "convergence.csv").read_text() == GOLDEN_CONVERGENCE_CSV


def test_identical_config_is_byte_identical(runner, tmp_path):
    args = ["solve", "--L", "3.5", "--M", "60", "--n-states", "4"]
    first = runner.invoke(main, args + ["--output", str(tmp_path / "a.csv")])
    second = runner.invoke(main, args + ["--output", str(tmp_path / "b.csv")])
    assert first.exit_code == second.exit_code == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_solver_failure_exit_code(runner, monkeypatch):
    def boom(matrix):
        raise np.linalg.LinAlgError("Eigenvalues did not converge")
    monkeypatch.setattr(np.linalg, "eig", boom)
    result = runner.invoke(main, ["solve", "--L", "1", "--M", "20"])
    assert result.exit_code == 3
    assert "solver failure" in result.stderr

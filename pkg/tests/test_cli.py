"""Command line interface: config handling, subcommands, exit codes, file formats."""

import json
import subprocess
import sys

import pytest

from siegert import cli

DS = "delta-shell:10,1"
SW = "square-well:-5,3"
DB = "double-barrier:1,0.1"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- analytic

def test_analytic_square_well_table(capsys):
    code, out, err = run_cli(capsys, "analytic", "--potential", SW,
                             "--nmax", "9", "--no-header")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert lines[0].split() == ["n", "e_real", "gamma", "method"]
    rows = [ln.split() for ln in lines[1:]]
    assert [r[0] for r in rows] == ["7", "8", "9"]
    assert rows[0][1] == "1.71681"
    assert all(r[3] == "closed-form" for r in rows)


def test_analytic_delta_shell_reports(capsys, tmp_path):
    out_json = tmp_path / "approx.json"
    code, _, _ = run_cli(capsys, "analytic", "--potential", DS, "--no-header",
                         "--out", str(out_json))
    assert code == 0
    doc = json.loads(out_json.read_text())
    assert set(doc) == {"potential", "units", "resonances"}
    row = doc["resonances"][0]
    assert set(row) == {"n", "e_real", "gamma", "method", "residual"}
    assert row["e_real"] == pytest.approx(4.481, abs=1e-3)
    assert row["gamma"] == pytest.approx(0.124, abs=1e-3)
    assert row["residual"] is None

    code, _, _ = run_cli(capsys, "analytic", "--potential", DS, "--mode", "exact",
                         "--no-header", "--out", str(out_json))
    assert code == 0
    row = json.loads(out_json.read_text())["resonances"][0]
    assert row["e_real"] == pytest.approx(4.487123, abs=1e-4)
    assert row["gamma"] == pytest.approx(0.123084, abs=1e-4)
    assert row["method"] == "newton"
    assert row["residual"] < 1e-10


def test_analytic_square_well_exact_unsupported(capsys):
    code, _, err = run_cli(capsys, "analytic", "--potential", SW, "--mode", "exact")
    assert code == 1
    assert err.startswith("error:")


def test_analytic_family_mismatch(capsys):
    code, _, err = run_cli(capsys, "analytic", "--potential", SW,
                           "--family", "delta-shell")
    assert code == 1 and "does not match" in err


# ------------------------------------------------------------------- solve

def test_solve_square_well_json_and_trace(capsys, tmp_path):
    out_json = tmp_path / "res.json"
    trace_csv = tmp_path / "trace.csv"
    code, out, _ = run_cli(capsys, "solve", "--potential", SW,
                           "--emin", "1.5", "--emax", "2.0", "--nx", "2000",
                           "--no-header", "--out", str(out_json),
                           "--trace", str(trace_csv))
    assert code == 0
    assert f"wrote {out_json}" in out and f"wrote {trace_csv}" in out

    doc = json.loads(out_json.read_text())
    assert set(doc) == {"potential", "units", "resonances"}
    row = doc["resonances"][0]
    assert row["n"] == 1
    assert row["e_real"] == pytest.approx(1.716814, abs=1e-3)
    assert row["method"] == "symmetric-shooting"
    assert abs(row["residual"]) < 1e-6

    lines = trace_csv.read_text().strip().splitlines()
    assert lines[0] == "x,re_psi,im_psi,abs2_psi"
    xs = [float(ln.split(",")[0]) for ln in lines[1:]]
    assert xs[0] == pytest.approx(-3.0) and xs[-1] == pytest.approx(3.0)
    assert xs == sorted(xs)
    # mirrored trace: |psi|^2 is even in x
    a2 = [float(ln.split(",")[3]) for ln in lines[1:]]
    assert a2[0] == pytest.approx(a2[-1], rel=1e-12)
    assert a2[len(a2) // 4] == pytest.approx(a2[-1 - len(a2) // 4], rel=1e-12)


def test_solve_rows_csv(capsys, tmp_path):
    out_csv = tmp_path / "rows.csv"
    code, _, _ = run_cli(capsys, "solve", "--potential", SW,
                         "--emin", "1.5", "--emax", "2.0", "--nx", "2000",
                         "--no-header", "--format", "csv", "--out", str(out_csv))
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "n,e_real,gamma,method,residual"
    cells = lines[1].split(",")
    assert cells[0] == "1" and cells[3] == "symmetric-shooting"
    assert float(cells[1]) == pytest.approx(1.716814, abs=1e-3)


def test_solve_no_resonance_exit_2(capsys):
    code, _, err = run_cli(capsys, "solve", "--potential", DB,
                           "--emin", "0.01", "--emax", "0.05", "--nx", "10000")
    assert code == 2
    assert err.startswith("error:")


def test_solve_one_sided_row(capsys, tmp_path):
    out_json = tmp_path / "ds.json"
    code, _, _ = run_cli(capsys, "solve", "--potential", DS,
                         "--emin", "3.0", "--emax", "6.0", "--nx", "4000",
                         "--no-header", "--out", str(out_json))
    assert code == 0
    row = json.loads(out_json.read_text())["resonances"][0]
    assert row["method"] == "one-sided"
    assert row["e_real"] == pytest.approx(4.479, abs=5e-3)


# ---------------------------------------------------------------- transmission

def test_transmission_square_well(capsys, tmp_path):
    out_csv = tmp_path / "curve.csv"
    code, out, _ = run_cli(capsys, "transmission", "--potential", SW,
                           "--emin", "1.5", "--emax", "2.0", "--nx", "2000",
                           "--npoints", "80", "--no-header",
                           "--format", "csv", "--out", str(out_csv))
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "energy,t2,r2"
    assert len(lines) == 81
    table = out.strip().splitlines()
    assert table[0].split() == ["peak", "e_peak", "t2", "width"]
    first_peak = table[1].split()
    assert float(first_peak[1]) == pytest.approx(1.716814, abs=1e-3)
    assert float(first_peak[2]) == pytest.approx(1.0, abs=1e-3)


def test_transmission_rejects_hard_wall(capsys):
    code, _, err = run_cli(capsys, "transmission", "--potential", DS)
    assert code == 1 and err.startswith("error:")


# ------------------------------------------------------------- config plumbing

def test_dump_config_round_trip(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "solve", "--potential", SW, "--emin", "0.5",
                           "--emax", "1.5", "--dump-config")
    assert code == 0
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(out)
    code, out2, _ = run_cli(capsys, "solve", "--config", str(cfg_file),
                            "--dump-config")
    assert code == 0
    assert out2 == out


def test_config_file_drives_solver(capsys, tmp_path):
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps({
        "potential": {"family": "square-well", "v0": -5.0, "half_width": 3.0},
        "grid": {"n_steps": 2000},
        "scan": {"e_min": 1.5, "e_max": 2.0},
    }))
    code, out, _ = run_cli(capsys, "solve", "--config", str(cfg_file), "--no-header")
    assert code == 0
    row = out.strip().splitlines()[1].split()
    assert float(row[1]) == pytest.approx(1.716814, abs=1e-3)
    assert float(row[3]) == pytest.approx(0.5 * float(row[2]), rel=1e-4)


def test_unknown_config_key_rejected(capsys, tmp_path):
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps({"potential": {"family": "square-well",
                                                  "v0": -5.0, "half_width": 3.0},
                                    "grids": {"n_steps": 2000}}))
    code, _, err = run_cli(capsys, "solve", "--config", str(cfg_file))
    assert code == 1 and "grids" in err


def test_missing_potential_rejected(capsys):
    code, _, err = run_cli(capsys, "solve", "--emin", "0.5", "--emax", "1.0")
    assert code == 1 and "potential" in err


@pytest.mark.parametrize("spec", ["square-well:abc,3", "triangle:1,2",
                                  "square-well:1", "square-well"])
def test_bad_potential_shorthand(capsys, spec):
    code, _, err = run_cli(capsys, "solve", "--potential", spec)
    assert code == 1 and err.startswith("error:")


def test_bad_flag_exits_1_not_2(capsys):
    code, _, err = run_cli(capsys, "solve", "--potental", SW)
    assert code == 1


def test_invalid_scan_window(capsys):
    code, _, err = run_cli(capsys, "solve", "--potential", SW,
                           "--emin", "2.0", "--emax", "1.0")
    assert code == 1


def test_newton_failure_exit_3(capsys, tmp_path):
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps({
        "potential": {"family": "delta-shell", "strength": 10.0, "radius": 1.0},
        "tolerances": {"newton_tol": 1e-30},
    }))
    code, _, err = run_cli(capsys, "analytic", "--config", str(cfg_file),
                           "--mode", "exact")
    assert code == 3
    assert err.startswith("error:")


# ------------------------------------------------------------------ output form

def test_header_and_determinism(capsys):
    code, out, _ = run_cli(capsys, "analytic", "--potential", DS)
    assert code == 0
    assert out.splitlines()[0].startswith("# siegert analytic")

    runs = [run_cli(capsys, "analytic", "--potential", DS, "--no-header")[1]
            for _ in range(2)]
    assert runs[0] == runs[1]
    assert not runs[0].startswith("#")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "siegert.cli", "analytic",
         "--potential", DS, "--no-header"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert "closed-form" in proc.stdout

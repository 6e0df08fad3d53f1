"""Shooting solvers: bracketing, bisection, one-sided residual minimization."""

import numpy as np
import pytest

import siegert as sg

# converged zeros of the symmetry criterion for the reference double barrier
# (independent fine-grained scan + bisection to 1e-9)
DB_CRITERION_ZEROS = (0.4601473, 1.2804424, 1.8773950)
DB_HALF_WIDTHS = (9.627949e-07, 1.7005264e-03, 7.2439412e-02)


def test_bracket_validation():
    with pytest.raises(sg.BracketError):
        sg.Bracket(1.0, 0.5, -1.0, 1.0)
    with pytest.raises(sg.BracketError):
        sg.Bracket(0.5, 1.0, 1.0, 2.0)
    b = sg.Bracket(0.5, 1.0, 1.0, -2.0)
    assert b.e_lo == 0.5


def test_bracket_scan_finds_all_three(db_potential, db_half_grid):
    brackets = sg.bracket_scan(db_potential, 0.1, 2.0, db_half_grid)
    assert len(brackets) == 3
    for b, zero in zip(brackets, DB_CRITERION_ZEROS):
        assert b.e_lo < zero < b.e_hi


def test_bracket_scan_empty_window(db_potential, db_half_grid):
    assert sg.bracket_scan(db_potential, 0.01, 0.05, db_half_grid) == []
    with pytest.raises(sg.NoResonanceError):
        sg.find_resonances(db_potential, 0.01, 0.05, grid=db_half_grid)
    with pytest.raises(ValueError):
        sg.bracket_scan(db_potential, -1.0, 2.0, db_half_grid)


def test_double_barrier_resonances_frozen(db_resonances):
    assert len(db_resonances) == 3
    for res, zero, hw in zip(db_resonances, DB_CRITERION_ZEROS, DB_HALF_WIDTHS):
        assert res.energy.e_real == pytest.approx(zero, abs=1e-5)
        assert res.energy.gamma_half == pytest.approx(hw, rel=5e-4)
        assert res.method == "symmetric-shooting"
        lo, hi = res.diagnostics["bracket"]
        assert lo <= res.energy.e_real <= hi
        assert res.diagnostics["iterations"] > 0


def test_solve_symmetric_square_well():
    p = sg.square_well(-5.0, 3.0)
    g = sg.half_domain_grid(p, 10000)
    closed = sg.square_well_resonances(-5.0, 3.0, n_max=7)[0]
    res = sg.find_resonances(p, 1.5, 2.0, grid=g)
    assert len(res) == 1
    assert res[0].energy.e_real == pytest.approx(closed.e_real, abs=1e-5)
    assert res[0].energy.gamma == pytest.approx(closed.gamma, rel=1e-3)


def test_solve_symmetric_rejects_walls():
    ds = sg.delta_shell(10.0, 1.0)
    with pytest.raises(sg.ConfigurationError):
        sg.find_resonances(ds, 3.0, 6.0)


def test_criterion_insensitive_to_start_amplitude(db_potential, db_half_grid):
    brackets = sg.bracket_scan(db_potential, 0.4, 0.5, db_half_grid)
    assert len(brackets) == 1
    runs = [sg.solve_symmetric(db_potential, brackets[0], db_half_grid,
                               init_amp=amp) for amp in (1e-4, 1e-2)]
    assert runs[0].energy.e_real == pytest.approx(runs[1].energy.e_real, abs=2e-5)
    # the width is exactly homogeneous in the trace amplitude
    assert runs[0].energy.gamma == pytest.approx(runs[1].energy.gamma, rel=1e-9)


def test_one_sided_frozen():
    p = sg.delta_shell(10.0, 1.0)
    res = sg.solve_one_sided(p, 3.0, 6.0)
    assert res.method == "one-sided"
    assert res.energy.e_real == pytest.approx(4.479153, abs=5e-5)
    assert res.energy.gamma_half == pytest.approx(0.062506, rel=1e-3)
    assert res.diagnostics["residual"] < 1e-8


def test_one_sided_second_resonance():
    p = sg.delta_shell(10.0, 1.0)
    g = sg.open_side_grid(p, 4000)
    res = sg.solve_one_sided(p, 15.0, 20.0, grid=g, n_scan=600)
    assert res.energy.e_real == pytest.approx(17.95277, abs=1e-3)
    approx = sg.delta_shell_approx(10.0, 1.0, n=2)
    assert abs(res.energy.e_real - approx.e_real) / approx.e_real < 5e-3


def test_one_sided_no_resonance_window():
    p = sg.delta_shell(10.0, 1.0)
    with pytest.raises(sg.NoResonanceError):
        sg.solve_one_sided(p, 0.5, 1.0)


def test_one_sided_needs_wall():
    p = sg.square_well(-5.0, 3.0)
    with pytest.raises(sg.ConfigurationError):
        sg.solve_one_sided(p, 1.0, 2.0)


def test_outgoing_residual_dips_at_exact_root():
    p = sg.delta_shell(10.0, 1.0)
    # real part of the exact complex root: the residual is small there but
    # not zero, since the true root sits off the real axis
    r_exact = sg.outgoing_residual(p, 4.487123)
    assert r_exact == pytest.approx(0.0165, abs=2e-3)
    assert r_exact < 0.05
    assert sg.outgoing_residual(p, 3.5) > r_exact


def test_symmetry_criterion_changes_sign(db_potential, db_half_grid):
    lo = sg.symmetry_criterion(db_potential, 0.45, db_half_grid)
    hi = sg.symmetry_criterion(db_potential, 0.47, db_half_grid)
    assert lo * hi < 0

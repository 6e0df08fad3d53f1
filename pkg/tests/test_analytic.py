"""Closed-form resonance tables and the exact delta-shell root."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import siegert as sg


def test_square_well_levels_frozen():
    rows = sg.square_well_resonances(-5.0, 3.0, n_max=9)
    assert [r.n for r in rows] == [7, 8, 9]
    e7 = rows[0]
    assert e7.e_real == pytest.approx(1.71681411, abs=1e-8)
    assert e7.gamma == pytest.approx(0.983862, abs=1e-6)
    assert rows[1].e_real == pytest.approx(3.772982, abs=1e-6)


def test_square_well_positivity_threshold():
    # levels below the continuum edge are bound states, not resonances
    rows = sg.square_well_resonances(-5.0, 3.0, n_max=20)
    assert all(r.e_real > 0 for r in rows)
    assert min(r.n for r in rows) == 7


def test_square_well_level_formula_units():
    u = sg.Units(hbar=2.0, mass=3.0)
    rows = sg.square_well_resonances(-1.0, 2.0, units=u, n_max=6)
    for r in rows:
        expected = -1.0 + u.hbar**2 * math.pi**2 * r.n**2 / (8.0 * u.mass * 4.0)
        assert r.e_real == pytest.approx(expected, rel=1e-12)


def test_delta_shell_approx_frozen():
    r = sg.delta_shell_approx(10.0, 1.0)
    assert r.n == 1
    assert r.e_real == pytest.approx(4.480912, abs=2e-6)
    assert r.gamma / 2 == pytest.approx(0.0620395, abs=5e-6)
    assert r.detuning == pytest.approx(-0.147962, abs=2e-6)


def test_delta_shell_approx_regime_warning():
    with pytest.warns(UserWarning):
        sg.delta_shell_approx(1.0, 1.0, n=2)


def test_delta_shell_exact_frozen():
    en = sg.delta_shell_exact(10.0, 1.0)
    assert en.e_real == pytest.approx(4.487123, abs=2e-6)
    assert en.gamma_half == pytest.approx(0.061542, abs=2e-6)
    k = sg.complex_wavenumber(en)
    assert abs(sg.delta_shell_dispersion(k, 10.0, 1.0)) < 1e-10
    assert en.as_complex.imag < 0


def test_delta_shell_exact_unreachable_tolerance():
    with pytest.raises(sg.ConvergenceError):
        sg.delta_shell_exact(10.0, 1.0, tol=1e-30)


def test_opaque_limit_closes_the_box():
    # an impenetrable shell turns the resonance into the particle-in-a-box
    # level with vanishing width
    lam = 1e6
    approx = sg.delta_shell_approx(lam, 1.0)
    exact = sg.delta_shell_exact(lam, 1.0)
    box = 0.5 * math.pi**2
    assert abs(approx.e_real - box) / box < 1e-5
    assert abs(exact.e_real - approx.e_real) < 1e-6
    assert exact.gamma < 1e-10


@settings(max_examples=20)
@given(lam=st.floats(5.0, 50.0), radius=st.floats(0.5, 2.0))
def test_exact_close_to_approx_in_regime(lam, radius):
    approx = sg.delta_shell_approx(lam, radius)
    exact = sg.delta_shell_exact(lam, radius)
    assert exact.gamma > 0
    assert abs(exact.e_real - approx.e_real) / approx.e_real < 0.05


def test_dispersion_closed_form_value():
    # spot value: f(k) = k cos(kL) + (2 lam - i k) sin(kL)
    k = 1.5 + 0.0j
    lam, L = 3.0, 2.0
    expected = k * cmath.cos(k * L) + (2.0 * lam - 1j * k) * cmath.sin(k * L)
    assert sg.delta_shell_dispersion(k, lam, L) == pytest.approx(expected)


def test_wavenumber_detuning_consistency():
    # e_real of the approx row must equal the detuned wavenumber energy
    r = sg.delta_shell_approx(10.0, 1.0)
    k = math.pi + r.detuning
    assert r.e_real == pytest.approx(0.5 * k * k, rel=1e-12)

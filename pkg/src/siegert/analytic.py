"""Closed-form resonance solutions for the exactly solvable families.

These serve as oracles for the numeric solvers: the square well has fully
explicit energies and widths, and the delta shell has both a perturbative
closed form and an exact complex dispersion relation solvable by Newton
iteration.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .core import NATURAL, ComplexEnergy, Units
from .errors import ConvergenceError, SpuriousRootError


@dataclass(frozen=True)
class AnalyticResonance:
    """One closed-form resonance; detuning is the delta-shell momentum shift."""

    n: int
    e_real: float
    gamma: float
    detuning: float | None = None


def square_well_resonances(v0: float, half_width: float, units: Units = NATURAL,
                           n_max: int = 20) -> list[AnalyticResonance]:
    """Above-threshold resonances of the open square well.

    The transmission-resonance condition pins the inside momentum at
    q_n = n pi / (2 L), giving

        E_n = v0 + hbar^2 pi^2 n^2 / (8 m L^2)

    and the outflow-over-norm width

        gamma_n = (2 hbar / L) sqrt(2/m) sqrt(E_n) (E_n - v0) / (2 E_n - v0).

    Only levels with E_n > 0 are resonances; lower ones are bound-like.
    """
    if v0 >= 0:
        raise ValueError(f"square well depth must be negative, got {v0}")
    if half_width <= 0 or n_max < 1:
        raise ValueError("need half_width > 0 and n_max >= 1")
    hbar, m = units.hbar, units.mass
    L = half_width
    out = []
    for n in range(1, n_max + 1):
        e_n = v0 + hbar**2 * math.pi**2 * n**2 / (8.0 * m * L**2)
        if e_n <= 0:
            continue
        gamma = (2.0 * hbar / L) * math.sqrt(2.0 / m) * math.sqrt(e_n) * (e_n - v0) / (2.0 * e_n - v0)
        out.append(AnalyticResonance(n, e_n, gamma))
    return out


def delta_shell_approx(strength: float, radius: float, n: int = 1,
                       units: Units = NATURAL) -> AnalyticResonance:
    """Perturbative resonance of the walled delta shell near the closed-box level.

    Writing k = n pi / L + delta and expanding the real part of the dispersion
    relation to second order in delta*L gives

        delta = u - sqrt(u^2 + 2/L^2),   u = (2 strength L + 1) / (n pi L).

    The width follows from the outflow formula with psi = sin(kx) inside:

        gamma/2 = hbar^2 k |psi(L)|^2 / (2 m int_0^L sin^2(kx) dx)
                = 2 hbar^2 k^2 sin^2(delta L) / (m (2 k L - sin(2 delta L)))

    using int_0^L sin^2(kx) dx = (2kL - sin(2 delta L)) / (4k), since
    sin(2kL) = sin(2 delta L) at these k.  A denominator of the form
    n pi + delta L - sin(2 delta L) is sometimes quoted for this system; it is
    inconsistent with that integral (it reproduces neither the integral's
    value nor the exact dispersion root) and is not used here.

    Valid deep in the opaque-barrier regime strength * L >> n pi; a warning is
    emitted outside it.
    """
    if strength <= 0 or radius <= 0 or n < 1:
        raise ValueError("need strength > 0, radius > 0, n >= 1")
    L = radius
    if n * math.pi >= 2.0 * strength * L:
        warnings.warn(
            f"delta-shell closed form used outside its regime (n pi = {n * math.pi:.3g} "
            f"vs 2*strength*L = {2 * strength * L:.3g}); expect degraded accuracy",
            stacklevel=2,
        )
    u = (2.0 * strength * L + 1.0) / (n * math.pi * L)
    delta = u - math.sqrt(u * u + 2.0 / L**2)
    k = n * math.pi / L + delta
    hbar, m = units.hbar, units.mass
    e_real = hbar**2 * k**2 / (2.0 * m)
    gamma_half = 2.0 * hbar**2 * k**2 * math.sin(delta * L) ** 2 / (
        m * (2.0 * k * L - math.sin(2.0 * delta * L))
    )
    return AnalyticResonance(n, e_real, 2.0 * gamma_half, detuning=delta)


def delta_shell_dispersion(k: complex, strength: float, radius: float) -> complex:
    """f(k) = k cos(kL) + (2 strength - i k) sin(kL); roots are the exact resonances."""
    kL = k * radius
    return k * cmath.cos(kL) + (2.0 * strength - 1j * k) * cmath.sin(kL)


def _dispersion_derivative(k: complex, strength: float, radius: float) -> complex:
    L = radius
    kL = k * L
    return (
        cmath.cos(kL)
        - kL * cmath.sin(kL)
        - 1j * cmath.sin(kL)
        + (2.0 * strength - 1j * k) * L * cmath.cos(kL)
    )


def delta_shell_exact(strength: float, radius: float, n: int = 1, units: Units = NATURAL,
                      tol: float = 1e-12, max_iter: int = 100) -> ComplexEnergy:
    """Exact complex resonance of the delta shell by damped Newton iteration.

    Seeded from the perturbative momentum; steps that increase |f| are halved.
    Converges when |f(k)| < tol * (1 + 2 * strength * radius); the scaling
    keeps tol meaningful for very opaque shells, whose dispersion carries
    coefficients of order strength and a matching rounding floor.  A root
    with Im(E) > 0 would be a growing state and is rejected.
    """
    seed = delta_shell_approx(strength, radius, n, units)
    k = complex(math.sqrt(2.0 * units.mass * seed.e_real) / units.hbar)
    threshold = tol * (1.0 + 2.0 * strength * radius)
    f = delta_shell_dispersion(k, strength, radius)
    for _ in range(max_iter):
        if abs(f) < threshold:
            break
        step = f / _dispersion_derivative(k, strength, radius)
        for _ in range(60):
            k_new = k - step
            f_new = delta_shell_dispersion(k_new, strength, radius)
            if abs(f_new) <= abs(f):
                break
            step *= 0.5
        k, f = k_new, f_new
    if not abs(f) < threshold:
        raise ConvergenceError(
            f"delta-shell Newton did not reach |f| < {threshold:.3e} in {max_iter} "
            f"iterations (|f| = {abs(f):.3e} at k = {k})"
        )
    en = units.hbar**2 * k * k / (2.0 * units.mass)
    if en.imag > 0:
        raise SpuriousRootError(
            f"converged to a growing root (Im E = {en.imag:.3e} > 0) at k = {k}"
        )
    return ComplexEnergy(en.real, -2.0 * en.imag)

"""Resonance location by real-energy shooting.

The resonance energy e - i gamma/2 of a finite-range potential is built in
two steps: the real part comes from a shooting criterion evaluated on the
real energy axis, and gamma then follows from the outgoing flux of the
shooting solution (width module).  Two geometries are covered:

* symmetric potentials: march from the left edge toward the center with an
  outgoing-wave start; at a resonance the probability density has zero slope
  at x = 0, so bisect on that slope (bracket_scan + solve_symmetric, or the
  find_resonances driver);
* hard wall at the origin: march outward from the wall and minimize the
  normalized derivative defect at the outer barrier edge (solve_one_sided).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .core import NATURAL, ComplexEnergy, Grid, Units, WavefunctionTrace, wavenumber
from .errors import BracketError, ConfigurationError, NoResonanceError
from .integrate import StateVector, half_domain_grid, open_side_grid, propagate
from .potentials import PotentialSpec
from .width import siegert_width_asymmetric, siegert_width_symmetric

#: default scan resolution, points per unit energy
POINTS_PER_UNIT = 200.0

#: default starting amplitude for the outgoing-wave march
INIT_AMP = 1e-3

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Bracket:
    """Energy interval across which the shooting criterion changes sign."""

    e_lo: float
    e_hi: float
    c_lo: float
    c_hi: float

    def __post_init__(self) -> None:
        if not self.e_lo < self.e_hi:
            raise BracketError(f"empty bracket [{self.e_lo}, {self.e_hi}]")
        if not self.c_lo * self.c_hi < 0:
            raise BracketError(
                f"criterion does not change sign across [{self.e_lo}, {self.e_hi}]: "
                f"{self.c_lo} and {self.c_hi}"
            )


@dataclass(eq=False)
class ResonanceResult:
    """One located resonance with its shooting solution and solver metadata."""

    energy: ComplexEnergy
    trace: WavefunctionTrace
    method: str
    diagnostics: dict[str, Any] = field(default_factory=dict)


def symmetry_criterion(p: PotentialSpec, e: float, grid: Grid | None = None,
                       units: Units = NATURAL, init_amp: float = INIT_AMP) -> float:
    """Slope of |psi|^2 at x = 0 for the outgoing-wave march from the left edge.

    The march starts at a_minus with psi = init_amp and psi' = i k psi and
    runs to the center.  The returned value 2 Re(psi* psi') vanishes exactly
    when the density is flat at x = 0, which picks out states of definite
    parity of either kind; its sign changes across each resonance, so it is
    a bracketing function of e.
    """
    if grid is None:
        grid = half_domain_grid(p)
    k = wavenumber(e, units)
    init = StateVector(init_amp, 1j * k * init_amp)
    trace = propagate(p, e, grid, init, units)
    return float(2.0 * (np.conj(trace.psi[-1]) * trace.dpsi[-1]).real)


def bracket_scan(p: PotentialSpec, e_min: float, e_max: float,
                 grid: Grid | None = None, units: Units = NATURAL,
                 n_scan: int | None = None, init_amp: float = INIT_AMP) -> list[Bracket]:
    """Scan [e_min, e_max] and collect sign changes of the symmetry criterion.

    n_scan defaults to POINTS_PER_UNIT per unit of energy (at least 16
    points).  Only strict sign changes between adjacent samples are kept, so
    resonances closer together than the scan spacing can be missed.
    """
    if not 0.0 < e_min < e_max:
        raise ValueError(f"need 0 < e_min < e_max, got [{e_min}, {e_max}]")
    if grid is None:
        grid = half_domain_grid(p)
    if n_scan is None:
        n_scan = max(int(math.ceil((e_max - e_min) * POINTS_PER_UNIT)) + 1, 16)
    energies = np.linspace(e_min, e_max, n_scan)
    crit = [symmetry_criterion(p, float(e), grid, units, init_amp) for e in energies]
    out = []
    for i in range(n_scan - 1):
        if crit[i] * crit[i + 1] < 0:
            out.append(Bracket(float(energies[i]), float(energies[i + 1]),
                               crit[i], crit[i + 1]))
    return out


def solve_symmetric(p: PotentialSpec, bracket: Bracket, grid: Grid | None = None,
                    units: Units = NATURAL, tol_e: float = 1e-5,
                    init_amp: float = INIT_AMP) -> ResonanceResult:
    """Bisect the symmetry criterion inside a bracket and attach the flux width.

    The criterion crosses zero smoothly on the scale of the level spacing
    (not on the scale of gamma), so tol_e near 1e-5 resolves even widths
    orders of magnitude smaller.
    """
    if not p.is_symmetric:
        raise ConfigurationError("symmetric shooting needs a symmetric potential")
    if grid is None:
        grid = half_domain_grid(p)
    lo, hi, c_lo = bracket.e_lo, bracket.e_hi, bracket.c_lo
    iterations = 0
    while hi - lo >= tol_e:
        mid = 0.5 * (lo + hi)
        c_mid = symmetry_criterion(p, mid, grid, units, init_amp)
        if c_lo * c_mid <= 0:
            hi = mid
        else:
            lo, c_lo = mid, c_mid
        iterations += 1
    e_star = 0.5 * (lo + hi)
    k = wavenumber(e_star, units)
    trace = propagate(p, e_star, grid, StateVector(init_amp, 1j * k * init_amp), units)
    residual = float(2.0 * (np.conj(trace.psi[-1]) * trace.dpsi[-1]).real)
    gamma = siegert_width_symmetric(trace, e_star, p, units)
    return ResonanceResult(
        ComplexEnergy(e_star, gamma), trace, "symmetric-shooting",
        {"residual": residual, "bracket": (bracket.e_lo, bracket.e_hi),
         "iterations": iterations, "grid": grid},
    )


def find_resonances(p: PotentialSpec, e_min: float, e_max: float, *,
                    grid: Grid | None = None, units: Units = NATURAL,
                    n_scan: int | None = None, tol_e: float = 1e-5,
                    init_amp: float = INIT_AMP) -> list[ResonanceResult]:
    """Locate every resonance of a symmetric potential in [e_min, e_max].

    Runs bracket_scan and refines each bracket with solve_symmetric; raises
    NoResonanceError when the scan finds no sign change.
    """
    if not p.is_symmetric:
        raise ConfigurationError("find_resonances needs a symmetric potential")
    if grid is None:
        grid = half_domain_grid(p)
    brackets = bracket_scan(p, e_min, e_max, grid, units, n_scan, init_amp)
    if not brackets:
        raise NoResonanceError(
            f"no sign change of the shooting criterion in [{e_min}, {e_max}]"
        )
    return [solve_symmetric(p, b, grid, units, tol_e, init_amp) for b in brackets]


def outgoing_residual(p: PotentialSpec, e: float, grid: Grid | None = None,
                      units: Units = NATURAL) -> float:
    """Normalized derivative defect at the outer barrier edge for wall potentials.

    The march starts on the wall with psi = 0, psi' = 1.  Just outside the
    outer barrier edge the solution is free, and a resonance maximally
    confined between wall and barrier has psi'(b_plus+) = 0 there.  The
    returned ratio |psi'|^2 / (|psi'|^2 + k^2 |psi|^2) at b_plus lies in
    [0, 1] and dips to 0 at the resonance energies.
    """
    if p.hard_wall_left is None:
        raise ConfigurationError("one-sided shooting needs a hard-wall potential")
    if grid is None:
        grid = open_side_grid(p)
    k = wavenumber(e, units)
    trace = propagate(p, e, grid, StateVector(0.0, 1.0), units)
    i = trace.nearest_index(p.b_plus)
    num = abs(trace.dpsi[i]) ** 2
    return float(num / (num + k**2 * abs(trace.psi[i]) ** 2))


def _golden_minimize(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
    x = 0.5 * (lo + hi)
    return x, f(x)


def solve_one_sided(p: PotentialSpec, e_min: float, e_max: float, *,
                    grid: Grid | None = None, units: Units = NATURAL,
                    n_scan: int | None = None, tol_e: float = 1e-5) -> ResonanceResult:
    """Locate the sharpest resonance of a hard-wall potential in [e_min, e_max].

    Scans the outgoing residual, refines every interior local minimum by
    golden-section search to width tol_e, and keeps the one with the
    smallest refined residual.  The width then comes from the outgoing flux
    of the defining trace (zero on the wall side).
    """
    if p.hard_wall_left is None:
        raise ConfigurationError("one-sided shooting needs a hard-wall potential")
    if not 0.0 < e_min < e_max:
        raise ValueError(f"need 0 < e_min < e_max, got [{e_min}, {e_max}]")
    if grid is None:
        grid = open_side_grid(p)
    if n_scan is None:
        n_scan = max(int(math.ceil((e_max - e_min) * POINTS_PER_UNIT)) + 1, 16)

    def resid(e: float) -> float:
        return outgoing_residual(p, e, grid, units)

    energies = np.linspace(e_min, e_max, n_scan)
    r = np.array([resid(float(e)) for e in energies])
    minima = [i for i in range(1, n_scan - 1) if r[i] < r[i - 1] and r[i] < r[i + 1]]
    if not minima:
        raise NoResonanceError(
            f"no interior minimum of the outgoing residual in [{e_min}, {e_max}]"
        )
    best = None
    for i in minima:
        e_ref, r_ref = _golden_minimize(resid, float(energies[i - 1]),
                                        float(energies[i + 1]), tol_e)
        if best is None or r_ref < best[1]:
            best = (e_ref, r_ref)
    e_star, r_star = best
    trace = propagate(p, e_star, grid, StateVector(0.0, 1.0), units)
    gamma = siegert_width_asymmetric(trace, e_star, p, units)
    return ResonanceResult(
        ComplexEnergy(e_star, gamma), trace, "one-sided",
        {"residual": r_star, "scan": (e_min, e_max, n_scan), "grid": grid},
    )

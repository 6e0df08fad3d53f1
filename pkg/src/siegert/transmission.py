"""Plane-wave scattering across a finite-range potential.

A pure right-going wave of unit amplitude is imposed at the right edge and
propagated backward to the left edge, where the solution is decomposed into
incoming and reflected plane waves.  |t|^2 follows without ever solving a
linear system, and |t|^2 + |r|^2 = 1 is a free accuracy check.  On top of
the single-energy solver the module provides curve scanning, peak location
and half-maximum width measurement, which is what ties the transmission
picture to the flux widths of the shooting solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NATURAL, Grid, Units, wavenumber
from .errors import ConfigurationError, ConvergenceError, RangeError
from .integrate import StateVector, full_domain_grid, propagate
from .potentials import PotentialSpec


@dataclass(frozen=True)
class ScatteringSolution:
    """Amplitudes of psi = amp_in e^{ikx} + amp_refl e^{-ikx} -> amp_trans e^{ikx}.

    The transmitted amplitude is fixed to 1 by construction; t2 and r2 are
    the flux transmission and reflection coefficients for a unit incoming
    wave, t2 = 1/|amp_in|^2 and r2 = |amp_refl/amp_in|^2.
    """

    e: float
    amp_in: complex
    amp_refl: complex
    amp_trans: complex
    t2: float
    r2: float


@dataclass(eq=False)
class TransmissionCurve:
    """Transmission and reflection sampled on an increasing energy array."""

    energies: np.ndarray
    t2: np.ndarray
    r2: np.ndarray

    def __post_init__(self) -> None:
        self.energies = np.asarray(self.energies, dtype=float)
        self.t2 = np.asarray(self.t2, dtype=float)
        self.r2 = np.asarray(self.r2, dtype=float)
        if self.energies.ndim != 1 or len(self.energies) < 2:
            raise ValueError("need a 1d curve with at least two samples")
        if self.t2.shape != self.energies.shape or self.r2.shape != self.energies.shape:
            raise ValueError("energies, t2 and r2 must have matching shapes")
        if not np.all(np.diff(self.energies) > 0):
            raise ValueError("energies must be strictly increasing")

    def nearest_index(self, e: float) -> int:
        return int(np.argmin(np.abs(self.energies - e)))


def scattering_solution(p: PotentialSpec, e: float, grid: Grid | None = None,
                        units: Units = NATURAL) -> ScatteringSolution:
    """Exact scattering amplitudes at one real energy."""
    if p.hard_wall_left is not None:
        raise ConfigurationError("transmission needs a potential open on both sides")
    if grid is None:
        grid = full_domain_grid(p)
    k = wavenumber(e, units)
    x_r = grid.x_end
    psi_r = np.exp(1j * k * x_r)
    trace = propagate(p, e, grid, StateVector(psi_r, 1j * k * psi_r), units,
                      backward=True)
    x_l = grid.x_start
    psi_l, dpsi_l = trace.psi[0], trace.dpsi[0]
    amp_in = 0.5 * (psi_l + dpsi_l / (1j * k)) * np.exp(-1j * k * x_l)
    amp_refl = 0.5 * (psi_l - dpsi_l / (1j * k)) * np.exp(1j * k * x_l)
    t2 = 1.0 / abs(amp_in) ** 2
    r2 = abs(amp_refl / amp_in) ** 2
    return ScatteringSolution(float(e), complex(amp_in), complex(amp_refl),
                              1.0 + 0.0j, float(t2), float(r2))


def transmission_scan(p: PotentialSpec, e_min: float, e_max: float,
                      n_points: int = 400, grid: Grid | None = None,
                      units: Units = NATURAL) -> TransmissionCurve:
    """Sample t2 and r2 on n_points equally spaced energies in [e_min, e_max]."""
    if not 0.0 < e_min < e_max:
        raise ValueError(f"need 0 < e_min < e_max, got [{e_min}, {e_max}]")
    if n_points < 2:
        raise ValueError("need at least two scan points")
    if grid is None:
        grid = full_domain_grid(p)
    energies = np.linspace(e_min, e_max, n_points)
    t2 = np.empty(n_points)
    r2 = np.empty(n_points)
    for i, e in enumerate(energies):
        sol = scattering_solution(p, float(e), grid, units)
        t2[i] = sol.t2
        r2[i] = sol.r2
    return TransmissionCurve(energies, t2, r2)


def _parabolic_vertex(x0, x1, x2, y0, y1, y2):
    # vertex of the interpolating parabola; falls back to the middle sample
    # when the three points do not bend downward
    d1 = (y1 - y0) / (x1 - x0)
    d2 = (y2 - y1) / (x2 - x1)
    a2 = (d2 - d1) / (x2 - x0)
    if not a2 < 0:
        return x1
    x_v = 0.5 * (x0 + x1) - d1 / (2.0 * a2)
    return min(max(x_v, x0), x2)


def find_transmission_peaks(curve: TransmissionCurve) -> list[float]:
    """Energies of the strict interior maxima of t2, parabolically refined."""
    e, t = curve.energies, curve.t2
    peaks = []
    for i in range(1, len(e) - 1):
        if t[i] > t[i - 1] and t[i] > t[i + 1]:
            peaks.append(float(_parabolic_vertex(e[i - 1], e[i], e[i + 1],
                                                 t[i - 1], t[i], t[i + 1])))
    return peaks


def half_max_crossing(curve: TransmissionCurve, e_peak: float, side: str) -> float:
    """Energy where t2 first falls to half its peak value on one side of the peak.

    Walks outward from the sample nearest e_peak and linearly interpolates
    the crossing.  Raises RangeError when the curve never reaches half
    maximum on that side, which happens for broad peaks riding on a large
    background.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    i = curve.nearest_index(e_peak)
    t_peak = float(curve.t2[i])
    if not t_peak > 0.5:
        raise ValueError(
            f"t2 = {t_peak:.4g} at the claimed peak; not a resolved transmission peak"
        )
    half = 0.5 * t_peak
    step = -1 if side == "left" else 1
    e, t = curve.energies, curve.t2
    j = i
    while 0 <= j + step < len(e):
        if t[j + step] < half:
            frac = (t[j] - half) / (t[j] - t[j + step])
            return float(e[j] + frac * (e[j + step] - e[j]))
        j += step
    raise RangeError(
        f"t2 never falls to half maximum on the {side} side of the peak at "
        f"e = {e_peak:.6g} within [{e[0]:.6g}, {e[-1]:.6g}]"
    )


def breit_wigner_width(curve: TransmissionCurve, e_peak: float) -> float:
    """Full width of a transmission peak at half its maximum."""
    return (half_max_crossing(curve, e_peak, "right")
            - half_max_crossing(curve, e_peak, "left"))


def refine_peak(p: PotentialSpec, e_center: float, half_window: float, *,
                grid: Grid | None = None, units: Units = NATURAL,
                n_points: int = 65, tol: float = 1e-9) -> float:
    """Zoom onto a transmission maximum until the window shrinks below tol.

    Each round scans a window around the current estimate, moves the
    estimate to the parabolic vertex through the highest sample, and
    shrinks the window eightfold.  Works for peaks far narrower than any
    fixed scan could resolve.
    """
    e_c, w = float(e_center), float(half_window)
    while True:
        lo = max(e_c - w, 1e-12)
        curve = transmission_scan(p, lo, e_c + w, n_points, grid, units)
        e, t = curve.energies, curve.t2
        i = int(np.argmax(t))
        if 0 < i < len(e) - 1:
            e_c = _parabolic_vertex(e[i - 1], e[i], e[i + 1], t[i - 1], t[i], t[i + 1])
        else:
            e_c = float(e[i])
        if w <= tol:
            return e_c
        w /= 8.0


def measure_peak_width(p: PotentialSpec, e_peak: float, *,
                       grid: Grid | None = None, units: Units = NATURAL,
                       initial_half_window: float | None = None,
                       n_points: int = 257, rel_tol: float = 1e-3,
                       max_rounds: int = 40) -> float:
    """Half-maximum width of the transmission peak at e_peak, window-adapted.

    The scan window is widened threefold when the curve never reaches half
    maximum inside it, shrunk eightfold when the peak itself is not resolved,
    and set to six measured widths once a measurement exists, until two
    successive measurements agree to rel_tol.  e_peak should already be
    refined (refine_peak); the measurement walks from the highest sample of
    each scan.
    """
    w = float(initial_half_window) if initial_half_window else max(0.01 * e_peak, 1e-6)
    prev = None
    for _ in range(max_rounds):
        w = min(w, 0.9 * e_peak)
        curve = transmission_scan(p, e_peak - w, e_peak + w, n_points, grid, units)
        i = int(np.argmax(curve.t2))
        try:
            width = breit_wigner_width(curve, float(curve.energies[i]))
        except ValueError:
            w /= 8.0
            continue
        except RangeError:
            if w >= 10.0 * e_peak:
                raise
            w *= 3.0
            continue
        if prev is not None and abs(width - prev) <= rel_tol * width:
            return width
        prev = width
        spacing = 2.0 * w / (n_points - 1)
        if width < 12.0 * spacing or width > 0.5 * w:
            w = 6.0 * width
    raise ConvergenceError(
        f"peak width at e = {e_peak:.6g} did not stabilize in {max_rounds} rounds"
    )

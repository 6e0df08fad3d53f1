"""Decay widths from the outgoing flux through the confining barriers.

For a resonance wavefunction normalized over the trapped region, the decay
rate is the probability current leaking out at the confinement points divided
by the trapped norm:

    gamma = hbar^2 k |psi(a)|^2 / (m * integral_{b-}^{b+} |psi|^2 dx)

per open side.  The formulas are homogeneous of degree zero in psi, so any
overall rescaling of the trace leaves gamma unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NATURAL, Units, WavefunctionTrace, wavenumber
from .errors import DegenerateTraceError
from .potentials import PotentialSpec


@dataclass(frozen=True)
class CurrentSample:
    """Probability current j at one position."""

    x: float
    j: float


def probability_current(psi: complex, dpsi: complex, units: Units = NATURAL) -> float:
    """j = (hbar/m) Im(psi* dpsi)."""
    return units.hbar / units.mass * (np.conj(psi) * dpsi).imag


def current_profile(trace: WavefunctionTrace, units: Units = NATURAL) -> np.ndarray:
    """j at every trace node; constant along a stationary scattering solution."""
    return units.hbar / units.mass * np.imag(np.conj(trace.psi) * trace.dpsi)


def current_at(trace: WavefunctionTrace, x: float, units: Units = NATURAL) -> CurrentSample:
    i = trace.nearest_index(x)
    return CurrentSample(float(trace.xs[i]), probability_current(trace.psi[i], trace.dpsi[i], units))


def norm_between(trace: WavefunctionTrace, x_lo: float, x_hi: float) -> float:
    """Trapezoid integral of |psi|^2 between x_lo and x_hi (snapped to nearest nodes)."""
    if x_lo >= x_hi:
        raise ValueError(f"norm_between needs x_lo < x_hi, got [{x_lo}, {x_hi}]")
    i = trace.nearest_index(x_lo)
    j = trace.nearest_index(x_hi)
    if j <= i:
        raise ValueError(
            f"[{x_lo}, {x_hi}] collapses to a single node of the trace; nothing to integrate"
        )
    seg = np.abs(trace.psi[i:j + 1]) ** 2
    return float(np.trapezoid(seg, trace.xs[i:j + 1]))


def siegert_width_symmetric(trace: WavefunctionTrace, e: float, p: PotentialSpec,
                            units: Units = NATURAL) -> float:
    """Width from a half-domain trace over [a_minus, 0] of a symmetric potential.

    Outflow through one barrier against half the trapped norm; by symmetry this
    equals the two-sided rate over the full norm.
    """
    k = wavenumber(e, units)
    boundary = abs(trace.psi[0]) ** 2
    norm = norm_between(trace, p.b_minus, float(trace.xs[-1]))
    if norm == 0.0:
        raise DegenerateTraceError("trapped norm vanishes; width undefined")
    return units.hbar**2 * k * boundary / (units.mass * norm)


def siegert_width_asymmetric(trace: WavefunctionTrace, e: float, p: PotentialSpec,
                             units: Units = NATURAL) -> float:
    """Width from a full-domain trace, summing the outflow of both open sides.

    A hard wall on the left closes that channel exactly (psi = 0 there), so
    only the right boundary term contributes for walled potentials.
    """
    k = wavenumber(e, units)
    right = units.hbar**2 * k * abs(trace.psi[-1]) ** 2
    left = 0.0 if p.hard_wall_left is not None else units.hbar**2 * k * abs(trace.psi[0]) ** 2
    norm = norm_between(trace, p.b_minus, p.b_plus)
    if norm == 0.0:
        raise DegenerateTraceError("trapped norm vanishes; width undefined")
    return (right + left) / (units.mass * norm)

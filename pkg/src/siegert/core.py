"""Unit system, energy/grid/trace value types, and free-space kinematics.

Everything downstream works on the stationary Schrodinger equation

    psi'' = (2 m / hbar^2) (V(x) - E) psi

with E either real or complex.  A decaying resonance is written
E = e_real - i*gamma/2 with gamma >= 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Units:
    """Scale constants of the Schrodinger equation. Defaults are natural units."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self) -> None:
        if not (self.hbar > 0 and self.mass > 0):
            raise ValueError(f"hbar and mass must be positive, got {self.hbar}, {self.mass}")


NATURAL = Units()


@dataclass(frozen=True)
class ComplexEnergy:
    """Resonance energy e_real - i*gamma/2; gamma is the full decay width."""

    e_real: float
    gamma: float = 0.0

    def __post_init__(self) -> None:
        if self.gamma < 0:
            raise ValueError(f"width gamma must be non-negative, got {self.gamma}")

    @property
    def as_complex(self) -> complex:
        return complex(self.e_real, -0.5 * self.gamma)

    @property
    def gamma_half(self) -> float:
        return 0.5 * self.gamma


@dataclass(frozen=True)
class Grid:
    """Uniform spatial grid with n_steps intervals between x_start and x_end."""

    x_start: float
    x_end: float
    n_steps: int

    def __post_init__(self) -> None:
        if not self.x_start < self.x_end:
            raise ValueError(f"grid needs x_start < x_end, got [{self.x_start}, {self.x_end}]")
        if self.n_steps < 1:
            raise ValueError(f"grid needs at least one step, got {self.n_steps}")

    @property
    def dx(self) -> float:
        return (self.x_end - self.x_start) / self.n_steps

    def nodes(self) -> np.ndarray:
        return np.linspace(self.x_start, self.x_end, self.n_steps + 1)

    def midpoints(self) -> np.ndarray:
        return self.nodes()[:-1] + 0.5 * self.dx


@dataclass(eq=False)
class WavefunctionTrace:
    """Sampled (psi, psi') along a grid; xs is strictly increasing.

    At a delta-term node psi' is stored on the far side of the jump, in the
    direction the propagation was marching.
    """

    xs: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray

    def __post_init__(self) -> None:
        self.xs = np.asarray(self.xs, dtype=float)
        self.psi = np.asarray(self.psi, dtype=complex)
        self.dpsi = np.asarray(self.dpsi, dtype=complex)
        if not (self.xs.shape == self.psi.shape == self.dpsi.shape):
            raise ValueError("xs, psi, dpsi must have matching shapes")
        if self.xs.size < 2 or not np.all(np.diff(self.xs) > 0):
            raise ValueError("trace positions must be strictly increasing")

    def nearest_index(self, x: float) -> int:
        return int(np.argmin(np.abs(self.xs - x)))


def wavenumber(e: float, units: Units = NATURAL) -> float:
    """k = sqrt(2 m e) / hbar for a real positive energy."""
    if e <= 0:
        raise ValueError(f"wavenumber needs e > 0, got {e} (evanescent regime)")
    return math.sqrt(2.0 * units.mass * e) / units.hbar


def complex_wavenumber(en: ComplexEnergy, units: Units = NATURAL) -> complex:
    """Complex k for E = e_real - i*gamma/2, on the branch Re k > 0.

    For gamma > 0 the principal square root lands in the fourth quadrant
    (Re k > 0, Im k < 0), which is the decaying-resonance branch.
    """
    z = 2.0 * units.mass * en.as_complex / units.hbar**2
    if z == 0:
        raise ValueError("complex_wavenumber needs a nonzero energy")
    k = cmath.sqrt(z)
    if k.real < 0:  # principal branch already has Re >= 0; guard the cut
        k = -k
    return k

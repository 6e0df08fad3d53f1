"""Propagation of the stationary Schrodinger equation across a grid.

The equation is marched as the first-order system

    psi'  = dpsi
    dpsi' = (2 m / hbar^2) (V(x) - e) psi

with classic fixed-step RK4.  Delta terms enter as derivative jumps

    psi'(x_d+) = psi'(x_d-) + 2 * strength * psi(x_d)

applied exactly when the march crosses x_d, which therefore must coincide
with a grid node (build_grid adjusts n_steps to guarantee that).  A jump
sitting exactly on the starting node of a march is not applied: the initial
state is taken to be given on the near side of the singularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._rk4 import rk4_march
from .core import NATURAL, Grid, Units, WavefunctionTrace
from .errors import ConfigurationError, IntegrationOverflowError
from .potentials import PotentialSpec, evaluate, sample_smooth

#: relative slack (in units of dx) when matching delta positions to grid nodes
_NODE_TOL = 1e-6


@dataclass(frozen=True)
class StateVector:
    """Wavefunction value and derivative at one point."""

    psi: complex
    dpsi: complex

    def __post_init__(self) -> None:
        if self.psi == 0 and self.dpsi == 0:
            raise ValueError("state vector must be nontrivial (psi and dpsi both zero)")


def rhs(state: StateVector, x: float, e: complex, p: PotentialSpec,
        units: Units = NATURAL) -> StateVector:
    """Right-hand side of the first-order system at a single point."""
    c = 2.0 * units.mass / units.hbar**2 * (evaluate(p, x) - e)
    return StateVector(state.dpsi, c * state.psi)


def build_grid(x_start: float, x_end: float, n_steps: int, p: PotentialSpec) -> Grid:
    """Uniform grid over [x_start, x_end] whose nodes hit every delta position.

    n_steps is bumped to the smallest count >= the request for which each
    delta term inside the span lands on a node (within _NODE_TOL * dx).
    """
    span = x_end - x_start
    inside = [x for x, _ in p.delta_terms if x_start < x < x_end]
    if not inside:
        return Grid(x_start, x_end, n_steps)
    from fractions import Fraction

    need = 1
    for x in inside:
        frac = Fraction(x - x_start) / Fraction(span)
        q = frac.limit_denominator(10**6).denominator
        need = need * q // np.gcd(need, q)
    n = ((n_steps + need - 1) // need) * need
    grid = Grid(x_start, x_end, int(n))
    _delta_node_indices(p, grid)  # raises if alignment still fails
    return grid


def propagate(p: PotentialSpec, e: complex, grid: Grid, init: StateVector,
              units: Units = NATURAL, *, backward: bool = False) -> WavefunctionTrace:
    """March the system across the grid; init applies at x_start (x_end if backward).

    The returned trace is always ordered left to right.  At delta nodes the
    stored derivative is the value on the far side in the marching direction.
    """
    v_nodes, v_mids, jumps = _sampled_tables(p, grid)
    coeff = 2.0 * units.mass / units.hbar**2
    if backward:
        v_nodes, v_mids, jumps = v_nodes[::-1], v_mids[::-1], -jumps[::-1]
        dx = -grid.dx
    else:
        dx = grid.dx
    jumps = jumps.copy()
    jumps[0] = 0.0  # the initial state is given on the near side of any delta there
    psi, dpsi = rk4_march(
        np.ascontiguousarray(v_nodes), np.ascontiguousarray(v_mids),
        dx, coeff, complex(e), complex(init.psi), complex(init.dpsi),
        np.ascontiguousarray(jumps),
    )
    if not (np.isfinite(psi).all() and np.isfinite(dpsi).all()):
        raise IntegrationOverflowError(
            f"propagation overflowed at e = {e}; energy far from the physical regime"
        )
    if backward:
        psi, dpsi = psi[::-1], dpsi[::-1]
    return WavefunctionTrace(grid.nodes(), psi, dpsi)


def half_domain_grid(p: PotentialSpec, n_steps: int = 10000) -> Grid:
    """Grid over [a_minus, 0] for the symmetric shooting criterion."""
    return build_grid(p.a_minus, 0.0, n_steps, p)


def open_side_grid(p: PotentialSpec, n_steps: int = 10000) -> Grid:
    """Grid from the hard wall out to a_plus for one-sided potentials."""
    if p.hard_wall_left is None:
        raise ConfigurationError("open_side_grid needs a hard-wall potential")
    return build_grid(p.hard_wall_left, p.a_plus, n_steps, p)


def full_domain_grid(p: PotentialSpec, n_steps: int = 20000) -> Grid:
    """Grid over [a_minus, a_plus] for scattering solutions."""
    return build_grid(p.a_minus, p.a_plus, n_steps, p)


@lru_cache(maxsize=32)
def _cached_tables(p: PotentialSpec, grid: Grid) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    nodes = grid.nodes()
    v_nodes = sample_smooth(p, nodes)
    v_mids = sample_smooth(p, grid.midpoints())
    jumps = np.zeros(grid.n_steps + 1)
    for idx, strength in _delta_node_indices(p, grid):
        jumps[idx] += 2.0 * strength
    for arr in (v_nodes, v_mids, jumps):
        arr.flags.writeable = False
    return v_nodes, v_mids, jumps


def _sampled_tables(p, grid):
    try:
        return _cached_tables(p, grid)
    except TypeError:  # unhashable spec; fall back to direct sampling
        return _cached_tables.__wrapped__(p, grid)


def _delta_node_indices(p: PotentialSpec, grid: Grid) -> list[tuple[int, float]]:
    out = []
    for x_d, strength in p.delta_terms:
        if not (grid.x_start <= x_d <= grid.x_end):
            continue
        pos = (x_d - grid.x_start) / grid.dx
        idx = round(pos)
        if abs(pos - idx) > _NODE_TOL:
            raise ConfigurationError(
                f"delta term at x = {x_d} does not sit on a grid node "
                f"(nearest node offset {abs(pos - idx) * grid.dx:.3e}); use build_grid"
            )
        out.append((int(idx), strength))
    return out

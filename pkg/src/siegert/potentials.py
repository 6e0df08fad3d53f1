"""Finite-range 1D potentials and their structural metadata.

A PotentialSpec bundles the smooth potential shape with the singular pieces
(delta terms, an optional hard wall on the left) and two pairs of marker
positions:

  a_minus <= b_minus < b_plus <= a_plus

The a markers are the cutoffs beyond which the potential is negligible and
the wavefunction is treated as a free plane wave; the b markers are the
confining barrier maxima bounding the trapped region.

Hard walls are boundary conditions (psi = 0 at the wall), never a large
finite potential value.  The smooth part at the wall position itself is the
limit from the allowed side; strictly inside the wall evaluate() raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import HardWallError, RangeError, StructureError


@dataclass(frozen=True)
class SquareWell:
    """V(x) = v0 for |x| <= half_width, 0 outside; v0 < 0."""

    v0: float
    half_width: float

    def __post_init__(self) -> None:
        if self.v0 >= 0:
            raise ValueError(f"square well depth must be negative, got v0={self.v0}")
        if self.half_width <= 0:
            raise ValueError(f"square well needs half_width > 0, got {self.half_width}")


@dataclass(frozen=True)
class DeltaShell:
    """Hard wall at x = 0 plus a delta barrier (hbar^2/m) * strength * delta(x - radius)."""

    strength: float
    radius: float

    def __post_init__(self) -> None:
        if self.strength <= 0 or self.radius <= 0:
            raise ValueError("delta shell needs strength > 0 and radius > 0")


@dataclass(frozen=True)
class DoubleBarrier:
    """V(x) = (v0/2) x^2 exp(-decay x^2): a well between two bumps at x = +-1/sqrt(decay)."""

    v0: float
    decay: float

    def __post_init__(self) -> None:
        if self.v0 <= 0 or self.decay <= 0:
            raise ValueError("double barrier needs v0 > 0 and decay > 0")


@dataclass(frozen=True)
class Tabulated:
    """Potential sampled on an increasing abscissa, linearly interpolated in between."""

    xs: tuple[float, ...]
    vs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.xs) != len(self.vs) or len(self.xs) < 2:
            raise ValueError("tabulated potential needs >= 2 (x, V) samples of equal length")
        if any(b <= a for a, b in zip(self.xs, self.xs[1:])):
            raise ValueError("tabulated sample positions must be strictly increasing")


Shape = Union[SquareWell, DeltaShell, DoubleBarrier, Tabulated]


@dataclass(frozen=True)
class PotentialSpec:
    shape: Shape
    a_minus: float
    a_plus: float
    b_minus: float
    b_plus: float
    delta_terms: tuple[tuple[float, float], ...] = ()
    hard_wall_left: float | None = None

    def __post_init__(self) -> None:
        if not (self.a_minus <= self.b_minus < self.b_plus <= self.a_plus):
            raise ValueError(
                "marker ordering violated: need a_minus <= b_minus < b_plus <= a_plus, "
                f"got {self.a_minus}, {self.b_minus}, {self.b_plus}, {self.a_plus}"
            )

    @property
    def is_symmetric(self) -> bool:
        """True when V(-x) = V(x) including delta terms and there is no wall."""
        if self.hard_wall_left is not None:
            return False
        mirrored = sorted((-x, s) for x, s in self.delta_terms)
        if sorted(self.delta_terms) != mirrored:
            return False
        if isinstance(self.shape, (SquareWell, DoubleBarrier)):
            return True
        if isinstance(self.shape, Tabulated):
            xs = np.asarray(self.shape.xs)
            vs = np.asarray(self.shape.vs)
            lo, hi = xs[0], xs[-1]
            if abs(lo + hi) > 1e-9 * max(abs(lo), abs(hi), 1.0):
                return False
            scale = float(np.max(np.abs(vs))) or 1.0
            return bool(np.max(np.abs(np.interp(-xs, xs, vs) - vs)) <= 1e-9 * scale)
        return False  # DeltaShell carries a wall, handled above


def square_well(v0: float, half_width: float, *, cutoff: float | None = None) -> PotentialSpec:
    """Square well open on both sides; barrier maxima sit at the well edges."""
    shape = SquareWell(v0, half_width)
    a = half_width if cutoff is None else float(cutoff)
    if a < half_width:
        raise ValueError(f"cutoff {a} cannot be inside the well (half_width {half_width})")
    return PotentialSpec(shape, -a, a, -half_width, half_width)


def delta_shell(strength: float, radius: float, *, cutoff: float | None = None) -> PotentialSpec:
    """Hard wall at the origin plus a delta barrier at x = radius."""
    shape = DeltaShell(strength, radius)
    a = radius if cutoff is None else float(cutoff)
    if a < radius:
        raise ValueError(f"cutoff {a} cannot be inside the shell (radius {radius})")
    return PotentialSpec(
        shape, 0.0, a, 0.0, radius,
        delta_terms=((radius, strength),), hard_wall_left=0.0,
    )


def double_barrier(
    v0: float, decay: float, *, cutoff: float | None = None, tail_tol: float = 1e-15
) -> PotentialSpec:
    """Symmetric well-between-barriers; cutoff defaults to where the tail drops below tail_tol."""
    shape = DoubleBarrier(v0, decay)
    b = 1.0 / math.sqrt(decay)
    if cutoff is None:
        a = _decaying_tail_edge(shape, b, tail_tol)
    else:
        a = float(cutoff)
        if a <= b:
            raise ValueError(f"cutoff {a} must lie beyond the barrier maxima at +-{b}")
    return PotentialSpec(shape, -a, a, -b, b)


def tabulated(
    samples,
    *,
    delta_terms: tuple[tuple[float, float], ...] = (),
    hard_wall_left: float | None = None,
    tail_tol: float = 1e-12,
) -> PotentialSpec:
    """Potential from (x, V) pairs; confinement markers found by grid search."""
    pairs = sorted((float(x), float(v)) for x, v in samples)
    shape = Tabulated(tuple(x for x, _ in pairs), tuple(v for _, v in pairs))
    a_minus, a_plus = effective_range_of(shape, tail_tol)
    if hard_wall_left is not None:
        a_minus = max(a_minus, float(hard_wall_left))
    b_minus, b_plus = _tabulated_maxima(shape, floor=a_minus)
    return PotentialSpec(
        shape, a_minus, a_plus, b_minus, b_plus,
        delta_terms=tuple((float(x), float(s)) for x, s in delta_terms),
        hard_wall_left=hard_wall_left,
    )


def evaluate(p: PotentialSpec, x: float) -> float:
    """Smooth part of V at x. Delta terms and walls are metadata, not values."""
    if p.hard_wall_left is not None and x < p.hard_wall_left:
        raise HardWallError(f"x = {x} lies inside the hard wall (wall at {p.hard_wall_left})")
    return _smooth_value(p.shape, x)


def sample_smooth(p: PotentialSpec, xs: np.ndarray) -> np.ndarray:
    """Vectorized evaluate() over an array of positions."""
    xs = np.asarray(xs, dtype=float)
    if p.hard_wall_left is not None and np.any(xs < p.hard_wall_left - 1e-12):
        raise HardWallError(f"sample positions reach into the hard wall at {p.hard_wall_left}")
    return _smooth_array(p.shape, xs)


def barrier_maxima(p: PotentialSpec) -> tuple[float, float]:
    """Confinement points (b_minus, b_plus) bounding the trapped region."""
    return (p.b_minus, p.b_plus)


def effective_range(p: PotentialSpec, tail_tol: float = 1e-15) -> tuple[float, float]:
    """Positions beyond which |V| stays below tail_tol on each side."""
    return effective_range_of(p.shape, tail_tol)


def effective_range_of(shape: Shape, tail_tol: float) -> tuple[float, float]:
    if isinstance(shape, SquareWell):
        return (-shape.half_width, shape.half_width)
    if isinstance(shape, DeltaShell):
        return (0.0, shape.radius)
    if isinstance(shape, DoubleBarrier):
        edge = _decaying_tail_edge(shape, 1.0 / math.sqrt(shape.decay), tail_tol)
        return (-edge, edge)
    xs = np.asarray(shape.xs)
    vs = np.abs(np.asarray(shape.vs))
    if vs[0] >= tail_tol or vs[-1] >= tail_tol:
        raise RangeError(
            f"tabulated potential does not decay below {tail_tol} at its sample edges"
        )
    right = np.nonzero(vs >= tail_tol)[0]
    if right.size == 0:
        return (float(xs[0]), float(xs[-1]))
    return (float(xs[max(right[0] - 1, 0)]), float(xs[min(right[-1] + 1, len(xs) - 1)]))


def _smooth_value(shape: Shape, x: float) -> float:
    if isinstance(shape, SquareWell):
        return shape.v0 if abs(x) <= shape.half_width else 0.0
    if isinstance(shape, DeltaShell):
        return 0.0
    if isinstance(shape, DoubleBarrier):
        return 0.5 * shape.v0 * x * x * math.exp(-shape.decay * x * x)
    if x < shape.xs[0] or x > shape.xs[-1]:
        raise RangeError(f"x = {x} outside tabulated range [{shape.xs[0]}, {shape.xs[-1]}]")
    return float(np.interp(x, shape.xs, shape.vs))


def _smooth_array(shape: Shape, xs: np.ndarray) -> np.ndarray:
    if isinstance(shape, SquareWell):
        return np.where(np.abs(xs) <= shape.half_width, shape.v0, 0.0)
    if isinstance(shape, DeltaShell):
        return np.zeros_like(xs)
    if isinstance(shape, DoubleBarrier):
        return 0.5 * shape.v0 * xs * xs * np.exp(-shape.decay * xs * xs)
    if xs.size and (xs.min() < shape.xs[0] or xs.max() > shape.xs[-1]):
        raise RangeError(
            f"positions outside tabulated range [{shape.xs[0]}, {shape.xs[-1]}]"
        )
    return np.interp(xs, shape.xs, shape.vs)


def _decaying_tail_edge(shape: DoubleBarrier, b: float, tail_tol: float) -> float:
    """Smallest x >= b with V(x) = tail_tol; V decreases monotonically past the maximum."""
    if tail_tol <= 0:
        raise ValueError("tail_tol must be positive")
    v_at = lambda x: 0.5 * shape.v0 * x * x * math.exp(-shape.decay * x * x)
    if v_at(b) <= tail_tol:
        return b
    hi = 2.0 * b
    while v_at(hi) > tail_tol:
        hi *= 2.0
    lo = b
    while hi - lo > 1e-9 * hi:
        mid = 0.5 * (lo + hi)
        if v_at(mid) > tail_tol:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _tabulated_maxima(shape: Tabulated, floor: float) -> tuple[float, float]:
    """Outermost interior local maxima of the samples, one per side of the origin."""
    xs = np.asarray(shape.xs)
    vs = np.asarray(shape.vs)
    interior = (vs[1:-1] > vs[:-2]) & (vs[1:-1] > vs[2:])
    peaks = xs[1:-1][interior]
    peaks = peaks[peaks >= floor]
    left = peaks[peaks < 0]
    right = peaks[peaks > 0]
    if floor >= 0.0 or left.size:
        # one-sided (walled) potential: trapped region runs from the wall/floor out
        if right.size == 0:
            raise StructureError("tabulated potential has no confining maximum for x > 0")
        if floor >= 0.0 and left.size == 0:
            return (floor, float(right.max()))
    if left.size == 0 or right.size == 0:
        raise StructureError("tabulated potential needs a local maximum on each side of x = 0")
    return (float(left.min()), float(right.max()))

"""Exception types shared by the resonance solvers.

Plain precondition violations (negative energy, bad argument values) raise
ValueError; everything that a caller might want to catch and handle as a
distinct failure mode gets its own class below.
"""


class SiegertError(Exception):
    """Base class for solver failures."""


class HardWallError(SiegertError):
    """Position lies inside a hard-wall region (the wavefunction is pinned to zero there)."""


class ConfigurationError(SiegertError):
    """Invalid solver, grid, or potential configuration."""


class RangeError(SiegertError):
    """Requested point or level lies outside the sampled range."""


class StructureError(SiegertError):
    """Potential lacks the structure the operation needs (e.g. no confining maxima)."""


class IntegrationOverflowError(SiegertError):
    """Propagation produced non-finite values; the energy is far outside the physical regime."""


class BracketError(SiegertError):
    """Energy interval does not bracket a sign change of the shooting criterion."""


class NoResonanceError(SiegertError):
    """No resonance was found in the requested energy window."""


class ConvergenceError(SiegertError):
    """Iterative search failed to converge."""


class SpuriousRootError(ConvergenceError):
    """Root search converged, but to a root with the wrong (growing) time dependence."""


class DegenerateTraceError(SiegertError):
    """Trace norm vanishes over the confined region; width formula undefined."""

"""Resonance energies and decay widths of 1D finite-range quantum potentials.

The package locates resonances e - i gamma/2 by real-energy shooting with
outgoing-wave boundary conditions, attaches the width through the outgoing
flux of the shooting solution, and cross-checks everything against analytic
closed forms and transmission spectra.
"""

from .analytic import (AnalyticResonance, delta_shell_approx, delta_shell_dispersion,
                       delta_shell_exact, square_well_resonances)
from .core import (NATURAL, ComplexEnergy, Grid, Units, WavefunctionTrace,
                   complex_wavenumber, wavenumber)
from .errors import (BracketError, ConfigurationError, ConvergenceError,
                     DegenerateTraceError, HardWallError, IntegrationOverflowError,
                     NoResonanceError, RangeError, SiegertError, SpuriousRootError,
                     StructureError)
from .integrate import (StateVector, build_grid, full_domain_grid, half_domain_grid,
                        open_side_grid, propagate, rhs)
from .potentials import (DeltaShell, DoubleBarrier, PotentialSpec, SquareWell,
                         Tabulated, barrier_maxima, delta_shell, double_barrier,
                         effective_range, evaluate, sample_smooth, square_well,
                         tabulated)
from .shoot import (Bracket, ResonanceResult, bracket_scan, find_resonances,
                    outgoing_residual, solve_one_sided, solve_symmetric,
                    symmetry_criterion)
from .transmission import (ScatteringSolution, TransmissionCurve, breit_wigner_width,
                           find_transmission_peaks, half_max_crossing,
                           measure_peak_width, refine_peak, scattering_solution,
                           transmission_scan)
from .width import (CurrentSample, current_at, current_profile, norm_between,
                    probability_current, siegert_width_asymmetric,
                    siegert_width_symmetric)

__version__ = "0.1.0"

__all__ = [
    "AnalyticResonance", "Bracket", "BracketError", "ComplexEnergy",
    "ConfigurationError", "ConvergenceError", "CurrentSample",
    "DegenerateTraceError", "DeltaShell", "DoubleBarrier", "Grid",
    "HardWallError", "IntegrationOverflowError", "NATURAL", "NoResonanceError",
    "PotentialSpec", "RangeError", "ResonanceResult", "ScatteringSolution",
    "SiegertError", "SpuriousRootError", "SquareWell", "StateVector",
    "StructureError", "Tabulated", "TransmissionCurve", "Units",
    "WavefunctionTrace", "barrier_maxima", "bracket_scan", "breit_wigner_width",
    "build_grid", "complex_wavenumber", "current_at", "current_profile",
    "delta_shell", "delta_shell_approx", "delta_shell_dispersion",
    "delta_shell_exact", "double_barrier", "effective_range", "evaluate",
    "find_resonances", "find_transmission_peaks", "full_domain_grid",
    "half_domain_grid", "half_max_crossing", "measure_peak_width",
    "norm_between", "open_side_grid", "outgoing_residual", "probability_current",
    "propagate", "refine_peak", "rhs", "sample_smooth", "scattering_solution",
    "siegert_width_asymmetric", "siegert_width_symmetric", "solve_one_sided",
    "solve_symmetric", "square_well", "square_well_resonances",
    "symmetry_criterion", "tabulated", "transmission_scan", "wavenumber",
]

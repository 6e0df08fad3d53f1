"""Command-line driver for resonance and transmission computations.

Configuration is a JSON document (see SolverConfig) that individual flags
override, so an experiment is reproducible from its config alone.  Three
subcommands cover the library surface:

* analytic: closed-form resonance tables (square-well, delta-shell) and the
  exact delta-shell root from the complex Newton iteration;
* solve: numeric shooting on the configured potential, symmetric or
  hard-walled, one row per located resonance, optional trace dump;
* transmission: |t|^2 / |r|^2 curve over the scan window plus a peak table
  with half-maximum widths where they are computable.

Exit status: 0 success, 1 configuration error, 2 no resonance found,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any

import numpy as np

from .analytic import (delta_shell_approx, delta_shell_dispersion, delta_shell_exact,
                       square_well_resonances)
from .core import NATURAL, Units, WavefunctionTrace, complex_wavenumber
from .errors import (ConfigurationError, ConvergenceError, NoResonanceError,
                     RangeError, SiegertError)
from .integrate import full_domain_grid, half_domain_grid, open_side_grid
from .potentials import PotentialSpec, delta_shell, double_barrier, square_well
from .shoot import ResonanceResult, find_resonances, solve_one_sided
from .transmission import (TransmissionCurve, find_transmission_peaks,
                           measure_peak_width, refine_peak, scattering_solution,
                           transmission_scan)

_FAMILIES = ("square-well", "delta-shell", "double-barrier")
_PARAM_KEYS = {
    "square-well": ("v0", "half_width"),
    "delta-shell": ("strength", "radius"),
    "double-barrier": ("v0", "decay"),
}


def _reject_unknown(doc: dict, allowed: tuple[str, ...], where: str) -> None:
    unknown = sorted(set(doc) - set(allowed))
    if unknown:
        raise ConfigurationError(f"unknown {where} keys: {', '.join(unknown)}")


@dataclass
class GridConfig:
    """Integration grid: step count across the domain and optional range cutoff."""

    n_steps: int = 10000
    cutoff: float | None = None

    @classmethod
    def from_dict(cls, doc: dict) -> "GridConfig":
        _reject_unknown(doc, ("n_steps", "cutoff"), "grid")
        return cls(**doc)

    def to_dict(self) -> dict:
        return {"n_steps": self.n_steps, "cutoff": self.cutoff}

    def validate(self) -> None:
        if self.n_steps < 100:
            raise ConfigurationError(f"grid.n_steps must be >= 100, got {self.n_steps}")


@dataclass
class ScanConfig:
    """Energy window for shooting scans and transmission curves."""

    e_min: float = 0.1
    e_max: float = 2.0
    n_scan: int | None = None
    n_points: int = 400

    @classmethod
    def from_dict(cls, doc: dict) -> "ScanConfig":
        _reject_unknown(doc, ("e_min", "e_max", "n_scan", "n_points"), "scan")
        return cls(**doc)

    def to_dict(self) -> dict:
        return {"e_min": self.e_min, "e_max": self.e_max,
                "n_scan": self.n_scan, "n_points": self.n_points}

    def validate(self) -> None:
        if not 0.0 < self.e_min < self.e_max:
            raise ConfigurationError(
                f"scan range must satisfy 0 < e_min < e_max, got [{self.e_min}, {self.e_max}]"
            )
        if self.n_scan is not None and self.n_scan < 2:
            raise ConfigurationError("scan.n_scan must be at least 2")
        if self.n_points < 2:
            raise ConfigurationError("scan.n_points must be at least 2")


@dataclass
class ToleranceConfig:
    """Bisection window width and Newton residual target."""

    tol_e: float = 1e-5
    newton_tol: float = 1e-12

    @classmethod
    def from_dict(cls, doc: dict) -> "ToleranceConfig":
        _reject_unknown(doc, ("tol_e", "newton_tol"), "tolerances")
        return cls(**doc)

    def to_dict(self) -> dict:
        return {"tol_e": self.tol_e, "newton_tol": self.newton_tol}

    def validate(self) -> None:
        if not self.tol_e > 0:
            raise ConfigurationError(f"tolerances.tol_e must be > 0, got {self.tol_e}")
        if not self.newton_tol > 0:
            raise ConfigurationError(
                f"tolerances.newton_tol must be > 0, got {self.newton_tol}"
            )


@dataclass
class OutputConfig:
    """Machine-readable output target; stdout always gets the human table."""

    format: str = "json"
    path: str | None = None

    @classmethod
    def from_dict(cls, doc: dict) -> "OutputConfig":
        _reject_unknown(doc, ("format", "path"), "output")
        return cls(**doc)

    def to_dict(self) -> dict:
        return {"format": self.format, "path": self.path}

    def validate(self) -> None:
        if self.format not in ("csv", "json"):
            raise ConfigurationError(
                f"output.format must be 'csv' or 'json', got {self.format!r}"
            )


@dataclass
class AnalyticConfig:
    """Closed-form table controls; family defaults to the configured potential."""

    family: str | None = None
    mode: str = "approx"
    n_max: int | None = None

    @classmethod
    def from_dict(cls, doc: dict) -> "AnalyticConfig":
        _reject_unknown(doc, ("family", "mode", "n_max"), "analytic")
        return cls(**doc)

    def to_dict(self) -> dict:
        return {"family": self.family, "mode": self.mode, "n_max": self.n_max}

    def validate(self) -> None:
        if self.family is not None and self.family not in ("square-well", "delta-shell"):
            raise ConfigurationError(
                f"analytic.family must be 'square-well' or 'delta-shell', got {self.family!r}"
            )
        if self.mode not in ("approx", "exact"):
            raise ConfigurationError(
                f"analytic.mode must be 'approx' or 'exact', got {self.mode!r}"
            )
        if self.n_max is not None and self.n_max < 1:
            raise ConfigurationError("analytic.n_max must be at least 1")


@dataclass
class SolverConfig:
    """Full run configuration; one JSON document drives an entire invocation."""

    potential: dict | None = None
    units: Units = NATURAL
    grid: GridConfig = field(default_factory=GridConfig)
    scan: ScanConfig = field(default_factory=ScanConfig)
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    analytic: AnalyticConfig = field(default_factory=AnalyticConfig)

    @classmethod
    def from_dict(cls, doc: dict) -> "SolverConfig":
        _reject_unknown(doc, ("potential", "units", "grid", "scan",
                              "tolerances", "output", "analytic"), "config")
        units_doc = doc.get("units") or {}
        _reject_unknown(units_doc, ("hbar", "mass"), "units")
        return cls(
            potential=doc.get("potential"),
            units=Units(**units_doc),
            grid=GridConfig.from_dict(doc.get("grid") or {}),
            scan=ScanConfig.from_dict(doc.get("scan") or {}),
            tolerances=ToleranceConfig.from_dict(doc.get("tolerances") or {}),
            output=OutputConfig.from_dict(doc.get("output") or {}),
            analytic=AnalyticConfig.from_dict(doc.get("analytic") or {}),
        )

    def to_dict(self) -> dict:
        return {
            "potential": self.potential,
            "units": {"hbar": self.units.hbar, "mass": self.units.mass},
            "grid": self.grid.to_dict(),
            "scan": self.scan.to_dict(),
            "tolerances": self.tolerances.to_dict(),
            "output": self.output.to_dict(),
            "analytic": self.analytic.to_dict(),
        }

    def validate(self) -> None:
        for section in (self.grid, self.scan, self.tolerances, self.output, self.analytic):
            section.validate()
        if self.potential is not None:
            _validate_potential_doc(self.potential)


def parse_potential(text: str) -> dict:
    """Parse a 'family:p1,p2' shorthand into a potential document."""
    head, sep, tail = text.partition(":")
    if not sep or head not in _FAMILIES:
        raise ConfigurationError(
            f"potential shorthand must look like one of "
            f"{', '.join(f + ':p1,p2' for f in _FAMILIES)}; got {text!r}"
        )
    parts = tail.split(",")
    keys = _PARAM_KEYS[head]
    if len(parts) != len(keys):
        raise ConfigurationError(
            f"{head} takes {len(keys)} parameters ({', '.join(keys)}), got {len(parts)}"
        )
    try:
        values = [float(s) for s in parts]
    except ValueError:
        raise ConfigurationError(f"non-numeric potential parameter in {text!r}") from None
    return {"family": head, **dict(zip(keys, values))}


def _validate_potential_doc(doc: dict) -> None:
    if not isinstance(doc, dict) or "family" not in doc:
        raise ConfigurationError("potential document needs a 'family' key")
    family = doc["family"]
    if family not in _FAMILIES:
        raise ConfigurationError(
            f"potential.family must be one of {', '.join(_FAMILIES)}, got {family!r}"
        )
    _reject_unknown(doc, ("family",) + _PARAM_KEYS[family], f"potential[{family}]")
    missing = [k for k in _PARAM_KEYS[family] if k not in doc]
    if missing:
        raise ConfigurationError(f"potential[{family}] missing keys: {', '.join(missing)}")


def build_potential(cfg: SolverConfig) -> PotentialSpec:
    """Construct the PotentialSpec named by the config document."""
    if cfg.potential is None:
        raise ConfigurationError("no potential configured (use --potential or the config file)")
    _validate_potential_doc(cfg.potential)
    doc = cfg.potential
    cutoff = cfg.grid.cutoff
    family = doc["family"]
    if family == "square-well":
        return square_well(doc["v0"], doc["half_width"], cutoff=cutoff)
    if family == "delta-shell":
        return delta_shell(doc["strength"], doc["radius"], cutoff=cutoff)
    return double_barrier(doc["v0"], doc["decay"], cutoff=cutoff)


def _potential_report(cfg: SolverConfig, p: PotentialSpec) -> dict:
    doc = dict(cfg.potential)
    doc["a_minus"] = p.a_minus
    doc["a_plus"] = p.a_plus
    return doc


def _units_report(units: Units) -> dict:
    return {"hbar": units.hbar, "mass": units.mass}


def run_analytic(cfg: SolverConfig, family: str | None = None,
                 mode: str | None = None) -> dict:
    """Closed-form (and exact Newton) resonance table as a report document."""
    family = family or cfg.analytic.family
    mode = mode or cfg.analytic.mode
    if cfg.potential is not None:
        _validate_potential_doc(cfg.potential)
        if family is None:
            family = cfg.potential["family"]
        elif family != cfg.potential["family"]:
            raise ConfigurationError(
                f"analytic family {family!r} does not match the configured "
                f"potential {cfg.potential['family']!r}"
            )
    if family is None:
        raise ConfigurationError("analytic mode needs a family (--family or --potential)")
    if family == "double-barrier":
        raise ConfigurationError("no closed form is available for the double barrier")
    if cfg.potential is None:
        raise ConfigurationError(
            f"analytic {family} needs its parameters from --potential or the config file"
        )
    doc = cfg.potential
    units = cfg.units
    rows: list[dict] = []
    if family == "square-well":
        if mode == "exact":
            raise ConfigurationError("exact mode is only available for delta-shell")
        n_max = cfg.analytic.n_max or 10
        for r in square_well_resonances(doc["v0"], doc["half_width"], units, n_max=n_max):
            rows.append({"n": r.n, "e_real": r.e_real, "gamma": r.gamma,
                         "method": "closed-form", "residual": None})
    else:
        n_max = cfg.analytic.n_max or 1
        for n in range(1, n_max + 1):
            if mode == "approx":
                r = delta_shell_approx(doc["strength"], doc["radius"], n, units)
                rows.append({"n": r.n, "e_real": r.e_real, "gamma": r.gamma,
                             "method": "closed-form", "residual": None})
            else:
                en = delta_shell_exact(doc["strength"], doc["radius"], n=n, units=units,
                                       tol=cfg.tolerances.newton_tol)
                k = complex_wavenumber(en, units)
                resid = abs(delta_shell_dispersion(k, doc["strength"], doc["radius"]))
                rows.append({"n": n, "e_real": en.e_real, "gamma": en.gamma,
                             "method": "newton", "residual": resid})
    p = build_potential(cfg)
    return {"potential": _potential_report(cfg, p), "units": _units_report(units),
            "resonances": rows}


def run_solve(cfg: SolverConfig) -> tuple[dict, list[ResonanceResult]]:
    """Numeric shooting over the scan window; returns (report, solver results)."""
    p = build_potential(cfg)
    units = cfg.units
    scan = cfg.scan
    tol_e = cfg.tolerances.tol_e
    if p.hard_wall_left is not None:
        grid = open_side_grid(p, cfg.grid.n_steps)
        results = [solve_one_sided(p, scan.e_min, scan.e_max, grid=grid, units=units,
                                   n_scan=scan.n_scan, tol_e=tol_e)]
    elif p.is_symmetric:
        grid = half_domain_grid(p, cfg.grid.n_steps)
        results = find_resonances(p, scan.e_min, scan.e_max, grid=grid, units=units,
                                  n_scan=scan.n_scan, tol_e=tol_e)
    else:
        raise ConfigurationError(
            "shooting needs a symmetric potential or a hard wall at the origin"
        )
    rows = [{"n": i + 1, "e_real": r.energy.e_real, "gamma": r.energy.gamma,
             "method": r.method, "residual": r.diagnostics.get("residual")}
            for i, r in enumerate(results)]
    report = {"potential": _potential_report(cfg, p), "units": _units_report(units),
              "resonances": rows}
    return report, results


def run_transmission(cfg: SolverConfig) -> tuple[dict, TransmissionCurve]:
    """Transmission curve over the scan window plus the refined peak table."""
    p = build_potential(cfg)
    if p.hard_wall_left is not None:
        raise ConfigurationError("transmission needs a potential open on both sides")
    units = cfg.units
    scan = cfg.scan
    grid = full_domain_grid(p, cfg.grid.n_steps)
    curve = transmission_scan(p, scan.e_min, scan.e_max, scan.n_points, grid, units)
    spacing = (scan.e_max - scan.e_min) / (scan.n_points - 1)
    peaks = []
    for e0 in find_transmission_peaks(curve):
        e_ref = refine_peak(p, e0, spacing, grid=grid, units=units)
        t2 = scattering_solution(p, e_ref, grid, units).t2
        try:
            width = measure_peak_width(p, e_ref, grid=grid, units=units)
        except (RangeError, ConvergenceError, ValueError):
            width = None
        peaks.append({"e_peak": e_ref, "t2": t2, "width": width})
    report = {"potential": _potential_report(cfg, p), "units": _units_report(units),
              "resonances": [], "peaks": peaks}
    return report, curve


def _csv_cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _write_lines(path: str, lines: list[str]) -> None:
    Path(path).write_text("\n".join(lines) + "\n")


def write_trace_csv(path: str, trace: WavefunctionTrace, *, mirror: bool = False) -> None:
    """Dump a trace as x,re_psi,im_psi,abs2_psi rows, one per grid node.

    With mirror=True the half-domain trace ending at x = 0 is extended to
    the full domain using the parity read off the trace itself: odd when
    psi vanishes at the center, even otherwise.
    """
    xs, psi = trace.xs, trace.psi
    if mirror:
        scale = np.max(np.abs(psi))
        sign = -1.0 if abs(psi[-1]) < 1e-3 * scale else 1.0
        xs = np.concatenate([xs, -xs[-2::-1]])
        psi = np.concatenate([psi, sign * psi[-2::-1]])
    lines = ["x,re_psi,im_psi,abs2_psi"]
    for x, v in zip(xs, psi):
        lines.append(",".join([repr(float(x)), repr(float(v.real)),
                               repr(float(v.imag)), repr(float(abs(v) ** 2))]))
    _write_lines(path, lines)


def write_curve_csv(path: str, curve: TransmissionCurve) -> None:
    """Dump a transmission curve as energy,t2,r2 rows."""
    lines = ["energy,t2,r2"]
    for e, t, r in zip(curve.energies, curve.t2, curve.r2):
        lines.append(",".join([repr(float(e)), repr(float(t)), repr(float(r))]))
    _write_lines(path, lines)


def _write_rows_csv(path: str, header: list[str], rows: list[dict]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_csv_cell(row[h]) for h in header))
    _write_lines(path, lines)


def _fmt(x: Any) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def _print_table(headers: list[str], rows: list[list[Any]]) -> None:
    cells = [headers] + [[_fmt(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    for r in cells:
        print("  ".join(c.rjust(w) for c, w in zip(r, widths)))


def _emit_report(cfg: SolverConfig, report: dict, *,
                 curve: TransmissionCurve | None = None) -> None:
    out = cfg.output.path
    if out is None:
        return
    if cfg.output.format == "json":
        _write_lines(out, [json.dumps(report, indent=2, sort_keys=True)])
    elif curve is not None:
        write_curve_csv(out, curve)
    else:
        _write_rows_csv(out, ["n", "e_real", "gamma", "method", "residual"],
                        report["resonances"])
    print(f"wrote {out}")


class _Parser(argparse.ArgumentParser):
    # argparse wants to sys.exit(2) on bad flags; 2 is reserved for
    # "no resonance", so surface parse problems as configuration errors
    def error(self, message: str) -> None:
        raise ConfigurationError(message)


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--config", help="JSON configuration document")
    sp.add_argument("--potential",
                    help="shorthand square-well:v0,L | delta-shell:lambda,L | "
                         "double-barrier:v0,lambda")
    sp.add_argument("--cutoff", type=float, help="override the potential range cutoff")
    sp.add_argument("--emin", type=float, help="scan window lower edge")
    sp.add_argument("--emax", type=float, help="scan window upper edge")
    sp.add_argument("--nx", type=int, help="RK4 steps across the integration domain")
    sp.add_argument("--tol", type=float, help="energy bisection tolerance")
    sp.add_argument("--out", help="write the machine-readable report here")
    sp.add_argument("--format", choices=("csv", "json"), help="file format for --out")
    sp.add_argument("--dump-config", action="store_true",
                    help="print the merged configuration and exit")
    sp.add_argument("--no-header", action="store_true",
                    help="suppress the timestamp header line")


def _build_parser() -> _Parser:
    parser = _Parser(prog="siegert",
                     description="Resonance energies and widths of 1D finite-range potentials")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sp = sub.add_parser("analytic", help="closed-form resonance tables")
    _add_common(sp)
    sp.add_argument("--family", choices=("square-well", "delta-shell"))
    sp.add_argument("--mode", choices=("approx", "exact"))
    sp.add_argument("--nmax", type=int, help="highest mode number to tabulate")
    sp = sub.add_parser("solve", help="numeric shooting solver")
    _add_common(sp)
    sp.add_argument("--nscan", type=int, help="scan points for bracketing")
    sp.add_argument("--trace", help="dump the resonance trace(s) as CSV here")
    sp = sub.add_parser("transmission", help="transmission curve and peak table")
    _add_common(sp)
    sp.add_argument("--npoints", type=int, help="energies sampled across the curve")
    return parser


def _load_config(args: argparse.Namespace) -> SolverConfig:
    doc = {}
    if args.config:
        doc = json.loads(Path(args.config).read_text())
        if not isinstance(doc, dict):
            raise ConfigurationError("config document must be a JSON object")
    cfg = SolverConfig.from_dict(doc)
    if args.potential:
        cfg.potential = parse_potential(args.potential)
    if args.cutoff is not None:
        cfg.grid.cutoff = args.cutoff
    if args.emin is not None:
        cfg.scan.e_min = args.emin
    if args.emax is not None:
        cfg.scan.e_max = args.emax
    if args.nx is not None:
        cfg.grid.n_steps = args.nx
    if args.tol is not None:
        cfg.tolerances.tol_e = args.tol
    if args.out is not None:
        cfg.output.path = args.out
    if args.format is not None:
        cfg.output.format = args.format
    if getattr(args, "family", None) is not None:
        cfg.analytic.family = args.family
    if getattr(args, "mode", None) is not None:
        cfg.analytic.mode = args.mode
    if getattr(args, "nmax", None) is not None:
        cfg.analytic.n_max = args.nmax
    if getattr(args, "nscan", None) is not None:
        cfg.scan.n_scan = args.nscan
    if getattr(args, "npoints", None) is not None:
        cfg.scan.n_points = args.npoints
    cfg.validate()
    return cfg


def _trace_path(base: str, index: int, count: int) -> str:
    if count == 1:
        return base
    path = Path(base)
    return str(path.with_name(f"{path.stem}-n{index}{path.suffix}"))


def main(argv: list[str] | None = None) -> int:
    """Entry point; returns the process exit status."""
    try:
        args = _build_parser().parse_args(argv)
        cfg = _load_config(args)
        if args.dump_config:
            print(json.dumps(cfg.to_dict(), indent=2, sort_keys=True))
            return 0
        if not args.no_header:
            stamp = datetime.now().replace(microsecond=0).isoformat()
            print(f"# siegert {args.command} {stamp}")
        if args.command == "analytic":
            report = run_analytic(cfg)
            _print_table(["n", "e_real", "gamma", "method"],
                         [[r["n"], r["e_real"], r["gamma"], r["method"]]
                          for r in report["resonances"]])
            _emit_report(cfg, report)
        elif args.command == "solve":
            report, results = run_solve(cfg)
            _print_table(["n", "e_real", "gamma", "gamma/2", "residual"],
                         [[r["n"], r["e_real"], r["gamma"], 0.5 * r["gamma"], r["residual"]]
                          for r in report["resonances"]])
            _emit_report(cfg, report)
            if args.trace:
                for i, res in enumerate(results):
                    path = _trace_path(args.trace, i + 1, len(results))
                    write_trace_csv(path, res.trace,
                                    mirror=res.method == "symmetric-shooting")
                    print(f"wrote {path}")
        else:
            report, curve = run_transmission(cfg)
            _print_table(["peak", "e_peak", "t2", "width"],
                         [[i + 1, pk["e_peak"], pk["t2"], pk["width"]]
                          for i, pk in enumerate(report["peaks"])])
            _emit_report(cfg, report, curve=curve)
        return 0
    except NoResonanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConfigurationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SiegertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands
-----------
correlator   closed-form correlator values, optionally near a plane wall
xsection     zero-point and thermal light-scattering cross sections
ratio        zero-point share of the Stokes Brillouin line
verify       run the cross-validation suites (spectral, lattice, chain, all)
materials    list built-ins or pretty-print a material

Numeric options accept a single value or a sweep ``lo..hi:steps``
(linear) / ``lo..hi:stepsL`` (logarithmic).  Output defaults to an
aligned table; ``--format csv`` and ``--format json`` emit
machine-readable records with the fixed keys {inputs, value, unit,
formula, provenance}.  All I/O is SI; wavelengths are vacuum
wavelengths; angles on the command line are degrees.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import scattering, verify
from .correlator import (
    Separation,
    boundary_shift_planar,
    correlator,
    em_vacuum_shift_plate,
)
from .errors import FluctusError
from .medium import builtin_names, dumps_material, resolve_material, validate

__all__ = ["main", "OutputRecord", "parse_range"]


@dataclass(frozen=True)
class OutputRecord:
    """One emitted number: echoed inputs, value, unit, formula, provenance."""

    inputs: dict
    value: float
    unit: str
    formula: str
    provenance: str

    def to_json_dict(self) -> dict:
        return {
            "inputs": self.inputs,
            "value": self.value,
            "unit": self.unit,
            "formula": self.formula,
            "provenance": self.provenance,
        }


def parse_range(text: str) -> list[float]:
    """Parse a scalar or a sweep expression ``lo..hi:steps`` / ``lo..hi:stepsL``."""
    if ".." not in text:
        return [float(text)]
    span, _, steps = text.partition(":")
    lo_s, _, hi_s = span.partition("..")
    if not steps:
        raise ValueError(f"sweep expression needs a step count: {text!r}")
    logarithmic = steps.endswith("L")
    if logarithmic:
        steps = steps[:-1]
    n = int(steps)
    if n < 2:
        raise ValueError(f"sweep needs at least 2 points, got {n}")
    lo, hi = float(lo_s), float(hi_s)
    if logarithmic:
        if lo <= 0 or hi <= 0:
            raise ValueError("logarithmic sweep needs positive endpoints")
        return [float(x) for x in np.geomspace(lo, hi, n)]
    return [float(x) for x in np.linspace(lo, hi, n)]


def _emit(records: list[OutputRecord], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if not records:
        return
    if fmt == "json":
        json.dump([r.to_json_dict() for r in records], out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        keys = sorted({k for r in records for k in r.inputs})
        writer = csv.writer(out)
        writer.writerow(keys + ["value", "unit", "formula", "provenance"])
        for r in records:
            writer.writerow([r.inputs.get(k, "") for k in keys]
                            + [repr(float(r.value)), r.unit, r.formula, r.provenance])
        return
    # aligned human table
    keys = sorted({k for r in records for k in r.inputs})
    header = keys + ["value", "unit", "formula"]
    rows = [[_cell(r.inputs.get(k, "")) for k in keys]
            + [f"{r.value:.6e}", r.unit, r.formula] for r in records]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _cell(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


# --- subcommands -----------------------------------------------------------

def _cmd_correlator(args) -> int:
    medium = resolve_material(args.material)
    rs = parse_range(args.r) if args.r is not None else [None]
    zs = parse_range(args.boundary) if args.boundary is not None else [None]
    if args.r is None and args.boundary is None:
        raise ValueError("give --r (bulk correlator) and/or --boundary (wall shift)")
    if len(rs) > 1 and len(zs) > 1:
        raise ValueError("only one of --r and --boundary may sweep at a time")
    dt = float(args.dt)
    records = []
    for r in rs:
        if r is None:
            continue
        value = correlator(medium, Separation(r, dt))
        records.append(OutputRecord(inputs=value.inputs, value=value.value,
                                    unit="kg^2/m^6", formula=value.formula,
                                    provenance="closed-form"))
    for z in zs:
        if z is None:
            continue
        shift = boundary_shift_planar(medium, z)
        records.append(OutputRecord(inputs=shift.inputs, value=shift.value,
                                    unit="kg^2/m^6", formula=shift.formula,
                                    provenance="closed-form"))
        e2, b2 = em_vacuum_shift_plate(z)
        for tag, coeff in (("em-plate-shift-E2", e2), ("em-plate-shift-B2", b2)):
            records.append(OutputRecord(
                inputs={"z_m": z}, value=coeff, unit="hbar*c/z^4",
                formula=tag, provenance="closed-form"))
    _emit(records, args.format)
    return 0


_KINDS = {
    "zp": scattering.zp_cross_section_reduced,
    "zp-exact": scattering.zp_cross_section_exact,
    "thermal-brillouin": scattering.thermal_brillouin_cross_section,
    "thermal-total": scattering.thermal_total_cross_section,
}


def _config_from_args(args, theta_rad: float) -> scattering.ScatteringConfig:
    if args.wavelength is not None and args.omega is not None:
        raise ValueError("give either --lambda or --omega, not both")
    if args.wavelength is not None:
        omega = scattering.omega_from_wavelength(args.wavelength)
    elif args.omega is not None:
        omega = args.omega
    else:
        raise ValueError("one of --lambda or --omega is required")
    return scattering.ScatteringConfig(
        omega=omega,
        theta=theta_rad,
        pol=scattering.Polarization(getattr(args, "pol", "perpendicular")),
        temperature=args.temperature,
    )


def _cmd_xsection(args) -> int:
    medium = resolve_material(args.material)
    thetas_deg = parse_range(args.theta)
    records = []
    for theta_deg in thetas_deg:
        cfg = _config_from_args(args, math.radians(theta_deg))
        xs = _KINDS[args.kind](medium, cfg)
        inputs = {
            "material": medium.name,
            "omega_rad_s": cfg.omega,
            "theta_deg": theta_deg,
            "pol": cfg.pol.value,
            "volume_m3": args.volume,
        }
        if args.kind.startswith("thermal"):
            inputs["temperature_k"] = (cfg.temperature if cfg.temperature is not None
                                       else medium.default_temperature)
        records.append(OutputRecord(
            inputs=inputs, value=xs.value * args.volume, unit="m^2/sr",
            formula=xs.formula, provenance="closed-form"))
    _emit(records, args.format)
    return 0


def _cmd_ratio(args) -> int:
    medium = resolve_material(args.material)
    cfg = _config_from_args(args, math.radians(float(args.theta)))
    value = scattering.ratio_zp_thermal(medium, cfg)
    temperature = (cfg.temperature if cfg.temperature is not None
                   else medium.default_temperature)
    record = OutputRecord(
        inputs={"material": medium.name, "omega_rad_s": cfg.omega,
                "theta_deg": float(args.theta), "temperature_k": temperature},
        value=value, unit="dimensionless", formula="zp-thermal-ratio",
        provenance="closed-form")
    _emit([record], args.format)
    if args.format == "table":
        print(f"zero-point share of the Stokes line: {100.0 * value:.2f}%")
    return 0


def _cmd_verify(args) -> int:
    suites = (["chain", "spectral", "lattice"] if args.suite == "all" else [args.suite])
    runners = {"spectral": verify.verify_spectral,
               "lattice": verify.verify_lattice,
               "chain": verify.verify_chain}
    all_passed = True
    for suite in suites:
        print(f"suite: {suite}")
        for check in runners[suite]():
            status = "PASS" if check.passed else "FAIL"
            line = (f"  [{status}] {check.name}: tolerance={check.tolerance:.3e} "
                    f"achieved={check.achieved:.3e}")
            if check.detail:
                line += f"  ({check.detail})"
            print(line)
            all_passed = all_passed and check.passed
    return 0 if all_passed else 1


def _cmd_materials(args) -> int:
    if args.action == "list":
        for name in builtin_names():
            print(name)
        return 0
    medium = resolve_material(args.name)
    violations = validate(medium)
    if violations:
        raise FluctusError("; ".join(f"{v} violated" for v in violations))
    print(dumps_material(medium), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fluctus",
        description="Zero-point density fluctuations in fluids and the light they scatter.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "csv", "json"), default="table",
                       help="output format (default: aligned table)")

    p = sub.add_parser("correlator", help="vacuum density correlator")
    p.add_argument("--material", required=True, help="built-in name or material file")
    p.add_argument("--r", help="spatial distance in m (sweepable: lo..hi:steps[L])")
    p.add_argument("--dt", default="0", help="time lag in s (default 0)")
    p.add_argument("--boundary", metavar="Z",
                   help="also report the variance shift at distance Z from a plane "
                        "wall (sweepable)")
    add_format(p)
    p.set_defaults(func=_cmd_correlator)

    p = sub.add_parser("xsection", help="light-scattering cross sections")
    p.add_argument("--material", required=True)
    p.add_argument("--lambda", dest="wavelength", type=float,
                   help="vacuum wavelength in m")
    p.add_argument("--omega", type=float, help="angular frequency in rad/s")
    p.add_argument("--theta", required=True,
                   help="scattering angle in degrees (sweepable: lo..hi:steps[L])")
    p.add_argument("--pol", default="perpendicular",
                   choices=[pol.value for pol in scattering.Polarization])
    p.add_argument("--kind", default="zp", choices=sorted(_KINDS))
    p.add_argument("--temperature", type=float, help="bath temperature in K")
    p.add_argument("--volume", type=float, default=1.0,
                   help="scattering volume multiplier in m^3 (default 1)")
    add_format(p)
    p.set_defaults(func=_cmd_xsection)

    p = sub.add_parser("ratio", help="zero-point / thermal Brillouin ratio")
    p.add_argument("--material", required=True)
    p.add_argument("--lambda", dest="wavelength", type=float)
    p.add_argument("--omega", type=float)
    p.add_argument("--theta", required=True, help="scattering angle in degrees")
    p.add_argument("--temperature", type=float)
    add_format(p)
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("verify", help="run a cross-validation suite")
    p.add_argument("suite", choices=("spectral", "lattice", "chain", "all"))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("materials", help="list or show materials")
    msub = p.add_subparsers(dest="action", required=True)
    mlist = msub.add_parser("list", help="list built-in materials")
    mlist.set_defaults(func=_cmd_materials)
    mshow = msub.add_parser("show", help="validate and pretty-print a material")
    mshow.add_argument("name", help="built-in name or material file path")
    mshow.set_defaults(func=_cmd_materials)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FluctusError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Physical constants, fluid material data, and material-file ingestion.

A :class:`FluidMedium` bundles everything the correlator and scattering
formulas need to know about a fluid: mean density, sound speed, optical
constants, and (optionally) the thermal coefficients entering the
Rayleigh line.  One material is built in (water near room temperature);
anything else comes from a small ``key = value`` text file, see
:func:`load_material`.

The refractive index ``eta`` is the measured index at the probe
frequency and the mean dielectric constant is pinned to ``epsilon0 =
eta**2``.  The dimensionless product rho0 * (d eps / d rho)_S is stored
directly (``drho``) because only the product ever enters an observable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import (
    MaterialFileError,
    MaterialValidationError,
    UnknownMaterialError,
)

__all__ = [
    "PhysicalConstants",
    "CONSTANTS",
    "HBAR",
    "C_LIGHT",
    "K_B",
    "DEFAULT_TEMPERATURE",
    "FluidMedium",
    "fluid_medium",
    "validate",
    "builtin_material",
    "builtin_names",
    "load_material",
    "parse_material",
    "dumps_material",
    "resolve_material",
    "MATERIAL_PATH_ENV",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """SI values of the three constants used throughout the package."""

    hbar: float  # reduced Planck constant, J s
    c: float     # speed of light in vacuum, m/s
    kB: float    # Boltzmann constant, J/K


#: Single source of truth; every module imports from here.
CONSTANTS = PhysicalConstants(hbar=1.054571817e-34, c=299792458.0, kB=1.380649e-23)

HBAR = CONSTANTS.hbar
C_LIGHT = CONSTANTS.c
K_B = CONSTANTS.kB

#: "Room temperature" used when a material file or call gives no temperature.
DEFAULT_TEMPERATURE = 295.0


@dataclass(frozen=True)
class FluidMedium:
    """Material properties of a fluid.

    Attributes
    ----------
    name : str
        Identifier used in output records and error messages.
    rho0 : float
        Mean mass density, kg/m^3.
    cs : float
        Speed of sound, m/s.
    eta : float
        Refractive index at the probe frequency (dimensionless, >= 1).
    epsilon0 : float
        Mean dielectric constant; pinned to eta**2.
    drho : float
        Dimensionless product rho0 * (d eps / d rho0) at constant entropy.
    cp : float or None
        Heat capacity per unit mass at constant pressure, J/(kg K).
        Optional; only the Rayleigh term of the thermal cross section
        needs it.
    deps_dt : float or None
        (d eps / d T) at constant pressure, 1/K.  Optional, as above.
    default_temperature : float
        Reference temperature in K used when a call supplies none.
    """

    name: str
    rho0: float
    cs: float
    eta: float
    epsilon0: float
    drho: float
    cp: float | None = None
    deps_dt: float | None = None
    default_temperature: float = DEFAULT_TEMPERATURE


def fluid_medium(name, rho0, cs, eta, drho, cp=None, deps_dt=None,
                 default_temperature=DEFAULT_TEMPERATURE) -> FluidMedium:
    """Build a validated FluidMedium with epsilon0 = eta**2 enforced.

    Raises
    ------
    MaterialValidationError
        If any invariant is violated (message lists all of them).
    """
    medium = FluidMedium(
        name=str(name),
        rho0=float(rho0),
        cs=float(cs),
        eta=float(eta),
        epsilon0=float(eta) * float(eta),
        drho=float(drho),
        cp=None if cp is None else float(cp),
        deps_dt=None if deps_dt is None else float(deps_dt),
        default_temperature=float(default_temperature),
    )
    violations = validate(medium)
    if violations:
        raise MaterialValidationError(violations)
    return medium


def validate(medium: FluidMedium) -> list[str]:
    """Return every violated invariant of ``medium`` (empty list if valid).

    Violations are data, not failures: this never raises.  Each entry is
    the invariant itself, e.g. ``"eta >= 1"``.
    """
    v = []
    if not medium.rho0 > 0:
        v.append("rho0 > 0")
    if not medium.cs > 0:
        v.append("cS > 0")
    if not medium.eta >= 1:
        v.append("eta >= 1")
    if not medium.epsilon0 >= 1:
        v.append("epsilon0 >= 1")
    if not medium.default_temperature > 0:
        v.append("defaultT > 0")
    if not medium.cs < C_LIGHT:
        v.append("cS < c")
    if abs(medium.epsilon0 - medium.eta * medium.eta) > 1e-12 * max(medium.epsilon0, 1.0):
        v.append("epsilon0 = eta^2")
    if medium.cp is not None and not medium.cp > 0:
        v.append("cP > 0")
    return v


# Water near room temperature.  cs, eta and drho are the standard handbook
# values for the optical regime; rho0 is the standard-table density, an
# external input the user may override via a material file (it cancels in
# the zero-point/thermal ratio anyway).
_WATER = FluidMedium(
    name="water",
    rho0=997.0,
    cs=1480.0,
    eta=1.4,
    epsilon0=1.4 * 1.4,
    drho=0.79,
    default_temperature=DEFAULT_TEMPERATURE,
)

_BUILTINS = {"water": _WATER}


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)


def builtin_material(name: str) -> FluidMedium:
    """Return a built-in material by name.

    Raises
    ------
    UnknownMaterialError
        Listing the available names.
    """
    try:
        return _BUILTINS[name]
    except KeyError:
        raise UnknownMaterialError(
            f"unknown material '{name}'; available built-ins: "
            + ", ".join(builtin_names())
        ) from None


# --- material files -------------------------------------------------------
#
# UTF-8 text, one `key = value` per line, `#` starts a comment.  Unknown
# keys are an error (typo protection).

_REQUIRED_KEYS = ("name", "rho0_kg_m3", "cs_m_s", "refractive_index", "depsilon_drho")
_OPTIONAL_KEYS = ("cp_j_kg_k", "depsilon_dt_per_k", "temperature_k")
_STRING_KEYS = ("name",)


def parse_material(text: str, source: str = "<string>") -> FluidMedium:
    """Parse material-file text into a validated FluidMedium.

    Raises
    ------
    MaterialFileError
        On any syntax problem, with the offending line number.
    MaterialValidationError
        If the parsed material violates an invariant.
    """
    pairs: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise MaterialFileError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _REQUIRED_KEYS and key not in _OPTIONAL_KEYS:
            raise MaterialFileError(f"{source}:{lineno}: unknown key '{key}'")
        if key in pairs:
            raise MaterialFileError(f"{source}:{lineno}: duplicate key '{key}'")
        if key in _STRING_KEYS:
            if not value:
                raise MaterialFileError(f"{source}:{lineno}: empty value for '{key}'")
            pairs[key] = value
        else:
            try:
                pairs[key] = float(value)
            except ValueError:
                raise MaterialFileError(
                    f"{source}:{lineno}: value for '{key}' is not a number: {value!r}"
                ) from None
    for key in _REQUIRED_KEYS:
        if key not in pairs:
            raise MaterialFileError(f"{source}: missing required key '{key}'")
    return fluid_medium(
        name=pairs["name"],
        rho0=pairs["rho0_kg_m3"],
        cs=pairs["cs_m_s"],
        eta=pairs["refractive_index"],
        drho=pairs["depsilon_drho"],
        cp=pairs.get("cp_j_kg_k"),
        deps_dt=pairs.get("depsilon_dt_per_k"),
        default_temperature=pairs.get("temperature_k", DEFAULT_TEMPERATURE),
    )


def load_material(path) -> FluidMedium:
    """Load and validate a material file (see module docstring for format)."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_material(text, source=str(path))


def dumps_material(medium: FluidMedium) -> str:
    """Serialize a FluidMedium in the material-file format.

    Loading the result reproduces the medium exactly (round-trip identity
    on every present field).
    """
    lines = [
        f"name = {medium.name}",
        f"rho0_kg_m3 = {medium.rho0!r}",
        f"cs_m_s = {medium.cs!r}",
        f"refractive_index = {medium.eta!r}",
        f"depsilon_drho = {medium.drho!r}",
    ]
    if medium.cp is not None:
        lines.append(f"cp_j_kg_k = {medium.cp!r}")
    if medium.deps_dt is not None:
        lines.append(f"depsilon_dt_per_k = {medium.deps_dt!r}")
    lines.append(f"temperature_k = {medium.default_temperature!r}")
    return "\n".join(lines) + "\n"


MATERIAL_PATH_ENV = "FLUCTUS_MATERIAL_PATH"


def resolve_material(name_or_path: str) -> FluidMedium:
    """Resolve a material given by built-in name, file path, or search name.

    Resolution order: built-in name, then a literal file path, then
    ``<dir>/<name>`` and ``<dir>/<name>.mat`` under the directory named
    by the FLUCTUS_MATERIAL_PATH environment variable.
    """
    if name_or_path in _BUILTINS:
        return _BUILTINS[name_or_path]
    if os.path.exists(name_or_path):
        return load_material(name_or_path)
    search_dir = os.environ.get(MATERIAL_PATH_ENV)
    if search_dir:
        for candidate in (name_or_path, name_or_path + ".mat"):
            path = os.path.join(search_dir, candidate)
            if os.path.exists(path):
                return load_material(path)
    raise UnknownMaterialError(
        f"unknown material '{name_or_path}': not a built-in "
        f"({', '.join(builtin_names())}), not an existing file, and not "
        f"found under ${MATERIAL_PATH_ENV}"
    )


def with_temperature(medium: FluidMedium, temperature: float) -> FluidMedium:
    """Copy of ``medium`` with a different reference temperature."""
    return replace(medium, default_temperature=float(temperature))

"""Closed-form phonon-vacuum density correlators.

For a fluid with linear phonon dispersion (frequency = cs * wavenumber)
the ground-state correlator of the density-deviation operator at spatial
distance r and time lag dt is

    <rho rho> = - (hbar rho0 / 2 pi^2 cs) (r^2 + 3 cs^2 dt^2)
                                          / (r^2 - cs^2 dt^2)^3 .

The denominator carries the *unrepeated* time term: this form is the one
the independent spectral quadrature (``fluctus.spectral``) confirms, it
reduces to the equal-time limit -hbar rho0 / (2 pi^2 cs r^4), and it
reproduces the sign structure (anticorrelation outside the sound cone,
positive correlation inside).  A variant with the numerator's factor of
3 repeated in the denominator circulates; the verification suite rejects
it at the >10% level (see ``fluctus.verify``).

Also here: the planar-boundary reduction of the local variance via an
image source (Neumann wall: vanishing normal density derivative), the
electromagnetic counterpart near a reflecting plate for side-by-side
display, the relativistic scalar-field analog obtained by swapping the
sound and light speeds, and the linear-in-q zero-point structure factor.

Values on the sound cone or at coincident points are errors, not
infinities; regulated evaluation lives in ``fluctus.spectral``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (
    BoundaryContactError,
    CoincidenceDivergenceError,
    SoundConeSingularityError,
)
from .medium import HBAR, FluidMedium

__all__ = [
    "Regime",
    "Separation",
    "CorrelatorValue",
    "SOUND_CONE_TOLERANCE",
    "correlator",
    "equal_time_correlator",
    "scalar_field_analog",
    "boundary_shift_planar",
    "boundary_image_term",
    "boundary_correlator",
    "em_vacuum_shift_plate",
    "zero_point_structure_factor",
]

#: Relative half-width of the band around r = cs*|dt| classified as
#: on-cone.  Inside this band the closed form loses digits to
#: cancellation and the physical value diverges, so evaluation refuses.
SOUND_CONE_TOLERANCE = 1e-4


class Regime(enum.Enum):
    """Position of a separation relative to the sound cone."""

    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    ON_CONE = "on-cone"
    COINCIDENT = "coincident"


@dataclass(frozen=True)
class Separation:
    """Spatial distance r >= 0 (m) and time lag dt (s) between two points.

    The regime tag is derived against a specific sound speed, since the
    cone position depends on the medium.
    """

    r: float
    dt: float = 0.0

    def __post_init__(self):
        if not self.r >= 0.0:
            raise ValueError(f"separation distance must be >= 0, got {self.r}")
        if not math.isfinite(self.r) or not math.isfinite(self.dt):
            raise ValueError("separation components must be finite")

    def regime(self, cs: float, tol: float = SOUND_CONE_TOLERANCE) -> Regime:
        """Classify against the sound cone of a medium with sound speed cs."""
        b = cs * abs(self.dt)
        if self.r == 0.0 and b == 0.0:
            return Regime.COINCIDENT
        if abs(self.r - b) <= tol * max(self.r, b):
            return Regime.ON_CONE
        return Regime.SPACELIKE if self.r > b else Regime.TIMELIKE


@dataclass(frozen=True)
class CorrelatorValue:
    """A density-squared correlation (kg^2/m^6) with its formula identity.

    ``formula`` names the closed form that produced the number and
    ``inputs`` echoes the call (keys carry units).
    """

    value: float
    formula: str
    inputs: dict


def _require_off_cone(medium: FluidMedium, sep: Separation) -> Regime:
    regime = sep.regime(medium.cs)
    if regime is Regime.COINCIDENT:
        raise CoincidenceDivergenceError(
            "coincident points: the vacuum density variance diverges"
        )
    if regime is Regime.ON_CONE:
        raise SoundConeSingularityError(
            f"separation lies on the sound cone of '{medium.name}' "
            f"(r = {sep.r!r} m, cs*|dt| = {medium.cs * abs(sep.dt)!r} m)"
        )
    return regime


def _closed_form(medium: FluidMedium, r: float, dt: float) -> float:
    # Single evaluation path shared by correlator and the equal-time
    # limit so the two agree bit for bit at dt = 0.
    b2 = (medium.cs * dt) ** 2
    r2 = r * r
    return (
        -HBAR * medium.rho0 / (2.0 * math.pi**2 * medium.cs)
        * (r2 + 3.0 * b2) / (r2 - b2) ** 3
    )


def correlator(medium: FluidMedium, sep: Separation) -> CorrelatorValue:
    """Vacuum density correlator at separation ``sep``.

    Negative for spacelike separations (fluctuations anticorrelated: an
    overdensity at one point sits next to an underdensity), positive for
    timelike ones (causally connected fluctuations).

    Raises
    ------
    SoundConeSingularityError, CoincidenceDivergenceError
        On or at the apex of the sound cone.
    """
    _require_off_cone(medium, sep)
    return CorrelatorValue(
        value=_closed_form(medium, sep.r, sep.dt),
        formula="density-correlator",
        inputs={"material": medium.name, "r_m": sep.r, "dt_s": sep.dt},
    )


def equal_time_correlator(medium: FluidMedium, r: float) -> CorrelatorValue:
    """Equal-time correlator -hbar rho0 / (2 pi^2 cs r^4); r > 0.

    Strictly negative, and identical (bit for bit) to
    ``correlator(medium, Separation(r, 0))``.
    """
    if r == 0.0:
        raise CoincidenceDivergenceError(
            "coincident points: the vacuum density variance diverges"
        )
    if not r > 0.0:
        raise ValueError(f"distance must be positive, got {r}")
    return CorrelatorValue(
        value=_closed_form(medium, r, 0.0),
        formula="equal-time-correlator",
        inputs={"material": medium.name, "r_m": r},
    )


def scalar_field_analog(c_light: float, sep: Separation) -> float:
    """Correlator of the time derivative of a massless scalar field.

    Same closed form as the density correlator with the speed of sound
    replaced by ``c_light``:

        <phidot phidot> = -(hbar c^3 / 2 pi^2) (r^2 + 3 c^2 dt^2)
                                               / (r^2 - c^2 dt^2)^3 .

    Substituting c -> cs makes the ratio to ``correlator`` a single
    separation-independent constant, which is the analog-model map.
    """
    if not c_light > 0.0:
        raise ValueError(f"propagation speed must be positive, got {c_light}")
    b = c_light * abs(sep.dt)
    if sep.r == 0.0 and b == 0.0:
        raise CoincidenceDivergenceError("coincident points: divergent")
    if abs(sep.r - b) <= SOUND_CONE_TOLERANCE * max(sep.r, b):
        raise SoundConeSingularityError(
            f"separation lies on the cone of speed {c_light!r} m/s"
        )
    b2 = (c_light * sep.dt) ** 2
    r2 = sep.r * sep.r
    return -HBAR * c_light**3 / (2.0 * math.pi**2) * (r2 + 3.0 * b2) / (r2 - b2) ** 3


def boundary_shift_planar(medium: FluidMedium, z: float) -> CorrelatorValue:
    """Shift of the mean squared density at distance z from a plane wall.

    An impenetrable wall forces the normal derivative of the density to
    vanish; renormalizing against the boundary-free vacuum leaves

        <(delta rho)^2>_R = - hbar rho0 / (32 pi^2 cs z^4).

    The minus sign is a *reduction* of the fluctuations near the wall,
    the acoustic counterpart of the shift in the mean squared
    electromagnetic fields near a reflecting plate
    (:func:`em_vacuum_shift_plate`).
    """
    if z == 0.0:
        raise BoundaryContactError("z = 0: the renormalized variance diverges at the wall")
    if not z > 0.0:
        raise ValueError(f"distance to wall must be positive, got {z}")
    value = -HBAR * medium.rho0 / (32.0 * math.pi**2 * medium.cs * z**4)
    return CorrelatorValue(
        value=value,
        formula="planar-boundary-shift",
        inputs={"material": medium.name, "z_m": z},
    )


def _image_distance(z1: float, z2: float, transverse: float) -> float:
    return math.hypot(transverse, z1 + z2)


def boundary_image_term(medium: FluidMedium, z1: float, z2: float,
                        transverse: float = 0.0, dt: float = 0.0) -> CorrelatorValue:
    """Image-source contribution to the boundary correlator.

    The Neumann wall is realized by adding, with positive sign, the free
    correlator evaluated at the image separation (z2 reflected to -z2).
    This term stays finite at coincident field points, where it *is* the
    renormalized variance shift: at z1 = z2 = z, transverse = dt = 0 the
    image sits at distance 2z and the term equals
    :func:`boundary_shift_planar` exactly.
    """
    if not (z1 > 0.0 and z2 > 0.0):
        raise ValueError("both points must be strictly inside the fluid (z1, z2 > 0)")
    sep_image = Separation(_image_distance(z1, z2, transverse), dt)
    _require_off_cone(medium, sep_image)
    return CorrelatorValue(
        value=_closed_form(medium, sep_image.r, sep_image.dt),
        formula="boundary-image-term",
        inputs={"material": medium.name, "z1_m": z1, "z2_m": z2,
                "transverse_m": transverse, "dt_s": dt},
    )


def boundary_correlator(medium: FluidMedium, z1: float, z2: float,
                        transverse: float = 0.0, dt: float = 0.0) -> CorrelatorValue:
    """Density correlator in the presence of a planar Neumann wall.

    Image construction: free correlator at the direct separation plus
    the free correlator at the image separation.  Both separations must
    be off the sound cone; the direct one must not be coincident.
    Sending the transverse distance to infinity recovers the free
    correlator.
    """
    if not (z1 > 0.0 and z2 > 0.0):
        raise ValueError("both points must be strictly inside the fluid (z1, z2 > 0)")
    sep_direct = Separation(math.hypot(transverse, z1 - z2), dt)
    _require_off_cone(medium, sep_direct)
    image = boundary_image_term(medium, z1, z2, transverse, dt)
    value = _closed_form(medium, sep_direct.r, sep_direct.dt) + image.value
    return CorrelatorValue(
        value=value,
        formula="boundary-correlator",
        inputs={"material": medium.name, "z1_m": z1, "z2_m": z2,
                "transverse_m": transverse, "dt_s": dt},
    )


def em_vacuum_shift_plate(z: float) -> tuple[float, float]:
    """Mean-squared E and B shifts near a perfectly reflecting plate.

    Returned as dimensionless coefficients of hbar*c/z^4 (so no
    electromagnetic unit system is committed to):

        <E^2> = +3/(16 pi^2),   <B^2> = -3/(16 pi^2).

    Shown side by side with :func:`boundary_shift_planar` in the CLI;
    note <E^2> = -<B^2> while the density shift has a definite sign.
    """
    if z == 0.0:
        raise BoundaryContactError("z = 0: plate-contact divergence")
    if not z > 0.0:
        raise ValueError(f"distance to plate must be positive, got {z}")
    coeff = 3.0 / (16.0 * math.pi**2)
    return (coeff, -coeff)


def zero_point_structure_factor(medium: FluidMedium, q: float) -> float:
    """Spectral density of vacuum density fluctuations at wavenumber q.

    Per-mode weight hbar rho0 Omega_q / (2 cs^2) with Omega_q = cs q,
    i.e. hbar rho0 q / (2 cs): linear in q and vanishing at q = 0.  The
    linear spectrum is what turns the fourth power of frequency in
    thermal light scattering into the fifth power for the zero-point
    contribution (kg^2/m^3).
    """
    if not q >= 0.0:
        raise ValueError(f"wavenumber must be >= 0, got {q}")
    return HBAR * medium.rho0 * q / (2.0 * medium.cs)

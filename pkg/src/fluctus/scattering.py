"""Light-scattering observables of the phonon vacuum and the thermal bath.

Scattering of a photon with emission of one phonon is assembled two
independent ways:

* a first-order golden-rule chain (squared matrix element, final-state
  density, flux normalization) in :func:`zp_cross_section_chain`, where
  the quantization volume cancels analytically; and
* the closed-form differential cross section per unit scattering volume
  in :func:`zp_cross_section_exact`,

      d sigma / d Omega = hbar w w'^3 Wq eta^4 / (32 pi^2 c^4 cs^2 rho0)
                          * (e.e')^2 ,

  which with the small-shift kinematics w' ~ w collapses to the
  fifth-power-of-frequency law of :func:`zp_cross_section_reduced`.

The thermal counterparts (Brillouin doublet and Rayleigh centre line)
and the headline zero-point/thermal ratio

    R = sqrt(2 (1 - cos theta)) (hbar w / 2 kB T) (cs / c) eta^4
        / [rho0 (d eps/d rho0)_S]^2

complete the set.  All cross sections are per unit scattering volume
(1/(m sr)); multiply by the illuminated volume for an apparatus value.
The zero-point channel creates a phonon, so it feeds only the
frequency-downshifted (Stokes) side of the Brillouin doublet.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import MissingPropertyError
from .medium import C_LIGHT, HBAR, K_B, FluidMedium

__all__ = [
    "Polarization",
    "ScatteringConfig",
    "Kinematics",
    "CrossSectionValue",
    "omega_from_wavelength",
    "phonon_kinematics",
    "polarization_factor",
    "matrix_element_sq",
    "density_of_states",
    "incident_flux",
    "zp_cross_section_chain",
    "zp_cross_section_exact",
    "zp_cross_section_reduced",
    "adiabatic_compressibility",
    "thermal_brillouin_cross_section",
    "thermal_total_cross_section",
    "ratio_zp_thermal",
]


class Polarization(enum.Enum):
    """Linear polarization selection relative to the scattering plane."""

    PERPENDICULAR = "perpendicular"
    PARALLEL = "parallel"
    CROSSED = "crossed"
    UNPOLARIZED = "unpolarized"


@dataclass(frozen=True)
class ScatteringConfig:
    """Incident light and detection geometry.

    ``omega`` is the vacuum-definition angular frequency (2 pi c over the
    vacuum wavelength), ``theta`` the scattering angle in radians in
    (0, pi], ``temperature`` the bath temperature for thermal quantities
    (None defers to the medium's reference temperature).
    """

    omega: float
    theta: float
    pol: Polarization = Polarization.PERPENDICULAR
    temperature: float | None = None

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ValueError(f"angular frequency must be positive, got {self.omega}")
        if not 0.0 < self.theta <= math.pi:
            raise ValueError(f"scattering angle must lie in (0, pi], got {self.theta}")
        if self.temperature is not None and not self.temperature > 0.0:
            raise ValueError(f"temperature must be positive, got {self.temperature}")


def omega_from_wavelength(wavelength: float) -> float:
    """Angular frequency from the vacuum wavelength (m)."""
    if not wavelength > 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    return 2.0 * math.pi * C_LIGHT / wavelength


@dataclass(frozen=True)
class Kinematics:
    """Frequencies of a single phonon-emission event (all rad/s, q in 1/m).

    Energy bookkeeping omega = omega_prime + omega_q holds exactly.
    """

    omega: float
    omega_prime: float
    omega_q: float
    q: float


def phonon_kinematics(medium: FluidMedium, cfg: ScatteringConfig,
                      in_medium: bool = False) -> Kinematics:
    """Emitted-phonon frequency and scattered light frequency.

    Energy and momentum conservation with a phonon much slower than the
    light give

        Omega_q = sqrt(2 (1 - cos theta)) (cs / c) omega,

    always a tiny fraction of omega (at most 2 cs/c at backscatter).
    With ``in_medium=True`` the momentum balance uses in-medium photon
    wavevectors, multiplying Omega_q by the refractive index; default is
    the bare form above.
    """
    factor = math.sqrt(2.0 * (1.0 - math.cos(cfg.theta)))
    omega_q = factor * (medium.cs / C_LIGHT) * cfg.omega
    if in_medium:
        omega_q *= medium.eta
    omega_prime = cfg.omega - omega_q
    # Re-derive the shift from the rounded difference so that
    # omega_prime + omega_q reproduces omega exactly in floating point.
    omega_q = cfg.omega - omega_prime
    return Kinematics(omega=cfg.omega, omega_prime=omega_prime,
                      omega_q=omega_q, q=omega_q / medium.cs)


def polarization_factor(theta: float, pol: Polarization) -> float:
    """Squared polarization overlap (e.e')^2 for the selection ``pol``.

    Perpendicular to the scattering plane: 1.  In-plane (parallel):
    cos^2 theta.  Crossed selections are orthogonal: 0.  Unpolarized:
    average over incident and sum over scattered linear polarizations,
    (1 + cos^2 theta)/2.
    """
    c = math.cos(theta)
    if pol is Polarization.PERPENDICULAR:
        return 1.0
    if pol is Polarization.PARALLEL:
        return c * c
    if pol is Polarization.CROSSED:
        return 0.0
    if pol is Polarization.UNPOLARIZED:
        return 0.5 * (1.0 + c * c)
    raise ValueError(f"unknown polarization selection {pol!r}")


@dataclass(frozen=True)
class CrossSectionValue:
    """Differential cross section per unit scattering volume, 1/(m sr).

    ``formula`` identifies the producing closed form and ``pol_factor``
    echoes the squared polarization overlap that was applied.
    """

    value: float
    formula: str
    pol_factor: float


def matrix_element_sq(medium: FluidMedium, omega: float, omega_prime: float,
                      omega_q: float, volume: float, pol_factor: float) -> float:
    """Squared first-order matrix element for photon -> photon + phonon (J^2).

    hbar^3 omega omega' Omega_q / (8 V rho0 cs^2) times the squared
    polarization overlap; scales as 1/V with the quantization volume.
    """
    if not (omega > 0.0 and omega_prime > 0.0 and omega_q > 0.0):
        raise ValueError("all frequencies must be positive")
    if not volume > 0.0:
        raise ValueError(f"quantization volume must be positive, got {volume}")
    return (HBAR**3 * omega * omega_prime * omega_q
            / (8.0 * volume * medium.rho0 * medium.cs**2)) * pol_factor


def density_of_states(omega_prime: float, epsilon0: float, volume: float) -> float:
    """Photon final states per unit energy per steradian in the dielectric.

    V omega'^2 epsilon0^(3/2) / (hbar (2 pi c)^3); the epsilon0^(3/2)
    counts the compressed in-medium mode spacing.
    """
    if not (omega_prime > 0.0 and epsilon0 > 0.0 and volume > 0.0):
        raise ValueError("all inputs must be positive")
    return volume * omega_prime**2 * epsilon0**1.5 / (HBAR * (2.0 * math.pi * C_LIGHT) ** 3)


def incident_flux(epsilon0: float, volume: float) -> float:
    """Flux of one photon in the quantization box: c / (V sqrt(epsilon0))."""
    if not (epsilon0 > 0.0 and volume > 0.0):
        raise ValueError("all inputs must be positive")
    return C_LIGHT / (volume * math.sqrt(epsilon0))


def zp_cross_section_chain(medium: FluidMedium, cfg: ScatteringConfig,
                           volume: float = 1.0) -> CrossSectionValue:
    """Zero-point cross section assembled from the golden-rule chain.

    (2 pi / hbar) |M|^2 rho_f / (flux * V), per unit scattering volume.
    Every quantization-volume factor cancels analytically, so the result
    is independent of ``volume``; the parameter exists to demonstrate
    that cancellation.
    """
    kin = phonon_kinematics(medium, cfg)
    pol = polarization_factor(cfg.theta, cfg.pol)
    if pol == 0.0:
        return CrossSectionValue(value=0.0, formula="zp-golden-rule-chain", pol_factor=pol)
    m2 = matrix_element_sq(medium, kin.omega, kin.omega_prime, kin.omega_q, volume, pol)
    rate = (2.0 * math.pi / HBAR) * m2 * density_of_states(kin.omega_prime,
                                                           medium.epsilon0, volume)
    value = rate / (incident_flux(medium.epsilon0, volume) * volume)
    return CrossSectionValue(value=value, formula="zp-golden-rule-chain", pol_factor=pol)


def zp_cross_section_exact(medium: FluidMedium, cfg: ScatteringConfig) -> CrossSectionValue:
    """Closed-form zero-point cross section with exact kinematics.

    hbar omega omega'^3 Omega_q eta^4 / (32 pi^2 c^4 cs^2 rho0) times the
    polarization factor, per unit scattering volume.  Linear in hbar:
    this channel disappears in the classical limit.
    """
    kin = phonon_kinematics(medium, cfg)
    pol = polarization_factor(cfg.theta, cfg.pol)
    value = (HBAR * kin.omega * kin.omega_prime**3 * kin.omega_q * medium.eta**4
             / (32.0 * math.pi**2 * C_LIGHT**4 * medium.cs**2 * medium.rho0)) * pol
    return CrossSectionValue(value=value, formula="zp-exact", pol_factor=pol)


def zp_cross_section_reduced(medium: FluidMedium, cfg: ScatteringConfig) -> CrossSectionValue:
    """Zero-point cross section in the fifth-power-of-frequency form.

    sqrt(2 (1 - cos theta)) hbar omega^5 eta^4 / (32 pi^2 c^5 cs rho0)
    times the polarization factor.  The omega^5 law is the fourth power
    familiar from quasi-elastic scattering times one more power from the
    linear zero-point spectrum; relative to :func:`zp_cross_section_exact`
    the neglected recoil is bounded by 4 Omega_q / omega.
    """
    pol = polarization_factor(cfg.theta, cfg.pol)
    angular = math.sqrt(2.0 * (1.0 - math.cos(cfg.theta)))
    value = (angular * HBAR * cfg.omega**5 * medium.eta**4
             / (32.0 * math.pi**2 * C_LIGHT**5 * medium.cs * medium.rho0)) * pol
    return CrossSectionValue(value=value, formula="zp-omega5", pol_factor=pol)


def adiabatic_compressibility(medium: FluidMedium) -> float:
    """beta_S = 1 / (rho0 cs^2), in 1/Pa."""
    return 1.0 / (medium.rho0 * medium.cs**2)


def _bath_temperature(medium: FluidMedium, cfg: ScatteringConfig) -> float:
    return cfg.temperature if cfg.temperature is not None else medium.default_temperature


def thermal_brillouin_cross_section(medium: FluidMedium,
                                    cfg: ScatteringConfig) -> CrossSectionValue:
    """Thermal Brillouin cross section per unit scattering volume.

    omega^4 kB T / (16 pi^2 c^4 cs^2 rho0) * [rho0 (d eps/d rho0)_S]^2
    times the polarization factor.  Classical (no hbar) and linear in T.
    """
    T = _bath_temperature(medium, cfg)
    pol = polarization_factor(cfg.theta, cfg.pol)
    value = (cfg.omega**4 * K_B * T * medium.drho**2
             / (16.0 * math.pi**2 * C_LIGHT**4 * medium.cs**2 * medium.rho0)) * pol
    return CrossSectionValue(value=value, formula="thermal-brillouin", pol_factor=pol)


def thermal_total_cross_section(medium: FluidMedium,
                                cfg: ScatteringConfig) -> CrossSectionValue:
    """Brillouin plus Rayleigh thermal cross section per unit volume.

    omega^4 kB T / (16 pi^2 c^4) * [ beta_S rho0^2 (d eps/d rho0)_S^2
    + (T / rho0 cP) (d eps/d T)_P^2 ] times the polarization factor.
    The first term is exactly :func:`thermal_brillouin_cross_section`
    (compressibility identity); the second is the entropy-fluctuation
    centre line and needs the optional material properties cp and
    deps_dt.
    """
    if medium.cp is None:
        raise MissingPropertyError("cp", medium.name)
    if medium.deps_dt is None:
        raise MissingPropertyError("deps_dt", medium.name)
    T = _bath_temperature(medium, cfg)
    pol = polarization_factor(cfg.theta, cfg.pol)
    brillouin = adiabatic_compressibility(medium) * medium.drho**2
    rayleigh = (T / (medium.rho0 * medium.cp)) * medium.deps_dt**2
    value = (cfg.omega**4 * K_B * T / (16.0 * math.pi**2 * C_LIGHT**4)) \
        * (brillouin + rayleigh) * pol
    return CrossSectionValue(value=value, formula="thermal-total", pol_factor=pol)


def ratio_zp_thermal(medium: FluidMedium, cfg: ScatteringConfig) -> float:
    """Zero-point share of the Stokes Brillouin line (dimensionless).

    sqrt(2 (1 - cos theta)) (hbar omega / 2 kB T) (cs / c) eta^4
    / [rho0 (d eps/d rho0)_S]^2.  Polarization factors cancel in the
    quotient, as does rho0 on its own: only the product drho enters.
    Grows linearly with frequency, falls as 1/T.
    """
    if medium.drho == 0.0:
        raise ZeroDivisionError(
            f"material '{medium.name}' has drho = 0; the thermal Brillouin "
            "cross section vanishes and the ratio is undefined"
        )
    T = _bath_temperature(medium, cfg)
    angular = math.sqrt(2.0 * (1.0 - math.cos(cfg.theta)))
    return (angular * (HBAR * cfg.omega / (2.0 * K_B * T))
            * (medium.cs / C_LIGHT) * medium.eta**4 / medium.drho**2)

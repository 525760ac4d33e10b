"""From vacuum fluctuations to the photodetector: the water benchmark.

One script, four observables: phonon-emission kinematics, the
golden-rule assembly against the closed-form cross section, the
fifth-power frequency law, and the zero-point share of the Stokes
Brillouin line across wavelength and temperature.

Run:  python demos/scattering_observables.py
"""

import math

import numpy as np

from fluctus import (
    ScatteringConfig,
    builtin_material,
    omega_from_wavelength,
    phonon_kinematics,
    ratio_zp_thermal,
    thermal_brillouin_cross_section,
    zp_cross_section_chain,
    zp_cross_section_exact,
    zp_cross_section_reduced,
)

water = builtin_material("water")
cfg = ScatteringConfig(omega=omega_from_wavelength(350e-9), theta=math.pi,
                       temperature=295.0)

# --- kinematics -------------------------------------------------------------------
kin = phonon_kinematics(water, cfg)
print("violet light (350 nm) backscattering off water:")
print(f"  incident omega     = {kin.omega:.6e} rad/s")
print(f"  emitted phonon     = {kin.omega_q:.6e} rad/s "
      f"({kin.omega_q / kin.omega:.2e} of omega)")
print(f"  scattered omega'   = {kin.omega_prime:.6e} rad/s")
print(f"  exact bookkeeping: omega' + Omega_q == omega is "
      f"{kin.omega_prime + kin.omega_q == kin.omega}\n")

# --- two routes to the same cross section --------------------------------------------
chain = zp_cross_section_chain(water, cfg).value
exact = zp_cross_section_exact(water, cfg).value
reduced = zp_cross_section_reduced(water, cfg).value
print("zero-point cross section per unit scattering volume (1/(m sr)):")
print(f"  golden-rule chain    {chain:.9e}")
print(f"  closed form          {exact:.9e}   rel dev {abs(chain - exact) / exact:.1e}")
print(f"  omega^5 form         {reduced:.9e}   recoil bound "
      f"{4 * kin.omega_q / kin.omega:.1e}\n")

# --- the omega^5 law -------------------------------------------------------------------
lams = np.array([700e-9, 550e-9, 440e-9, 350e-9])
vals = [zp_cross_section_reduced(
    water, ScatteringConfig(omega=omega_from_wavelength(l), theta=math.pi)).value
    for l in lams]
slope = np.polyfit(np.log([omega_from_wavelength(l) for l in lams]), np.log(vals), 1)[0]
print("across the visible spectrum (backscatter):")
print(f"{'lambda (nm)':>12}  {'zp xsec 1/(m sr)':>18}")
for l, v in zip(lams, vals):
    print(f"{l * 1e9:12.0f}  {v:18.6e}")
print(f"log-log slope vs omega: {slope:.3f}  (the fifth power)\n")

# --- the headline ratio ------------------------------------------------------------------
thermal = thermal_brillouin_cross_section(water, cfg).value
ratio = ratio_zp_thermal(water, cfg)
print("against the thermal Brillouin line at 295 K:")
print(f"  thermal cross section  {thermal:.6e} 1/(m sr)")
print(f"  ratio R                {ratio:.6e}  "
      f"({100 * ratio:.2f}% of the Stokes line)\n")

print("R grows toward the violet and the cold:")
print(f"{'lambda (nm)':>12}  {'T (K)':>6}  {'R':>12}")
for lam, T in [(700e-9, 295.0), (350e-9, 295.0), (350e-9, 150.0), (250e-9, 80.0)]:
    c = ScatteringConfig(omega=omega_from_wavelength(lam), theta=math.pi,
                         temperature=T)
    print(f"{lam * 1e9:12.0f}  {T:6.0f}  {ratio_zp_thermal(water, c):12.6f}")

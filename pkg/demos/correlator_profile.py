"""Tour of the vacuum density correlator: sound-cone structure, equal-time
profile, and what a plane wall does to the local variance.

Run:  python demos/correlator_profile.py
"""

import numpy as np

from fluctus import (
    Separation,
    boundary_shift_planar,
    builtin_material,
    correlator,
    em_vacuum_shift_plate,
    equal_time_correlator,
    scalar_field_analog,
)

water = builtin_material("water")
print(f"medium: {water.name}  (rho0 = {water.rho0} kg/m^3, cs = {water.cs} m/s)\n")

# --- crossing the sound cone -------------------------------------------------
# Fix r = 1 nm and walk the time lag through the cone at cs*dt = r.
# Outside the cone (cs*dt < r) fluctuations are anticorrelated: a local
# overdensity borrows mass from its surroundings.  Inside, a sound signal
# connects the two points and the correlation is positive.
r = 1e-9
print("time lag sweep at r = 1 nm (u = cs*dt/r):")
print(f"{'u':>6}  {'correlator kg^2/m^6':>22}  sign")
for u in (0.0, 0.3, 0.6, 0.9, 1.1, 1.5, 2.0, 3.0):
    value = correlator(water, Separation(r, u * r / water.cs)).value
    print(f"{u:6.2f}  {value:22.6e}  {'-' if value < 0 else '+'}")
print("on the cone itself (u = 1) the correlator diverges and evaluation "
      "raises instead of returning infinity\n")

# --- equal-time profile: inverse fourth power ---------------------------------
print("equal-time profile (value * r^4 is constant):")
for r in (0.5e-9, 1e-9, 2e-9, 8e-9):
    v = equal_time_correlator(water, r).value
    print(f"  r = {r * 1e9:5.1f} nm   value = {v: .6e}   value*r^4 = {v * r**4:.6e}")
print()

# --- the relativistic analog ---------------------------------------------------
# Swap the speed of sound in for the speed of light and the correlator of a
# massless scalar field's time derivative has the same shape; their ratio is
# one separation-independent constant.
seps = [Separation(1e-9 * (1 + 0.5 * k), 0.4e-9 * (1 + 0.5 * k) / water.cs)
        for k in range(5)]
ratios = [scalar_field_analog(water.cs, s) / correlator(water, s).value for s in seps]
print("scalar-field analog / density correlator over 5 separations:")
print("  " + "  ".join(f"{q:.6e}" for q in ratios))
print(f"  constant, equal to cs^4/rho0 = {water.cs**4 / water.rho0:.6e}\n")

# --- a plane wall suppresses the fluctuations -----------------------------------
print("variance shift near a rigid wall (always a reduction):")
print(f"{'z (nm)':>8}  {'shift kg^2/m^6':>18}")
for z in (1e-9, 2e-9, 4e-9, 8e-9):
    print(f"{z * 1e9:8.1f}  {boundary_shift_planar(water, z).value:18.6e}")
e2, b2 = em_vacuum_shift_plate(1.0)
print("\nelectromagnetic counterpart near a reflecting plate, in units of "
      f"hbar*c/z^4:\n  <E^2> shift = {e2:+.6f},  <B^2> shift = {b2:+.6f}")
print("the density shift has one definite sign; the EM shifts split "
      "symmetrically between the fields")

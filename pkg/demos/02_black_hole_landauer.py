"""Throwing one bit into a Schwarzschild hole costs about (2 pi / mu) k_B of entropy,
whatever the hole's mass.

Run with ``python demos/02_black_hole_landauer.py``.
"""

import math

from bhinfo import DEFAULT_MU, BlackHole, constants
from bhinfo.bounds import landauer_floor
from bhinfo.schwarzschild import entropy, entropy_increase, min_bit_energy, radius

k = constants()

# %% The smallest energy a captured carrier can have shrinks as the hole grows...
print(f"{'M [kg]':>10} {'R [m]':>12} {'S_bh [kB]':>12} {'de_min [J]':>12} {'dS [kB]':>10}")
for exponent in (1, 10, 20, 30, 40):
    bh = BlackHole.of_kg(10.0**exponent)
    de = min_bit_energy(bh, DEFAULT_MU)
    # ...but the entropy it adds does not change.
    dS = entropy_increase(bh, de / k.c**2)
    print(
        f"{bh.mass.magnitude:10.0e} {radius(bh).magnitude:12.4e} "
        f"{float(entropy(bh) / k.k_B):12.4e} {de.magnitude:12.4e} {float(dS / k.k_B):10.6f}"
    )

# %% Compare with the usual Landauer cost of k_B ln 2 per bit.
for mu in (1.0, DEFAULT_MU, 2 * math.pi, 10.0):
    floor = float(landauer_floor(mu) / k.k_B)
    print(f"mu = {mu:7.4f}: floor = {floor:.4f} kB = {floor / math.log(2):.3f} x (kB ln 2)")

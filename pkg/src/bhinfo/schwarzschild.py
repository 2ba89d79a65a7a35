"""Schwarzschild black holes: horizon geometry, entropy and bit capture.

Everything is in SI quantities. The capture factor ``mu`` scales the horizon
so that the effective capture cross section is ``pi mu^2 R^2``; the default
``sqrt(27/4)`` is the value for relativistic particles. The capture
conditions are order-of-magnitude statements; the functions here evaluate
them at equality (the extremal case).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import quantity as q
from .constants import PhysicalConstants, constants
from .quantity import DimensionError, ENERGY, LENGTH, MASS, Quantity

DEFAULT_MU = math.sqrt(27 / 4)


def _check_dim(x: Quantity, dim, name: str) -> None:
    if x.dimension != dim:
        raise DimensionError(f"{name} must be {dim}, got {x.dimension}")


def _check_mu(mu: float) -> None:
    if not mu > 0 or not math.isfinite(mu):
        raise ValueError(f"capture factor mu must be positive, got {mu}")


@dataclass(frozen=True)
class BlackHole:
    """Schwarzschild hole of the given mass."""

    mass: Quantity

    def __post_init__(self):
        _check_dim(self.mass, MASS, "black-hole mass")
        if not self.mass.magnitude > 0:
            raise ValueError("black-hole mass must be positive")

    @classmethod
    def of_kg(cls, kg: float) -> "BlackHole":
        return cls(Quantity(kg, MASS))


@dataclass(frozen=True)
class InfallingSystem:
    """A carrier of information with total energy ``energy`` and rest mass ``rest_mass``."""

    energy: Quantity
    rest_mass: Quantity

    def __post_init__(self):
        _check_dim(self.energy, ENERGY, "energy")
        _check_dim(self.rest_mass, MASS, "rest mass")
        if self.energy.magnitude < 0 or self.rest_mass.magnitude < 0:
            raise ValueError("energy and rest mass must be non-negative")


def radius(bh: BlackHole, const: PhysicalConstants | None = None) -> Quantity:
    """Horizon radius ``2 G M / c^2``."""
    k = const or constants()
    return 2 * k.G * bh.mass / k.c**2


def mass_from_radius(R: Quantity, const: PhysicalConstants | None = None) -> BlackHole:
    """Hole whose horizon radius is ``R``: ``M = c^2 R / (2 G)``."""
    _check_dim(R, LENGTH, "radius")
    if not R.magnitude > 0:
        raise ValueError("radius must be positive")
    k = const or constants()
    return BlackHole(k.c**2 * R / (2 * k.G))


def horizon_area(bh: BlackHole, const: PhysicalConstants | None = None) -> Quantity:
    return 4 * math.pi * radius(bh, const) ** 2


def entropy(bh: BlackHole, const: PhysicalConstants | None = None) -> Quantity:
    """Bekenstein-Hawking entropy from the mass form ``k_B 4 pi G M^2 / (c hbar)``."""
    k = const or constants()
    return k.k_B * 4 * math.pi * k.G * bh.mass**2 / (k.c * k.hbar)


def entropy_from_area(area: Quantity, const: PhysicalConstants | None = None) -> Quantity:
    """Bekenstein-Hawking entropy of a horizon of the given area, ``k_B c^3 A / (4 G hbar)``."""
    _check_dim(area, 2 * LENGTH, "area")
    k = const or constants()
    return k.k_B * k.c**3 * area / (4 * k.G * k.hbar)


def entropy_increase(bh: BlackHole, delta_mass: Quantity, const: PhysicalConstants | None = None) -> Quantity:
    """First-order entropy gain ``k_B 8 pi G M dM / (c hbar)`` when ``dM`` falls in.

    This is the differential, not ``entropy(M + dM) - entropy(M)``.
    """
    _check_dim(delta_mass, MASS, "mass increment")
    if delta_mass.magnitude < 0:
        raise ValueError("mass increment must be non-negative")
    k = const or constants()
    return k.k_B * 8 * math.pi * k.G * bh.mass * delta_mass / (k.c * k.hbar)


def min_capture_momentum(bh: BlackHole, mu: float = DEFAULT_MU, const: PhysicalConstants | None = None) -> Quantity:
    """Smallest momentum whose reduced de Broglie wavelength fits the effective diameter ``2 R mu``."""
    _check_mu(mu)
    k = const or constants()
    return k.hbar / (2 * mu * radius(bh, k))


def min_bit_energy(bh: BlackHole, mu: float = DEFAULT_MU, const: PhysicalConstants | None = None) -> Quantity:
    """Smallest energy ``c hbar / (2 R mu)`` a one-bit carrier needs to be captured."""
    k = const or constants()
    return k.c * min_capture_momentum(bh, mu, k)


def momentum(sys: InfallingSystem, const: PhysicalConstants | None = None) -> Quantity:
    """Momentum from the energy-momentum relation, ``sqrt(e^2/c^2 - m0^2 c^2)``."""
    k = const or constants()
    total = sys.energy**2 / k.c**2
    radicand = total - sys.rest_mass**2 * k.c**2
    if radicand.magnitude < 0:
        # Rounding at energy == rest energy.
        if -radicand.magnitude > 1e-12 * total.magnitude:
            raise ValueError("energy is below the rest-mass energy")
        radicand = Quantity(0.0, radicand.dimension)
    return q.sqrt(radicand)


def capture_cross_section(bh: BlackHole, mu: float = DEFAULT_MU, const: PhysicalConstants | None = None) -> Quantity:
    _check_mu(mu)
    return math.pi * mu**2 * radius(bh, const) ** 2

"""Physical constants used by the black-hole and storage-bound formulas.

c, h (hence hbar) and k_B are exact in the 2019 SI; G is the CODATA 2018
recommended value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quantity import ENERGY, ENTROPY, LENGTH, MASS, TIME, Quantity

PLANCK_H = 6.62607015e-34  # J s, exact

VELOCITY = LENGTH - TIME
ACTION = ENERGY + TIME
GRAVITATION = 3 * LENGTH - MASS - 2 * TIME


@dataclass(frozen=True)
class PhysicalConstants:
    """Speed of light, reduced Planck constant, Newton constant and Boltzmann constant."""

    c: Quantity
    hbar: Quantity
    G: Quantity
    k_B: Quantity

    def __post_init__(self):
        expected = {"c": VELOCITY, "hbar": ACTION, "G": GRAVITATION, "k_B": ENTROPY}
        for name, dim in expected.items():
            q = getattr(self, name)
            if q.dimension != dim:
                raise ValueError(f"constant {name} must have dimension {dim}, got {q.dimension}")
            if not q.magnitude > 0:
                raise ValueError(f"constant {name} must be positive")

    @classmethod
    def from_magnitudes(cls, c: float, hbar: float, G: float, k_B: float) -> "PhysicalConstants":
        """Build a constants table from bare SI magnitudes (handy for c = 1 style checks)."""
        return cls(
            c=Quantity(c, VELOCITY),
            hbar=Quantity(hbar, ACTION),
            G=Quantity(G, GRAVITATION),
            k_B=Quantity(k_B, ENTROPY),
        )


SI = PhysicalConstants.from_magnitudes(
    c=299_792_458.0,
    hbar=PLANCK_H / (2 * math.pi),
    G=6.67430e-11,
    k_B=1.380649e-23,
)


def constants() -> PhysicalConstants:
    return SI


__all__ = ["PhysicalConstants", "SI", "constants", "PLANCK_H", "VELOCITY", "ACTION", "GRAVITATION"]

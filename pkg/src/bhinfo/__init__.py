"""Thermodynamic limits on information storage and erasure from black-hole physics."""

from .bounds import (
    StorageBoundBreakdown,
    SystemSpec,
    absorption_inequality_slack,
    bekenstein_hawking_limit,
    landauer_erasure_entropy,
    landauer_floor,
    min_absorbing_mass,
    storage_bound_bits,
)
from .constants import SI, PhysicalConstants, constants
from .qparser import ParseError, parse, quantity
from .quantity import Dimension, DimensionError, Quantity, QuantityError, value_in
from .schwarzschild import DEFAULT_MU, BlackHole, InfallingSystem

__version__ = "0.1.0"

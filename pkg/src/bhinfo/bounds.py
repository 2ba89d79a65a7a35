"""Information bounds: Bekenstein-Hawking, Landauer, and the energy/size/entropy storage bound.

The storage bound follows from dropping a system of size ``L``, total energy
``U`` and intrinsic entropy ``S`` into the smallest black hole that can swallow
it, and requiring the hole's entropy to grow by at least the Landauer cost of
the ``n`` bits it carried::

    n ln 2 <= 4 pi G U^2 / (c^5 hbar) - S / k_B + 2 pi L U / (c hbar)

All three right-hand terms are reported separately in
:class:`StorageBoundBreakdown`.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .constants import PhysicalConstants, constants
from .quantity import DimensionError, ENERGY, ENTROPY, LENGTH, Quantity
from .schwarzschild import DEFAULT_MU, BlackHole, _check_dim, _check_mu, mass_from_radius

LN2 = math.log(2)


def _dimensionless(x: Quantity) -> float:
    if not x.dimension.is_dimensionless:
        raise DimensionError(f"expected a dimensionless term, got {x.dimension}")
    return x.magnitude


def _check_length(length: Quantity) -> None:
    _check_dim(length, LENGTH, "length")
    if not length.magnitude > 0:
        raise ValueError("length must be positive")


@dataclass(frozen=True)
class SystemSpec:
    """An information-carrying system: extent ``length``, total ``energy`` (rest mass
    included), intrinsic ``entropy`` and capture factor ``mu``."""

    length: Quantity
    energy: Quantity
    entropy: Quantity = Quantity(0.0, ENTROPY)
    mu: float = DEFAULT_MU

    def __post_init__(self):
        _check_length(self.length)
        _check_dim(self.energy, ENERGY, "energy")
        _check_dim(self.entropy, ENTROPY, "entropy")
        if self.energy.magnitude < 0:
            raise ValueError("energy must be non-negative")
        if self.entropy.magnitude < 0:
            raise ValueError("entropy must be non-negative")
        _check_mu(self.mu)

    def replace(self, **changes) -> "SystemSpec":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class StorageBoundBreakdown:
    term_quadratic: float
    term_entropy: float
    term_linear: float
    min_mass: Quantity
    n_max_bits: float
    rhs: float  # T1 - T2 + T3, before dividing by ln 2
    infeasible: bool


def bekenstein_hawking_entropy(length: Quantity, const: PhysicalConstants | None = None) -> Quantity:
    """Entropy of the largest black hole fitting a region of extent ``length``,
    taking the enclosing area as ``pi L^2``."""
    _check_length(length)
    k = const or constants()
    area = math.pi * length**2
    return k.k_B * k.c**3 * area / (4 * k.hbar * k.G)


def bekenstein_hawking_limit(length: Quantity, const: PhysicalConstants | None = None) -> float:
    """Bekenstein-Hawking limit in bits, ``pi c^3 L^2 / (4 hbar G ln 2)``."""
    k = const or constants()
    return _dimensionless(bekenstein_hawking_entropy(length, k) / k.k_B) / LN2


def landauer_erasure_entropy(n: int, const: PhysicalConstants | None = None) -> Quantity:
    """Minimum entropy ``n k_B ln 2`` produced by erasing ``n`` bits."""
    if n < 0:
        raise ValueError("bit count must be non-negative")
    k = const or constants()
    return n * LN2 * k.k_B


def landauer_floor(mu: float = DEFAULT_MU, const: PhysicalConstants | None = None) -> Quantity:
    """Per-bit entropy increase ``(2 pi / mu) k_B`` from dropping a bit into a black hole.

    Independent of the hole's mass.
    """
    _check_mu(mu)
    k = const or constants()
    return (2 * math.pi / mu) * k.k_B


def min_absorbing_mass(length: Quantity, const: PhysicalConstants | None = None) -> BlackHole:
    """Smallest hole that can absorb an object of extent ``length``: horizon diameter = ``length``."""
    _check_length(length)
    return mass_from_radius(length / 2, const)


def _terms(spec: SystemSpec, k: PhysicalConstants) -> tuple[float, float]:
    U = spec.energy
    t_quad = _dimensionless(4 * math.pi * k.G * U**2 / (k.c**5 * k.hbar))
    t_ent = _dimensionless(spec.entropy / k.k_B)
    return t_quad, t_ent


def mass_term(spec: SystemSpec, bh: BlackHole, const: PhysicalConstants | None = None) -> float:
    """The mass-dependent term ``8 pi G M U / (c^3 hbar)`` of the absorption inequality."""
    k = const or constants()
    return _dimensionless(8 * math.pi * k.G * bh.mass * spec.energy / (k.c**3 * k.hbar))


def absorption_inequality_slack(
    spec: SystemSpec, n: int, bh: BlackHole, const: PhysicalConstants | None = None
) -> float:
    """Dimensionless margin of the second-law inequality for dropping ``spec`` carrying
    ``n`` bits into ``bh``.

    Uses the exact final entropy ``S(M + U/c^2)`` expanded term by term, so the
    large ``M^2`` parts cancel analytically rather than numerically. Non-negative
    means the configuration is consistent with the second law.
    """
    if n < 0:
        raise ValueError("bit count must be non-negative")
    k = const or constants()
    t_quad, t_ent = _terms(spec, k)
    return t_quad - t_ent + mass_term(spec, bh, k) - n * LN2


def storage_bound_bits(spec: SystemSpec, const: PhysicalConstants | None = None) -> StorageBoundBreakdown:
    """Upper bound on the bits storable in ``spec``, with its three terms."""
    k = const or constants()
    t_quad, t_ent = _terms(spec, k)
    t_lin = _dimensionless(2 * math.pi * spec.length * spec.energy / (k.c * k.hbar))
    rhs = t_quad - t_ent + t_lin
    return StorageBoundBreakdown(
        term_quadratic=t_quad,
        term_entropy=t_ent,
        term_linear=t_lin,
        min_mass=min_absorbing_mass(spec.length, k).mass,
        n_max_bits=max(0.0, rhs / LN2),
        rhs=rhs,
        infeasible=rhs < 0,
    )

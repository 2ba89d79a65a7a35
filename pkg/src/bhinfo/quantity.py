"""Dimensioned quantities over the SI base dimensions mass, length, time, temperature.

A :class:`Quantity` is a finite float magnitude in coherent SI units paired
with a :class:`Dimension` (an integer exponent vector). Arithmetic checks
dimensions eagerly, so a dimensionally inconsistent formula fails at the
first offending operation instead of producing a silently wrong number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, NamedTuple

BASE_NAMES = ("mass", "length", "time", "temperature")
BASE_SYMBOLS = ("kg", "m", "s", "K")


class QuantityError(ValueError):
    """Raised for invalid arithmetic on quantities (overflow, zero divisor, bad radicand)."""


class DimensionError(QuantityError):
    """Raised when two quantities have incompatible dimensions."""


class UnitError(QuantityError):
    """Raised when a unit symbol cannot be resolved."""


class Dimension(NamedTuple):
    """Integer exponents of (mass, length, time, temperature)."""

    mass: int = 0
    length: int = 0
    time: int = 0
    temperature: int = 0

    # Tuple + and * mean concatenation/repetition; override them with the group law.
    def __add__(self, other: "Dimension") -> "Dimension":  # type: ignore[override]
        return Dimension(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "Dimension") -> "Dimension":
        return Dimension(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "Dimension":
        return Dimension(*(-a for a in self))

    def __mul__(self, k: int) -> "Dimension":  # type: ignore[override]
        return Dimension(*(a * k for a in self))

    __rmul__ = __mul__

    @property
    def is_dimensionless(self) -> bool:
        return not any(self)

    def monomial(self) -> str:
        """Base-unit monomial such as ``kg m^2 s^-2``; empty for dimensionless."""
        parts = []
        for sym, e in zip(BASE_SYMBOLS, self):
            if e == 1:
                parts.append(sym)
            elif e:
                parts.append(f"{sym}^{e}")
        return " ".join(parts)

    def __str__(self) -> str:
        return DIMENSION_NAMES.get(self) or self.monomial()


DIMENSIONLESS = Dimension()
MASS = Dimension(mass=1)
LENGTH = Dimension(length=1)
TIME = Dimension(time=1)
TEMPERATURE = Dimension(temperature=1)
ENERGY = MASS + 2 * LENGTH - 2 * TIME
POWER = ENERGY - TIME
ENTROPY = ENERGY - TEMPERATURE
MOMENTUM = MASS + LENGTH - TIME

DIMENSION_NAMES: dict[Dimension, str] = {
    DIMENSIONLESS: "dimensionless",
    MASS: "mass",
    LENGTH: "length",
    TIME: "time",
    TEMPERATURE: "temperature",
    2 * LENGTH: "area",
    3 * LENGTH: "volume",
    LENGTH - TIME: "velocity",
    -TIME: "frequency",
    MOMENTUM: "momentum",
    MOMENTUM - TIME: "force",
    ENERGY: "energy",
    POWER: "power",
    ENERGY + TIME: "action",
    ENTROPY: "entropy",
}


def _finite(x: float, what: str = "magnitude overflow") -> float:
    if not math.isfinite(x):
        raise QuantityError(what)
    return x


@dataclass(frozen=True)
class Quantity:
    """A finite real magnitude (coherent SI) with a dimension."""

    magnitude: float
    dimension: Dimension = DIMENSIONLESS

    def __post_init__(self):
        object.__setattr__(self, "magnitude", float(self.magnitude))
        object.__setattr__(self, "dimension", Dimension(*self.dimension))
        if not math.isfinite(self.magnitude):
            raise QuantityError(f"non-finite magnitude {self.magnitude!r}")

    def __mul__(self, other):
        return _binary(mul, self, other)

    def __rmul__(self, other):
        return _binary(mul, other, self)

    def __truediv__(self, other):
        return _binary(div, self, other)

    def __rtruediv__(self, other):
        return _binary(div, other, self)

    def __add__(self, other):
        return _binary(add, self, other)

    def __radd__(self, other):
        return _binary(add, other, self)

    def __sub__(self, other):
        return _binary(sub, self, other)

    def __rsub__(self, other):
        return _binary(sub, other, self)

    def __neg__(self):
        return Quantity(-self.magnitude, self.dimension)

    def __pow__(self, k: int):
        return pow_int(self, k)

    def _cmp_magnitudes(self, other) -> tuple[float, float]:
        other = _coerce(other)
        _require_same(self, other)
        return self.magnitude, other.magnitude

    def __lt__(self, other):
        a, b = self._cmp_magnitudes(other)
        return a < b

    def __le__(self, other):
        a, b = self._cmp_magnitudes(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._cmp_magnitudes(other)
        return a > b

    def __ge__(self, other):
        a, b = self._cmp_magnitudes(other)
        return a >= b

    def __float__(self) -> float:
        if not self.dimension.is_dimensionless:
            raise DimensionError(f"cannot convert {self.dimension} quantity to a plain number")
        return self.magnitude

    def to(self, unit: str) -> float:
        return value_in(self, unit)

    def render(self) -> str:
        """Text form ``<magnitude> * kg^a * m^b ...`` that the quantity parser reads back."""
        parts = [repr(self.magnitude)]
        for sym, e in zip(BASE_SYMBOLS, self.dimension):
            if e == 1:
                parts.append(sym)
            elif e:
                parts.append(f"{sym}^{e}")
        return " * ".join(parts)

    def __str__(self) -> str:
        mono = self.dimension.monomial()
        return f"{self.magnitude:.6g} {mono}".rstrip()


def _coerce(x) -> Quantity:
    if isinstance(x, Quantity):
        return x
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return Quantity(x)
    raise TypeError(f"cannot use {type(x).__name__} as a quantity")


def _binary(op, a, b):
    # Plain numbers act as dimensionless quantities.
    try:
        return op(_coerce(a), _coerce(b))
    except TypeError:
        return NotImplemented


def _require_same(a: Quantity, b: Quantity) -> None:
    if a.dimension != b.dimension:
        raise DimensionError(f"dimension mismatch ({a.dimension} vs {b.dimension})")


def isclose(a: Quantity, b: Quantity, rel_tol: float = 1e-12, abs_tol: float = 0.0) -> bool:
    """Dimension-exact, magnitude-approximate equality."""
    return a.dimension == b.dimension and math.isclose(
        a.magnitude, b.magnitude, rel_tol=rel_tol, abs_tol=abs_tol
    )


def mul(a: Quantity, b: Quantity) -> Quantity:
    return Quantity(_finite(a.magnitude * b.magnitude), a.dimension + b.dimension)


def div(a: Quantity, b: Quantity) -> Quantity:
    if b.magnitude == 0:
        raise QuantityError("zero divisor")
    return Quantity(_finite(a.magnitude / b.magnitude), a.dimension - b.dimension)


def pow_int(a: Quantity, k: int) -> Quantity:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"exponent must be an integer, got {k!r}")
    if k < 0 and a.magnitude == 0:
        raise QuantityError("zero divisor")
    try:
        mag = a.magnitude**k
    except OverflowError:
        raise QuantityError("magnitude overflow") from None
    return Quantity(_finite(mag), a.dimension * k)


def add(a: Quantity, b: Quantity) -> Quantity:
    _require_same(a, b)
    return Quantity(_finite(a.magnitude + b.magnitude), a.dimension)


def sub(a: Quantity, b: Quantity) -> Quantity:
    _require_same(a, b)
    return Quantity(_finite(a.magnitude - b.magnitude), a.dimension)


def sqrt(a: Quantity) -> Quantity:
    if a.magnitude < 0:
        raise QuantityError("negative radicand")
    if any(e % 2 for e in a.dimension):
        raise DimensionError("non-square dimension")
    return Quantity(math.sqrt(a.magnitude), Dimension(*(e // 2 for e in a.dimension)))


def value_in(a: Quantity, unit: str) -> float:
    """Magnitude of ``a`` expressed in ``unit`` (any quantity expression, e.g. ``"uJ"``)."""
    from .qparser import evaluate

    scale = evaluate(unit)
    if scale.dimension != a.dimension:
        raise DimensionError(f"dimension mismatch ({a.dimension} vs {scale.dimension})")
    if scale.magnitude <= 0:
        raise UnitError(f"unit {unit!r} has non-positive scale")
    return a.magnitude / scale.magnitude


# --- units -----------------------------------------------------------------

SI_PREFIXES: dict[str, float] = {
    "y": 1e-24, "z": 1e-21, "a": 1e-18, "f": 1e-15, "p": 1e-12, "n": 1e-9,
    "u": 1e-6, "µ": 1e-6, "μ": 1e-6, "m": 1e-3, "c": 1e-2, "d": 1e-1,
    "da": 1e1, "h": 1e2, "k": 1e3, "M": 1e6, "G": 1e9, "T": 1e12,
    "P": 1e15, "E": 1e18, "Z": 1e21, "Y": 1e24,
}


class UnitEntry(NamedTuple):
    scale: Quantity
    prefixable: bool


class UnitTable(Mapping[str, Quantity]):
    """Unit symbols with SI-prefix resolution.

    ``table[sym]`` returns the quantity one unit of ``sym`` stands for.
    An exact symbol always wins; otherwise the symbol is split into prefix and
    base unit, preferring the longest base-unit match.
    """

    def __init__(self, entries: Mapping[str, UnitEntry]):
        self._entries = dict(entries)
        for sym, entry in self._entries.items():
            if entry.scale.magnitude <= 0:
                raise ValueError(f"unit {sym!r} must have positive scale")

    def __getitem__(self, symbol: str) -> Quantity:
        q = self.lookup(symbol)
        if q is None:
            raise UnitError(f"unknown unit {symbol!r}")
        return q

    def lookup(self, symbol: str) -> Quantity | None:
        entry = self._entries.get(symbol)
        if entry is not None:
            return entry.scale
        # Longest base unit first, i.e. shortest prefix.
        for cut in range(1, len(symbol)):
            prefix, base = symbol[:cut], symbol[cut:]
            entry = self._entries.get(base)
            if prefix in SI_PREFIXES and entry is not None and entry.prefixable:
                return Quantity(SI_PREFIXES[prefix] * entry.scale.magnitude, entry.scale.dimension)
        return None

    def __contains__(self, symbol) -> bool:
        return isinstance(symbol, str) and self.lookup(symbol) is not None

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)


@lru_cache(maxsize=None)
def default_units() -> UnitTable:
    from .constants import SI

    U = UnitEntry
    return UnitTable({
        "m": U(Quantity(1, LENGTH), True),
        "s": U(Quantity(1, TIME), True),
        "g": U(Quantity(1e-3, MASS), True),
        "kg": U(Quantity(1, MASS), False),
        "K": U(Quantity(1, TEMPERATURE), True),
        "J": U(Quantity(1, ENERGY), True),
        "W": U(Quantity(1, POWER), True),
        "N": U(Quantity(1, MASS + LENGTH - 2 * TIME), True),
        "Hz": U(Quantity(1, -TIME), True),
        "eV": U(Quantity(1.602176634e-19, ENERGY), True),
        "kB": U(SI.k_B, False),
        "bit": U(Quantity(1), False),
        "B": U(Quantity(8), True),
    })


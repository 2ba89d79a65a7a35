import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bhinfo.constants import constants
from bhinfo.quantity import (
    DIMENSIONLESS,
    ENERGY,
    LENGTH,
    MASS,
    TEMPERATURE,
    TIME,
    Dimension,
    DimensionError,
    Quantity,
    QuantityError,
    UnitError,
    add,
    default_units,
    div,
    isclose,
    mul,
    pow_int,
    sqrt,
    value_in,
)

exponents = st.integers(-6, 6)
dimensions = st.builds(Dimension, exponents, exponents, exponents, exponents)
magnitudes = st.floats(min_value=1e-30, max_value=1e30).flatmap(
    lambda x: st.sampled_from([x, -x])
)
quantities = st.builds(Quantity, magnitudes, dimensions)


# --- Dimension group laws ---


@given(dimensions, dimensions, dimensions)
def test_dimension_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(dimensions, dimensions)
def test_dimension_commutative(a, b):
    assert a + b == b + a


@given(dimensions)
def test_dimension_inverse(d):
    assert d + (-d) == DIMENSIONLESS
    assert d - d == DIMENSIONLESS


def test_dimension_str():
    assert str(LENGTH) == "length"
    assert str(ENERGY) == "energy"
    assert str(Dimension(1, 1, 0, 0)) == "kg m"


# --- arithmetic examples ---


def test_mul_examples():
    assert mul(Quantity(2, LENGTH), Quantity(3, -TIME)) == Quantity(6, LENGTH - TIME)
    pulse = mul(Quantity(1e9, ENERGY - TIME), Quantity(10e-15, TIME))
    assert isclose(pulse, Quantity(1e-5, ENERGY))
    c = constants().c
    rest = Quantity(1, MASS) * c * c
    # 299792458^2 = 89875517873681764 exactly
    assert rest.magnitude == pytest.approx(8.9875517873681764e16, rel=1e-15)
    assert rest.dimension == ENERGY


def test_mul_overflow():
    with pytest.raises(QuantityError, match="magnitude overflow"):
        mul(Quantity(1e200), Quantity(1e200))


def test_div_examples():
    assert div(Quantity(6, ENERGY), Quantity(2, TIME)) == Quantity(3, ENERGY - TIME)
    t = div(Quantity(1, ENERGY), constants().k_B)
    assert t.dimension == TEMPERATURE
    assert t.magnitude == pytest.approx(7.24297e22, rel=1e-6)
    with pytest.raises(QuantityError, match="zero divisor"):
        div(Quantity(1), Quantity(0, LENGTH))


@given(quantities)
def test_div_self_is_one(x):
    assert div(x, x) == Quantity(1.0)


def test_pow_int_examples():
    assert pow_int(Quantity(2, LENGTH), 2) == Quantity(4, 2 * LENGTH)
    c3 = pow_int(constants().c, 3)
    assert c3.magnitude == pytest.approx(2.694400241737399e25, rel=1e-15)
    assert c3.dimension == Dimension(0, 3, -3, 0)
    assert pow_int(Quantity(3, MASS), 0) == Quantity(1)
    with pytest.raises(QuantityError, match="zero divisor"):
        pow_int(Quantity(0, MASS), -1)
    with pytest.raises(TypeError):
        pow_int(Quantity(2), 0.5)


def test_add_examples():
    assert add(Quantity(1, MASS), Quantity(2, MASS)) == Quantity(3, MASS)
    with pytest.raises(DimensionError, match=r"dimension mismatch \(length vs time\)"):
        add(Quantity(1, LENGTH), Quantity(1, TIME))
    c = constants().c
    M = Quantity(3.3665e25, MASS)
    U = Quantity(1, MASS) * c**2
    assert isclose(U / c**2, Quantity(1, MASS))
    assert (M + U / c**2).magnitude == pytest.approx(3.3665e25 + 1, rel=1e-15)


@given(dimensions, dimensions)
def test_add_rejects_unequal(a, b):
    if a == b:
        assert add(Quantity(1, a), Quantity(2, b)).dimension == a
    else:
        with pytest.raises(DimensionError):
            add(Quantity(1, a), Quantity(2, b))


def test_sqrt_examples():
    assert sqrt(Quantity(9, 2 * LENGTH)) == Quantity(3, LENGTH)
    with pytest.raises(DimensionError, match="non-square dimension"):
        sqrt(Quantity(4, 3 * LENGTH))
    with pytest.raises(QuantityError, match="negative radicand"):
        sqrt(Quantity(-1))
    c = constants().c
    de = Quantity(5e-20, ENERGY)
    m0 = Quantity(0, MASS)
    assert isclose(sqrt((de / c) ** 2 - (m0 * c) ** 2), de / c)


def test_value_in():
    assert value_in(Quantity(1e-5, ENERGY), "uJ") == pytest.approx(10, rel=1e-12)
    assert value_in(Quantity(2.577e42), "bit") == 2.577e42
    with pytest.raises(DimensionError):
        value_in(Quantity(1, ENERGY), "m")
    with pytest.raises(ValueError):
        value_in(Quantity(1, ENERGY), "furlong")


@given(quantities, quantities)
def test_mul_div_inverse(a, b):
    assert isclose(div(mul(a, b), b), a, rel_tol=1e-12)


@given(quantities)
def test_pow2_is_self_product(a):
    p, m = pow_int(a, 2), mul(a, a)
    assert p.dimension == m.dimension
    assert math.isclose(p.magnitude, m.magnitude, rel_tol=1e-12)


def test_non_finite_rejected():
    with pytest.raises(QuantityError):
        Quantity(float("nan"))
    with pytest.raises(QuantityError):
        Quantity(float("inf"), LENGTH)


def test_comparisons_require_same_dimension():
    assert Quantity(1, LENGTH) < Quantity(2, LENGTH)
    with pytest.raises(DimensionError):
        Quantity(1, LENGTH) < Quantity(2, TIME)


# --- unit table ---


@pytest.mark.parametrize(
    "symbol,magnitude,dim",
    [
        ("ms", 1e-3, TIME),
        ("fs", 1e-15, TIME),
        ("GW", 1e9, ENERGY - TIME),
        ("uJ", 1e-6, ENERGY),
        ("μJ", 1e-6, ENERGY),
        ("km", 1e3, LENGTH),
        ("mm", 1e-3, LENGTH),
        ("kg", 1.0, MASS),
        ("mg", 1e-6, MASS),
        ("dam", 10.0, LENGTH),
        ("Ym", 1e24, LENGTH),
        ("ym", 1e-24, LENGTH),
        ("bit", 1.0, DIMENSIONLESS),
    ],
)
def test_unit_lookup(symbol, magnitude, dim):
    q = default_units()[symbol]
    assert q.dimension == dim
    assert q.magnitude == pytest.approx(magnitude, rel=1e-15)


def test_kB_pseudo_unit():
    assert default_units()["kB"] == constants().k_B


def test_unknown_unit():
    assert "xyz" not in default_units()
    with pytest.raises(UnitError):
        default_units()["xyz"]
    # Prefixes do not stack.
    assert "mkm" not in default_units()


def test_all_scales_positive():
    units = default_units()
    assert all(units[s].magnitude > 0 for s in units)

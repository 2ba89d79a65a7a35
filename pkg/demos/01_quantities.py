"""Dimensioned arithmetic and the quantity-expression language.

Run with ``python demos/01_quantities.py``.
"""

from bhinfo import quantity, value_in
from bhinfo.qparser import EvalError, ParseError, parse

# %% Quantities carry their dimension; plain arithmetic checks it.
pulse_energy = quantity("1 GW") * quantity("10 fs")
print("1 GW x 10 fs =", pulse_energy, f"= {value_in(pulse_energy, 'uJ'):.6g} uJ")

# %% Expressions may mention the constants c, hbar, G and kB.
rest_energy = quantity("1 kg * c^2")
print("rest energy of 1 kg:", rest_energy)
print(f"light travel in 10 fs: {value_in(quantity('10 fs * c'), 'um'):.6g} um")

# %% The parse tree shows how the grammar groups things.
print(parse("1 GW * 10 fs"))
print(parse("16 m / (2 s)^2"))

# %% Prefixes use longest match: ms is a millisecond, m * s is a metre-second.
print(quantity("3 ms"), "|", quantity("3 m * s"))

# %% Errors point at the offending text.
for text in ["1 m + 1 J", "2 ^ x", "1 furlong"]:
    try:
        quantity(text)
    except (ParseError, EvalError) as exc:
        print(f"{text!r:14} -> {exc}")

"""Independent reference formulas in plain floats with literal SI constants.

Nothing here touches the package, so it can check the Quantity-based path.
"""

import math

C = 299792458.0
HBAR = 6.62607015e-34 / (2 * math.pi)
G = 6.67430e-11
KB = 1.380649e-23
LN2 = math.log(2)


def radius(m):
    return 2 * G * m / C**2


def bh_entropy_area(m):
    r = radius(m)
    return KB * C**3 * (4 * math.pi * r * r) / (4 * G * HBAR)


def bh_limit_bits(L):
    return math.pi * C**3 * L * L / (4 * HBAR * G * LN2)


def storage_terms(L, U, S):
    t1 = 4 * math.pi * G * U * U / (C**5 * HBAR)
    t2 = S / KB
    t3 = 2 * math.pi * L * U / (C * HBAR)
    return t1, t2, t3


def eq15_rhs(L, U, S, M):
    # Exact final minus initial entropy of the hole, per k_B, minus S/k_B.
    t1, t2, _ = storage_terms(L, U, S)
    return t1 - t2 + 8 * math.pi * G * M * U / (C**3 * HBAR)


def min_mass(L):
    return C**2 * L / (4 * G)

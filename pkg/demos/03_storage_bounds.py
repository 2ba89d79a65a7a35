"""How many bits can a 1 kg, 10 cm device or a 10 fs laser pulse hold?

Compares the area-law (Bekenstein-Hawking) limit with the energy/size/entropy
bound and reproduces the two worked examples from the committed scenario file.

Run with ``python demos/03_storage_bounds.py`` from the repository root.
"""

from pathlib import Path

from bhinfo import BlackHole, SystemSpec, quantity, storage_bound_bits
from bhinfo.bounds import absorption_inequality_slack, min_absorbing_mass
from bhinfo.scenarios import evaluate, load_scenarios, render

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios" / "paper_examples.json"

# %% Both examples in one table.
reports = evaluate(load_scenarios(SCENARIOS))
print(render(reports, "table"))

# %% The linear term dominates; the others are tiny by comparison.
device = SystemSpec(quantity("0.1 m"), quantity("1 kg * c^2"), quantity("1e23 kB"))
b = storage_bound_bits(device)
print(f"T1 = {b.term_quadratic:.3e}  T2 = {b.term_entropy:.3e}  T3 = {b.term_linear:.3e}")
print(f"n_max = {b.n_max_bits:.3e} bits (raw right-hand side {b.rhs:.3e})")

# %% Bigger absorbing holes only loosen the bound; the smallest one is tightest.
mmin = min_absorbing_mass(device.length)
for factor in (1, 10, 100):
    bh = BlackHole(mmin.mass * factor)
    print(f"M = {factor:>3} x M_min: slack for n=0 is {absorption_inequality_slack(device, 0, bh):.3e}")

# %% The pulse bound in terabytes.
pulse = next(r for r in reports if r.name == "femtosecond-pulse")
print(f"pulse: {pulse.n_max_bits:.3e} bits = {pulse.n_max_bits / 8e12:.0f} TB")

# %% Piling on intrinsic entropy eventually makes the claimed system impossible.
hot = SystemSpec(quantity("1e-6 m"), quantity("1e-5 J"), quantity("1e16 kB"))
print("hot pulse infeasible:", storage_bound_bits(hot).infeasible)

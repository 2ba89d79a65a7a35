"""Command-line interface.

Subcommands: ``eval``, ``blackhole``, ``bound``, ``landauer``, ``report``.
Exit status is 0 on success, 1 on usage errors and 2 when an expression,
dimension or input value is rejected.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from typing import Sequence, TextIO

from . import bounds, scenarios, schwarzschild
from .bounds import SystemSpec
from .constants import constants
from .qparser import ParseError, evaluate
from .quantity import (
    ENERGY,
    ENTROPY,
    LENGTH,
    MASS,
    DIMENSIONLESS,
    MOMENTUM,
    POWER,
    TIME,
    Dimension,
    Quantity,
    QuantityError,
    value_in,
)
from .scenarios import BoundReport, Scenario, ScenarioError, evaluate_scenario, load_scenarios, render, report_to_dict
from .schwarzschild import DEFAULT_MU

EXIT_OK, EXIT_USAGE, EXIT_INPUT = 0, 1, 2

DISPLAY_UNITS: dict[Dimension, str] = {
    DIMENSIONLESS: "",
    MASS: "kg",
    LENGTH: "m",
    2 * LENGTH: "m^2",
    TIME: "s",
    ENERGY: "J",
    POWER: "W",
    ENTROPY: "J/K",
    MOMENTUM: "kg*m/s",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def fmt(x: float) -> str:
    return f"{x:.6g}"


def format_quantity(x: Quantity) -> str:
    unit = DISPLAY_UNITS.get(x.dimension)
    if unit is None:
        return str(x)
    return f"{fmt(x.magnitude)} {unit}".rstrip()


def _expr(text: str, dim: Dimension | None = None, what: str = "value") -> Quantity:
    q = evaluate(text)
    if dim is not None and q.dimension != dim:
        raise QuantityError(f"{what} must be {dim}, got {q.dimension} from {text!r}")
    return q


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bhinfo", description="Black-hole limits on information storage and erasure.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate a quantity expression")
    e.add_argument("expr")
    e.add_argument("--in", dest="unit", help="express the result in this unit")

    b = sub.add_parser("blackhole", help="properties of a Schwarzschild hole")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--mass")
    g.add_argument("--radius")
    b.add_argument("--mu", type=float, default=DEFAULT_MU)

    n = sub.add_parser("bound", help="storage bounds for one system")
    n.add_argument("--length", required=True)
    g = n.add_mutually_exclusive_group(required=True)
    g.add_argument("--energy")
    g.add_argument("--mass")
    n.add_argument("--entropy", default="0 kB")
    n.add_argument("--mu", type=float, default=DEFAULT_MU)
    n.add_argument("--format", choices=("text", "json"), default="text")

    la = sub.add_parser("landauer", help="black-hole Landauer floor and erasure entropy")
    la.add_argument("--mu", type=float, default=DEFAULT_MU)
    la.add_argument("--bits", type=int, default=1)

    r = sub.add_parser("report", help="evaluate a scenario file")
    r.add_argument("scenario_file")
    r.add_argument("--format", choices=("table", "json"), default="table")
    r.add_argument("--output", "-o", help="write to this path instead of standard output")
    return p


def cmd_eval(args, out: TextIO) -> None:
    q = _expr(args.expr)
    if args.unit:
        print(f"{fmt(value_in(q, args.unit))} {args.unit}", file=out)
    else:
        print(format_quantity(q), file=out)


def cmd_blackhole(args, out: TextIO) -> None:
    if args.mass is not None:
        print(f"input: mass = {args.mass}", file=out)
        bh = schwarzschild.BlackHole(_expr(args.mass, MASS, "--mass"))
    else:
        print(f"input: radius = {args.radius}", file=out)
        bh = schwarzschild.mass_from_radius(_expr(args.radius, LENGTH, "--radius"))
    S = schwarzschild.entropy(bh)
    rows = [
        ("mu", fmt(args.mu)),
        ("M", format_quantity(bh.mass)),
        ("R", format_quantity(schwarzschild.radius(bh))),
        ("A", format_quantity(schwarzschild.horizon_area(bh))),
        ("S_bh", f"{format_quantity(S)} ({fmt(float(S / constants().k_B))} kB)"),
        ("sigma_capture", format_quantity(schwarzschild.capture_cross_section(bh, args.mu))),
        ("p_min", format_quantity(schwarzschild.min_capture_momentum(bh, args.mu))),
        ("de_min", format_quantity(schwarzschild.min_bit_energy(bh, args.mu))),
    ]
    _print_rows(rows, out)


def _print_rows(rows, out: TextIO) -> None:
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k.ljust(width)} = {v}", file=out)


def describe(report: BoundReport) -> list[tuple[str, str]]:
    s = report.storage
    k_B = constants().k_B
    return [
        ("L", format_quantity(report.length)),
        ("U", format_quantity(report.energy)),
        ("S", f"{format_quantity(report.entropy)} ({fmt(float(report.entropy / k_B))} kB)"),
        ("mu", fmt(report.mu)),
        ("T1 (4piG U^2/c^5 hbar)", fmt(s.term_quadratic)),
        ("T2 (S/kB)", fmt(s.term_entropy)),
        ("T3 (2pi L U/c hbar)", fmt(s.term_linear)),
        ("rhs (T1-T2+T3)", fmt(s.rhs)),
        ("n_max_bits", fmt(s.n_max_bits)),
        ("bh_limit_bits", fmt(report.bh_limit_bits)),
        ("log10_gap", "-" if report.log10_gap is None else fmt(report.log10_gap)),
        ("M_min", format_quantity(report.min_mass)),
        ("landauer_floor", format_quantity(report.landauer_floor_entropy)),
        ("infeasible", str(report.infeasible).lower()),
    ]


def cmd_bound(args, out: TextIO) -> None:
    length = _expr(args.length, LENGTH, "--length")
    if args.energy is not None:
        energy = _expr(args.energy, ENERGY, "--energy")
    else:
        energy = _expr(args.mass, MASS, "--mass") * constants().c ** 2
    entropy = _expr(args.entropy, ENTROPY, "--entropy")
    spec = SystemSpec(length, energy, entropy, args.mu)
    report = evaluate_scenario(Scenario("bound", spec, {}))
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2), file=out)
        return
    source = "energy" if args.energy is not None else "mass"
    print(f"input: length = {args.length}; {source} = {getattr(args, source)}; entropy = {args.entropy}", file=out)
    _print_rows(describe(report), out)


def cmd_landauer(args, out: TextIO) -> None:
    if args.bits < 0:
        raise ValueError("--bits must be non-negative")
    k_B = constants().k_B
    floor = bounds.landauer_floor(args.mu)
    erasure = bounds.landauer_erasure_entropy(args.bits)
    _print_rows([
        ("mu", fmt(args.mu)),
        ("floor (2pi/mu) kB", f"{format_quantity(floor)} ({fmt(float(floor / k_B))} kB)"),
        ("floor in bits", fmt(float(floor / k_B) / math.log(2))),
        ("bits", str(args.bits)),
        ("n kB ln2", format_quantity(erasure)),
    ], out)


def cmd_report(args, out: TextIO) -> None:
    try:
        file = load_scenarios(args.scenario_file)
    except OSError as exc:
        raise ScenarioError(f"cannot read {args.scenario_file}: {exc.strerror}") from exc
    text = render(scenarios.evaluate(file), args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


COMMANDS = {
    "eval": cmd_eval,
    "blackhole": cmd_blackhole,
    "bound": cmd_bound,
    "landauer": cmd_landauer,
    "report": cmd_report,
}


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args, stdout)
    except (ParseError, QuantityError, ScenarioError, ValueError) as exc:
        print(f"bhinfo {args.command}: error: {exc}", file=stderr)
        return EXIT_INPUT
    return EXIT_OK


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run the CLI in-process; returns ``(exit_code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
PAPER_SCENARIOS = ROOT / "scenarios" / "paper_examples.json"
GOLDEN = Path(__file__).resolve().parent / "golden" / "paper_examples.json"


def normalize(obj):
    """Round every float to 6 significant digits for golden comparison."""
    if isinstance(obj, float):
        return float(f"{obj:.5e}")
    if isinstance(obj, dict):
        return {k: normalize(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [normalize(v) for v in obj]
    return obj


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance as acc

    if not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(acc.RESULTS):
        terminalreporter.write_line(acc.format_line(num, *acc.RESULTS[num]))

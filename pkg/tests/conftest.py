import pytest

from srcover.galois import field_make
from srcover.registry import registry_load


@pytest.fixture(scope="session")
def registry():
    return registry_load()


@pytest.fixture(scope="session")
def gf4():
    return field_make(2, 2)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            name = getattr(rep, "nodeid", "").rsplit("::", 1)[-1]
            if rep.when == "call" and name.startswith("test_criterion_"):
                lines.append((int(name.split("_")[2]), name, outcome.upper()[:4]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for n, name, status in sorted(lines):
            terminalreporter.write_line(f"criterion {n}: {status}  {name}")

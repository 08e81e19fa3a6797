import numpy as np
import pytest

from polarsim.network import generate_ba


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def ba10(rng):
    return generate_ba(10, 2, rng)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record a pass/fail line for the summary, then assert."""

    def check(number: int, name: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

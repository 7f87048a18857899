import numpy as np
import pytest

from univgate.gates import barenco


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def reference_gate():
    return barenco(0.3, 0.4, 0.5)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(capsys):
    """Record one PASS/FAIL line, echo it live, then assert."""

    def record(label: str, passed: bool, measured: str) -> None:
        line = f"{'PASS' if passed else 'FAIL'}  {label}: {measured}"
        _ACCEPTANCE.append(line)
        with capsys.disabled():
            print(f"\n{line}")
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)

import pytest

from datashare import GameInstance

ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture
def ref_instance() -> GameInstance:
    # r_f = r_g = 1, c = 0.32, m = -0.1
    return GameInstance(1.0, 1.0, 0.32, -0.1)


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append((name, bool(ok), detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")

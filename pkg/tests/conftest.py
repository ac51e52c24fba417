import pytest

from tmc.enumeration import enumerate_x0, enumerate_x1


@pytest.fixture(scope="session")
def x0_g2():
    return enumerate_x0(2)


@pytest.fixture(scope="session")
def x1_g2(x0_g2):
    return enumerate_x1(2, x0_records=x0_g2)


ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request, capsys):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number, ok, detail):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines[number] = line
        with capsys.disabled():
            print(f"\n{line}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])

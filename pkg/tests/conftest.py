import pytest

from closest_string import Instance

TABLE1_STRINGS = [
    "MKDLEXHXAL",
    "XXTDYKNSMI",
    "MFWHTEHYHI",
    "DHGCPCVGHW",
    "CYLATKQIIX",
    "MAMSSXNGHI",
    "QKSCYKLSVQ",
    "CHWDTEHSHW",
]

_ACCEPTANCE_LINES = []


@pytest.fixture
def two_strings():
    return Instance.from_strings(["abaaabbaba", "abababaabb"], "ab")


@pytest.fixture
def dna_four():
    return Instance.from_strings(["CAGTG", "CGATA", "GATCA", "CTACG"], "ACGT")


@pytest.fixture
def table1():
    return Instance.from_strings(TABLE1_STRINGS)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    status = "PASS" if rep.passed else "FAIL"
    _ACCEPTANCE_LINES.append(f"[{status}] criterion {marker.args[0]}: {item.name}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id): acceptance criterion id")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

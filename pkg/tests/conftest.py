import pytest

from fuzzypn import fixtures as fx
from fuzzypn.extend import extend

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def valve():
    return fx.water_valve()


@pytest.fixture
def valve_cw():
    return fx.water_valve_cw()


@pytest.fixture
def words():
    return {w.name: w for w in fx.flux_words() + fx.almost_words()}


@pytest.fixture
def valve_ext(valve_cw):
    return extend(valve_cw, fx.almost_words())


@pytest.fixture
def two_word():
    return fx.two_word_automaton()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k[1:])):
        ok, desc = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {desc}")

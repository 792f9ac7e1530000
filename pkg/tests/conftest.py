import pathlib

import pytest

from toughcycles.graph6 import decode_graph6

DATA = pathlib.Path(__file__).parent / "data"

ACCEPTANCE_RESULTS = {}


def _load(name):
    lines = [l.strip() for l in (DATA / name).read_text().splitlines() if l.strip()]
    return [(l, decode_graph6(l)) for l in lines]


@pytest.fixture(scope="session")
def connected_corpus():
    """Every connected graph on 1..8 vertices (geng -c), one per isomorphism class."""
    return _load("connected_n1to8.g6")


@pytest.fixture(scope="session")
def small_corpus():
    """Every graph on 1..7 vertices (geng)."""
    return _load("all_n1to7.g6")


@pytest.fixture
def record_criterion():
    def record(key, passed, detail=""):
        ACCEPTANCE_RESULTS[key] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0][1:])):
        passed, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {key}: {detail}")

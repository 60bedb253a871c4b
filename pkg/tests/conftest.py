import pytest

from latgeom.checks import lattices_of
from latgeom.corpus import generate_corpus
from latgeom.matroid import Matroid


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run long opt-in sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus()


@pytest.fixture(scope="session")
def corpus_lattices(corpus):
    return lattices_of(corpus)


@pytest.fixture
def small_example():
    # rank 3 on [5]; every triple except 123 and 345 is a basis
    bad = [{1, 2, 3}, {3, 4, 5}]
    bases = [b for b in _triples(5) if set(b) not in bad]
    return Matroid.from_bases(5, bases)


def _triples(n):
    from itertools import combinations

    return list(combinations(range(1, n + 1), 3))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

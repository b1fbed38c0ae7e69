import pytest

from ocover.corpus import all_o6c4c, load_corpus
from ocover.cover import SearchConfig, search_cycle_cover
from ocover.graph import gen_named

# filled by tests/test_acceptance.py, one line per criterion
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def petersen():
    return gen_named("petersen")


@pytest.fixture(scope="session")
def petersen_o6c4c(petersen):
    res = search_cycle_cover(petersen, SearchConfig(oriented=True))
    return res.solutions[0]


@pytest.fixture(scope="session")
def petersen_solutions(petersen):
    return all_o6c4c(petersen)


@pytest.fixture(scope="session")
def corpus22():
    return load_corpus(22)


@pytest.fixture(scope="session")
def sweep(corpus22):
    """Every o6c4c (all orientations) of every corpus snark, by graph name."""
    return {g.name: all_o6c4c(g) for g in corpus22}


@pytest.fixture(scope="session")
def sweep20(sweep):
    return {name: s for name, s in sweep.items() if s.graph.n <= 20}

import pytest

from foresthit.chain import ChainModel, WeightedUndirectedGraph, transition_row_normalize
from foresthit.hitting import analyze_chain
from foresthit.numerics import RationalMatrix

import golden


@pytest.fixture(scope="session")
def ex1_chain():
    return ChainModel(RationalMatrix(golden.EX1_T))


@pytest.fixture(scope="session")
def ex1(ex1_chain):
    return analyze_chain(ex1_chain)


@pytest.fixture(scope="session")
def ex2_graph():
    return WeightedUndirectedGraph.from_edges(6, [(u - 1, v - 1, 1) for u, v in golden.EX2_EDGES])


@pytest.fixture(scope="session")
def ex2_chain(ex2_graph):
    return transition_row_normalize(ex2_graph)


@pytest.fixture(scope="session")
def ex2(ex2_chain):
    return analyze_chain(ex2_chain)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])

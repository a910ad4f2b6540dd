import pytest

from homrep import Graph, enumerate_connected_graphs, named_family


@pytest.fixture(scope="session")
def corpus5():
    """All labeled connected graphs with 2..5 vertices."""
    out = []
    for n in range(2, 6):
        out.extend(enumerate_connected_graphs(n))
    return out


@pytest.fixture
def triangle():
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k4():
    return named_family("complete", 4)


@pytest.fixture
def bowtie():
    return named_family("bowtie", 5)

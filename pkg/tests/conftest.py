import pytest

from app.events.publisher import event_publisher
from app.models.graph import Multigraph
from app.services.operators import line_graph
from app.utils.corpus import petersen
from app.utils.generators import complete, cycle
from app.utils.graph_io import write_graph


@pytest.fixture(scope="function", autouse=True)
def clear_event_history():
    """Every test starts with an empty event history"""
    event_publisher.clear()
    yield
    event_publisher.clear()


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c5_line(c5):
    return line_graph(c5).line_graph


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def petersen_graph():
    return petersen()


@pytest.fixture
def double_edge():
    """Two parallel edges between 0 and 1, plus edge 1-2."""
    return Multigraph.from_edges(3, [(0, 1), (0, 1), (1, 2)])


@pytest.fixture
def graph_file(tmp_path):
    """Writes a graph to tmp_path and returns the path"""

    def write(graph: Multigraph, name: str = "graph.mg"):
        path = tmp_path / name
        write_graph(path, graph)
        return path

    return write

import pytest

from app.exceptions import (
    LoopEdgeError,
    MalformedHeaderError,
    MalformedLineError,
    VertexOutOfRangeError,
)
from app.models.graph import Multigraph
from app.utils.generators import cycle
from app.utils.graph_io import (
    from_graph6,
    parse_graph,
    read_corpus,
    serialize_graph,
    to_graph6,
)


def test_parse_edge_list_with_multiplicity():
    """Vertices are 1-based on disk, 0-based in memory"""
    graph = parse_graph("c two parallel edges\np mg 3 2\ne 1 2 2\ne 2 3 1\n")
    assert graph.vertex_count == 3
    assert graph.pairs() == [(0, 1), (0, 1), (1, 2)]


def test_serialize_then_parse_keeps_multiplicities(double_edge):
    """Parallel edges collapse into one line with a multiplicity"""
    text = serialize_graph(double_edge, ["demo"])
    assert text == "c demo\np mg 3 2\ne 1 2 2\ne 2 3 1\n"
    assert parse_graph(text) == double_edge


@pytest.mark.parametrize(
    "text, error",
    [
        ("e 1 2 1\n", MalformedHeaderError),
        ("p mg 3 1\np mg 3 1\ne 1 2 1\n", MalformedHeaderError),
        ("p mg 3 2\ne 1 2 1\n", MalformedHeaderError),
        ("p mg 3 1\ne 1 1 1\n", LoopEdgeError),
        ("p mg 3 1\ne 1 4 1\n", VertexOutOfRangeError),
        ("p mg 3 1\ne 1 2\n", MalformedLineError),
        ("p mg 3 1\ne 1 two 1\n", MalformedLineError),
        ("p mg 3 1\nx 1 2 1\n", MalformedLineError),
        ("p mg 3 1\ne 1 2 0\n", MalformedLineError),
        ("", MalformedHeaderError),
    ],
)
def test_parse_errors_carry_line_numbers(text, error):
    """Each malformed input raises its own error type"""
    with pytest.raises(error):
        parse_graph(text)


def test_error_message_names_the_line():
    """The offending line number is in the message"""
    with pytest.raises(VertexOutOfRangeError) as info:
        parse_graph("c header next\np mg 2 1\ne 1 3 1\n")
    assert info.value.line_number == 3
    assert "Line 3" in str(info.value)


def test_graph6_round_trip_of_cycle():
    """C_5 survives graph6 encoding up to its edge set"""
    graph = from_graph6(to_graph6(cycle(5)))
    assert sorted(graph.pairs()) == sorted(cycle(5).pairs())


def test_read_corpus_skips_comments_and_bad_lines(tmp_path):
    """Comment lines are ignored and unparsable graph6 lines are skipped"""
    corpus = tmp_path / "corpus.g6"
    corpus.write_text(f"# triangles and friends\n{to_graph6(cycle(3))}\n\n{to_graph6(cycle(4))}\n")
    graphs = list(read_corpus(corpus))
    assert [g.edge_count for g in graphs] == [3, 4]


def test_read_corpus_accepts_edge_list_document(tmp_path):
    """A corpus starting with a 'p' line is a single edge-list graph"""
    corpus = tmp_path / "one.mg"
    corpus.write_text(serialize_graph(Multigraph.from_edges(2, [(0, 1)])))
    assert [g.pairs() for g in read_corpus(corpus)] == [[(0, 1)]]

import pytest

from app.events.publisher import event_publisher
from app.exceptions import InvalidParameterError, UnverifiedCertificateError
from app.services.blowup import CopyTerminalSet, chi_bound_check, lift_certificate, route
from app.services.coloring import chromatic_index
from app.services.construction import construct_immersion
from app.services.operators import line_graph, multiply_edges
from app.services.verify import full_flags, verify
from app.utils.corpus import petersen_minus_vertex


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("length", [1, 2, 3, 4, 5, 6])
def test_routing_is_bijective_at_every_step(m, length):
    """Every transition between copies is taken by exactly one (i, j)"""
    routing = route(m, length)
    assert routing.is_bijective()
    for (i, j), ks in routing.assignment.items():
        assert ks[0] == i and ks[-1] == j


def test_routing_table_for_two_copies():
    """m=2 over a path of length 2"""
    assert route(2, 2).assignment == {
        (0, 0): (0, 0, 0),
        (0, 1): (0, 1, 1),
        (1, 0): (1, 1, 0),
        (1, 1): (1, 0, 1),
    }


@pytest.mark.parametrize("m, length", [(0, 2), (2, 0)])
def test_routing_rejects_bad_parameters(m, length):
    """m and the path length are positive"""
    with pytest.raises(InvalidParameterError):
        route(m, length)


def test_copy_terminals_follow_numbering():
    """Copy k of x is m*x + k"""
    copies = CopyTerminalSet.of([0, 2], 3)
    assert copies.copies == {0: (0, 1, 2), 2: (6, 7, 8)}
    assert copies.vertices == [0, 1, 2, 6, 7, 8]


def test_lift_c5_to_k9(c5):
    """K_3 in L(C_5) becomes a totally odd strong K_9 in L(3C_5)"""
    source = construct_immersion(c5)
    lifted = lift_certificate(source, c5, 3)
    graph = line_graph(multiply_edges(c5, 3)).line_graph
    assert lifted.t == 9
    assert len(lifted.paths) == 36
    assert verify(graph, lifted, full_flags(9)).overall
    assert lifted.properties.strong
    assert lifted.provenance.case == "odd-cycle"
    assert lifted.provenance.steps == ["blowup(m=3)"]
    assert event_publisher.events("certificate.lifted")[-1]["t"] == 9


def test_lifted_paths_project_onto_source_paths(c5):
    """Dividing every vertex by m gives back a source path"""
    source = construct_immersion(c5)
    lifted = lift_certificate(source, c5, 2)
    source_paths = {tuple(p.vertices) for p in source.paths}
    for path in lifted.paths:
        projected = tuple(v // 2 for v in path.vertices)
        if projected[0] == projected[-1]:
            assert len(projected) == 2
        else:
            assert projected in source_paths


def test_lift_with_one_copy_keeps_paths(c5):
    """m=1 changes nothing but the provenance"""
    source = construct_immersion(c5)
    lifted = lift_certificate(source, c5, 1)
    assert [p.vertices for p in lifted.paths] == [p.vertices for p in source.paths]
    assert lifted.terminals == source.terminals
    assert lifted.provenance.steps == ["blowup(m=1)"]


def test_lift_of_critical_host_certificate():
    """The K_4 of L(P - v) lifts to K_8 in L(2(P - v))"""
    host = petersen_minus_vertex()
    lifted = lift_certificate(construct_immersion(host), host, 2)
    graph = line_graph(multiply_edges(host, 2)).line_graph
    assert lifted.t == 8
    assert verify(graph, lifted, full_flags(8)).overall


def test_lift_rejects_unverified_input(c5):
    """A certificate with an even path is not lifted"""
    source = construct_immersion(c5)
    paths = list(source.paths)
    paths[2] = paths[2].model_copy(update={"vertices": [0, 1, 2]})
    with pytest.raises(UnverifiedCertificateError):
        lift_certificate(source.model_copy(update={"paths": paths}), c5, 2)


def test_lift_rejects_zero_copies(c5):
    """m must be positive"""
    with pytest.raises(InvalidParameterError):
        lift_certificate(construct_immersion(c5), c5, 0)


def test_chi_bound_on_c5(c5):
    """χ(L(2C_5)) ≤ 2·χ(L(C_5)) = 6"""
    report = chi_bound_check(c5, 2)
    assert report.base_chi == 3
    assert report.bound == 6
    assert report.exact
    assert report.passed
    assert report.to_text().splitlines()[-1] == "result pass"


@pytest.mark.parametrize("m", [2, 3])
def test_c5_lifts_to_totally_odd_strong_k3m(c5, m):
    """L(mC_5) carries a verified totally odd strong K_{3m}"""
    lifted = lift_certificate(construct_immersion(c5), c5, m)
    graph = line_graph(multiply_edges(c5, m)).line_graph
    assert lifted.t == 3 * m
    assert lifted.properties.strong and lifted.properties.totally_odd
    assert verify(graph, lifted, full_flags(3 * m)).overall


def test_chi_bound_on_tripled_c5(c5):
    """χ(L(3C_5)) = 8, one below the bound 3·3"""
    assert chromatic_index(multiply_edges(c5, 3))[0] == 8
    report = chi_bound_check(c5, 3)
    assert (report.base_chi, report.value, report.bound) == (3, 8, 9)
    assert report.exact
    assert report.passed

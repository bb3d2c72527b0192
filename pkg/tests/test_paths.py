from itertools import combinations

import pytest

from app.exceptions import InvalidParameterError, ThomassenPreconditionError
from app.models.graph import Multigraph
from app.services.paths import (
    Walk,
    brute_force_max_paths,
    max_edge_disjoint_paths,
    shortcut_to_simple,
    thomassen_system,
)
from app.utils.corpus import class_two_corpus, petersen_minus_vertex
from app.utils.generators import complete, cycle


def test_flow_count_on_complete_graph(k4):
    """K_4 has three edge-disjoint paths between any two vertices"""
    count, trails = max_edge_disjoint_paths(k4, 0, 1)
    assert count == 3
    used = [e for trail in trails for e in trail.edges]
    assert len(used) == len(set(used))


def test_flow_counts_parallel_edges(double_edge):
    """Both parallel edges carry a path"""
    count, trails = max_edge_disjoint_paths(double_edge, 0, 1)
    assert count == 2
    assert sorted(trail.edges for trail in trails) == [(0,), (1,)]


def test_flow_rejects_equal_endpoints(k4):
    """x and y must differ"""
    with pytest.raises(InvalidParameterError):
        max_edge_disjoint_paths(k4, 2, 2)


@pytest.mark.parametrize("host", [complete(4), cycle(5), petersen_minus_vertex()])
def test_flow_matches_brute_force(host):
    """Max-flow counts agree with exhaustive packing on every pair"""
    for x, y in combinations(range(host.vertex_count), 2):
        assert max_edge_disjoint_paths(host, x, y)[0] == brute_force_max_paths(host, x, y)


def test_shortcut_removes_closed_subwalk():
    """0-1-2-1-3 becomes 0-1-3"""
    walk = Walk((0, 1, 2, 1, 3), (10, 11, 12, 13))
    assert shortcut_to_simple(walk) == Walk((0, 1, 3), (10, 13))


@pytest.mark.parametrize("name", sorted(class_two_corpus()))
def test_thomassen_system_on_class_two_hosts(name):
    """A class 2 host of maximum degree d has a well-formed d-path system"""
    host = class_two_corpus()[name]
    system = thomassen_system(host, host.max_degree)
    assert system.d == host.max_degree
    assert system.problems(host) == []


def test_thomassen_system_on_c5_is_first_pair(c5):
    """The lexicographic scan stops at (0, 1), joined by lengths 1 and 4"""
    system = thomassen_system(c5, 2)
    assert (system.x, system.y) == (0, 1)
    assert sorted(walk.length for walk in system.paths) == [1, 4]
    assert sorted(system.lengths) == [0, 3]


def test_thomassen_rejects_class_one(k4):
    """K_4 is class 1, so no system is promised"""
    with pytest.raises(ThomassenPreconditionError):
        thomassen_system(k4, 3)


def test_thomassen_rejects_wrong_degree(c5):
    """d must equal the maximum degree"""
    with pytest.raises(ThomassenPreconditionError):
        thomassen_system(c5, 3)


def test_brute_force_on_theta_graph():
    """Three internally disjoint 0-1 paths"""
    theta = Multigraph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    assert brute_force_max_paths(theta, 0, 1) == 3

import math

import networkx as nx
import pytest

import oracles
from aspectral import (
    GraphError,
    build_graph,
    complement,
    components,
    cycle,
    complete,
    diameter,
    domination_number,
    graph_from_json,
    graph_to_json,
    is_bipartite,
    is_connected,
    is_k_connected,
    path,
    star,
    structural_profile,
    vertex_connectivity,
)
from aspectral.errors import CapabilityError


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_build_graph_normalizes():
    g = build_graph(4, [(2, 1), (0, 3)])
    assert g.edges == ((0, 3), (1, 2))
    assert g.m == 2
    assert g.degrees == (1, 1, 1, 1)
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(0, 1)


def test_build_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        build_graph(0, [])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1), (1, 0)])


def test_json_round_trip():
    g = build_graph(5, [(0, 1), (1, 4), (2, 3)])
    assert graph_from_json(graph_to_json(g)) == g


def test_structural_profile_examples():
    p = structural_profile(star(4))
    assert (p.n, p.m, p.max_degree, p.min_degree) == (4, 3, 3, 1)
    assert p.kind == "tree" and p.connected and p.bipartite and not p.regular
    assert p.degree_sequence == (3, 1, 1, 1)

    p = structural_profile(cycle(5))
    assert p.kind == "unicyclic" and p.regular and not p.bipartite
    assert p.average_degree == 2.0

    diamond = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    p = structural_profile(diamond)
    assert p.kind == "other" and len(p.components) == 1


def test_components_and_connectivity():
    g = build_graph(6, [(0, 1), (1, 2), (3, 4)])
    comps = components(g)
    assert [sorted(c) for c in comps] == [[0, 1, 2], [3, 4], [5]]
    assert not is_connected(g)
    assert is_connected(path(7))
    assert diameter(g) == math.inf


def test_bipartite():
    assert is_bipartite(path(6))
    assert is_bipartite(cycle(8))
    assert not is_bipartite(cycle(7))
    assert is_bipartite(build_graph(3, []))


def test_diameter_examples():
    assert diameter(path(5)) == 4
    assert diameter(cycle(6)) == 3
    assert diameter(complete(4)) == 1
    assert diameter(build_graph(1, [])) == 0


def test_complement():
    assert complement(complete(5)).m == 0
    c5 = cycle(5)
    assert sorted(complement(c5).degrees) == [2] * 5
    g = build_graph(6, [(0, 1), (2, 5)])
    assert complement(complement(g)) == g


def test_domination_examples():
    assert domination_number(complete(7)) == 1
    assert domination_number(star(9)) == 1
    assert domination_number(path(4)) == 2
    assert domination_number(cycle(7)) == 3
    assert domination_number(build_graph(3, [])) == 3
    two_triangles = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert domination_number(two_triangles) == 2


def test_domination_matches_brute_force(rng):
    for _ in range(120):
        g = oracles.random_graph(rng, rng.randint(1, 9), rng.random())
        assert domination_number(g) == oracles.brute_force_domination(g)


def test_domination_cap():
    with pytest.raises(CapabilityError):
        domination_number(build_graph(21, []))


def test_vertex_connectivity_examples():
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(cycle(6)) == 2
    assert vertex_connectivity(path(4)) == 1
    assert vertex_connectivity(star(5)) == 1
    assert vertex_connectivity(build_graph(4, [(0, 1)])) == 0
    assert is_k_connected(cycle(6), 2)
    assert not is_k_connected(cycle(6), 3)


def test_vertex_connectivity_matches_networkx(rng):
    checked = 0
    while checked < 40:
        g = oracles.random_graph(rng, rng.randint(2, 8), 0.5)
        if not is_connected(g):
            continue
        assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))
        checked += 1

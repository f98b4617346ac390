import random

import networkx as nx
import pytest

from factor_forge.colouring import (EdgeColouring, equitable_colour_bipartite,
                                    equitable_colour_simple, imbalance)
from factor_forge.errors import ConditionViolatedError, NotBipartiteError
from factor_forge.factorizer import augment_pendants
from factor_forge.graph import (SimpleGraph, complete_bipartite, complete_graph, cycle_graph,
                                path_graph, petersen_graph, star_graph)


def per_vertex_ok(col, divisible_gap=2):
    G, x = col.graph, col.num_colours
    for v in G.vertices():
        sizes = col.class_sizes(v)
        d = G.degree(v)
        if d % x:
            assert set(sizes) <= {d // x, d // x + 1}, (v, sizes)
        else:
            assert max(sizes) - min(sizes) <= divisible_gap, (v, sizes)


def test_imbalance_examples():
    C6 = cycle_graph(6)
    # canonical order (0,1) (0,5) (1,2) (2,3) (3,4) (4,5), alternating round the cycle
    alt = EdgeColouring(C6, 2, (0, 1, 1, 0, 1, 0))
    assert [alt.class_sizes(v) for v in C6.vertices()] == [[1, 1]] * 6
    assert imbalance(alt).max_pairwise_gap == 0
    star = EdgeColouring(star_graph(3), 2, (0, 0, 1))
    rep = imbalance(star)
    assert rep.max_pairwise_gap == 1 and rep.worst_vertex == 0
    mono = EdgeColouring(C6, 2, (0,) * 6)
    assert imbalance(mono).max_pairwise_gap == 2
    assert imbalance(mono).per_vertex_gaps[3] == 2


def test_colouring_rejects_bad_colours():
    with pytest.raises(ValueError):
        EdgeColouring(cycle_graph(3), 2, (0, 1, 2))
    with pytest.raises(ValueError):
        EdgeColouring(cycle_graph(3), 2, (0, 1))


def test_bipartite_examples():
    col = equitable_colour_bipartite(cycle_graph(6), [0, 1, 0, 1, 0, 1], 2)
    assert imbalance(col).max_pairwise_gap == 0
    K33 = complete_bipartite(3, 3)
    col = equitable_colour_bipartite(K33, {0, 1, 2}, 3)
    assert all(col.class_sizes(v) == [1, 1, 1] for v in K33.vertices())
    col = equitable_colour_bipartite(path_graph(4), [0, 1, 0, 1], 2)
    assert col.class_sizes(1) == [1, 1] and col.class_sizes(2) == [1, 1]


def test_bipartite_rejects_bad_partition():
    with pytest.raises(NotBipartiteError):
        equitable_colour_bipartite(cycle_graph(6), [0, 0, 1, 1, 0, 1], 2)
    with pytest.raises(NotBipartiteError):
        equitable_colour_bipartite(cycle_graph(5), [0, 1, 0, 1, 0], 2)


@pytest.mark.parametrize("seed", range(20))
def test_bipartite_random(seed):
    rng = random.Random(seed)
    B = nx.bipartite.random_graph(rng.randint(2, 9), rng.randint(2, 9), 0.5, seed=seed)
    G = SimpleGraph(B.number_of_nodes(), B.edges)
    side = [B.nodes[v]["bipartite"] for v in B.nodes]
    for x in range(1, 6):
        col = equitable_colour_bipartite(G, side, x)
        assert imbalance(col).max_pairwise_gap <= 1
        if G.m and x >= 2 and all(d % x for d in G.degrees() if d):
            simple = equitable_colour_simple(G, x)
            per_vertex_ok(simple, divisible_gap=1)


def test_simple_examples():
    col = equitable_colour_simple(cycle_graph(6), 3)
    per_vertex_ok(col)
    assert imbalance(col).max_pairwise_gap <= 1
    spider = SimpleGraph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    col = equitable_colour_simple(spider, 2)
    per_vertex_ok(col)


def test_simple_condition_violated_has_witness():
    with pytest.raises(ConditionViolatedError) as info:
        equitable_colour_simple(petersen_graph(), 3)
    u, v = info.value.witness
    assert petersen_graph().has_edge(u, v)


def test_simple_is_deterministic():
    G = augment_pendants(complete_graph(7), 3).graph
    assert equitable_colour_simple(G, 3).colour_of == equitable_colour_simple(G, 3).colour_of


def test_single_colour():
    col = equitable_colour_simple(petersen_graph(), 1)
    assert set(col.colour_of) == {0}


@pytest.mark.parametrize("seed", range(40))
def test_simple_on_augmented_random_graphs(seed):
    rng = random.Random(seed)
    n = rng.randint(6, 16)
    H = nx.gnp_random_graph(n, rng.uniform(0.3, 0.9), seed=seed)
    G = SimpleGraph(n, H.edges)
    for x in range(2, max(G.degrees(), default=0) + 1):
        aug = augment_pendants(G, x).graph
        col = equitable_colour_simple(aug, x, seed=seed)
        per_vertex_ok(col)


def test_atlas_graphs_meeting_condition():
    checked = 0
    for H in nx.graph_atlas_g()[1:300]:
        G = SimpleGraph(H.number_of_nodes(), H.edges)
        for x in range(2, max(G.degrees(), default=0) + 1):
            divisible = [v for v in G.vertices() if G.degree(v) % x == 0]
            if any(G.has_edge(u, v) for u in divisible for v in divisible if u < v):
                continue
            per_vertex_ok(equitable_colour_simple(G, x))
            checked += 1
    assert checked > 200

import networkx as nx
import pytest
from sklearn.base import clone

from factor_forge.colouring import imbalance
from factor_forge.errors import GraphError, InvalidParamsError
from factor_forge.estimators import (EquitableEdgeColourer, FeasibleCountPredictor, Factorizer,
                                     check_graph, check_graphs)
from factor_forge.factorizer import verify_factorization
from factor_forge.graph import SimpleGraph, complete_graph, cycle_graph, petersen_graph


def test_check_graph_variants():
    G = cycle_graph(4)
    assert check_graph(G) is G
    assert check_graph((4, [(0, 1), (1, 2), (2, 3), (3, 0)])) == G
    H = nx.Graph([("a", "b"), ("b", "c")])
    S = check_graph(H)
    assert S.n == 3 and S.m == 2 and S.labels == ("a", "b", "c")


def test_check_graph_rejects():
    with pytest.raises(GraphError):
        check_graph(nx.MultiGraph([(0, 1), (0, 1)]))
    with pytest.raises(GraphError):
        check_graph(nx.DiGraph([(0, 1)]))
    with pytest.raises(GraphError):
        check_graph("not a graph")
    with pytest.raises(GraphError):
        check_graph((2, [(0, 0)]))


def test_check_graphs_single_and_many():
    assert len(check_graphs(cycle_graph(3))) == 1
    assert len(check_graphs((3, [(0, 1)]))) == 1
    assert len(check_graphs([cycle_graph(3), nx.path_graph(3)])) == 2


def test_params_round_trip():
    est = Factorizer(r=2, a=1, n_factors=3)
    assert est.get_params()["n_factors"] == 3
    est.set_params(n_factors=4)
    assert clone(est).n_factors == 4


def test_colourer():
    est = EquitableEdgeColourer(n_colours=3)
    (col,) = est.fit_transform(cycle_graph(6))
    assert imbalance(col).max_pairwise_gap <= 1
    assert est.n_graphs_ == 1
    with pytest.raises(InvalidParamsError):
        EquitableEdgeColourer(n_colours=0).fit(cycle_graph(6))


def test_factorizer_predict():
    est = Factorizer(r=1, a=0, n_factors=3).fit([complete_graph(4), petersen_graph()])
    assert est.predict([complete_graph(4), petersen_graph()]) == [True, False]
    (f,) = est.transform(complete_graph(4))
    assert verify_factorization(complete_graph(4), f)


def test_factorizer_validates():
    with pytest.raises(InvalidParamsError):
        Factorizer(r=0).fit(cycle_graph(4))
    with pytest.raises(InvalidParamsError):
        Factorizer(n_factors=True).fit(cycle_graph(4))


def test_feasible_predictor():
    est = FeasibleCountPredictor(r=2, a=1).fit()
    assert est.predict([(29, 0), (4, 0)]) == [[10, 11, 12, 13, 14], [2]]


def test_networkx_input_to_factorizer():
    H = nx.complete_graph(["p", "q", "r", "s"])
    assert Factorizer(r=1, a=0, n_factors=3).fit(H).predict(H) == [True]
    assert isinstance(check_graph(H), SimpleGraph)

"""scikit-learn style wrappers around the colouring and factorization routines.

Each estimator takes one graph or a sequence of graphs as ``X``.  Graphs may
be :class:`SimpleGraph` instances, networkx graphs, or ``(n, edges)`` pairs;
:func:`check_graph` normalises all three.
"""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin

from .colouring import equitable_colour_simple
from .errors import GraphError, InvalidParamsError
from .factorizer import EXACT_CAP, factorize
from .graph import SimpleGraph
from .thresholds import feasible_x_set


def check_graph(G) -> SimpleGraph:
    """Return ``G`` as a :class:`SimpleGraph`, relabelling networkx nodes 0..n-1."""
    if isinstance(G, SimpleGraph):
        return G
    if hasattr(G, "nodes") and hasattr(G, "edges"):
        if G.is_directed() or G.is_multigraph():
            raise GraphError("only simple undirected graphs are supported")
        nodes = list(G.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        return SimpleGraph(len(nodes), [(index[u], index[v]) for u, v in G.edges],
                           labels=[str(v) for v in nodes])
    if isinstance(G, tuple) and len(G) == 2:
        n, edges = G
        return SimpleGraph(int(n), edges)
    raise GraphError(f"cannot interpret {type(G).__name__} as a graph")


def check_graphs(X) -> list[SimpleGraph]:
    """Accept a single graph or a sequence of graphs."""
    if isinstance(X, SimpleGraph) or hasattr(X, "nodes"):
        return [check_graph(X)]
    if isinstance(X, tuple) and len(X) == 2 and isinstance(X[0], int):
        return [check_graph(X)]
    return [check_graph(G) for G in X]


def check_positive(name: str, value, minimum: int = 1) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise InvalidParamsError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


class EquitableEdgeColourer(TransformerMixin, BaseEstimator):
    """Equitable edge-colouring with ``n_colours`` colours.

    ``transform`` returns one :class:`EdgeColouring` per input graph.
    """

    def __init__(self, n_colours=2, seed=0):
        self.n_colours = n_colours
        self.seed = seed

    def fit(self, X, y=None):
        check_positive("n_colours", self.n_colours)
        self.n_graphs_ = len(check_graphs(X))
        return self

    def transform(self, X):
        return [equitable_colour_simple(G, self.n_colours, seed=self.seed)
                for G in check_graphs(X)]


class Factorizer(TransformerMixin, BaseEstimator):
    """(r, r+a)-factorization into ``n_factors`` factors.

    ``transform`` yields a :class:`Factorization` or ``None`` per graph;
    ``predict`` reports whether one was found.
    """

    def __init__(self, r=1, a=1, n_factors=1, exact_cap=EXACT_CAP, seed=0):
        self.r = r
        self.a = a
        self.n_factors = n_factors
        self.exact_cap = exact_cap
        self.seed = seed

    def fit(self, X, y=None):
        check_positive("r", self.r)
        check_positive("a", self.a, minimum=0)
        check_positive("n_factors", self.n_factors)
        self.n_graphs_ = len(check_graphs(X))
        return self

    def transform(self, X):
        return [factorize(G, self.r, self.a, self.n_factors, seed=self.seed,
                          exact_cap=self.exact_cap) for G in check_graphs(X)]

    def predict(self, X):
        return [f is not None for f in self.transform(X)]


class FeasibleCountPredictor(BaseEstimator):
    """Predicts the factor counts every graph with a given degree profile admits.

    ``X`` rows are ``(d, s)`` pairs; ``predict`` returns the feasible member
    lists for the configured ``(r, a)``.
    """

    def __init__(self, r=1, a=1):
        self.r = r
        self.a = a

    def fit(self, X=None, y=None):
        check_positive("r", self.r)
        check_positive("a", self.a, minimum=0)
        return self

    def predict(self, X):
        return [list(feasible_x_set(int(d), int(s), self.r, self.a).members) for d, s in X]

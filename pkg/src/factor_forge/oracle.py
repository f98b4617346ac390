"""Brute-force ground truth for small graphs.

:func:`exists_factorization` decides whether a graph has an
(r, r+a)-factorization with x factors by exhaustive search.  It deliberately
shares no code with :mod:`factor_forge.factorizer`: it walks vertices rather
than edges, fixing all still-open edges at a vertex in one step.
"""
from __future__ import annotations

import json
import os
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InfeasibleError, TooLargeError
from .extremal import gen_boundary_EO, gen_boundary_OO, gen_lemma14_regular
from .factorizer import Factorization, verify_factorization
from .graph import (SimpleGraph, complete_bipartite, complete_graph, cycle_graph, path_graph,
                    petersen_graph, read_graphs, star_graph, write_graph)
from .thresholds import feasible_x_set

ORACLE_CAP = 30
MAX_REPAIRS = 1000


@dataclass(frozen=True)
class OracleVerdict:
    exists: bool
    witness: Factorization | None
    nodes_explored: int
    exhaustive: bool


def _bfs_order(G: SimpleGraph) -> list[int]:
    """Breadth-first from the highest-degree vertex of each component."""
    seen = [False] * G.n
    out = []
    for root in sorted(G.vertices(), key=lambda v: (-G.degree(v), v)):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for v in queue:
            out.append(v)
            for w in sorted(G.neighbors(v), key=lambda w: (-G.degree(w), w)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return out


def exists_factorization(G: SimpleGraph, r: int, a: int, x: int,
                         cap: int = ORACLE_CAP) -> OracleVerdict:
    if G.m > cap:
        raise TooLargeError(f"oracle refuses {G.m} edges (cap {cap})")
    n, hi = G.n, r + a
    degs = G.degrees()
    if x < 1 or (n and (x * r > min(degs) or x * hi < max(degs))):
        return OracleVerdict(False, None, 0, True)
    order = _bfs_order(G)
    label: dict[int, int] = {}
    load = [[0] * x for _ in range(n)]
    unlabelled = list(degs)
    nodes = 0

    def owed(v):
        return sum(r - c for c in load[v] if c < r)

    def fill(k, v, pending, idx, top):
        """Assign factor labels to pending edges at v, then move on."""
        nonlocal nodes
        nodes += 1
        if idx == len(pending):
            return place(k + 1, top)
        e = pending[idx]
        u, w = G.edges[e]
        other = w if u == v else u
        unlabelled[v] -= 1
        unlabelled[other] -= 1
        for f in range(min(top + 1, x)):
            if load[v][f] >= hi or load[other][f] >= hi:
                continue
            load[v][f] += 1
            load[other][f] += 1
            if owed(v) <= unlabelled[v] and owed(other) <= unlabelled[other]:
                label[e] = f
                if fill(k, v, pending, idx + 1, max(top, f + 1)):
                    return True
                del label[e]
            load[v][f] -= 1
            load[other][f] -= 1
        unlabelled[v] += 1
        unlabelled[other] += 1
        return False

    def place(k, top):
        if k == len(order):
            return True
        v = order[k]
        return fill(k, v, [e for e in G.incident(v) if e not in label], 0, top)

    found = place(0, 0)
    if not found:
        return OracleVerdict(False, None, nodes, True)
    witness = Factorization(G, x, r, a, tuple(label[e] for e in range(G.m)))
    if not verify_factorization(G, witness):
        raise AssertionError("oracle produced an invalid witness")
    return OracleVerdict(True, witness, nodes, True)


@dataclass
class Corpus:
    spec: dict
    graphs: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.graphs)

    def __len__(self):
        return len(self.graphs)


def default_seed() -> int:
    return int(os.environ.get("FACTOR_FORGE_SEED", "0"))


def _sample_one(d: int, s: int, n: int, rng: random.Random) -> SimpleGraph:
    adj = [set() for _ in range(n)]
    target = [rng.randint(d, d + s) for _ in range(n)]

    def free(v):
        return len(adj[v]) < d + s

    # greedy random additions towards per-vertex targets
    for v in rng.sample(range(n), n):
        cands = [w for w in range(n) if w != v and w not in adj[v] and len(adj[w]) < target[w]]
        rng.shuffle(cands)
        for w in cands:
            if len(adj[v]) >= target[v]:
                break
            if len(adj[w]) < target[w]:
                adj[v].add(w)
                adj[w].add(v)
    # repair vertices still below d
    for _ in range(MAX_REPAIRS):
        short = [v for v in range(n) if len(adj[v]) < d]
        if not short:
            break
        v = rng.choice(short)
        partners = [w for w in range(n) if w != v and w not in adj[v] and free(w)]
        if partners:
            w = rng.choice(partners)
            adj[v].add(w)
            adj[w].add(v)
            continue
        # swap: drop p-q, add v-p and z-q where z is v itself (if it can take
        # two more) or another short vertex
        others = [z for z in short if z != v]
        z = v if len(adj[v]) + 2 <= d + s else (rng.choice(others) if others else None)
        if z is None:
            continue
        edges = [(p, q) for p in range(n) for q in adj[p] if p < q]
        rng.shuffle(edges)
        swaps = [(p, q) for e in edges for p, q in (e, e[::-1])
                 if p not in (v, z) and q not in (v, z)
                 and p not in adj[v] and q not in adj[z]]
        if swaps:
            p, q = swaps[0]
            adj[p].discard(q)
            adj[q].discard(p)
            adj[v].add(p)
            adj[p].add(v)
            adj[z].add(q)
            adj[q].add(z)
    else:
        raise InfeasibleError(f"repair budget exhausted for d={d}, s={s}, n={n}")
    if any(len(adj[v]) < d for v in range(n)):
        raise InfeasibleError(f"repair budget exhausted for d={d}, s={s}, n={n}")
    return SimpleGraph(n, [(u, w) for u in range(n) for w in adj[u] if u < w])


def sample_dds_graphs(d: int, s: int, n: int, count: int, seed: int | None = None,
                      max_edges: int | None = None) -> Corpus:
    """Random simple graphs with every degree in ``[d, d+s]``, reproducible per seed."""
    if seed is None:
        seed = default_seed()
    if d < 0 or s < 0 or n < 1:
        raise InfeasibleError(f"invalid request d={d}, s={s}, n={n}")
    if d >= n:
        raise InfeasibleError(f"degree {d} impossible on {n} vertices")
    if s == 0 and (n * d) % 2:
        raise InfeasibleError(f"no {d}-regular graph on {n} vertices")
    if max_edges is not None and n * d > 2 * max_edges:
        raise InfeasibleError(f"every graph would exceed {max_edges} edges")
    rng = random.Random(seed)
    spec = {"d": d, "s": s, "n": n, "count": count, "seed": seed, "max_edges": max_edges}
    graphs = []
    attempts = 0
    while len(graphs) < count:
        attempts += 1
        if attempts > 50 * count + 50:
            raise InfeasibleError("could not draw enough graphs within the edge limit")
        G = _sample_one(d, s, n, rng)
        if max_edges is None or G.m <= max_edges:
            graphs.append(G)
    return Corpus(spec, graphs)


def write_corpus(corpus: Corpus, directory) -> None:
    """Concatenated edge lists in ``graphs.txt`` plus ``manifest.json``."""
    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, "graphs.txt"), "w", encoding="utf-8", newline="\n") as fh:
        for G in corpus.graphs:
            fh.write(write_graph(G))
    manifest = {"spec": corpus.spec, "count": len(corpus.graphs), "file": "graphs.txt"}
    with open(os.path.join(directory, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)


def read_corpus(directory) -> Corpus:
    with open(os.path.join(directory, "manifest.json"), encoding="utf-8") as fh:
        manifest = json.load(fh)
    with open(os.path.join(directory, manifest["file"]), encoding="utf-8") as fh:
        graphs = read_graphs(fh.read())
    if len(graphs) != manifest["count"]:
        raise ValueError("manifest count does not match graph file")
    return Corpus(manifest["spec"], graphs)


def fixture_graphs() -> dict[str, SimpleGraph]:
    """Named hand fixtures, all within the oracle cap."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        fig3 = gen_boundary_OO(1, 2, 1, 2).graph
    return {
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "P4": path_graph(4),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "K6": complete_graph(6),
        "K33": complete_bipartite(3, 3),
        "K34": complete_bipartite(3, 4),
        "K14": star_graph(4),
        "petersen": petersen_graph(),
        "bridged_cubic": gen_lemma14_regular(3, 1),
        "boundary_EO_2_2_1_2": gen_boundary_EO(2, 2, 1, 2).graph,
        "boundary_OO_1_2_1_2": fig3,
    }


# Cell categories in a conformance sweep.
MEMBER = "member"            # x is in the feasible set: a factorization must exist
OUTSIDE = "outside"          # x violates the averaging bounds: none can exist
SELF = "self"                # x = 1 and the graph is itself a factor
ENDPOINT = "endpoint"        # x sits on an excluded interval endpoint
SIDE = "side_condition"      # the characterization's side condition fails


@dataclass
class ConformanceReport:
    r: int
    a: int
    cells: list = field(default_factory=list)

    def by_status(self, status):
        return [c for c in self.cells if c["status"] == status]

    @property
    def disagreements(self):
        return self.by_status("disagree")

    @property
    def agreements(self):
        return self.by_status("agree")

    @property
    def side_condition_cells(self):
        return [c for c in self.cells if c["category"] == SIDE]

    def summary(self) -> dict:
        out: dict = {}
        for c in self.cells:
            key = f"{c['category']}/{c['status']}"
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {"r": self.r, "a": self.a, "summary": self.summary(), "cells": self.cells}


def classify(G: SimpleGraph, r: int, a: int, x: int) -> tuple[str, bool | None]:
    """Category of cell (G, x) and the verdict it forces, if any."""
    degs = G.degrees()
    d, top = min(degs), max(degs)
    if Fraction(top, r + a) > x or x > Fraction(d, r):
        return OUTSIDE, False
    fs = feasible_x_set(d, top - d, r, a)
    if fs.side_condition_met and x in fs.members:
        return MEMBER, True
    if x == 1 and r <= d and top <= r + a:
        return SELF, True
    if not fs.side_condition_met:
        return SIDE, None
    return ENDPOINT, None


def conformance_sweep(corpus, r: int, a: int, cap: int = ORACLE_CAP) -> ConformanceReport:
    """Oracle verdict against feasible-set membership for x in [1, d_max].

    At an excluded endpoint the characterization only promises that *some*
    graph fails, so a missing factorization there counts as agreement and an
    existing one is recorded as ``graph_specific`` rather than a disagreement.
    """
    report = ConformanceReport(r, a)
    graphs = corpus.items() if isinstance(corpus, dict) else enumerate(corpus)
    for name, G in graphs:
        if G.m == 0:
            continue
        for x in range(1, max(G.degrees()) + 1):
            category, forced = classify(G, r, a, x)
            verdict = exists_factorization(G, r, a, x, cap=cap)
            if forced is None:
                if category == ENDPOINT:
                    status = "graph_specific" if verdict.exists else "agree"
                else:
                    status = "excluded"
            else:
                status = "agree" if verdict.exists == forced else "disagree"
            report.cells.append({"graph": name, "x": x, "category": category,
                                 "exists": verdict.exists, "status": status})
    return report

"""Equitable edge-colourings.

A colouring with ``x`` colours is *equitable* at ``v`` when any two colour
classes at ``v`` differ in size by at most one, and *nearly equitable* when
they differ by at most two.

Two engines live here:

* :func:`equitable_colour_bipartite` splits every vertex into copies of
  degree at most ``x`` and properly colours the resulting bipartite graph
  with alternating-path swaps.  It always succeeds.
* :func:`equitable_colour_simple` balances colour pairs along Euler
  circuits of two-coloured subgraphs, driven by the potential
  ``sum_v sum_c |c(v)|**2``.  Components that are Eulerian with an odd
  number of edges can leave a surplus of two at one vertex; the engine moves
  that surplus to a harmless vertex when one exists and otherwise takes a
  randomized zero-potential step.  It gives up with
  :class:`BalancingFailedError` after a bounded number of steps.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BalancingFailedError, ConditionViolatedError, NotBipartiteError
from .graph import SimpleGraph

MAX_RETRIES = 8


@dataclass(frozen=True)
class EdgeColouring:
    graph: SimpleGraph
    num_colours: int
    colour_of: tuple[int, ...]

    def __post_init__(self):
        if len(self.colour_of) != self.graph.m:
            raise ValueError("one colour per edge required")
        if any(not 0 <= c < self.num_colours for c in self.colour_of):
            raise ValueError("colour index out of range")

    def class_degree(self, v: int, colour: int) -> int:
        return sum(1 for e in self.graph.incident(v) if self.colour_of[e] == colour)

    def class_sizes(self, v: int) -> list[int]:
        sizes = [0] * self.num_colours
        for e in self.graph.incident(v):
            sizes[self.colour_of[e]] += 1
        return sizes

    def classes(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.num_colours)]
        for e, c in zip(self.graph.edges, self.colour_of):
            out[c].append(e)
        return out


@dataclass(frozen=True)
class ImbalanceReport:
    max_pairwise_gap: int
    worst_vertex: int | None
    per_vertex_gaps: dict


def imbalance(col: EdgeColouring) -> ImbalanceReport:
    gaps = {}
    for v in col.graph.vertices():
        sizes = col.class_sizes(v)
        gaps[v] = max(sizes) - min(sizes)
    if not gaps:
        return ImbalanceReport(0, None, gaps)
    worst = max(gaps, key=lambda v: (gaps[v], -v))
    return ImbalanceReport(gaps[worst], worst, gaps)


def _check_contract(col: EdgeColouring, allowed: Sequence[int]) -> list[int]:
    """Vertices whose class sizes break the allowed gap."""
    bad = []
    for v in col.graph.vertices():
        sizes = col.class_sizes(v)
        if max(sizes) - min(sizes) > allowed[v]:
            bad.append(v)
    return bad


# -- bipartite route ------------------------------------------------------

def _sides(G: SimpleGraph, bipartition) -> list[int]:
    if isinstance(bipartition, (set, frozenset)):
        side = [0 if v in bipartition else 1 for v in G.vertices()]
    else:
        side = [int(b) for b in bipartition]
        if len(side) != G.n or any(b not in (0, 1) for b in side):
            raise NotBipartiteError("bipartition must give side 0 or 1 for every vertex")
    for u, v in G.edges:
        if side[u] == side[v]:
            raise NotBipartiteError(f"edge ({u}, {v}) lies inside one side")
    return side


def equitable_colour_bipartite(G: SimpleGraph, bipartition, x: int) -> EdgeColouring:
    """Equitable colouring of a bipartite graph with ``x`` colours.

    ``bipartition`` is either a 0/1 side per vertex or the set of vertices on
    side 0.
    """
    if x < 1:
        raise ValueError("x must be positive")
    _sides(G, bipartition)
    # Edge e at v is routed to copy (v, position // x); copies have degree <= x.
    copy_of: dict[tuple[int, int], tuple[int, int]] = {}
    for v in G.vertices():
        for pos, e in enumerate(G.incident(v)):
            copy_of[(e, v)] = (v, pos // x)
    at: dict[tuple[int, int], dict[int, int]] = {}
    colour = [-1] * G.m
    ends = []
    for e, (u, v) in enumerate(G.edges):
        ends.append((copy_of[(e, u)], copy_of[(e, v)]))

    def free(node):
        used = at.setdefault(node, {})
        return next(c for c in range(x) if c not in used)

    def other(e, node):
        p, q = ends[e]
        return q if node == p else p

    for e, (p, q) in enumerate(ends):
        a, b = free(p), free(q)
        if a in at[q]:
            # flip the a/b alternating path leaving q; it cannot reach p
            path, node, c = [], q, a
            while c in at.setdefault(node, {}):
                f = at[node][c]
                path.append(f)
                node = other(f, node)
                c = b if c == a else a
            for f in path:
                for end in ends[f]:
                    del at[end][colour[f]]
            for f in path:
                colour[f] = b if colour[f] == a else a
                for end in ends[f]:
                    at[end][colour[f]] = f
        colour[e] = a
        at[p][a] = e
        at[q][a] = e
    col = EdgeColouring(G, x, tuple(colour))
    if _check_contract(col, [1] * G.n):
        raise BalancingFailedError("bipartite colouring failed post-verification")
    return col


# -- simple-graph route ---------------------------------------------------

def divisible_conflict(G: SimpleGraph, x: int) -> tuple[int, int] | None:
    """First edge whose two ends both have degree divisible by ``x``."""
    for u, v in G.edges:
        if G.degree(u) % x == 0 and G.degree(v) % x == 0:
            return (u, v)
    return None


class _Balancer:
    def __init__(self, G: SimpleGraph, x: int, allowed: Sequence[int], rng: random.Random | None):
        self.G = G
        self.x = x
        self.allowed = allowed
        self.rng = rng
        self.col = [0] * G.m
        self.cnt = [[0] * x for _ in G.vertices()]

    def seed_greedy(self, order: Iterable[int]):
        cnt, x = self.cnt, self.x
        for e in order:
            u, v = self.G.edges[e]
            cu, cv = cnt[u], cnt[v]
            c = min(range(x), key=lambda k: (max(cu[k], cv[k]), cu[k] + cv[k], k))
            self.col[e] = c
            cu[c] += 1
            cv[c] += 1

    def _recolour(self, e, c):
        u, v = self.G.edges[e]
        old = self.col[e]
        self.cnt[u][old] -= 1
        self.cnt[v][old] -= 1
        self.cnt[u][c] += 1
        self.cnt[v][c] += 1
        self.col[e] = c

    def gap(self, v):
        row = self.cnt[v]
        return max(row) - min(row)

    def violators(self):
        return [v for v in self.G.vertices() if self.gap(v) > self.allowed[v]]

    def component(self, alpha, beta, v):
        """Edges of colour alpha/beta reachable from v, with local degrees."""
        G, col = self.G, self.col
        seen_v, edges, stack = {v}, [], [v]
        seen_e = set()
        while stack:
            w = stack.pop()
            for e in G.incident(w):
                if e in seen_e or col[e] not in (alpha, beta):
                    continue
                seen_e.add(e)
                edges.append(e)
                a, b = G.edges[e]
                z = b if a == w else a
                if z not in seen_v:
                    seen_v.add(z)
                    stack.append(z)
        deg = dict.fromkeys(seen_v, 0)
        for e in edges:
            a, b = G.edges[e]
            deg[a] += 1
            deg[b] += 1
        return sorted(edges), deg

    def _circuit(self, edges, deg, start):
        """Closed trail through all given edges (plus dummy edges to odd vertices)."""
        DUMMY = -1
        adj: dict[int, list[tuple[int, int]]] = {w: [] for w in deg}
        adj[DUMMY] = []
        for e in edges:
            a, b = self.G.edges[e]
            adj[a].append((e, b))
            adj[b].append((e, a))
        fake = -2
        for w in sorted(deg):
            if deg[w] % 2:
                adj[w].append((fake, DUMMY))
                adj[DUMMY].append((fake, w))
                fake -= 1
        if adj[DUMMY]:
            start = DUMMY
        used = set()
        ptr = {w: 0 for w in adj}
        stack = [(start, None)]
        trail = []
        while stack:
            w, via = stack[-1]
            lst = adj[w]
            while ptr[w] < len(lst) and lst[ptr[w]][0] in used:
                ptr[w] += 1
            if ptr[w] < len(lst):
                e, z = lst[ptr[w]]
                used.add(e)
                stack.append((z, e))
            else:
                stack.pop()
                if via is not None:
                    trail.append(via)
        return trail, start

    def rebalance(self, alpha, beta, edges, deg, start, first=None):
        """Alternate alpha/beta along an Euler circuit of the component.

        Every vertex ends with |alpha - beta| <= 1 except ``start`` when the
        component is Eulerian with an odd edge count; ``first`` picks which
        colour that vertex gets in surplus.
        """
        trail, start = self._circuit(edges, deg, start)
        a, b = (alpha, beta) if first in (None, alpha) else (beta, alpha)
        for i, e in enumerate(trail):
            if e >= 0:
                self._recolour(e, a if i % 2 == 0 else b)

    def _pair_gap(self, w, alpha, beta):
        return abs(self.cnt[w][alpha] - self.cnt[w][beta])

    def _candidate_pairs(self, v):
        row = self.cnt[v]
        order = sorted(range(self.x), key=lambda c: (-row[c], c))
        pairs = []
        for hi in order:
            for lo in reversed(order):
                if row[hi] - row[lo] > self.allowed[v]:
                    pairs.append((hi, lo))
        pairs.sort(key=lambda p: (-(row[p[0]] - row[p[1]]), p))
        return pairs

    def step(self, v, tabu=None):
        """Try to reduce the violation at v; returns a follow-up (vertex, tabu)."""
        pairs = [p for p in self._candidate_pairs(v) if tabu is None or set(p) != set(tabu)]
        if not pairs:
            pairs = self._candidate_pairs(v)
        stuck = []
        for alpha, beta in pairs:
            edges, deg = self.component(alpha, beta, v)
            if len(edges) % 2 == 0 or any(k % 2 for k in deg.values()):
                self.rebalance(alpha, beta, edges, deg, v)
                return None
            # Eulerian component with an odd edge count
            if self._pair_gap(v, alpha, beta) >= 4:
                self.rebalance(alpha, beta, edges, deg, v)
                return None
            for w in sorted(deg):
                if w != v and self._pair_gap(w, alpha, beta) >= 2:
                    self.rebalance(alpha, beta, edges, deg, w, first=self._heavier(w, alpha, beta))
                    return None
            for w in sorted(deg):
                if w != v and self.allowed[w] >= 2 and self._absorbs(w, alpha, beta):
                    self.rebalance(alpha, beta, edges, deg, w, first=self._absorbs(w, alpha, beta))
                    return None
            stuck.append((alpha, beta, edges, deg))
        # zero-potential move: push the surplus to another vertex of the component
        alpha, beta, edges, deg = stuck[0] if self.rng is None else self.rng.choice(stuck)
        others = [w for w in sorted(deg) if w != v]
        w = others[0] if self.rng is None else self.rng.choice(others)
        first = self._escape_colour(w, alpha, beta)
        self.rebalance(alpha, beta, edges, deg, w, first=first)
        return (w, (alpha, beta))

    def _heavier(self, w, alpha, beta):
        return alpha if self.cnt[w][alpha] >= self.cnt[w][beta] else beta

    def _absorbs(self, w, alpha, beta):
        """Colour to put in surplus at w keeping w within a gap of 2, if any."""
        row = self.cnt[w]
        j = (row[alpha] + row[beta]) // 2
        rest = [row[c] for c in range(self.x) if c not in (alpha, beta)]
        for surplus in (alpha, beta):
            vals = rest + [j + 1, j - 1]
            if max(vals) - min(vals) <= self.allowed[w]:
                return surplus
        return None

    def _escape_colour(self, w, alpha, beta):
        """Pick the surplus orientation at w that creates a gap with a third colour."""
        row = self.cnt[w]
        j = (row[alpha] + row[beta]) // 2
        rest = [row[c] for c in range(self.x) if c not in (alpha, beta)]
        options = []
        if rest and min(rest) <= j - 1:
            options.append(alpha)
        if rest and max(rest) >= j + 1:
            options.append(beta)
        if not options:
            options = [alpha, beta]
        return options[0] if self.rng is None else self.rng.choice(options)

    def run(self, max_steps):
        follow = None
        for _ in range(max_steps):
            if follow is not None and self.gap(follow[0]) > self.allowed[follow[0]]:
                v, tabu = follow
            else:
                bad = self.violators()
                if not bad:
                    return True
                v = bad[0] if self.rng is None else self.rng.choice(bad)
                tabu = None
            follow = self.step(v, tabu)
        return not self.violators()


def equitable_colour_simple(G: SimpleGraph, x: int, seed: int = 0,
                            max_retries: int = MAX_RETRIES) -> EdgeColouring:
    """Colouring equitable at vertices with ``x`` not dividing the degree.

    Vertices whose degree is divisible by ``x`` are allowed a gap of two.
    Requires that no two such vertices are adjacent.
    """
    if x < 1:
        raise ValueError("x must be positive")
    if x == 1:
        return EdgeColouring(G, 1, (0,) * G.m)
    witness = divisible_conflict(G, x)
    if witness is not None:
        raise ConditionViolatedError("adjacent vertices with degree divisible by x", witness)
    allowed = [2 if G.degree(v) % x == 0 else 1 for v in G.vertices()]
    max_steps = 10 * x * max(G.m, 1)
    for attempt in range(max_retries):
        rng = None if attempt == 0 else random.Random(seed * 1_000_003 + attempt)
        bal = _Balancer(G, x, allowed, rng)
        order = list(range(G.m))
        if rng is not None:
            rng.shuffle(order)
        bal.seed_greedy(order)
        if bal.run(max_steps):
            col = EdgeColouring(G, x, tuple(bal.col))
            if not _check_contract(col, allowed):
                return col
    raise BalancingFailedError(
        f"no balanced {x}-colouring found after {max_retries} attempts of {max_steps} steps")

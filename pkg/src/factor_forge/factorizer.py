"""(r, r+a)-factorizations with a prescribed number of factors.

Strictly interior factor counts, ``d_max/(r+a) < x < d_min/r``, are built
constructively: attach a pendant edge at every vertex whose degree ``x``
divides, colour the augmented graph equitably with ``x`` colours and drop the
pendant edges.  Every other count goes to a complete backtracking search,
which is capped by edge count.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .colouring import equitable_colour_simple
from .errors import (BalancingFailedError, ConstructionFailedError, InvalidFactorCountError,
                     ParseError, TooLargeError, XOutOfRangeError)
from .graph import SimpleGraph, degree_profile

EXACT_CAP = 40


@dataclass(frozen=True)
class Factorization:
    graph: SimpleGraph
    x: int
    r: int
    a: int
    factor_of: tuple[int, ...]

    def factor_degree(self, v: int, i: int) -> int:
        return sum(1 for e in self.graph.incident(v) if self.factor_of[e] == i)

    def factors(self) -> list[SimpleGraph]:
        return [SimpleGraph(self.graph.n, [e for e, f in zip(self.graph.edges, self.factor_of)
                                           if f == i]) for i in range(self.x)]


@dataclass
class VerificationReport:
    ok: bool
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_factorization(G: SimpleGraph, f: Factorization) -> VerificationReport:
    """Check partition, spanning-ness and factor degrees; lists every violation."""
    problems = []
    if f.graph != G:
        problems.append("factorization refers to a different graph")
        return VerificationReport(False, problems)
    if len(f.factor_of) != G.m:
        problems.append(f"{len(f.factor_of)} factor labels for {G.m} edges")
        return VerificationReport(False, problems)
    for e, i in enumerate(f.factor_of):
        if not 0 <= i < f.x:
            problems.append(f"edge {G.edges[e]} has factor index {i} outside [0, {f.x})")
    lo, hi = f.r, f.r + f.a
    for v in G.vertices():
        counts = [0] * f.x
        for e in G.incident(v):
            if 0 <= f.factor_of[e] < f.x:
                counts[f.factor_of[e]] += 1
        for i, k in enumerate(counts):
            if not lo <= k <= hi:
                problems.append(f"vertex {v} has degree {k} in factor {i}, outside [{lo}, {hi}]")
    return VerificationReport(not problems, problems)


def _checked(G, f: Factorization) -> Factorization:
    report = verify_factorization(G, f)
    if not report:
        raise ConstructionFailedError("; ".join(report.violations[:5]))
    return f


@dataclass(frozen=True)
class AugmentedGraph:
    base: SimpleGraph
    pendants: dict
    graph: SimpleGraph


def augment_pendants(G: SimpleGraph, x: int) -> AugmentedGraph:
    """Attach a new degree-1 vertex to each vertex whose degree x divides."""
    if x <= 1:
        raise InvalidFactorCountError(f"pendant augmentation needs x >= 2, got {x}")
    pendants = {}
    extra = []
    nxt = G.n
    for v in G.vertices():
        if G.degree(v) % x == 0:
            pendants[v] = nxt
            extra.append((v, nxt))
            nxt += 1
    return AugmentedGraph(G, pendants, SimpleGraph(nxt, list(G.edges) + extra))


def is_interior(G: SimpleGraph, r: int, a: int, x: int) -> bool:
    prof = degree_profile(G)
    return r * x < prof.d_min and prof.d_max < (r + a) * x


def factorize_interior(G: SimpleGraph, r: int, a: int, x: int, seed: int = 0,
                       exact_cap: int = EXACT_CAP) -> Factorization:
    if x < 1 or not is_interior(G, r, a, x):
        prof = degree_profile(G)
        raise XOutOfRangeError(
            f"x={x} is not strictly between {prof.d_max}/{r + a} and {prof.d_min}/{r}")
    if x == 1:
        return _checked(G, Factorization(G, 1, r, a, (0,) * G.m))
    aug = augment_pendants(G, x)
    try:
        col = equitable_colour_simple(aug.graph, x, seed=seed)
    except BalancingFailedError as exc:
        if G.m <= exact_cap:
            found = factorize_exact(G, r, a, x, cap=exact_cap)
            if found is not None:
                return found
        raise ConstructionFailedError(f"balancing failed for x={x}: {exc}") from exc
    # pendant edges interleave with base edges in canonical order
    labels = tuple(col.colour_of[aug.graph.edge_index(u, v)] for u, v in G.edges)
    return _checked(G, Factorization(G, x, r, a, labels))


def _trivially_impossible(G: SimpleGraph, r: int, a: int, x: int) -> bool:
    if G.n == 0:
        return False
    prof = degree_profile(G)
    return x * r > prof.d_min or x * (r + a) < prof.d_max


def _search_order(G: SimpleGraph) -> list[int]:
    degs = G.degrees()
    return sorted(range(G.m), key=lambda e: (-max(degs[G.edges[e][0]], degs[G.edges[e][1]]),
                                             G.edges[e]))


def factorize_exact(G: SimpleGraph, r: int, a: int, x: int,
                    cap: int = EXACT_CAP) -> Factorization | None:
    """Complete backtracking search; ``None`` means no factorization exists.

    Counts violating the averaging bounds are rejected before the size cap is
    consulted, since no search is needed for them.
    """
    if x < 1:
        raise InvalidFactorCountError(f"x must be positive, got {x}")
    if _trivially_impossible(G, r, a, x):
        return None
    if G.m > cap:
        raise TooLargeError(f"{G.m} edges exceeds the exact-search cap of {cap}")
    hi = r + a
    order = _search_order(G)
    ends = [G.edges[e] for e in order]
    left = G.degrees()  # unassigned incident edges
    cnt = [[0] * x for _ in G.vertices()]
    assign = [-1] * G.m

    def room(v):
        # edges still owed to factors below r must fit into what is left
        need = sum(r - c for c in cnt[v] if c < r)
        return need <= left[v]

    def go(k, used):
        if k == len(order):
            return True
        u, v = ends[k]
        left[u] -= 1
        left[v] -= 1
        limit = min(used + 1, x)
        for i in range(limit):
            cu, cv = cnt[u], cnt[v]
            if cu[i] >= hi or cv[i] >= hi:
                continue
            cu[i] += 1
            cv[i] += 1
            if room(u) and room(v):
                assign[order[k]] = i
                if go(k + 1, max(used, i + 1)):
                    return True
            cu[i] -= 1
            cv[i] -= 1
        left[u] += 1
        left[v] += 1
        return False

    if not go(0, 0):
        return None
    return _checked(G, Factorization(G, x, r, a, tuple(assign)))


def factorize(G: SimpleGraph, r: int, a: int, x: int, seed: int = 0,
              exact_cap: int = EXACT_CAP) -> Factorization | None:
    """Dispatch on the graph's actual degrees; ``None`` means none exists."""
    if r < 1 or a < 0 or x < 1:
        raise InvalidFactorCountError(f"need r >= 1, a >= 0, x >= 1; got r={r}, a={a}, x={x}")
    if G.n and is_interior(G, r, a, x):
        return factorize_interior(G, r, a, x, seed=seed, exact_cap=exact_cap)
    return factorize_exact(G, r, a, x, cap=exact_cap)


def write_factorization(f: Factorization) -> str:
    rows = [f"{f.x} {f.r} {f.a}"]
    rows.extend(f"{u} {v} {i}" for (u, v), i in zip(f.graph.edges, f.factor_of))
    return "\n".join(rows) + "\n"


def read_factorization(text: str, G: SimpleGraph) -> Factorization:
    """Parse the ``x r a`` / ``u v factor`` format against graph ``G``.

    Structural problems (unknown edge, missing edge, duplicates) raise
    :class:`ParseError`; degree violations are left to the verifier.
    """
    rows = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)
            if ln.strip() and not ln.strip().startswith("#")]
    if not rows:
        raise ParseError("empty factorization", 1)
    lineno, header = rows[0]
    try:
        x, r, a = (int(tok) for tok in header.split())
    except ValueError:
        raise ParseError(f"header must be 'x r a', got {header!r}", lineno) from None
    labels = [-1] * G.m
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v factor', got {line!r}", lineno)
        try:
            u, v, i = (int(tok) for tok in parts)
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if not (0 <= u < G.n and 0 <= v < G.n) or u == v or not G.has_edge(u, v):
            raise ParseError(f"({u}, {v}) is not an edge of the graph", lineno)
        e = G.edge_index(u, v)
        if labels[e] != -1:
            raise ParseError(f"edge ({u}, {v}) listed twice", lineno)
        labels[e] = i
    if -1 in labels:
        missing = G.edges[labels.index(-1)]
        raise ParseError(f"edge {missing} has no factor", len(rows))
    return Factorization(G, x, r, a, tuple(labels))

"""Graphs that admit no (r, r+a)-factorization with a given number of factors.

Two kinds of construction:

* regular graphs at an excluded endpoint of the feasible interval (odd-order
  complete graphs, and two near-complete blocks joined by a bridge);
* bidegreed boundary graphs with ``x r = d`` and ``x (r+a) = d + s``, built
  from parts ``M`` and ``N`` joined completely except along a labelled
  matching, plus a small graph ``H`` inside one part that fixes the degrees.

Boundary graphs carry a counting certificate: the factor degree bounds force
the sum of factor sizes strictly above the actual edge count.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .errors import CertificateFailedError, InfeasibleParamsError, InvalidParamsError
from .graph import SimpleGraph, complete_graph


def _near_complete_block(k: int) -> tuple[list[tuple[int, int]], int]:
    """K_{k+2} minus a P_3 and a perfect matching of the other k-1 vertices.

    ``k`` must be odd.  Returns the edges and the single vertex of degree
    ``k - 1``; every other vertex has degree ``k``.
    """
    n = k + 2
    edges = {(u, v) for u in range(n) for v in range(u + 1, n)}
    # P_3 = 1 - 0 - 2, centred at vertex 0
    edges -= {(0, 1), (0, 2)}
    rest = list(range(3, n))
    edges -= {(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)}
    return sorted(edges), 0


def _bridged_double(k: int) -> SimpleGraph:
    block, low = _near_complete_block(k)
    n = k + 2
    edges = block + [(u + n, v + n) for u, v in block] + [(low, low + n)]
    return SimpleGraph(2 * n, edges)


def gen_lemma14_regular(d: int, r: int) -> SimpleGraph:
    """d-regular graph with no factorization into x = d/r factors, r odd.

    Each factor would have to be r-regular.  For odd d this is the bridged
    double of a near-complete block (every r-factor would need the bridge);
    for even d it is K_{d+1}, which has odd order.
    """
    if r < 1 or r % 2 == 0:
        raise InvalidParamsError(f"r must be odd and positive, got {r}")
    if d % r or d // r < 2:
        raise InvalidParamsError(f"need r | d with d/r >= 2, got d={d}, r={r}")
    return _bridged_double(d) if d % 2 else complete_graph(d + 1)


def gen_lemma14_topend(dps: int, r: int, a: int) -> SimpleGraph:
    """dps-regular graph with no factorization into x = dps/(r+a) factors.

    Needs r + a odd: each factor would have to be (r+a)-regular.  Odd ``dps``
    gives the bridged double; even ``dps`` gives K_{dps+1}.
    """
    top = r + a
    if r < 1 or a < 0 or top % 2 == 0:
        raise InvalidParamsError(f"r + a must be odd, got r={r}, a={a}")
    if dps % top or dps // top < 2:
        raise InvalidParamsError(f"need (r+a) | dps with quotient >= 2, got dps={dps}")
    return _bridged_double(dps) if dps % 2 else complete_graph(dps + 1)


@dataclass(frozen=True)
class CountingCertificate:
    total_edges: int
    per_factor_lower_bound: int
    aggregate_lower_bound: int
    contradiction_margin: int

    def as_dict(self) -> dict:
        return {"total_edges": self.total_edges,
                "per_factor_lower_bound": self.per_factor_lower_bound,
                "aggregate_lower_bound": self.aggregate_lower_bound,
                "contradiction_margin": self.contradiction_margin}


@dataclass(frozen=True)
class BoundaryInstance:
    graph: SimpleGraph
    r: int
    s: int
    a: int
    d: int
    x: int
    M: tuple[int, ...]
    N: tuple[int, ...]
    family: str
    expected_degrees: tuple[int, ...]
    certificate: CountingCertificate | None = None
    flags: tuple[str, ...] = field(default=())

    def sidecar(self) -> dict:
        return {
            "family": self.family, "r": self.r, "s": self.s, "a": self.a, "d": self.d, "x": self.x,
            "M_size": len(self.M), "N_size": len(self.N), "flags": list(self.flags),
            "certificate": None if self.certificate is None else self.certificate.as_dict(),
        }


def _h_edges(vertices, k) -> list[tuple[int, int]]:
    """First k pairs in colex order, so H stays inside a small prefix."""
    out = []
    for j in range(1, len(vertices)):
        for i in range(j):
            if len(out) == k:
                return out
            out.append((vertices[i], vertices[j]))
    if len(out) < k:
        raise InfeasibleParamsError(f"cannot fit {k} edges on {len(vertices)} vertices")
    return out


def _label_owners(h_edges, n_labels) -> list[int]:
    """Vertex i of H takes the next d_H(i) labels, in vertex order."""
    deg: dict[int, int] = {}
    for u, v in h_edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    owners = [w for w in sorted(deg) for _ in range(deg[w])]
    assert len(owners) == n_labels
    return owners


def _check_boundary(r, s, a, x):
    if x < 2:
        raise InvalidParamsError(f"boundary graphs need x >= 2, got {x}")
    if s != x * a:
        raise InvalidParamsError(f"boundary identity needs s = x*a = {x * a}, got s={s}")


def gen_boundary_EO(r: int, s: int, a: int, x: int) -> BoundaryInstance:
    """Boundary graph for r even, a odd; |M| = xr+1, |N| = x(r+a)."""
    if r < 2 or r % 2 or a < 1 or a % 2 == 0:
        raise InvalidParamsError(f"need r >= 2 even and a odd, got r={r}, a={a}")
    _check_boundary(r, s, a, x)
    m_size, n_size = x * r + 1, x * (r + a)
    M = tuple(range(m_size))
    N = tuple(range(m_size, m_size + n_size))
    odd = x % 2 == 1
    h_size = (n_size - 1) // 2 if odd else n_size // 2
    if math.comb(m_size, 2) < h_size:
        raise InfeasibleParamsError(f"H needs {h_size} edges but M has only {m_size} vertices")
    h = _h_edges(M, h_size)
    owners = _label_owners(h, 2 * h_size)
    edges = list(h)
    for j, w in enumerate(N):
        skip = owners[j] if j < len(owners) else None  # last N vertex is unlabelled when x is odd
        edges.extend((v, w) for v in M if v != skip)
    G = SimpleGraph(m_size + n_size, edges)
    expected = [x * (r + a)] * m_size + [x * r] * n_size
    if odd:
        expected[-1] = x * r + 1
    inst = BoundaryInstance(G, r, s, a, x * r, x, M, N, "EO", tuple(expected))
    _validate_spectrum(inst)
    return _with_certificate(inst)


def gen_boundary_OO(r: int, s: int, a: int, x: int) -> BoundaryInstance:
    """Boundary graph for r, a odd; |M| = xr, |N| = x(r+a)+1."""
    if r < 1 or r % 2 == 0 or a < 1 or a % 2 == 0:
        raise InvalidParamsError(f"need r and a odd, got r={r}, a={a}")
    _check_boundary(r, s, a, x)
    flags = ()
    if a < 3:
        warnings.warn("boundary construction for r, a odd is stated for a >= 3; "
                      "building the a = 1 variant", stacklevel=2)
        flags = ("a_below_stated_range",)
    m_size, n_size = x * r, x * (r + a) + 1
    M = tuple(range(m_size))
    N = tuple(range(m_size, m_size + n_size))
    odd = x % 2 == 1
    n_labels = x * r + 1 if odd else x * r
    h_size = n_labels // 2
    if math.comb(n_size, 2) < h_size:
        raise InfeasibleParamsError(f"H needs {h_size} edges but N has only {n_size} vertices")
    h = _h_edges(N, h_size)
    owners = _label_owners(h, n_labels)
    if odd and owners[-1] == owners[-2]:
        # the doubly labelled M-vertex must miss two distinct N-vertices
        k = next(i for i, w in enumerate(owners) if w != owners[-1])
        owners[k], owners[-1] = owners[-1], owners[k]
    labels_of = [[j] for j in range(m_size)]
    if odd:
        labels_of[-1].append(m_size)
    edges = list(h)
    for v, labs in zip(M, labels_of):
        skip = {owners[j] for j in labs}
        edges.extend((v, w) for w in N if w not in skip)
    G = SimpleGraph(m_size + n_size, edges)
    expected = [x * (r + a)] * m_size + [x * r] * n_size
    if odd:
        expected[m_size - 1] = x * (r + a) - 1
    inst = BoundaryInstance(G, r, s, a, x * r, x, M, N, "OO", tuple(expected), flags=flags)
    _validate_spectrum(inst)
    return _with_certificate(inst)


def _validate_spectrum(inst: BoundaryInstance) -> None:
    actual = inst.graph.degrees()
    if tuple(actual) != inst.expected_degrees:
        bad = next(v for v, (p, q) in enumerate(zip(actual, inst.expected_degrees)) if p != q)
        raise CertificateFailedError(
            f"degree spectrum mismatch at vertex {bad}: {actual[bad]} != {inst.expected_degrees[bad]}")


def _with_certificate(inst: BoundaryInstance) -> BoundaryInstance:
    cert = counting_certificate(inst)
    return BoundaryInstance(**{**inst.__dict__, "certificate": cert})


def _min_odd_factor_sums(x: int, base: int, extra: int, cap: int) -> int | None:
    """Fewest factors with odd degree sum.

    Each factor's degree sum is ``base`` plus its share of ``extra`` surplus
    units, at most ``cap`` per factor.  ``None`` if the surplus cannot be
    placed at all.
    """
    odd_max = cap if cap % 2 else cap - 1
    even_max = cap if cap % 2 == 0 else cap - 1
    best = None
    for m in range(x + 1):  # factors receiving an odd share
        if (extra - m) % 2:
            continue
        if m and odd_max < 1:
            continue
        if not m <= extra <= m * odd_max + (x - m) * even_max:
            continue
        odd_sums = m if base % 2 == 0 else x - m
        best = odd_sums if best is None else min(best, odd_sums)
    return best


def counting_certificate(inst: BoundaryInstance) -> CountingCertificate:
    """Handshake-parity proof that no factorization into x factors exists.

    Recomputed from the graph: every vertex v must carry at least
    ``lo(v) = max(r, d(v) - (x-1)(r+a))`` edges in each factor, and the
    surplus ``d(v) - x lo(v)`` is spread with at most ``hi(v) - lo(v)`` per
    factor.  Factors whose degree sum comes out odd need half an edge more
    than available, so the aggregate bound exceeds ``|E|``.
    """
    _validate_spectrum(inst)
    G, r, a, x = inst.graph, inst.r, inst.a, inst.x
    base = extra = cap = 0
    for k in G.degrees():
        lo = max(r, k - (x - 1) * (r + a))
        hi = min(r + a, k - (x - 1) * r)
        if lo > hi:
            raise CertificateFailedError(f"degree {k} admits no split into {x} factors")
        base += lo
        extra += k - x * lo
        cap += hi - lo
    odd = _min_odd_factor_sums(x, base, extra, cap)
    if odd is None:
        raise CertificateFailedError("surplus degrees cannot be distributed")
    total = G.m
    aggregate = (x * base + extra + odd) // 2
    cert = CountingCertificate(total, -(-base // 2), aggregate, aggregate - total)
    if cert.contradiction_margin <= 0:
        raise CertificateFailedError(
            f"no contradiction: aggregate bound {aggregate} <= {total} edges")
    return cert

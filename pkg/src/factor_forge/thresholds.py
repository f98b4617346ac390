"""Threshold numbers for (r, r+a)-factorizations and feasible factor counts.

All arithmetic here is exact: integer floor/ceiling division and
:class:`fractions.Fraction` for interval endpoints.  Argument order for every
formula is ``(r, s, a, t)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import OutOfScopeError, SearchExhaustedError

INFINITY = math.inf


def ceil_div(p: int, q: int) -> int:
    if q == 0:
        raise ZeroDivisionError("ceiling division by zero")
    return -(-p // q)


@dataclass(frozen=True)
class ThresholdParams:
    r: int
    s: int
    a: int
    t: int = 1

    def __post_init__(self):
        if self.r < 0 or self.s < 0 or self.a < 0 or self.t < 1:
            raise OutOfScopeError(f"invalid parameters {self}")

    @property
    def parity(self) -> str:
        """``EE``/``OE``/``EO``/``OO``: parity of r, then parity of a."""
        return ("E" if self.r % 2 == 0 else "O") + ("E" if self.a % 2 == 0 else "O")

    def as_dict(self) -> dict:
        return {"r": self.r, "s": self.s, "a": self.a, "t": self.t}


def _params(p, *rest) -> ThresholdParams:
    if isinstance(p, ThresholdParams):
        return p
    return ThresholdParams(p, *rest)


def big_n(p, *rest) -> int:
    """``r * ceil((r t + s - 1) / a) + (t - 1) r``."""
    p = _params(p, *rest)
    if p.a == 0:
        raise ZeroDivisionError("N(r, s, a, t) is undefined for a = 0")
    return p.r * ceil_div(p.r * p.t + p.s - 1, p.a) + (p.t - 1) * p.r


def beta(p, *rest) -> int:
    """Bipartite threshold; equal to :func:`big_n`."""
    return big_n(p, *rest)


def sigma(p, *rest) -> int:
    """Simple-graph threshold number, one closed form per parity class."""
    p = _params(p, *rest)
    r, s, a, t = p.r, p.s, p.a, p.t
    if r == 0 or a == 0:
        raise OutOfScopeError("sigma is evaluated here only for r >= 1 and a >= 1")
    tail = (t - 1) * r
    parity = p.parity
    if parity == "OE":
        if t == 1 and a >= r + s + 1:
            return r
        return r * ceil_div(t * r + s + 1, a) + tail + 1
    if parity == "EE":
        return r * ceil_div(t * r + s - 1, a) + tail
    if parity == "EO":
        return r * ceil_div(t * r + s, a) + tail
    # OO; the published display has "=" where "+" is meant.
    if t == 1 and a >= r + s:
        return r
    return r * ceil_div(t * r + s, a) + tail + 1


def sigma_a1_formula(p, *rest) -> int:
    """The older closed form for a = 1 (kept for cross-checking only)."""
    p = _params(p, *rest)
    r, s, t = p.r, p.s, p.t
    if p.a != 1 or r < 1:
        raise OutOfScopeError("the a = 1 formula needs a = 1 and r >= 1")
    base = t * r * r + t * r + s * r
    if s >= 2:
        return base + 1
    return base - r + (r % 2)


def sigma_regular_a1(r: int) -> int:
    """sigma(r, 0, 1, 1) for r >= 3: r^2 when r is even, r^2 + 1 when odd."""
    if r < 3:
        raise OutOfScopeError("stated for r >= 3")
    return r * r + (r % 2)


def sigma_upper_formula(p, *rest) -> int:
    """``r*ceil((tr+s+1)/a) + (t-1)r + 1`` evaluated without its a >= 2 guard."""
    p = _params(p, *rest)
    if p.a == 0:
        raise ZeroDivisionError("the upper bound is undefined for a = 0")
    return p.r * ceil_div(p.t * p.r + p.s + 1, p.a) + (p.t - 1) * p.r + 1


def sigma_bounds(p, *rest) -> tuple[int, int]:
    """``(N, r*ceil((tr+s+1)/a) + (t-1)r + 1)``; valid for a >= 2."""
    p = _params(p, *rest)
    if p.r < 1 or p.a < 2:
        raise OutOfScopeError("the upper bound is stated for r >= 1, a >= 2")
    return big_n(p), sigma_upper_formula(p)


def _congruent(value: int, residue: int, modulus: int) -> bool:
    return (value - residue) % modulus == 0


def pi_status(p, *rest) -> tuple[int | float, str]:
    """Pseudograph threshold and whether the value is proved or conjectured.

    Returns ``(value, status)`` with ``status`` in ``{"proved",
    "conjectured"}``; ``value`` is an int or :data:`INFINITY`.
    """
    p = _params(p, *rest)
    r, s, a, t = p.r, p.s, p.a, p.t
    if r < 1:
        raise OutOfScopeError("pi needs r >= 1")
    if a == 0:
        return INFINITY, "proved"
    if a == 1:
        if r == 2 and s == 0 and t == 1:
            return 2, "proved"
        if r == 1 and s == 0 and t == 1:
            return 1, "proved"
        return INFINITY, "proved"
    if a == 2 and r % 2 == 1:
        if s > 1 or t > 1:
            return INFINITY, "conjectured"
        if r == 1:
            return 1, "conjectured"
        raise OutOfScopeError(f"no pseudograph value is available for {p}")
    parity = p.parity
    if parity == "EE":
        return big_n(r, s, a, t), "proved"
    if parity == "OO":
        base = big_n(r + 1, s, a - 1, t)
        if _congruent((r + 1) * t + s, 2, a - 1):
            return base - (r + 1) - 1, "proved"
        return base - 1, "proved"
    if parity == "OE":
        base = big_n(r + 1, s, a - 2, t)
        v = (r + 1) * t + s
        if _congruent(v, 2, a - 2) or _congruent(v, 3, a - 2):
            return base - (r + 1) - 1, "conjectured"
        return base - 1, "conjectured"
    base = big_n(r, s, a - 1, t)
    if _congruent(r * t + s, 2, a - 1):
        return base - r, "proved"
    return base, "proved"


def pi(p, *rest) -> int | float:
    return pi_status(p, *rest)[0]


def mu_bounds(r: int) -> tuple[int, int]:
    """Bounds on the multigraph threshold mu(r, 0, 1, 1)."""
    if r < 1:
        raise OutOfScopeError("mu bounds need r >= 1")
    if r % 2:
        return r * r + 1, r * r + 1
    half = r * r // 2
    return 3 * half - 2 * r - 1, 3 * half + 3 * r + 1


@dataclass(frozen=True)
class FeasibleSet:
    lower: Fraction
    upper: Fraction
    lower_open: bool
    upper_open: bool
    members: tuple[int, ...]
    side_condition_met: bool

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def interval_contains(self, x: int) -> bool:
        """Direct rational test of ``x`` against the interval (no side rule)."""
        lo_ok = self.lower < x if self.lower_open else self.lower <= x
        hi_ok = x < self.upper if self.upper_open else x <= self.upper
        return lo_ok and hi_ok


# (lower_open, upper_open) for each parity class of (r, a).
OPENNESS = {"EE": (False, False), "OE": (True, True), "EO": (True, False), "OO": (False, True)}


def _side_condition(parity: str, d: int, s: int, r: int, a: int) -> bool:
    if parity == "EE":
        return True
    if parity == "OE":
        return d > max(r, r + s - a)
    if parity == "EO":
        return d > r + a - s
    return d > r


def _interval_bounds(d, s, r, a, lower_open, upper_open) -> tuple[int, int]:
    top, bot = d + s, r + a
    lo = top // bot + 1 if lower_open else ceil_div(top, bot)
    hi = ceil_div(d, r) - 1 if upper_open else d // r
    return lo, hi


def feasible_x_set(d: int, s: int, r: int, a: int) -> FeasibleSet:
    """Factor counts x for which every (d, d+s)-graph is (r, r+a)-factorable."""
    if r < 1:
        raise OutOfScopeError("feasible counts need r >= 1")
    if d < 1 or s < 0 or a < 0:
        raise OutOfScopeError(f"invalid (d, s, a) = ({d}, {s}, {a})")
    parity = ThresholdParams(r, s, a).parity
    lower_open, upper_open = OPENNESS[parity]
    lo, hi = _interval_bounds(d, s, r, a, lower_open, upper_open)
    members = set(range(max(lo, 1), hi + 1))
    met = _side_condition(parity, d, s, r, a)
    if not met and r <= d and d + s <= r + a:
        # the graph itself is a single factor
        members.add(1)
    return FeasibleSet(Fraction(d + s, r + a), Fraction(d, r), lower_open, upper_open,
                       tuple(sorted(members)), met)


def feasible_count(d: int, s: int, r: int, a: int) -> int:
    return len(feasible_x_set(d, s, r, a).members)


def sigma_by_search(p, d_cap: int) -> int:
    """Least d0 such that every d in [d0, d_cap] has at least t feasible counts.

    Scans downward from ``d_cap``.  Correctness relies on the caller choosing
    ``d_cap`` well above the threshold (``sigma + r + a`` or more).
    """
    p = _params(p)
    if p.r < 1:
        raise OutOfScopeError("search needs r >= 1")
    if d_cap < 1 or feasible_count(d_cap, p.s, p.r, p.a) < p.t:
        raise SearchExhaustedError(f"fewer than {p.t} feasible counts at d_cap={d_cap}")
    d0 = d_cap
    while d0 > 1 and feasible_count(d0 - 1, p.s, p.r, p.a) >= p.t:
        d0 -= 1
    return d0


@dataclass
class CrossCheckReport:
    params: ThresholdParams
    values: dict = field(default_factory=dict)
    agreements: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def discrepancy(self, a: str, b: str):
        for pair, diff in self.discrepancies:
            if set(pair) == {a, b}:
                return diff if pair == (a, b) else -diff
        return None

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, tuple):
                return [enc(u) for u in v]
            if v == INFINITY:
                return "∞"
            return v
        return {
            "params": self.params.as_dict(),
            "values": {k: enc(v) for k, v in self.values.items()},
            "agreements": [list(pair) for pair in self.agreements],
            "discrepancies": [{"pair": list(pair), "difference": diff}
                              for pair, diff in self.discrepancies],
            "violations": list(self.violations),
            "notes": list(self.notes),
        }


# Formulas that each claim to equal sigma exactly.
_SIGMA_CLAIMS = ("sigma", "sigma_a1", "sigma_regular", "sigma_even_even", "sigma_search")


def crosscheck(p, *rest, headroom: int | None = None) -> CrossCheckReport:
    """Evaluate every applicable formula and compare; never reconciles."""
    p = _params(p, *rest)
    if p.r < 1 or p.a < 1:
        raise OutOfScopeError("crosscheck needs r >= 1 and a >= 1")
    rep = CrossCheckReport(p)
    vals = rep.values
    vals["N"] = big_n(p)
    vals["beta"] = beta(p)
    vals["sigma"] = sigma(p)
    if p.a == 1:
        vals["sigma_a1"] = sigma_a1_formula(p)
    if p.a == 1 and p.s == 0 and p.t == 1 and p.r >= 3:
        vals["sigma_regular"] = sigma_regular_a1(p.r)
    if p.parity == "EE":
        vals["sigma_even_even"] = big_n(p)
    if p.a >= 2:
        vals["sigma_bounds"] = sigma_bounds(p)
    try:
        value, status = pi_status(p)
        vals["pi"] = value
        if status != "proved":
            rep.notes.append("pi: conjectured value")
    except OutOfScopeError:
        rep.notes.append("pi: no value available")
    if p.s == 0 and p.a == 1 and p.t == 1:
        vals["mu_bounds"] = mu_bounds(p.r)

    claims = [k for k in _SIGMA_CLAIMS if k in vals]
    ceiling = max(vals[k] for k in claims)
    if headroom is None:
        headroom = 3 * (p.r + p.a)
    try:
        vals["sigma_search"] = sigma_by_search(p, ceiling + headroom)
        claims.append("sigma_search")
    except SearchExhaustedError:
        rep.notes.append("sigma_search: exhausted")

    for x, y in combinations(claims, 2):
        if vals[x] == vals[y]:
            rep.agreements.append((x, y))
        else:
            rep.discrepancies.append(((x, y), vals[x] - vals[y]))

    def check(name, ok):
        if not ok:
            rep.violations.append(name)

    for k in claims:
        check(f"N <= {k}", vals["N"] <= vals[k])
        if "sigma_bounds" in vals:
            check(f"{k} <= upper bound", vals[k] <= vals["sigma_bounds"][1])
        if "pi" in vals:
            check(f"{k} <= pi", vals[k] <= vals["pi"])
        if "mu_bounds" in vals:
            check(f"{k} <= mu upper bound", vals[k] <= vals["mu_bounds"][1])
    return rep

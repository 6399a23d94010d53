"""Sidorenko checks and certified lower bounds on the Sidorenko exponent.

For a host ``H`` with ``0 < t_F(H)`` and ``0 < t_K(H) < 1`` (``K`` the single
r-edge) the host exponent is ``s_H = ln t_F(H) / ln t_K(H)``, and
``s(F) >= s_H``. A rational ``p/q`` is certified as a lower bound when
``t_F(H)^q <= t_K(H)^p`` holds exactly, which is equivalent to
``s_H >= p/q``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .hom import complete_density, count_homomorphisms, density
from .hypergraph import Hypergraph, all_r_sets, nonisomorphic

__all__ = [
    "SidorenkoCheck",
    "sidorenko_check",
    "ExponentWitness",
    "exponent_ratio",
    "log_ratio",
    "SearchReport",
    "exponent_lower_search",
    "AmplifyRow",
    "AmplifyReport",
    "tensor_amplify",
]


def _ln(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


@dataclass(frozen=True)
class SidorenkoCheck:
    holds: bool
    t_F: Fraction
    t_K: Fraction
    rhs: Fraction  # t_K ** e(F)

    @property
    def margin(self) -> Fraction:
        return self.t_F - self.rhs


def sidorenko_check(F: Hypergraph, H: Hypergraph) -> SidorenkoCheck:
    """Exact test of ``t_F(H) >= t_K(H)^{e(F)}``."""
    if F.e == 0:
        raise ValueError("pattern has no edges")
    tF = density(F, H).value
    tK = complete_density(H)
    rhs = tK ** F.e
    return SidorenkoCheck(tF >= rhs, tF, tK, rhs)


def log_ratio(tF: Fraction, tK: Fraction) -> float:
    if tF <= 0 or not 0 < tK < 1:
        raise ValueError("ratio undefined: need t_F > 0 and 0 < t_K < 1")
    return _ln(tF) / _ln(tK)


@dataclass(frozen=True)
class ExponentWitness:
    pattern: Hypergraph
    host: Hypergraph
    p: int
    q: int
    t_F: Fraction
    t_K: Fraction
    ratio: float
    exact: bool  # t_F == t_K^{p/q}, i.e. s_H == p/q

    @property
    def s(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def lhs(self) -> Fraction:
        return self.t_F ** self.q

    @property
    def rhs(self) -> Fraction:
        return self.t_K ** self.p

    def verify(self) -> bool:
        """Recompute densities from scratch and re-check the certificate."""
        tF = density(self.pattern, self.host).value
        tK = complete_density(self.host)
        return tF == self.t_F and tK == self.t_K and tF ** self.q <= tK ** self.p


def _certifies(tF: Fraction, tK: Fraction, p: int, q: int) -> bool:
    return tF ** q <= tK ** p


def exponent_ratio(F: Hypergraph, H: Hypergraph, max_den: int = 10, *,
                   densities: tuple[Fraction, Fraction] | None = None) -> ExponentWitness:
    """Host exponent of ``F`` at ``H`` with the largest certified ``p/q``,
    ``q <= max_den``."""
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    tF, tK = densities if densities is not None else (density(F, H).value, complete_density(H))
    if tF == 0 or tK == 0:
        raise ValueError("zero density: the host exponent is undefined")
    ratio = log_ratio(tF, tK)
    best: tuple[Fraction, int, int] | None = None
    for q in range(1, max_den + 1):
        p = math.floor(q * ratio) + 1
        while p > 0 and not _certifies(tF, tK, p, q):
            p -= 1
        if p > 0 and (best is None or Fraction(p, q) > best[0]):
            best = (Fraction(p, q), p, q)
    if best is None:
        p, q = 0, 1
    else:
        _, p, q = best
        g = math.gcd(p, q)
        p, q = p // g, q // g
    wit = ExponentWitness(F, H, p, q, tF, tK, ratio, tF ** q == tK ** p)
    if p and not _certifies(wit.t_F, wit.t_K, wit.p, wit.q):
        raise AssertionError("certificate failed re-check")
    return wit


@dataclass
class SearchReport:
    best: ExponentWitness
    evaluated: int
    pool_sizes: dict[str, int] = field(default_factory=dict)
    baseline: Fraction | None = None  # best certified value on complete hosts
    seed: int = 0


def _key(w: ExponentWitness) -> tuple:
    # larger certified value first, then larger float ratio, then smaller host bytes
    return (w.s, w.ratio, tuple(-x for e in w.host.edges for x in e), -w.host.n)


def exponent_lower_search(F: Hypergraph, budget: int = 2000, seed: int = 0, *,
                          max_den: int = 10, complete_max: int = 9,
                          exhaustive: bool = True, anneal_n: int | None = None,
                          anneal_steps: int = 200, restarts: int = 3,
                          tensor_closure: bool = True, tensor_cap: int = 64) -> SearchReport:
    """Best certified ``s(F) >= p/q`` over a host pool.

    The pool holds complete hosts ``K_n^{(r)}``, every r-graph on few
    vertices (r = 2: n <= 6, r = 3: n <= 5), hosts from seeded edge-flip
    annealing, and tensor products of the best few. ``budget`` caps the
    number of host evaluations.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if F.e == 0:
        raise ValueError("pattern has no edges")
    r = F.r
    rng = random.Random(seed)
    seen: dict[tuple, ExponentWitness | None] = {}
    sizes: dict[str, int] = {}
    evaluated = 0

    def consider(H: Hypergraph, tag: str) -> ExponentWitness | None:
        nonlocal evaluated
        key = (H.n, H.edges)
        if key in seen:
            return seen[key]
        if evaluated >= budget:
            return None
        evaluated += 1
        sizes[tag] = sizes.get(tag, 0) + 1
        tK = complete_density(H)
        w = None
        if 0 < tK < 1:
            tF = Fraction(count_homomorphisms(F, H), H.n ** F.n)
            if tF:
                w = exponent_ratio(F, H, max_den, densities=(tF, tK))
        seen[key] = w
        return w

    pool: list[ExponentWitness] = []

    def add(H: Hypergraph, tag: str) -> None:
        w = consider(H, tag)
        if w is not None:
            pool.append(w)

    from .constructions import complete, tensor_product

    for n in range(r + 1, complete_max + 1):
        add(complete(n, r), "complete")
    baseline = max((w.s for w in pool), default=None)
    if exhaustive:
        cap = {2: 6, 3: 5}.get(r, r + 1)
        for n in range(r + 1, cap + 1):
            for H in nonisomorphic(r, n):
                if H.e:
                    add(H, "exhaustive")
    if anneal_n is None:
        anneal_n = {2: 8, 3: 7}.get(r, r + 2)
    for _ in range(restarts):
        if evaluated >= budget:
            break
        n = rng.randint(r + 1, anneal_n)
        slots = all_r_sets(n, r)
        edges = {e for e in slots if rng.random() < 0.6}
        cur = consider(Hypergraph(r, n, tuple(edges)), "anneal")
        cur_val = cur.ratio if cur else -math.inf
        if cur:
            pool.append(cur)
        for step in range(anneal_steps):
            if evaluated >= budget:
                break
            temp = 0.5 * (1 - step / anneal_steps) + 1e-3
            e = rng.choice(slots)
            trial = edges ^ {e}
            if not trial:
                continue
            w = consider(Hypergraph(r, n, tuple(trial)), "anneal")
            val = w.ratio if w else -math.inf
            if val >= cur_val or (val > -math.inf and rng.random() < math.exp((val - cur_val) / temp)):
                edges, cur_val = trial, val
                if w:
                    pool.append(w)
    if tensor_closure and pool:
        top = sorted(pool, key=_key, reverse=True)[:4]
        for a, b in combinations(top, 2):
            if a.host.n * b.host.n <= tensor_cap:
                add(tensor_product(a.host, b.host), "tensor")
    if not pool:
        raise ValueError("empty search space: no host gave positive densities")
    best = max(pool, key=_key)
    if not best.verify():
        raise AssertionError("best witness failed independent re-check")
    return SearchReport(best, evaluated, sizes, baseline, seed)


@dataclass(frozen=True)
class AmplifyRow:
    k: int
    t_F_power: Fraction  # t_F(H)^k = t_F(H^{(x)k})
    t_K_power: Fraction  # t_K(H)^k
    slack: Fraction | None  # (t_F / t_K^s)^k when s is an integer
    claim_holds: bool  # t_F^k >= c * t_K^{s k}
    materialized: bool


@dataclass
class AmplifyReport:
    rows: list[AmplifyRow]
    c: Fraction
    s: Fraction

    @property
    def first_failure(self) -> int | None:
        return next((row.k for row in self.rows if not row.claim_holds), None)


def tensor_amplify(F: Hypergraph, H: Hypergraph, c, s, k: int, *,
                   max_vertices: int = 4096) -> AmplifyReport:
    """Evaluate the claim ``t_F(G) >= c * t_K(G)^s`` on ``G = H^{(x)j}`` for
    ``j = 1..k``. Powers of ``H`` small enough to build are materialised and
    checked against ``t_F(H)^j``."""
    from .hom import tensor_density_identity

    if k < 1:
        raise ValueError("k must be >= 1")
    c, s = Fraction(c), Fraction(s)
    if c <= 0:
        raise ValueError("c must be positive")
    tF = density(F, H).value
    tK = complete_density(H)
    rows = []
    for j in range(1, k + 1):
        mat = H.n ** j <= max_vertices
        if mat:
            got, want = tensor_density_identity(F, H, j, max_vertices=max_vertices)
            if got.value != want:
                raise AssertionError("tensor identity failed")
            kd = Fraction(1)
            if j > 1:
                from .constructions import tensor_power
                kd = complete_density(tensor_power(H, j, max_vertices=max_vertices))
                if kd != tK ** j:
                    raise AssertionError("tensor identity failed for the edge density")
        a, b = tF ** j, tK ** j
        # a >= c * b^s  <=>  (a/c)^den >= b^num
        holds = (a / c) ** s.denominator >= b ** s.numerator
        slack = (tF / tK ** s.numerator) ** j if s.denominator == 1 and tK else None
        rows.append(AmplifyRow(j, a, b, slack, holds, mat))
    return AmplifyReport(rows, c, s)

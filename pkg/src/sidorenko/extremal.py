"""Extremal numbers of lifts ``F(t)``: thresholds, embedding search, exact
small values and deletion-method lower bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable

from .hom import (
    BudgetExceeded,
    HostIndex,
    contains,
    count_injective,
)
from .hypergraph import (
    Hypergraph,
    all_r_sets,
    find_partition,
    induced,
    invariant,
    is_isomorphic,
    is_subhypergraph,
    link_profile,
)

__all__ = [
    "Threshold",
    "kst_threshold",
    "EmbeddingResult",
    "find_lift_copy",
    "lift_copy_bruteforce",
    "ExResult",
    "ex_small",
    "ex_bruteforce",
    "DeletionBound",
    "deletion_lower",
    "loglog_slope",
    "LinksExponent",
    "bipartite_links_bound",
]


@dataclass(frozen=True)
class Threshold:
    """``e(H) >= (1/r!) (t + 2v(F))^{1/s} n^{r - 1/s}`` with ``s = s_bound``.

    The real threshold is irrational in general, so it is carried as the
    exact integer test :meth:`met` and the smallest edge count passing it.
    """

    n: int
    r: int
    t: int
    v_F: int
    s: Fraction
    min_edges: int
    value: float
    exponent: Fraction  # r - 1/s

    def met(self, e: int) -> bool:
        return _meets(e, self.n, self.r, self.t + 2 * self.v_F, self.s)

    @property
    def feasible(self) -> bool:
        return self.min_edges <= math.comb(self.n, self.r)


def _meets(e: int, n: int, r: int, a: int, s: Fraction) -> bool:
    # r! e >= a^{1/s} n^{r - 1/s}  <=>  (r! e)^p >= a^q n^{r p - q}
    p, q = s.numerator, s.denominator
    lhs = (math.factorial(r) * e) ** p
    k = r * p - q
    if k >= 0:
        return lhs >= a ** q * n ** k
    return lhs * n ** (-k) >= a ** q


def kst_threshold(n: int, F: Hypergraph, t: int, s_bound) -> Threshold:
    """Edge count above which an n-vertex ``(r(F)+1)``-graph must contain
    ``F(t)``, for any valid upper bound ``s_bound`` on ``s(F)``."""
    s = Fraction(s_bound)
    if F.e < 1:
        raise ValueError("F needs at least one edge")
    if s < F.e:
        raise ValueError(f"s_bound {s} is below e(F) = {F.e}, so it cannot bound s(F)")
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    r = F.r + 1
    a = t + 2 * F.n
    val = a ** (1 / float(s)) * n ** (r - 1 / float(s)) / math.factorial(r)
    lo, hi = 0, max(1, math.ceil(val) + 2)
    while not _meets(hi, n, r, a, s):
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if _meets(mid, n, r, a, s):
            hi = mid
        else:
            lo = mid + 1
    return Threshold(n, r, t, F.n, s, lo, val, r - 1 / s)


@dataclass
class EmbeddingResult:
    host: Hypergraph
    pattern: Hypergraph
    t: int
    found: bool
    exhaustive: bool  # False only when the budget ran out
    phi: tuple[int, ...] | None = None  # image of V(F)
    witnesses: tuple[int, ...] | None = None  # t apex vertices
    nodes: int = 0
    threshold: Threshold | None = None
    note: str = ""

    @property
    def copy(self) -> tuple[int, ...] | None:
        """Injection ``V(F(t)) -> V(H)`` (lift vertices ``v(F)..`` are the apexes)."""
        if self.phi is None:
            return None
        return self.phi + self.witnesses


def find_lift_copy(H: Hypergraph, F: Hypergraph, t: int, *, budget: int = 10**7,
                   s_bound=None) -> EmbeddingResult:
    """Search an injective ``phi: V(F) -> V(H)`` and ``t`` further vertices
    each forming an edge of ``H`` with every ``phi(e)``. Branch-and-bound on
    the shrinking common neighbourhood."""
    if H.r != F.r + 1:
        raise ValueError(f"host must be {F.r + 1}-uniform for an {F.r}-graph pattern")
    if t < 1:
        raise ValueError("t must be >= 1")
    thr = kst_threshold(H.n, F, t, s_bound) if s_bound is not None else None
    idx = HostIndex(H)
    # placement order: vertices touching many placed vertices first
    order: list[int] = []
    rest = set(range(F.n))
    while rest:
        v = min(rest, key=lambda x: (-sum(1 for e in F.incidence[x] if all(y in order or y == x for y in e)),
                                     -len(F.incidence[x]), x))
        order.append(v)
        rest.remove(v)
    pos = {v: i for i, v in enumerate(order)}
    closing = [[e for e in F.incidence[v] if all(pos[x] <= i for x in e)] for i, v in enumerate(order)]
    img = [0] * F.n
    nodes = 0
    hit: list[tuple[int, int]] = []

    def go(i: int, used: int, nbr: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("lift-copy search exceeded its budget")
        if (nbr & ~used).bit_count() < t:
            return False
        if i == F.n:
            hit.append((used, nbr & ~used))
            return True
        v = order[i]
        for x in range(H.n):
            if used >> x & 1:
                continue
            img[v] = x
            m = nbr
            for e in closing[i]:
                m &= idx.completions([img[y] for y in e])
                if not m:
                    break
            if m and go(i + 1, used | 1 << x, m):
                return True
        return False

    try:
        ok = go(0, 0, idx.full)
    except BudgetExceeded:
        return EmbeddingResult(H, F, t, False, False, nodes=nodes, threshold=thr,
                               note="budget exhausted before the search finished")
    if not ok:
        if thr is not None and thr.met(H.e):
            raise AssertionError("host meets the threshold but has no copy: internal error")
        note = "no copy exists (exhaustive)"
        if thr is not None:
            note += f"; e(H) = {H.e} is below the threshold {thr.min_edges}"
        return EmbeddingResult(H, F, t, False, True, nodes=nodes, threshold=thr, note=note)
    _, free = hit[0]
    wits = []
    while free and len(wits) < t:
        low = free & -free
        wits.append(low.bit_length() - 1)
        free ^= low
    res = EmbeddingResult(H, F, t, True, True, tuple(img), tuple(wits), nodes, thr)
    copy = res.copy
    if len(set(copy)) != len(copy) or not is_subhypergraph(lift_pattern(F, t), H, copy):
        raise AssertionError("returned copy failed verification")
    return res


def lift_pattern(F: Hypergraph, t: int) -> Hypergraph:
    """``F(t)`` without requiring ``F`` to be partite (apexes ``v(F)..``)."""
    n = F.n
    return Hypergraph(F.r + 1, n + t, tuple(e + (n + j,) for j in range(t) for e in F.edges))


def lift_copy_bruteforce(H: Hypergraph, F: Hypergraph, t: int) -> bool:
    """Oracle: try every injection of ``F(t)`` into ``H``."""
    P = lift_pattern(F, t)
    for img in permutations(range(H.n), P.n):
        if all(H.has_edge(img[x] for x in e) for e in P.edges):
            return True
    return False


@dataclass
class ExResult:
    n: int
    pattern: Hypergraph
    value: int
    host: Hypergraph
    classes_per_level: list[int] = field(default_factory=list)


_EX_CAPS = {2: 8, 3: 7}


def ex_small(n: int, F: Hypergraph, *, budget: int = 2_000_000, enforce_cap: bool = True) -> ExResult:
    """Exact ``ex(n, F)``: all F-free r-graphs on ``n`` vertices are grown
    one edge at a time, one representative per isomorphism class. The last
    non-empty level is the answer."""
    r = F.r
    if enforce_cap and (n > _EX_CAPS.get(r, 0) or F.n > 6):
        raise ValueError("outside the feasibility cap (r=2: n<=8, r=3: n<=7, v(F)<=6)")
    G0 = Hypergraph(r, n)
    if F.e == 0:
        if F.n <= n:
            raise ValueError("every host contains an edgeless pattern that fits")
    universe = all_r_sets(n, r)
    level = [G0]
    sizes = [1]
    work = 0
    while True:
        buckets: dict[tuple, list[Hypergraph]] = {}
        nxt = []
        for G in level:
            for e in universe:
                if e in G.edge_set:
                    continue
                work += 1
                if work > budget:
                    raise BudgetExceeded("ex_small exceeded its budget")
                child = G.add_edges([e])
                key = invariant(child)
                bucket = buckets.setdefault(key, [])
                if any(is_isomorphic(child, o) for o in bucket):
                    continue
                bucket.append(child)
                if contains(child, F):
                    continue
                nxt.append(child)
        if not nxt:
            break
        level = nxt
        sizes.append(len(level))
    best = min(level, key=lambda G: G.edges)
    return ExResult(n, F, best.e, best, sizes)


def ex_bruteforce(n: int, F: Hypergraph) -> int:
    """Oracle: largest F-free edge subset, trying subsets from largest down."""
    universe = all_r_sets(n, F.r)
    for k in range(len(universe), -1, -1):
        for es in combinations(universe, k):
            if not contains(Hypergraph(F.r, n, es), F):
                return k
    return 0


@dataclass(frozen=True)
class DeletionBound:
    n: int
    pattern: Hypergraph
    p: Fraction
    value: Fraction  # p*C(n,r) - p^e * (expected copies at p = 1)
    copies: Fraction  # copies of the pattern in K_n^(r)
    automorphisms: int  # 1 when labelled copies were used
    deletion_exponent: Fraction  # r - (v - r)/(e - 1)
    target_exponent: Fraction | None  # r - 1/e(F) for F(t) patterns
    heuristic: bool = True


def _falling(n: int, k: int) -> int:
    return math.perm(n, k) if k <= n else 0


def deletion_lower(n: int, P: Hypergraph, *, base: Hypergraph | None = None,
                   aut_budget: int = 10**5) -> DeletionBound:
    """Deletion-method lower bound on ``ex(n, P)`` (heuristic: never feeds a
    certificate). ``base`` is ``F`` when ``P = F(t)``, for the target
    exponent ``r - 1/e(F)``."""
    r, v, e = P.r, P.n, P.e
    if e < 1:
        raise ValueError("pattern needs an edge")
    try:
        aut = count_injective(P, P, budget=aut_budget)
    except BudgetExceeded:
        aut = 1  # labelled copies over-count, the bound stays valid
    copies = Fraction(_falling(n, v), aut)
    C = math.comb(n, r)
    target = r - Fraction(1, base.e) if base is not None else None
    if e == 1:
        # deleting one edge per copy removes everything
        return DeletionBound(n, P, Fraction(1), Fraction(C) - copies, copies, aut,
                             Fraction(r - 1), target)
    if copies == 0:
        return DeletionBound(n, P, Fraction(1), Fraction(C), copies, aut, Fraction(r) - Fraction(v - r, e - 1), target)
    # maximise p C - p^e X:  p* = (C / (e X))^{1/(e-1)}
    ln_p = (math.log(C) - math.log(e) - (math.log(copies.numerator) - math.log(copies.denominator))) / (e - 1)
    p_star = min(1.0, math.exp(ln_p))
    best = None
    for cand in {Fraction(p_star).limit_denominator(10**6), Fraction(1)}:
        if 0 < cand <= 1:
            val = cand * C - cand ** e * copies
            if best is None or val > best[1]:
                best = (cand, val)
    p, val = best
    return DeletionBound(n, P, p, val, copies, aut, Fraction(r) - Fraction(v - r, e - 1), target)


def loglog_slope(points: Iterable[tuple[float, float]]) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    pts = [(math.log(x), math.log(y)) for x, y in points]
    mx = sum(a for a, _ in pts) / len(pts)
    my = sum(b for _, b in pts) / len(pts)
    return sum((a - mx) * (b - my) for a, b in pts) / sum((a - mx) ** 2 for a, _ in pts)


@dataclass
class LinksExponent:
    exponent: Fraction
    transcript: list[str]
    assumptions: list[str]
    embedding: dict[int, int]


def bipartite_links_bound(F: Hypergraph, G: Hypergraph, part: int | None = None) -> LinksExponent:
    """``ex(n, F) = O(n^{3 - 1/(e(G) + v(G)/2)})`` when the links of one
    class of the 3-partite ``F`` all sit inside the bipartite graph ``G``.
    The links are placed by a single embedding of their union, which is
    what makes ``F`` a sub-hypergraph of ``G(v(F))``."""
    from .bounds import HypothesisError
    from .hom import find_embedding

    if G.r != 2:
        raise HypothesisError("G must be a graph")
    Gc, _ = induced(G, G.covered_vertices())
    if Gc.e == 0:
        raise HypothesisError("G has no edges")
    if find_partition(Gc) is None:
        raise HypothesisError("G is not bipartite")
    P = find_partition(F) if not hasattr(F, "parts") else F
    if P is None or P.r != 3:
        raise HypothesisError("F must be a 3-partite 3-graph")
    part = 3 if part is None else part
    U = link_profile(P, part).union(P.n)
    Uc, names = induced(U, U.covered_vertices())
    phi = find_embedding(Uc, Gc) if Uc.e else ()
    if phi is None:
        raise HypothesisError("the links of the designated class do not fit inside G")
    denom = Gc.e + Fraction(Gc.n, 2)
    return LinksExponent(
        3 - 1 / denom,
        [f"union of class-{part} links embeds in G: {dict(zip(names, phi))}",
         f"F is a sub-hypergraph of G({P.n})",
         f"s(G) <= e(G) + v(G)/2 = {Gc.e} + {Gc.n}/2 = {denom}",
         f"exponent 3 - 1/s = {3 - 1 / denom}"],
        ["bipartite graphs with a vertex complete to the other side are Sidorenko "
         "(Conlon-Fox-Sudakov), giving s(G) <= e(G) + v(G)/2"],
        dict(zip(names, phi)),
    )

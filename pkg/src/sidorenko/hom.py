"""Exact homomorphism counting.

The engine indexes a host by its (r-1)-subsets: ``link[S]`` is a bitmask of
the vertices completing ``S`` to an edge. A pattern is placed vertex by
vertex; a vertex's candidates are the intersection of the masks of the
edges it completes. Patterns are split into components and the counts
multiplied. Vertices forming an independent tail (no edge holds two of them)
are not branched on: their candidate counts are multiplied directly.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterator, Mapping, Sequence

from .hypergraph import Hypergraph, component_vertex_sets, induced, remove_vertices

__all__ = [
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "HostIndex",
    "Density",
    "Homomorphism",
    "count_homomorphisms",
    "count_injective",
    "brute_force_count",
    "density",
    "complete_density",
    "homomorphisms",
    "embeddings",
    "find_embedding",
    "contains",
    "restrict",
    "classify",
    "factor_count",
    "tensor_density_identity",
]

DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    """A search visited more nodes than its budget allows."""


class HostIndex:
    """Bitmask index of a host hypergraph."""

    def __init__(self, H: Hypergraph):
        self.H = H
        self.r = H.r
        self.n = H.n
        self.full = (1 << H.n) - 1
        link: dict[tuple[int, ...], int] = {}
        for e in H.edges:
            for i, x in enumerate(e):
                key = e[:i] + e[i + 1:]
                link[key] = link.get(key, 0) | (1 << x)
        self.link = link

    def completions(self, rest: Sequence[int]) -> int:
        """Mask of vertices ``u`` with ``rest + {u}`` an edge."""
        return self.link.get(tuple(sorted(rest)), 0)


class _Plan:
    """Placement order plus, per position, the edges it completes."""

    def __init__(self, F: Hypergraph, vertices: Sequence[int], injective: bool = False):
        vs = list(vertices)
        vset = set(vs)
        edges = [e for e in F.edges if vset.issuperset(e)]
        inc = {v: [e for e in edges if v in e] for v in vs}
        tail: list[int] = []
        if not injective:
            # independent set, low degree first; no edge may hold two of them
            blocked: set[int] = set()
            for v in sorted(vs, key=lambda x: (len(inc[x]), x)):
                if v in blocked:
                    continue
                tail.append(v)
                for e in inc[v]:
                    blocked.update(e)
        head_set = set(vs) - set(tail)
        order: list[int] = []
        placed: set[int] = set()
        remaining = sorted(head_set)
        while remaining:
            def score(v: int) -> tuple:
                done = sum(1 for e in inc[v] if all(x == v or x in placed for x in e))
                touch = sum(1 for e in inc[v] if any(x in placed for x in e if x != v))
                return (-done, -touch, v)
            v = min(remaining, key=score)
            order.append(v)
            placed.add(v)
            remaining.remove(v)
        order.extend(sorted(tail))
        self.order = order
        self.head = len(order) - len(tail)
        pos = {v: i for i, v in enumerate(order)}
        self.checks: list[list[tuple[int, ...]]] = []
        for i, v in enumerate(order):
            cs = []
            for e in inc[v]:
                if all(pos[x] <= i for x in e):
                    cs.append(tuple(pos[x] for x in e if x != v))
            self.checks.append(cs)


def _count_plan(plan: _Plan, idx: HostIndex, budget: list[int], injective: bool,
                first: Sequence[int] | None = None) -> int:
    order, checks, head = plan.order, plan.checks, plan.head
    k = len(order)
    if k == 0:
        return 1
    link, full = idx.link, idx.full
    img = [0] * k

    def cands(i: int) -> int:
        m = full
        for others in checks[i]:
            key = tuple(sorted(img[j] for j in others))
            m &= link.get(key, 0)
            if not m:
                return 0
        return m

    def tail_product() -> int:
        total = 1
        for i in range(head, k):
            total *= cands(i).bit_count()
            if not total:
                return 0
        return total

    def go(i: int, used: int) -> int:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("homomorphism search exceeded its node budget")
        if i == head:
            return tail_product()
        m = cands(i)
        if injective:
            m &= ~used
        if i == k - 1:
            return m.bit_count()
        total = 0
        while m:
            low = m & -m
            img[i] = low.bit_length() - 1
            total += go(i + 1, used | low)
            m ^= low
        return total

    if first is None:
        return go(0, 0)
    # restricted first-vertex range, used to split work across processes
    total = 0
    m0 = cands(0)
    for x in first:
        if m0 >> x & 1:
            img[0] = x
            if k == 1:
                total += 1
            elif head == 1:
                total += tail_product()
            else:
                total += go(1, 1 << x)
    return total


def _worker(args) -> int:
    F, vertices, H, budget, injective, first = args
    return _count_plan(_Plan(F, vertices, injective), HostIndex(H), [budget], injective, first)


def _check_uniformity(F: Hypergraph, H: Hypergraph) -> None:
    if F.r != H.r:
        raise ValueError(f"uniformity mismatch: pattern is {F.r}-uniform, host is {H.r}-uniform")


def count_homomorphisms(F: Hypergraph, H: Hypergraph, *, budget: int = DEFAULT_BUDGET,
                        jobs: int = 1) -> int:
    """Exact ``hom(F, H)``."""
    _check_uniformity(F, H)
    idx = HostIndex(H)
    left = [budget]
    total = 1
    for comp in component_vertex_sets(F):
        if len(comp) == 1 and not F.incidence[comp[0]]:
            total *= H.n
        else:
            plan = _Plan(F, comp)
            if jobs > 1 and plan.head > 1 and H.n > 1:
                chunks = [list(range(j, H.n, jobs)) for j in range(jobs)]
                args = [(F, comp, H, left[0], False, c) for c in chunks]
                with ProcessPoolExecutor(max_workers=jobs) as ex:
                    total *= sum(ex.map(_worker, args))
            else:
                total *= _count_plan(plan, idx, left, False)
        if total == 0:
            return 0
    return total


def count_injective(F: Hypergraph, H: Hypergraph, *, budget: int = DEFAULT_BUDGET) -> int:
    """Number of injective homomorphisms (labelled embeddings) ``F -> H``."""
    _check_uniformity(F, H)
    if F.n > H.n:
        return 0
    plan = _Plan(F, range(F.n), injective=True)
    return _count_plan(plan, HostIndex(H), [budget], True)


def brute_force_count(F: Hypergraph, H: Hypergraph) -> int:
    """``hom(F, H)`` by trying all ``n^v`` maps. Reference oracle."""
    _check_uniformity(F, H)
    return sum(
        1
        for phi in product(range(H.n), repeat=F.n)
        if all(H.has_edge(phi[x] for x in e) and len({phi[x] for x in e}) == F.r for e in F.edges)
    )


def homomorphisms(F: Hypergraph, H: Hypergraph, *, injective: bool = False,
                  budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, ...]]:
    """Enumerate homomorphisms as image tuples indexed by pattern vertex."""
    _check_uniformity(F, H)
    idx = HostIndex(H)
    plan = _Plan(F, range(F.n), injective=True)  # no tail: every vertex enumerated
    order, checks = plan.order, plan.checks
    k = len(order)
    img = [0] * k
    out = [0] * F.n
    left = [budget]

    def go(i: int, used: int):
        left[0] -= 1
        if left[0] < 0:
            raise BudgetExceeded("homomorphism enumeration exceeded its node budget")
        if i == k:
            for j, v in enumerate(order):
                out[v] = img[j]
            yield tuple(out)
            return
        m = idx.full
        for others in checks[i]:
            m &= idx.link.get(tuple(sorted(img[j] for j in others)), 0)
            if not m:
                return
        if injective:
            m &= ~used
        while m:
            low = m & -m
            img[i] = low.bit_length() - 1
            yield from go(i + 1, used | low)
            m ^= low

    yield from go(0, 0)


def embeddings(F: Hypergraph, H: Hypergraph, **kw) -> Iterator[tuple[int, ...]]:
    """Injective homomorphisms ``F -> H`` (copies of ``F`` as sub-hypergraphs)."""
    if F.n > H.n:
        return iter(())
    return homomorphisms(F, H, injective=True, **kw)


def find_embedding(F: Hypergraph, H: Hypergraph, **kw) -> tuple[int, ...] | None:
    return next(embeddings(F, H, **kw), None)


def contains(H: Hypergraph, F: Hypergraph, **kw) -> bool:
    """Does ``H`` contain a copy of ``F`` (not necessarily induced)?"""
    return find_embedding(F, H, **kw) is not None


@dataclass(frozen=True)
class Density:
    """``t_F(H) = hom(F, H) / n^v(F)`` kept exact."""

    hom_count: int
    exponent: int  # v(F)
    n: int

    @cached_property
    def value(self) -> Fraction:
        return Fraction(self.hom_count, self.n ** self.exponent)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        raw = f"{self.hom_count}/{self.n ** self.exponent}"
        return f"{raw} = {self.value}" if str(self.value) != raw else raw


def density(F: Hypergraph, H: Hypergraph, **kw) -> Density:
    if H.n < 1:
        raise ValueError("density needs a host with at least one vertex")
    return Density(count_homomorphisms(F, H, **kw), F.n, H.n)


def complete_density(H: Hypergraph) -> Fraction:
    """Density of the single r-edge in ``H``: ``r! e(H) / n^r``."""
    if H.n < 1:
        raise ValueError("density needs a host with at least one vertex")
    fact = 1
    for i in range(2, H.r + 1):
        fact *= i
    return Fraction(fact * H.e, H.n ** H.r)


@dataclass(frozen=True)
class Homomorphism:
    pattern: Hypergraph
    host: Hypergraph
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        a = self.assignment
        if len(a) != self.pattern.n:
            raise ValueError("assignment must cover every pattern vertex")
        for e in self.pattern.edges:
            if not self.host.has_edge(a[x] for x in e) or len({a[x] for x in e}) != len(e):
                raise ValueError(f"edge {e} is not mapped to an edge")

    @property
    def injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def image(self) -> Hypergraph:
        """``phi(F)`` on its own (compacted) vertex set."""
        names = sorted(set(self.assignment))
        index = {x: i for i, x in enumerate(names)}
        edges = {tuple(sorted(index[self.assignment[x]] for x in e)) for e in self.pattern.edges}
        return Hypergraph(self.pattern.r, len(names), tuple(edges))


def restrict(phi: Homomorphism, sub: Hypergraph, inclusion: Sequence[int] | Mapping[int, int]) -> Homomorphism:
    """Restriction of ``phi`` to a sub-hypergraph ``sub`` whose vertex ``w``
    sits at ``inclusion[w]`` in the pattern."""
    F = phi.pattern
    incl = [inclusion[w] for w in range(sub.n)]
    if len(set(incl)) != len(incl) or any(not 0 <= x < F.n for x in incl):
        raise ValueError("inclusion is not an injection into the pattern")
    for e in sub.edges:
        if not F.has_edge(incl[x] for x in e):
            raise ValueError(f"edge {e} of the sub-hypergraph is not an edge of the pattern")
    return Homomorphism(sub, phi.host, tuple(phi.assignment[x] for x in incl))


def classify(phi: Homomorphism) -> str:
    """``"proper"`` if ``phi(F)`` is isomorphic to ``F``, else ``"degenerate"``.

    For simple patterns this is injectivity: a non-injective map shrinks the
    vertex set, an injective one is an isomorphism onto its image.
    """
    return "proper" if phi.injective else "degenerate"


def factor_count(M: Hypergraph, part: Sequence[int], H: Hypergraph) -> tuple[int, int, int]:
    """For ``part`` a union of components of ``M``: returns
    ``(hom(M,H), hom(M[part],H), hom(M - part,H))``; the first is the product
    of the other two."""
    S = set(part)
    for comp in component_vertex_sets(M):
        inside = S.intersection(comp)
        if inside and len(inside) != len(comp):
            raise ValueError(f"vertex set is not a union of components (splits {comp})")
    sub, _ = induced(M, S)
    rest, _ = remove_vertices(M, S)
    whole = count_homomorphisms(M, H)
    a, b = count_homomorphisms(sub, H), count_homomorphisms(rest, H)
    if whole != a * b:
        raise AssertionError(f"component factorisation failed: {whole} != {a} * {b}")
    return whole, a, b


def tensor_density_identity(F: Hypergraph, H: Hypergraph, k: int, *,
                            max_vertices: int = 4096) -> tuple[Density, Fraction]:
    """Both sides of ``t_F(H^{(x)k}) = t_F(H)^k``: the density counted in the
    materialised power, and the k-th power of the base density."""
    from .constructions import tensor_power

    if k < 1:
        raise ValueError("k must be >= 1")
    if H.n ** k > max_vertices:
        raise ValueError(f"H^(x){k} has {H.n ** k} vertices, above the cap {max_vertices}")
    lhs = density(F, tensor_power(H, k, max_vertices=max_vertices))
    rhs = density(F, H).value ** k
    return lhs, rhs

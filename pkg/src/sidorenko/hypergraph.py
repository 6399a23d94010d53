"""Uniform hypergraphs on dense integer vertex sets, and the structural
derivations used throughout the package: links, downward hypergraphs,
boundary degrees, vertex removal, components and isomorphism tests.

Vertices are always ``0..n-1``; edges are sorted tuples kept in sorted order,
so two equal hypergraphs are equal field-by-field.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Hypergraph",
    "PartiteHypergraph",
    "LinkEntry",
    "LinkProfile",
    "DegreeStats",
    "link_hypergraph",
    "link_profile",
    "downward_hypergraph",
    "boundary_degree",
    "remove_vertices",
    "common_neighborhood",
    "components",
    "component_vertex_sets",
    "is_subhypergraph",
    "degree_stats",
    "induced",
    "find_partition",
    "is_isomorphic",
    "canonical_form",
    "invariant",
    "nonisomorphic",
    "edge_subsets_up_to_iso",
    "all_r_sets",
]

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """An ``r``-uniform hypergraph on vertices ``0..n-1``."""

    r: int
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"uniformity must be >= 1, got {self.r}")
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        canon = []
        for e in self.edges:
            t = tuple(sorted(int(x) for x in e))
            if len(t) != self.r:
                raise ValueError(f"edge {e} does not have {self.r} vertices")
            if len(set(t)) != self.r:
                raise ValueError(f"edge {e} repeats a vertex")
            if t[0] < 0 or t[-1] >= self.n:
                raise ValueError(f"edge {e} leaves the vertex range 0..{self.n - 1}")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def v(self) -> int:
        return self.n

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[Edge, ...], ...]:
        """``incidence[v]`` lists the edges through ``v``."""
        inc: list[list[Edge]] = [[] for _ in range(self.n)]
        for e in self.edges:
            for x in e:
                inc[x].append(e)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self.edge_set

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.incidence[v]]

    def covered_vertices(self) -> list[int]:
        """Vertices lying in at least one edge."""
        return [v for v in range(self.n) if self.incidence[v]]

    def add_edges(self, extra: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(self.r, self.n, self.edges + tuple(tuple(e) for e in extra))

    def add_vertices(self, k: int) -> "Hypergraph":
        return Hypergraph(self.r, self.n + k, self.edges)

    def edge_subgraph(self, edges: Iterable[Edge]) -> "Hypergraph":
        """Same vertex set, a subset of the edges."""
        edges = tuple(edges)
        missing = [e for e in edges if tuple(sorted(e)) not in self.edge_set]
        if missing:
            raise ValueError(f"edges {missing} are not edges of the hypergraph")
        return Hypergraph(self.r, self.n, edges)

    def relabel(self, mapping: Sequence[int] | Mapping[int, int], n: int | None = None) -> "Hypergraph":
        """Apply an injective vertex map; ``n`` defaults to the current size."""
        n = self.n if n is None else n
        return Hypergraph(self.r, n, tuple(tuple(mapping[x] for x in e) for e in self.edges))

    @property
    def base(self) -> "Hypergraph":
        return self

    def __repr__(self) -> str:
        return f"Hypergraph(r={self.r}, n={self.n}, e={self.e})"


@dataclass(frozen=True, repr=False)
class PartiteHypergraph(Hypergraph):
    """A hypergraph with a vertex partition into classes ``1..r`` such that
    every edge meets each class exactly once.

    ``parts[v]`` is the class index of vertex ``v``.
    """

    parts: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        super().__post_init__()
        parts = tuple(int(p) for p in self.parts)
        if len(parts) != self.n:
            raise ValueError(f"partition has {len(parts)} labels for {self.n} vertices")
        bad = [p for p in parts if not 1 <= p <= self.r]
        if bad:
            raise ValueError(f"class indices must lie in 1..{self.r}, got {sorted(set(bad))}")
        for e in self.edges:
            if sorted(parts[x] for x in e) != list(range(1, self.r + 1)):
                raise ValueError(f"edge {e} is not transversal to the partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_hypergraph(cls, h: Hypergraph, parts: Sequence[int]) -> "PartiteHypergraph":
        return cls(h.r, h.n, h.edges, tuple(parts))

    @property
    def base(self) -> Hypergraph:
        return Hypergraph(self.r, self.n, self.edges)

    def part(self, i: int) -> list[int]:
        return [v for v in range(self.n) if self.parts[v] == i]

    def part_sizes(self) -> tuple[int, ...]:
        return tuple(len(self.part(i)) for i in range(1, self.r + 1))

    def __repr__(self) -> str:
        return f"PartiteHypergraph(r={self.r}, n={self.n}, e={self.e}, parts={self.part_sizes()})"


@dataclass(frozen=True)
class LinkEntry:
    anchor: int
    link: Hypergraph
    names: tuple[int, ...]  # names[i] = parent vertex of link vertex i

    def in_parent(self, n: int) -> Hypergraph:
        """The link written on the parent vertex set ``0..n-1``."""
        return self.link.relabel(self.names, n)


@dataclass(frozen=True)
class LinkProfile:
    designated_part: int
    entries: tuple[LinkEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> LinkEntry:
        return self.entries[i]

    def union(self, n: int) -> Hypergraph:
        """Union of all links, on the parent vertex set."""
        edges = set()
        for ent in self.entries:
            edges.update(tuple(sorted(ent.names[x] for x in f)) for f in ent.link.edges)
        r = self.entries[0].link.r if self.entries else 1
        return Hypergraph(r, n, tuple(edges))


@dataclass(frozen=True)
class DegreeStats:
    max_degree: int
    min_degree: int
    degrees: tuple[int, ...]


def _check_vertex(h: Hypergraph, v: int) -> None:
    if not 0 <= v < h.n:
        raise ValueError(f"unknown vertex {v} (vertex range 0..{h.n - 1})")


def _check_subset(h: Hypergraph, U: Iterable[int]) -> frozenset[int]:
    U = frozenset(U)
    bad = sorted(u for u in U if not 0 <= u < h.n)
    if bad:
        raise ValueError(f"vertices {bad} are not in the hypergraph")
    return U


def link_hypergraph(F: Hypergraph, v: int) -> tuple[Hypergraph, tuple[int, ...]]:
    """Link of ``v``: the (r-1)-graph of edge remainders through ``v``,
    compacted onto the co-occurring vertices.

    Returns the link and the name map (link vertex -> parent vertex).
    """
    _check_vertex(F, v)
    if F.r < 2:
        raise ValueError("links are undefined for 1-graphs")
    rests = [tuple(x for x in e if x != v) for e in F.incidence[v]]
    names = tuple(sorted({x for f in rests for x in f}))
    index = {x: i for i, x in enumerate(names)}
    link = Hypergraph(F.r - 1, len(names), tuple(tuple(index[x] for x in f) for f in rests))
    return link, names


def link_profile(F: PartiteHypergraph, part: int | None = None) -> LinkProfile:
    """Links of every vertex of one class (default: the last class), in
    ascending vertex order."""
    part = F.r if part is None else part
    if not 1 <= part <= F.r:
        raise ValueError(f"class index {part} outside 1..{F.r}")
    entries = []
    for v in F.part(part):
        link, names = link_hypergraph(F, v)
        entries.append(LinkEntry(v, link, names))
    return LinkProfile(part, tuple(entries))


def downward_hypergraph(F: Hypergraph, v: int) -> Hypergraph:
    """Same edges as the link of ``v`` but keeping the whole vertex set."""
    _check_vertex(F, v)
    if F.r < 2:
        raise ValueError("downward hypergraphs are undefined for 1-graphs")
    return Hypergraph(F.r - 1, F.n, tuple(tuple(x for x in e if x != v) for e in F.incidence[v]))


def boundary_degree(F: Hypergraph, U: Iterable[int]) -> int:
    """Number of edges meeting ``U``."""
    U = _check_subset(F, U)
    return sum(1 for e in F.edges if not U.isdisjoint(e))


def remove_vertices(F: Hypergraph, U: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Delete ``U`` and every edge meeting it; survivors are re-indexed in
    order. Returns the new hypergraph and the old->new vertex map."""
    U = _check_subset(F, U)
    keep = [x for x in range(F.n) if x not in U]
    mapping = {x: i for i, x in enumerate(keep)}
    edges = tuple(tuple(mapping[x] for x in e) for e in F.edges if U.isdisjoint(e))
    return Hypergraph(F.r, len(keep), edges), mapping


def common_neighborhood(H: Hypergraph, S: Hypergraph) -> frozenset[int]:
    """Vertices ``u`` with ``f + {u}`` an edge of ``H`` for every edge ``f``
    of ``S``. ``S`` is an (r-1)-graph named inside ``V(H)``."""
    if S.r != H.r - 1:
        raise ValueError(f"expected a {H.r - 1}-graph, got uniformity {S.r}")
    if S.n > H.n:
        raise ValueError("S names vertices outside the host")
    out = set(range(H.n))
    for f in S.edges:
        out &= {u for u in range(H.n) if u not in f and H.has_edge(f + (u,))}
        if not out:
            break
    return frozenset(out)


def component_vertex_sets(F: Hypergraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex.
    Isolated vertices form singleton components."""
    parent = list(range(F.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in F.edges:
        a = find(e[0])
        for x in e[1:]:
            b = find(x)
            if a != b:
                parent[b] = a
    groups: dict[int, list[int]] = {}
    for x in range(F.n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def induced(F: Hypergraph, U: Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """Sub-hypergraph induced on ``U``, compacted; returns it with the name map."""
    U = _check_subset(F, U)
    names = tuple(sorted(U))
    index = {x: i for i, x in enumerate(names)}
    edges = tuple(tuple(index[x] for x in e) for e in F.edges if U.issuperset(e))
    return Hypergraph(F.r, len(names), edges), names


def components(F: Hypergraph) -> list[Hypergraph]:
    return [induced(F, c)[0] for c in component_vertex_sets(F)]


def is_subhypergraph(F: Hypergraph, G: Hypergraph, injection: Sequence[int] | Mapping[int, int]) -> bool:
    """Does the vertex injection ``V(F) -> V(G)`` send every edge of ``F`` to
    an edge of ``G``?"""
    if F.r != G.r:
        raise ValueError("uniformity mismatch")
    try:
        image = [injection[v] for v in range(F.n)]
    except (KeyError, IndexError) as exc:
        raise ValueError(f"injection is not defined on every vertex: {exc}") from None
    if len(set(image)) != len(image):
        raise ValueError("map is not injective")
    if any(not 0 <= x < G.n for x in image):
        raise ValueError("map leaves the target vertex range")
    return all(G.has_edge(image[x] for x in e) for e in F.edges)


def degree_stats(F: Hypergraph) -> DegreeStats:
    degs = tuple(F.degree(v) for v in range(F.n))
    return DegreeStats(max(degs, default=0), min(degs, default=0), degs)


def find_partition(F: Hypergraph) -> PartiteHypergraph | None:
    """Some partition making ``F`` r-partite, or None. Backtracking; meant
    for small patterns. Isolated vertices go to class 1."""
    if isinstance(F, PartiteHypergraph):
        return F
    order = sorted(range(F.n), key=lambda v: -F.degree(v))
    colour = [0] * F.n

    def ok(v: int) -> bool:
        for e in F.incidence[v]:
            seen = [colour[x] for x in e if colour[x]]
            if len(seen) != len(set(seen)):
                return False
        return True

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        if not F.incidence[v]:
            colour[v] = 1
            return go(i + 1)
        for c in range(1, F.r + 1):
            colour[v] = c
            if ok(v) and go(i + 1):
                return True
        colour[v] = 0
        return False

    if not go(0):
        return None
    return PartiteHypergraph.from_hypergraph(F, colour)


# -- isomorphism -------------------------------------------------------------


def _refine(F: Hypergraph) -> tuple[int, ...]:
    """Stable colour refinement. Colour ids are assigned by sorting
    signatures, so they are comparable across hypergraphs."""
    colours = tuple(F.degree(v) for v in range(F.n))
    while True:
        sigs = []
        for v in range(F.n):
            nb = sorted(tuple(sorted(colours[x] for x in e if x != v)) for e in F.incidence[v])
            sigs.append((colours[v], tuple(nb)))
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(ids[s] for s in sigs)
        if len(set(new)) == len(set(colours)):
            return new
        colours = new


def invariant(F: Hypergraph) -> tuple:
    """An isomorphism invariant (equal for isomorphic hypergraphs)."""
    colours = _refine(F)
    sig = sorted(tuple(sorted(colours[x] for x in e)) for e in F.edges)
    return (F.r, F.n, F.e, tuple(sorted(colours)), tuple(sig))


def _iso_search(A: Hypergraph, B: Hypergraph, ca: Sequence[int], cb: Sequence[int]):
    """Yield isomorphisms A -> B respecting the colourings."""
    n = A.n
    order = sorted(range(n), key=lambda v: (sum(1 for c in ca if c == ca[v]), -A.degree(v), v))
    mapping = [-1] * n
    used = [False] * n
    placed_pos = {v: i for i, v in enumerate(order)}

    def consistent(v: int) -> bool:
        k = placed_pos[v]
        for e in A.incidence[v]:
            if all(placed_pos[x] <= k for x in e):
                if not B.has_edge(mapping[x] for x in e):
                    return False
        # edges of B among images must come from A: check via counts at the end
        return True

    def go(i: int):
        if i == n:
            yield tuple(mapping)
            return
        v = order[i]
        for w in range(n):
            if used[w] or cb[w] != ca[v] or B.degree(w) != A.degree(v):
                continue
            mapping[v] = w
            used[w] = True
            if consistent(v):
                yield from go(i + 1)
            used[w] = False
            mapping[v] = -1

    yield from go(0)


def is_isomorphic(A: Hypergraph, B: Hypergraph) -> bool:
    if invariant(A) != invariant(B):
        return False
    # equal edge counts + every A-edge maps to a B-edge => bijection on edges
    return next(_iso_search(A, B, _refine(A), _refine(B)), None) is not None


def canonical_form(F: Hypergraph) -> Hypergraph:
    """Lexicographically least relabelling among those ordering vertices by
    refined colour. Exponential in the colour-class sizes; tiny inputs only."""
    colours = _refine(F)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    keys = sorted(cells)
    best = None
    for choice in product(*(permutations(cells[k]) for k in keys)):
        order = [v for cell in choice for v in cell]
        pos = {v: i for i, v in enumerate(order)}
        edges = tuple(sorted(tuple(sorted(pos[x] for x in e)) for e in F.edges))
        if best is None or edges < best:
            best = edges
    return Hypergraph(F.r, F.n, best or ())


def all_r_sets(n: int, r: int) -> list[Edge]:
    return list(combinations(range(n), r))


def nonisomorphic(r: int, n: int, *, max_edges: int | None = None) -> list[Hypergraph]:
    """All r-graphs on ``n`` vertices up to isomorphism (edge-by-edge
    generation with invariant bucketing). Small ``n`` only."""
    universe = all_r_sets(n, r)
    level = [Hypergraph(r, n)]
    out = list(level)
    top = len(universe) if max_edges is None else min(max_edges, len(universe))
    for _ in range(top):
        buckets: dict[tuple, list[Hypergraph]] = {}
        nxt = []
        for G in level:
            for e in universe:
                if e in G.edge_set:
                    continue
                child = G.add_edges([e])
                key = invariant(child)
                bucket = buckets.setdefault(key, [])
                if any(is_isomorphic(child, other) for other in bucket):
                    continue
                bucket.append(child)
                nxt.append(child)
        level = nxt
        out.extend(level)
    return out


def edge_subsets_up_to_iso(F: Hypergraph, *, strip_isolated: bool = True) -> list[Hypergraph]:
    """Distinct (up to isomorphism) sub-hypergraphs of ``F`` with at least one
    edge, built from edge subsets. Isolated vertices are dropped."""
    seen: dict[tuple, list[Hypergraph]] = {}
    out = []
    for k in range(1, F.e + 1):
        for es in combinations(F.edges, k):
            G = Hypergraph(F.r, F.n, es)
            if strip_isolated:
                G, _ = induced(G, G.covered_vertices())
            key = invariant(G)
            bucket = seen.setdefault(key, [])
            if any(is_isomorphic(G, o) for o in bucket):
                continue
            bucket.append(G)
            out.append(G)
    return out

"""Builders for the hypergraph families used in the package.

Numbering conventions (frozen; other modules and tests rely on them):

* ``tight_cycle(r, k)``: vertices ``0..k-1``, edges ``{i, i+1, .., i+r-1}``
  mod ``k``. Vertex ``i`` is the residue ``i mod k``, so a cycle written on
  ``1..k`` maps onto this one with ``k -> 0``. When ``r | k`` the class of
  ``v`` is ``v mod r`` with residue 0 sent to class ``r``.
* ``complete_partite(t_1, .., t_r)``: class ``i`` holds a consecutive block of
  ``t_i`` vertices, blocks in class order.
* ``grid(k)``: vertex ``(i, j)`` with ``i, j in 1..k`` is ``(i-1)*k + (j-1)``.
* ``tensor_product(A, B)``: vertex ``(a, b)`` is ``a * v(B) + b``.
* ``torus(k) = C_{2k} (x) C_{2k}``: cycle vertex ``i`` is the residue of the
  coordinate ``i`` mod ``2k``.
* ``lift(F, t)``: ``F`` keeps its vertices, new apexes are ``v(F)..v(F)+t-1``.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

from .hypergraph import (
    Hypergraph,
    PartiteHypergraph,
    find_partition,
    induced,
    is_isomorphic,
    is_subhypergraph,
    link_profile,
)

__all__ = [
    "complete_partite",
    "complete",
    "tight_cycle",
    "cycle",
    "path",
    "grid",
    "hypercube",
    "k_mm",
    "loose_triangle",
    "disjoint_edges",
    "disjoint_union",
    "tensor_product",
    "tensor_power",
    "torus",
    "lift",
    "lift_chain",
    "apex_augment",
    "grid_embedding",
    "catalog",
    "build",
    "CATALOG_FAMILIES",
]


def complete_partite(*sizes: int) -> PartiteHypergraph:
    """``K^{(r)}_{t_1,..,t_r}``: every transversal r-set is an edge."""
    if not sizes:
        raise ValueError("need at least one part")
    if any(t < 1 for t in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    blocks, parts, start = [], [], 0
    for i, t in enumerate(sizes, 1):
        blocks.append(range(start, start + t))
        parts.extend([i] * t)
        start += t
    return PartiteHypergraph(len(sizes), start, tuple(product(*blocks)), tuple(parts))


def complete(n: int, r: int = 2) -> Hypergraph:
    """``K^{(r)}_n``."""
    return Hypergraph(r, n, tuple(combinations(range(n), r)))


def tight_cycle(r: int, k: int) -> Hypergraph:
    """Tight cycle ``C^{(r)}_k``; r-partite by residues when ``r | k``."""
    if k < r + 1:
        raise ValueError(f"tight cycle needs k >= r + 1 (got r={r}, k={k}); shorter ones repeat edges")
    edges = tuple(tuple((i + j) % k for j in range(r)) for i in range(k))
    if k % r == 0:
        parts = tuple((v % r) or r for v in range(k))
        return PartiteHypergraph(r, k, edges, parts)
    return Hypergraph(r, k, edges)


def cycle(k: int) -> Hypergraph:
    return tight_cycle(2, k)


def path(edges: int) -> PartiteHypergraph:
    """Graph path with ``edges`` edges on ``edges + 1`` vertices."""
    if edges < 0:
        raise ValueError("edge count must be >= 0")
    n = edges + 1
    return PartiteHypergraph(2, n, tuple((i, i + 1) for i in range(edges)), tuple(1 + i % 2 for i in range(n)))


def grid(k: int) -> PartiteHypergraph:
    """The ``k x k`` grid (cartesian product of two k-vertex paths)."""
    if k < 2:
        raise ValueError("grid needs k >= 2")
    edges = []
    for i in range(k):
        for j in range(k):
            v = i * k + j
            if i + 1 < k:
                edges.append((v, v + k))
            if j + 1 < k:
                edges.append((v, v + 1))
    parts = tuple(1 + (i + j) % 2 for i in range(k) for j in range(k))
    return PartiteHypergraph(2, k * k, tuple(edges), parts)


def hypercube(d: int) -> PartiteHypergraph:
    """``Q_d`` on bit strings ``0..2^d-1``."""
    if d < 1:
        raise ValueError("hypercube dimension must be >= 1")
    n = 1 << d
    edges = tuple((v, v | 1 << b) for v in range(n) for b in range(d) if not v >> b & 1)
    parts = tuple(1 + bin(v).count("1") % 2 for v in range(n))
    return PartiteHypergraph(2, n, edges, parts)


def k_mm(m: int, m2: int | None = None) -> PartiteHypergraph:
    return complete_partite(m, m if m2 is None else m2)


def loose_triangle() -> PartiteHypergraph:
    """Loose 3-uniform triangle: edges 123, 345, 561 written on ``0..5``
    (vertex ``i`` here is ``i + 1`` there)."""
    edges = ((0, 1, 2), (2, 3, 4), (4, 5, 0))
    parts = (1, 2, 3, 1, 2, 3)
    return PartiteHypergraph(3, 6, edges, parts)


def disjoint_union(*hs: Hypergraph) -> Hypergraph:
    if not hs:
        raise ValueError("need at least one hypergraph")
    r = hs[0].r
    if any(h.r != r for h in hs):
        raise ValueError("uniformity mismatch")
    edges, parts, off = [], [], 0
    partite = all(isinstance(h, PartiteHypergraph) for h in hs)
    for h in hs:
        edges.extend(tuple(x + off for x in e) for e in h.edges)
        if partite:
            parts.extend(h.parts)
        off += h.n
    if partite:
        return PartiteHypergraph(r, off, tuple(edges), tuple(parts))
    return Hypergraph(r, off, tuple(edges))


def disjoint_edges(k: int, r: int = 2) -> PartiteHypergraph:
    """``k`` pairwise disjoint r-edges."""
    return disjoint_union(*[complete_partite(*[1] * r) for _ in range(k)])


def tensor_product(A: Hypergraph, B: Hypergraph) -> Hypergraph:
    """Tensor product: an r-set of pairs is an edge iff its first
    coordinates form an edge of ``A`` and its second coordinates an edge of
    ``B`` (so both projections are r distinct vertices)."""
    if A.r != B.r:
        raise ValueError("uniformity mismatch")
    nb = B.n
    edges = set()
    for ea in A.edges:
        for eb in B.edges:
            for perm in permutations(eb):
                edges.add(tuple(sorted(a * nb + b for a, b in zip(ea, perm))))
    return Hypergraph(A.r, A.n * B.n, tuple(edges))


def tensor_power(F: Hypergraph, k: int, *, max_vertices: int = 4096) -> Hypergraph:
    if k < 1:
        raise ValueError("k must be >= 1")
    if F.n ** k > max_vertices:
        raise ValueError(f"F^(x){k} has {F.n ** k} vertices, above the cap {max_vertices}")
    out = F
    for _ in range(k - 1):
        out = tensor_product(out, F)
    return out


def torus(k: int) -> PartiteHypergraph:
    """``T_k = C_{2k} (x) C_{2k}``; vertex ``(a, b)`` is ``a*2k + b``."""
    if k < 2:
        raise ValueError("k must be >= 2")
    t = tensor_product(cycle(2 * k), cycle(2 * k))
    m = 2 * k
    parts = tuple(1 + (v // m) % 2 for v in range(t.n))
    return PartiteHypergraph.from_hypergraph(t, parts)


def lift(F: Hypergraph, t: int) -> PartiteHypergraph:
    """``F(t)``: uniformity goes up by one; ``t`` new vertices each form an
    edge with every edge of ``F``. ``F`` must be partite (a partition is
    searched for otherwise)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    P = find_partition(F)
    if P is None:
        raise ValueError("the base hypergraph is not r-partite")
    n = F.n
    edges = tuple(e + (n + j,) for j in range(t) for e in F.edges)
    parts = P.parts + (F.r + 1,) * t
    return PartiteHypergraph(F.r + 1, n + t, edges, parts)


def lift_chain(F: Hypergraph, *ts: int) -> Hypergraph:
    """``F(t_1, .., t_l) = F(t_1, .., t_{l-1})(t_l)``."""
    out = F
    for t in ts:
        out = lift(out, t)
    return out


def apex_augment(F: PartiteHypergraph, M: Hypergraph, part: int | None = None) -> PartiteHypergraph:
    """Add one vertex to class ``part`` (default the last) whose link is
    ``M``. ``M`` is an (r-1)-graph on ``F``'s vertex names; every existing
    link of that class must already be a sub-hypergraph of ``M``."""
    part = F.r if part is None else part
    if M.r != F.r - 1:
        raise ValueError(f"M must be {F.r - 1}-uniform")
    if M.n > F.n:
        raise ValueError("M names vertices outside F")
    M = Hypergraph(M.r, F.n, M.edges)
    others = sorted(set(range(1, F.r + 1)) - {part})
    for f in M.edges:
        if sorted(F.parts[x] for x in f) != others:
            raise ValueError(f"edge {f} of M is not transversal to the other classes")
    for ent in link_profile(F, part):
        missing = [f for f in ent.in_parent(F.n).edges if f not in M.edge_set]
        if missing:
            raise ValueError(f"link of vertex {ent.anchor} is not inside M: missing {missing}")
    u = F.n
    edges = F.edges + tuple(f + (u,) for f in M.edges)
    return PartiteHypergraph(F.r, F.n + 1, edges, F.parts + (part,))


def grid_embedding(k: int) -> tuple[int, ...]:
    """Injection ``G_k -> T_k`` sending grid vertex ``(i, j)`` to
    ``(k+i-j-1, i+j-1)`` mod ``2k``. Verified before returning: it is an
    embedding and the induced subgraph on the image is isomorphic to ``G_k``."""
    if k < 2:
        raise ValueError("k must be >= 2")
    m = 2 * k
    image = []
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            a, b = (k + i - j - 1) % m, (i + j - 1) % m
            image.append(a * m + b)
    G, T = grid(k), torus(k)
    if len(set(image)) != len(image) or not is_subhypergraph(G, T, image):
        raise AssertionError(f"grid embedding into T_{k} failed verification")
    sub, _ = induced(T, image)
    if not is_isomorphic(sub, G.base):
        raise AssertionError(f"induced subgraph of T_{k} on U is not the grid")
    return tuple(image)


def _even_cycle(k: int) -> Hypergraph:
    if k < 4 or k % 2:
        raise ValueError("even cycles need an even length >= 4")
    return cycle(k)


CATALOG_FAMILIES = {
    "path": lambda a: path(int(a[0])),
    "cycle": lambda a: cycle(int(a[0])),
    "even-cycle": lambda a: _even_cycle(int(a[0])),
    "hypercube": lambda a: hypercube(int(a[0])),
    "kmm": lambda a: k_mm(*map(int, a)),
    "complete-partite": lambda a: complete_partite(*map(int, a)),
    "complete": lambda a: complete(int(a[0]), int(a[1]) if len(a) > 1 else 2),
    "tight-cycle": lambda a: tight_cycle(int(a[0]), int(a[1])),
    "grid": lambda a: grid(int(a[0])),
    "torus": lambda a: torus(int(a[0])),
    "loose-triangle": lambda a: loose_triangle(),
    "disjoint-edges": lambda a: disjoint_edges(int(a[0]), int(a[1]) if len(a) > 1 else 2),
    "edge": lambda a: complete_partite(*[1] * (int(a[0]) if a else 2)),
}


def catalog(name: str, *params: int) -> Hypergraph:
    """Named families: ``path``, ``cycle``, ``even-cycle``, ``hypercube``,
    ``kmm``, ``complete-partite``, ``complete``, ``tight-cycle``, ``grid``,
    ``torus``, ``loose-triangle``, ``disjoint-edges``, ``edge``."""
    try:
        fn = CATALOG_FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(CATALOG_FAMILIES))}") from None
    return fn(params)


def build(spec: str) -> Hypergraph:
    """Build from a spec string.

    Grammar: ``family[:p1,p2,..]``, plus ``lift(<spec>;t1,t2,..)``,
    ``tensor(<spec>;<spec>)``, ``power(<spec>;k)``, ``links(<spec>)`` (union
    of the last class's links, on the parent's vertices) and ``apex(<spec>)``
    (apex augmentation by that union). Examples: ``tight-cycle:3,6``,
    ``lift(cycle:4;3)``, ``tensor(cycle:4;cycle:4)``, ``apex(tight-cycle:3,6)``.
    """
    spec = spec.strip()
    for head in ("links(", "apex("):
        if spec.startswith(head) and spec.endswith(")"):
            inner = build(spec[len(head):-1])
            P = inner if isinstance(inner, PartiteHypergraph) else find_partition(inner)
            if P is None:
                raise ValueError(f"{head[:-1]} needs an r-partite hypergraph")
            M = link_profile(P).union(P.n)
            return M if head == "links(" else apex_augment(P, M)
    for head in ("lift(", "tensor(", "power("):
        if spec.startswith(head):
            if not spec.endswith(")"):
                raise ValueError(f"unbalanced parentheses in {spec!r}")
            inner = spec[len(head):-1]
            args = _split_top(inner)
            if head == "lift(":
                if len(args) != 2:
                    raise ValueError("lift takes lift(<spec>;t1,t2,..)")
                return lift_chain(build(args[0]), *[int(x) for x in args[1].split(",")])
            if head == "tensor(":
                return tensor_product(*[build(a) for a in args])
            if len(args) != 2:
                raise ValueError("power takes power(<spec>;k)")
            return tensor_power(build(args[0]), int(args[1]))
    name, _, rest = spec.partition(":")
    params = [int(x) for x in rest.split(",") if x.strip()] if rest else []
    return catalog(name, *params)


def _split_top(s: str) -> list[str]:
    depth, out, cur = 0, [], []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == ";" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [x.strip() for x in out]

"""Domination and (weak) norming on step kernels.

A kernel is a symmetric step function on ``[0,1]^r`` with ``n`` cells and
rational values, so every integral below is an exact finite average.
The randomized suites can falsify a norming property or corroborate it;
they never certify it. Known dominating families come from the literature
catalogue at the bottom of this module.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import lcm
from typing import Mapping, Sequence

from .hom import density, find_embedding
from .hypergraph import (
    Hypergraph,
    component_vertex_sets,
    edge_subsets_up_to_iso,
    induced,
    is_isomorphic,
    nonisomorphic,
)

__all__ = [
    "WeightedKernel",
    "kernel_of",
    "constant_kernel",
    "random_kernel",
    "kernel_density",
    "kernel_density_bruteforce",
    "DominationCheck",
    "domination_check",
    "Counterexample",
    "FalsifyReport",
    "dominating_falsify",
    "CSGCheck",
    "csg_check",
    "root_sum_compare",
    "NormingReport",
    "weakly_norming_suite",
    "CatalogEntry",
    "catalog_dominating",
    "dominating_provenance",
    "sidorenko_provenance",
    "is_complete_partite",
]


@dataclass(frozen=True, eq=False)
class WeightedKernel:
    """Symmetric step kernel: ``entries`` maps sorted r-multisets of cells to
    values; missing keys are 0."""

    r: int
    n: int
    entries: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for k, v in self.entries.items():
            key = tuple(sorted(k))
            if len(key) != self.r or any(not 0 <= x < self.n for x in key):
                raise ValueError(f"bad kernel key {k}")
            if key in clean and clean[key] != Fraction(v):
                raise ValueError(f"conflicting values for cell {key}")
            if v:
                clean[key] = Fraction(v)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __call__(self, *xs: int) -> Fraction:
        return self.entries.get(tuple(sorted(xs)), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedKernel):
            return NotImplemented
        return (self.r, self.n, self.entries) == (other.r, other.n, other.entries)

    def __add__(self, other: "WeightedKernel") -> "WeightedKernel":
        self._same_shape(other)
        keys = set(self.entries) | set(other.entries)
        return WeightedKernel(self.r, self.n, {k: self(*k) + other(*k) for k in keys})

    def scale(self, lam) -> "WeightedKernel":
        lam = Fraction(lam)
        return WeightedKernel(self.r, self.n, {k: lam * v for k, v in self.entries.items()})

    def absolute(self) -> "WeightedKernel":
        return WeightedKernel(self.r, self.n, {k: abs(v) for k, v in self.entries.items()})

    @property
    def nonnegative(self) -> bool:
        return all(v >= 0 for v in self.entries.values())

    @property
    def bounds(self) -> tuple[Fraction, Fraction]:
        vals = list(self.entries.values())
        full = len(vals) == len(list(combinations_with_replacement(range(self.n), self.r)))
        if not full:
            vals.append(Fraction(0))
        return min(vals), max(vals)

    def _same_shape(self, other: "WeightedKernel") -> None:
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("kernels differ in uniformity or resolution")


def kernel_of(H: Hypergraph) -> WeightedKernel:
    """0/1 kernel of a host: 1 exactly on (cells of) edges."""
    return WeightedKernel(H.r, H.n, {e: Fraction(1) for e in H.edges})


def constant_kernel(r: int, n: int, value) -> WeightedKernel:
    value = Fraction(value)
    return WeightedKernel(r, n, {k: value for k in combinations_with_replacement(range(n), r)})


def random_kernel(r: int, n: int, rng: random.Random, *, max_den: int = 16,
                  signed: bool = False, zero_prob: float = 0.25) -> WeightedKernel:
    """Entries ``a/q`` with ``q <= max_den``; in ``[0,1]`` or ``[-1,1]``."""
    entries = {}
    for k in combinations_with_replacement(range(n), r):
        if rng.random() < zero_prob:
            continue
        q = rng.randint(1, max_den)
        a = rng.randint(-q if signed else 0, q)
        entries[k] = Fraction(a, q)
    return WeightedKernel(r, n, entries)


# -- exact integration ---------------------------------------------------------


def _integerise(f: WeightedKernel) -> tuple[dict[tuple[int, ...], int], int]:
    den = 1
    for v in f.entries.values():
        den = lcm(den, v.denominator)
    return {k: int(v * den) for k, v in f.entries.items()}, den


def _product_sum(F: Hypergraph, kernels: Sequence[dict[tuple[int, ...], int]], n: int,
                 absolute: bool) -> int:
    """``sum over x in [n]^V(F) of prod_e k_e(x_e)`` with ``kernels[i]``
    attached to ``F.edges[i]``; factorised over components."""
    eidx = {e: i for i, e in enumerate(F.edges)}
    total = 1
    for comp in component_vertex_sets(F):
        if len(comp) == 1 and not F.incidence[comp[0]]:
            total *= n
            continue
        order: list[int] = []
        rest = set(comp)
        while rest:
            v = min(rest, key=lambda x: (-sum(1 for e in F.incidence[x] if all(y in order or y == x for y in e)),
                                          -sum(1 for e in F.incidence[x] if any(y in order for y in e)), x))
            order.append(v)
            rest.remove(v)
        pos = {v: i for i, v in enumerate(order)}
        checks = []
        for i, v in enumerate(order):
            cs = []
            for e in F.incidence[v]:
                if all(pos[x] <= i for x in e):
                    table = kernels[eidx[e]]
                    if absolute:
                        table = {k: abs(x) for k, x in table.items()}
                    cs.append((table, tuple(pos[x] for x in e)))
            checks.append(cs)
        k = len(order)
        img = [0] * k

        def go(i: int) -> int:
            s = 0
            for x in range(n):
                img[i] = x
                w = 1
                for table, ps in checks[i]:
                    w *= table.get(tuple(sorted(img[j] for j in ps)), 0)
                    if not w:
                        break
                if not w:
                    continue
                s += w if i == k - 1 else w * go(i + 1)
            return s

        total *= go(0)
        if not total:
            return 0
    return total


def _family_integral(F: Hypergraph, fs: Sequence[WeightedKernel], absolute: bool,
                     n: int | None = None) -> Fraction:
    if n is None:
        n = fs[0].n if fs else 1
    tables, den = [], 1
    for f in fs:
        t, d = _integerise(f)
        tables.append(t)
        den *= d
    return Fraction(_product_sum(F, tables, n, absolute), den * n ** F.n)


def _check_kernel(F: Hypergraph, f: WeightedKernel) -> None:
    if F.r != f.r:
        raise ValueError(f"pattern is {F.r}-uniform but the kernel is {f.r}-uniform")


def kernel_density(F: Hypergraph, f: WeightedKernel, signed: bool = False) -> Fraction:
    """``||f||_F^{e(F)}`` when ``signed`` (absolute value of the integral of
    the product), else ``||f||_{w(F)}^{e(F)}`` (integral of the product of
    absolute values)."""
    _check_kernel(F, f)
    val = _family_integral(F, [f] * F.e, absolute=not signed, n=f.n)
    return abs(val)


def kernel_density_bruteforce(F: Hypergraph, fs: Sequence[WeightedKernel] | WeightedKernel,
                              absolute: bool = False) -> Fraction:
    """Reference path: average over every cell assignment, Fractions
    throughout. ``fs`` is one kernel or one per edge."""
    n = None
    if isinstance(fs, WeightedKernel):
        n, fs = fs.n, [fs] * F.e
    n = n or (fs[0].n if fs else 1)
    s = Fraction(0)
    for x in product(range(n), repeat=F.n):
        w = Fraction(1)
        for f, e in zip(fs, F.edges):
            val = f(*(x[v] for v in e))
            w *= abs(val) if absolute else val
            if not w:
                break
        s += w
    return s / n ** F.n


# -- domination ------------------------------------------------------------------


@dataclass(frozen=True)
class DominationCheck:
    holds: bool
    t_F: Fraction
    t_sub: Fraction
    lhs: Fraction  # t_F ** e(F')
    rhs: Fraction  # t_F' ** e(F)
    embedding: tuple[int, ...]


def domination_check(F: Hypergraph, Fp: Hypergraph, H: Hypergraph | WeightedKernel,
                     embedding: Sequence[int] | None = None) -> DominationCheck:
    """Exact test of ``t_F(H)^{1/e(F)} >= t_F'(H)^{1/e(F')}`` in the powered
    form ``t_F^{e(F')} >= t_F'^{e(F)}``. ``H`` may be a host or a
    nonnegative kernel."""
    if F.e < 1 or Fp.e < 1:
        raise ValueError("both hypergraphs need at least one edge")
    if embedding is None:
        embedding = find_embedding(Fp, F)
        if embedding is None:
            raise ValueError("F' is not a sub-hypergraph of F")
    elif not all(F.has_edge(embedding[x] for x in e) for e in Fp.edges):
        raise ValueError("supplied embedding does not map F' into F")
    if isinstance(H, WeightedKernel):
        tF, tS = kernel_density(F, H), kernel_density(Fp, H)
    else:
        tF, tS = density(F, H).value, density(Fp, H).value
    lhs, rhs = tF ** Fp.e, tS ** F.e
    return DominationCheck(lhs >= rhs, tF, tS, lhs, rhs, tuple(embedding))


@dataclass(frozen=True)
class Counterexample:
    pattern: Hypergraph
    sub: Hypergraph
    host: Hypergraph
    lhs: Fraction
    rhs: Fraction


@dataclass
class FalsifyReport:
    pattern: Hypergraph
    counterexample: Counterexample | None
    checked: int
    subs: int
    hosts: int
    exhausted: bool  # every planned (F', H) pair was checked
    seed: int | None = None

    @property
    def found(self) -> bool:
        return self.counterexample is not None


def _host_pool(r: int, max_n: int, random_hosts: int, rng: random.Random,
               random_n: tuple[int, int]) -> list[Hypergraph]:
    pool = []
    for n in range(1, max_n + 1):
        pool.extend(h for h in nonisomorphic(r, n) if h.e)
    lo, hi = random_n
    for _ in range(random_hosts):
        n = rng.randint(lo, hi)
        p = rng.random()
        from itertools import combinations
        edges = [e for e in combinations(range(n), r) if rng.random() < p]
        if edges:
            pool.append(Hypergraph(r, n, tuple(edges)))
    return pool


def dominating_falsify(F: Hypergraph, *, max_host_n: int = 5, random_hosts: int = 0,
                       random_n: tuple[int, int] = (6, 8), seed: int = 0,
                       budget: int | None = None) -> FalsifyReport:
    """Search sub-hypergraphs ``F'`` and hosts for a violation of
    ``t_F^{e(F')} >= t_F'^{e(F)}``. Hosts: every r-graph on up to
    ``max_host_n`` vertices (up to isomorphism), then ``random_hosts`` seeded
    random ones. A violation is re-checked on the kernel path before it is
    returned."""
    rng = random.Random(seed)
    subs = [S for S in edge_subsets_up_to_iso(F) if not (S.e == F.e and S.n == len(F.covered_vertices()))]
    hosts = _host_pool(F.r, max_host_n, random_hosts, rng, random_n)
    checked = 0
    for H in hosts:
        tF = density(F, H).value
        for S in subs:
            if budget is not None and checked >= budget:
                return FalsifyReport(F, None, checked, len(subs), len(hosts), False, seed)
            checked += 1
            tS = density(S, H).value
            if tF ** S.e < tS ** F.e:
                h = kernel_of(H)
                a = kernel_density_bruteforce(F, h) ** S.e
                b = kernel_density_bruteforce(S, h) ** F.e
                if not a < b:
                    raise AssertionError("counterexample failed independent re-verification")
                return FalsifyReport(F, Counterexample(F, S, H, a, b), checked, len(subs), len(hosts), False, seed)
    return FalsifyReport(F, None, checked, len(subs), len(hosts), True, seed)


# -- Cauchy-Schwarz-Gowers and norming ---------------------------------------------


@dataclass(frozen=True)
class CSGCheck:
    holds: bool
    lhs: Fraction  # <family; colouring>
    rhs_power: Fraction  # (prod_e ||f_chi(e)||_w)^{e(F)}
    e: int


def csg_check(F: Hypergraph, colouring: Sequence[int], kernels: Sequence[WeightedKernel] | Mapping[int, WeightedKernel],
              nonneg: bool = True) -> CSGCheck:
    """``<family; chi>_F <= prod_e ||f_chi(e)||_{w(F)}``, decided exactly by
    raising both sides to the power ``e(F)``. ``colouring[i]`` is the colour
    (``1..e(F)``) of ``F.edges[i]``; ``kernels`` is indexed by colour."""
    if len(colouring) != F.e:
        raise ValueError("colouring must assign a colour to every edge")
    get = (lambda c: kernels[c]) if isinstance(kernels, Mapping) else (lambda c: kernels[c - 1])
    try:
        fs = [get(c) for c in colouring]
    except (KeyError, IndexError):
        raise ValueError("colouring uses a colour with no kernel") from None
    if fs:
        shape = (fs[0].r, fs[0].n)
        if any((f.r, f.n) != shape for f in fs) or shape[0] != F.r:
            raise ValueError("kernels must share uniformity (that of F) and resolution")
    if nonneg and not all(f.nonnegative for f in fs):
        raise ValueError("nonnegative kernels required")
    lhs = _family_integral(F, fs, absolute=False)
    norms: dict[int, Fraction] = {}
    rhs = Fraction(1)
    for c, f in zip(colouring, fs):
        if c not in norms:
            norms[c] = kernel_density(F, f)
        rhs *= norms[c]
    holds = lhs <= 0 or lhs ** F.e <= rhs
    return CSGCheck(holds, lhs, rhs, F.e)


def _iroot(x: int, k: int) -> int:
    """Largest integer ``y`` with ``y**k <= x``."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2:
        return x
    y = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            break
        y = z
    while y ** k > x:
        y -= 1
    while (y + 1) ** k <= x:
        y += 1
    return y


def _exact_root(x: Fraction, k: int) -> Fraction | None:
    p, q = _iroot(x.numerator, k), _iroot(x.denominator, k)
    return Fraction(p, q) if p ** k == x.numerator and q ** k == x.denominator else None


def _root_bracket(x: Fraction, k: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rationals ``lo <= x^(1/k) <= hi`` with ``hi - lo <= 2^-bits``;
    both certified by exact powering."""
    scale = 1 << bits
    num = x.numerator * scale ** k
    lo = _iroot(num // x.denominator, k)
    lo_f, hi_f = Fraction(lo, scale), Fraction(lo + 1, scale)
    assert lo_f ** k <= x < hi_f ** k
    return lo_f, hi_f


def root_sum_compare(a: Fraction, b: Fraction, c: Fraction, k: int, *, max_bits: int = 1024) -> int:
    """Compare ``a^(1/k)`` with ``b^(1/k) + c^(1/k)`` for nonnegative
    rationals. Returns -1 if certainly ``<=``, +1 if certainly ``>``, and 0
    if the two agree to ``max_bits`` bits (treated as a tie)."""
    if a == 0:
        return -1
    if b == 0 or c == 0:
        return -1 if a <= b + c else 1
    rb, rc = _exact_root(b, k), _exact_root(c, k)
    if rb is not None and rc is not None:
        return -1 if a <= (rb + rc) ** k else 1
    bits = 64
    while bits <= max_bits:
        alo, ahi = _root_bracket(a, k, bits)
        blo, bhi = _root_bracket(b, k, bits)
        clo, chi = _root_bracket(c, k, bits)
        if ahi <= blo + clo:
            return -1
        if alo > bhi + chi:
            return 1
        bits *= 2
    return 0


@dataclass
class TriangleFailure:
    trial: int
    f: WeightedKernel
    g: WeightedKernel
    norm_sum: Fraction  # ||f+g||^e
    norm_f: Fraction
    norm_g: Fraction


@dataclass
class CSGFailure:
    trial: int
    colouring: tuple[int, ...]
    kernels: tuple[WeightedKernel, ...]
    check: CSGCheck


@dataclass
class NormingReport:
    pattern: Hypergraph
    seed: int
    signed: bool
    trials: int = 0
    triangle_passed: int = 0
    triangle_ties: int = 0
    csg_passed: int = 0
    triangle_failures: list[TriangleFailure] = field(default_factory=list)
    csg_failures: list[CSGFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.triangle_failures and not self.csg_failures

    @property
    def counterexample(self) -> TriangleFailure | CSGFailure | None:
        if self.triangle_failures:
            return self.triangle_failures[0]
        return self.csg_failures[0] if self.csg_failures else None


def _norm_power(F: Hypergraph, f: WeightedKernel, signed: bool) -> Fraction:
    return kernel_density(F, f, signed=signed)


def _trial(F: Hypergraph, seed: int, i: int, resolution: int, max_den: int, signed: bool,
           csg: bool) -> tuple[int, TriangleFailure | None, CSGFailure | None]:
    """Returns (triangle verdict from root_sum_compare, failures)."""
    rng = random.Random(f"{seed}:{i}")
    n = rng.randint(1, resolution)
    f = random_kernel(F.r, n, rng, max_den=max_den, signed=signed)
    g = random_kernel(F.r, n, rng, max_den=max_den, signed=signed)
    a, b, c = (_norm_power(F, k, signed) for k in (f + g, f, g))
    verdict = root_sum_compare(a, b, c, F.e)
    tri = None
    if verdict > 0:
        # independent re-evaluation before reporting
        ra, rb, rc = (abs(kernel_density_bruteforce(F, k, absolute=not signed)) for k in (f + g, f, g))
        if (ra, rb, rc) != (a, b, c) or root_sum_compare(ra, rb, rc, F.e) <= 0:
            raise AssertionError("triangle counterexample failed independent re-verification")
        tri = TriangleFailure(i, f, g, a, b, c)
    bad = None
    if csg:
        colouring = tuple(rng.randint(1, F.e) for _ in range(F.e))
        fam = tuple(random_kernel(F.r, n, rng, max_den=max_den) for _ in range(F.e))
        chk = csg_check(F, colouring, fam)
        if not chk.holds:
            lhs = kernel_density_bruteforce(F, [fam[c - 1] for c in colouring])
            if lhs != chk.lhs:
                raise AssertionError("CSG counterexample failed independent re-verification")
            bad = CSGFailure(i, colouring, fam, chk)
    return verdict, tri, bad


def weakly_norming_suite(F: Hypergraph, trials: int, seed: int, *, resolution: int = 4,
                         max_den: int = 16, signed: bool = False, csg: bool = True,
                         stop_on_failure: bool = True) -> NormingReport:
    """Randomized triangle-inequality test of ``||.||_{w(F)}`` (or of
    ``||.||_F`` with signed kernels when ``signed``), plus CSG with random
    colourings. Trial ``i`` draws from its own seed, so any failure replays
    exactly."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if F.e < 1:
        raise ValueError("pattern needs at least one edge")
    rep = NormingReport(F, seed, signed)
    for i in range(trials):
        verdict, tri, bad = _trial(F, seed, i, resolution, max_den, signed, csg and not signed)
        rep.trials += 1
        if tri is not None:
            rep.triangle_failures.append(tri)
        elif verdict == 0:
            rep.triangle_ties += 1
        else:
            rep.triangle_passed += 1
        if bad is not None:
            rep.csg_failures.append(bad)
        elif csg and not signed:
            rep.csg_passed += 1
        if stop_on_failure and not rep.passed:
            break
    return rep


# -- catalogue ----------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    hypergraph: Hypergraph
    kind: str  # norming | weakly norming | dominating
    provenance: str


_HATAMI = "Hatami 2010: even cycles and complete r-partite r-graphs are norming, hypercubes weakly norming"
_GOWERS = "Gowers: octahedral norm K^(r)_{2,..,2}"
_TENSOR_W = "Hatami: tensor products of weakly norming hypergraphs are weakly norming"
_TENSOR_D = "Conlon-Lee: G (x) K_{m,m} is dominating for dominating G"


@lru_cache(maxsize=None)
def catalog_dominating(max_vertices: int = 64) -> tuple[CatalogEntry, ...]:
    """Known dominating hypergraphs (every weakly norming one is dominating),
    with literature provenance, up to ``max_vertices`` vertices."""
    from .constructions import complete_partite, cycle, hypercube, k_mm, tensor_product, torus

    out: list[CatalogEntry] = []
    base: list[CatalogEntry] = []
    for L in range(2, max_vertices // 2 + 1):
        base.append(CatalogEntry(f"C_{2 * L}", cycle(2 * L), "norming", _HATAMI))
    for d in range(1, 7):
        if 2 ** d <= max_vertices:
            base.append(CatalogEntry(f"Q_{d}", hypercube(d), "weakly norming", _HATAMI))
    for s in range(1, 6):
        for t in range(s, 6):
            if s + t <= max_vertices:
                base.append(CatalogEntry(f"K_{{{s},{t}}}", k_mm(s, t), "weakly norming", _HATAMI))
    out.extend(base)
    for r in (3, 4):
        for sizes in product(range(1, 4), repeat=r):
            if list(sizes) == sorted(sizes) and sum(sizes) <= max_vertices:
                kind = "norming"
                prov = _GOWERS if set(sizes) == {2} else _HATAMI
                out.append(CatalogEntry(f"K^({r})_{sizes}", complete_partite(*sizes), kind, prov))
    for k in range(2, 5):
        if 4 * k * k <= max_vertices:
            out.append(CatalogEntry(f"T_{k}", torus(k), "weakly norming", "tensor of even cycles; " + _TENSOR_W))
    small = [b for b in base if b.hypergraph.n <= 8 and b.hypergraph.e >= 2]
    for a, b in combinations_with_replacement(small, 2):
        if a.hypergraph.n * b.hypergraph.n <= max_vertices:
            kind, prov = "weakly norming", _TENSOR_W
            if b.name.startswith("K_{") and a.kind != "weakly norming":
                prov = _TENSOR_D
            out.append(CatalogEntry(f"{a.name} (x) {b.name}", tensor_product(a.hypergraph, b.hypergraph), kind, prov))
    return tuple(out)


@lru_cache(maxsize=None)
def _catalog_index(max_vertices: int = 64) -> dict[tuple, list[CatalogEntry]]:
    idx: dict[tuple, list[CatalogEntry]] = {}
    for ent in catalog_dominating(max_vertices):
        h = ent.hypergraph
        idx.setdefault((h.r, h.n, h.e), []).append(ent)
    return idx


def is_complete_partite(F: Hypergraph) -> bool:
    """Edges are exactly all transversals of some partition into ``r``
    nonempty classes (isolated vertices ignored)."""
    G, _ = induced(F, F.covered_vertices())
    if G.e == 0:
        return False
    # same class <=> never together in an edge
    together = [set() for _ in range(G.n)]
    for e in G.edges:
        for x in e:
            together[x].update(e)
    classes: list[list[int]] = []
    for v in range(G.n):
        for cls in classes:
            if cls[0] not in together[v]:
                if any(w in together[v] for w in cls):
                    return False
                cls.append(v)
                break
        else:
            classes.append([v])
    if len(classes) != G.r:
        return False
    size = 1
    for cls in classes:
        size *= len(cls)
    return size == G.e


def _is_even_cycle(G: Hypergraph) -> bool:
    return (G.r == 2 and G.n >= 4 and G.n % 2 == 0 and G.e == G.n
            and all(G.degree(v) == 2 for v in range(G.n)) and len(component_vertex_sets(G)) == 1)


def _is_tree(G: Hypergraph) -> bool:
    return G.r == 2 and G.e == G.n - 1 and len(component_vertex_sets(G)) == 1


def dominating_provenance(M: Hypergraph) -> str | None:
    """Why ``M`` is known to be dominating, or None when the catalogue does
    not cover it. Isolated vertices are ignored."""
    G, _ = induced(M, M.covered_vertices())
    if G.e == 0:
        return None
    if G.r == 1:
        return "1-graphs: densities factorise over edges"
    if G.e == 1:
        return "single edge (only sub-hypergraph with an edge is itself)"
    if is_complete_partite(G):
        return "complete r-partite: " + _HATAMI
    if _is_even_cycle(G):
        return "even cycle: " + _HATAMI
    for ent in _catalog_index().get((G.r, G.n, G.e), []):
        if is_isomorphic(G, ent.hypergraph):
            return f"{ent.name}: {ent.provenance}"
    return None


def sidorenko_provenance(S: Hypergraph) -> str | None:
    """Why ``S`` is known to be Sidorenko (dominating ones included)."""
    G, _ = induced(S, S.covered_vertices())
    if G.e == 0:
        return "edgeless"
    if G.r == 1:
        return "every 1-graph is Sidorenko"
    if _is_tree(G):
        return "tree (Sidorenko)"
    comps = component_vertex_sets(G)
    if len(comps) > 1:
        parts = [sidorenko_provenance(induced(G, c)[0]) for c in comps]
        if all(parts):
            return "disjoint union of Sidorenko components"
        return None
    dom = dominating_provenance(G)
    return f"dominating ({dom})" if dom else None

"""Instance-level trace of the counting argument behind the unified bound.

For a host ``H`` the trace classifies maps of each non-leading link as
rare, vertices of ``H`` as bad or good, and homomorphisms of ``M`` into a
good vertex's downward hypergraph as rich. It then re-evaluates, with exact
rationals, the two claims and the chain of inequalities that ends in
``t_F(H) >= c * t_K(H)^s`` with ``c = (1/4) (2t)^{-t e(M)}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Iterable

from .bounds import HomRatioCheck, hom_ratio_check, validate_unified
from .hom import BudgetExceeded, complete_density, count_homomorphisms, homomorphisms
from .hypergraph import Hypergraph, downward_hypergraph, induced

__all__ = ["ProofTrace", "proof_trace"]


@dataclass
class ProofTrace:
    host: Hypergraph
    s: int
    t: int
    e_M: int
    d: tuple[int, ...]  # d_M(V(M_i)), i = 1..t
    t_K: Fraction
    thresholds: tuple[Fraction, ...]  # rare thresholds for i = 2..t
    rare_count: tuple[int, ...]  # number of rare maps per i
    Z: tuple[int, ...]  # Z^(i)
    Z_u: tuple[tuple[int, ...], ...]  # Z_u^(i) per vertex u
    Z_bound: tuple[Fraction, ...]  # threshold * n^{v(M_i)}
    hom_M_down: tuple[int, ...]  # hom(M, D_H(v)) per vertex v
    rare_ext: tuple[tuple[int, ...], ...]  # per i, per v: #{phi : phi|M_i rare}
    bad: tuple[frozenset[int], ...]
    good: frozenset[int]
    rich: dict[int, int]
    claim1_lhs: Fraction
    claim1_rhs: Fraction
    hom_F: int
    c: Fraction
    final_rhs: Fraction  # c * t_K^s * n^{v(F)}
    chain: list[tuple[str, Fraction]] = field(default_factory=list)
    ratio_checks: list[tuple[int, int, HomRatioCheck]] = field(default_factory=list)

    @property
    def claim1(self) -> bool:
        return self.claim1_lhs >= self.claim1_rhs

    @property
    def claim2(self) -> bool:
        return all(2 * self.rich[u] >= self.hom_M_down[u] for u in self.good)

    @property
    def z_identity(self) -> bool:
        return all(z == sum(zu) for z, zu in zip(self.Z, self.Z_u))

    @property
    def z_bound(self) -> bool:
        return all(z <= b for z, b in zip(self.Z, self.Z_bound))

    @property
    def final(self) -> bool:
        return self.hom_F >= self.final_rhs

    @property
    def chain_ok(self) -> bool:
        vals = [v for _, v in self.chain]
        return all(a >= b for a, b in zip(vals, vals[1:]))

    @property
    def lemmas_ok(self) -> bool:
        return all(chk.holds for _, _, chk in self.ratio_checks)

    @property
    def verified(self) -> bool:
        return (self.claim1 and self.claim2 and self.z_identity and self.z_bound
                and self.final and self.chain_ok and self.lemmas_ok)


def proof_trace(F: Hypergraph, M: Hypergraph, H: Hypergraph, case: str = "dominating",
                assume: Iterable[str] = (), part: int | None = None,
                budget: int = 5_000_000, lemma_checks: bool = True) -> ProofTrace:
    """Run the counting argument on ``H``. ``F``, ``M``, ``case`` and
    ``assume`` are as in :func:`bound_unified`. ``budget`` caps the number
    of maps enumerated."""
    data = validate_unified(F, M, case, assume, part)
    F = data.F
    if H.r != F.r:
        raise ValueError("host uniformity differs from F")
    n, t = H.n, data.t
    Mc, names = induced(data.M, data.M.covered_vertices())
    pos = {x: i for i, x in enumerate(names)}
    eM = Mc.e
    tK = complete_density(H)
    two_t = Fraction(2 * t)
    spent = 0

    def charge(k: int) -> None:
        nonlocal spent
        spent += k
        if spent > budget:
            raise BudgetExceeded(f"trace needs more than {budget} map visits")

    # compact link i on M's vertex positions
    subs = []
    for L in data.links:
        vs = sorted(pos[x] for x in L.covered_vertices())
        subs.append((vs, [tuple(pos[x] for x in e) for e in L.edges]))

    edge_set = H.edge_set
    nbr_cache: dict[tuple, int] = {}

    def common_nbrs(edges_img: list[tuple[int, ...]]) -> int:
        key = tuple(sorted(edges_img))
        if key not in nbr_cache:
            cnt = 0
            for u in range(n):
                if all(u not in f and tuple(sorted(f + (u,))) in edge_set for f in edges_img):
                    cnt += 1
            nbr_cache[key] = cnt
        return nbr_cache[key]

    thresholds, rare_sets, Zs, Z_us, Z_bounds, rare_counts = [], [], [], [], [], []
    for i in range(1, t):
        vs, es = subs[i]
        thr = two_t ** -eM * tK ** data.d[i] * n
        thresholds.append(thr)
        charge(n ** len(vs))
        rare = {}
        z_u = [0] * n
        for img in product(range(n), repeat=len(vs)):
            m = dict(zip(vs, img))
            imgs = [tuple(m[x] for x in e) for e in es]
            if any(len(set(f)) < len(f) for f in imgs):
                continue  # not a homomorphism into the complete (r-1)-graph
            k = common_nbrs(imgs)
            if k <= thr:
                rare[img] = k
                for u in range(n):
                    if all(u not in f and tuple(sorted(f + (u,))) in edge_set for f in imgs):
                        z_u[u] += 1
        rare_sets.append((vs, rare))
        rare_counts.append(len(rare))
        Zs.append(sum(rare.values()))
        Z_us.append(tuple(z_u))
        Z_bounds.append(thr * n ** len(vs))

    hom_down, rare_ext = [], [[0] * n for _ in range(t - 1)]
    rich: dict[int, int] = {}
    sum_all_rich_weight = Fraction(0)  # sum over good v and rich phi of prod N_H
    sum_all_weight = Fraction(0)  # same over all phi
    good_hom_sum = 0
    per_vertex = []
    for v in range(n):
        D = downward_hypergraph(H, v)
        per_phi = []
        for phi in homomorphisms(Mc, D):
            charge(1)
            flags = []
            w = 1
            for i in range(1, t):
                vs, rare = rare_sets[i - 1]
                key = tuple(phi[x] for x in vs)
                flags.append(key in rare)
                w *= common_nbrs([tuple(phi[x] for x in e) for e in subs[i][1]])
            per_phi.append((flags, w))
        hom_down.append(len(per_phi))
        for flags, _ in per_phi:
            for i, f in enumerate(flags):
                if f:
                    rare_ext[i][v] += 1
        per_vertex.append(per_phi)
    bad = tuple(frozenset(v for v in range(n) if two_t * rare_ext[i][v] >= hom_down[v])
                for i in range(t - 1))
    good = frozenset(range(n)) - frozenset().union(*bad) if bad else frozenset(range(n))
    for v in sorted(good):
        cnt = 0
        for flags, w in per_vertex[v]:
            sum_all_weight += w
            if not any(flags):
                cnt += 1
                sum_all_rich_weight += w
        rich[v] = cnt
        good_hom_sum += hom_down[v]

    def t_low(v: int) -> Fraction:
        D = downward_hypergraph(H, v)
        return complete_density(D) if n else Fraction(0)

    tl = {v: t_low(v) for v in range(n)}
    claim1_lhs = sum((tl[v] for v in good), Fraction(0))
    claim1_rhs = Fraction(1, 2) * tK * n
    hom_F = count_homomorphisms(F, H)
    s = data.s
    c = Fraction(1, 4) * two_t ** (-t * eM)
    final_rhs = c * tK ** s * n ** F.n

    # the chain from hom(F, H) down to the final bound, with exact values
    iso = F.n - Mc.n - t  # vertices of F outside V(M) and the class
    scale = Fraction(n) ** iso
    s_rest = sum(data.d[1:])
    thr_prod = prod(thresholds, start=Fraction(1))
    common = two_t ** (-t * eM) * tK ** s_rest
    chain = [
        ("hom(F,H)", Fraction(hom_F)),
        ("sum over good v, all phi", scale * sum_all_weight),
        ("sum over good v, rich phi", scale * sum_all_rich_weight),
        ("rich phi weighted by thresholds", scale * thr_prod * sum(rich.values())),
        ("with (2t)^{-t e(M)}", scale * common * n ** (t - 1) * sum(rich.values())),
        ("claim 2", scale * Fraction(1, 2) * common * n ** (t - 1) * good_hom_sum),
        ("M is Sidorenko", scale * Fraction(1, 2) * common * Fraction(n) ** (Mc.n + t - 1)
         * sum((tl[v] ** eM for v in good), Fraction(0))),
        ("convexity", scale * Fraction(1, 2) * common * Fraction(n) ** (Mc.n + t)
         * (claim1_lhs / n) ** eM if n else Fraction(0)),
        ("claim 1", scale * Fraction(1, 2) * common * Fraction(n) ** (Mc.n + t)
         * (Fraction(1, 2) * tK) ** eM),
    ]
    checks: list[tuple[int, int, HomRatioCheck]] = []
    if lemma_checks:
        mode = "components" if case == "sidorenko-components" else "dominating"
        for v in range(n):
            D = downward_hypergraph(H, v)
            if D.e == 0:
                continue
            for i in range(1, t):
                sub = [tuple(pos[x] for x in e) for e in data.links[i].edges]
                try:
                    chk = hom_ratio_check(Mc, sub, D, mode, assume=assume)
                except ValueError:
                    continue  # zero denominator, the ratio is undefined
                checks.append((v, i + 1, chk))
    return ProofTrace(
        H, s, t, eM, data.d, tK, tuple(thresholds), tuple(rare_counts), tuple(Zs),
        tuple(Z_us), tuple(Z_bounds), tuple(hom_down), tuple(tuple(x) for x in rare_ext),
        bad, good, rich, claim1_lhs, claim1_rhs, hom_F, c, final_rhs, chain, checks,
    )

"""Upper bounds on the Sidorenko exponent from link profiles.

Every function returns a :class:`BoundCertificate` whose transcript lists
the checks that were run. Properties the code cannot decide (a graph being
Sidorenko or dominating) are taken from the literature catalogue or from
explicit user assertions, and are written into ``assumptions``.

The container ``M`` is always given on the parent's vertex names, and
containment of a link in ``M`` is literal (labelled), so ``d_M(V(L))`` is
well defined.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .domination import dominating_provenance, sidorenko_provenance
from .hom import complete_density, count_homomorphisms, find_embedding
from .hypergraph import (
    Hypergraph,
    PartiteHypergraph,
    boundary_degree,
    component_vertex_sets,
    find_partition,
    induced,
    link_profile,
    remove_vertices,
)

__all__ = [
    "HypothesisError",
    "BoundCertificate",
    "bound_unified",
    "bound_tight_cycle",
    "bound_sparse",
    "bound_grid_links",
    "lift_bound",
    "certify_lift",
    "HomRatioCheck",
    "hom_ratio_check",
    "validate_unified",
    "UnifiedData",
]


class HypothesisError(ValueError):
    """A machine-checkable hypothesis of a bound failed."""


@dataclass
class BoundCertificate:
    theorem: str
    bound: Fraction
    inputs: dict = field(default_factory=dict)
    transcript: list[str] = field(default_factory=list)
    assumptions: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def __str__(self) -> str:
        lines = [f"theorem: {self.theorem}", f"bound: s(F) <= {self.bound}"]
        lines += [f"  check: {t}" for t in self.transcript]
        lines += [f"  assumption: {a}" for a in self.assumptions]
        for k, v in self.extra.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _as_partite(F: Hypergraph) -> PartiteHypergraph:
    if isinstance(F, PartiteHypergraph):
        return F
    P = find_partition(F)
    if P is None:
        raise HypothesisError("F is not r-partite")
    return P


def _on_parent(M: Hypergraph, n: int) -> Hypergraph:
    if M.n > n:
        raise HypothesisError("M names vertices outside F")
    return Hypergraph(M.r, n, M.edges)


@dataclass(frozen=True)
class UnifiedData:
    F: PartiteHypergraph
    M: Hypergraph  # on F's vertex names
    part: int
    anchors: tuple[int, ...]  # anchors[0] has link exactly M
    links: tuple[Hypergraph, ...]  # links on F's vertex names, same order
    d: tuple[int, ...]  # d_M(V(L_i))
    case: str
    assumptions: tuple[str, ...]
    transcript: tuple[str, ...]

    @property
    def s(self) -> int:
        return sum(self.d)

    @property
    def t(self) -> int:
        return len(self.links)


def _case1(M: Hypergraph, links, anchors, assume: set[str], transcript, assumptions) -> None:
    comps = [c for c in component_vertex_sets(M) if any(M.incidence[x] for x in c)]
    comp_of = {x: i for i, c in enumerate(comps) for x in c}
    for i, c in enumerate(comps):
        S, _ = induced(M, c)
        why = sidorenko_provenance(S)
        if why is None:
            if "sidorenko" not in assume:
                raise HypothesisError(
                    f"component {i} of M (vertices {c}) is not in the Sidorenko catalogue; "
                    "assert it with assume={'sidorenko'}")
            why = "user assertion"
        assumptions.append(f"S_{i + 1} = M[{c}] is Sidorenko: {why}")
    for a, L in zip(anchors, links):
        used = {comp_of[x] for x in L.covered_vertices()}
        want = {e for e in M.edges if comp_of[e[0]] in used}
        if set(L.edges) != want:
            raise HypothesisError(f"link of {a} is not a disjoint union of components of M")
        transcript.append(f"link of {a} = union of components {sorted(j + 1 for j in used)}")


def validate_unified(F: Hypergraph, M: Hypergraph, case: str = "dominating",
                     assume: Iterable[str] = (), part: int | None = None) -> UnifiedData:
    """Check every hypothesis of the unified link-profile bound."""
    if case not in ("sidorenko-components", "dominating"):
        raise ValueError(f"unknown case {case!r}")
    F = _as_partite(F)
    part = F.r if part is None else part
    if M.r != F.r - 1:
        raise HypothesisError(f"M must be {F.r - 1}-uniform")
    M = _on_parent(M, F.n)
    assume = set(assume)
    transcript: list[str] = []
    assumptions: list[str] = []
    profile = link_profile(F, part)
    if not len(profile):
        raise HypothesisError(f"class {part} is empty")
    links = [ent.in_parent(F.n) for ent in profile]
    anchors = [ent.anchor for ent in profile]
    first = next((i for i, L in enumerate(links) if L.edge_set == M.edge_set), None)
    if first is None:
        raise HypothesisError("no vertex of the designated class has link equal to M")
    order = [first] + [i for i in range(len(links)) if i != first]
    links = [links[i] for i in order]
    anchors = [anchors[i] for i in order]
    transcript.append(f"L_F({anchors[0]}) = M ({M.e} edges)")
    for a, L in zip(anchors, links):
        extra = sorted(L.edge_set - M.edge_set)
        if extra:
            raise HypothesisError(f"link of vertex {a} is not inside M: offending edges {extra}")
    transcript.append(f"all {len(links)} links of class {part} lie inside M")
    if case == "sidorenko-components":
        _case1(M, links, anchors, assume, transcript, assumptions)
    else:
        why = dominating_provenance(M)
        if why is None:
            if "dominating" not in assume:
                raise HypothesisError("M is not in the dominating catalogue; assert it with assume={'dominating'}")
            why = "user assertion"
        assumptions.append(f"M is dominating: {why}")
    d = tuple(boundary_degree(M, L.covered_vertices()) for L in links)
    transcript.append("d_M(V(L_i)) = " + " + ".join(map(str, d)) + f" = {sum(d)}")
    if case == "sidorenko-components":
        if sum(d) != F.e:
            raise AssertionError("disjoint-link identity failed: hypothesis validation is inconsistent")
        transcript.append(f"disjoint-link identity: sum of d_M = e(F) = {F.e}")
    return UnifiedData(F, M, part, tuple(anchors), tuple(links), d, case,
                       tuple(assumptions), tuple(transcript))


def bound_unified(F: Hypergraph, M: Hypergraph, case: str = "dominating",
                  assume: Iterable[str] = (), part: int | None = None) -> BoundCertificate:
    """``s(F) <= sum_i d_M(V(L_F(v_i)))`` for a link profile headed by ``M``.

    ``case`` is ``"sidorenko-components"`` (M a disjoint union of Sidorenko
    graphs, each link a union of its components) or ``"dominating"``.
    """
    data = validate_unified(F, M, case, assume, part)
    tag = "unified-case-1" if case == "sidorenko-components" else "unified-case-2"
    return BoundCertificate(
        tag, Fraction(data.s),
        inputs={"F": data.F, "M": data.M, "part": data.part, "case": case},
        transcript=list(data.transcript), assumptions=list(data.assumptions),
        extra={"d_M": list(data.d), "anchors": list(data.anchors), "e(F)": data.F.e},
    )


def bound_tight_cycle(ell: int) -> BoundCertificate:
    """``s(C^{(3)}_{3l}) <= 7l``, via the apex augmentation with
    ``M = C_{2l}``. The headline is ``7l``; the instance-exact sum is in
    ``extra``."""
    from .constructions import apex_augment, tight_cycle

    if ell < 2:
        raise ValueError("ell must be >= 2")
    F = tight_cycle(3, 3 * ell)
    profile = link_profile(F, 3)
    M = profile.union(F.n)
    Mc, _ = induced(M, M.covered_vertices())
    if not (Mc.n == 2 * ell and Mc.e == 2 * ell and all(Mc.degree(v) == 2 for v in range(Mc.n))
            and len(component_vertex_sets(Mc)) == 1):
        raise AssertionError("union of links is not a cycle of length 2l")
    for ent in profile:
        if ent.link.e != 3 or ent.link.n != 4:
            raise AssertionError("a link is not a path with 3 edges")
    Fp = apex_augment(F, M, 3)
    cert = bound_unified(Fp, M, "dominating")
    exact = cert.bound
    cert.theorem = "tight-cycle"
    cert.bound = Fraction(7 * ell)
    cert.inputs = {"ell": ell, "F": F, "F_aug": Fp, "M": M}
    cert.transcript[:0] = [
        f"F = C^(3)_{3 * ell}; union of class-3 links is C_{2 * ell}; each link is a 3-edge path",
        f"F is a sub-hypergraph of F' = F + apex with link C_{2 * ell}, so s(F) <= s(F')",
    ]
    cert.extra.update({
        "formula": f"2l + 5l = {2 * ell} + {5 * ell} = {7 * ell}",
        "instance_exact": exact,
    })
    return cert


def bound_sparse(F: Hypergraph) -> BoundCertificate:
    """``s(F) <= 2c * v(F)^{r-1}`` with ``c = e(F)/v(F)``."""
    P = _as_partite(F)
    iso = P.isolated_vertices()
    if iso:
        raise HypothesisError(f"F has isolated vertices {iso}")
    if P.n == 0:
        raise HypothesisError("F is empty")
    c = Fraction(P.e, P.n)
    b = 2 * c * P.n ** (P.r - 1)
    return BoundCertificate(
        "sparse", b, inputs={"F": P},
        transcript=[f"F is {P.r}-partite with class sizes {P.part_sizes()}", "no isolated vertices",
                    f"c = e/v = {P.e}/{P.n} = {c}", f"2c * v^(r-1) = 2 * {c} * {P.n}^{P.r - 1} = {b}"],
    )


def bound_grid_links(F: Hypergraph, k: int, part: int | None = None) -> BoundCertificate:
    """``s(F) <= 8e(F) + 8k^2`` when the union of one class's links embeds in
    the ``k x k`` grid (3-uniform ``F``)."""
    from .constructions import grid, grid_embedding, torus

    P = _as_partite(F)
    if P.r != 3:
        raise HypothesisError("F must be 3-uniform")
    if k < 2:
        raise ValueError("k must be >= 2")
    part = P.r if part is None else part
    U = link_profile(P, part).union(P.n)
    Uc, names = induced(U, U.covered_vertices())
    G = grid(k)
    phi = find_embedding(Uc, G)
    if phi is None:
        raise HypothesisError(f"the union of links does not embed in G_{k}")
    psi = grid_embedding(k)
    T = torus(k)
    # composite map: parent vertex -> vertex of T_k
    where = {names[i]: psi[phi[i]] for i in range(Uc.n)}
    inst = 8 * k * k + sum(
        boundary_degree(T, {where[x] for x in ent.names}) for ent in link_profile(P, part))
    b = 8 * P.e + 8 * k * k
    return BoundCertificate(
        "grid-links", Fraction(b), inputs={"F": P, "k": k, "part": part},
        transcript=[
            f"union of class-{part} links ({Uc.e} edges) embeds in G_{k}: {dict(enumerate(phi))}",
            f"G_{k} embeds in T_{k} = C_{2 * k} (x) C_{2 * k} (4-regular, {T.n} vertices) via U: {psi}",
            f"F lies in F' = F + apex with link T_{k}; T_{k} is dominating",
            f"8e(F) + 8k^2 = 8*{P.e} + 8*{k * k} = {b}",
        ],
        assumptions=[f"T_{k} is dominating: {dominating_provenance(T) or 'tensor of even cycles'}"],
        extra={"instance_exact": Fraction(inst), "grid_embedding": psi},
    )


def lift_bound(s_F, *ts: int, e_F: int | None = None) -> Fraction:
    """``s(F(t_1,..,t_l)) <= s_F * t_1 * ... * t_l``."""
    s_F = Fraction(s_F)
    if e_F is not None and s_F < e_F:
        raise ValueError("an upper bound on s(F) is at least e(F)")
    if any(t < 1 for t in ts):
        raise ValueError("lift sizes must be >= 1")
    return s_F * prod(ts)


def certify_lift(F: Hypergraph, s_F, *ts: int, source: str = "user assertion") -> BoundCertificate:
    b = lift_bound(s_F, *ts, e_F=F.e)
    return BoundCertificate(
        "lift", b, inputs={"F": F, "s_F": Fraction(s_F), "t": list(ts)},
        transcript=[f"s(F) <= {Fraction(s_F)} ({source})", f"each lift multiplies the bound by t: {list(ts)}"],
        assumptions=[f"s(F) <= {Fraction(s_F)}: {source}"],
    )


@dataclass(frozen=True)
class HomRatioCheck:
    holds: bool
    hom_M: int
    hom_rest: int  # hom(M - V(M'), H)
    d: int  # d_M(V(M'))
    v: int  # v(M')
    lhs: Fraction
    rhs: Fraction
    assumption: str


def hom_ratio_check(M: Hypergraph, sub: Hypergraph | Sequence[Sequence[int]], H: Hypergraph,
                    mode: str = "dominating", assume: Iterable[str] = ()) -> HomRatioCheck:
    """``hom(M,H) / hom(M - V(M'), H) >= t_K(H)^{d_M(V(M'))} n^{v(M')}``.

    ``sub`` is ``M'`` as a set of edges of ``M`` (or a hypergraph on ``M``'s
    names); ``V(M')`` is the set of vertices it covers.
    """
    edges = sub.edges if isinstance(sub, Hypergraph) else tuple(tuple(sorted(e)) for e in sub)
    if not set(edges) <= M.edge_set:
        raise ValueError("M' is not a sub-hypergraph of M")
    if M.r != H.r:
        raise ValueError("uniformity mismatch between M and H")
    VS = sorted({x for e in edges for x in e})
    assume = set(assume)
    if mode == "components":
        closed = set()
        for c in component_vertex_sets(M):
            if set(c) & set(VS):
                closed.update(c)
        if closed != set(VS) or set(edges) != {e for e in M.edges if e[0] in closed}:
            raise ValueError("M' is not a union of connected components of M")
        whys = [sidorenko_provenance(induced(M, c)[0]) for c in component_vertex_sets(M) if set(c) <= closed]
        if not all(whys) and "sidorenko" not in assume:
            raise ValueError("a component of M' is not in the Sidorenko catalogue")
        note = "components of M' are Sidorenko"
    elif mode == "dominating":
        why = dominating_provenance(M)
        if why is None and "dominating" not in assume:
            raise ValueError("M is not in the dominating catalogue")
        note = f"M is dominating: {why or 'user assertion'}"
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rest, _ = remove_vertices(M, VS)
    hom_M = count_homomorphisms(M, H)
    hom_rest = count_homomorphisms(rest, H)
    if hom_rest == 0:
        raise ValueError("hom(M - V(M'), H) = 0")
    d = boundary_degree(M, VS)
    lhs = Fraction(hom_M, hom_rest)
    rhs = complete_density(H) ** d * H.n ** len(VS)
    return HomRatioCheck(lhs >= rhs, hom_M, hom_rest, d, len(VS), lhs, rhs, note)

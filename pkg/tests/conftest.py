import random
from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sidorenko.constructions import cycle, disjoint_edges, k_mm
from sidorenko.hypergraph import Hypergraph, PartiteHypergraph, component_vertex_sets, find_partition

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, r=2, min_n=0, max_n=5, max_edges=None):
    n = draw(st.integers(min_n, max_n))
    slots = list(combinations(range(n), r))
    if max_edges is not None and len(slots) > max_edges:
        edges = draw(st.lists(st.sampled_from(slots), max_size=max_edges, unique=True)) if slots else []
    else:
        edges = [e for e, keep in zip(slots, draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))) if keep]
    return Hypergraph(r, n, tuple(edges))


def random_host(rng: random.Random, r: int, n: int, p: float | None = None) -> Hypergraph:
    p = rng.random() if p is None else p
    return Hypergraph(r, n, tuple(e for e in combinations(range(n), r) if rng.random() < p))


APEX_M = {"C4": cycle(4), "C6": cycle(6), "K22": k_mm(2), "2K2": disjoint_edges(2)}


def apex_instance(seed: int):
    """A seeded 3-partite F whose last class has one vertex with link M and
    up to two more with links inside M, plus a random 3-graph host."""
    rng = random.Random(seed)
    name = rng.choice(sorted(APEX_M))
    M = APEX_M[name]
    P = find_partition(M)
    m = M.n
    case = "sidorenko-components" if name == "2K2" else "dominating"
    t = rng.randint(1, 3)
    edges = [e + (m,) for e in M.edges]
    comps = component_vertex_sets(M)
    for j in range(1, t):
        if case == "dominating":
            sub = rng.sample(M.edges, rng.randint(1, M.e))
        else:
            cs = [c for c in comps if rng.random() < 0.5] or [rng.choice(comps)]
            sub = [e for e in M.edges if any(e[0] in c for c in cs)]
        edges += [e + (m + j,) for e in sub]
    F = PartiteHypergraph(3, m + t, tuple(edges), P.parts + (3,) * t)
    H = random_host(rng, 3, rng.randint(5, 8), rng.uniform(0.3, 0.9))
    return name, case, F, M, H

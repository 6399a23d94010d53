from itertools import combinations, permutations

import pytest

from sidorenko.constructions import (
    apex_augment,
    build,
    catalog,
    complete_partite,
    cycle,
    disjoint_edges,
    grid,
    grid_embedding,
    hypercube,
    lift,
    lift_chain,
    loose_triangle,
    path,
    tensor_power,
    tensor_product,
    tight_cycle,
    torus,
)
from sidorenko.hom import count_homomorphisms
from sidorenko.hypergraph import Hypergraph, induced, is_isomorphic, link_profile


def tensor_brute(A, B):
    pairs = [(a, b) for a in range(A.n) for b in range(B.n)]
    edges = set()
    for S in combinations(range(len(pairs)), A.r):
        xs = [pairs[i][0] for i in S]
        ys = [pairs[i][1] for i in S]
        if len(set(xs)) == A.r and len(set(ys)) == A.r and A.has_edge(xs) and B.has_edge(ys):
            edges.add(S)
    return Hypergraph(A.r, len(pairs), tuple(edges))


def test_counts():
    assert complete_partite(2, 3, 2).e == 12
    assert tight_cycle(3, 9).e == 9
    assert hypercube(3).e == 12
    assert grid(3).e == 12
    assert loose_triangle().e == 3
    assert disjoint_edges(3, 3).n == 9


@pytest.mark.parametrize("A,B", [
    (cycle(4), path(2)),
    (complete_partite(1, 1, 1), tight_cycle(3, 6)),
    (tight_cycle(3, 4), complete_partite(1, 1, 2)),
])
def test_tensor_product_matches_definition(A, B):
    assert tensor_product(A, B).edge_set == tensor_brute(A, B).edge_set


def test_tensor_edge_count():
    from math import factorial
    for A, B in [(cycle(4), cycle(6)), (tight_cycle(3, 6), complete_partite(1, 2, 2))]:
        assert tensor_product(A, B).e == A.e * B.e * factorial(A.r)


def test_tensor_cap():
    with pytest.raises(ValueError, match="cap"):
        tensor_power(cycle(8), 5, max_vertices=4096)


def test_lift():
    L = lift(path(2), 2)
    assert (L.r, L.n, L.e) == (3, 5, 4)
    assert L.parts[-2:] == (3, 3)
    with pytest.raises(ValueError, match="partite"):
        lift(cycle(5), 1)
    assert lift_chain(path(1), 2, 3).e == 6


def test_apex_augment():
    F = tight_cycle(3, 6)
    M = link_profile(F).union(F.n)
    A = apex_augment(F, M)
    assert A.e == F.e + M.e and A.parts[-1] == 3
    with pytest.raises(ValueError, match="not inside M"):
        apex_augment(F, Hypergraph(2, 6, (M.edges[0],)))


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_grid_embedding(k):
    image = grid_embedding(k)
    T, G = torus(k), grid(k)
    assert len(set(image)) == k * k
    m = 2 * k
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            a, b = divmod(image[(i - 1) * k + j - 1], m)
            assert (a, b) == ((k + i - j - 1) % m, (i + j - 1) % m)
    sub, _ = induced(T, image)
    assert is_isomorphic(sub, G.base)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_torus_regular(k):
    T = torus(k)
    assert T.n == 4 * k * k
    assert all(T.degree(v) == 4 for v in range(T.n))


def test_small_grid_iso_bruteforce():
    sub, _ = induced(torus(2), grid_embedding(2))
    G = grid(2).base
    assert any(sub.relabel(p).edge_set == G.edge_set for p in permutations(range(4)))


def test_build_grammar():
    assert build("tight-cycle:3,6") == tight_cycle(3, 6)
    assert build("lift(cycle:4;3)").e == 12
    assert build("tensor(cycle:4;cycle:4)").n == 16
    assert build("power(edge:2;3)").n == 8
    assert build("links(tight-cycle:3,6)").e == 4
    assert build("apex(tight-cycle:3,6)").e == 10
    with pytest.raises(ValueError, match="unknown family"):
        catalog("nope")


def test_tensor_density_is_multiplicative_on_cycles():
    # hom counts multiply under tensor products
    H = tensor_product(cycle(4), path(2).base)
    for F in (cycle(4), path(3)):
        assert count_homomorphisms(F, H) == count_homomorphisms(F, cycle(4)) * count_homomorphisms(F, path(2).base)

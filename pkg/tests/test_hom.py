from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given

from sidorenko.constructions import complete, cycle, disjoint_union, path, tensor_power
from sidorenko.hom import (
    BudgetExceeded,
    Homomorphism,
    brute_force_count,
    classify,
    complete_density,
    count_homomorphisms,
    count_injective,
    density,
    factor_count,
    homomorphisms,
    restrict,
    tensor_density_identity,
)
from sidorenko.hypergraph import Hypergraph

from conftest import hypergraphs


def injective_brute(F, H):
    return sum(
        1 for img in permutations(range(H.n), F.n)
        if all(H.has_edge(img[x] for x in e) for e in F.edges)
    )


@given(hypergraphs(r=2, max_n=5), hypergraphs(r=2, min_n=1, max_n=5))
def test_count_matches_bruteforce_graphs(F, H):
    assert count_homomorphisms(F, H) == brute_force_count(F, H)


@given(hypergraphs(r=3, max_n=5), hypergraphs(r=3, min_n=1, max_n=5))
def test_count_matches_bruteforce_3graphs(F, H):
    assert count_homomorphisms(F, H) == brute_force_count(F, H)


@given(hypergraphs(r=2, max_n=4), hypergraphs(r=2, max_n=5))
def test_injective_matches_bruteforce(F, H):
    assert count_injective(F, H) == injective_brute(F, H)


@given(hypergraphs(r=3, max_n=5), hypergraphs(r=3, min_n=1, max_n=5))
def test_enumeration_lists_each_map_once(F, H):
    maps = list(homomorphisms(F, H))
    assert len(maps) == len(set(maps)) == count_homomorphisms(F, H)
    for phi in maps:
        Homomorphism(F, H, phi)  # validates


def test_reference_values():
    K3 = complete(3)
    assert count_homomorphisms(path(2), K3) == 12
    assert density(cycle(4), K3).value == Fraction(2, 9)
    assert count_homomorphisms(cycle(4), K3) == 18
    # hom(C_k, K_n) = (n-1)^k + (-1)^k (n-1)
    for k in (4, 5, 6):
        for n in (3, 4, 5):
            assert count_homomorphisms(cycle(k), complete(n)) == (n - 1) ** k + (-1) ** k * (n - 1)


def test_empty_and_isolated():
    H = complete(4)
    assert count_homomorphisms(Hypergraph(2, 0), H) == 1
    assert count_homomorphisms(Hypergraph(2, 3), H) == 64
    assert count_homomorphisms(path(1), Hypergraph(2, 4)) == 0


def test_components_multiply():
    F = disjoint_union(cycle(4), path(2))
    H = complete(4)
    whole, a, b = factor_count(F, [0, 1, 2, 3], H)
    assert whole == a * b == count_homomorphisms(cycle(4), H) * count_homomorphisms(path(2), H)
    with pytest.raises(ValueError, match="union of components"):
        factor_count(F, [0, 1], H)


def test_uniformity_mismatch():
    with pytest.raises(ValueError, match="uniformity"):
        count_homomorphisms(cycle(4), complete(4, 3))


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_homomorphisms(cycle(6), complete(8), budget=10)


def test_complete_density():
    assert complete_density(complete(3)) == Fraction(2, 3)
    assert complete_density(complete(4, 3)) == Fraction(3 * 2 * 4, 64)


def test_restrict_and_classify():
    F, H = cycle(4), complete(3)
    phi = Homomorphism(F, H, (0, 1, 0, 1))
    assert classify(phi) == "degenerate"
    assert phi.image().e == 1
    psi = restrict(phi, path(1), [0, 1])
    assert psi.assignment == (0, 1)
    assert classify(Homomorphism(F, complete(4), (0, 1, 2, 3))) == "proper"
    with pytest.raises(ValueError):
        restrict(phi, path(1), [0, 2])
    with pytest.raises(ValueError):
        Homomorphism(F, H, (0, 0, 1, 2))


@pytest.mark.parametrize("F,H,k", [
    (path(2), complete(3), 2),
    (cycle(4), path(2).base, 3),
    (complete(3, 3), complete(4, 3), 2),
])
def test_tensor_identity(F, H, k):
    lhs, rhs = tensor_density_identity(F, H, k)
    assert lhs.value == rhs
    # independent check on the materialised power with the brute-force counter
    if H.n ** k <= 9:
        G = tensor_power(H, k)
        assert Fraction(brute_force_count(F, G), G.n ** F.n) == rhs


def test_density_string():
    assert str(density(cycle(4), complete(3))) == "18/81 = 2/9"


def test_manual_product_count():
    # hom(P_2, H) = sum of squared degrees
    H = Hypergraph(2, 5, ((0, 1), (0, 2), (0, 3), (3, 4)))
    degs = [sum(v in e for e in H.edges) for v in range(H.n)]
    assert count_homomorphisms(path(2), H) == sum(d * d for d in degs)
    triples = product(range(5), repeat=3)
    assert brute_force_count(path(2), H) == sum(
        1 for a, b, c in triples if H.has_edge((a, b)) and H.has_edge((b, c)))

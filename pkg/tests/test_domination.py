import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sidorenko.constructions import complete, complete_partite, cycle, grid, k_mm, path, torus
from sidorenko.domination import (
    WeightedKernel,
    catalog_dominating,
    constant_kernel,
    csg_check,
    dominating_falsify,
    dominating_provenance,
    domination_check,
    is_complete_partite,
    kernel_density,
    kernel_density_bruteforce,
    kernel_of,
    random_kernel,
    root_sum_compare,
    sidorenko_provenance,
    weakly_norming_suite,
)
from sidorenko.hom import density
from sidorenko.hypergraph import Hypergraph

from conftest import hypergraphs

small_graphs = hypergraphs(r=2, max_n=4)


def kernels(r=2, signed=False):
    return st.builds(
        lambda seed, n: random_kernel(r, n, random.Random(seed), max_den=6, signed=signed),
        st.integers(0, 10**6), st.integers(1, 3),
    )


class TestKernel:
    def test_symmetric_keys(self):
        f = WeightedKernel(2, 3, {(1, 0): Fraction(1, 2)})
        assert f(0, 1) == f(1, 0) == Fraction(1, 2)
        assert f(2, 2) == 0

    def test_conflict(self):
        with pytest.raises(ValueError, match="conflicting"):
            WeightedKernel(2, 2, {(0, 1): 1, (1, 0): 2})

    def test_arithmetic(self):
        f = constant_kernel(2, 2, Fraction(1, 3))
        g = kernel_of(complete(2))
        h = f + g
        assert h(0, 1) == Fraction(4, 3) and h(0, 0) == Fraction(1, 3)
        assert f.scale(3)(1, 1) == 1
        assert WeightedKernel(2, 2, {(0, 1): -1}).absolute()(0, 1) == 1
        assert g.bounds == (0, 1)


class TestDensity:
    def test_reference_values(self):
        K3 = kernel_of(complete(3))
        assert kernel_density(path(1), K3) == Fraction(2, 3)
        assert kernel_density(cycle(4), K3) == Fraction(2, 9)
        assert kernel_density(cycle(4), constant_kernel(2, 4, Fraction(1, 2))) == Fraction(1, 16)

    @given(small_graphs, hypergraphs(r=2, min_n=1, max_n=4))
    def test_host_kernel_matches_host_density(self, F, H):
        assert kernel_density(F, kernel_of(H)) == density(F, H).value

    @given(small_graphs, kernels(signed=True))
    def test_matches_bruteforce(self, F, f):
        assert kernel_density(F, f, signed=True) == abs(kernel_density_bruteforce(F, f))
        assert kernel_density(F, f) == kernel_density_bruteforce(F, f, absolute=True)

    @given(hypergraphs(r=3, max_n=4), kernels(r=3))
    def test_matches_bruteforce_r3(self, F, f):
        assert kernel_density(F, f) == kernel_density_bruteforce(F, f)

    def test_uniformity_mismatch(self):
        with pytest.raises(ValueError, match="uniform"):
            kernel_density(cycle(4), constant_kernel(3, 2, 1))


class TestDomination:
    def test_c4_over_edge(self):
        chk = domination_check(cycle(4), path(1), complete(3))
        # t_C4 = 2/9, t_K2 = 2/3: (2/9)^1 >= (2/3)^4
        assert chk.holds and chk.lhs == Fraction(2, 9) and chk.rhs == Fraction(16, 81)

    def test_kernel_host(self):
        chk = domination_check(cycle(4), path(2), constant_kernel(2, 3, Fraction(1, 2)))
        assert chk.lhs == chk.rhs

    def test_not_a_subgraph(self):
        with pytest.raises(ValueError, match="sub-hypergraph"):
            domination_check(path(2), cycle(4), complete(3))

    def test_bad_embedding(self):
        with pytest.raises(ValueError, match="embedding"):
            domination_check(cycle(4), path(1), complete(3), embedding=[0, 2])

    def test_exhaustive_c4(self):
        rep = dominating_falsify(cycle(4), max_host_n=4)
        assert not rep.found and rep.exhausted

    def test_path_of_three_edges_is_not_dominating(self):
        # P_4 fails against its middle edge pair on a star plus edge
        rep = dominating_falsify(path(3), max_host_n=5)
        assert rep.found
        cx = rep.counterexample
        h = kernel_of(cx.host)
        a = kernel_density_bruteforce(cx.pattern, h) ** cx.sub.e
        b = kernel_density_bruteforce(cx.sub, h) ** cx.pattern.e
        assert a < b


class TestCSG:
    def test_single_colour_is_equality(self):
        f = random_kernel(2, 3, random.Random(4))
        chk = csg_check(cycle(4), [1, 1, 1, 1], [f])
        assert chk.holds and chk.lhs ** 4 == chk.rhs_power

    @given(st.integers(0, 10**6))
    def test_csg_holds_on_c4(self, seed):
        rng = random.Random(seed)
        fs = [random_kernel(2, 3, rng, max_den=5) for _ in range(4)]
        col = [rng.randint(1, 4) for _ in range(4)]
        chk = csg_check(cycle(4), col, fs)
        assert chk.holds
        assert chk.lhs == kernel_density_bruteforce(cycle(4), [fs[c - 1] for c in col])

    def test_mapping_and_errors(self):
        f = constant_kernel(2, 2, 1)
        assert csg_check(path(1), [7], {7: f}).holds
        with pytest.raises(ValueError, match="colour"):
            csg_check(path(1), [2], [f])
        with pytest.raises(ValueError, match="nonnegative"):
            csg_check(path(1), [1], [WeightedKernel(2, 2, {(0, 1): -1})])


class TestRootCompare:
    @pytest.mark.parametrize("a,b,c,k,want", [
        (Fraction(4), Fraction(1), Fraction(1), 2, -1),   # 2 <= 1 + 1
        (Fraction(5), Fraction(1), Fraction(1), 2, 1),
        (Fraction(0), Fraction(3), Fraction(2), 3, -1),
        (Fraction(2), Fraction(0), Fraction(1), 4, 1),
    ])
    def test_exact_cases(self, a, b, c, k, want):
        assert root_sum_compare(a, b, c, k) == want

    @given(st.fractions(0, 10, max_denominator=50), st.fractions(0, 10, max_denominator=50),
           st.fractions(0, 10, max_denominator=50), st.integers(1, 5))
    def test_agrees_with_floats_away_from_ties(self, a, b, c, k):
        lhs, rhs = float(a) ** (1 / k), float(b) ** (1 / k) + float(c) ** (1 / k)
        v = root_sum_compare(a, b, c, k)
        if abs(lhs - rhs) > 1e-9:
            assert v == (1 if lhs > rhs else -1)

    def test_tie_detected(self):
        # sqrt(8) = sqrt(2) + sqrt(2), neither side rational
        assert root_sum_compare(Fraction(8), Fraction(2), Fraction(2), 2) in (-1, 0)


class TestNorming:
    def test_c4_passes(self):
        rep = weakly_norming_suite(cycle(4), 40, seed=1)
        assert rep.passed and rep.trials == 40

    def test_triangle_fails_quickly(self):
        rep = weakly_norming_suite(complete(3), 200, seed=0)
        assert not rep.passed
        cx = rep.counterexample
        assert root_sum_compare(cx.norm_sum, cx.norm_f, cx.norm_g, 3) == 1

    def test_replay_is_deterministic(self):
        a = weakly_norming_suite(path(3), 200, seed=3)
        b = weakly_norming_suite(path(3), 200, seed=3)
        assert a.trials == b.trials
        assert a.counterexample.trial == b.counterexample.trial


class TestCatalogue:
    def test_entries(self):
        names = {e.name for e in catalog_dominating()}
        assert {"C_4", "C_6", "Q_3", "K_{2,2}", "T_2"} <= names

    def test_provenance(self):
        assert dominating_provenance(cycle(6))
        assert dominating_provenance(torus(2))
        assert dominating_provenance(complete_partite(2, 2, 2))
        assert dominating_provenance(grid(3)) is None
        assert dominating_provenance(path(3)) is None
        assert sidorenko_provenance(path(3)) == "tree (Sidorenko)"

    @pytest.mark.parametrize("F,want", [
        (k_mm(2, 3), True), (complete_partite(1, 2, 2), True), (cycle(6), False),
        (Hypergraph(2, 5, ((0, 1), (2, 3))), False),
    ])
    def test_complete_partite_recogniser(self, F, want):
        assert is_complete_partite(F) == want

    def test_recogniser_matches_brute(self):
        # compare with a direct definition on every 2-graph up to 5 vertices
        from sidorenko.hypergraph import nonisomorphic
        for G in nonisomorphic(2, 5):
            cov = G.covered_vertices()
            brute = False
            for lab in product((0, 1), repeat=len(cov)):
                A = [v for v, c in zip(cov, lab) if c == 0]
                B = [v for v, c in zip(cov, lab) if c == 1]
                if A and B and G.e == len(A) * len(B) and all(G.has_edge((a, b)) for a in A for b in B):
                    brute = True
                    break
            assert is_complete_partite(G) == brute

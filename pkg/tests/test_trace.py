from fractions import Fraction

import pytest

from sidorenko.bounds import HypothesisError
from sidorenko.constructions import apex_augment, complete, complete_partite, tight_cycle
from sidorenko.hom import brute_force_count, complete_density
from sidorenko.hypergraph import Hypergraph, downward_hypergraph, link_profile
from sidorenko.trace import proof_trace

from conftest import apex_instance, random_host


def test_single_edge_link():
    F = complete_partite(1, 1, 2)
    M = Hypergraph(2, 4, ((0, 1),))
    tr = proof_trace(F, M, complete(4, 3), assume={"dominating"})
    assert tr.verified
    assert tr.hom_F == brute_force_count(F, complete(4, 3))


def test_empty_host():
    F = complete_partite(1, 1, 2)
    M = Hypergraph(2, 4, ((0, 1),))
    tr = proof_trace(F, M, Hypergraph(3, 5))
    assert tr.hom_F == 0 and tr.final_rhs == 0 and tr.verified


@pytest.mark.parametrize("seed", range(6))
def test_seeded_instances(seed):
    _, case, F, M, H = apex_instance(seed)
    tr = proof_trace(F, M, H, case)
    assert tr.claim1 and tr.claim2 and tr.final and tr.verified
    # independent recomputation of the pieces the claims are made of
    n = H.n
    tK = complete_density(H)
    assert tr.claim1_rhs == Fraction(1, 2) * tK * n
    assert tr.claim1_lhs == sum((complete_density(downward_hypergraph(H, v)) for v in tr.good), Fraction(0))
    c = Fraction(1, 4) * Fraction(2 * tr.t) ** (-tr.t * M.e)
    assert tr.c == c
    assert tr.final_rhs == c * tK ** tr.s * n ** F.n


def test_rare_counts_by_hand():
    _, case, F, M, H = apex_instance(1)
    tr = proof_trace(F, M, H, case)
    for i, thr in enumerate(tr.thresholds):
        assert thr == Fraction(2 * tr.t) ** (-M.e) * complete_density(H) ** tr.d[i + 1] * H.n
    assert tr.z_identity and tr.z_bound


def test_apex_tight_cycle_random_hosts():
    import random
    F = tight_cycle(3, 6)
    M = link_profile(F).union(F.n)
    Fp = apex_augment(F, M)
    rng = random.Random(11)
    for n in (6, 7):
        H = random_host(rng, 3, n, 0.7)
        tr = proof_trace(Fp, M, H)
        assert tr.verified
        vals = [v for _, v in tr.chain]
        assert vals[0] == tr.hom_F and all(a >= b for a, b in zip(vals, vals[1:]))


def test_hypotheses_enforced():
    F = tight_cycle(3, 6)
    M = link_profile(F).union(F.n)
    with pytest.raises(HypothesisError):
        proof_trace(F, M, complete(5, 3))

import math
from fractions import Fraction

import pytest
from hypothesis import given

from sidorenko.constructions import complete, cycle, disjoint_edges, loose_triangle, path, tensor_power
from sidorenko.exponent import (
    exponent_lower_search,
    exponent_ratio,
    log_ratio,
    sidorenko_check,
    tensor_amplify,
)
from sidorenko.hom import complete_density, density

from conftest import hypergraphs


def test_c4_on_triangle():
    w = exponent_ratio(cycle(4), complete(3))
    assert (w.p, w.q) == (37, 10)
    assert abs(w.ratio - math.log(2 / 9) / math.log(2 / 3)) < 1e-12
    assert w.lhs <= w.rhs and not w.exact
    assert w.verify()
    # 37/10 is the best with denominator <= 10: the next candidate fails
    for q in range(1, 11):
        p = math.floor(q * w.ratio) + 1
        assert Fraction(2, 9) ** q > Fraction(2, 3) ** p


def test_exact_certificate():
    # t_F = t_K^e for a single edge
    w = exponent_ratio(path(1), complete(4))
    assert (w.p, w.q, w.exact) == (1, 1, True)


def test_undefined_ratio():
    with pytest.raises(ValueError):
        log_ratio(Fraction(1, 2), Fraction(1))
    with pytest.raises(ValueError, match="zero density"):
        exponent_ratio(cycle(4), path(1).base,
                       densities=(Fraction(0), Fraction(1, 2)))


def test_sidorenko_check_margin():
    chk = sidorenko_check(cycle(4), complete(3))
    assert chk.holds and chk.margin == Fraction(2, 9) - Fraction(16, 81)


@given(hypergraphs(r=2, min_n=1, max_n=6))
def test_paths_are_sidorenko(H):
    for k in (1, 2, 3):
        assert sidorenko_check(path(k), H).holds


@given(hypergraphs(r=2, min_n=2, max_n=6))
def test_witness_soundness(H):
    tK = complete_density(H)
    tF = density(cycle(4), H).value
    if tF and 0 < tK < 1:
        w = exponent_ratio(cycle(4), H, max_den=7)
        assert tF ** w.q <= tK ** w.p
        # s_H >= p/q in floating point as well
        assert w.ratio >= w.p / w.q - 1e-12


@pytest.mark.parametrize("k", [1, 2, 3])
def test_disjoint_edges_search(k):
    rep = exponent_lower_search(disjoint_edges(k), budget=60, exhaustive=False, restarts=1, anneal_steps=20)
    assert rep.best.s == k and rep.best.exact


def test_loose_triangle_beats_edge_count():
    rep = exponent_lower_search(loose_triangle(), budget=400, seed=0)
    assert rep.best.s > 3
    assert not sidorenko_check(loose_triangle(), rep.best.host).holds


def test_search_is_seeded():
    a = exponent_lower_search(cycle(4), budget=80, seed=5, exhaustive=False)
    b = exponent_lower_search(cycle(4), budget=80, seed=5, exhaustive=False)
    assert a.best.s == b.best.s and a.best.host == b.best.host and a.evaluated == b.evaluated


def test_tensor_amplify():
    rep = tensor_amplify(cycle(4), complete(3), 1, 4, 3)
    assert [row.slack for row in rep.rows] == [Fraction(9, 8), Fraction(81, 64), Fraction(729, 512)]
    assert rep.first_failure is None
    assert rep.rows[1].materialized
    # the materialised square really has t_F = (2/9)^2
    assert density(cycle(4), tensor_power(complete(3), 2)).value == Fraction(4, 81)


def test_tensor_amplify_detects_failure():
    # (2/3)^3 = 8/27 > 2/9, so t_C4 >= t_K^3 fails on the triangle
    rep = tensor_amplify(cycle(4), complete(3), 1, 3, 2)
    assert rep.first_failure == 1

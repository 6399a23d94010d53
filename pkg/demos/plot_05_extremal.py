"""
Lifts, thresholds and small extremal numbers
============================================

An n-vertex 3-graph with enough edges must contain a lift F(t). On eight
vertices only the single-edge lift has a threshold below C(8,3) = 56.
"""

import random
from itertools import combinations

from sidorenko import Hypergraph, complete, cycle, path
from sidorenko.constructions import disjoint_edges, lift
from sidorenko.extremal import deletion_lower, ex_small, find_lift_copy, kst_threshold, loglog_slope

thr = kst_threshold(8, path(1), 1, 1)
print("K_2(1) on 8 vertices: forced at", thr.min_edges, "edges")
print("P_3(1) on 8 vertices: forced at", kst_threshold(8, path(2), 1, 2).min_edges, "edges")

rng = random.Random(0)
slots = list(combinations(range(8), 3))
H = Hypergraph(3, 8, tuple(rng.sample(slots, thr.min_edges)))
res = find_lift_copy(H, path(1), 1, s_bound=1)
print("copy:", res.copy)

###############################################################################
# Exact extremal numbers by orderly generation.

print("ex(6, C_4) =", ex_small(6, cycle(4)).value)
print("ex(8, K_3) =", ex_small(8, complete(3)).value)

###############################################################################
# K_{2,10} is the lift of two disjoint 1-edges by 10 apexes, so the target
# exponent is 2 - 1/2. The deletion bound approaches it slowly.

base = disjoint_edges(2, 1)
P = lift(base, 10)
pts = [(n, float(deletion_lower(n, P, base=base).value)) for n in (256, 512, 1024, 2048, 4096)]
print("target", deletion_lower(256, P, base=base).target_exponent, "log-log slope:", round(loglog_slope(pts), 4))

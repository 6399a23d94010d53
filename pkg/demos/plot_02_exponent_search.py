"""
Certified lower bounds on the Sidorenko exponent
================================================

A host H with 0 < t_K(H) < 1 certifies s(F) >= p/q whenever
t_F(H)^q <= t_K(H)^p, which is checked with exact rationals.
"""

from sidorenko import complete, cycle, exponent_lower_search, exponent_ratio, loose_triangle
from sidorenko.exponent import sidorenko_check

# On the triangle the 4-cycle has t_F = 2/9 and t_K = 2/3.
w = exponent_ratio(cycle(4), complete(3))
print(f"ln t_F / ln t_K = {w.ratio:.9f}; certified s >= {w.s}")
print(f"check: (2/9)^{w.q} <= (2/3)^{w.p} is {w.lhs <= w.rhs}")

###############################################################################
# A search over complete hosts, every small host, annealed hosts and tensor
# products. The 4-cycle is Sidorenko, so nothing beats e(C_4) = 4.

rep = exponent_lower_search(cycle(4), budget=400, seed=1)
print("C_4: best certified", rep.best.s, "from", rep.evaluated, "hosts", rep.pool_sizes)

###############################################################################
# The loose triangle is not Sidorenko: some small host pushes the certified
# exponent above its 3 edges.

rep = exponent_lower_search(loose_triangle(), budget=400, seed=0)
best = rep.best
print("loose triangle: s >=", best.s, "on a host with", best.host.n, "vertices and", best.host.e, "edges")
print("Sidorenko inequality on that host:", sidorenko_check(loose_triangle(), best.host).holds)

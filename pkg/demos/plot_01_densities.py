"""
Homomorphism densities and tensor powers
========================================

Counting maps from a small pattern into a host, exactly, and watching the
density behave multiplicatively under tensor powers of the host.
"""

from fractions import Fraction

from sidorenko import build, complete, cycle, density, path, tensor_power
from sidorenko.hom import brute_force_count, complete_density

# hom(P_3, K_3): pick the middle vertex (3 ways), then two neighbours (2 * 2)
P3, K3 = path(2), complete(3)
print("hom(P_3, K_3) =", density(P3, K3).hom_count)

# the 4-cycle in the triangle: 18 of the 81 maps are homomorphisms
C4 = cycle(4)
print("t_C4(K_3) =", density(C4, K3))
assert brute_force_count(C4, K3) == 18

###############################################################################
# The edge density t_K(H) is the density of a single edge.

print("t_K(K_3) =", complete_density(K3))

###############################################################################
# Densities multiply under tensor products, so t_F(H^(x)k) = t_F(H)^k.

for k in (1, 2, 3):
    G = tensor_power(K3, k)
    got = density(C4, G).value
    print(f"k={k}: v(H^k)={G.n:3d}  t_C4 = {got}  (2/9)^k = {Fraction(2, 9) ** k}")

###############################################################################
# 3-graphs work the same way. The loose triangle in K^(3)_5:

T = build("loose-triangle")
print("t_T(K^(3)_5) =", density(T, complete(5, 3)))

"""
Domination and weak norming
===========================

Even cycles are weakly norming, hence dominating. Paths with three edges are
not dominating, and the triangle is not weakly norming; both facts show up as
exactly verified counterexamples.
"""

from sidorenko import complete, cycle, path
from sidorenko.domination import dominating_falsify, dominating_provenance, weakly_norming_suite

for name, F in (("C_4", cycle(4)), ("C_6", cycle(6)), ("P_4", path(3))):
    rep = dominating_falsify(F, max_host_n=5)
    verdict = "counterexample" if rep.found else "no violation"
    print(f"{name}: {verdict} after {rep.checked} checks; catalogue: {dominating_provenance(F)}")

###############################################################################
# Triangle inequality for the w(F)-functional on random step kernels.

rep = weakly_norming_suite(cycle(4), 100, seed=0)
print("C_4:", rep.triangle_passed, "passed,", rep.triangle_ties, "ties")

rep = weakly_norming_suite(complete(3), 100, seed=0)
cx = rep.counterexample
print("K_3: fails at trial", cx.trial, "on resolution", cx.f.n)
print("  ||f+g||^3 =", cx.norm_sum, " ||f||^3 =", cx.norm_f, " ||g||^3 =", cx.norm_g)

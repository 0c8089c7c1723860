#!/usr/bin/env python3
"""Evaluating the analytic machinery: expectations, probability bounds, the
second-moment lower bound, and sigma-threshold regimes."""

from listcolor import (
    bad_triple_probability_bound,
    chebyshev_lower_bound,
    expected_identical_cliques_exact,
    girth_regime_bounds,
    pair_probability_bound,
    pi_bound_clique_union,
    proper_tree_size,
    tree_bad_expectation_bound,
)

print("expected identical-list triangles in clique_union(60, 4), k=2:")
print(f"  {'sigma':>6} {'E[X]':>10} {'Pi':>10} {'P[X>0] >=':>10}")
for sigma in (4, 5, 6, 8, 10, 14):
    e = expected_identical_cliques_exact(60, 4, 2, sigma).value.to_float()
    pi = pi_bound_clique_union(60, 4, 2, sigma).value.to_float()
    low = chebyshev_lower_bound(e, pi).value.to_float()
    print(f"  {sigma:>6} {e:>10.4f} {pi:>10.5f} {low:>10.4f}")

print("\nper-triple badness bound (m=4, Delta=3, k=2); values above 1 are vacuous:")
for sigma in (5, 8, 12, 20, 40):
    b = bad_triple_probability_bound(4, 3, 2, sigma).value.to_float()
    print(f"  sigma={sigma:>3}: {b:.5f}")

print("\npair bound 2^(l+2r) / (sigma^(l-1) (sigma-1)^(2+r)) at l=3, r=0:")
for sigma in (5, 10, 20, 40):
    print(f"  sigma={sigma:>3}: {pair_probability_bound(3, 0, sigma).value.to_float():.6f}")

print("\nrooted-tree expectation bound on a girth-5 graph (n=1000, Delta=3, k=3):")
q = proper_tree_size(3, 5)
for sigma in (10, 20, 40, 80):
    rep = tree_bad_expectation_bound(1000, 3, 3, sigma, 5)
    print(f"  sigma={sigma:>3}: exact {rep.value.to_float():.3e}   "
          f"simplified {rep.extras['simplified'].to_float():.3e}   (tree size {q})")

print("\nsigma-threshold regimes at n=10^5, Delta=4, k=2, sigma=60, girth 5:")
for name, rep in sorted(girth_regime_bounds(10**5, 4, 2, 60, g=5).items()):
    thr = rep.extras["threshold"].to_float()
    flag = "clears" if rep.extras["clears_threshold"] else "below"
    print(f"  {name:<22} threshold {thr:>12.2f}   sigma {flag}")

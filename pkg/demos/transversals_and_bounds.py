"""
Transversals, covering families, and a cross-intersecting maximum
=================================================================

The transversal number tau is the least number of vertices meeting
every edge.  For an intersecting family with tau >= t one can build at
most r^t many t-sets so that every edge contains one of them, which
caps the edge count at r^t * C(n-t, r-t).
"""

from math import comb

from kernelsys import (
    Hypergraph,
    check_tau_bound,
    complete_hypergraph,
    covering_family,
    max_cross_pair_report,
    minimum_transversal,
    star,
    tau,
)

# 1. tau by example: a star is pierced by its center, the Fano plane
#    needs three points, and so does the complete 3-uniform on five.
fano = Hypergraph(7, 3, [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                         {1, 4, 6}, {2, 3, 6}, {2, 4, 5}])
print("tau(star on 7) =", tau(star(7, 3)))
print("tau(Fano plane) =", tau(fano), "witness:", sorted(minimum_transversal(fano)))
print("tau(complete 3-uniform on 5) =", tau(complete_hypergraph(5, 3)))

# 2. The covering family behind the edge-count bound, traced on the Fano
#    plane at t = tau = 3.
family = covering_family(fano, 3)
print(f"covering family: {len(family.members)} triples (<= 3^3 = 27), "
      f"covers every line: {family.covers(fano)}")

# 3. The bound itself: |E| <= r^t * C(n-t, r-t).
t = tau(fano)
print(f"edge bound at t={t}: {len(fano)} <= {3**t * comb(7 - t, 3 - t)} ->",
      check_tau_bound(fano))

# 4. Cross-intersecting pairs: with A a-uniform and B (a+1)-uniform
#    intersecting on N > 2a+1 vertices, |A| + |B| maxes out at C(N, a),
#    and the only optima are the trivial pair and co-centered stars.
rep = max_cross_pair_report(7, 2)
print(f"max |A|+|B| on 7 vertices, a=2: {rep.max_total} = C(7,2) = {comb(7, 2)}")
print(f"  optima: {rep.optima_count}, all trivial-or-stars: "
      f"{rep.all_optima_star_or_empty}, search nodes: {rep.nodes}")

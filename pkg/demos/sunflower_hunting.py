"""
Hunting sunflowers three ways
=============================

A sunflower is a family of edges whose pairwise intersections all equal
one core set; the petals (edge remainders) are pairwise disjoint.  The
library ships a complete finder with a core-size cap, the classic
greedy that is guaranteed above r! * (p-1)^r edges, and an
iterative-removal procedure aimed at small cores.
"""

import random

from kernelsys import (
    Hypergraph,
    erdos_rado_greedy,
    extract_small_core,
    find_sunflower_exact,
    star,
)
from kernelsys.corpus import random_uniform_hypergraph


def show(label, s):
    if s is None:
        print(f"{label}: none")
    else:
        print(f"{label}: core={sorted(s.core)} petals={[sorted(p) for p in s.petals]}")


# 1. Three pairwise disjoint edges already form a sunflower (empty core).
h = Hypergraph(9, 3, [{0, 1, 2}, {3, 4, 5}, {6, 7, 8}])
show("disjoint triples, exact p=3", find_sunflower_exact(h, p=3, max_core=0))

# 2. A star is a sunflower factory: common center, disjoint remainders.
show("star on 9 vertices, small-core p=3 k=1", extract_small_core(star(9, 3), p=3, k=1))

# 3. The greedy finds p petals in any large enough family.  Eight edges
#    suffice for 2-uniform, p=3 (the bound is 2! * 2^2 = 8).
rng = random.Random(0)
g = random_uniform_hypergraph(rng, n=10, r=2, m=8)
show("random 8-edge graph, greedy p=3", erdos_rado_greedy(g, p=3))

# 4. Sharpness: fixing a (k+1)-set blocks every core of size <= k, since
#    any two edges share at least k+1 vertices.
blocked = Hypergraph(9, 3, [{0, 1, v} for v in range(2, 9)])
show("fixed-pair family, exact p=2 core<=1", find_sunflower_exact(blocked, p=2, max_core=1))
show("fixed-pair family, small-core p=2 k=1", extract_small_core(blocked, p=2, k=1))
s = erdos_rado_greedy(blocked, p=2)
print(f"the greedy still finds one, but its core has size {s.core_size} > 1:")
show("  greedy p=2", s)

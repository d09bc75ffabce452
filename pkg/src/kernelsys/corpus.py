"""Seeded random hypergraph corpora for property suites.

All generators draw from a caller-supplied random.Random so that every
corpus is reproducible from a single recorded seed.
"""

from __future__ import annotations

import itertools
import random

from .hypergraphs import Hypergraph, mask_of
from .kernels import KernelParams, build_kernel_system


def random_uniform_hypergraph(rng: random.Random, n: int, r: int, m: int) -> Hypergraph:
    """m distinct random r-sets on [0, n)."""
    pool = [mask_of(c) for c in itertools.combinations(range(n), r)]
    if m > len(pool):
        raise ValueError(f"cannot place {m} distinct edges, only {len(pool)} exist")
    return Hypergraph(n, r, rng.sample(pool, m))


def random_subfamily(rng: random.Random, h: Hypergraph, density: float) -> Hypergraph:
    """Keep each edge independently with the given probability."""
    masks = [m for m in h.edge_masks if rng.random() < density]
    return Hypergraph(h.n, h.r, masks)


def random_intersecting(rng: random.Random, n: int, r: int) -> Hypergraph:
    """A random non-empty intersecting family.

    Drawn as a subfamily of a random kernel system (a star when k=1),
    relabeled by a random vertex permutation; subfamilies of an
    intersecting family stay intersecting.
    """
    k = rng.randint(1, r)
    while n < 2 * k - 1:
        k -= 1
    base = build_kernel_system(KernelParams(n, r, k))
    sub = random_subfamily(rng, base, rng.uniform(0.3, 0.9))
    while not len(sub):
        sub = random_subfamily(rng, base, 0.9)
    perm = list(range(n))
    rng.shuffle(perm)
    return Hypergraph(
        n, r, (mask_of(perm[v] for v in e) for e in sub.edges)
    )


def intersecting_corpus(seed: int, count: int, uniformities=(2, 3, 4)) -> list[Hypergraph]:
    """A reproducible batch of random intersecting hypergraphs."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r = rng.choice(list(uniformities))
        n = rng.randint(max(r, 3), min(2 * r + 5, 12))
        out.append(random_intersecting(rng, n, r))
    return out


def mixed_corpus(seed: int, count: int) -> list[Hypergraph]:
    """Random hypergraphs of varied (n, r, size), not necessarily intersecting."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r = rng.randint(1, 4)
        n = rng.randint(r, 12)
        pool_size = len(list(itertools.combinations(range(n), r)))
        m = rng.randint(0, min(pool_size, 30))
        out.append(random_uniform_hypergraph(rng, n, r, m))
    return out

"""Kernel systems: intersecting families defined by a small kernel set.

A k-kernel system on n vertices consists of every r-set meeting a fixed
(2k-1)-element kernel X in at least k vertices.  Any two edges then meet
inside X, so the family is intersecting.  Its minimum positive co-degree
is k once n >= r + k - 1; below that threshold there is no room for an
edge meeting X in exactly k vertices and the co-degree degenerates to
n - r + 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .hypergraphs import Hypergraph, VertexSet, mask_of


@dataclass(frozen=True)
class KernelParams:
    """The (n, r, k) triple of a kernel system; kernel size is 2k-1."""

    n: int
    r: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.r <= self.n:
            raise ValueError(
                f"need 1 <= k <= r <= n, got n={self.n}, r={self.r}, k={self.k}"
            )
        if self.n < 2 * self.k - 1:
            raise ValueError(
                f"kernel of size {2 * self.k - 1} does not fit in n={self.n} vertices"
            )

    @property
    def kernel(self) -> VertexSet:
        """The canonical kernel: the lexicographically first (2k-1)-set."""
        return frozenset(range(2 * self.k - 1))


def build_kernel_system(params: KernelParams) -> Hypergraph:
    """Materialize the kernel system with kernel {0, ..., 2k-2}."""
    xmask = (1 << (2 * params.k - 1)) - 1
    masks = []
    for combo in itertools.combinations(range(params.n), params.r):
        m = mask_of(combo)
        if (m & xmask).bit_count() >= params.k:
            masks.append(m)
    return Hypergraph(params.n, params.r, masks)


def kernel_edge_count(params: KernelParams) -> int:
    """Closed-form edge count of a kernel system.

    Sums, over the intersection size i with the kernel, the ways to pick
    i kernel vertices times the ways to fill the rest of the edge.  The
    sum stops at min(r, 2k-1): an edge cannot take more than r vertices,
    nor more than the whole kernel, so later terms vanish.
    """
    n, r, k = params.n, params.r, params.k
    top = min(r, 2 * k - 1)
    return sum(comb(2 * k - 1, i) * comb(n - 2 * k + 1, r - i) for i in range(k, top + 1))


def kernel_cover(h: Hypergraph, k: int) -> VertexSet | None:
    """Find a (2k-1)-set that every edge meets in at least k vertices.

    Candidates are scanned in lexicographic order and the first hit is
    returned, so the answer is deterministic; None when no such set
    exists (in particular when n < 2k-1).
    """
    if not 1 <= k <= h.r:
        raise ValueError(f"need 1 <= k <= r={h.r}, got k={k}")
    size = 2 * k - 1
    if size > h.n:
        return None
    for combo in itertools.combinations(range(h.n), size):
        xmask = mask_of(combo)
        if all((m & xmask).bit_count() >= k for m in h.edge_masks):
            return frozenset(combo)
    return None

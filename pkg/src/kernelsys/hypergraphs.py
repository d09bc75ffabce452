"""Uniform hypergraphs on integer vertices, with bitmask edges.

Vertices are the integers 0..n-1 and every edge is stored as an int
bitmask, so membership tests, unions and intersections cost one word
operation per machine word of n bits.  Hypergraph values are immutable
after construction and safe to share between threads; every operation
here is a pure function of its inputs.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable

VertexSet = frozenset[int]


class LimitExceeded(RuntimeError):
    """A search refused to start because it exceeds its configured limit."""


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"vertex ids must be nonnegative, got {v}")
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex ids."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _edge_key(mask: int) -> tuple[int, ...]:
    # canonical edge order = lexicographic on the sorted member tuple,
    # matching the order itertools.combinations generates r-sets in
    return vertices_of(mask)


class Hypergraph:
    """An r-uniform edge family on the vertex set {0, ..., n-1}.

    Edges are pairwise distinct r-element subsets, kept in a canonical
    (lexicographic) order so that searches iterating over them are
    reproducible.  Equality is set equality of the edges together with
    the ambient (n, r).
    """

    __slots__ = ("n", "r", "edge_masks", "_edge_sets")

    def __init__(self, n: int, r: int, edges: Iterable[Iterable[int] | int] = ()):
        if n < 0 or r < 0:
            raise ValueError(f"need n >= 0 and r >= 0, got n={n}, r={r}")
        masks = []
        for e in edges:
            m = e if isinstance(e, int) else mask_of(e)
            masks.append(m)
        seen = set()
        for m in masks:
            if m.bit_count() != r:
                raise ValueError(
                    f"edge {set(vertices_of(m))} has {m.bit_count()} vertices, expected {r}"
                )
            if m >> n:
                raise ValueError(f"edge {set(vertices_of(m))} uses a vertex >= n={n}")
            if m in seen:
                raise ValueError(f"duplicate edge {set(vertices_of(m))}")
            seen.add(m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edge_masks", tuple(sorted(masks, key=_edge_key)))
        object.__setattr__(self, "_edge_sets", None)

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @property
    def edges(self) -> tuple[VertexSet, ...]:
        """Edges as frozensets, in canonical order."""
        cached = self._edge_sets
        if cached is None:
            cached = tuple(frozenset(vertices_of(m)) for m in self.edge_masks)
            object.__setattr__(self, "_edge_sets", cached)
        return cached

    def __len__(self) -> int:
        return len(self.edge_masks)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        m = edge if isinstance(edge, int) else mask_of(edge)
        return m in set(self.edge_masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.r == other.r
            and set(self.edge_masks) == set(other.edge_masks)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edge_masks))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, edges={len(self.edge_masks)})"

    # -- basic predicates ------------------------------------------------

    def degree(self, vertex_set: Iterable[int] | int) -> int:
        """Number of edges containing the given vertex set."""
        s = vertex_set if isinstance(vertex_set, int) else mask_of(vertex_set)
        if s >> self.n:
            raise ValueError(
                f"vertex set {set(vertices_of(s))} has a member >= n={self.n}"
            )
        return sum(1 for m in self.edge_masks if m & s == s)

    def min_positive_codegree(self) -> int:
        """Minimum degree over the (r-1)-sets that lie inside some edge.

        Zero for the empty hypergraph; at least 1 otherwise, since every
        (r-1)-set counted lies in at least the edge that exhibits it.
        """
        if not self.edge_masks:
            return 0
        if self.r == 0:
            raise ValueError("positive co-degree is undefined for 0-uniform edges")
        counts: dict[int, int] = {}
        for m in self.edge_masks:
            mm = m
            while mm:
                low = mm & -mm
                sub = m ^ low
                counts[sub] = counts.get(sub, 0) + 1
                mm ^= low
        return min(counts.values())

    def is_intersecting(self) -> bool:
        """True iff every two edges share a vertex (vacuous for <= 1 edge)."""
        masks = self.edge_masks
        for i in range(len(masks)):
            mi = masks[i]
            for j in range(i + 1, len(masks)):
                if not mi & masks[j]:
                    return False
        return True

    def shadow(self) -> frozenset[VertexSet]:
        """All (r-1)-sets contained in some edge."""
        return frozenset(
            frozenset(vertices_of(s)) for s in self.shadow_masks()
        )

    def shadow_masks(self) -> set[int]:
        out: set[int] = set()
        for m in self.edge_masks:
            mm = m
            while mm:
                low = mm & -mm
                out.add(m ^ low)
                mm ^= low
        return out

    def derived(self, t_set: Iterable[int] | int, s_set: Iterable[int] | int) -> "Hypergraph":
        """Strip S from every edge whose intersection with T is exactly S.

        The result keeps the original vertex ids (members of T become
        isolated) and is (r - |S|)-uniform.  Over all S subseteq T these
        families partition the edge set.
        """
        t = t_set if isinstance(t_set, int) else mask_of(t_set)
        s = s_set if isinstance(s_set, int) else mask_of(s_set)
        if s & ~t:
            raise ValueError("S must be a subset of T")
        new_masks = [m & ~s for m in self.edge_masks if m & t == s]
        new_r = max(self.r - s.bit_count(), 0)
        return Hypergraph(self.n, new_r, new_masks)

    def link(self, v: int) -> "Hypergraph":
        """The (r-1)-uniform family of edge remainders of edges through v."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside universe [0, {self.n})")
        bit = 1 << v
        return Hypergraph(self.n, self.r - 1, [m ^ bit for m in self.edge_masks if m & bit])

    def union(self, other: "Hypergraph") -> "Hypergraph":
        """Edge-set union of two families on the same (n, r) universe."""
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("union requires matching vertex count and uniformity")
        return Hypergraph(self.n, self.r, set(self.edge_masks) | set(other.edge_masks))


def are_cross_intersecting(a: Hypergraph, b: Hypergraph) -> bool:
    """True iff every edge of one family meets every edge of the other."""
    if a.n != b.n:
        raise ValueError(f"universe mismatch: n={a.n} vs n={b.n}")
    for ma in a.edge_masks:
        for mb in b.edge_masks:
            if not ma & mb:
                return False
    return True


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    """All r-subsets of {0, ..., n-1}."""
    return Hypergraph(n, r, (mask_of(c) for c in itertools.combinations(range(n), r)))


def star(n: int, r: int, center: int = 0) -> Hypergraph:
    """All r-subsets containing a fixed vertex."""
    if not 0 <= center < n:
        raise ValueError(f"center {center} outside universe [0, {n})")
    rest = [v for v in range(n) if v != center]
    return Hypergraph(
        n, r, (mask_of(c) | (1 << center) for c in itertools.combinations(rest, r - 1))
    )

"""Transversal numbers, covering families, and cross-intersecting maxima.

The transversal number tau is computed exactly by iterative deepening:
depth t succeeds iff some t vertices meet every edge, and branching is
restricted to the vertices of the first uncovered edge, which keeps the
branching factor at r.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import comb

from .hypergraphs import Hypergraph, VertexSet, mask_of, vertices_of


def _cover_search(masks: list[int], budget: int, chosen: int) -> int | None:
    uncovered = None
    for m in masks:
        if not m & chosen:
            uncovered = m
            break
    if uncovered is None:
        return chosen
    if budget == 0:
        return None
    for v in vertices_of(uncovered):
        hit = _cover_search(masks, budget - 1, chosen | (1 << v))
        if hit is not None:
            return hit
    return None


def minimum_transversal(h: Hypergraph) -> VertexSet:
    """A minimum vertex set meeting every edge (deterministic witness)."""
    masks = list(h.edge_masks)
    if not masks:
        return frozenset()
    if h.r == 0:
        raise ValueError("an empty edge admits no transversal")
    for t in range(h.n + 1):
        hit = _cover_search(masks, t, 0)
        if hit is not None:
            return frozenset(vertices_of(hit))
    raise AssertionError("unreachable: the full vertex set is a transversal")


def tau(h: Hypergraph) -> int:
    """Exact transversal number; 0 for the empty hypergraph."""
    return len(minimum_transversal(h))


@dataclass(frozen=True)
class CoveringFamily:
    """A t-uniform family such that every source edge contains a member."""

    t: int
    members: tuple[VertexSet, ...]

    def covers(self, h: Hypergraph) -> bool:
        member_masks = [mask_of(m) for m in self.members]
        return all(
            any(e & m == m for m in member_masks) for e in h.edge_masks
        )


class TransversalTooSmall(ValueError):
    """Raised when a construction needs tau >= t; carries a witness."""

    def __init__(self, needed: int, certificate: VertexSet):
        super().__init__(
            f"requires transversal number >= {needed}, but "
            f"{set(certificate) or '{}'} is a transversal of size {len(certificate)}"
        )
        self.certificate = certificate


def covering_family(h: Hypergraph, t: int) -> CoveringFamily:
    """Build at most r^t many t-sets so every edge contains one of them.

    Rooted at the canonical first edge: a partial selection of i < t
    vertices is never a transversal (tau >= t), so a witness edge
    disjoint from it exists; the selection branches over that edge's
    vertices.  The witness is always the canonically first qualifying
    edge, making the family deterministic.
    """
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    if t > h.r:
        raise ValueError(f"need t <= r={h.r}, got t={t}")
    if not h.is_intersecting():
        raise ValueError("covering_family requires an intersecting hypergraph")
    witness = minimum_transversal(h)
    if len(witness) < t:
        raise TransversalTooSmall(t, witness)

    masks = list(h.edge_masks)
    out: set[int] = set()

    def extend(selection: int, depth: int):
        if depth == t:
            out.add(selection)
            return
        for m in masks:
            if not m & selection:
                for v in vertices_of(m):
                    extend(selection | (1 << v), depth + 1)
                return
        raise AssertionError("unreachable: selection below tau cannot cover")

    extend(0, 0)
    members = tuple(
        frozenset(vertices_of(m))
        for m in sorted(out, key=vertices_of)
    )
    return CoveringFamily(t, members)


def check_tau_bound(h: Hypergraph) -> bool:
    """Edge count against r^t * C(n-t, r-t) at t = tau; true unless buggy."""
    if not h.is_intersecting():
        raise ValueError("check_tau_bound requires an intersecting hypergraph")
    t = tau(h)
    return len(h) <= h.r**t * comb(h.n - t, h.r - t)


@dataclass(frozen=True)
class CrossPairReport:
    """Outcome of the exhaustive cross-intersecting pair search."""

    n_vertices: int
    a: int
    max_total: int
    optima_count: int
    all_optima_star_or_empty: bool
    nodes: int
    elapsed: float


def max_cross_pair_report(n_vertices: int, a: int) -> CrossPairReport:
    """Maximize |A| + |B| over cross-intersecting pairs on [0, N).

    A is a-uniform, B is (a+1)-uniform and intersecting; the search runs
    over intersecting B in canonical DFS order, and for each B takes the
    maximal compatible A (all a-sets meeting every B-edge) in closed
    form.  Every optimum is checked against the two expected extremal
    shapes: B empty with A complete, or A and B maximal stars at one
    common vertex.
    """
    if a < 1:
        raise ValueError(f"need a >= 1, got a={a}")
    if n_vertices <= 2 * a + 1:
        raise ValueError(
            f"requires N > 2a+1, got N={n_vertices}, a={a} (N must exceed {2 * a + 1})"
        )
    start = time.perf_counter()
    n = n_vertices
    b_masks = [mask_of(c) for c in itertools.combinations(range(n), a + 1)]
    a_masks = [mask_of(c) for c in itertools.combinations(range(n), a)]
    nb, na = len(b_masks), len(a_masks)
    full_a = (1 << na) - 1

    # a_hits[j]: a-set indices meeting b_masks[j]; b_later[j]: b-indices
    # above j compatible with (intersecting) b_masks[j]
    a_hits = []
    for bm in b_masks:
        live = 0
        for i, am in enumerate(a_masks):
            if am & bm:
                live |= 1 << i
        a_hits.append(live)
    b_later = []
    for j, bm in enumerate(b_masks):
        mask = 0
        for jj in range(j + 1, nb):
            if bm & b_masks[jj]:
                mask |= 1 << jj
        b_later.append(mask)

    a_star = [0] * n
    for i, am in enumerate(a_masks):
        for v in vertices_of(am):
            a_star[v] |= 1 << i
    b_star_size = comb(n - 1, a)

    best = -1
    optima_count = 0
    all_match = True
    nodes = 0

    def is_expected_shape(chosen: list[int], a_live: int) -> bool:
        if not chosen:
            return a_live == full_a
        common = chosen[0]
        for bm in chosen[1:]:
            common &= bm
        for v in vertices_of(common):
            if len(chosen) == b_star_size and a_live == a_star[v]:
                return True
        return False

    def dfs(chosen: list[int], allowed: int, a_live: int):
        nonlocal best, optima_count, all_match, nodes
        nodes += 1
        total = len(chosen) + a_live.bit_count()
        if total > best:
            best = total
            optima_count = 1
            all_match = is_expected_shape(chosen, a_live)
        elif total == best:
            optima_count += 1
            if all_match and not is_expected_shape(chosen, a_live):
                all_match = False
        rest = allowed
        while rest:
            low = rest & -rest
            rest ^= low
            j = low.bit_length() - 1
            child_allowed = rest & b_later[j]
            child_a = a_live & a_hits[j]
            bound = len(chosen) + 1 + child_allowed.bit_count() + child_a.bit_count()
            if bound < best:
                continue
            chosen.append(b_masks[j])
            dfs(chosen, child_allowed, child_a)
            chosen.pop()

    dfs([], (1 << nb) - 1, full_a)
    return CrossPairReport(
        n_vertices=n,
        a=a,
        max_total=best,
        optima_count=optima_count,
        all_optima_star_or_empty=all_match,
        nodes=nodes,
        elapsed=time.perf_counter() - start,
    )


def max_cross_pair(n_vertices: int, a: int) -> int:
    """Exact maximum of |A| + |B|; see max_cross_pair_report."""
    return max_cross_pair_report(n_vertices, a).max_total


def check_tau_equals_k(n: int, r: int, k: int, h_opt: Hypergraph) -> bool:
    """Whether a search optimizer has transversal number exactly k."""
    if (h_opt.n, h_opt.r) != (n, r):
        raise ValueError("optimizer does not live on the stated (n, r) universe")
    return tau(h_opt) == k

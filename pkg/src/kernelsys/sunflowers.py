"""Sunflower (delta-system) detection.

A sunflower is a family of edges whose pairwise intersections all equal
one set, the core; the edge remainders (petals) are pairwise disjoint.
Three finders are provided:

* ``find_sunflower_exact`` -- complete search with a core-size cap,
* ``erdos_rado_greedy`` -- the classic greedy that succeeds whenever the
  family has at least r! * (p-1)^r edges,
* ``extract_small_core`` -- an iterative removal procedure that hunts
  for a sunflower with many petals and a small core, recombining the
  cores of removed sunflowers when the direct hunt stalls.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraphs import Hypergraph, VertexSet, mask_of, vertices_of


@dataclass(frozen=True)
class Sunflower:
    """A core plus pairwise-disjoint petals; edges[i] == core | petals[i]."""

    core: VertexSet
    petals: tuple[VertexSet, ...]
    edges: tuple[VertexSet, ...]

    def __post_init__(self):
        if len(self.petals) != len(self.edges) or not self.petals:
            raise ValueError("need one petal per edge and at least one petal")
        core = mask_of(self.core)
        pmasks = [mask_of(p) for p in self.petals]
        emasks = [mask_of(e) for e in self.edges]
        used = 0
        for p in pmasks:
            if p & core:
                raise ValueError("petal overlaps the core")
            if p & used:
                raise ValueError("petals are not pairwise disjoint")
            used |= p
        for p, e in zip(pmasks, emasks):
            if (core | p) != e:
                raise ValueError("edge is not core plus petal")
        if len(set(emasks)) != len(emasks):
            raise ValueError("member edges are not distinct")
        for i in range(len(emasks)):
            for j in range(i + 1, len(emasks)):
                if emasks[i] & emasks[j] != core:
                    raise ValueError("pairwise edge intersection differs from core")

    @property
    def num_petals(self) -> int:
        return len(self.petals)

    @property
    def core_size(self) -> int:
        return len(self.core)


def is_sunflower_in(h: Hypergraph, s: Sunflower) -> bool:
    """Re-check the invariants and membership of every edge in h."""
    edge_set = set(h.edge_masks)
    if any(mask_of(e) not in edge_set for e in s.edges):
        return False
    try:
        Sunflower(s.core, s.petals, s.edges)
    except ValueError:
        return False
    return True


def _make_sunflower(core_mask: int, petal_masks: list[int]) -> Sunflower:
    return Sunflower(
        core=frozenset(vertices_of(core_mask)),
        petals=tuple(frozenset(vertices_of(p)) for p in petal_masks),
        edges=tuple(frozenset(vertices_of(core_mask | p)) for p in petal_masks),
    )


def _max_disjoint(cands: list[int]) -> list[int]:
    # exact maximum pairwise-disjoint subfamily, branch and bound;
    # ties resolve to the earliest candidates in the given order
    best: list[int] = []
    total = len(cands)

    def dfs(start: int, used: int, chosen: list[int]):
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        avail = [i for i in range(start, total) if not cands[i] & used]
        if len(chosen) + len(avail) <= len(best):
            return
        for pos, i in enumerate(avail):
            chosen.append(cands[i])
            dfs(i + 1, used | cands[i], chosen)
            chosen.pop()
            if len(chosen) + (len(avail) - pos - 1) <= len(best):
                break

    dfs(0, 0, [])
    return best


def _candidate_cores(masks: list[int], max_core: int) -> list[int]:
    # any sunflower with >= 2 petals has its core equal to the
    # intersection of two member edges, so those plus the empty set
    # exhaust the candidates
    cores = {0}
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            cores.add(mi & masks[j])
    ordered = [c for c in cores if c.bit_count() <= max_core]
    ordered.sort(key=lambda c: (c.bit_count(), vertices_of(c)))
    return ordered


def find_sunflower_exact(h: Hypergraph, p: int, max_core: int | None = None) -> Sunflower | None:
    """Complete search for a sunflower with >= p petals and a bounded core.

    Candidate cores are scanned in (size, lexicographic) order; for each
    core the petals form an exact maximum disjoint packing, so the first
    core that reaches p petals wins and the result is deterministic.
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got p={p}")
    if max_core is None:
        max_core = h.r
    if not 0 <= max_core <= h.r:
        raise ValueError(f"need 0 <= max_core <= r={h.r}, got {max_core}")
    masks = list(h.edge_masks)
    if not masks or h.r == 0:
        return None
    for core in _candidate_cores(masks, max_core):
        petals = _max_disjoint([m & ~core for m in masks if m & core == core])
        if len(petals) >= p:
            return _make_sunflower(core, petals)
    return None


def erdos_rado_greedy(h: Hypergraph, p: int) -> Sunflower | None:
    """Greedy sunflower search by disjoint-set extraction and link recursion.

    Take a greedy maximal family of pairwise-disjoint edges; if it has p
    members they are the petals of an empty-core sunflower.  Otherwise
    every edge meets the union U of that family, so some vertex of U has
    a large link; recurse on that link and prepend the vertex to the
    core.  Counting the incidences of U shows a sunflower with p petals
    is always found when the family has at least r! * (p-1)^r edges.
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got p={p}")

    def recurse(masks: list[int], r: int) -> tuple[int, list[int]] | None:
        disjoint: list[int] = []
        used = 0
        for m in masks:
            if not m & used:
                disjoint.append(m)
                used |= m
        if len(disjoint) >= p:
            return 0, disjoint
        if r <= 1 or not masks:
            return None
        # lowest-id vertex of maximum link size within U
        degree: dict[int, int] = {v: 0 for v in vertices_of(used)}
        for m in masks:
            for v in vertices_of(m & used):
                degree[v] += 1
        v = min(degree, key=lambda u: (-degree[u], u))
        bit = 1 << v
        link = sorted((m ^ bit for m in masks if m & bit), key=vertices_of)
        sub = recurse(link, r - 1)
        if sub is None:
            return None
        core, petals = sub
        return core | bit, petals

    found = recurse(list(h.edge_masks), h.r)
    if found is None:
        return None
    return _make_sunflower(*found)


def _min_core_step(masks: list[int], p: int, k: int, r: int) -> tuple[int, list[int]] | None:
    # smallest available core size that supports its required petal
    # count p * r^max(c-k, 0); within a size, lexicographically first core
    for core in _candidate_cores(masks, r):
        c = core.bit_count()
        need = p * r ** max(c - k, 0)
        petals = _max_disjoint([m & ~core for m in masks if m & core == core])
        if len(petals) >= need:
            return core, petals[:need]
    return None


def extract_small_core(h: Hypergraph, p: int, k: int) -> Sunflower | None:
    """Iterative-removal hunt for a sunflower with >= p petals, core <= k.

    Repeatedly remove a sunflower of minimum available core size c with
    exactly p * r^(c-k) petals, returning at once if c <= k.  When no
    removable sunflower remains, look for a sunflower among the recorded
    same-size cores; its core Y* seeds an edge-level sunflower assembled
    by greedily taking one never-touched petal per member core.
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got p={p}")
    if not 0 <= k < h.r:
        raise ValueError(f"need 0 <= k < r={h.r}, got k={k}")
    r = h.r
    remaining = list(h.edge_masks)
    removed: list[tuple[int, list[int]]] = []
    while remaining:
        step = _min_core_step(remaining, p, k, r)
        if step is None:
            break
        core, petals = step
        if core.bit_count() <= k:
            return _make_sunflower(core, petals)
        edges = [core | pet for pet in petals]
        removed.append((core, edges))
        gone = set(edges)
        remaining = [m for m in remaining if m not in gone]

    if not removed:
        return None

    by_size: dict[int, dict[int, list[int]]] = {}
    for core, edges in removed:
        by_size.setdefault(core.bit_count(), {}).setdefault(core, []).extend(edges)

    for size in sorted(by_size):
        cores = by_size[size]
        core_family = Hypergraph(h.n, size, cores.keys())
        meta = find_sunflower_exact(core_family, 2, max_core=min(k, size))
        if meta is None:
            continue
        ystar = mask_of(meta.core)
        chosen: list[int] = []
        chosen_union = 0
        for member in meta.edges:
            if len(chosen) == p:
                break
            yi = mask_of(member)
            if (yi & ~ystar) & chosen_union:
                continue
            for edge in cores[yi]:
                pet = edge & ~yi
                if not pet & chosen_union:
                    chosen.append(edge)
                    chosen_union |= edge & ~ystar
                    break
        if len(chosen) >= p:
            return _make_sunflower(ystar, [m & ~ystar for m in chosen])
    return None

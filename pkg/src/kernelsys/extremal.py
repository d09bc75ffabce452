"""Exact extremal search for intersecting families with co-degree floors.

The target quantity is the maximum number of edges of an intersecting
r-uniform family on n vertices whose minimum positive co-degree is at
least k.  Two structural facts collapse the search: the intersecting
property is closed under taking subfamilies, and the co-degree floor is
closed under unions, so every candidate is the (unique) co-degree core
of some maximal intersecting family.  Enumerating maximal intersecting
families is a maximal-clique problem over the edge compatibility graph.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .hypergraphs import Hypergraph, LimitExceeded, mask_of, vertices_of
from .kernels import KernelParams, kernel_cover, kernel_edge_count

DEFAULT_N_LIMITS = {1: 12, 2: 12, 3: 9, 4: 7}


def codegree_core(h: Hypergraph, k: int) -> Hypergraph:
    """The unique maximum subfamily with minimum positive co-degree >= k.

    Deletes, until stable, every edge containing an (r-1)-set whose
    positive degree is below k; no such edge can sit inside a qualifying
    subfamily, and the union-closure of the co-degree floor makes the
    fixpoint the maximum one.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    masks = list(h.edge_masks)
    while masks:
        counts: dict[int, int] = {}
        for m in masks:
            mm = m
            while mm:
                low = mm & -mm
                sub = m ^ low
                counts[sub] = counts.get(sub, 0) + 1
                mm ^= low
        bad = {s for s, c in counts.items() if c < k}
        if not bad:
            break
        masks = [
            m
            for m in masks
            if all((m ^ (1 << v)) not in bad for v in vertices_of(m))
        ]
    return Hypergraph(h.n, h.r, masks)


def _check_limit(n: int, r: int, allow_large: bool):
    cap = DEFAULT_N_LIMITS.get(r)
    if allow_large:
        return
    if cap is None:
        raise LimitExceeded(
            f"no default search limit for r={r}; pass allow_large=True to proceed"
        )
    if n > cap:
        raise LimitExceeded(
            f"n={n} exceeds the default limit n <= {cap} for r={r}; "
            f"pass allow_large=True to proceed"
        )


def _maximal_cliques(all_edges: list[int], counter: list[int]):
    # Bron-Kerbosch with pivoting over edge indices; P and X are index
    # bitmasks.  Yields each maximal intersecting family exactly once,
    # in a deterministic order.
    m = len(all_edges)
    adj = []
    for i, ei in enumerate(all_edges):
        a = 0
        for j, ej in enumerate(all_edges):
            if i != j and ei & ej:
                a |= 1 << j
        adj.append(a)

    def bk(r_indices: list[int], p: int, x: int):
        counter[0] += 1
        if not p and not x:
            yield r_indices.copy()
            return
        px = p | x
        pivot = -1
        pivot_deg = -1
        pp = px
        while pp:
            low = pp & -pp
            pp ^= low
            u = low.bit_length() - 1
            d = (p & adj[u]).bit_count()
            if d > pivot_deg:
                pivot_deg = d
                pivot = u
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            r_indices.append(v)
            yield from bk(r_indices, p & adj[v], x & adj[v])
            r_indices.pop()
            p &= ~low
            x |= low
        return

    yield from bk([], (1 << m) - 1, 0)


def enumerate_maximal_intersecting(
    n: int, r: int, iso: bool = False, allow_large: bool = False
):
    """Yield every maximal intersecting r-uniform family on [0, n).

    Each family appears exactly once; with iso=True only the first
    representative of each isomorphism class (by canonical key) is
    yielded.  Refuses n beyond the configured limit rather than running
    for days; pass allow_large=True to override.
    """
    if r < 1 or n < 0:
        raise ValueError(f"need r >= 1 and n >= 0, got n={n}, r={r}")
    _check_limit(n, r, allow_large)
    all_edges = [mask_of(c) for c in itertools.combinations(range(n), r)]
    counter = [0]
    seen_keys: set[tuple] = set()
    for indices in _maximal_cliques(all_edges, counter):
        fam = Hypergraph(n, r, [all_edges[i] for i in indices])
        if iso:
            key = canonical_key(fam)
            if key in seen_keys:
                continue
            seen_keys.add(key)
        yield fam


def canonical_key(h: Hypergraph) -> tuple:
    """Isomorphism-invariant key: the lexicographically least relabeling.

    Minimizes the sorted edge-mask tuple over all vertex permutations.
    Only permutations sending some edge to {0, ..., r-1} can achieve the
    minimum (the least possible first edge), which prunes the scan to
    |E| * r! * (n-r)! permutations.
    """
    if not h.edge_masks:
        return (h.n, h.r, ())
    n, r = h.n, h.r
    edge_vertex_lists = [vertices_of(m) for m in h.edge_masks]
    best: tuple | None = None
    perm = [0] * n
    for base in edge_vertex_lists:
        others = [v for v in range(n) if v not in base]
        for head in itertools.permutations(range(r)):
            for vv, image in zip(base, head):
                perm[vv] = image
            for tail in itertools.permutations(range(r, n)):
                for vv, image in zip(others, tail):
                    perm[vv] = image
                relabeled = []
                for verts in edge_vertex_lists:
                    mm = 0
                    for vv in verts:
                        mm |= 1 << perm[vv]
                    relabeled.append(mm)
                relabeled.sort()
                key = tuple(relabeled)
                if best is None or key < best:
                    best = key
    return (n, r, best)


def isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    """Whether two families coincide up to a vertex relabeling."""
    if (a.n, a.r, len(a)) != (b.n, b.r, len(b)):
        return False
    return canonical_key(a) == canonical_key(b)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one extremal search instance."""

    n: int
    r: int
    k: int
    max_edges: int
    optimizer: Hypergraph
    kernel_count: int | None
    matches_kernel: bool
    kernel_covered: bool
    unique_up_to_iso: bool | None
    nodes: int
    elapsed: float
    naive_max: int | None = None

    def to_dict(self) -> dict:
        return {
            "params": {"n": self.n, "r": self.r, "k": self.k},
            "max_edges": self.max_edges,
            "optimizer": [sorted(e) for e in self.optimizer.edges],
            "kernel_count": self.kernel_count,
            "matches_kernel": self.matches_kernel,
            "kernel_covered": self.kernel_covered,
            "unique_up_to_iso": self.unique_up_to_iso,
            "nodes": self.nodes,
            "elapsed": self.elapsed,
            "naive_max": self.naive_max,
        }


def _core_masks(masks: list[int], k: int, r: int) -> list[int]:
    # codegree_core on raw masks, avoiding Hypergraph construction costs
    if k == 1:
        return masks
    while masks:
        counts: dict[int, int] = {}
        for m in masks:
            mm = m
            while mm:
                low = mm & -mm
                counts[m ^ low] = counts.get(m ^ low, 0) + 1
                mm ^= low
        bad = {s for s, c in counts.items() if c < k}
        if not bad:
            break
        keep = []
        for m in masks:
            ok = True
            mm = m
            while mm:
                low = mm & -mm
                if (m ^ low) in bad:
                    ok = False
                    break
                mm ^= low
            if ok:
                keep.append(m)
        masks = keep
    return masks


def naive_max_intersecting_with_codegree(n: int, r: int, k: int, allow_large: bool = False) -> int:
    """Slow oracle: scan every intersecting family, test the co-degree floor.

    The co-degree condition is not monotone under edge addition, so it
    prunes nothing; it is evaluated on each enumerated family and the
    best qualifying size is returned.
    """
    if not 1 <= k <= r <= n:
        raise ValueError(f"need 1 <= k <= r <= n, got n={n}, r={r}, k={k}")
    if n > 7 and not allow_large:
        raise LimitExceeded(
            f"naive oracle limited to n <= 7, got n={n}; pass allow_large=True"
        )
    all_edges = [mask_of(c) for c in itertools.combinations(range(n), r)]
    m = len(all_edges)
    adj = []
    for i, ei in enumerate(all_edges):
        a = 0
        for j, ej in enumerate(all_edges):
            if i != j and ei & ej:
                a |= 1 << j
        adj.append(a)

    best = 0
    chosen: list[int] = []
    counts: dict[int, int] = {}

    def qualifies() -> bool:
        return bool(chosen) and min(counts.values()) >= k

    def dfs(allowed: int):
        nonlocal best
        if qualifies() and len(chosen) > best:
            best = len(chosen)
        rest = allowed
        while rest:
            low = rest & -rest
            rest ^= low
            j = low.bit_length() - 1
            e = all_edges[j]
            chosen.append(e)
            mm = e
            while mm:
                b = mm & -mm
                counts[e ^ b] = counts.get(e ^ b, 0) + 1
                mm ^= b
            dfs(rest & adj[j])
            chosen.pop()
            mm = e
            while mm:
                b = mm & -mm
                sub = e ^ b
                counts[sub] -= 1
                if not counts[sub]:
                    del counts[sub]
                mm ^= b

    dfs((1 << m) - 1)
    return best


def max_intersecting_with_codegree(
    n: int,
    r: int,
    k: int,
    iso: bool = False,
    naive_check: bool = False,
    allow_large: bool = False,
) -> SearchReport:
    """Exact maximum size of an intersecting family with co-degree >= k.

    Scans maximal intersecting families and scores each by its co-degree
    core.  The reported optimizer is the tied optimum with the least
    canonical key; with iso=True the report also states whether all
    optima fall in a single isomorphism class.
    """
    if not 1 <= k <= r <= n:
        raise ValueError(f"need 1 <= k <= r <= n, got n={n}, r={r}, k={k}")
    _check_limit(n, r, allow_large)
    start = time.perf_counter()
    all_edges = [mask_of(c) for c in itertools.combinations(range(n), r)]
    counter = [0]
    best = 0
    optima: list[tuple[int, ...]] = [()]
    for indices in _maximal_cliques(all_edges, counter):
        core = _core_masks([all_edges[i] for i in indices], k, r)
        size = len(core)
        if size > best:
            best = size
            optima = [tuple(core)]
        elif size == best and size:
            t = tuple(core)
            if t not in optima:
                optima.append(t)

    candidates = [Hypergraph(n, r, masks) for masks in optima]
    keyed = sorted(
        ((canonical_key(c), i) for i, c in enumerate(candidates)), key=lambda p: p[0]
    )
    optimizer = candidates[keyed[0][1]]
    unique = None
    if iso:
        unique = len({key for key, _ in keyed}) == 1

    try:
        kcount = kernel_edge_count(KernelParams(n, r, k))
    except ValueError:
        kcount = None
    covered = kernel_cover(optimizer, k) is not None

    naive = None
    if naive_check:
        naive = naive_max_intersecting_with_codegree(n, r, k, allow_large=allow_large)
        if naive != best:
            raise AssertionError(
                f"naive oracle disagrees: naive={naive}, reduced={best} "
                f"at n={n}, r={r}, k={k}"
            )

    return SearchReport(
        n=n,
        r=r,
        k=k,
        max_edges=best,
        optimizer=optimizer,
        kernel_count=kcount,
        matches_kernel=kcount is not None and best == kcount,
        kernel_covered=covered,
        unique_up_to_iso=unique,
        nodes=counter[0],
        elapsed=time.perf_counter() - start,
        naive_max=naive,
    )


def uniformity_bound_check(h: Hypergraph) -> bool:
    """Co-degree never exceeds uniformity on intersecting families."""
    if not len(h):
        raise ValueError("uniformity_bound_check requires a non-empty hypergraph")
    if not h.is_intersecting():
        raise ValueError("uniformity_bound_check requires an intersecting hypergraph")
    return h.min_positive_codegree() <= h.r


def replacement_walk_witness(h: Hypergraph) -> tuple[frozenset, frozenset]:
    """Walk a high-co-degree family to a pair of disjoint edges.

    Starting from the first edge, each original vertex is swapped in
    turn for a fresh completion vertex of the remaining (r-1)-set; the
    co-degree floor above r guarantees a fresh choice at every step, and
    after r swaps the walk lands on an edge disjoint from the start.
    Only non-intersecting families can satisfy the hypothesis.
    """
    if not len(h):
        raise ValueError("needs a non-empty hypergraph")
    floor = h.min_positive_codegree()
    if floor <= h.r:
        raise ValueError(
            f"needs minimum positive co-degree above r={h.r}, got {floor}"
        )
    masks = list(h.edge_masks)
    h0 = masks[0]
    cur = h0
    forbidden = h0
    for x in vertices_of(h0):
        s = cur & ~(1 << x)
        step = None
        for m in masks:
            if m & s == s:
                v_bit = m & ~s
                if not v_bit & forbidden:
                    step = m
                    break
        if step is None:
            raise AssertionError("unreachable: co-degree floor guarantees a fresh vertex")
        cur = step
        forbidden |= step
    if cur & h0:
        raise AssertionError("unreachable: walk must end disjoint from the start")
    return frozenset(vertices_of(h0)), frozenset(vertices_of(cur))

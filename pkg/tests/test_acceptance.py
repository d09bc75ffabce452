"""Acceptance suite: one test per criterion, one printed line per result.

Run with: pytest tests/test_acceptance.py -v -s
"""

import math
import random
import time

from kernelsys import (
    Hypergraph,
    KernelParams,
    build_kernel_system,
    check_tau_bound,
    check_tau_equals_k,
    covering_family,
    enumerate_maximal_intersecting,
    erdos_rado_greedy,
    extract_small_core,
    find_sunflower_exact,
    is_sunflower_in,
    kernel_edge_count,
    max_cross_pair_report,
    max_intersecting_with_codegree,
    star,
    tau,
    uniformity_bound_check,
)
from kernelsys.corpus import intersecting_corpus, random_uniform_hypergraph

KERNEL_EXTREMAL_CASES = [(7, 3, 2), (6, 3, 3), (7, 3, 3)]


def report(name, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    assert ok, f"{name}: {detail}"


def test_criterion_01_kernel_formula_vs_enumeration():
    start = time.perf_counter()
    cases = 0
    for r in range(1, 5):
        for k in range(1, r + 1):
            for n in range(max(r, 2 * k - 1), 15):
                params = KernelParams(n, r, k)
                assert kernel_edge_count(params) == len(build_kernel_system(params))
                cases += 1
    elapsed = time.perf_counter() - start
    report(
        "criterion 1: kernel count formula = enumeration",
        elapsed < 10,
        f"{cases} triples in {elapsed:.2f}s (< 10s)",
    )


def test_criterion_02_ekr_reproduction():
    details = []
    for n in (6, 7, 8):
        start = time.perf_counter()
        rep = max_intersecting_with_codegree(n, 3, 1, iso=True)
        elapsed = time.perf_counter() - start
        expected = math.comb(n - 1, 2)
        assert rep.max_edges == expected, (n, rep.max_edges)
        assert elapsed < 300
        details.append(f"n={n}:{rep.max_edges}={expected} ({elapsed:.1f}s)")
    report("criterion 2: intersecting maximum matches C(n-1,2)", True, "; ".join(details))


def test_criterion_03_kernel_system_extremality():
    details = []
    for n, r, k in KERNEL_EXTREMAL_CASES:
        start = time.perf_counter()
        rep = max_intersecting_with_codegree(n, r, k, iso=True)
        elapsed = time.perf_counter() - start
        assert elapsed < 1800
        assert rep.kernel_count is not None
        assert rep.max_edges >= rep.kernel_count, (n, r, k)
        equality = rep.max_edges == rep.kernel_count
        if equality:
            assert rep.kernel_covered, (n, r, k)
            assert rep.unique_up_to_iso is True, (n, r, k)
        details.append(
            f"({n},{r},{k}): max={rep.max_edges} kernel={rep.kernel_count}"
            f" equal={equality} covered={rep.kernel_covered} unique={rep.unique_up_to_iso}"
        )
    report("criterion 3: small-case kernel extremality", True, "; ".join(details))


def test_criterion_04_uniformity_bound_suite():
    corpus = intersecting_corpus(seed=2024, count=1000, uniformities=(2, 3, 4))
    failures = sum(0 if uniformity_bound_check(h) else 1 for h in corpus)
    report(
        "criterion 4: co-degree <= uniformity on 1000 random intersecting",
        failures == 0,
        f"{failures} failures",
    )


def test_criterion_05_sunflower_bound_property():
    start = time.perf_counter()
    rng = random.Random(2024)
    checked = 0
    for r, p in [(2, 3), (3, 2), (3, 3)]:
        bound = math.factorial(r) * (p - 1) ** r
        for _ in range(1000):
            n = rng.randint(max(2 * r, r + 2), 12)
            if math.comb(n, r) < bound:
                n = 12
            m = rng.randint(bound, min(math.comb(n, r), bound + 25))
            h = random_uniform_hypergraph(rng, n, r, m)
            s = erdos_rado_greedy(h, p)
            assert s is not None and s.num_petals >= p, (n, r, p, m)
            assert is_sunflower_in(h, s)
            checked += 1
    elapsed = time.perf_counter() - start
    report(
        "criterion 5: greedy succeeds at the r!(p-1)^r bound",
        elapsed < 60,
        f"{checked} instances in {elapsed:.1f}s (< 60s)",
    )


def test_criterion_06_small_core_sharpness():
    start = time.perf_counter()
    n, r, k = 9, 3, 1
    h = Hypergraph(n, r, [{0, 1, v} for v in range(2, n)])
    for p in (2, 3):
        assert find_sunflower_exact(h, p, max_core=k) is None
        assert extract_small_core(h, p, k) is None
        greedy = erdos_rado_greedy(h, p)
        # the greedy ignores core caps; it must not produce a core <= k
        assert greedy is None or greedy.core_size > k
    elapsed = time.perf_counter() - start
    report(
        "criterion 6: fixed-pair family defeats all three finders",
        elapsed < 1,
        f"{elapsed:.3f}s (< 1s)",
    )


def test_criterion_07_tau_bound_and_covering_family():
    start = time.perf_counter()
    corpus = []
    for n in range(3, 8):
        corpus.extend(enumerate_maximal_intersecting(n, 3))
    for r in range(1, 5):
        for k in range(1, r + 1):
            for n in range(max(r, 2 * k - 1), 13):
                corpus.append(build_kernel_system(KernelParams(n, r, k)))
    for n in range(3, 10):
        for r in range(1, min(4, n) + 1):
            corpus.append(star(n, r))
    count = 0
    for h in corpus:
        assert check_tau_bound(h)
        t = tau(h)
        family = covering_family(h, t)
        assert len(family.members) <= h.r**t
        assert family.covers(h)
        count += 1
    elapsed = time.perf_counter() - start
    report(
        "criterion 7: edge bound and covering family on the full corpus",
        elapsed < 60,
        f"{count} hypergraphs in {elapsed:.1f}s (< 60s)",
    )


def test_criterion_08_cross_intersecting_maximum():
    details = []
    for n, a in [(6, 1), (6, 2), (7, 2)]:
        rep = max_cross_pair_report(n, a)
        assert rep.max_total == math.comb(n, a), (n, a, rep.max_total)
        assert rep.all_optima_star_or_empty, (n, a)
        assert rep.elapsed < 900
        details.append(f"(N={n},a={a}):{rep.max_total} optima={rep.optima_count}")
    report("criterion 8: cross-intersecting maximum = C(N,a)", True, "; ".join(details))


def test_criterion_09_optimizer_transversal_number():
    details = []
    for n, r, k in KERNEL_EXTREMAL_CASES:
        rep = max_intersecting_with_codegree(n, r, k)
        if rep.matches_kernel:
            assert check_tau_equals_k(n, r, k, rep.optimizer), (n, r, k)
            details.append(f"({n},{r},{k}): tau={k}")
    report("criterion 9: optimizers have transversal number k", True, "; ".join(details))


def test_criterion_10_naive_oracle_agreement():
    start = time.perf_counter()
    checked = []
    for n in range(3, 7):
        for k in (1, 2, 3):
            rep = max_intersecting_with_codegree(n, 3, k, naive_check=True)
            assert rep.naive_max == rep.max_edges
            checked.append(f"({n},3,{k}):{rep.max_edges}")
    elapsed = time.perf_counter() - start
    report(
        "criterion 10: reduction agrees with the naive oracle",
        elapsed < 300,
        f"{'; '.join(checked)} in {elapsed:.1f}s (< 5min)",
    )

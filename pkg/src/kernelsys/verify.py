"""Batch verification driver.

Runs the library's standing checks -- closed-form kernel counts against
enumeration, the co-degree/uniformity bound, the sunflower core lower
bound on intersecting families, the transversal edge-count bound, the
cross-intersecting maxima, and the small extremal search cases -- and
reports pass/fail per check with parameters and timings.  All randomness
flows from one seeded generator so a report is reproducible from its
recorded seed.
"""

from __future__ import annotations

import random
import time
from math import comb

from .corpus import intersecting_corpus
from .extremal import max_intersecting_with_codegree, uniformity_bound_check
from .kernels import KernelParams, build_kernel_system, kernel_edge_count
from .sunflowers import find_sunflower_exact
from .transversals import check_tau_bound, covering_family, max_cross_pair_report, tau


def _check_kernel_count_formula(rng: random.Random) -> dict:
    cases = 0
    for r in range(1, 5):
        for k in range(1, r + 1):
            for n in range(max(r, 2 * k - 1), 15):
                params = KernelParams(n, r, k)
                if kernel_edge_count(params) != len(build_kernel_system(params)):
                    return {"ok": False, "detail": f"mismatch at {params}"}
                cases += 1
    return {"ok": True, "detail": f"{cases} parameter triples"}


def _check_codegree_uniformity(rng: random.Random) -> dict:
    corpus = intersecting_corpus(rng.randrange(2**30), 1000)
    for h in corpus:
        if not uniformity_bound_check(h):
            return {"ok": False, "detail": f"violated on {h!r}"}
    return {"ok": True, "detail": f"{len(corpus)} random intersecting hypergraphs"}


def _check_sunflower_core_bound(rng: random.Random) -> dict:
    # in an intersecting family with co-degree floor k, any sunflower
    # with more than r petals must have a core of at least k vertices
    corpus = intersecting_corpus(rng.randrange(2**30), 120)
    checked = 0
    for h in corpus:
        k = h.min_positive_codegree()
        if k < 1:
            continue
        hit = find_sunflower_exact(h, h.r + 1, max_core=k - 1)
        if hit is not None:
            return {"ok": False, "detail": f"small-core sunflower in {h!r}"}
        checked += 1
    return {"ok": True, "detail": f"{checked} hypergraphs"}


def _check_tau_edge_bound(rng: random.Random) -> dict:
    corpus = intersecting_corpus(rng.randrange(2**30), 200)
    for h in corpus:
        if not check_tau_bound(h):
            return {"ok": False, "detail": f"bound violated on {h!r}"}
        t = tau(h)
        if t <= h.r and len(h):
            family = covering_family(h, t)
            if len(family.members) > h.r**t or not family.covers(h):
                return {"ok": False, "detail": f"covering family broken on {h!r}"}
    return {"ok": True, "detail": f"{len(corpus)} hypergraphs with covering families"}


def _check_cross_pair_maxima(rng: random.Random) -> dict:
    for n, a in [(6, 1), (6, 2), (7, 2)]:
        rep = max_cross_pair_report(n, a)
        if rep.max_total != comb(n, a) or not rep.all_optima_star_or_empty:
            return {"ok": False, "detail": f"unexpected optimum at N={n}, a={a}: {rep}"}
    return {"ok": True, "detail": "(N,a) in {(6,1),(6,2),(7,2)}"}


def _check_extremal_small_cases(rng: random.Random) -> dict:
    rep = max_intersecting_with_codegree(7, 3, 1)
    if rep.max_edges != 15 or not rep.matches_kernel:
        return {"ok": False, "detail": f"(7,3,1) gave {rep.max_edges}"}
    details = []
    for n, r, k in [(7, 3, 2), (6, 3, 3)]:
        rep = max_intersecting_with_codegree(n, r, k)
        if rep.kernel_count is None or rep.max_edges < rep.kernel_count:
            return {
                "ok": False,
                "detail": f"({n},{r},{k}) fell below the kernel count: {rep.max_edges}",
            }
        if rep.matches_kernel and not rep.kernel_covered:
            return {"ok": False, "detail": f"({n},{r},{k}) optimum escapes every kernel"}
        if rep.matches_kernel and tau(rep.optimizer) != k:
            return {"ok": False, "detail": f"({n},{r},{k}) optimum has tau != k"}
        details.append(f"({n},{r},{k}):{rep.max_edges}")
    return {"ok": True, "detail": "maxima " + ", ".join(details)}


CHECKS = [
    ("kernel-count-formula", _check_kernel_count_formula),
    ("codegree-uniformity-bound", _check_codegree_uniformity),
    ("sunflower-core-lower-bound", _check_sunflower_core_bound),
    ("transversal-edge-bound", _check_tau_edge_bound),
    ("cross-intersecting-maxima", _check_cross_pair_maxima),
    ("extremal-small-cases", _check_extremal_small_cases),
]


def verify_all(seed: int = 0, budget: float = 900.0) -> dict:
    """Run every check within a wall-clock budget.

    Checks that would start after the budget is exhausted are reported
    as skipped rather than silently dropped.
    """
    rng = random.Random(seed)
    start = time.perf_counter()
    results = []
    for name, fn in CHECKS:
        spent = time.perf_counter() - start
        if spent >= budget:
            results.append(
                {"name": name, "status": "skipped", "detail": "budget exhausted", "elapsed": 0.0}
            )
            continue
        t0 = time.perf_counter()
        outcome = fn(rng)
        results.append(
            {
                "name": name,
                "status": "pass" if outcome["ok"] else "fail",
                "detail": outcome["detail"],
                "elapsed": round(time.perf_counter() - t0, 3),
            }
        )
    statuses = {r["status"] for r in results}
    if "fail" in statuses:
        overall = "fail"
    elif "skipped" in statuses:
        overall = "skipped"
    else:
        overall = "pass"
    return {
        "seed": seed,
        "budget": budget,
        "overall": overall,
        "checks": results,
        "elapsed": round(time.perf_counter() - start, 3),
    }

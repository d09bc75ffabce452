"""Command-line interface.

Every command emits one JSON report on stdout with the stable schema
(command, params, value, witness?, elapsed, version); the table format
is rendered from that same report.  Exit status: 0 on success, 2 on a
violated precondition, 3 when a resource limit refuses the run.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .extremal import max_intersecting_with_codegree
from .hgio import read_hg, write_hg
from .hypergraphs import Hypergraph, LimitExceeded
from .kernels import KernelParams, build_kernel_system, kernel_cover, kernel_edge_count
from .sunflowers import erdos_rado_greedy, extract_small_core, find_sunflower_exact, is_sunflower_in
from .transversals import covering_family, max_cross_pair_report, minimum_transversal
from .verify import verify_all


@dataclass
class RunConfig:
    """A validated command invocation, ready to dispatch."""

    command: str
    subcommand: str | None = None
    path: str | None = None
    n: int | None = None
    r: int | None = None
    k: int | None = None
    p: int | None = None
    t: int | None = None
    big_n: int | None = None
    a: int | None = None
    max_core: int | None = None
    iso: bool = False
    naive_check: bool = False
    allow_large: bool = False
    fmt: str = "json"
    out: str | None = None
    seed: int = 0
    budget: float = field(default_factory=lambda: float(os.environ.get("KERNELSYS_BUDGET", 900)))


def _hg(config: RunConfig) -> Hypergraph:
    return read_hg(config.path)


def _sunflower_witness(s, h) -> dict:
    return {
        "core": sorted(s.core),
        "petals": [sorted(p) for p in s.petals],
        "edges": [sorted(e) for e in s.edges],
        "verified": is_sunflower_in(h, s),
    }


def _run_codegree(config: RunConfig) -> dict:
    return {"value": _hg(config).min_positive_codegree()}


def _run_tau(config: RunConfig) -> dict:
    witness = minimum_transversal(_hg(config))
    return {"value": len(witness), "witness": sorted(witness)}


def _run_cover(config: RunConfig) -> dict:
    family = covering_family(_hg(config), config.t)
    return {
        "value": len(family.members),
        "witness": [sorted(m) for m in family.members],
    }


def _run_cross_max(config: RunConfig) -> dict:
    rep = max_cross_pair_report(config.big_n, config.a)
    return {
        "value": rep.max_total,
        "witness": {
            "optima_count": rep.optima_count,
            "all_optima_star_or_empty": rep.all_optima_star_or_empty,
            "nodes": rep.nodes,
        },
    }


def _run_sunflower(config: RunConfig) -> dict:
    h = _hg(config)
    if config.subcommand == "exact":
        s = find_sunflower_exact(h, config.p, config.max_core)
    elif config.subcommand == "greedy":
        s = erdos_rado_greedy(h, config.p)
    else:
        max_core = config.max_core if config.max_core is not None else h.r - 1
        s = extract_small_core(h, config.p, max_core)
    if s is None:
        return {"value": None, "witness": None}
    return {"value": s.num_petals, "witness": _sunflower_witness(s, h)}


def _run_kernel(config: RunConfig) -> dict:
    if config.subcommand == "count":
        return {"value": kernel_edge_count(KernelParams(config.n, config.r, config.k))}
    if config.subcommand == "gen":
        h = build_kernel_system(KernelParams(config.n, config.r, config.k))
        if config.out:
            write_hg(h, config.out)
            return {"value": len(h), "witness": {"path": config.out}}
        return {"value": len(h), "witness": {"edges": [sorted(e) for e in h.edges]}}
    cover = kernel_cover(_hg(config), config.k)
    if cover is None:
        return {"value": None, "witness": None}
    return {"value": len(cover), "witness": sorted(cover)}


def _run_extremal(config: RunConfig) -> dict:
    rep = max_intersecting_with_codegree(
        config.n,
        config.r,
        config.k,
        iso=config.iso,
        naive_check=config.naive_check,
        allow_large=config.allow_large,
    )
    return {"value": rep.max_edges, "witness": rep.to_dict()}


def _run_verify(config: RunConfig) -> dict:
    report = verify_all(seed=config.seed, budget=config.budget)
    return {"value": report["overall"], "witness": report}


_DISPATCH = {
    "codegree": _run_codegree,
    "tau": _run_tau,
    "cover": _run_cover,
    "cross-max": _run_cross_max,
    "sunflower": _run_sunflower,
    "kernel": _run_kernel,
    "extremal": _run_extremal,
    "verify": _run_verify,
}


def run(config: RunConfig) -> tuple[int, dict]:
    """Dispatch a config; returns (exit status, report dict)."""
    start = time.perf_counter()
    report = {
        "command": config.command
        + (f" {config.subcommand}" if config.subcommand else ""),
        "params": _params_dict(config),
        "value": None,
        "elapsed": None,
        "version": __version__,
    }
    try:
        outcome = _DISPATCH[config.command](config)
    except LimitExceeded as exc:
        report["error"] = str(exc)
        report["elapsed"] = round(time.perf_counter() - start, 4)
        return 3, report
    except (ValueError, OSError) as exc:
        report["error"] = str(exc)
        report["elapsed"] = round(time.perf_counter() - start, 4)
        return 2, report
    report.update(outcome)
    report["elapsed"] = round(time.perf_counter() - start, 4)
    order = ("command", "params", "value", "witness", "elapsed", "version", "error")
    report = {key: report[key] for key in order if key in report}
    if config.command == "verify":
        status = {"pass": 0, "fail": 1, "skipped": 3}[report["value"]]
        return status, report
    return 0, report


def _params_dict(config: RunConfig) -> dict:
    named = {
        "path": config.path,
        "n": config.n,
        "r": config.r,
        "k": config.k,
        "p": config.p,
        "t": config.t,
        "N": config.big_n,
        "a": config.a,
        "max_core": config.max_core,
        "iso": config.iso or None,
        "naive_check": config.naive_check or None,
        "seed": config.seed if config.command == "verify" else None,
        "budget": config.budget if config.command == "verify" else None,
    }
    return {key: value for key, value in named.items() if value is not None}


def render_table(report: dict) -> str:
    """Human-readable rendering, derived from the JSON report."""
    rows = []

    def emit(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            rows.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            rows.append(f"{pad}{key}:")
            for item in value:
                rows.append(
                    "  " * (indent + 1)
                    + "  ".join(f"{k}={json.dumps(v)}" for k, v in item.items())
                )
        else:
            rows.append(f"{pad}{key:<14} {json.dumps(value)}")

    for key, value in report.items():
        emit(key, value)
    return "\n".join(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kernelsys",
        description="Intersecting uniform hypergraphs: co-degree, kernel systems, "
        "sunflowers, transversals, exact extremal search.",
    )
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--out", help="write the JSON report to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("codegree", help="minimum positive co-degree of a .hg file")
    p.add_argument("path")

    p = sub.add_parser("tau", help="exact transversal number of a .hg file")
    p.add_argument("path")

    p = sub.add_parser("cover", help="t-uniform covering family of a .hg file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("path")

    p = sub.add_parser("cross-max", help="max |A|+|B| over cross-intersecting pairs")
    p.add_argument("--N", dest="big_n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)

    p = sub.add_parser("sunflower", help="sunflower search in a .hg file")
    mode = p.add_subparsers(dest="subcommand", required=True)
    for name in ("exact", "greedy", "smallcore"):
        q = mode.add_parser(name)
        q.add_argument("--p", type=int, required=True)
        if name != "greedy":
            q.add_argument("--max-core", dest="max_core", type=int)
        q.add_argument("path")

    p = sub.add_parser("kernel", help="kernel systems: gen, count, cover")
    mode = p.add_subparsers(dest="subcommand", required=True)
    q = mode.add_parser("gen")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--out", help="write the generated hypergraph here as .hg")
    q = mode.add_parser("count")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q = mode.add_parser("cover")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("path")

    p = sub.add_parser("extremal", help="max intersecting family with a co-degree floor")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--iso", action="store_true")
    p.add_argument("--naive-check", dest="naive_check", action="store_true")
    p.add_argument(
        "--allow-large",
        dest="allow_large",
        action="store_true",
        default=bool(int(os.environ.get("KERNELSYS_ALLOW_LARGE", "0"))),
    )

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--budget",
        type=float,
        default=float(os.environ.get("KERNELSYS_BUDGET", 900)),
        help="wall-clock budget in seconds; 0 skips everything",
    )

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {
        key: getattr(args, key)
        for key in (
            "command",
            "subcommand",
            "path",
            "n",
            "r",
            "k",
            "p",
            "t",
            "big_n",
            "a",
            "max_core",
            "iso",
            "naive_check",
            "allow_large",
            "out",
            "seed",
            "budget",
        )
        if hasattr(args, key)
    }
    fields["fmt"] = args.format
    return RunConfig(**fields)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    status, report = run(config)
    # kernel gen uses --out for the .hg payload, every other command for
    # the JSON report
    if config.out and not (config.command == "kernel" and config.subcommand == "gen"):
        with open(config.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    if "error" in report:
        print(report["error"], file=sys.stderr)
    if config.fmt == "table":
        print(render_table(report))
    else:
        print(json.dumps(report, indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())

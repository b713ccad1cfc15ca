"""Command-line interface.

Subcommands, one per capability:

  group N          invariant factors of K(C4 x Cn) (closed form,
                   relations matrix, or full Laplacian SNF)
  treecount N      spanning-tree count with optional cross-checks
  seq KIND         sequence table (e, f, h, g, or raw u/v with --m)
  valuations       predicted vs observed 2- and 3-adic valuations
  subgroup N1 N2   factorwise subgroup test between two critical groups
  snf              Smith normal form of a matrix file
  graph-group      critical group of a graph given as an edge list
  verify           per-n three-way agreement sweep (optionally the full
                   staged-reduction pipeline)

Exit status: 0 success/verified, 1 a verification check failed,
2 usage or input error.  ``--json`` switches to a machine-readable
format in which every integer is a decimal string.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .critgroup import (
    closed_form_group,
    group_of_graph,
    group_via_relations,
    subgroup_check,
    verify_reduction_pipeline,
)
from .exactla import parse_matrix, snf
from .graph import c4xcn, parse_edge_list
from .seq import SeqKind, derived_seq, observed_valuation, predicted_valuation, u_prefix, v_prefix
from .treecount import tree_count_closed, tree_count_matrix, trig_product_check

_MIN_N = 3


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one command plus its inputs and output options."""

    command: str
    n: Optional[int] = None
    n_range: Optional[tuple[int, int]] = None
    input_path: Optional[str] = None
    json_output: bool = False
    tolerance: float = 1e-9
    parallelism: int = 1


@dataclass
class VerifySummary:
    """Sweep outcome: per-n pass/fail in n order."""

    n_range: tuple[int, int]
    per_n: list[tuple[int, bool, str]]
    first_failure: Optional[int]
    elapsed: float


class _UsageError(Exception):
    pass


def _emit(payload: dict, cfg: RunConfig, text_lines: list[str]) -> None:
    if cfg.json_output:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _group_payload(cfg: RunConfig, group, extra: Optional[dict] = None) -> tuple[dict, list[str]]:
    payload = {
        "command": cfg.command,
        "invariant_factors": [str(f) for f in group.invariant_factors],
        "order": str(group.order),
    }
    if cfg.n is not None:
        payload["n"] = str(cfg.n)
    if extra:
        payload.update(extra)
    if group.invariant_factors:
        lines = [
            "invariant factors: " + " ".join(str(f) for f in group.invariant_factors),
            f"order: {group.order}",
        ]
    else:
        lines = ["trivial group", "order: 1"]
    return payload, lines


def _require_n(cfg: RunConfig) -> int:
    assert cfg.n is not None
    if cfg.n < _MIN_N:
        raise _UsageError(f"n must be >= {_MIN_N}, got {cfg.n}")
    return cfg.n


def _cmd_group(cfg: RunConfig, method: str) -> int:
    n = _require_n(cfg)
    if method == "closed":
        group = closed_form_group(n)
    elif method == "relations":
        group = group_via_relations(n)
    else:
        group = group_of_graph(c4xcn(n))
    payload, lines = _group_payload(cfg, group, {"method": method})
    _emit(payload, cfg, lines)
    return 0


def _cmd_treecount(cfg: RunConfig, check: Optional[str]) -> int:
    n = _require_n(cfg)
    count = tree_count_closed(n)
    checks: list[dict] = []
    lines = [f"spanning trees: {count}"]
    status = 0
    if check in ("matrix", "all"):
        by_matrix = tree_count_matrix(c4xcn(n))
        ok = by_matrix == count
        checks.append({
            "name": "matrix-tree",
            "pass": ok,
            "detail": f"reduced-Laplacian determinant {by_matrix}",
        })
        lines.append(f"matrix-tree check: {'ok' if ok else 'MISMATCH'} ({by_matrix})")
        status |= 0 if ok else 1
    if check in ("trig", "all"):
        report = trig_product_check(n, cfg.tolerance)
        ok = bool(report.trig_passed)
        checks.append({
            "name": "trig-product",
            "pass": ok,
            "detail": f"relative log residual {report.trig_log_residual:.3e}",
        })
        lines.append(
            f"eigenvalue-product check: {'ok' if ok else 'FAIL'} "
            f"(residual {report.trig_log_residual:.3e}, tolerance {cfg.tolerance:g})"
        )
        status |= 0 if ok else 1
    payload = {"command": "treecount", "n": str(n), "count": str(count)}
    if checks:
        payload["checks"] = checks
    _emit(payload, cfg, lines)
    return status


def _cmd_seq(cfg: RunConfig, kind: str, upto: int, m: Optional[int]) -> int:
    if upto < 0:
        raise _UsageError(f"--upto must be >= 0, got {upto}")
    if kind in ("u", "v"):
        if m is None:
            raise _UsageError(f"sequence kind '{kind}' requires --m")
        values = (u_prefix if kind == "u" else v_prefix)(m, upto + 1)
    else:
        if m is not None:
            raise _UsageError("--m only applies to kinds 'u' and 'v'")
        sk = SeqKind(kind)
        values = [derived_seq(sk, i) for i in range(upto + 1)]
    payload = {
        "command": "seq",
        "kind": kind,
        "upto": str(upto),
        "values": [str(v) for v in values],
    }
    if m is not None:
        payload["m"] = str(m)
    lines = [f"{i} {v}" for i, v in enumerate(values)]
    _emit(payload, cfg, lines)
    return 0


def _cmd_valuations(cfg: RunConfig, upto: int) -> int:
    if upto < 2:
        raise _UsageError(f"--upto must be >= 2, got {upto}")
    families = [
        ("T2(e)", SeqKind.E, 2),
        ("T2(f)", SeqKind.F, 2),
        ("T3(e)", SeqKind.E, 3),
        ("T3(f)", SeqKind.F, 3),
    ]
    checks = []
    lines = []
    status = 0
    for label, kind, prime in families:
        first_bad = None
        for n in range(2, upto + 1):
            predicted = predicted_valuation(kind, prime, n).predicted_exponent
            observed = observed_valuation(derived_seq(kind, n), prime)
            if predicted != observed:
                first_bad = (n, predicted, observed)
                break
        ok = first_bad is None
        detail = (
            f"n=2..{upto} all match"
            if ok
            else f"first mismatch at n={first_bad[0]}: predicted {first_bad[1]}, observed {first_bad[2]}"
        )
        checks.append({"name": label, "pass": ok, "detail": detail})
        lines.append(f"{label}: {'ok' if ok else 'FAIL'} ({detail})")
        status |= 0 if ok else 1
    payload = {"command": "valuations", "upto": str(upto), "checks": checks}
    _emit(payload, cfg, lines)
    return status


def _cmd_subgroup(cfg: RunConfig, n1: int, n2: int) -> int:
    if n1 < _MIN_N or n2 < _MIN_N:
        raise _UsageError(f"both n values must be >= {_MIN_N}")
    ok = subgroup_check(n1, n2)
    g1, g2 = closed_form_group(n1), closed_form_group(n2)
    payload = {
        "command": "subgroup",
        "n1": str(n1),
        "n2": str(n2),
        "is_subgroup": ok,
        "factors1": [str(f) for f in g1.invariant_factors],
        "factors2": [str(f) for f in g2.invariant_factors],
    }
    lines = [
        f"K(C4 x C{n1}) = {g1}",
        f"K(C4 x C{n2}) = {g2}",
        f"factorwise subgroup: {'yes' if ok else 'no'}",
    ]
    _emit(payload, cfg, lines)
    return 0 if ok else 1


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


def _cmd_snf(cfg: RunConfig) -> int:
    assert cfg.input_path is not None
    matrix = parse_matrix(_read_file(cfg.input_path))
    result = snf(matrix)
    payload = {
        "command": "snf",
        "diagonal": [str(d) for d in result.diagonal],
    }
    _emit(payload, cfg, ["diagonal: " + " ".join(str(d) for d in result.diagonal)])
    return 0


def _cmd_graph_group(cfg: RunConfig) -> int:
    assert cfg.input_path is not None
    graph = parse_edge_list(_read_file(cfg.input_path))
    group = group_of_graph(graph)
    payload, lines = _group_payload(cfg, group)
    _emit(payload, cfg, lines)
    return 0


def _verify_single(n: int, pipeline: bool) -> tuple[int, bool, str]:
    """One sweep item; module-level so process pools can pickle it."""
    closed = closed_form_group(n)
    relations = group_via_relations(n)
    full = group_of_graph(c4xcn(n))
    ok = closed == relations == full
    if not ok:
        return n, False, (
            f"disagreement: closed {closed.invariant_factors}, "
            f"relations {relations.invariant_factors}, laplacian {full.invariant_factors}"
        )
    detail = "closed = relations = laplacian: " + (str(closed) if closed.invariant_factors else "trivial")
    if pipeline:
        report = verify_reduction_pipeline(n)
        if not report.all_passed:
            names = ", ".join(name for name, _, _ in report.failures())
            return n, False, f"pipeline stages failed: {names}"
        detail += f"; pipeline {len(report.stage_checks)} stages ok"
    return n, True, detail


def _cmd_verify(cfg: RunConfig, pipeline: bool) -> int:
    assert cfg.n_range is not None
    lo, hi = cfg.n_range
    ns = list(range(lo, hi + 1))
    start = time.monotonic()
    workers = cfg.parallelism
    if workers == 1 or len(ns) == 1:
        results = [_verify_single(n, pipeline) for n in ns]
    else:
        max_workers = workers if workers > 0 else None
        with concurrent.futures.ProcessPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(_verify_single, ns, [pipeline] * len(ns)))
    results.sort(key=lambda item: item[0])
    summary = VerifySummary(
        n_range=(lo, hi),
        per_n=results,
        first_failure=next((n for n, ok, _ in results if not ok), None),
        elapsed=time.monotonic() - start,
    )
    payload = {
        "command": "verify",
        "range": f"{lo}..{hi}",
        "checks": [
            {"name": f"n={n}", "pass": ok, "detail": detail}
            for n, ok, detail in summary.per_n
        ],
    }
    lines = [f"n={n} {'ok' if ok else 'FAIL'} ({detail})" for n, ok, detail in summary.per_n]
    _emit(payload, cfg, lines)
    passed = sum(1 for _, ok, _ in summary.per_n if ok)
    print(
        f"verified {lo}..{hi}: {passed}/{len(ns)} ok in {summary.elapsed:.2f}s",
        file=sys.stderr,
    )
    return 0 if summary.first_failure is None else 1


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise _UsageError(f"range must look like A..B, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise _UsageError(f"range bounds must be integers, got {text!r}") from exc
    if lo < _MIN_N:
        raise _UsageError(f"range lower bound must be >= {_MIN_N}, got {lo}")
    if hi < lo:
        raise _UsageError(f"empty range {text!r}")
    return lo, hi


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critgraph",
        description="Exact critical groups and spanning-tree counts of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("group", help="critical group of C4 x Cn")
    sp.add_argument("n", type=int)
    sp.add_argument("--method", choices=("closed", "relations", "snf"), default="closed")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("treecount", help="spanning-tree count of C4 x Cn")
    sp.add_argument("n", type=int)
    sp.add_argument("--check", choices=("matrix", "trig", "all"))
    sp.add_argument("--tolerance", type=float, default=1e-9)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("seq", help="print a sequence table")
    sp.add_argument("kind", choices=("e", "f", "h", "g", "u", "v"))
    sp.add_argument("--upto", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("valuations", help="predicted vs observed 2-/3-adic valuations")
    sp.add_argument("--upto", type=int, required=True)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("subgroup", help="factorwise subgroup test")
    sp.add_argument("n1", type=int)
    sp.add_argument("n2", type=int)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("snf", help="Smith normal form of a matrix file")
    sp.add_argument("--matrix", required=True, metavar="FILE")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("graph-group", help="critical group of an edge-list graph")
    sp.add_argument("--edges", required=True, metavar="FILE")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("verify", help="three-way agreement sweep over a range of n")
    sp.add_argument("--range", required=True, metavar="A..B")
    sp.add_argument("--pipeline", action="store_true")
    sp.add_argument("--parallelism", type=int, default=1,
                    help="worker processes; 0 = one per CPU")
    sp.add_argument("--json", action="store_true")

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "group":
            cfg = RunConfig("group", n=args.n, json_output=args.json)
            return _cmd_group(cfg, args.method)
        if args.command == "treecount":
            cfg = RunConfig("treecount", n=args.n, json_output=args.json,
                            tolerance=args.tolerance)
            return _cmd_treecount(cfg, args.check)
        if args.command == "seq":
            cfg = RunConfig("seq", json_output=args.json)
            return _cmd_seq(cfg, args.kind, args.upto, args.m)
        if args.command == "valuations":
            cfg = RunConfig("valuations", json_output=args.json)
            return _cmd_valuations(cfg, args.upto)
        if args.command == "subgroup":
            cfg = RunConfig("subgroup", json_output=args.json)
            return _cmd_subgroup(cfg, args.n1, args.n2)
        if args.command == "snf":
            cfg = RunConfig("snf", input_path=args.matrix, json_output=args.json)
            return _cmd_snf(cfg)
        if args.command == "graph-group":
            cfg = RunConfig("graph-group", input_path=args.edges, json_output=args.json)
            return _cmd_graph_group(cfg)
        if args.command == "verify":
            if args.parallelism < 0:
                raise _UsageError(f"--parallelism must be >= 0, got {args.parallelism}")
            cfg = RunConfig("verify", n_range=_parse_range(args.range),
                            json_output=args.json, parallelism=args.parallelism)
            return _cmd_verify(cfg, args.pipeline)
        raise _UsageError(f"unknown command {args.command!r}")
    except (_UsageError, ValueError, ArithmeticError) as exc:
        print(f"critgraph: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

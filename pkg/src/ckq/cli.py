"""Command-line front end for the verification suites.

`ckq verify <check>` fans the selected check out over variants and scale
assignments, prints an aligned table (or JSON), and saves the run to
``ckq-report.json``.  `ckq report` replays that file and renders a status
grid to ``ckq-report.png``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from . import funq, pairing, uqalg
from .freealg import ReductionBudgetExceeded
from .isomap import iso_covered, verify_iso
from .reports import CheckReport
from .scalar import ALL_J, JAssign

SCHEMA_VERSION = 1
REPORT_FILE = "ckq-report.json"
FIGURE_FILE = "ckq-report.png"

CHECKS = (
    "rtt",
    "ybe",
    "relations-from-rtt",
    "det",
    "hopf-fun",
    "hopf-su",
    "hopf-so",
    "pairing",
    "ideal",
    "iso",
    "contraction",
    "special-cases",
    "confluence",
)

J_TOKENS = tuple(j.token for j in ALL_J)
_J_ORDER = {t: k for k, t in enumerate(J_TOKENS)}
_VARIANT_NAMES = tuple(sorted(funq.VARIANTS))

# checks whose library entry points default below the global N=8
_DEFAULT_ORDER = {"confluence": 4, "iso": 6}
_DEFAULT_MODE = {"hopf-fun": "ring"}

Task = Tuple[str, str, str, int, str, int]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ckq",
        description="exact verification suites for the two-scale quantum "
        "group family and its dual algebras",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="run checks and save ckq-report.json")
    v.add_argument("check", choices=CHECKS + ("all",))
    v.add_argument("--variant", default="all", choices=_VARIANT_NAMES + ("all",))
    v.add_argument("--j", default="all", choices=J_TOKENS + ("all",),
                   help="scale assignment (i1/i2 are the dual units)")
    v.add_argument("--order", type=int, default=None,
                   help="series truncation order; default 8 "
                   "(iso 6, confluence 4)")
    v.add_argument("--mode", choices=funq.MODES, default=None,
                   help="function-algebra mode; default ring for hopf-fun, "
                   "bialgebra elsewhere")
    v.add_argument("--maxlen", type=int, default=3,
                   help="max word length for word-indexed checks")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--jobs", type=int, default=1,
                   help="worker processes for independent cases")

    r = sub.add_parser("report", help="replay ckq-report.json and render "
                       "the status grid")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.add_argument("--figure", default=FIGURE_FILE,
                   help="output path for the status grid PNG")
    r.add_argument("--no-figure", action="store_true",
                   help="skip figure rendering")
    return p


def _order_for(check: str, requested: Optional[int]) -> int:
    if requested is not None:
        return requested
    return _DEFAULT_ORDER.get(check, 8)


def _mode_for(check: str, requested: Optional[str]) -> str:
    if requested is not None:
        return requested
    return _DEFAULT_MODE.get(check, "bialgebra")


def expand_tasks(checks: Sequence[str], variant: str, j: str,
                 order: Optional[int], mode: Optional[str], maxlen: int,
                 skipped: Optional[List[str]] = None) -> List[Task]:
    """One task per (check, variant, j) case, in a fixed generation order.

    Uncovered iso variants are dropped (recorded in `skipped`) rather than
    failed; asking for them explicitly is rejected at parse time."""
    variants = _VARIANT_NAMES if variant == "all" else (variant,)
    tokens = J_TOKENS if j == "all" else (j,)
    tasks: List[Task] = []
    for check in checks:
        n = _order_for(check, order)
        m = _mode_for(check, mode)
        if check == "special-cases":
            tasks.append((check, "all", "", n, m, maxlen))
            continue
        for var in variants:
            if check == "iso" and not iso_covered(var):
                if skipped is not None:
                    skipped.append(f"iso: variant {var} has no isomorphism "
                                   "images; skipped")
                continue
            for tok in tokens:
                tasks.append((check, var, tok, n, m, maxlen))
    return tasks


def _dispatch(check: str, var: str, tok: str, order: int, mode: str,
              maxlen: int) -> List[CheckReport]:
    j = JAssign.parse(tok) if tok else None
    if check == "rtt":
        return [funq.rtt_report(var, j, order)]
    if check == "ybe":
        return [funq.ybe_report(var, j, order)]
    if check == "relations-from-rtt":
        return [funq.rtt_rules_report(var, j, order)]
    if check == "det":
        return [funq.det_report(var, j, order, mode)]
    if check == "hopf-fun":
        return [funq.hopf_axiom_report_fun(var, j, order, mode)]
    if check == "hopf-su":
        return [
            uqalg.hopf_axiom_report_su(var, j, order),
            uqalg.su_conjugation_check(uqalg.build_su(var, j, order)),
        ]
    if check == "hopf-so":
        return [
            uqalg.hopf_axiom_report_so(var, j, order),
            uqalg.so_conjugation_check(uqalg.build_so(var, j, order)),
        ]
    if check == "pairing":
        return [pairing.verify_LT_pairing(var, j, order)]
    if check == "ideal":
        return [
            pairing.verify_relation_functionals(var, j, order, maxlen),
            pairing.verify_ideal_annihilation(var, j, order, maxlen),
        ]
    if check == "iso":
        return [verify_iso(var, j, order)]
    if check == "contraction":
        return [
            funq.verify_contraction_fun(var, j, order),
            uqalg.verify_contraction_alg("su", var, j, order),
            uqalg.verify_contraction_alg("so", var, j, order),
        ]
    if check == "special-cases":
        return [uqalg.special_case_report(order)]
    if check == "confluence":
        return [
            funq.confluence_report_fun(var, j, order, mode, maxlen),
            uqalg.confluence_report_alg("su", var, j, order, maxlen),
            uqalg.confluence_report_alg("so", var, j, order, maxlen),
        ]
    raise ValueError(f"unknown check {check!r}")


def _run_task(task: Task) -> List[dict]:
    check, var, tok, order, mode, maxlen = task
    start = time.perf_counter()
    try:
        reps = _dispatch(check, var, tok, order, mode, maxlen)
    except ReductionBudgetExceeded as exc:
        rep = CheckReport(check, "", var, tok, order)
        rep.add("step-budget", False, note=str(exc))
        reps = [rep]
    elapsed = time.perf_counter() - start
    out = []
    for rep in reps:
        rep.wall_time_s = round(elapsed / len(reps), 6)
        out.append(rep.to_dict())
    return out


def run_suite(tasks: Sequence[Task], jobs: int = 1) -> List[dict]:
    """Execute tasks (optionally in a worker pool) and sort the records.

    Record content is deterministic regardless of scheduling; only the
    wall-time fields vary between runs."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    runs = [r for chunk in chunks for r in chunk]
    runs.sort(key=lambda r: (r["check"], r["variant"],
                             _J_ORDER.get(r["j"], len(_J_ORDER))))
    return runs


def emit_json(runs: List[dict]) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "runs": runs}
    return json.dumps(doc, indent=2, sort_keys=True)


def emit_text(runs: List[dict]) -> str:
    headers = ("check", "family", "variant", "j", "N", "mode", "maxlen",
               "items", "status")
    table = []
    for r in runs:
        table.append((
            r["check"], r["family"], r["variant"], r["j"], str(r["N"]),
            r.get("mode", "-"), str(r.get("maxlen", "-")),
            str(len(r["items"])), r["status"],
        ))
    widths = [
        max(len(headers[i]), *(len(row[i]) for row in table)) if table
        else len(headers[i])
        for i in range(len(headers))
    ]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in table:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    failing = [r for r in runs if r["status"] == "fail"]
    for r in failing:
        bad = next(it for it in r["items"] if not it["ok"])
        where = f"{r['check']} {r['family']}/{r['variant']} j={r['j']}"
        lines.append(f"FAIL {where}: first failing item: {bad['name']}")
    npass = len(runs) - len(failing)
    lines.append(f"{npass}/{len(runs)} runs passed")
    return "\n".join(lines)


def _cmd_verify(parser: argparse.ArgumentParser, args) -> int:
    if args.order is not None and args.order < 2:
        parser.error("--order must be at least 2")
    if args.maxlen < 1:
        parser.error("--maxlen must be at least 1")
    if args.check == "iso" and args.variant != "all" \
            and not iso_covered(args.variant):
        parser.error(f"no isomorphism images for variant {args.variant!r}")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")

    checks = list(CHECKS) if args.check == "all" else [args.check]
    skipped: List[str] = []
    tasks = expand_tasks(checks, args.variant, args.j, args.order, args.mode,
                         args.maxlen, skipped)
    for note in skipped:
        print(note, file=sys.stderr)
    runs = run_suite(tasks, args.jobs)
    with open(REPORT_FILE, "w") as fh:
        fh.write(emit_json(runs) + "\n")
    print(emit_json(runs) if args.format == "json" else emit_text(runs))
    return 0 if all(r["status"] != "fail" for r in runs) else 1


def _cmd_report(parser: argparse.ArgumentParser, args) -> int:
    if not os.path.exists(REPORT_FILE):
        parser.error(f"{REPORT_FILE} not found; run `ckq verify` first")
    with open(REPORT_FILE) as fh:
        doc = json.load(fh)
    runs = doc.get("runs", [])
    print(emit_json(runs) if args.format == "json" else emit_text(runs))
    if not args.no_figure:
        from .figures import render_grid

        path = render_grid(runs, args.figure)
        print(f"status grid written to {path}", file=sys.stderr)
    return 0 if all(r["status"] != "fail" for r in runs) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cmd == "verify":
        return _cmd_verify(parser, args)
    return _cmd_report(parser, args)


if __name__ == "__main__":
    sys.exit(main())

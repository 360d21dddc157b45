"""Command-line interface: ``ptasm analyze | enumerate | asm-perm | verify | examples``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .asm import MAX_SEARCH_N, asm_permutable_theorem, find_asm_ordering
from .enumerate import CSV_HEADER, MAX_N, MIN_N, enumerate_finite_order
from .fixtures import write_fixtures
from .forms import FINITE_TYPES
from .graph import classify_matrix
from .matrix import IntMatrix, MatrixParseError, conjugate, is_asm, parse_matrix
from .order import OrderResult, brute_force_order, finite_order
from .poly import cyclotomic, format_poly
from .verify import MAX_MAX_N, MIN_MAX_N, run_verification

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_DISCREPANCY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load(path: str) -> IntMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_matrix(text)


def _factored(indices) -> str:
    return "".join(f"({format_poly(cyclotomic(d))})" for d in indices)


def _asm_report(a: IntMatrix) -> dict:
    """ASM-permutability by search when small enough, else by the closed-form rule."""
    if not a.is_signed01():
        return {"applicable": False, "reason": "entries outside {-1,0,1}"}
    if is_asm(a):
        return {"applicable": True, "permutable": True, "method": "already ASM",
                "witness_order": [str(i) for i in range(1, a.n + 1)],
                "witness_asm": [[str(x) for x in row] for row in a.rows]}
    if a.n <= MAX_SEARCH_N:
        sigma = find_asm_ordering(a)
        out = {"applicable": True, "permutable": sigma is not None, "method": "search"}
        if sigma is not None:
            out["witness_order"] = [str(i) for i in sigma.one_based()]
            out["witness_asm"] = [[str(x) for x in row] for row in conjugate(a, sigma).rows]
        return out
    c = classify_matrix(a)
    if c.elementary.type_tag in FINITE_TYPES and finite_order(a).finite:
        return {"applicable": True, "permutable": asm_permutable_theorem(c), "method": "theorem"}
    return {"applicable": False,
            "reason": f"n={a.n} exceeds the search limit {MAX_SEARCH_N} and no closed-form rule applies"}


def build_report(a: IntMatrix, source: str, brute_force: bool = False) -> dict:
    timings = {}
    t0 = time.perf_counter()
    if a.is_signed01():
        classification = classify_matrix(a).to_json()
    else:
        classification = {"applicable": False, "reason": "entries outside {-1,0,1}"}
    timings["classify"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    res: OrderResult = finite_order(a)
    order = res.to_json()
    if res.finite:
        order["min_poly_factored"] = _factored(res.min_factors)
    timings["order"] = time.perf_counter() - t0

    if brute_force:
        t0 = time.perf_counter()
        bf = brute_force_order(a)
        order["brute_force_order"] = None if bf is None else str(bf)
        timings["brute_force"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    asm = _asm_report(a)
    timings["asm"] = time.perf_counter() - t0
    return {
        "input": {"source": source, "n": str(a.n)},
        "classification": classification,
        "order": order,
        "asm": asm,
        "timings": {k: f"{v:.6f}" for k, v in timings.items()},
    }


def _render_report(rep: dict, res: OrderResult) -> str:
    lines = [f"input: {rep['input']['source']} (n={rep['input']['n']})"]
    c = rep["classification"]
    if c.get("applicable") is False:
        lines.append(f"type: not applicable ({c['reason']})")
    else:
        text = f"type: {c['type']}"
        if c.get("params"):
            text += f" params {tuple(c['params'])}"
        if c.get("transposed"):
            text += " (transposed)"
        if c.get("inner"):
            text += f" inner {c['inner']['type']} {tuple(c['inner']['params'])}"
        if c.get("reason"):
            text += f" ({c['reason']})"
        lines.append(text)
    lines.append(f"char poly: {format_poly(res.char_poly)}")
    if res.char_factorization is not None:
        lines.append(f"char factors: {res.char_factorization}")
    if res.finite:
        lines.append(f"order: {res.order}")
        lines.append(f"min poly: {format_poly(res.min_poly)} = {rep['order']['min_poly_factored']}")
    else:
        lines.append("order: infinite")
    if "brute_force_order" in rep["order"]:
        bf = rep["order"]["brute_force_order"]
        lines.append(f"brute force order: {bf if bf is not None else 'none within bound'}")
    a = rep["asm"]
    if not a["applicable"]:
        lines.append(f"ASM: not applicable ({a['reason']})")
    elif a["method"] == "already ASM":
        lines.append("ASM: already ASM")
    elif a["permutable"]:
        order = " ".join(a.get("witness_order", [])) or "n/a"
        lines.append(f"ASM: permutable ({a['method']}), ordering {order}")
    else:
        lines.append(f"ASM: not permutable ({a['method']})")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    a = _load(args.file)
    rep = build_report(a, args.file, brute_force=args.brute_force)
    if args.json:
        sys.stdout.write(json.dumps(rep, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_render_report(rep, finite_order(a)))
    return EXIT_OK


def cmd_asm_perm(args) -> int:
    a = _load(args.file)
    rep = _asm_report(a)
    if not rep["applicable"]:
        raise UsageError(rep["reason"])
    out = {"permutable": rep["permutable"]}
    if "witness_order" in rep:
        out["witness_order"] = rep["witness_order"]
        out["witness_asm"] = rep["witness_asm"]
    sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not MIN_N <= args.n <= MAX_N:
        raise UsageError(f"--n must lie in {MIN_N}..{MAX_N}")
    records = enumerate_finite_order(args.n, jobs=args.jobs)
    if args.exotic_only:
        records = [r for r in records if r.exotic]
    if args.format == "json":
        sys.stdout.write(json.dumps([r.to_json() for r in records], indent=2) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(r.csv_row())
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args) -> int:
    if not MIN_MAX_N <= args.max_n <= MAX_MAX_N:
        raise UsageError(f"--max-n must lie in {MIN_MAX_N}..{MAX_MAX_N}")
    report = run_verification(args.max_n, jobs=args.jobs)
    sys.stdout.write("\n".join(report.summary_lines()) + "\n")
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def cmd_examples(args) -> int:
    for path in write_fixtures(args.out):
        sys.stdout.write(f"{path}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptasm", description="Finite-order PT-matrices and ASM-permutability.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify one matrix and decide its order")
    p.add_argument("file")
    p.add_argument("--brute-force", action="store_true", help="also power the matrix up to the GL(n) bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list finite-order elementary PT-matrices of size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exotic-only", action="store_true", help="keep orders no permutation of n points has")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("asm-perm", help="search for an ordering that turns the matrix into an ASM")
    p.add_argument("file")
    p.set_defaults(func=cmd_asm_perm)

    p = sub.add_parser("verify", help="run the theorem/oracle equivalence sweeps")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", help="write the reference matrices as text files")
    p.add_argument("--out", default="fixtures")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except MatrixParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``cosetkit <command> ...``.

Exit status is 0 when every check passes, 1 on a failed theory check and 2 on
bad usage (including guard violations).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from itertools import product as cartesian
from typing import Callable

from . import characters, classifier, griess, minimal_model, symmetric_group
from .errors import BadIndex, BadLabel, CosetkitError, SizeLimit, TheoryViolation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_ORDER = 40


class UsageError(Exception):
    pass


def max_order() -> int:
    raw = os.environ.get("COSETKIT_MAX_ORDER", str(DEFAULT_MAX_ORDER))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"COSETKIT_MAX_ORDER must be an integer, got {raw!r}")


def _guard(name: str, value: int, low: int, high: int):
    if not low <= value <= high:
        raise UsageError(f"--{name} must lie in [{low}, {high}], got {value}")


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


# ----------------------------------------------------------------- commands


def cmd_classify(args, out) -> int:
    limit = classifier.MAX_ORACLE_N if args.oracle else classifier.MAX_FORMULA_N
    _guard("n", args.n, 2, limit)
    rows = classifier.module_report(args.n, oracle=args.oracle)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        pairs = [f"{i}-{j}" for i, j in griess.pairs(args.n)]
        header = ["delta_prime", "k", "type", "lowest_weight", "lowest_space_dim", "partition"]
        if args.oracle:
            header.append("oracle_weight")
        writer.writerow(header + pairs)
        for label, row in zip(classifier.enumerate_modules(args.n), rows):
            line = [row["delta_prime"], row["k"], row["type"], row["lowest_weight"],
                    row["lowest_space_dim"], "-".join(map(str, row["partition"]))]
            if args.oracle:
                line.append(row["oracle_weight"])
            writer.writerow(line + classifier.eigenvalue_table(label).cells())
        out.write(buf.getvalue())
    else:
        _dump({"n": args.n, "count": len(rows), "expected": classifier.expected_count(args.n), "modules": rows}, out)
    return EXIT_OK


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        r, s = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected r,s but got {text!r}")
    return r, s


def cmd_fusion(args, out) -> int:
    _guard("m", args.m, 1, 12)
    if args.triple:
        a, b, c = (_parse_pair(t) for t in args.triple)
        try:
            record = {
                "m": args.m,
                "triple": [list(a), list(b), list(c)],
                "admissible": minimal_model.is_admissible(args.m, a, b, c),
                "fusion_dim": minimal_model.fusion_dim(args.m, c, a, b),
            }
        except BadIndex as exc:
            raise UsageError(str(exc))
        _dump(record, out)
        return EXIT_OK
    report = minimal_model.fusion_report(args.m)
    _dump(report, out)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_tn(args, out) -> int:
    if args.check_lemma42:
        _guard("N", args.N, 1, 5)
        report = symmetric_group.lemma42_report(args.N)
        _dump(report, out)
        return EXIT_OK if report["ok"] else EXIT_FAIL
    _guard("N", args.N, 1, symmetric_group.MAX_TN_N)
    _dump(symmetric_group.build_TN(args.N).to_json(), out)
    return EXIT_OK


def cmd_griess(args, out) -> int:
    _guard("n", args.n, 1, 12)
    report = griess.griess_report(args.n)
    if args.check:
        report["disjoint_constants"] = _disjoint_json()
        report["lemma33"] = [griess.triple_report(t) for t in griess.lemma33_matrices()]
        report["ok"] = report["ok"] and all(t["ok"] for t in report["lemma33"])
    _dump(report, out)
    return EXIT_OK if report["ok"] or not args.check else EXIT_FAIL


def _disjoint_json() -> dict:
    consts = griess.solve_disjoint_constants()
    return {"product_same": str(consts.product_same), "product_cross": str(consts.product_cross),
            "form": str(consts.form)}


def _parse_bits(text: str | None, copies: int) -> tuple[int, ...]:
    if text is None:
        return (0,) * copies
    if len(text) != copies or set(text) - {"0", "1"}:
        raise UsageError(f"--delta must be {copies} binary digits, got {text!r}")
    return tuple(int(c) for c in text)


def cmd_verify_characters(args, out) -> int:
    _guard("copies", args.copies, 2, 6)
    _guard("order", args.order, 1, max_order())
    bits = _parse_bits(args.delta, args.copies)
    result = characters.verify_decomposition(args.copies, bits, args.order)
    _dump(result.to_json(), out)
    return EXIT_OK if result.ok else EXIT_FAIL


# ---------------------------------------------------------------- verify-all


def _suite_fusion() -> dict:
    items = []
    for m in range(1, 4):
        report = minimal_model.fusion_report(m)
        items.append({"m": m, "ok": report["ok"], "checks": report["checks"]})
    box_ok = all(
        minimal_model.corollary_2_11_vanishes(n, *params)
        for n in range(1, 7)
        for params in minimal_model.corollary_2_11_box(n)
    )
    items.append({"corollary_box_n_le_6": box_ok, "ok": box_ok})
    return {"suite": "fusion", "items": items}


def _suite_tn() -> dict:
    items = []
    for n in range(1, 7):
        report = symmetric_group.build_TN(n)
        ok = len(report.blocks) == n // 2 + 1 and all(
            d == symmetric_group.specht_dimension(p) for d, p in report.blocks
        )
        items.append({"N": n, "blocks": [d for d, _ in report.blocks], "total_dim": report.total_dim, "ok": ok})
    for n in range(3, 6):
        report = symmetric_group.lemma42_report(n)
        items.append({"lemma42_N": n, "ok": report["ok"]})
    return {"suite": "tn", "items": items}


def _suite_griess() -> dict:
    items = []
    for n in range(1, 9):
        report = griess.griess_report(n)
        items.append({"n": n, "central_charge": report["central_charge"], "ok": report["ok"]})
    for t in griess.lemma33_matrices():
        r = griess.triple_report(t)
        items.append({"triple": r["name"], "ok": r["ok"]})
    consts = griess.solve_disjoint_constants()
    items.append({"disjoint_constants": _disjoint_json(), "ok": consts == griess.DERIVED})
    return {"suite": "griess", "items": items}


def _suite_classify() -> dict:
    items = []
    for n in range(2, 7):
        rows = classifier.module_report(n, oracle=True)
        items.append({"n": n, "count": len(rows), "ok": len(rows) == classifier.expected_count(n)})
    return {"suite": "classify", "items": items}


def _suite_characters() -> dict:
    items = []
    cases = [(m, bits, 12) for m in (2, 3) for bits in cartesian((0, 1), repeat=m)]
    cases.append((4, (0, 0, 0, 0), 10))
    for m, bits, order in cases:
        result = characters.verify_decomposition(m, bits, order)
        items.append({"copies": m, "delta_prime": "".join(map(str, bits)), "order": order, "ok": result.ok,
                      "mismatch": result.to_json()["mismatch"]})
    return {"suite": "verify-characters", "items": items}


SUITES: list[Callable[[], dict]] = [_suite_fusion, _suite_tn, _suite_griess, _suite_classify, _suite_characters]


def cmd_verify_all(args, out) -> int:
    suites = []
    for suite in SUITES:
        result = suite()
        result["ok"] = all(item["ok"] for item in result["items"])
        suites.append(result)
    ok = all(s["ok"] for s in suites)
    _dump({"ok": ok, "suites": suites}, out)
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cosetkit", description="Exact checks for the commutant M^(n) and its modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="list the irreducible M^(n)-modules")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check every lowest weight against the lattice")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fusion", help="minimal-model fusion rules")
    p.add_argument("--m", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="full table (default)")
    group.add_argument("--triple", nargs=3, metavar="R,S")
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("tn", help="structure of T^N = Q[S_N]/J^N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--check-lemma42", action="store_true", help="Young symmetrizer membership in J^N (N <= 5)")
    p.set_defaults(func=cmd_tn)

    p = sub.add_parser("griess", help="weight-two algebra checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="fail with exit 1 if any identity breaks")
    p.set_defaults(func=cmd_griess)

    p = sub.add_parser("verify-characters", help="lattice = sum affine x coset, coefficientwise")
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--delta", help="parity bits, e.g. 010")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_verify_characters)

    p = sub.add_parser("verify-all", help="run every suite")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"cosetkit: {exc}\n")
        return EXIT_USAGE
    except (SizeLimit, BadIndex, BadLabel) as exc:
        sys.stderr.write(f"cosetkit: {exc}\n")
        return EXIT_USAGE
    except TheoryViolation as exc:
        _dump(exc.record, out)
        return EXIT_FAIL
    except CosetkitError as exc:
        _dump({"error": type(exc).__name__, "message": str(exc)}, out)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: construction, decision runs, table reproduction.

Subcommands: filters, deutsch, gendeutsch, parity, tables, verify-all.
Output is plain text by default or JSON with --format json; both are
byte-deterministic for a given command line. Exit status is 0 exactly
when the report status is "ok".
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .boolfuncs import (
    BooleanFunction,
    DECISION_PROBLEMS,
    all_functions,
    decision_predicate,
)
from .filters import canonical_system, permute_columns, system_to_json, verify_properties
from .linalg import DEFAULT_TOL, state_to_json
from .oracles import (
    InternalCheckError,
    decide,
    deutsch_decide,
    deutsch_filter_setup,
    generalized_deutsch_setup,
    parity_classical,
    parity_pairwise_quantum,
    sample_eigenvalue,
    sum_phase_pattern,
)
from .tables import TABLE_NAMES, emit_table, golden_diff
from .verify import run_all


class UsageError(Exception):
    pass


def parse_permutation(text: str, d: int) -> list[int]:
    """One-line notation "1,2,3,0" (entry j names the old column shown at
    position j) or cycles "(0 1)(2 3)" mapping positions the same way."""
    text = text.strip()
    if "(" in text:
        perm = list(range(d))
        depth = 0
        groups: list[list[int]] = []
        current: list[str] = []
        for ch in text:
            if ch == "(":
                if depth:
                    raise UsageError("nested cycle parentheses")
                depth = 1
                current = []
            elif ch == ")":
                if not depth:
                    raise UsageError("unbalanced cycle parentheses")
                depth = 0
                groups.append([int(tok) for tok in "".join(current).replace(",", " ").split()])
            elif depth:
                current.append(ch)
            elif not ch.isspace():
                raise UsageError(f"unexpected character {ch!r} outside cycles")
        if depth:
            raise UsageError("unbalanced cycle parentheses")
        for cycle in groups:
            if len(set(cycle)) != len(cycle):
                raise UsageError("cycle repeats an element")
            for pos, col in zip(cycle, cycle[1:] + cycle[:1]):
                if not 0 <= pos < d:
                    raise UsageError(f"cycle element {pos} out of range for d={d}")
                perm[pos] = col
    else:
        try:
            perm = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError as exc:
            raise UsageError(f"bad permutation entry: {exc}") from None
    if sorted(perm) != list(range(d)):
        raise UsageError(f"permutation must be a bijection on 0..{d - 1}")
    return perm


def _parse_table(text: str, k: int | None = None) -> BooleanFunction:
    try:
        return BooleanFunction.from_string(text, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _report(command: str, status: str, payload: dict, diagnostics: list[str]) -> dict:
    return {
        "command": command,
        "status": status,
        "payload": payload,
        "diagnostics": diagnostics,
    }


def cmd_filters(args) -> tuple[dict, list[str]]:
    system = canonical_system(args.k, args.n)
    diagnostics: list[str] = []
    if args.permute:
        perm = parse_permutation(args.permute, system.d)
        system = permute_columns(system, perm)
        diagnostics.append(f"applied column permutation {perm}")
    payload = system_to_json(system)
    status = "ok"
    if args.verify:
        report = verify_properties(system)
        payload["properties"] = {
            "F1": report.f1,
            "F2": report.f2,
            "F3": report.f3,
            "witnesses": list(report.witnesses),
        }
        if not report.all_ok:
            status = "property-failure"
    lines = []
    for row in payload["rows"]:
        if args.n == 2:
            lines.append("".join("1" if x == 1.0 else "0" for x in row))
        else:
            lines.append(" ".join(f"{x:g}" for x in row))
    text = lines
    if args.verify:
        props = payload["properties"]
        text.append(f"F1={props['F1']} F2={props['F2']} F3={props['F3']}")
    return _report("filters", status, payload, diagnostics), text


def cmd_deutsch(args, tol: float, seed: int | None) -> tuple[dict, list[str]]:
    f = _parse_table(args.table)
    if f.k != 1:
        raise UsageError("the identification pipeline takes a 2-entry truth table")
    setup = deutsch_filter_setup(tol)
    out = deutsch_decide(f, setup, tol)
    agree = out.constant_by_state == out.constant_by_filter
    payload = {
        "function": f.name,
        "table": "".join(str(v) for v in f.table),
        "final_state": state_to_json(out.final_state),
        "constant_by_state": out.constant_by_state,
        "filter_eigenvalue": out.eigenvalue,
        "constant_by_filter": out.constant_by_filter,
    }
    diagnostics = []
    if seed is not None:
        rng = np.random.default_rng(seed)
        lam, _ = sample_eigenvalue(setup.f_d1, out.after_oracle, rng)
        payload["sampled_eigenvalue"] = lam
        diagnostics.append(f"sampling mode on (seed {seed})")
    amps = ["{:+.3f}".format(a.real) for a in out.final_state]
    text = [
        f"function {f.name} ({payload['table']})",
        f"final state ({', '.join(amps)})",
        f"constant by state:  {out.constant_by_state}",
        f"filter eigenvalue:  {out.eigenvalue:g} -> constant by filter: {out.constant_by_filter}",
    ]
    status = "ok" if agree else "property-failure"
    return _report("deutsch", status, payload, diagnostics), text


def cmd_gendeutsch(args, tol: float, seed: int | None) -> tuple[dict, list[str]]:
    setup = generalized_deutsch_setup(tol)
    out = decide(args.problem, args.i, args.j, setup, tol)
    classical = decision_predicate(args.problem, args.i, args.j)
    pattern = sum_phase_pattern(args.i, args.j)
    payload = {
        "problem": args.problem,
        "function": f"f{args.i}{args.j}",
        "phase_pattern": pattern.text(),
        "eigenvalue": out.eigenvalue,
        "verdict": out.verdict,
        "classical": classical,
        "agree": out.verdict == classical,
    }
    diagnostics = []
    if seed is not None:
        rng = np.random.default_rng(seed)
        lam, _ = sample_eigenvalue(setup.filters[args.problem], pattern.as_state(), rng)
        payload["sampled_eigenvalue"] = lam
        diagnostics.append(f"sampling mode on (seed {seed})")
    text = [
        f"problem {args.problem} on f{args.i}{args.j}",
        f"phase pattern  {pattern.text()}",
        f"eigenvalue     {out.eigenvalue:g}",
        f"verdict        {out.verdict}",
        f"classical      {classical}",
    ]
    status = "ok" if payload["agree"] else "property-failure"
    return _report("gendeutsch", status, payload, diagnostics), text


def _parity_row(f: BooleanFunction) -> dict:
    classical = parity_classical(f)
    quantum = parity_pairwise_quantum(f)
    return {
        "table": "".join(str(v) for v in f.table),
        "classical_sign": classical.sign,
        "classical_queries": classical.queries,
        "quantum_sign": quantum.sign,
        "oracle_invocations": quantum.oracle_invocations,
        "agree": classical.sign == quantum.sign,
    }


def cmd_parity(args) -> tuple[dict, list[str]]:
    if args.function:
        f = _parse_table(args.function, args.k)
        rows = [_parity_row(f)]
        names = [f.name]
    else:
        if args.k > 3:
            raise UsageError("sweeps are limited to k <= 3")
        funcs = all_functions(args.k)
        rows = [_parity_row(f) for f in funcs]
        names = [f.name for f in funcs]
    agree = all(r["agree"] for r in rows)
    payload = {"k": args.k, "results": dict(zip(names, rows)), "all_agree": agree}
    text = []
    if args.function or args.k <= 2:
        for name, row in zip(names, rows):
            text.append(
                f"{name} ({row['table']}): parity {row['classical_sign']}, "
                f"classical {row['classical_queries']} queries, "
                f"quantum {row['oracle_invocations']} invocations"
            )
    text.append(
        f"{len(rows)} function(s), quantum agrees with classical: {agree}"
    )
    status = "ok" if agree else "property-failure"
    return _report("parity", status, payload, []), text


def cmd_tables(args) -> tuple[dict, list[str]]:
    table = emit_table(args.name)
    diffs = golden_diff(args.name)
    payload = table.to_json()
    payload["golden_diff"] = [
        {"line": d.line, "golden": d.golden, "emitted": d.emitted} for d in diffs
    ]
    text = list(table.lines)
    if diffs:
        text.append(f"golden diff: {len(diffs)} line(s) differ")
        for d in diffs:
            text.append(f"  line {d.line}: golden {d.golden!r}, emitted {d.emitted!r}")
    else:
        text.append("golden diff: clean")
    status = "ok" if not diffs else "golden-diff"
    return _report("tables", status, payload, []), text


def cmd_verify_all(seed: int, tol: float) -> tuple[dict, list[str]]:
    checks = run_all(seed, tol)
    payload = {
        "checks": [
            {"name": c.name, "status": c.status, "detail": c.detail} for c in checks
        ]
    }
    failures = [c for c in checks if c.status == "failure"]
    warnings = [c for c in checks if c.status == "warning"]
    payload["failures"] = len(failures)
    payload["warnings"] = len(warnings)
    text = [f"{c.status.upper():8} {c.name}: {c.detail}" for c in checks]
    text.append(
        f"{len(checks)} checks: {len(checks) - len(failures) - len(warnings)} ok, "
        f"{len(warnings)} warnings, {len(failures)} failures"
    )
    status = "ok" if not failures else "property-failure"
    return _report("verify-all", status, payload, []), text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfilters",
        description="Decision problems as state discrimination: filters, oracles, tables.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL, help="absolute tolerance")
    parser.add_argument(
        "--seed", type=int, default=None, help="enable Born-rule sampling with this seed"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("filters", help="construct a canonical filter system")
    p.add_argument("--k", type=int, required=True, help="number of filters")
    p.add_argument("--n", type=int, required=True, help="slices per filter")
    p.add_argument("--permute", help="column permutation: one-line '1,2,3,0' or cycles '(0 1)'")
    p.add_argument("--verify", action="store_true", help="check properties F1-F3")

    p = sub.add_parser("deutsch", help="identify constancy of a one-bit function")
    p.add_argument("table", help="2-entry truth table, e.g. 10")

    p = sub.add_parser("gendeutsch", help="decide per-argument constancy of a sum function")
    p.add_argument("--problem", choices=DECISION_PROBLEMS, required=True)
    p.add_argument("--i", type=int, required=True, choices=range(4))
    p.add_argument("--j", type=int, required=True, choices=range(4))

    p = sub.add_parser("parity", help="classical vs pairwise-quantum parity")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--function", help="truth table (binary or 0x-hex); omit to sweep")

    p = sub.add_parser("tables", help="regenerate a reference table and diff against golden")
    p.add_argument("name", choices=TABLE_NAMES)

    sub.add_parser("verify-all", help="run the full invariant suite")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "filters":
            report, text = cmd_filters(args)
        elif args.command == "deutsch":
            report, text = cmd_deutsch(args, args.tol, args.seed)
        elif args.command == "gendeutsch":
            report, text = cmd_gendeutsch(args, args.tol, args.seed)
        elif args.command == "parity":
            report, text = cmd_parity(args)
        elif args.command == "tables":
            report, text = cmd_tables(args)
        else:
            report, text = cmd_verify_all(args.seed if args.seed is not None else 0, args.tol)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except ValueError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except InternalCheckError as exc:
        print(f"{parser.prog}: internal check failed: {exc}", file=sys.stderr)
        return 1

    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for line in text:
            print(line)
        for note in report["diagnostics"]:
            print(f"note: {note}")
    return 0 if report["status"] == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: gw (one invariant), count (subbundle count), table (structure
constants, cached as JSON), qmul (product of two Schubert classes), ntilde
(arbitrary-bundle intersection number), verify (self-check suites).

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 the query
is not applicable or not covered, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import counting, partitions, quantum, verify
from .counting import (
    NotApplicableError,
    NotCoveredError,
    NQuery,
    OddDegreeUnsupportedError,
    OddEllUnsupportedError,
)
from .quantum import GWQuery, QuantumElement
from .symfunc import parse_alpha_poly

OK, VERIFY_FAIL, BAD_INPUT, NOT_APPLICABLE, IO_ERROR = 0, 1, 2, 3, 4

FLOAT_RTOL = 1e-6


def _emit_error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "reason": message}), file=sys.stderr)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("bad_arguments", message)
        raise SystemExit(BAD_INPUT)


def _parse_insertions(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(partitions.parse_partition(tok) for tok in text.split(";"))


def _float_agrees(exact, approx: float) -> bool:
    reference = float(exact)
    return abs(approx - reference) <= FLOAT_RTOL * max(1.0, abs(reference))


def cmd_gw(args) -> int:
    query = GWQuery(args.n, args.g, args.d, _parse_insertions(args.insertions))
    value = quantum.gw_invariant(query)
    doc: dict = {
        "n": args.n,
        "g": args.g,
        "d": args.d,
        "insertions": [partitions.format_partition(lam) for lam in query.insertions],
        "value": str(value),
    }
    status = OK
    if args.trace:
        trace = quantum.trace_invariant(query)
        doc["trace_value"] = str(trace)
        doc["trace_agrees"] = trace == value
        if not doc["trace_agrees"]:
            status = VERIFY_FAIL
    if args.mode == "float":
        approx = quantum.gw_invariant_float(query)
        doc["float_value"] = approx
        doc["float_agrees"] = _float_agrees(value, approx)
        if not doc["float_agrees"]:
            status = VERIFY_FAIL
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(value)
        if args.trace:
            print(f"trace route: {doc['trace_value']} ({'agree' if doc['trace_agrees'] else 'DISAGREE'})")
        if args.mode == "float":
            print(f"float route: {doc['float_value']!r} ({'agree' if doc['float_agrees'] else 'DISAGREE'})")
    return status


def cmd_count(args) -> int:
    report = counting.count(args.g, args.rank, args.ell)
    doc = report.to_json_dict()
    status = OK if report.applicable else NOT_APPLICABLE
    if report.applicable and args.mode == "float":
        approx = counting.count_float(args.g, args.rank, args.ell)
        doc["float_value"] = approx
        doc["float_agrees"] = _float_agrees(report.value, approx)
        if not doc["float_agrees"]:
            status = VERIFY_FAIL
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        if report.applicable:
            print(report.value)
            print(f"e0 = {report.e0}, required w2 = {report.required_w2} (mod 2)")
            for note in report.notes:
                print(f"note: {note}")
            if args.mode == "float":
                print(f"float route: {doc['float_value']!r} ({'agree' if doc['float_agrees'] else 'DISAGREE'})")
        else:
            print(report.reason)
    return status


def _resolve_cache_dir(arg: str | None) -> Path:
    if arg:
        return Path(arg)
    env = os.environ.get("OGQ_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "ogq"


def _table_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()


def cmd_table(args) -> int:
    doc = quantum.table_json_dict(args.n, args.max_d)
    payload = _table_bytes(doc)
    cache_dir = _resolve_cache_dir(args.cache_dir)
    suffix = f"-maxd{args.max_d}" if args.max_d is not None else ""
    path = cache_dir / f"table-n{args.n}{suffix}.json"
    try:
        cache_dir.mkdir(parents=True, exist_ok=True)
        if path.exists():
            try:
                old = json.loads(path.read_text())
            except (json.JSONDecodeError, UnicodeDecodeError):
                old = None
            if not isinstance(old, dict) or old.get("schema") != "ogq-table/1":
                print(f"warning: ignoring stale cache file {path}", file=sys.stderr)
        path.write_bytes(payload)
    except OSError as exc:
        _emit_error("io_error", f"cannot write {path}: {exc}")
        return IO_ERROR
    if args.format == "json":
        sys.stdout.write(payload.decode())
    else:
        print(f"{len(doc['entries'])} entries -> {path}")
        for e in doc["entries"]:
            q = "" if e["d"] == 0 else ("q*" if e["d"] == 1 else f"q^{e['d']}*")
            c = "" if e["c"] == "1" else f"{e['c']}*"
            print(f"t[{e['lambda']}] * t[{e['mu']}] += {c}{q}t[{e['nu']}]")
    return OK


def cmd_qmul(args) -> int:
    lam = partitions.parse_partition(args.a)
    mu = partitions.parse_partition(args.b)
    product = quantum.quantum_product(
        args.n, QuantumElement.basis(lam), QuantumElement.basis(mu)
    )
    if args.format == "json":
        terms = [
            {"nu": partitions.format_partition(nu), "d": d, "c": str(c)}
            for (nu, d), c in sorted(product.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ]
        print(json.dumps({"n": args.n, "a": args.a, "b": args.b, "terms": terms}, indent=2))
    else:
        print(product)
    return OK


def cmd_ntilde(args) -> int:
    q_poly = parse_alpha_poly(args.Q)
    query = NQuery(args.g, args.n, args.ell, args.e, args.u, q_poly)
    value = counting.n_tilde(query)
    doc = {
        "g": args.g,
        "n": args.n,
        "ell": args.ell,
        "e": args.e,
        "u": args.u,
        "Q": str(q_poly),
        "value": str(value),
    }
    status = OK
    if args.mode == "float" and q_poly.terms == parse_alpha_poly("1").terms:
        approx = counting.n_tilde_float(query)
        doc["float_value"] = approx
        doc["float_agrees"] = _float_agrees(value, approx)
        if not doc["float_agrees"]:
            status = VERIFY_FAIL
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(value)
        if "float_value" in doc:
            print(f"float route: {doc['float_value']!r} ({'agree' if doc['float_agrees'] else 'DISAGREE'})")
    return status


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, slow=args.slow)
    failures = [r for r in results if not r.ok]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "suite": args.suite,
                    "checks": [dataclass_dict(r) for r in results],
                    "failures": len(failures),
                },
                indent=2,
            )
        )
    else:
        for r in results:
            mark = "ok  " if r.ok else "FAIL"
            line = f"{mark} [{r.suite}] {r.name}"
            if r.detail and not r.ok:
                line += f" :: {r.detail}"
            print(line)
        print(f"{len(results) - len(failures)}/{len(results)} checks passed")
    return OK if not failures else VERIFY_FAIL


def dataclass_dict(r) -> dict:
    return {"suite": r.suite, "name": r.name, "ok": r.ok, "detail": r.detail}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ogq", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--mode", choices=("exact", "float"), default="exact",
                        help="float re-evaluates through complex doubles and cross-checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gw", parents=[common], help="one Gromov-Witten invariant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--insertions", default="", help='semicolon-separated partitions, e.g. "2,1;1"')
    p.add_argument("--trace", action="store_true", help="also run the trace route (genus >= 1)")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("count", parents=[common], help="maximal isotropic subbundle count")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="quantum structure constants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-d", type=int, default=None, dest="max_d")
    p.add_argument("--cache-dir", default=None, help="overrides OGQ_CACHE_DIR and the default")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("qmul", parents=[common], help="product of two Schubert classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_qmul)

    p = sub.add_parser("ntilde", parents=[common], help="arbitrary-bundle intersection number")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--u", type=int, default=0)
    p.add_argument("--Q", default="1", help='integrand, e.g. "2*a2 + a1^2"')
    p.set_defaults(func=cmd_ntilde)

    p = sub.add_parser("verify", parents=[common], help="self-check suites")
    p.add_argument("--suite", default="all",
                   choices=("duality", "assoc", "recursion", "trace", "counts", "all"))
    p.add_argument("--slow", action="store_true", help="include the slow n=5 associativity battery")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else BAD_INPUT
    try:
        return args.func(args)
    except (NotApplicableError, NotCoveredError) as exc:
        _emit_error("not_applicable", str(exc))
        return NOT_APPLICABLE
    except (ValueError,) as exc:
        _emit_error("invalid_input", str(exc))
        return BAD_INPUT
    except ArithmeticError as exc:
        _emit_error("verification_failure", str(exc))
        return VERIFY_FAIL
    except OSError as exc:
        _emit_error("io_error", str(exc))
        return IO_ERROR


if __name__ == "__main__":
    sys.exit(main())

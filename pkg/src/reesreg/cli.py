"""Command line front end.

Four subcommands: analyze (regularity comparison for one ideal), search
(canonical scan over a degree range), hilbert (Hilbert-Samuel data) and
rr (closure generator listing).  Every command takes --json or --text;
JSON documents carry stable field names and validate against the schema
shipped next to this module.

Exit codes: 0 resolved, 1 invalid input, 2 unresolved within caps.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import CapExceeded, CheckpointError, ResourceLimit
from .hilbert import hilbert_report, hilbert_samuel
from .ratliff_rush import rr_generators, rr_oracle
from .regularity import RegularityReport, eu_check
from .search import ENV_WORKERS, scan
from .staircase import IdealError, IdealSpec, make_ideal


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage problems are exit 1 here
        raise _UsageError(message)


def _parse_exponents(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise IdealError(
            f"exponents must be comma-separated integers, got {text!r}"
        ) from None


def _ideal_display(spec: IdealSpec) -> str:
    return "(" + ", ".join(f"x^{u}*y^{v}" for u, v in spec.generator_exponents()) + ")"


def _base_doc(command: str, spec: IdealSpec, input_echo: dict) -> dict:
    return {
        "version": __version__,
        "command": command,
        "degree": spec.d,
        "exponents": list(spec.interior),
        "input": input_echo,
        "rJ": None,
        "regF": None,
        "regR": None,
        "regRCap": None,
        "sStar": None,
        "sStarIn": None,
        "conjectureHolds": None,
        "witness": None,
        "criterionWitness": None,
        "hilbert": None,
        "rr": None,
    }


def _fill_regularity(doc: dict, report: RegularityReport) -> None:
    doc["rJ"] = report.r_j
    doc["regF"] = report.reg_f
    doc["regR"] = report.reg_r
    doc["regRCap"] = report.reg_r_cap
    doc["sStar"] = report.s_star
    doc["sStarIn"] = report.s_star_in
    doc["conjectureHolds"] = report.conjecture_holds
    if report.witness is not None:
        doc["witness"] = {"u": report.witness.u, "v": report.witness.v}
    if report.criterion_pair is not None:
        pair = report.criterion_pair
        doc["criterionWitness"] = {"a": pair.a, "b": pair.b, "condition": pair.condition}


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_analyze(args) -> int:
    spec = make_ideal(args.degree, _parse_exponents(args.exponents))
    report = eu_check(spec, cap=args.cap)
    if args.as_json:
        doc = _base_doc(
            "analyze",
            spec,
            {"degree": args.degree, "exponents": list(spec.interior), "cap": args.cap},
        )
        _fill_regularity(doc, report)
        _emit_json(doc)
    else:
        print(f"ideal: {_ideal_display(spec)}")
        print(f"degree: {spec.d}")
        print(f"exponents: {','.join(map(str, spec.interior))}")
        print(f"reduction number: {report.r_j}")
        print(f"fiber regularity: {report.reg_f}")
        if report.reg_r is None:
            print(f"rees regularity: unresolved (cap {report.reg_r_cap})")
            print("stability index: unresolved")
            print("initial stability index: unresolved")
        else:
            print(f"rees regularity: {report.reg_r}")
            print(f"stability index: {report.s_star}")
            print(f"initial stability index: {report.s_star_in}")
        print(f"verdict: {'TRUE' if report.conjecture_holds else 'FALSE'}")
        witness = report.witness.render() if report.witness is not None else "none"
        print(f"witness: {witness}")
        if report.criterion_pair is None:
            print("certificate: none")
        else:
            pair = report.criterion_pair
            print(f"certificate: a={pair.a} b={pair.b} condition={pair.condition}")
    return 0 if report.reg_r is not None else 2


def cmd_hilbert(args) -> int:
    spec = make_ideal(args.degree, _parse_exponents(args.exponents))
    report = hilbert_report(spec)
    at_value = hilbert_samuel(spec, args.at) if args.at is not None else None
    if args.as_json:
        doc = _base_doc(
            "hilbert",
            spec,
            {"degree": args.degree, "exponents": list(spec.interior), "at": args.at},
        )
        doc["hilbert"] = {
            "e": report.e,
            "poly": list(report.poly),
            "postulation": report.postulation,
            "table": [list(row) for row in report.table],
            "at": None if args.at is None else {"n": args.at, "value": at_value},
        }
        _emit_json(doc)
    else:
        e0, e1, e2 = report.poly
        print(f"ideal: {_ideal_display(spec)}")
        print(f"multiplicity: {report.e}")
        print(f"hilbert polynomial: {e0}*C(n+1,2) - {e1}*n + {e2}")
        post = "none" if report.postulation is None else str(report.postulation)
        print(f"postulation number: {post}")
        print("table:")
        for n, h, p in report.table:
            print(f"n={n} H={h} P={p}")
        if args.at is not None:
            print(f"H({args.at}) = {at_value}")
    return 0


def cmd_rr(args) -> int:
    spec = make_ideal(args.degree, _parse_exponents(args.exponents))
    closure = rr_generators(spec, args.power)
    agrees = None
    if args.oracle is not None:
        oracle = rr_oracle(spec, args.power, args.oracle)
        agrees = closure.region_min_v() == oracle.region_min_v()
    monomials = closure.minimal_generators() if args.minimal else None
    count = len(monomials) if args.minimal else closure.count
    if args.as_json:
        doc = _base_doc(
            "rr",
            spec,
            {
                "degree": args.degree,
                "exponents": list(spec.interior),
                "power": args.power,
                "minimal": args.minimal,
                "oracle": args.oracle,
            },
        )
        listing = monomials if args.minimal else closure.iter_generators()
        doc["rr"] = {
            "power": args.power,
            "count": count,
            "minimal": args.minimal,
            "generators": [{"u": m.u, "v": m.v} for m in listing],
            "oracleTmax": args.oracle,
            "oracleAgrees": agrees,
        }
        _emit_json(doc)
    else:
        kind = "minimal" if args.minimal else "full"
        print(f"closure generators of power {args.power} ({kind} listing): {count}")
        out = sys.stdout
        for m in monomials if args.minimal else closure.iter_generators():
            out.write(m.render() + "\n")
        if args.oracle is not None:
            print(f"oracle agreement: {'yes' if agrees else 'NO'}")
    if agrees is False:
        print("error: closure and colon-ideal oracle disagree", file=sys.stderr)
        return 2
    return 0


def cmd_search(args) -> int:
    counterexamples, summary = scan(
        args.min_degree,
        args.max_degree,
        workers=args.workers,
        checkpoint=args.checkpoint,
        resume=args.resume,
    )
    details = []
    for rec in counterexamples:
        spec = make_ideal(rec.d, (rec.a, rec.b))
        doc = _base_doc(
            "analyze", spec, {"degree": rec.d, "exponents": [rec.a, rec.b], "cap": None}
        )
        _fill_regularity(doc, eu_check(spec))
        details.append(doc)
    if args.as_json:
        doc = {
            "version": __version__,
            "command": "search",
            "dMin": summary.d_min,
            "dMax": summary.d_max,
            "examined": summary.examined,
            "true": summary.true_count,
            "false": summary.false_count,
            "unresolved": summary.unresolved_count,
            "perDegree": [
                {
                    "d": d,
                    "examined": v[0],
                    "true": v[1],
                    "false": v[2],
                    "unresolved": v[3],
                }
                for d, v in sorted(summary.per_degree.items())
            ],
            "counterexamples": details,
            "unresolvedCases": [
                {"d": d, "a": a, "b": b} for d, a, b in summary.unresolved
            ],
        }
        _emit_json(doc)
    else:
        print(f"degrees: {summary.d_min}..{summary.d_max}")
        print(f"examined: {summary.examined}")
        print(f"true: {summary.true_count}")
        print(f"false: {summary.false_count}")
        print(f"unresolved: {summary.unresolved_count}")
        print("per degree:")
        for d, v in sorted(summary.per_degree.items()):
            print(f"{d}: examined={v[0]} true={v[1]} false={v[2]} unresolved={v[3]}")
        if counterexamples:
            print("counter-examples:")
            for rec in counterexamples:
                print(rec.line())
        else:
            print("counter-examples: none")
        if summary.unresolved:
            print("unresolved cases:")
            for d, a, b in summary.unresolved:
                print(f"{d},{a},{b}")
        else:
            print("unresolved cases: none")
    return 2 if summary.unresolved_count else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="reesreg",
        description="Invariants of powers of equigenerated monomial ideals in k[x, y]",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ideal_args(p):
        p.add_argument("--degree", type=int, required=True, help="generation degree d")
        p.add_argument(
            "--exponents",
            required=True,
            help="comma-separated interior x-exponents, strictly increasing",
        )

    def format_args(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", action="store_true", dest="as_json")
        group.add_argument("--text", action="store_false", dest="as_json")
        p.set_defaults(as_json=False)

    p = sub.add_parser("analyze", help="compare rees and fiber regularity")
    ideal_args(p)
    p.add_argument("--cap", type=int, default=None, help="hard cap for index scans")
    format_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("hilbert", help="Hilbert-Samuel function and polynomial")
    ideal_args(p)
    p.add_argument("--at", type=int, default=None, help="also evaluate H at this power")
    format_args(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("rr", help="closure generators of a power")
    ideal_args(p)
    p.add_argument("--power", type=int, required=True, help="power n of the ideal")
    p.add_argument(
        "--minimal", action="store_true", help="list only divisibility-minimal generators"
    )
    p.add_argument(
        "--oracle",
        type=int,
        default=None,
        metavar="TMAX",
        help="cross-check against the colon-ideal computation up to t=TMAX",
    )
    format_args(p)
    p.set_defaults(func=cmd_rr)

    p = sub.add_parser("search", help="scan 4-generated ideals for counter-examples")
    p.add_argument("--min-degree", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"process count (default: ${ENV_WORKERS} or 1)",
    )
    p.add_argument("--checkpoint", default=None, help="stream finished cases here")
    p.add_argument(
        "--resume", action="store_true", help="skip cases already in the checkpoint"
    )
    format_args(p)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, CheckpointError) as exc:  # includes IdealError
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CapExceeded, ResourceLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        try:
            sys.stdout.close()
        except Exception:
            pass
        return 0


if __name__ == "__main__":
    sys.exit(main())

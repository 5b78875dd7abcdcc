"""Command-line driver.

Subcommands: gw2gv, gv2gw, conifold, sin-series, ab-series, ifunction,
jfunction, split-check, jmgs, check-integrality.  Structured output is
JSON with exact rational strings; --json switches reports from text to
JSON, --output sends the primary document to a file.  Exit codes:
0 success/verified, 1 malformed input, 2 domain/bound violation,
3 verification failure.  Set BPS_KIT_LOG=DEBUG (or INFO, ...) for logs.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .covers import conifold_gv_table, conifold_gw_table
from .jfunctions import (
    DivisorPairing,
    a_series,
    b_series,
    i_expansion,
    j_expansion,
    jmgs_rhs,
    split_check,
)
from .kring import NotInvertibleError, RingMismatchError
from .serialize import (
    SchemaError,
    kelem_to_dict,
    laurent_to_dict,
    qrf_to_dict,
    qseries_to_dict,
    render_integrality_text,
    render_kelem_text,
    render_table_text,
    table_from_dict,
    table_to_dict,
)
from .series import PoleAtZeroError, PoleLocationError, QRationalFunction, TruncationError
from .transform import (
    KIND_GV,
    KIND_GW,
    TableBoundError,
    TableKindError,
    check_integrality,
    gv_to_gw,
    gw_to_gv,
    gw_to_gv_genus0_mobius,
    sin_power_series,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

log = logging.getLogger("bps_kit")


def _dump(doc) -> str:
    return json.dumps(doc, indent=2)


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_table(path: str):
    return table_from_dict(_load_json(path))


# --- table transforms ---------------------------------------------------------


def cmd_gw2gv(args) -> int:
    table = _load_table(args.input)
    if table.kind != KIND_GW:
        raise TableKindError(f"{args.input}: expected a GW table, found {table.kind}")
    if args.genus0_mobius:
        log.info("using the genus-zero Mobius inversion path")
        result = gw_to_gv_genus0_mobius(table)
    else:
        result = gw_to_gv(table)
    _emit(args, _dump(table_to_dict(result)))
    if args.check_integrality:
        report = check_integrality(result)
        if args.json:
            print(
                _dump(
                    {
                        "is_integral": report.is_integral,
                        "violations": [
                            {"genus": g, "degree": list(d), "value": str(v)}
                            for g, d, v in report.violations
                        ],
                    }
                )
            )
        else:
            print(render_integrality_text(report))
        if not report.is_integral:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_gv2gw(args) -> int:
    table = _load_table(args.input)
    if table.kind != KIND_GV:
        raise TableKindError(f"{args.input}: expected a GV table, found {table.kind}")
    _emit(args, _dump(table_to_dict(gv_to_gw(table))))
    return EXIT_OK


def cmd_check_integrality(args) -> int:
    table = _load_table(args.input)
    if table.kind != KIND_GV:
        raise TableKindError(f"{args.input}: expected a GV table, found {table.kind}")
    report = check_integrality(table)
    if args.json:
        _emit(
            args,
            _dump(
                {
                    "is_integral": report.is_integral,
                    "violations": [
                        {"genus": g, "degree": list(d), "value": str(v)}
                        for g, d, v in report.violations
                    ],
                }
            ),
        )
    else:
        _emit(args, render_integrality_text(report))
    return EXIT_OK if report.is_integral else EXIT_VERIFY


def cmd_conifold(args) -> int:
    if args.dmax < 1:
        raise TableBoundError("--dmax must be at least 1")
    if args.gmax < 0:
        raise TableBoundError("--gmax must be nonnegative")
    gw = conifold_gw_table(args.gmax, args.dmax)
    gv = conifold_gv_table(args.gmax, args.dmax)
    is_delta = dict(gv.entries) == {(0, (1,)): Fraction(1)}
    if args.json:
        _emit(
            args,
            _dump(
                {
                    "gw": table_to_dict(gw),
                    "gv": table_to_dict(gv),
                    "is_delta": is_delta,
                }
            ),
        )
    else:
        _emit(
            args,
            "closed-form cover table:\n"
            + render_table_text(gw)
            + "\ntransformed table:\n"
            + render_table_text(gv)
            + f"\ndelta at (genus 0, degree 1): {'yes' if is_delta else 'NO'}",
        )
    return EXIT_OK if is_delta else EXIT_VERIFY


# --- series subcommands ----------------------------------------------------------


def cmd_sin_series(args) -> int:
    series = sin_power_series(args.k, args.genus, args.order)
    if args.json:
        _emit(args, _dump(laurent_to_dict(series)))
    else:
        _emit(args, str(series))
    return EXIT_OK


def cmd_ab_series(args) -> int:
    a = a_series(args.r)
    b = b_series(args.r)
    if args.json:
        _emit(
            args,
            _dump(
                {
                    "r": args.r,
                    "a": qrf_to_dict(a),
                    "a_expansion": qseries_to_dict(a.expand(args.order)),
                    "b": qrf_to_dict(b),
                    "b_expansion": qseries_to_dict(b.expand(args.order)),
                }
            ),
        )
    else:
        _emit(
            args,
            f"a({args.r}): {a}\n"
            f"  = {a.expand(args.order)} + O(q^{args.order})\n"
            f"b({args.r}): {b}\n"
            f"  = {b.expand(args.order)} + O(q^{args.order})",
        )
    return EXIT_OK


def cmd_ifunction(args) -> int:
    expansion = i_expansion(args.rmax)
    if args.json:
        _emit(
            args,
            _dump(
                [
                    {"r": r, "coefficient": kelem_to_dict(el)}
                    for r, el in expansion.sorted_terms()
                ]
            ),
        )
    else:
        blocks = [
            f"degree {r}:\n{render_kelem_text(el)}"
            for r, el in expansion.sorted_terms()
        ]
        _emit(args, "\n".join(blocks))
    return EXIT_OK


def cmd_jfunction(args) -> int:
    expansion = j_expansion(args.which, args.rmax)
    docs = []
    blocks = []
    for r, el in expansion.sorted_terms():
        expansions = [
            qseries_to_dict(c.expand(args.qorder))
            if isinstance(c, QRationalFunction)
            else qseries_to_dict(QRationalFunction.constant(c).expand(args.qorder))
            for c in el.coords
        ]
        docs.append(
            {"r": r, "coefficient": kelem_to_dict(el), "expansions": expansions}
        )
        lines = [f"degree {r}:", render_kelem_text(el), f"  expansions to O(q^{args.qorder}):"]
        for name, c in zip(el.ring.basis_names, el.coords):
            f = c if isinstance(c, QRationalFunction) else QRationalFunction.constant(c)
            lines.append(f"  [{name}] {f.expand(args.qorder)}")
        blocks.append("\n".join(lines))
    _emit(args, _dump(docs) if args.json else "\n".join(blocks))
    return EXIT_OK


def cmd_split_check(args) -> int:
    if args.rmax < 1:
        raise TableBoundError("--rmax must be at least 1")
    report = split_check(args.rmax)
    if args.json:
        _emit(
            args,
            _dump(
                [
                    {
                        "r": res.r,
                        "passed": res.passed,
                        "residuals": [qrf_to_dict(x) for x in res.residuals],
                    }
                    for res in report.results
                ]
            ),
        )
    else:
        lines = [
            f"r={res.r}: {'PASS' if res.passed else 'FAIL'}" for res in report.results
        ]
        verdict = "all proper parts match" if report.all_passed else "MISMATCH FOUND"
        _emit(args, "\n".join(lines) + f"\n{verdict}")
    return EXIT_OK if report.all_passed else EXIT_VERIFY


def _load_pairing(path: str) -> DivisorPairing:
    doc = _load_json(path)
    if not isinstance(doc, dict) or set(doc) - {"vectors", "description"} or "vectors" not in doc:
        raise SchemaError(f"{path}: pairing file needs exactly a 'vectors' field")
    vectors = doc["vectors"]
    if (
        not isinstance(vectors, list)
        or not vectors
        or not all(
            isinstance(v, list)
            and v
            and all(isinstance(x, int) and not isinstance(x, bool) for x in v)
            for v in vectors
        )
    ):
        raise SchemaError(f"{path}: 'vectors' must be a nonempty list of integer vectors")
    if len({len(v) for v in vectors}) != 1:
        raise SchemaError(f"{path}: pairing vectors must share one length")
    return DivisorPairing(tuple(tuple(v) for v in vectors))


def cmd_jmgs(args) -> int:
    gv = _load_table(args.gv)
    pairing = _load_pairing(args.pairing)
    rhs = jmgs_rhs(gv, pairing, args.rmax, args.qorder)
    if args.json:
        terms = []
        for deg in rhs.sorted_degrees():
            term = rhs.terms[deg]
            terms.append(
                {
                    "total_degree": list(deg),
                    "divisor": [qrf_to_dict(f) for f in term.divisor_exact],
                    "divisor_expansion": [
                        qseries_to_dict(s) for s in term.divisor_expansion
                    ],
                    "structure": qrf_to_dict(term.structure_exact),
                    "structure_expansion": qseries_to_dict(term.structure_expansion),
                }
            )
        _emit(
            args,
            _dump(
                {
                    "constant": str(rhs.constant),
                    "lattice_rank": rhs.lattice_rank,
                    "r_max": rhs.r_max,
                    "q_order": rhs.q_order,
                    "terms": terms,
                }
            ),
        )
    else:
        lines = [f"constant term: {rhs.constant}"]
        for deg in rhs.sorted_degrees():
            term = rhs.terms[deg]
            deg_s = ",".join(str(d) for d in deg)
            lines.append(f"Q^({deg_s}):")
            for j, (f, s) in enumerate(
                zip(term.divisor_exact, term.divisor_expansion), start=1
            ):
                lines.append(f"  divisor[{j}]: {f}")
                lines.append(f"    = {s} + O(q^{rhs.q_order})")
            lines.append(f"  structure: {term.structure_exact}")
            lines.append(f"    = {term.structure_expansion} + O(q^{rhs.q_order})")
        _emit(args, "\n".join(lines))
    return EXIT_OK


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bps-kit",
        description="Exact transforms between invariant tables and cover series checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--output", metavar="PATH", help="write the primary document to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gw2gv", parents=[common], help="invert a GW table to a GV table")
    p.add_argument("input", help="GW table JSON file")
    p.add_argument(
        "--genus0-mobius",
        action="store_true",
        help="use the rank-1 genus-0 Mobius divisor sum",
    )
    p.add_argument(
        "--check-integrality",
        action="store_true",
        help="report non-integer output entries (exit 3 if any)",
    )
    p.set_defaults(func=cmd_gw2gv)

    p = sub.add_parser("gv2gw", parents=[common], help="evaluate a GV table forward to GW")
    p.add_argument("input", help="GV table JSON file")
    p.set_defaults(func=cmd_gv2gw)

    p = sub.add_parser(
        "check-integrality", parents=[common], help="list non-integer entries of a GV table"
    )
    p.add_argument("input", help="GV table JSON file")
    p.set_defaults(func=cmd_check_integrality)

    p = sub.add_parser(
        "conifold",
        parents=[common],
        help="closed-form cover table and its transform (expects a lone 1)",
    )
    p.add_argument("--gmax", type=int, required=True, help="genus bound (>= 0)")
    p.add_argument("--dmax", type=int, required=True, help="degree bound (>= 1)")
    p.set_defaults(func=cmd_conifold)

    p = sub.add_parser("sin-series", parents=[common], help="expand (2 sin(k*x/2))^(2g-2)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--order", type=int, required=True, help="exclusive truncation order")
    p.set_defaults(func=cmd_sin_series)

    p = sub.add_parser("ab-series", parents=[common], help="degree-r cover coefficients")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--order", type=int, default=6, help="expansion order for display")
    p.set_defaults(func=cmd_ab_series)

    p = sub.add_parser(
        "ifunction", parents=[common], help="localization coefficients in the rank-6 ring"
    )
    p.add_argument("--rmax", type=int, required=True)
    p.set_defaults(func=cmd_ifunction)

    p = sub.add_parser(
        "jfunction", parents=[common], help="cover-summed coefficients in either ring"
    )
    p.add_argument("--which", choices=["X", "Y"], required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--qorder", type=int, default=6)
    p.set_defaults(func=cmd_jfunction)

    p = sub.add_parser(
        "split-check",
        parents=[common],
        help="verify the proper part of each I-coefficient equals the J-coefficient",
    )
    p.add_argument("--rmax", type=int, required=True)
    p.set_defaults(func=cmd_split_check)

    p = sub.add_parser(
        "jmgs", parents=[common], help="assemble the GV-weighted cover sum from files"
    )
    p.add_argument("--gv", required=True, help="genus-zero GV table JSON file")
    p.add_argument("--pairing", required=True, help="divisor pairing JSON file")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--qorder", type=int, default=6)
    p.set_defaults(func=cmd_jmgs)

    return parser


def main(argv=None) -> int:
    level = os.environ.get("BPS_KIT_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (
        TableKindError,
        TableBoundError,
        PoleLocationError,
        PoleAtZeroError,
        TruncationError,
        RingMismatchError,
        NotInvertibleError,
        ValueError,
    ) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

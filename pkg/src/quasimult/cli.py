"""Command-line driver: validate, classes, decompose, center, tight, mu-qm,
check-ideal, minimal, identity, gen.

Exit codes: 0 the checked property holds (or the command succeeded), 1 the
property fails (witness printed), 2 the input or invocation is invalid.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import reports
from .connections import connection_classes
from .decomposition import center, decompose, is_ideal, is_tight, make_candidate
from .fileio import AlgebraSyntaxError, AlgebraValidationError, parse_document, serialize
from .generator import GenerationError, GeneratorParams, generate_random
from .identities import check_identity, colorize, load_scheme
from .minimality import (
    OracleBoundExceeded,
    is_mu_quasi_multiplicative,
    minimal_brute_force,
    minimal_by_theorem,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasimult")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("file")
        return p

    with_file("validate", help="run all structural validators on an algebra file")
    p = with_file("classes", help="print the connection partition of the index set")
    p.add_argument("--figure", help="also render the class graph to this image file")
    p = with_file("decompose", help="per-class ideals, complement, verification checks")
    p.add_argument("--report", choices=["json", "text"], default="text")
    p.add_argument("--figure", help="also render the decomposition graph to this image file")
    p = with_file("check-ideal", help="closure check for a candidate ideal")
    p.add_argument("--w-part", default="", help="comma-separated w-basis ids")
    p.add_argument("--v-part", default="", help="semicolon-separated rational rows over the v-basis")
    with_file("center", help="exact basis of the center")
    with_file("tight", help="is V generated by the V-valued basis products")
    with_file("mu-qm", help="transport-witness condition on the basis")
    p = with_file("minimal", help="minimality by criterion and/or brute force")
    p.add_argument("--method", choices=["theorem", "oracle", "both"], default="both")
    p.add_argument("--oracle-max-i", type=int, default=6)
    p.add_argument("--oracle-max-v", type=int, default=4)
    p = with_file("identity", help="check a rewriting-identity scheme")
    p.add_argument("--scheme", help="leibniz | n_lie | antisymmetry | path to a scheme file")
    p = sub.add_parser("gen", help="write a seeded random algebra file")
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--basis", type=int, default=3)
    p.add_argument("--dim-v", type=int, default=0)
    p.add_argument("--mode", choices=["multiplicative", "general"], default="multiplicative")
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--group", default="2", help="comma-separated cyclic orders")
    p.add_argument("-o", "--output", required=True)
    return parser


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())


def _parse_rows(text: str, width: int):
    if not text.strip():
        return []
    rows = []
    for chunk in text.split(";"):
        entries = [e.strip() for e in chunk.split(",")]
        if len(entries) != width:
            raise ValueError(f"v-part row {chunk!r} must have {width} entries")
        rows.append([Fraction(e) for e in entries])
    return rows


def cli_dispatch(argv) -> tuple[int, str]:
    """Run one command; returns (exit code, report text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), ""

    if args.command == "gen":
        try:
            params = GeneratorParams(
                arity=args.arity, n_indices=args.basis, dim_v=args.dim_v, mode=args.mode,
                density=args.density, seed=args.seed,
                group_orders=tuple(int(m) for m in args.group.split(",")),
            )
            alg = generate_random(params)
        except (ValueError, GenerationError) as exc:
            return 2, f"error: {exc}\n"
        text = serialize(alg)
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return 0, f"wrote {args.output}\n"

    if args.command == "validate":
        try:
            _load(args.file)
        except AlgebraValidationError as exc:
            return 1, exc.report.describe() + "\n"
        except (AlgebraSyntaxError, OSError) as exc:
            return 2, f"error: {exc}\n"
        return 0, "ok\n"

    try:
        alg, declared_scheme = _load(args.file)
    except (AlgebraSyntaxError, AlgebraValidationError, OSError) as exc:
        return 2, f"error: {exc}\n"
    label = args.file

    if args.command == "classes":
        partition = connection_classes(alg.symbolic())
        text, _ = reports.classes_report(label, partition)
        if args.figure:
            from .figures import render_figure

            render_figure(alg, partition, args.figure, label=label)
            text += f"figure: {args.figure}\n"
        return 0, text

    if args.command == "decompose":
        decomp = decompose(alg)
        text, model = reports.decompose_report(label, alg, decomp)
        out = reports.render_json(model) if args.report == "json" else text
        if args.figure:
            from .figures import render_figure

            render_figure(alg, decomp.partition, args.figure, decomp=decomp, label=label)
            if args.report == "text":
                out += f"figure: {args.figure}\n"
        return 0, out

    if args.command == "check-ideal":
        try:
            w_part = [w for w in args.w_part.split(",") if w]
            cand = make_candidate(alg, w_part, _parse_rows(args.v_part, len(alg.v_ids)))
        except ValueError as exc:
            return 2, f"error: {exc}\n"
        ok, witness = is_ideal(alg, cand)
        text, _ = reports.check_ideal_report(label, alg, ok, witness)
        return (0 if ok else 1), text

    if args.command == "center":
        text, _ = reports.center_report(label, alg, center(alg))
        return 0, text

    if args.command == "tight":
        ok, witness = is_tight(alg)
        text, _ = reports.tight_report(label, ok, witness)
        return (0 if ok else 1), text

    if args.command == "mu-qm":
        ok, witness = is_mu_quasi_multiplicative(alg)
        text, _ = reports.mu_qm_report(label, ok, witness)
        return (0 if ok else 1), text

    if args.command == "minimal":
        theorem = minimal_by_theorem(alg) if args.method in ("theorem", "both") else None
        oracle = None
        oracle_error = None
        if args.method in ("oracle", "both"):
            try:
                oracle = minimal_brute_force(alg, args.oracle_max_i, args.oracle_max_v)
            except OracleBoundExceeded as exc:
                if args.method == "oracle":
                    return 2, f"error: {exc}\n"
                oracle_error = str(exc)
        text, _, code = reports.minimal_report(label, alg, theorem, oracle, oracle_error)
        return code, text

    if args.command == "identity":
        source = args.scheme or declared_scheme
        if source is None:
            return 2, "error: no --scheme given and the file declares none\n"
        if source not in ("leibniz", "n_lie", "antisymmetry") and not os.path.isabs(source):
            candidate = os.path.join(os.path.dirname(os.path.abspath(args.file)), source)
            if os.path.exists(candidate):
                source = candidate
        try:
            scheme = load_scheme(source, alg.arity)
        except (OSError, ValueError) as exc:
            return 2, f"error: {exc}\n"
        result = check_identity(alg, colorize(scheme, alg.bicharacter))
        text, _ = reports.identity_report(label, alg, scheme.name, result)
        return (0 if result.ok else 1), text

    return 2, "error: unknown command\n"


def main(argv=None) -> int:
    code, text = cli_dispatch(sys.argv[1:] if argv is None else argv)
    if text:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

Every verb reads an ordered set (inline integers, a file, or stdin), runs one
analysis, and prints a report as text or JSON carrying the same information.
Exit codes: 0 success, 1 negative verdict on a yes/no question, 2 bad input,
3 cross-check failure under --verify.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import divisibility, exactmatrix, generate, setmodel, tncore
from .errors import Error, TooLargeForExhaustiveMinorsError
from .setmodel import ExponentMatrix, OrderedSet

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CROSS_CHECK = 3


class CrossCheckFailure(Exception):
    """Closed form and oracle disagreed under --verify."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcdmat",
        description="Exact gcd/lcm matrix analysis: total nonnegativity, "
        "closed-form inverses and quotients, matrix divisibility.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    reads_set = argparse.ArgumentParser(add_help=False)
    reads_set.add_argument("elements", nargs="*", type=int, help="inline set elements")
    reads_set.add_argument("--input", metavar="PATH", help="input file, or - for stdin")

    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", parents=[common, reads_set],
                       help="set-class predicates, TN verdict, order search")
    p.add_argument("--minor-cap", type=int, default=exactmatrix.DEFAULT_MINOR_CAP,
                   help="max order for the exhaustive minor confirmation")

    for verb, help_text in (
        ("gcd-matrix", "print the gcd matrix"),
        ("lcm-matrix", "print the lcm matrix"),
        ("pow", "print the prime-exponent matrix"),
        ("order", "search for a column-monotone reordering"),
        ("invert", "invert the gcd matrix (tridiagonal closed form when TN)"),
    ):
        sub.add_parser(verb, parents=[common, reads_set], help=help_text)

    p = sub.add_parser("divide", parents=[common, reads_set],
                       help="decide lcm-matrix divisibility by the gcd matrix")
    p.add_argument("--verify", action="store_true",
                   help="cross-check the closed form against the oracle")

    p = sub.add_parser("power-divide", parents=[common, reads_set],
                       help="divide verdict for the elementwise power set")
    p.add_argument("--power", type=int, default=1, metavar="E")

    p = sub.add_parser("generate", parents=[common],
                       help="emit a set from a named exponent pattern")
    p.add_argument("--pattern", choices=("pascal", "vandermonde", "random"), required=True)
    p.add_argument("--n", type=int, help="set size (pascal, random)")
    p.add_argument("--primes", help="comma-separated primes to build on")
    p.add_argument("--bases", help="comma-separated bases (vandermonde)")
    p.add_argument("--seed", type=int, default=0, help="64-bit seed (random)")
    p.add_argument("--max-exp", type=int, default=6, help="largest exponent (random)")
    p.add_argument("--max-primes", type=int, default=4, help="most primes used (random)")

    p = sub.add_parser("search", parents=[common],
                       help="hunt a gcd-closed set whose gcd matrix fails to divide")
    p.add_argument("--size", type=int, default=4, help="set size to search")
    p.add_argument("--bound", type=int, default=300, help="largest element allowed")
    p.add_argument("--budget", type=int, default=100_000, help="max candidate sets tested")

    return parser


def _load_document(args) -> OrderedSet | ExponentMatrix:
    inline = getattr(args, "elements", None)
    path = getattr(args, "input", None)
    if inline and path:
        raise Error("give elements inline or via --input, not both")
    if inline:
        return OrderedSet(inline)
    if not path:
        raise Error("no input: pass elements inline or use --input PATH|-")
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return setmodel.parse_input_document(text)


def _load_set(args) -> OrderedSet:
    doc = _load_document(args)
    return setmodel.reconstruct(doc) if isinstance(doc, ExponentMatrix) else doc


def _matrix_dict(m: exactmatrix.ExactMatrix) -> dict:
    return m.to_json_dict()


def _cmd_analyze(args) -> tuple[dict, int]:
    s = _load_set(args)
    chains = setmodel.classify_coprime_divisor_chains(s)
    monotone = setmodel.is_column_monotone(setmodel.pow_matrix(s))
    verdict = tncore.check_tn_triple(s)
    try:
        minors = exactmatrix.all_minors_nonnegative(
            exactmatrix.gcd_matrix(s), size_cap=args.minor_cap
        )
        minors_ok = minors.all_nonnegative
    except TooLargeForExhaustiveMinorsError:
        minors_ok = None
    order = setmodel.find_monotone_order(s)
    report = {
        "elements": [str(x) for x in s],
        "n": len(s),
        "gcd_closed": setmodel.is_gcd_closed(s),
        "factor_closed": setmodel.is_factor_closed(s),
        "coprime_chains": [[str(x) for x in block] for block in chains] if chains else None,
        "column_monotone": monotone.monotone,
        "column_directions": list(monotone.directions),
        "tn": verdict.to_json_dict(),
        "minors_nonnegative": minors_ok,
        "monotone_order": list(order) if order else None,
    }
    return report, EXIT_OK


def _cmd_gcd_matrix(args) -> tuple[dict, int]:
    return _matrix_dict(exactmatrix.gcd_matrix(_load_set(args))), EXIT_OK


def _cmd_lcm_matrix(args) -> tuple[dict, int]:
    return _matrix_dict(exactmatrix.lcm_matrix(_load_set(args))), EXIT_OK


def _cmd_pow(args) -> tuple[dict, int]:
    return setmodel.pow_matrix(_load_set(args)).to_json_dict(), EXIT_OK


def _cmd_order(args) -> tuple[dict, int]:
    s = _load_set(args)
    image = setmodel.find_monotone_order(s)
    report = {
        "orderable": image is not None,
        "image": list(image) if image else None,
        "reordered": [str(x) for x in s.permute(image)] if image else None,
    }
    return report, EXIT_OK if image else EXIT_NEGATIVE


def _cmd_invert(args) -> tuple[dict, int]:
    s = _load_set(args)
    verdict = tncore.check_tn_triple(s)
    if verdict.is_tn and len(s) >= 3:
        tri = tncore.tridiagonal_inverse(s, verdict)
        report = {
            "method": "tridiagonal",
            "sub_super": [str(a) for a in tri.sub_super],
            "diagonal": [str(b) for b in tri.diagonal],
            "inverse": _matrix_dict(tri.as_matrix()),
        }
    else:
        gcd_m = exactmatrix.gcd_matrix(s)
        inverse = exactmatrix.solve_right(gcd_m, exactmatrix.ExactMatrix.identity(len(s)))
        report = {
            "method": "solve",
            "sub_super": None,
            "diagonal": None,
            "inverse": _matrix_dict(inverse),
        }
    return report, EXIT_OK


def _divide_report(s: OrderedSet, verify: bool) -> dict:
    verdict = tncore.check_tn_triple(s)
    closed_form_applies = verdict.is_tn and len(s) >= 3
    if closed_form_applies:
        report = divisibility.divide_via_closed_form(s, verdict)
    else:
        report = divisibility.divide_oracle(s)
    doc = report.to_json_dict()
    doc["method"] = report.method
    doc["verified"] = False
    if verify:
        oracle = divisibility.divide_oracle(s)
        if closed_form_applies and (
            oracle.divides != report.divides or oracle.witness != report.witness
        ):
            raise CrossCheckFailure(
                f"closed form and oracle disagree on {list(s.elements)}"
            )
        doc["verified"] = True
    return doc


def _cmd_divide(args) -> tuple[dict, int]:
    doc = _divide_report(_load_set(args), args.verify)
    return doc, EXIT_OK if doc["divides"] else EXIT_NEGATIVE


def _cmd_power_divide(args) -> tuple[dict, int]:
    s = _load_set(args)
    report = divisibility.divide_power(s, args.power)
    doc = report.to_json_dict()
    doc["method"] = report.method
    doc["power"] = args.power
    doc["power_elements"] = [str(x) for x in setmodel.power_set(s, args.power)]
    return doc, EXIT_OK if doc["divides"] else EXIT_NEGATIVE


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(tok, 10) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise Error(f"bad {flag} value: {text!r} (want comma-separated integers)") from None


def _cmd_generate(args) -> tuple[dict, int]:
    primes = _parse_int_list(args.primes, "--primes") if args.primes else None
    if args.pattern == "pascal":
        if not args.n:
            raise Error("--pattern pascal needs --n")
        s = generate.pascal_set(args.n, primes)
    elif args.pattern == "vandermonde":
        if not args.bases:
            raise Error("--pattern vandermonde needs --bases")
        bases = _parse_int_list(args.bases, "--bases")
        s = generate.vandermonde_set(bases, primes)
    else:
        if not args.n:
            raise Error("--pattern random needs --n")
        rng = generate.SplitMix64(args.seed)
        matrix = generate.random_monotone_exponents(rng, args.n, args.max_exp, args.max_primes)
        s = setmodel.reconstruct(matrix)
    matrix = setmodel.pow_matrix(s)
    report = {
        "pattern": args.pattern,
        "elements": [str(x) for x in s],
        "primes": [str(p) for p in matrix.primes],
        "exponents": [list(row) for row in matrix.exponents],
    }
    return report, EXIT_OK


def _cmd_search(args) -> tuple[dict, int]:
    found = divisibility.search_gcd_closed_nondivisor(args.size, args.bound, args.budget)
    report = {
        "found": found is not None,
        "elements": [str(x) for x in found] if found else None,
    }
    return report, EXIT_OK if found else EXIT_NEGATIVE


_HANDLERS = {
    "analyze": _cmd_analyze,
    "gcd-matrix": _cmd_gcd_matrix,
    "lcm-matrix": _cmd_lcm_matrix,
    "pow": _cmd_pow,
    "order": _cmd_order,
    "invert": _cmd_invert,
    "divide": _cmd_divide,
    "power-divide": _cmd_power_divide,
    "generate": _cmd_generate,
    "search": _cmd_search,
}


def _scalar(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "null"
    return str(value)


def render_text(report: dict) -> str:
    """Deterministic text rendering of a report; same information as the JSON."""
    lines: list[str] = []

    def emit(key, value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and all(isinstance(v, list) for v in value):
            lines.append(f"{pad}{key}:")
            for row in value:
                lines.append(pad + "  " + " ".join(_scalar(e) for e in row))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + (" ".join(_scalar(e) for e in value) if value else "(empty)"))
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")

    for k, v in report.items():
        emit(k, v, 0)
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = _HANDLERS[args.verb](args)
    except CrossCheckFailure as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CROSS_CHECK
    except (Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    raise SystemExit(main())

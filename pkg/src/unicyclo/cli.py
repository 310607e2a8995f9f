"""Command-line interface.

Subcommands: compute, search, witness, semigroup, check.  Output formats:
plain (default), csv, json.  JSON output is schema-stable with top level
{command, inputs, results, ok}; every numeric value is rendered as a
decimal string so arbitrarily large integers survive any JSON parser.

Exit codes: 0 success, 2 invalid input, 3 search range exhausted,
4 verification failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import analysis, semigroup, witness
from .cyclotomic import FAMILIES, InvalidBasis, family_polynomial
from .polynomial import NonExactDivision, NonUnitConstantTerm

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EXHAUSTED = 3
EXIT_VERIFY = 4

_INPUT_ERRORS = (
    ValueError,
    InvalidBasis,
    NonExactDivision,
    NonUnitConstantTerm,
    analysis.PreconditionUnmet,
    semigroup.NotNumerical,
)


def _stringify(obj):
    """Ints become decimal strings (bools stay bools); containers recurse."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return obj
    if dataclasses.is_dataclass(obj):
        return _stringify(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_stringify(v) for v in seq]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def render_json(command: str, inputs: dict, results, ok: bool) -> str:
    payload = {
        "command": command,
        "inputs": _stringify(inputs),
        "results": _stringify(results),
        "ok": ok,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _flat_items(value, prefix=""):
    if dataclasses.is_dataclass(value):
        value = dataclasses.asdict(value)
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _flat_items(v, f"{prefix}{k}.")
    elif isinstance(value, (list, tuple)) and any(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            yield from _flat_items(v, f"{prefix}{i}.")
    elif isinstance(value, (list, tuple)):
        yield prefix.rstrip("."), " ".join(str(v) for v in value)
    else:
        yield prefix.rstrip("."), value


def _render_report(command, inputs, results, ok, fmt, csv_rows=None):
    if fmt == "json":
        return render_json(command, inputs, results, ok)
    if fmt == "csv":
        if csv_rows is not None:
            return "\n".join(",".join(str(c) for c in row) for row in csv_rows) + "\n"
        lines = ["key,value"] + [f"{k},{v}" for k, v in _flat_items(results)]
        return "\n".join(lines) + "\n"
    lines = [f"{k}: {v}" for k, v in _flat_items(results)]
    return "\n".join(lines) + "\n"


def _sparse(coeffs) -> list:
    return [(j, c) for j, c in enumerate(coeffs) if c]


# ---------------------------------------------------------------------------
# command handlers: each returns (output_text, exit_code)


def _cmd_compute(args) -> tuple[str, int]:
    f = family_polynomial(args.family, args.n)
    results = {
        "family": args.family,
        "n": args.n,
        "degree": f.degree,
        "height": f.height(),
        "coeff_set": sorted(f.coeff_set()),
        "coefficients": _sparse(f.coeffs),
    }
    csv_rows = [("j", "value")] + [(j, c) for j, c in enumerate(f.coeffs)]
    inputs = {"family": args.family, "n": args.n}
    return _render_report("compute", inputs, results, True, args.format, csv_rows), EXIT_OK


def _cmd_search(args) -> tuple[str, int]:
    inputs = {"family": args.family, "max_m": args.max_m, "max_n": args.max_n}
    code = EXIT_OK
    missing: tuple = ()
    try:
        records = analysis.minimal_n_table(args.family, args.max_m, args.max_n, jobs=args.jobs)
    except analysis.RangeExhausted as exc:
        records, missing, code = list(exc.records), exc.missing, EXIT_EXHAUSTED
    results = {"records": records, "missing": list(missing)}
    if args.format == "json":
        return render_json("search", inputs, results, code == EXIT_OK), code
    rows = [("m", "n", "degree", "k", "value")]
    rows += [(r.m, r.n, r.degree, r.k, r.value) for r in records]
    if args.format == "csv":
        text = "\n".join(",".join(str(c) for c in row) for row in rows) + "\n"
    else:
        widths = [max(len(str(row[i])) for row in rows) for i in range(5)]
        text = "\n".join(
            "  ".join(str(c).rjust(w) for c, w in zip(row, widths)) for row in rows
        ) + "\n"
    if missing:
        text += f"range exhausted before magnitudes: {' '.join(map(str, missing))}\n"
    return text, code


def _cmd_witness(args) -> tuple[str, int]:
    inputs = {"m": args.m, "t": args.t}
    try:
        report = witness.verify_witness(args.m, args.t)
        return _render_report("witness", inputs, report, report.all_match, args.format), EXIT_OK
    except witness.PredictionMismatch as exc:
        return _render_report("witness", inputs, exc.report, False, args.format), EXIT_VERIFY


def _cmd_semigroup(args) -> tuple[str, int]:
    gens = [int(g) for g in args.gens.split(",") if g]
    s = semigroup.NumericalSemigroup(gens)
    p = semigroup.semigroup_polynomial(s)
    results = {
        "generators": list(s.generators),
        "frobenius": s.frobenius,
        "gaps": list(s.gaps),
        "degree": p.degree,
        "polynomial": _sparse(p.coeffs),
    }
    inputs = {"gens": args.gens}
    return _render_report("semigroup", inputs, results, True, args.format), EXIT_OK


_CHECKS = {
    "ternary-consecutive": (analysis.ternary_consecutive_check, 3),
    "congruence-transfer": (analysis.congruence_transfer_check, 4),
    "height-jump": (analysis.height_jump_check, 4),
    "kaplan-flat": (analysis.kaplan_flatness_check, 4),
    "psi-bound": (analysis.psi_star_ternary_bound_check, 3),
    "binary-identities": (semigroup.verify_binary_identities, 2),
}


def _cmd_check(args) -> tuple[str, int]:
    fn, arity = _CHECKS[args.name]
    params = [int(v) for v in args.params.split(",") if v]
    if len(params) != arity:
        raise ValueError(f"check {args.name!r} expects {arity} parameters, got {len(params)}")
    inputs = {"name": args.name, "params": params}
    try:
        report = fn(*params)
    except semigroup.IdentityViolation as exc:
        results = {"error": str(exc)}
        return _render_report("check", inputs, results, False, args.format), EXIT_VERIFY
    ok = getattr(report, "ok", True)
    code = EXIT_OK if ok else EXIT_VERIFY
    return _render_report("check", inputs, report, ok, args.format), code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unicyclo",
        description="Exact computations with (inverse) unitary cyclotomic polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("compute", help="compute one family polynomial")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_compute)

    p = sub.add_parser("search", help="minimal n per coefficient magnitude")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--max-m", dest="max_m", type=int, required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("witness", help="verify the coefficient-realization procedure")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("semigroup", help="numerical semigroup facts and polynomial")
    p.add_argument("--gens", required=True, help="comma-separated generators")
    add_format(p)
    p.set_defaults(handler=_cmd_semigroup)

    p = sub.add_parser("check", help="run one theorem-instance check")
    p.add_argument("--name", choices=sorted(_CHECKS), required=True)
    p.add_argument("--params", required=True, help="comma-separated integers")
    add_format(p)
    p.set_defaults(handler=_cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.handler(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

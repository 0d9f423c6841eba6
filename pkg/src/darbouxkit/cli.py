"""Command-line front end.

Every subcommand reads a measure spec, ingests moments ``s_0 .. s_{4n-1}``
for ``--depth n`` and prints one JSON (or CSV) document.
Exit status: 0 on success, 1 on a domain error or a failed verification,
2 on a usage error.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .cfrac import approximant, jfraction, laurent_match, pfraction, sfraction
from .darboux import chihara, extended_darboux, lu, ul
from .errors import DarbouxError
from .jacobi import jacobi_from_moments
from .serialize import (
    cfrac_to_json,
    darboux_to_json,
    dumps,
    factors_to_json,
    jacobi_to_json,
    moments_to_json,
    parse_shift,
    poly_to_json,
    spec_from_json,
    spec_to_json,
    to_csv,
)
from .verify import ingest, verify_all

SUBCOMMANDS = ("moments", "jacobi", "unwrap", "darboux", "chihara", "cfrac", "verify")
DEFAULT_MAX_DEPTH = 64


class UsageError(Exception):
    pass


def max_depth() -> int:
    raw = os.environ.get("DARBOUX_MAX_DEPTH", str(DEFAULT_MAX_DEPTH))
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"DARBOUX_MAX_DEPTH must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("DARBOUX_MAX_DEPTH must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="darbouxkit", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", help="inline JSON measure spec")
    src.add_argument("--spec-file", type=Path, help="path to a JSON measure spec")
    common.add_argument("--depth", type=int, required=True, help="classical order n (moments to 4n-1)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", type=Path, help="write output here instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True, metavar="{" + ",".join(SUBCOMMANDS) + "}")
    sub.add_parser("moments", parents=[common], help="moment prefix")
    sub.add_parser("jacobi", parents=[common], help="recurrence coefficients (b, c)")
    sub.add_parser("unwrap", parents=[common], help="extended Darboux transform")
    p = sub.add_parser("darboux", parents=[common], help="LU factors and the UL matrix")
    p.add_argument("--shift", help="p/q (real, applied as (p/q)^2) or i:p/q (imaginary)")
    p = sub.add_parser("chihara", parents=[common], help="shifted extended Darboux transform")
    p.add_argument("--alpha", required=True, help="p/q or i:p/q")
    p = sub.add_parser("cfrac", parents=[common], help="continued-fraction coefficients")
    p.add_argument("--kind", choices=("j", "s", "p"), default="j")
    p = sub.add_parser("verify", parents=[common], help="run every invariant check")
    p.add_argument("--alpha", help="also run the shifted suite with p/q or i:p/q")
    return parser


def _load_spec(args):
    if args.spec_file is not None:
        try:
            text = args.spec_file.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read spec file: {exc}") from None
    else:
        text = args.spec
    return spec_from_json(text)


def _shift(text):
    try:
        return parse_shift(text)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, DarbouxError):
            raise
        raise UsageError(f"bad shift {text!r}: {exc}") from None


def _cmd_moments(spec, n, args):
    s = ingest(spec, n)
    return {"spec": spec_to_json(spec), "depth": n, "moments": moments_to_json(s)}, 0


def _cmd_jacobi(spec, n, args):
    return jacobi_to_json(jacobi_from_moments(ingest(spec, n), n)), 0


def _cmd_unwrap(spec, n, args):
    J = jacobi_from_moments(ingest(spec, n), n)
    result = extended_darboux(J)
    out = darboux_to_json(result)
    out["factors"] = factors_to_json(result.factors)
    return out, 0


def _cmd_darboux(spec, n, args):
    J = jacobi_from_moments(ingest(spec, n), n)
    f = lu(J, _shift(args.shift))
    # top level doubles as an LUFactors document
    return {**factors_to_json(f), "ul": jacobi_to_json(ul(f))}, 0


def _cmd_chihara(spec, n, args):
    J = jacobi_from_moments(ingest(spec, n), n)
    result = chihara(J, _shift(args.alpha))
    out = darboux_to_json(result)
    out["factors"] = factors_to_json(result.factors)
    return out, 0


def _cmd_cfrac(spec, n, args):
    s = ingest(spec, n)
    build = {"j": jfraction, "s": sfraction, "p": pfraction}[args.kind]
    cf = build(s, n if args.kind != "s" else None)
    rows = []
    for k in range(1, cf.levels + 1):
        appr = approximant(cf, k)
        row = {"k": k, "numerator": poly_to_json(appr.numerator),
               "denominator": poly_to_json(appr.denominator)}
        if args.kind != "p":
            row["laurent_match"] = laurent_match(appr, s)
        rows.append(row)
    return {"fraction": cfrac_to_json(cf), "approximants": rows}, 0


def _cmd_verify(spec, n, args):
    alpha = _shift(args.alpha) if args.alpha else None
    report = verify_all(spec, n, alpha)
    return report.to_json(), 0 if report.ok else 1


COMMANDS = {
    "moments": _cmd_moments,
    "jacobi": _cmd_jacobi,
    "unwrap": _cmd_unwrap,
    "darboux": _cmd_darboux,
    "chihara": _cmd_chihara,
    "cfrac": _cmd_cfrac,
    "verify": _cmd_verify,
}


def _emit(payload, args):
    text = to_csv(payload) if args.format == "csv" else dumps(payload)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, newline="")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cap = max_depth()
        if args.depth < 1:
            raise UsageError("--depth must be at least 1")
        if args.depth > cap:
            raise UsageError(f"--depth {args.depth} exceeds DARBOUX_MAX_DEPTH={cap}")
        spec = _load_spec(args)
        payload, code = COMMANDS[args.command](spec, args.depth, args)
        _emit(payload, args)
        return code
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except DarbouxError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())

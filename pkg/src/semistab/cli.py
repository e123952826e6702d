"""Batch command-line front end.

Reads JSON instance files (schema_version 1), dispatches to the library,
and prints a deterministic JSON verdict: sorted keys, canonical rational
strings, compact separators, trailing newline.  Exit codes: 0 computed,
1 unstable/violated under --fail-on-unstable, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Mapping, Optional, Sequence

from . import classical, dispo, hilbert_mumford, jsonio, repdata
from .errors import SemistabError
from .exactmath import UniPoly, rational
from .flags import OneParamSubgroup

SCHEMA_VERSION = 1


class InputError(Exception):
    """Malformed instance file (exit code 2)."""


def _load_instance(path: Optional[str], expected_kind: str) -> Mapping:
    try:
        if path is None or path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, "r", encoding="utf-8") as handle:
                data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read instance file: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("instance file must be a JSON object")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise InputError(
            f"unsupported schema_version {data.get('schema_version')!r}, "
            f"expected {SCHEMA_VERSION}"
        )
    kind = data.get("kind")
    if kind != expected_kind:
        raise InputError(f"expected kind {expected_kind!r}, got {kind!r}")
    payload = data.get("payload")
    if not isinstance(payload, dict):
        raise InputError("payload must be a JSON object")
    return payload


def _emit(document: Mapping[str, Any], pretty: bool) -> None:
    if pretty:
        text = json.dumps(document, sort_keys=True, indent=2)
    else:
        text = json.dumps(document, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _decode_model(payload: Mapping) -> list[dispo.ModelEntry]:
    entries = payload.get("entries", [])
    return [
        (
            jsonio.decode_filtration(entry["filtration"]),
            jsonio.decode_profile(entry["profile"]),
        )
        for entry in entries
    ]


def _cmd_mu(args: argparse.Namespace) -> tuple[dict, bool]:
    if args.kind == "torus_rep":
        payload = _load_instance(args.input, "torus_rep")
        rep = jsonio.decode_rep(payload["rep"])
        lam = jsonio.decode_subgroup(payload["lambda"])
        point = jsonio.decode_point(payload["point"])
        value = hilbert_mumford.mu(rep, lam, point)
    else:
        payload = _load_instance(args.input, "dispo")
        filtration = jsonio.decode_filtration(payload["filtration"])
        profile = jsonio.decode_profile(payload["profile"])
        value = dispo.mu_profile(filtration, profile)
    return {"mu": jsonio.encode_rational(value)}, False


def _cmd_destabilize(args: argparse.Namespace) -> tuple[dict, bool]:
    payload = _load_instance(args.input, "torus_rep")
    rep = jsonio.decode_rep(payload["rep"])
    point = jsonio.decode_point(payload["point"])
    verdict = hilbert_mumford.torus_destabilize(rep, point)
    if verdict.semistable:
        certificate = verdict.certificate
        return {
            "verdict": "semistable",
            "certificate": {
                "coefficients": {
                    label: jsonio.encode_rational(c)
                    for label, c in certificate.coefficients
                },
                "multiple": jsonio.encode_rational(certificate.multiple),
            },
        }, False
    return {
        "verdict": "unstable",
        "lambda": jsonio.encode_subgroup(verdict.destabilizer),
    }, True


def _cmd_dispo_check(args: argparse.Namespace) -> tuple[dict, bool]:
    payload = _load_instance(args.input, "dispo")
    model = _decode_model(payload)
    mode = payload.get("mode", "asymptotic")
    if mode == "delta":
        delta = jsonio.decode_poly(payload["delta"])
        verdict = dispo.delta_semistable(model, delta, strict=args.strict)
    elif mode == "slope":
        delta_bar = rational(payload["delta_bar"])
        verdict = dispo.slope_semistable(model, delta_bar, strict=args.strict)
    elif mode == "asymptotic":
        verdict = dispo.asymptotic_semistable(model, strict=args.strict)
    else:
        raise InputError(f"unknown mode {mode!r}")
    if verdict.semistable:
        return {"verdict": "semistable"}, False
    return {"verdict": "violated", "witness_index": verdict.witness_index}, True


def _cmd_deform(args: argparse.Namespace) -> tuple[dict, bool]:
    payload = _load_instance(args.input, "dispo")
    filtration = jsonio.decode_filtration(payload["filtration"])
    profile = jsonio.decode_profile(payload["profile"])
    deformed = dispo.admissible_deformation(filtration, profile)
    return {"profile": jsonio.encode_profile(deformed)}, False


def _cmd_form_check(args: argparse.Namespace) -> tuple[dict, bool]:
    payload = _load_instance(args.input, "form_bundle")
    fb = jsonio.decode_form_bundle(payload["form"])
    if "flags" in payload:
        source: classical.FlagSource = [
            jsonio.decode_flag(f) for f in payload["flags"]
        ]
    else:
        source = classical.EXHAUSTIVE
    check = payload.get("check", "semistable")
    if check == "semistable":
        verdict = classical.semistable_form(fb, source, strict=args.strict)
    elif check == "ramanathan":
        verdict = classical.ramanathan_semistable(fb, source, strict=args.strict)
    else:
        raise InputError(f"unknown check {check!r}")
    if verdict.semistable:
        return {"verdict": "semistable", "witness": None}, False
    return {
        "verdict": "unstable",
        "witness": jsonio.encode_flag(verdict.witness),
    }, True


def _cmd_dualize(args: argparse.Namespace) -> tuple[dict, bool]:
    payload = _load_instance(args.input, "flags")
    model = classical.SplitSheafModel(tuple(int(d) for d in payload["degrees"]))
    flag = jsonio.decode_flag(payload["flag"])
    dual = classical.dualize_filtration(model, flag)
    return {"flag": jsonio.encode_flag(dual)}, False


def _cmd_bounds(args: argparse.Namespace) -> tuple[dict, bool]:
    try:
        t = repdata.DynkinType.parse(args.type)
    except SemistabError as exc:
        raise InputError(str(exc)) from exc
    condition = repdata.heinloth_curve_condition([t])
    return {
        "bound": repdata.adjoint_low_height_bound(t),
        "clause": str(condition),
    }, False


def _cmd_enumerate_compositions(args: argparse.Namespace) -> tuple[dict, bool]:
    tuples = hilbert_mumford.weighted_compositions(args.s)
    return {"s": args.s, "tuples": [list(t) for t in tuples]}, False


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semistab",
        description="Exact semistability computations, batch mode.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="instance file path, - for stdin")
    common.add_argument(
        "--fail-on-unstable",
        action="store_true",
        help="exit 1 when the verdict is unstable/violated",
    )
    common.add_argument("--strict", action="store_true", help="strict inequalities")
    common.add_argument("--pretty", action="store_true", help="indented output")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", parents=[common], help="Hilbert-Mumford or profile mu")
    p.add_argument("--kind", choices=["torus_rep", "dispo"], default="torus_rep")
    p.set_defaults(func=_cmd_mu)

    p = sub.add_parser(
        "destabilize", parents=[common], help="torus-level instability test"
    )
    p.set_defaults(func=_cmd_destabilize)

    p = sub.add_parser(
        "dispo-check", parents=[common], help="delta/slope/asymptotic verdict"
    )
    p.set_defaults(func=_cmd_dispo_check)

    p = sub.add_parser("deform", parents=[common], help="admissible deformation")
    p.set_defaults(func=_cmd_deform)

    p = sub.add_parser(
        "form-check", parents=[common], help="form-bundle semistability"
    )
    p.set_defaults(func=_cmd_form_check)

    p = sub.add_parser("dualize", parents=[common], help="dual coordinate flag")
    p.set_defaults(func=_cmd_dualize)

    p = sub.add_parser("bounds", parents=[common], help="characteristic bounds")
    p.add_argument("type", help='Dynkin type string, e.g. "A5" or "E8"')
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser(
        "enumerate-compositions",
        parents=[common],
        help="weighted compositions with sum i*d_i = s!",
    )
    p.add_argument("s", type=int)
    p.set_defaults(func=_cmd_enumerate_compositions)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        document, failed = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SemistabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed payload: {exc!r}", file=sys.stderr)
        return 2
    _emit(document, args.pretty)
    if failed and args.fail_on_unstable:
        return 1
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()

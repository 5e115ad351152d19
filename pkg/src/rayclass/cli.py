"""Command-line front end.

Subcommands: forms, wgroup, conjugates, classpoly, verify-generator,
verify-lemmas. Exit status 0 on success/pass, 1 on mathematical failure
(integrality, separation, lemma), 2 on usage error.

Big integers are serialized as decimal strings in JSON so output round-trips
losslessly; identical inputs produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, classpoly, quadforms, shimura
from .cmfield import validate_discriminant
from .errors import (
    IntegralityFailure,
    PrecisionExhausted,
    RayClassError,
    SeparationFailure,
)


def _poly_payload(p: classpoly.ClassPolynomial) -> dict:
    return {
        "discriminant": p.meta.discriminant,
        "level": p.meta.level,
        "exponent": p.meta.exponent,
        "power": p.meta.power,
        "degree": p.degree,
        "coefficients": [str(c) for c in p.coefficients],
        "precision_bits": p.meta.precision_bits,
        "max_rounding_residual": repr(p.meta.max_rounding_residual),
        "is_unit": classpoly.is_unit(p),
        "region": p.meta.region,
    }


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_forms(args) -> int:
    d = validate_discriminant(args.disc)
    forms = quadforms.reduced_forms(d)
    if args.json:
        _emit_json(
            {
                "discriminant": d.value,
                "class_number": len(forms),
                "forms": [list(q.as_tuple()) for q in forms],
            }
        )
    else:
        for q in forms:
            print(f"{q.a} {q.b} {q.c}")
    return 0


def _cmd_wgroup(args) -> int:
    d = validate_discriminant(args.disc)
    group = shimura.w_group(d, args.level)
    if args.json:
        _emit_json(
            {
                "discriminant": d.value,
                "level": args.level,
                "order": len(group),
                "matrices": [list(m.entries) for m in group],
            }
        )
    else:
        for m in group:
            print(" ".join(str(e) for e in m.entries))
    return 0


def _cmd_conjugates(args) -> int:
    d = validate_discriminant(args.disc)
    descs = shimura.conjugate_set(d, args.level)
    if args.json:
        _emit_json(
            {
                "discriminant": d.value,
                "level": args.level,
                "count": len(descs),
                "conjugates": [
                    {
                        "index": [c.index.r, c.index.s],
                        "tau": [c.tau.a, c.tau.b, c.tau.d],
                        "form": list(c.form.as_tuple()),
                        "w": list(c.w_elt.entries),
                    }
                    for c in descs
                ],
            }
        )
    else:
        n = args.level
        for c in descs:
            print(
                f"index ({c.index.r}/{n},{c.index.s}/{n}) "
                f"tau ({-c.tau.b}+sqrt({c.tau.d}))/{2 * c.tau.a} "
                f"form {c.form.a},{c.form.b},{c.form.c} "
                f"w {','.join(str(e) for e in c.w_elt.entries)}"
            )
    return 0


def _cache_key(args) -> str:
    return f"{args.disc}:{args.level}:{args.mode}:{args.power}"


def _load_cached(args):
    try:
        with open(args.cache) as fh:
            store = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    payload = store.get(_cache_key(args))
    if payload is None:
        return None
    # Cache hits re-verify the degree law before emission.
    d = validate_discriminant(args.disc)
    if payload.get("degree") != classpoly.expected_degree(d, args.level):
        return None
    return payload


def _store_cached(args, payload) -> None:
    store = {}
    try:
        with open(args.cache) as fh:
            store = json.load(fh)
    except (OSError, json.JSONDecodeError):
        pass
    store[_cache_key(args)] = payload
    with open(args.cache, "w") as fh:
        json.dump(store, fh, indent=2)


def _cmd_classpoly(args) -> int:
    validate_discriminant(args.disc)
    payload = None
    if args.cache:
        payload = _load_cached(args)
    if payload is None:
        p = classpoly.class_polynomial(
            args.disc,
            args.level,
            mode=args.mode,
            power=args.power,
            precision=args.precision,
        )
        payload = _poly_payload(p)
        if args.cache:
            _store_cached(args, payload)
    if args.json:
        _emit_json(payload)
    else:
        for c in payload["coefficients"]:
            print(c)
    return 0


def _cmd_verify_generator(args) -> int:
    report = classpoly.verify_generator(args.disc, args.level, args.precision)
    payload = {
        "discriminant": report.discriminant,
        "level": report.level,
        "count": report.count,
        "min_gap": repr(report.min_gap),
        "separation_threshold": repr(report.separation_threshold),
        "distinct": report.distinct,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(
            f"{report.count} conjugates, all distinct; "
            f"min gap {report.min_gap:.6g} "
            f"(threshold {report.separation_threshold:.6g})"
        )
    return 0


def _cmd_verify_lemmas(args) -> int:
    reports = []
    if args.lemma in (None, "3.1"):
        for part in ("i", "ii", "iii", "iv", "v", "vi"):
            reports.append(bounds.lemma31_check(part, n_max=args.nmax))
    for which in ("3.2", "3.3", "3.4"):
        if args.lemma in (None, which):
            reports.append(bounds.lemma_comparison_scan(args.disc, args.level, which))
    if args.json:
        _emit_json(
            [
                {
                    "lemma": r.lemma,
                    "domain": r.domain,
                    "worst_margin": repr(r.worst_margin),
                    "passed": r.passed,
                    "samples": r.samples,
                    "note": r.note,
                }
                for r in reports
            ]
        )
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            extra = f" ({r.note})" if r.note else ""
            print(
                f"Lemma {r.lemma} [{r.domain}] {status}: "
                f"worst margin {r.worst_margin:.6g}, {r.samples} samples{extra}"
            )
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rayclass",
        description="Ray class invariants and class polynomials over "
        "imaginary quadratic fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, level=True):
        p = sub.add_parser(name)
        p.add_argument("--disc", type=int, required=True)
        if level:
            p.add_argument("--level", type=int, required=True)
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)
        return p

    add("forms", _cmd_forms, level=False)
    add("wgroup", _cmd_wgroup)
    add("conjugates", _cmd_conjugates)

    p = add("classpoly", _cmd_classpoly)
    p.add_argument("--mode", choices=[classpoly.FULL, classpoly.REDUCED],
                   default=classpoly.REDUCED)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--cache", default=None)

    p = add("verify-generator", _cmd_verify_generator)
    p.add_argument("--precision", type=int, default=128)

    p = add("verify-lemmas", _cmd_verify_lemmas)
    p.add_argument("--lemma", choices=["3.1", "3.2", "3.3", "3.4"], default=None)
    p.add_argument("--nmax", type=int, default=10_000)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (IntegralityFailure, PrecisionExhausted, SeparationFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RayClassError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

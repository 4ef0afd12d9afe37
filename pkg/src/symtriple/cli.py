"""Command-line front end: build, verify and table.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import export
from .envelope import build_envelope, check_jacobi, classification_row, computed_row, killing, worker_count
from .models import build, make_label, z4_grading_for
from .sts import FAMILIES, check_axioms, grading_violation, is_isomorphism, shift

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_PARAMETERS = {
    "special": {"n": 2}, "symplectic": {"n": 2}, "quaternionic": {"n": 2},
    "orthogonal": {"p": 3, "q": 1}, "unitarian": {"p": 2, "q": 1},
}


class UsageError(Exception):
    pass


def _label_from_args(args):
    params = {k: getattr(args, k) for k in ("n", "p", "q") if getattr(args, k, None) is not None}
    try:
        return make_label(args.family, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def invariants(T, label) -> dict:
    env = build_envelope(T)
    rep = killing(env)
    return {
        "envelope_dim": env.algebra.dim,
        "inder_dim": env.inder_dim,
        "signature_g": rep.signature_g,
        "signature_inder": rep.signature_inder,
        "signature_odd": rep.signature_odd,
    }


def cmd_build(args) -> int:
    label = _label_from_args(args)
    T = build(label)
    rec = export.ExportRecord(label, T, z4_grading_for(label), args.seed, invariants(T, label))
    text = export.dumps(rec)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
        print(f"{label}: n={T.n} written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _load_target(target, args):
    if target.endswith(".json") or os.path.isfile(target):
        try:
            rec = export.read(target)
        except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {target}: {exc}") from exc
        return rec.label, rec.system, rec.grading, rec.seed
    args.family = target
    label = _label_from_args(args)
    return label, build(label), z4_grading_for(label), None


def cmd_verify(args) -> int:
    label, T, grading, file_seed = _load_target(args.target, args)
    seed = args.seed if args.seed is not None else (file_seed if file_seed is not None else 1)
    ok = True
    rep = check_axioms(T, mode=args.mode, seed=seed, count=args.count)
    print(f"{label} n={T.n}")
    print(f"  axioms: {rep.summary()}")
    ok &= rep.passed
    if grading is not None:
        bad = grading_violation(T, grading)
        print(f"  z4 grading: {'ok' if bad is None else f'FAIL at {bad}'}")
        ok &= bad is None
        if bad is None and rep.passed:
            iso = is_isomorphism(T, shift(T, -1), grading.sign_map(T.n))
            print(f"  sign map is an isomorphism onto the -1 shift: {'ok' if iso else 'FAIL'}")
            ok &= iso
    if rep.passed:
        try:
            env = build_envelope(T)
        except ValueError as exc:
            print(f"  envelope: FAIL ({exc})")
            return EXIT_FAIL
        jac = check_jacobi(env.algebra, mode="auto" if args.mode == "auto" else args.mode, seed=seed,
                           count=args.count)
        print(f"  envelope dim {env.algebra.dim}, jacobi: {jac.summary()}")
        ok &= jac.passed
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def _table_row(label):
    T = build(label)
    env = build_envelope(T)
    return computed_row(label, env, killing(env))


def cmd_table(args) -> int:
    labels = []
    for fam in FAMILIES:
        labels.append(make_label(fam, **TABLE_PARAMETERS.get(fam, {})))
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        rows = list(pool.map(_table_row, labels))
    head = f"{'label':<24}{'envelope':<16}{'inder':<22}{'dim g':>6}{'dim inder':>10}{'sign g':>8}{'sign inder':>11}{'odd':>5}  status"
    print(head)
    print("-" * len(head))
    all_ok = True
    for r in rows:
        e = r.expected
        status = "MATCH" if r.match else "MISMATCH"
        all_ok &= r.match
        print(f"{str(e.label):<24}{e.envelope_name:<16}{e.inder_name:<22}{r.envelope_dim:>6}{r.inder_dim:>10}"
              f"{r.signature_g:>8}{r.signature_inder:>11}{r.signature_odd:>5}  {status}")
        if not r.match:
            print(f"    expected dims {e.envelope_dim}/{e.inder_dim}, signatures {e.signature_g}/{e.signature_inder}/0")
    return EXIT_OK if all_ok else EXIT_FAIL


def _add_params(p):
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symtriple", description="Exact real symplectic triple systems.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a model and write its JSON record")
    b.add_argument("family", help="family name, e.g. f4, orthogonal, e6nonsplit")
    _add_params(b)
    b.add_argument("--out", help="output file (default: stdout)")
    b.add_argument("--seed", type=int, default=1)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="verify a JSON record or a freshly built model")
    v.add_argument("target", help="JSON file or family name")
    _add_params(v)
    v.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    v.add_argument("--seed", type=int)
    v.add_argument("--count", type=int, default=100_000, help="samples for sampled checks")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="classification table with computed invariants")
    t.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 when everything checked out, 1 on a mathematical mismatch,
2 on bad usage.  Results go to stdout; with ``--out`` (or the
SPLITVAR_OUT_DIR environment variable) they are also written to a file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .cyclotomic import is_prime
from .eigenbasis import build_eigensystem, diagram_commutes
from .export import cas_text, dumps_json, eigenbasis_json, eigenbasis_text
from .polyring import ideal_equal
from .reference_n3 import REFERENCE_TORIC_N3
from .splitkernel import (
    WeightedIdeal,
    build_theta,
    crosscheck_reference,
    generate,
    kernel_generators,
    verify_kernel,
    z_ring,
)
from .variety import CyclotomicField, PrimeField, find_point, random_theta_check
from .veronese import CATEGORY_SIZES_N3, classify_generators_n3, toric_ideal, w_ring

OUT_ENV = "SPLITVAR_OUT_DIR"


class UsageError(Exception):
    pass


def _need_prime(n: int) -> None:
    if n < 2:
        raise UsageError(f"--n must be >= 2, got {n}")
    if not is_prime(n):
        raise UsageError(f"--n must be prime, got {n}")


def _emit(args, stem: str, text: str) -> None:
    sys.stdout.write(text)
    out = args.out or os.environ.get(OUT_ENV)
    if out:
        ext = "json" if args.format == "json" else "txt"
        path = Path(out)
        path.mkdir(parents=True, exist_ok=True)
        (path / f"{stem}.{ext}").write_text(text)


def cmd_generate(args) -> int:
    _need_prime(args.n)
    ideal, ts = generate(args.n)
    report = verify_kernel(ideal, ts)
    if args.format == "json":
        data = ideal.to_json()
        data["verified"] = report.passed
        text = dumps_json(data)
    else:
        text = cas_text(ideal.generators, z_ring(args.n), f"kernel of theta, n = {args.n}")
    _emit(args, f"generators-n{args.n}", text)
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    if args.input:
        try:
            ideal = WeightedIdeal.from_json(json.loads(Path(args.input).read_text()))
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
        _need_prime(ideal.n)
        ts = build_theta(ideal.n)
    else:
        _need_prime(args.n)
        ideal, ts = generate(args.n)
    report = verify_kernel(ideal, ts)
    if args.format == "json":
        text = dumps_json({"n": ideal.n, **report.to_json()})
    else:
        lines = [f"# theta-residuals, n = {ideal.n}"]
        lines += [f"{g.format()}  ->  {r.format()}" for g, r in zip(report.generators, report.residuals)]
        lines.append(f"# {'PASS' if report.passed else 'FAIL'}: {len(report.failures)} nonzero residuals")
        text = "\n".join(lines) + "\n"
    _emit(args, f"verify-n{ideal.n}", text)
    return 0 if report.passed else 1


def cmd_eigenbasis(args) -> int:
    _need_prime(args.n)
    es = build_eigensystem(args.n)
    ok = diagram_commutes(es)
    if args.format == "json":
        data = eigenbasis_json(es)
        data["diagram_commutes"] = ok
        text = dumps_json(data)
    else:
        text = eigenbasis_text(es)
    _emit(args, f"eigenbasis-n{args.n}", text)
    return 0 if ok else 1


def toric_summary(n: int) -> dict:
    gens = toric_ideal(n)
    data = {
        "n": n,
        "count": len(gens),
        "generators": [g.format() for g in gens],
        "ring": w_ring(n).to_json(),
        "terms": [g.to_json()["terms"] for g in gens],
    }
    ok = True
    if n == 3:
        cats = classify_generators_n3(gens)
        counts = {c: 0 for c in CATEGORY_SIZES_N3}
        for c in cats.values():
            if c is not None:
                counts[c] += 1
        ref = [w_ring(3).parse(s) for s in REFERENCE_TORIC_N3]
        equal = ideal_equal(gens, ref)
        data["categories"] = {str(k): v for k, v in counts.items()}
        data["category_of"] = [cats[g] for g in gens]
        data["reference_equal"] = equal
        ok = equal and counts == CATEGORY_SIZES_N3 and len(gens) == len(ref)
    data["verified"] = ok
    return data


def cmd_toric(args) -> int:
    if args.n < 2:
        raise UsageError(f"--n must be >= 2, got {args.n}")
    data = toric_summary(args.n)
    if args.format == "json":
        text = dumps_json(data)
    else:
        text = cas_text(toric_ideal(args.n), w_ring(args.n), f"kernel of pi, n = {args.n}")
    _emit(args, f"toric-n{args.n}", text)
    return 0 if data["verified"] else 1


def cmd_crosscheck(args) -> int:
    if args.n != 3:
        raise UsageError("crosscheck is only defined for --n 3")
    ideal, ts = generate(3)
    reference = texts = None
    if args.reference:
        try:
            texts = [ln.strip() for ln in Path(args.reference).read_text().splitlines()
                     if ln.strip() and not ln.lstrip().startswith("#")]
            reference = [z_ring(3).parse(t) for t in texts]
        except (OSError, ValueError, SyntaxError) as exc:
            raise UsageError(f"cannot read {args.reference}: {exc}") from None
    report = crosscheck_reference(ts, ideal, reference, texts)
    data = report.to_json()
    ok = report.passed and not report.flagged
    if args.format == "json":
        text = dumps_json(data)
    else:
        lines = [f"# reference items: {data['items']} ({data['distinct']} distinct up to units)"]
        for e in data["entries"]:
            tag = "ok" if e["theta_zero"] and e["member"] else "FLAGGED"
            dup = f"  (same as {e['duplicate_of']})" if e["duplicate_of"] else ""
            lines.append(f"{e['index']:3d} {tag:7s} {e['text']}{dup}")
        lines.append(f"# theta-dirty: {data['theta_dirty'] or 'none'}")
        lines.append(f"# computed generators outside the reference ideal: "
                     f"{data['computed_not_in_reference'] or 'none'}")
        lines.append(f"# {'PASS' if ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    _emit(args, "crosscheck-n3", text)
    return 0 if ok else 1


def _field(args):
    try:
        return CyclotomicField(args.n) if args.q is None else PrimeField(args.q, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_find_point(args) -> int:
    _need_prime(args.n)
    q = 7 if args.q is None else args.q
    _field(argparse.Namespace(n=args.n, q=q))
    if args.a % q == 0 or args.b % q == 0:
        raise UsageError("--a and --b must be nonzero mod q")
    ideal = kernel_generators(args.n, toric_ideal(args.n))
    res = find_point(ideal, args.a, args.b, q, budget=args.budget, seed=args.seed)
    if args.format == "json":
        text = dumps_json(res.to_json())
    else:
        text = (f"# F_{q}, a = {res.a}, b = {res.b}, method {res.method}, checked {res.checked}\n"
                + (f"z = {res.point}\n" if res.found else "no point found\n"))
    _emit(args, f"point-q{q}-a{res.a}-b{res.b}", text)
    return 0 if res.found else 1


def cmd_eval(args) -> int:
    _need_prime(args.n)
    fld = _field(args)
    ideal, ts = generate(args.n)
    failures = random_theta_check(ideal, fld, draws=args.budget, seed=args.seed, theta_system=ts)
    data = {
        "field": fld.to_json(),
        "draws": args.budget,
        "generators": len(ideal),
        "seed": args.seed,
        "failures": len(failures),
        "passed": not failures,
    }
    text = dumps_json(data) if args.format == "json" else (
        f"# {fld.name}: {args.budget} draws x {len(ideal)} generators, "
        f"{len(failures)} failures\n"
    )
    _emit(args, f"eval-n{args.n}-{'q' + str(args.q) if args.q else 'exact'}", text)
    return 0 if not failures else 1


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "eigenbasis": cmd_eigenbasis,
    "toric": cmd_toric,
    "crosscheck": cmd_crosscheck,
    "find-point": cmd_find_point,
    "eval": cmd_eval,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, default=3)
        p.add_argument("--format", choices=("json", "cas-text"), default="json")
        p.add_argument("--out", default=None, help="directory for the output file")
        p.add_argument("--seed", type=int, default=0)
        if name in ("find-point", "eval"):
            p.add_argument("--q", type=int, default=None)
            p.add_argument("--budget", type=int, default=1000 if name == "find-point" else 200)
        if name == "find-point":
            p.add_argument("--a", type=int, default=1)
            p.add_argument("--b", type=int, default=1)
        if name == "verify":
            p.add_argument("--input", default=None, help="generators JSON written by generate")
        if name == "crosscheck":
            p.add_argument("--reference", default=None, help="one generator per line")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"splitvar: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

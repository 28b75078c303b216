"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
Relative output paths are resolved against ``$BEAUVILLE_OUTPUT_DIR`` when
it is set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .arith import AdmissibilityError, admissible_params, check_admissible, euler_phi, lcm, scan_primes
from .characters import NumericalQualityError, character_table
from .field import FieldContext
from .fixtures import load_fixtures, verify_example19
from .pgl2 import ClassKey, class_census, group
from .surfaces import (
    BeauvilleError,
    GaloisActionError,
    build_all_surfaces,
    galois_orbit_table,
    verify_beauville,
)
from .triples import (
    GeneratingTriple,
    TripleError,
    count_triples_brute,
    enumerate_triples_brute,
    enumerate_triples_parametric,
    orbit_representatives,
)

OUTPUT_ENV = "BEAUVILLE_OUTPUT_DIR"

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _out_path(path: str) -> Path:
    path = Path(path)
    base = os.environ.get(OUTPUT_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _prime(p: int) -> int:
    FieldContext(p)
    return p


def _table(rows, header) -> str:
    rows = [[str(x) for x in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(x.ljust(w) for x, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_census(args) -> int:
    p = _prime(args.p)
    census = class_census(p)
    header = ["key", "kind", "size", "order", "representative"]
    rows = [[str(c.key), c.kind, c.size, c.order, c.representative.literal()] for c in census]
    if args.format == "json":
        sys.stdout.write(_dump({
            "p": p, "group_order": group(p).order, "num_classes": len(census),
            "classes": [dict(zip(header, r)) for r in rows],
        }))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(f"PGL2({p}): |G| = {group(p).order}, {len(census)} classes\n")
        sys.stdout.write(_table(rows, header))
    return EXIT_OK


def _parse_type(text: str) -> tuple[int, int, int]:
    try:
        t = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"bad type {text!r}; expected l,m,n") from None
    if len(t) != 3 or min(t) < 1:
        raise InputError(f"bad type {text!r}; expected three positive integers")
    return t


def cmd_triples(args) -> int:
    p = _prime(args.p)
    t = _parse_type(args.type)
    key = ClassKey.parse(args.key) if args.key else None
    if args.method == "parametric":
        if t[:2] != (2, 3) or key is None:
            raise InputError("the parametric method needs type 2,3,k and --key")
        triples = enumerate_triples_parametric(p, t[2], key)
    elif args.count_only:
        n = count_triples_brute(p, t, key, threads=args.threads)
        sys.stdout.write(_dump({"p": p, "type": list(t), "orbit_key": args.key, "count": n})
                         if args.format == "json" else f"{n}\n")
        return EXIT_OK
    else:
        triples = enumerate_triples_brute(p, t, key, threads=args.threads)
    if args.format == "json":
        sys.stdout.write(_dump([x.to_json() for x in triples]))
    else:
        by_key: dict[str, int] = {}
        for x in triples:
            by_key[str(x.orbit_key)] = by_key.get(str(x.orbit_key), 0) + 1
        sys.stdout.write(f"{len(triples)} triples of type {t} in PGL2({p})\n")
        sys.stdout.write(_table(sorted(by_key.items()), ["orbit_key", "count"]))
    return EXIT_OK


def cmd_chartab(args) -> int:
    p = _prime(args.p)
    table = character_table(p, max_p=args.max_p)
    if args.format == "json":
        sys.stdout.write(_dump({
            "meta": table.metadata(),
            "classes": [str(k) for k in table.keys],
            "degrees": table.degrees,
            "values": [[round(float(x), 6) + 0.0 for x in row] for row in table.values],
        }))
    else:
        sys.stdout.write(table.to_csv())
    return EXIT_OK


def _load_pair(path):
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list) or len(data) != 2:
        raise InputError(f"{path}: expected a JSON list of two triples")
    return [GeneratingTriple.from_json(x) for x in data]


def cmd_beauville(args) -> int:
    if args.input:
        first, second = _load_pair(args.input)
    else:
        if None in (args.p, args.k, args.l):
            raise InputError("need --input or all of --p, --k, --l")
        p = _prime(args.p)
        firsts = orbit_representatives(p, (2, 3, args.k))
        seconds = orbit_representatives(p, (2, 4, args.l))
        if not (1 <= args.i <= len(firsts) and 1 <= args.j <= len(seconds)):
            raise InputError(f"--i must lie in 1..{len(firsts)} and --j in 1..{len(seconds)}")
        first, second = firsts[args.i - 1], seconds[args.j - 1]
    s = verify_beauville(first, second)
    if args.format == "json":
        sys.stdout.write(_dump({
            "valid": True, "bitype": list(s.bitype),
            "first": first.to_json(), "second": second.to_json(),
            "sigma_keys_1": sorted(map(str, s.sigma_keys_1)),
            "sigma_keys_2": sorted(map(str, s.sigma_keys_2)),
        }))
    else:
        sys.stdout.write(f"Beauville structure of bitype {s.bitype}: conditions (1)-(3) hold\n")
    return EXIT_OK


def _summary(p, k, l, records, table) -> str:
    m = lcm(k, l)
    lines = [
        f"PGL2({p}), bitype (2,3,{k};2,4,{l}), m = {m}",
        f"surfaces: {len(records)} (phi(m)/4 = {euler_phi(m) // 4})",
        f"genera: {records[0].genus_1}, {records[0].genus_2}" if records else "genera: -",
        f"moduli field degree: {records[0].moduli_degree}" if records else "",
        f"Galois action: {'regular' if table.regular else 'NOT regular'}, kernel {table.kernel}",
    ]
    rows = [[r.i, r.j, str(r.orbit_key_1), str(r.orbit_key_2)] for r in records]
    return "\n".join(lines) + "\n" + _table(rows, ["i", "j", "key_1", "key_2"])


def cmd_pipeline(args) -> int:
    p, k, l = args.p, args.k, args.l
    try:
        params = check_admissible(p, k, l)
    except AdmissibilityError as exc:
        raise InputError(f"inadmissible (p,k,l)=({p},{k},{l}): {exc}") from exc
    records = build_all_surfaces(p, k, l)
    table = galois_orbit_table(p, k, l, records)
    out = _out_path(args.output or f"pipeline_p{p}_k{k}_l{l}.json")
    payload = {
        "p": p, "k": k, "l": l, "m": params.m,
        "congruence": {"modulus": params.combined_modulus, "residue": params.combined_residue},
        "records": [r.to_json() for r in records],
        "galois": table.to_json(),
    }
    out.write_text(_dump(payload))
    summary = _summary(p, k, l, records, table)
    out.with_suffix(".txt").write_text(summary)
    sys.stdout.write(summary)
    sys.stdout.write(f"wrote {out}\n")
    return EXIT_OK


def cmd_example19(args) -> int:
    report = verify_example19(load_fixtures(args.fixtures))
    for c in report.checks:
        sys.stdout.write(f"[{'PASS' if c.ok else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "") + "\n")
    if args.emit and report.records:
        _out_path(args.emit).write_text(_dump([r.to_json() for r in report.records]))
    if not report.ok:
        sys.stdout.write(f"{len(report.failures())} check(s) failed\n")
        return EXIT_FAIL
    g = report.records[0]
    sys.stdout.write(f"{len(report.records)} surfaces verified, genera ({g.genus_1}, {g.genus_2})\n")
    return EXIT_OK


def cmd_scan_primes(args) -> int:
    try:
        params = admissible_params(args.k, args.l)
    except AdmissibilityError as exc:
        raise InputError(str(exc)) from exc
    primes = scan_primes(params, args.limit)
    if args.format == "json":
        sys.stdout.write(_dump({
            "k": args.k, "l": args.l, "modulus": params.combined_modulus,
            "residue": params.combined_residue, "limit": args.limit, "primes": primes,
        }))
    else:
        sys.stdout.write(f"p = {params.combined_residue} mod {params.combined_modulus}\n")
        sys.stdout.write(" ".join(map(str, primes)) + "\n")
    return EXIT_OK


def cmd_galois(args) -> int:
    try:
        check_admissible(args.p, args.k, args.l)
    except AdmissibilityError as exc:
        raise InputError(str(exc)) from exc
    table = galois_orbit_table(args.p, args.k, args.l)
    if args.format == "json":
        sys.stdout.write(_dump(table.to_json()))
    else:
        rows = [[g, " ".join(map(str, perm))] for g, perm in sorted(table.action.items())]
        sys.stdout.write(f"(Z/{table.m})* acting on {len(table.records)} surfaces; "
                         f"kernel {table.kernel}; regular: {table.regular}\n")
        sys.stdout.write(_table(rows, ["gamma", "image of surfaces 0.."]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beauville", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats=("table", "json", "csv"), **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.set_defaults(func=func)
        return sp

    sp = add("census", cmd_census, help="conjugacy classes of PGL2(p)")
    sp.add_argument("--p", type=int, required=True)

    sp = add("triples", cmd_triples, formats=("table", "json"), help="enumerate generating triples")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--type", required=True, help="l,m,n")
    sp.add_argument("--key", help="class key of c, e.g. j=14")
    sp.add_argument("--method", choices=("brute", "parametric"), default="brute")
    sp.add_argument("--count-only", action="store_true")

    sp = add("chartab", cmd_chartab, formats=("csv", "json"), help="character table")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-p", type=int, default=101)

    sp = add("beauville", cmd_beauville, formats=("table", "json"), help="verify one pair of triples")
    sp.add_argument("--input", help="JSON list with two triple objects")
    sp.add_argument("--p", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--l", type=int)
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--j", type=int, default=1)

    sp = add("pipeline", cmd_pipeline, formats=("table",), help="all surfaces for (p, k, l)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--output")

    sp = add("example19", cmd_example19, formats=("table",), help="replay the p=19 fixtures")
    sp.add_argument("--fixtures", help="alternative fixture file")
    sp.add_argument("--emit", help="write the surface records as JSON")

    sp = add("scan-primes", cmd_scan_primes, formats=("table", "json"), help="primes in the admissible class")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--limit", type=int, default=10_000)

    sp = add("galois", cmd_galois, formats=("table", "json"), help="Galois action on surfaces")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BeauvilleError, GaloisActionError, TripleError, NumericalQualityError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, KeyError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

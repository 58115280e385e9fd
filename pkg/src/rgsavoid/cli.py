"""Command-line entry point: ``rgsavoid <command> [options]``.

Exit status: 0 when every check passes, 1 on a verification mismatch,
2 on bad usage or unparsable input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijections as bij
from . import catalog
from . import classifier as cls
from .avoid import count_avoiders, iter_avoiders
from .compositions import format_composition, search_simcomp, xi
from .rgs import InvalidRgs, as_rgs

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_patterns(values: list[str] | None) -> list[str]:
    """Pattern lists: "1212,111" or "1,2,10+1,1,1" (use + when symbols exceed 9)."""
    out = []
    for v in values or []:
        v = v.strip()
        if not v:
            continue
        parts = v.split("+") if "+" in v else (v.split() if " " in v else v.split(","))
        for p in parts:
            try:
                out.append(str(as_rgs(p)))
            except InvalidRgs as exc:
                raise UsageError(str(exc)) from None
    return out


def _emit(args, payload: dict, text: str, rows: list | None = None, header=None):
    if args.format == "json":
        out = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        w.writerows(rows or [])
        out = buf.getvalue()
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# --- commands ---------------------------------------------------------------------------

def cmd_count(args) -> int:
    pats = parse_patterns(args.patterns)
    counts = count_avoiders(pats, args.max_n)
    rows = [(n, c) for n, c in enumerate(counts)]
    text = f"patterns: {','.join(pats) or '(none)'}\n" + "\n".join(f"{n}\t{c}" for n, c in rows)
    _emit(args, {"patterns": pats, "max_n": args.max_n, "counts": list(counts)},
          text, rows, ("n", "count"))
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        members = cls.generate_pairs(args.family, k=args.k, size=args.size)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fixture = None
    if args.fixture:
        try:
            fixture = cls.load_fixture(args.fixture)
        except cls.UnknownFixture:
            raise UsageError(f"unknown fixture {args.fixture!r}; known: {', '.join(cls.list_fixtures())}") from None
    notion = args.notion or (fixture.notion if fixture else "wilf")
    report = cls.classify(members, notion, args.max_n, args.workers)
    if fixture is not None:
        cls.verify_table(report, fixture, members)
    payload = report.to_json()
    payload["family"] = args.family
    if fixture is not None:
        payload["fixture"] = args.fixture
    lines = [f"{len(report.classes)} classes ({len(report.singletons)} singletons), "
             f"notion={notion}, max_n={args.max_n}"]
    for c in report.classes:
        sep = c.first_separating_n_vs_next
        lines.append(" ".join(cls.member_label(m) for m in c.members)
                     + (f"    [separates from next at n={sep}]" if sep is not None else ""))
    if fixture is not None:
        lines.append(f"fixture {args.fixture}: " + ("match" if not report.diff else f"{len(report.diff)} differences"))
        lines.extend(json.dumps(d) for d in report.diff)
    rows = [(i, cls.member_label(m)) for i, c in enumerate(report.classes) for m in c.members]
    _emit(args, payload, "\n".join(lines), rows, ("class", "member"))
    return EXIT_MISMATCH if report.diff else EXIT_OK


def cmd_verify_gf(args) -> int:
    if args.all:
        ids = sorted(catalog.load_catalog())
    elif args.entry:
        ids = args.entry
    else:
        raise UsageError("verify-gf needs --entry or --all")
    results = []
    for i in ids:
        try:
            results.append(catalog.verify_entry(i, args.order))
        except catalog.UnknownEntry:
            raise UsageError(f"unknown catalog entry {i!r}") from None
    ok = all(r.passed for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.id:32s} {r.anchor}" for r in results]
    for r in results:
        for m in r.mismatches:
            lines.append(f"      {r.id}: n={m['n']} formula={m['expected']} counted={m['counted']} ({m['oracle']})")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} entries pass at order {args.order}")
    rows = [(r.id, "pass" if r.passed else "fail", r.anchor) for r in results]
    _emit(args, {"order": args.order, "passed": ok, "entries": [r.to_json() for r in results]},
          "\n".join(lines), rows, ("id", "status", "anchor"))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bijections(args) -> int:
    n = args.max_n
    reports = []
    reports += bij.verify_f_bijection(n)
    taus = [t for k in range(2, 6) for t in iter_avoiders(["122"], k) if t.num_blocks >= 2]
    reports += [bij.verify_lemma_122(t, n) for t in taus]
    reports += bij.verify_composition_bijections(min(5, n), n)
    reports += bij.verify_block_maps(n)
    ok = all(r.is_bijective for r in reports)
    bad = [r for r in reports if not r.is_bijective]
    lines = [f"{len(reports)} reports, {len(bad)} failures (max_n={n})"]
    lines += [f"FAIL {r.name} n={r.n}: {r.counterexample}" for r in bad]
    rows = [(r.name, r.n, r.domain_count, r.codomain_count, r.is_bijective) for r in reports]
    _emit(args, {"max_n": n, "passed": ok, "reports": [r.to_json() for r in reports]},
          "\n".join(lines), rows, ("name", "n", "domain", "codomain", "bijective"))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bound_3k(args) -> int:
    ks = args.k if isinstance(args.k, list) else [args.k]
    rows = []
    for k in ks:
        if k is None or k < 3:
            raise UsageError("bound-3k needs --k >= 3")
        observed, bound = cls.check_3k_bound(k, args.max_n, args.workers)
        rows.append((k, observed, bound, observed == bound))
    ok = all(r[3] for r in rows)
    text = "\n".join(f"k={k}: observed {o} classes, 1+xi_k = {b}  {'ok' if e else 'MISMATCH'}"
                     for k, o, b, e in rows)
    _emit(args, {"max_n": args.max_n, "rows": [dict(k=k, observed=o, bound=b, equal=e) for k, o, b, e in rows]},
          text, rows, ("k", "observed", "bound", "equal"))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_search_simcomp(args) -> int:
    ks = args.k if isinstance(args.k, list) else [args.k]
    rows = []
    found = []
    for k in ks:
        if k is None or k < 1:
            raise UsageError("search-simcomp needs --k >= 1")
        coll = search_simcomp(k, args.max_n)
        rows.append((k, xi(k), len(coll)))
        found += [(k, format_composition(a), format_composition(b)) for a, b in coll]
    text = "\n".join(f"k={k}: {x} two-free partitions, {c} collisions up to n={args.max_n}"
                     for k, x, c in rows)
    if found:
        text += "\n" + "\n".join(f"  k={k}: {a} ~ {b}" for k, a, b in found)
    _emit(args, {"max_n": args.max_n,
                 "rows": [dict(k=k, two_free=x, collisions=c) for k, x, c in rows],
                 "collisions": [dict(k=k, a=a, b=b) for k, a, b in found]},
          text, rows, ("k", "two_free", "collisions"))
    # none are expected, so any collision is reported as a mismatch
    return EXIT_MISMATCH if found else EXIT_OK


# --- parser --------------------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rgsavoid", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--workers", type=_positive, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="count avoiders for n = 0..max_n")
    c.add_argument("--patterns", action="append", help="e.g. 1212,111 (repeatable)")
    c.add_argument("--max-n", type=_positive, default=10)
    c.set_defaults(fn=cmd_count)

    c = sub.add_parser("classify", parents=[common], help="group a pattern family into classes")
    c.add_argument("--family", choices=cls.FAMILIES, required=True)
    c.add_argument("--k", type=_positive)
    c.add_argument("--size", type=_positive)
    c.add_argument("--notion", choices=cls.NOTIONS)
    c.add_argument("--max-n", type=_positive, default=12)
    c.add_argument("--fixture")
    c.set_defaults(fn=cmd_classify)

    c = sub.add_parser("verify-gf", parents=[common], help="check catalog formulas against counts")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--entry", action="append")
    g.add_argument("--all", action="store_true")
    c.add_argument("--order", type=_positive, default=12)
    c.set_defaults(fn=cmd_verify_gf)

    c = sub.add_parser("bijections", parents=[common], help="exhaustive bijection checks")
    c.add_argument("--max-n", type=_positive, default=9)
    c.set_defaults(fn=cmd_bijections)

    c = sub.add_parser("bound-3k", parents=[common], help="count (3,k) classes against 1 + xi_k")
    c.add_argument("--k", type=_positive, nargs="+", required=True)
    c.add_argument("--max-n", type=_positive, default=16)
    c.set_defaults(fn=cmd_bound_3k)

    c = sub.add_parser("search-simcomp", parents=[common], help="look for equal dominator counts among 2-free partitions")
    c.add_argument("--k", type=_positive, nargs="+", required=True)
    c.add_argument("--max-n", type=_positive, default=14)
    c.set_defaults(fn=cmd_search_simcomp)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"rgsavoid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

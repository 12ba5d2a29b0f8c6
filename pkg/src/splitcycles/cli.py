"""Command-line front end.

Subcommands: build, genus, search, verify-cycle, verify-families, bound.
Exit codes: 0 success, 1 validation error, 2 internal inconsistency
(fast path and cut oracle disagree).
"""
from __future__ import annotations

import argparse
import sys
import time

from .backend import get_backend
from .errors import SplitCyclesError
from .families import verify_families
from .map_core import read_rotmap, write_rotmap, format_rotmap
from .report import SearchReport, render_text, render_csv, render_json
from .search import (SearchOptions, enumerate_cycles, verify_cycle,
                     no_interior_bound)
from .voltage import (gross_tucker_base, bundled_base, read_voltmap, derive,
                      check_translation_automorphism)


def _load_base(args):
    if args.gross_tucker is not None:
        return gross_tucker_base(args.gross_tucker), \
            f"gross-tucker-{args.gross_tucker}"
    if args.bundled:
        return bundled_base(args.bundled), f"bundled-{args.bundled}"
    return read_voltmap(args.voltmap), args.voltmap


def cmd_build(args) -> int:
    base, label = _load_base(args)
    m = derive(base)
    summary = (f"{label}: V={m.vertex_count} E={m.edge_count} "
               f"F={m.face_count} genus={m.genus()}")
    if args.out:
        write_rotmap(m, args.out)
        print(summary)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(format_rotmap(m))
        print(summary, file=sys.stderr)
    return 0


def cmd_genus(args) -> int:
    m = read_rotmap(args.rotmap)
    print(f"V={m.vertex_count} E={m.edge_count} F={m.face_count} "
          f"genus={m.genus()}")
    return 0


def _search_options(args) -> SearchOptions:
    return SearchOptions(
        max_length=args.max_length or 0,
        use_test4=not args.no_test4,
        use_remark2=not args.no_remark2,
        seam_remark2=(args.seam_remark2 == "on"),
        assume_transitive=False,
        workers=args.workers,
    )


def cmd_search(args) -> int:
    m = read_rotmap(args.rotmap)
    opts = _search_options(args)
    transitive = check_translation_automorphism(m)
    if args.assume_transitive == "on" and not transitive:
        print("error: translation automorphism check failed", file=sys.stderr)
        return 1
    opts.assume_transitive = transitive and args.assume_transitive != "off"
    t0 = time.perf_counter()
    table = enumerate_cycles(m, root=args.root, options=opts)
    dt = (time.perf_counter() - t0) * 1000.0
    rep = SearchReport(table=table, options=opts, embedding=args.rotmap,
                       backend=get_backend(opts.backend).name,
                       wall_time_ms=dt)
    _emit(rep, args)
    return 0


def _emit(rep, args):
    if args.format == "json":
        text = render_json(rep)
    elif args.format == "csv":
        text = render_csv(rep)
    else:
        text = render_text(rep)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify_cycle(args) -> int:
    m = read_rotmap(args.rotmap)
    cycle = [int(x) for x in args.cycle.replace(",", " ").split()]
    opts = SearchOptions(seam_remark2=(args.seam_remark2 == "on"))
    fast, oracle = verify_cycle(m, cycle, opts)

    def describe(v):
        if not v.separating:
            return "not separating"
        label = "separating" if v.contractible else "splitting"
        extra = " (contractible)" if v.contractible else ""
        return f"{label}, type {v.type}{extra}"

    print(f"oracle: {describe(oracle)}")
    if fast is None:
        print("fast path: cycle not reachable by the pruned search "
              "(facial-wedge corner)")
        return 0
    print(f"fast path: {describe(fast)}")
    agree = fast.separating == oracle.separating and \
        (not fast.separating or fast.type == oracle.type)
    if not agree:
        print("error: fast path and oracle disagree", file=sys.stderr)
        return 2
    return 0


def cmd_verify_families(args) -> int:
    rep = verify_families(args.s, include_translates=not args.no_translates)
    print(f"s={rep.s} n={rep.n} genus={rep.genus} "
          f"irreducible={rep.irreducible}")
    print(f"distinct family cycles: {rep.distinct_members} "
          f"(expected {rep.expected_distinct})")
    bad = 0
    for mr in rep.members + rep.type_j_members:
        fc = mr.cycle
        tag = fc.kind
        if fc.i is not None:
            tag += f"[i={fc.i},k={fc.k}]"
        if fc.j is not None:
            tag += f"[j={fc.j}]"
        status = "ok" if mr.verified else "FAIL"
        if not mr.verified:
            bad += 1
        if args.verbose or not mr.verified:
            print(f"  {tag:<28} type={mr.found_type} "
                  f"(claimed {fc.claimed_type}) {status}")
    print(f"members verified: {len(rep.members) + len(rep.type_j_members) - bad}"
          f"/{len(rep.members) + len(rep.type_j_members)}")
    return 0 if rep.all_verified else 1


def cmd_bound(args) -> int:
    print(no_interior_bound(args.g_side))
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="splitcycles",
        description="Splitting cycles on triangular embeddings of "
                    "complete graphs")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="derive an embedding from a voltage "
                                     "base and emit it in rotmap format")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--gross-tucker", type=int, metavar="S",
                     help="family base for K_{12S+7}")
    src.add_argument("--bundled", choices=("A", "B", "C"),
                     help="one of the bundled K_19 bases")
    src.add_argument("--voltmap", metavar="PATH", help="voltmap file")
    b.add_argument("--out", metavar="PATH", help="output rotmap path")
    b.set_defaults(func=cmd_build)

    g = sub.add_parser("genus", help="print V/E/F/genus of a rotmap")
    g.add_argument("rotmap")
    g.set_defaults(func=cmd_genus)

    s = sub.add_parser("search", help="enumerate splitting cycles through "
                                      "a root vertex")
    s.add_argument("rotmap")
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--assume-transitive", choices=("auto", "on", "off"),
                   default="auto")
    s.add_argument("--max-length", type=int, default=0, metavar="L")
    s.add_argument("--seam-remark2", choices=("on", "off"), default="on")
    s.add_argument("--no-test4", action="store_true")
    s.add_argument("--no-remark2", action="store_true")
    s.add_argument("--workers", type=int, default=1, metavar="K")
    s.add_argument("--format", choices=("text", "csv", "json"),
                   default="text")
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-cycle", help="check one cycle with both the "
                                            "fast path and the cut oracle")
    v.add_argument("rotmap")
    v.add_argument("cycle", help="vertex list, e.g. '0 5 2 35 6 1 4 21'")
    v.add_argument("--seam-remark2", choices=("on", "off"), default="on")
    v.set_defaults(func=cmd_verify_cycle)

    f = sub.add_parser("verify-families",
                       help="verify the explicit splitting-cycle families "
                            "on the K_{12s+7} embedding")
    f.add_argument("s", type=int)
    f.add_argument("--no-translates", action="store_true",
                   help="check k=0 representatives only")
    f.add_argument("--verbose", action="store_true")
    f.set_defaults(func=cmd_verify_families)

    d = sub.add_parser("bound", help="minimum boundary length of an "
                                     "interior-free side of given genus")
    d.add_argument("g_side", type=int)
    d.set_defaults(func=cmd_bound)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except SplitCyclesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

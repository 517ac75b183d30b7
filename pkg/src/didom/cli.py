"""Command-line entry point.

Subcommands: ``invariants``, ``product``, ``family``, ``verify``,
``search-acyclic``.  Graph inputs are either compact family-spec strings or
paths to arc-list files; all randomness is surfaced as ``--seed``.  Output
is byte-stable for fixed inputs and seeds (timings are opt-in via
``--timings``).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from didom import families, verify
from didom.core import Digraph, read_arclist, write_arclist
from didom.errors import ArcListParseError, SolveTimeout
from didom.products import cartesian_product, direct_product
from didom.solvers import DEFAULT_TIMEOUT_MS, compute_invariants


def _load_graph(spec: str) -> tuple[str, Digraph]:
    """Resolve a positional graph argument: existing file path wins,
    otherwise the string is parsed as a family spec."""
    if os.path.exists(spec):
        return spec, read_arclist(spec)
    return spec, families.build_family(spec)


def _cmd_invariants(args) -> int:
    if args.family is not None:
        label = args.family
        d = families.build_family(args.family)
    else:
        if args.input is None:
            print("invariants: provide an arc-list file or --family SPEC", file=sys.stderr)
            return 2
        label, d = args.input, read_arclist(args.input)
    if d.n == 0:
        print("invariants: graph has no vertices", file=sys.stderr)
        return 2
    report = compute_invariants(d, digraph_id=label, timeout_ms=args.timeout_ms)
    print(report.to_json(include_timings=args.timings))
    return 0


def _cmd_product(args) -> int:
    _, lhs = _load_graph(args.lhs)
    _, rhs = _load_graph(args.rhs)
    build = cartesian_product if args.op == "cart" else direct_product
    prod, _ = build(lhs, rhs)
    if args.out:
        write_arclist(prod, args.out)
        print(f"wrote {prod.n} vertices, {prod.arc_count} arcs to {args.out}")
    else:
        sys.stdout.write(
            f"# {args.op} product of {args.lhs} and {args.rhs}\n"
        )
        write_arclist(prod, sys.stdout)
    return 0


def _cmd_family(args) -> int:
    d = families.build_family(args.spec)
    if args.out:
        write_arclist(d, args.out)
        print(f"wrote {d.n} vertices, {d.arc_count} arcs to {args.out}")
    else:
        write_arclist(d, sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="ascii") as fh:
            config = verify.parse_suite_config(fh.read())
    else:
        config = verify.default_suite_config()
    if args.seed is not None:
        config.seed = args.seed
    if args.timeout_ms is not None:
        config.timeout_ms = args.timeout_ms
    if args.jobs is not None:
        config.jobs = args.jobs
    if args.out is not None:
        config.out = args.out
    tasks = verify.build_tasks(config)
    result = verify.run_suite(
        tasks, jobs=config.jobs, out_path=config.out, include_timings=True
    )
    print(result.summary())
    if config.out:
        print(f"records appended to {config.out}")
    return 0 if result.ok else 1


def _cmd_search_acyclic(args) -> int:
    sink = open(args.out, "a", encoding="ascii") if args.out else None
    holds = fails = 0
    try:
        for record in verify.search_acyclic_problem(
            max_n=args.max_n,
            budget=args.budget,
            seed=args.seed,
            timeout_ms=args.timeout_ms,
        ):
            line = record.to_json(include_timings=args.timings)
            if sink is not None:
                sink.write(line + "\n")
            else:
                print(line)
            if record.verdict == verify.FAILS:
                fails += 1
                print(
                    f"packing < domination on {record.instance}: "
                    f"{record.lhs} < {record.rhs}",
                    file=sys.stderr,
                )
            else:
                holds += 1
    finally:
        if sink is not None:
            sink.close()
    print(f"acyclic search: equality on {holds}, strict inequality on {fails}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="didom",
        description="Exact domination, packing, and product invariants for digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="compute gamma, gamma_t, rho, rho_o")
    p_inv.add_argument("input", nargs="?", help="arc-list file")
    p_inv.add_argument("--family", help="family spec instead of a file")
    p_inv.add_argument("--timeout-ms", type=float, default=DEFAULT_TIMEOUT_MS, dest="timeout_ms")
    p_inv.add_argument("--timings", action="store_true", help="include elapsed times")
    p_inv.set_defaults(func=_cmd_invariants)

    p_prod = sub.add_parser("product", help="write a Cartesian or direct product")
    p_prod.add_argument("op", choices=("cart", "direct"))
    p_prod.add_argument("lhs", help="family spec or arc-list file")
    p_prod.add_argument("rhs", help="family spec or arc-list file")
    p_prod.add_argument("--out", help="output arc-list file (default stdout)")
    p_prod.set_defaults(func=_cmd_product)

    p_fam = sub.add_parser("family", help="emit a named construction as an arc list")
    p_fam.add_argument("spec", help="family spec, e.g. Gm:3 or C4:0202")
    p_fam.add_argument("--out", help="output arc-list file (default stdout)")
    p_fam.set_defaults(func=_cmd_family)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("config", nargs="?", help="suite config file (default: built-in suite)")
    p_ver.add_argument("--out", help="append JSON-lines records to this file")
    p_ver.add_argument("--jobs", type=int, help="worker threads")
    p_ver.add_argument("--seed", type=int, help="override the suite seed")
    p_ver.add_argument("--timeout-ms", type=float, dest="timeout_ms")
    p_ver.set_defaults(func=_cmd_verify)

    p_acy = sub.add_parser(
        "search-acyclic", help="record packing vs domination over acyclic digraphs"
    )
    p_acy.add_argument("--max-n", type=int, default=9, dest="max_n")
    p_acy.add_argument("--budget", type=int, default=10_000)
    p_acy.add_argument("--seed", type=int, default=0)
    p_acy.add_argument("--timeout-ms", type=float, default=DEFAULT_TIMEOUT_MS, dest="timeout_ms")
    p_acy.add_argument("--out", help="append records to this file (default stdout)")
    p_acy.add_argument("--timings", action="store_true")
    p_acy.set_defaults(func=_cmd_search_acyclic)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArcListParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, verify.SuiteConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SolveTimeout:
        print("error: solve exceeded its deadline", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

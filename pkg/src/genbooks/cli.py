"""Command-line entry point: ``genbooks <subcommand> [options]``.

Exit status is 0 on success, 1 when a subcommand's verdict is a failure
(an irregular pair, a witness that does not verify) and 2 on usage errors,
malformed graph6 input and cap violations.
"""

from __future__ import annotations

import argparse
import os
import secrets
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import records as rec
from .cliques import book_size, contains_book
from .graph import Graph, Graph6Error, complement, parse_graph6
from .lower_bound import (
    MAX_SAMPLE_ORDER,
    bound_book_probability,
    bound_km_probability,
    lb_parameters,
    monte_carlo_witness,
)
from .ramsey import (
    DEFAULT_SEARCH_CAP,
    RamseySearchCapError,
    build_witness,
    formula_value,
    ramsey_number,
    verify_witness,
)
from .regularity import (
    DEFAULT_EXACT_CAP,
    RegularityCapError,
    SrlParams,
    classify_partition,
    cluster_book_bound,
    eps_regular_exact,
    eps_regular_refute,
    parse_partition,
    select_srl_parameters,
)
from .stability import DEFAULT_COLORING_CAP, compute_c, extract_stable_subgraph

THREADS_ENV = "GENBOOKS_THREADS"


class UsageError(Exception):
    pass


# -- argument helpers ------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _vertex_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from None
    if not out or min(out) < 0:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}")
    return out


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def load_graphs(source: str) -> list[Graph]:
    """An inline graph6 string, or a path to a file with one graph per line."""
    path = Path(source)
    if path.is_file():
        lines = [ln.strip() for ln in path.read_text().splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise UsageError(f"{source}: no graphs found")
        graphs = []
        for i, line in enumerate(lines, 1):
            try:
                graphs.append(parse_graph6(line))
            except Graph6Error as exc:
                raise UsageError(f"{source}: graph {i}: {exc}") from None
        return graphs
    return [parse_graph6(source.strip())]


def _seed(value: Optional[int]) -> int:
    return value if value is not None else secrets.randbits(63)


# -- subcommands -----------------------------------------------------------
# each returns (records, failed)


def cmd_books(args) -> tuple[list[dict], bool]:
    out = []
    for g in load_graphs(args.graph):
        bm = book_size(g, args.r)
        fields = dict(
            graph=g,
            n=g.n,
            m=g.edge_count,
            r=args.r,
            bs=bm.size,
            base=bm.base,
            pages=bm.pages,
        )
        if args.q is not None:
            fields["q"] = args.q
            fields["contains_book"] = contains_book(g, args.q, args.r)
        out.append(rec.record("books", **fields))
    return out, False


def cmd_stability(args) -> tuple[list[dict], bool]:
    out = []
    for g in load_graphs(args.graph):
        res = extract_stable_subgraph(g, args.p, args.alpha, cap=args.coloring_cap)
        r = rec.stability_record(res, g)
        r["coloring_cap"] = args.coloring_cap
        out.append(r)
    return out, False


def cmd_constants(args) -> tuple[list[dict], bool]:
    ps = args.p or list(range(2, 11))
    return [rec.constants_record(compute_c(p)) for p in ps], False


def cmd_regularity(args) -> tuple[list[dict], bool]:
    graphs = load_graphs(args.graph)
    if len(graphs) != 1:
        raise UsageError("regularity takes exactly one graph")
    g = graphs[0]
    randomized = args.mode == "randomized"
    seed = _seed(args.seed) if randomized else None
    common = dict(
        graph=g,
        n=g.n,
        mode=args.mode,
        cap=None if randomized else args.cap,
        trials=args.trials if randomized else None,
        seed=seed,
    )

    if args.partition is None:
        if args.a is None or args.b is None or args.eps is None:
            raise UsageError("pair mode needs --a, --b and --eps (or give --partition)")
        if args.mode == "exact":
            v = eps_regular_exact(g, args.a, args.b, args.eps, cap=args.cap)
        else:
            v = eps_regular_refute(g, args.a, args.b, args.eps, trials=args.trials, seed=seed)
        fields = dict(
            common,
            a=args.a,
            b=args.b,
            eps=args.eps,
            regular=v.regular,
            density=v.density,
            witness_x=v.witness[0] if v.witness else None,
            witness_y=v.witness[1] if v.witness else None,
            witness_density=v.witness_density,
            trials_used=v.trials,
        )
        return [rec.record("regularity-pair", **fields)], not v.regular

    try:
        part = parse_partition(Path(args.partition).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read partition: {exc}") from None
    if None in (args.p, args.r):
        raise UsageError("partition mode needs --p and --r")
    overrides = (args.eps, args.d, args.delta)
    if all(x is not None for x in overrides):
        c_pr = args.c_pr if args.c_pr is not None else 1.0
        params = SrlParams(args.p, args.r, args.xi or 0.0, c_pr, args.delta, args.d, args.eps)
        bad = params.violations()
        if bad:
            raise UsageError(f"parameter invariants violated: {', '.join(bad)}")
    elif any(x is not None for x in overrides):
        raise UsageError("--eps, --d and --delta must be given together")
    else:
        if args.xi is None or args.c_pr is None:
            raise UsageError("partition mode needs --xi and --c-pr, or explicit --eps/--d/--delta")
        params = select_srl_parameters(args.p, args.r, args.xi, args.c_pr)
    part.validate(g.n)
    cg = classify_partition(
        g, part, params, args.mode, cap=args.cap, trials=args.trials, seed=seed or 0
    )
    covered = sum(len(x) for x in part.parts)
    fields = dict(
        common,
        p=params.p,
        r=params.r,
        xi=params.xi,
        c_pr=params.c_pr,
        delta=params.delta,
        d=params.d,
        eps=params.epsilon,
        k=cg.k,
        exceptional_size=len(part.exceptional),
        cluster_edges=cg.edge_counts(),
        h_irr=cg.h_irr,
        h_lo=cg.h_lo,
        h_mid=cg.h_mid,
        h_hi=cg.h_hi,
        book_bound_fraction=cluster_book_bound(cg, params, covered / g.n),
    )
    return [rec.record("regularity-partition", **fields)], False


def cmd_ramsey(args) -> tuple[list[dict], bool]:
    cert = ramsey_number(args.p, args.q, args.r, args.n_cap, threads=args.threads)
    out = rec.certificate_records(cert, args.n_cap)
    out[0]["threads"] = args.threads
    return out, False


def cmd_witness(args) -> tuple[list[dict], bool]:
    if args.graph is None:
        graphs = [build_witness(args.p, args.q, args.r)]
    else:
        graphs = load_graphs(args.graph)
    out, failed = [], False
    for g in graphs:
        ok = verify_witness(g, args.p, args.q, args.r)
        failed |= not ok
        out.append(
            rec.record(
                "witness",
                graph=g,
                n=g.n,
                p=args.p,
                q=args.q,
                r=args.r,
                formula=formula_value(args.p, args.q, args.r),
                verified=ok,
                complement_bs=book_size(complement(g), args.r).size,
            )
        )
    return out, failed


def cmd_lower_bound(args) -> tuple[list[dict], bool]:
    params = lb_parameters(args.m, args.k, args.r)
    km = bound_km_probability(params)
    book = bound_book_probability(params)
    stats = None
    q = args.q_target if args.q_target is not None else params.book_size
    if args.trials > 0:
        stats = monte_carlo_witness(
            params, q, args.trials, _seed(args.seed), threads=args.threads, max_order=args.max_order
        )
    out = rec.lb_records(params, km, book, stats, q)
    out[0]["threads"] = args.threads
    return out, False


# -- parser ----------------------------------------------------------------


def build_parser(default_threads: int = 1) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("human", "records"), default="human", help="output mode"
    )
    common.add_argument(
        "--threads",
        type=_positive_int,
        default=default_threads,
        help=f"worker cap (default from ${THREADS_ENV}, else 1)",
    )

    parser = argparse.ArgumentParser(
        prog="genbooks", description="Generalized book graphs and their Ramsey numbers."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    p = sub.add_parser("books", parents=[common], help="book size bs^(r) of graphs")
    p.add_argument("--graph", required=True, help="graph6 string or file of graph6 lines")
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--q", type=_positive_int, help="also test for B_q^(r)")
    p.set_defaults(func=cmd_books)

    p = sub.add_parser("stability", parents=[common], help="low-degree deletion pass")
    p.add_argument("--graph", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alpha", type=_positive_float, required=True)
    p.add_argument("--coloring-cap", type=_positive_int, default=DEFAULT_COLORING_CAP)
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("constants", parents=[common], help="the slack constant c(p)")
    p.add_argument("--p", type=int, action="append", help="repeatable; default 2..10")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("regularity", parents=[common], help="pair or partition regularity")
    p.add_argument("--graph", required=True)
    p.add_argument("--a", type=_vertex_list, help="0-based vertices, comma separated")
    p.add_argument("--b", type=_vertex_list)
    p.add_argument("--partition", help="partition file")
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--xi", type=_positive_float)
    p.add_argument("--c-pr", type=_positive_float, dest="c_pr")
    p.add_argument("--eps", type=_positive_float)
    p.add_argument("--d", type=_positive_float)
    p.add_argument("--delta", type=_positive_float)
    p.add_argument("--mode", choices=("exact", "randomized"), default="exact")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_EXACT_CAP)
    p.add_argument("--trials", type=_positive_int, default=10_000)
    p.add_argument("--seed", type=_nonneg_int)
    p.set_defaults(func=cmd_regularity)

    p = sub.add_parser("ramsey", parents=[common], help="certify r(K_{p+1}, B_q^(r))")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=_positive_int, required=True)
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--n-cap", type=_positive_int, default=DEFAULT_SEARCH_CAP, dest="n_cap")
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("witness", parents=[common], help="verify an extremal witness")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=_positive_int, required=True)
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--graph", help="graph to verify (default K_p(q+r-1))")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("lower-bound", parents=[common], help="random lower-bound witnesses")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=_nonneg_int, default=0)
    p.add_argument("--seed", type=_nonneg_int)
    p.add_argument("--q-target", type=_positive_int, dest="q_target")
    p.add_argument("--max-order", type=_positive_int, default=MAX_SAMPLE_ORDER, dest="max_order")
    p.set_defaults(func=cmd_lower_bound)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        parser = build_parser(_default_threads())
    except UsageError as exc:
        print(f"genbooks: error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        records, failed = args.func(args)
    except (UsageError, Graph6Error, RegularityCapError, RamseySearchCapError, ValueError) as exc:
        print(f"genbooks {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "records":
        sys.stdout.write("".join(rec.dumps(r) + "\n" for r in records))
    else:
        sys.stdout.write(rec.render_human(records))
    sys.stdout.flush()
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

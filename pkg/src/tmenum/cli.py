"""Command-line driver.

Examples::

    tmenum silent table --max 10 --format csv
    tmenum antiprism hc 6
    tmenum gf trace --graph builder:gaze
    tmenum ham cycles --graph builder:antiprism:5 --undirected
    tmenum simple cycles -k 5 --graph builder:cell24 --parallel 4
    tmenum root --poly=1,-10,16,-8,1

Exit status is 0 on success, 1 when a computation rejects its input and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from tmenum import antiprism, silent, subsets, walks
from tmenum.graph import Digraph, adjacency_matrix, build, from_edge_list
from tmenum.series import CountSeq, check_recurrence, largest_real_root, trace_gf


class UsageError(Exception):
    pass


def emit_bfile(seq: CountSeq) -> str:
    """OEIS b-file text: one ``n a(n)`` line per term."""
    return "".join(f"{n} {v}\n" for n, v in seq.items())


def load_graph(source: str) -> Digraph:
    kind, sep, rest = source.partition(":")
    if not sep or kind not in ("file", "builder"):
        raise UsageError(f"graph source must be file:<path> or builder:<spec>, got {source!r}")
    if kind == "builder":
        return build(rest)
    try:
        text = Path(rest).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read graph file {rest!r}: {exc.strerror}") from None
    return from_edge_list(text)


def _csv_ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _fmt_prob(p) -> str:
    return f"{float(p):.3f}"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_walks(args, out) -> None:
    g = load_graph(args.graph)
    if args.mode == "closed":
        print(walks.count_closed_walks(g, args.length), file=out)
        return
    if args.from_ is None or args.to is None:
        raise UsageError("walks count needs --from and --to")
    print(walks.count_walks(g, args.length, args.from_, args.to), file=out)


def cmd_gf(args, out) -> None:
    g = load_graph(args.graph)
    print(trace_gf(adjacency_matrix(g)).render(), file=out)


def cmd_seq(args, out) -> None:
    seq = CountSeq(args.offset, _csv_ints(args.values, "--values"))
    ok = check_recurrence(seq, _csv_ints(args.rec, "--rec"), args.from_)
    print("true" if ok else "false", file=out)


def cmd_silent(args, out) -> None:
    if args.mode in ("prism", "circle"):
        n = args.n
        value = silent.prism_count(n) if args.mode == "prism" else silent.circle_count(n)
        print(value, file=out)
        if args.mode == "prism" and n < 3:
            print(f"note: t_{n} is a formal trace value; prisms need n >= 3", file=sys.stderr)
        return
    rows = silent.table(args.max)
    if args.format == "bfile":
        t, s = silent.sequences(args.max)
        seq = t.from_index(2) if args.seq == "t" else s
        out.write(emit_bfile(seq))
    elif args.format == "csv":
        print("n,t_n,s_n,p_t,p_s,p_t_exact,p_s_exact", file=out)
        for r in rows:
            print(
                f"{r['n']},{r['t']},{r['s']},{_fmt_prob(r['p_t'])},{_fmt_prob(r['p_s'])},"
                f"{r['p_t']},{r['p_s']}",
                file=out,
            )
    else:
        header = ("n", "t_n", "t_n/9^n", "s_n", "s_n/9^n")
        body = [
            (str(r["n"]), str(r["t"]), f"{_fmt_prob(r['p_t'])} ({r['p_t']})",
             str(r["s"]), f"{_fmt_prob(r['p_s'])} ({r['p_s']})")
            for r in rows
        ]
        _print_aligned([header, *body], out)


def _print_aligned(rows: Sequence[Sequence[str]], out) -> None:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    for r in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip(), file=out)


def cmd_antiprism(args, out) -> None:
    if args.mode == "hc":
        print(antiprism.hc_antiprism(args.n), file=out)
        return
    seq = antiprism.hc_sequence(3, args.max + 1)
    if args.format == "bfile":
        out.write(emit_bfile(seq))
    elif args.format == "csv":
        print("n,h_n,type1,type2", file=out)
        for n, h in seq.items():
            print(f"{n},{h},{antiprism.hc_type1_count(n)},{antiprism.hc_type2_count(n)}", file=out)
    else:
        rows = [("n", "h_n", "type1", "type2")]
        rows += [
            (str(n), str(h), str(antiprism.hc_type1_count(n)), str(antiprism.hc_type2_count(n)))
            for n, h in seq.items()
        ]
        _print_aligned(rows, out)


def _maybe_halve(g: Digraph, raw: int, kind: str, k: int, undirected: bool) -> int:
    if not undirected:
        return raw
    if not g.is_symmetric():
        raise ValueError("--undirected needs a graph with a symmetric adjacency matrix")
    return subsets.undirected_count(raw, kind, k)


def cmd_ham(args, out) -> None:
    g = load_graph(args.graph)
    if args.mode == "paths":
        raw = subsets.hamiltonian_paths(g, workers=args.parallel)
        value = _maybe_halve(g, raw, "path", g.n - 1, args.undirected)
    else:
        raw = subsets.hamiltonian_cycles(g, workers=args.parallel)
        value = _maybe_halve(g, raw, "cycle", g.n, args.undirected)
    print(value, file=out)


def cmd_simple(args, out) -> None:
    g = load_graph(args.graph)
    if args.mode == "paths":
        raw = subsets.simple_paths(g, args.k, workers=args.parallel)
        value = _maybe_halve(g, raw, "path", args.k, args.undirected)
    else:
        raw = subsets.simple_cycles(g, args.k, workers=args.parallel)
        value = _maybe_halve(g, raw, "cycle", args.k, args.undirected)
    print(value, file=out)


def cmd_root(args, out) -> None:
    coeffs = _csv_ints(args.poly, "--poly")
    print(repr(largest_real_root(coeffs, args.tol)), file=out)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tmenum", description="Transfer-matrix graph enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    graph_help = "file:<path> (edge list) or builder:<spec>, e.g. builder:antiprism:5"

    p = sub.add_parser("walks", help="count walks or closed walks")
    p.add_argument("mode", choices=("count", "closed"))
    p.add_argument("--graph", required=True, help=graph_help)
    p.add_argument("--length", type=_nonneg, required=True)
    p.add_argument("--from", dest="from_", type=int)
    p.add_argument("--to", type=int)
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("gf", help="generating function of tr(A^n)")
    p.add_argument("mode", choices=("trace",))
    p.add_argument("--graph", required=True, help=graph_help)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("seq", help="check a linear recurrence on a sequence")
    p.add_argument("mode", choices=("check",))
    p.add_argument("--values", required=True, help="comma-separated terms")
    p.add_argument("--offset", type=int, default=0, help="index of the first term")
    p.add_argument("--rec", required=True, help="c1,...,cd with a_n = c1 a_(n-1) + ... + cd a_(n-d)")
    p.add_argument("--from", dest="from_", type=int, default=None)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("silent", help="silent configurations on prisms and circles")
    ssub = p.add_subparsers(dest="mode", required=True)
    for mode in ("prism", "circle"):
        q = ssub.add_parser(mode)
        q.add_argument("n", type=_nonneg)
        q.set_defaults(func=cmd_silent)
    q = ssub.add_parser("table")
    q.add_argument("--max", type=int, required=True)
    q.add_argument("--format", choices=("plain", "csv", "bfile"), default="plain")
    q.add_argument("--seq", choices=("t", "s"), default="t", help="sequence written by --format bfile")
    q.set_defaults(func=cmd_silent)

    p = sub.add_parser("antiprism", help="Hamiltonian cycles of antiprism graphs")
    asub = p.add_subparsers(dest="mode", required=True)
    q = asub.add_parser("hc")
    q.add_argument("n", type=int)
    q.set_defaults(func=cmd_antiprism)
    q = asub.add_parser("table")
    q.add_argument("--max", type=int, required=True)
    q.add_argument("--format", choices=("plain", "csv", "bfile"), default="plain")
    q.set_defaults(func=cmd_antiprism)

    for name, func, needs_k in (("ham", cmd_ham, False), ("simple", cmd_simple, True)):
        p = sub.add_parser(name, help=("Hamiltonian" if not needs_k else "fixed-length simple")
                           + " paths or cycles by inclusion-exclusion")
        p.add_argument("mode", choices=("paths", "cycles"))
        if needs_k:
            p.add_argument("-k", type=_positive, required=True)
        p.add_argument("--graph", required=True, help=graph_help)
        p.add_argument("--undirected", action="store_true", help="halve the directed count")
        p.add_argument("--parallel", type=_positive, default=1, metavar="WORKERS")
        p.set_defaults(func=func)

    p = sub.add_parser("root", help="largest real root of a polynomial")
    p.add_argument("--poly", required=True,
                   help="coefficients in ascending powers; use --poly=-1,0,1 when the first is negative")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_root)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"tmenum: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, IndexError) as exc:
        print(f"tmenum: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())

"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .modring import ann_classes, check_modulus, prime_power
from .report import run_verification
from .spectra import (
    charpoly_exact,
    closed_form_charpoly,
    coefficient_triangle,
    prime_power_matrix,
    triangle_csv,
)
from .wiener import DisconnectedGraphError, wiener_closed_form, wiener_index
from .zdgraph import (
    GraphSizeError,
    adjacency_matrix,
    build_compressed_graph,
    build_compressed_prime_power,
    build_full_graph,
    export_graph,
)

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dumps(doc) -> str:
    return json.dumps(doc)


def _add_selector(p: argparse.ArgumentParser, with_m: bool = True) -> None:
    if with_m:
        p.add_argument("--m", type=int, help="modulus of Z_m")
        p.add_argument("--compressed", action="store_true",
                       help="with --m: use the compressed (annihilator class) graph")
    p.add_argument("--n", type=int, help="exponent n of Z_{p^n} (compressed, labelled by exponent)")
    p.add_argument("--p", type=int,
                   help="prime p of Z_{p^n}; the compressed structure does not depend on it")


def _selected(args) -> tuple[str, int, int | None]:
    """Return ``("m", m, None)`` or ``("n", n, p)`` after validating the selector."""
    m = getattr(args, "m", None)
    if m is not None:
        if args.n is not None or args.p is not None:
            raise UsageError("--m cannot be combined with --n/--p")
        try:
            check_modulus(m)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return "m", m, None
    if args.n is None:
        raise UsageError("give --m M, --n N, or --p P --n N")
    if args.n < 2:
        raise UsageError(f"--n must be >= 2, got {args.n}")
    if args.p is not None:
        if args.p < 2 or prime_power(args.p) != (args.p, 1):
            raise UsageError(f"--p must be prime, got {args.p}")
    return "n", args.n, args.p


def _graph_for(args):
    kind, value, p = _selected(args)
    if kind == "n":
        return build_compressed_prime_power(value, p)
    try:
        if args.compressed:
            return build_compressed_graph(value)
        return build_full_graph(value)
    except GraphSizeError as exc:
        raise UsageError(str(exc)) from None


def cmd_classes(args) -> int:
    try:
        check_modulus(args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    classes = ann_classes(args.m)
    if args.format == "json":
        doc = [{"key": c.key, "representative": c.representative, "size": c.size}
               for c in classes]
        _emit(_dumps({"m": args.m, "classes": doc}))
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "representative", "size"])
        for c in classes:
            w.writerow([c.key, c.representative, c.size])
        sys.stdout.write(buf.getvalue())
    return OK


def cmd_graph(args) -> int:
    g = _graph_for(args)
    sys.stdout.write(export_graph(g, args.format).decode())
    return OK


def _charpoly_pair(args):
    kind, value, _ = _selected(args)
    if kind == "n":
        return {"n": value}, lambda: charpoly_exact(prime_power_matrix(value)), \
            lambda: closed_form_charpoly(value)
    g = build_compressed_graph(value)
    if g.order == 0:
        raise UsageError(f"Z_{value} has no zero divisors")
    pp = prime_power(value)
    closed = (lambda: closed_form_charpoly(pp[1])) if pp else None
    label = {"m": value, **({"n": pp[1]} if pp else {})}
    return label, lambda: charpoly_exact(adjacency_matrix(g)), closed


def cmd_charpoly(args) -> int:
    label, oracle, closed = _charpoly_pair(args)
    if args.mode != "oracle" and closed is None:
        raise UsageError("closed form only exists for prime-power moduli")
    n = label.get("n")
    if args.mode == "oracle":
        _emit(_dumps({**label, **oracle().to_json()}))
        return OK
    if args.mode == "closed-form":
        _emit(_dumps(closed().to_json(n)))
        return OK
    o, c = oracle(), closed()
    _emit(_dumps({**label, "oracle": o.to_json(n), "closed_form": c.to_json(n),
                  "match": o == c}))
    return OK if o == c else MISMATCH


def cmd_wiener(args) -> int:
    kind, value, _ = _selected(args)
    if kind == "n":
        n = value
    elif args.compressed and prime_power(value) is not None:
        n = prime_power(value)[1]
    else:
        n = None
    if args.mode != "bfs" and n is None:
        raise UsageError("closed form needs --n, or --m p^n with --compressed")
    if args.mode == "closed-form":
        _emit(str(wiener_closed_form(n)))
        return OK
    try:
        bfs = wiener_index(_graph_for(args))
    except DisconnectedGraphError as exc:
        raise UsageError(str(exc)) from None
    if args.mode == "bfs":
        _emit(str(bfs))
        return OK
    closed = wiener_closed_form(n)
    _emit(_dumps({"n": n, "bfs": bfs, "closed_form": closed, "match": bfs == closed}))
    return OK if bfs == closed else MISMATCH


def cmd_triangle(args) -> int:
    if args.rows < 2:
        raise UsageError(f"--rows must be >= 2, got {args.rows}")
    rows = coefficient_triangle(args.rows)
    if args.format == "csv":
        sys.stdout.write(triangle_csv(rows))
    else:
        doc = [{"n": n, "row": [str(x) for x in row]} for n, row in enumerate(rows, start=2)]
        _emit(_dumps(doc))
    return OK


def cmd_verify(args) -> int:
    if args.max_n < 2:
        raise UsageError(f"--max-n must be >= 2, got {args.max_n}")
    report = run_verification(args.max_n)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.dumps())
    except OSError as exc:
        raise UsageError(f"cannot write report: {exc}") from None
    sys.stdout.write(report.summary())
    return OK if report.overall_pass else MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zdg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="annihilator classes of Z_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("graph", help="build and export a zero-divisor graph")
    _add_selector(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("charpoly", help="characteristic polynomial of a compressed graph")
    p.add_argument("--m", type=int, help="modulus (compressed graph of Z_m)")
    _add_selector(p, with_m=False)
    p.add_argument("--mode", choices=["closed-form", "oracle", "both"], default="both")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("wiener", help="Wiener index")
    _add_selector(p)
    p.add_argument("--mode", choices=["bfs", "closed-form", "both"], default="bfs")
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("triangle", help="coefficient magnitude triangle")
    p.add_argument("--rows", type=int, required=True, help="largest n to include")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", help="sweep closed forms against oracles")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", required=True, help="path for the JSON report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"zdg {args.command}: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

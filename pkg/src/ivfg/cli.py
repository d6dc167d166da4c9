"""Command-line interface.

Exit status: 0 success, 1 a computed negative answer (invalid graph, no
morphism), 2 the input could not be processed.
"""

from __future__ import annotations

import argparse
import sys

from . import textio
from .antipodal import antipodal_graph
from .core import GraphKind, IvfGraph, complement, generate, validate
from .errors import IvfgError
from .metrics import diameter, distance_table, eccentricities, radius
from .morphism import MorphismKind, find_morphism
from .scalar import Scalar
from .status import status_summary

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def _write_graph(g: IvfGraph, out: str | None) -> None:
    if out:
        textio.dump(g, out)
    else:
        sys.stdout.write(textio.dumps(g))


def cmd_validate(args) -> int:
    g = textio.load(args.file, check=False)
    report = validate(g)
    if not report:
        print("valid")
        return EXIT_OK
    print(f"invalid: {len(report)} violation(s)")
    for v in report:
        print(f"  {v}")
    return EXIT_NEGATIVE


def cmd_report(args) -> int:
    g = textio.load(args.file)
    table = distance_table(g)
    ids = g.vertex_ids()
    print(f"vertices: {len(g)}")
    print(f"edges: {len(g.edges)}")
    print("distances:")
    for i, u in enumerate(ids):
        for v in ids[i + 1:]:
            print(f"delta({u},{v}) = {table[u, v]}")
    if len(g) < 2:
        return EXIT_OK
    ecc = eccentricities(g, table=table)
    print("eccentricities:")
    for v in ids:
        print(f"e({v}) = {ecc[v]}")
    print(f"radius = {radius(g, table=table)}")
    print(f"diameter = {diameter(g, table=table)}")
    return EXIT_OK


def cmd_antipodal(args) -> int:
    g = textio.load(args.file)
    res = antipodal_graph(g)
    # written as comments when the graph itself goes to stdout, so the output still parses
    lead = "" if args.output else "# "
    print(f"{lead}diameter used = {res.diameter_used}")
    for p in res.antipodal_pairs:
        print(f"{lead}antipodal {p.u} {p.v} ({p.clause})")
    _write_graph(res.graph, args.output)
    return EXIT_OK


def cmd_complement(args) -> int:
    g = textio.load(args.file)
    _write_graph(complement(g), args.output)
    return EXIT_OK


def _ids(vs) -> str:
    return "{" + ", ".join(sorted(vs)) + "}"


def cmd_status(args) -> int:
    g = textio.load(args.file)
    s = status_summary(g)
    print("status:")
    for v in g.vertex_ids():
        print(f"S({v}) = {s.per_vertex[v]}")
    print(f"minimum = {s.minimum}")
    print(f"maximum = {s.maximum}")
    print(f"total = {s.total}")
    print(f"median = {_ids(s.median)}")
    print(f"mu-minimizers = {_ids(s.mu_minimizers)}")
    print(f"nu-minimizers = {_ids(s.nu_minimizers)}")
    print(f"self-median: {'yes' if s.self_median else 'no'}")
    return EXIT_OK


def cmd_iso(args) -> int:
    g1 = textio.load(args.file1)
    g2 = textio.load(args.file2)
    kind = MorphismKind.parse(args.kind)
    m = find_morphism(g1, g2, kind)
    if m is None:
        print(f"NotFound: no {kind.value} exists")
        return EXIT_NEGATIVE
    print(f"{kind.value} found:")
    for u in g1.vertex_ids():
        print(f"{u} -> {m[u]}")
    return EXIT_OK


def _interval_arg(text_pair):
    mu, nu = text_pair
    return Scalar.parse(mu), Scalar.parse(nu)


def cmd_gen(args) -> int:
    vertex = _interval_arg(args.vertex)
    edges = [_interval_arg(e) for e in (args.edge or [])]
    g = generate(args.kind, args.n, vertex, edges)
    _write_graph(g, args.output)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ivfg", description="Interval-valued fuzzy graph analysis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check the IVFG constraints")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("report", help="distance matrix, eccentricities, radius, diameter")
    s.add_argument("file")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("antipodal", help="build the antipodal graph")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_antipodal)

    s = sub.add_parser("complement", help="build the complement graph")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_complement)

    s = sub.add_parser("status", help="status table, median and self-median verdict")
    s.add_argument("file")
    s.set_defaults(func=cmd_status)

    s = sub.add_parser("iso", help="search for a homomorphism or (co-weak) isomorphism")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--kind", choices=["hom", "iso", "co-weak"], default="iso")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("gen", help="write a generated graph")
    s.add_argument("--kind", required=True, choices=[k.value for k in GraphKind])
    s.add_argument("-n", type=int, required=True, help="number of vertices")
    s.add_argument("--vertex", nargs=2, metavar=("MU", "NU"), required=True)
    s.add_argument("--edge", nargs=2, metavar=("MU", "NU"), action="append",
                   help="edge interval; repeat for alternating or cycled weights")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IvfgError, OSError, ValueError) as exc:
        print(f"ivfg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

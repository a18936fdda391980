"""Command-line front end.

Generator files hold ``d`` rows of ``n`` rationals (``p`` or ``p/q``), one
column per generator, after a ``d n`` header line; ``#`` starts a comment
line.  Exit codes: 0 ok, 2 parse error, 3 validation error, 4 negative
verdict, 5 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import catalog
from .belts import belt_diameter, belt_graph, belts, diameter_pair, shortest_belt_path
from .conjugate import ConjugatedPair, normal_form
from .errors import ParseError, ZonobeltError
from .search import SearchOptions, bound_check, parse_bits, search_xi, spot_check
from .venkov import venkov_test
from .zonotope import GeneratorSet, facet_by_indices, facet_classes, reduce_to_full_rank, validate

GRAPH_VERSION = 1
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_generator_file(text: str) -> GeneratorSet:
    """Parse a generator file exactly; columns become generators."""
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line.split()))
    if not data:
        raise ParseError(0, "empty file")
    lineno, header = data[0]
    if len(header) != 2 or not all(t.isdigit() for t in header):
        raise ParseError(lineno, "header must be 'd n'")
    d, n = int(header[0]), int(header[1])
    if d < 1:
        raise ParseError(lineno, "dimension must be positive")
    rows = data[1:]
    if len(rows) != d:
        where = rows[d][0] if len(rows) > d else (rows[-1][0] if rows else lineno)
        raise ParseError(where, f"expected {d} matrix rows, found {len(rows)}")
    matrix = []
    for lineno, tokens in rows:
        if len(tokens) != n:
            raise ParseError(lineno, f"expected {n} entries, found {len(tokens)}")
        row = []
        for tok in tokens:
            if not _RATIONAL.match(tok):
                raise ParseError(lineno, f"bad rational {tok!r}")
            if "/" in tok and int(tok.split("/")[1]) == 0:
                raise ParseError(lineno, f"zero denominator in {tok!r}")
            row.append(Fraction(tok))
        matrix.append(row)
    if n == 0:
        return GeneratorSet(d, ())
    return GeneratorSet.from_rows(matrix)


def format_generator_file(V: GeneratorSet, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{V.dim} {V.n}")
    for row in V.rows():
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def _load(path: str, reduce: bool) -> GeneratorSet:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    V = parse_generator_file(text)
    if reduce:
        V = reduce_to_full_rank(V)
    return validate(V)


def _fmt_set(indices: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


def _facet_arg(V: GeneratorSet, spec: str):
    s = spec.strip()
    if re.fullmatch(r"F?\d+", s):
        cid = int(s.lstrip("F"))
        classes = facet_classes(V)
        if cid >= len(classes):
            raise ParseError(0, f"facet class {cid} does not exist ({len(classes)} classes)")
        return classes[cid]
    body = s.strip("{}")
    try:
        idx = [int(t) for t in body.split(",") if t.strip()]
    except ValueError:
        raise ParseError(0, f"cannot read facet {spec!r}; use a class id or a generator list like 0,1,4") from None
    try:
        return facet_by_indices(V, idx)
    except KeyError as exc:
        raise ParseError(0, str(exc)) from None


def _index_list(spec: str) -> list[int]:
    return [int(t) for t in spec.strip("{}").split(",") if t.strip()]


def cmd_check(args) -> int:
    V = _load(args.file, args.reduce)
    verdict = venkov_test(V)
    print("parallelohedron" if verdict else "not a parallelohedron")
    for ridge, count in verdict.ridge_reports:
        mark = "  <-- more than 3" if count > 3 else ""
        print(f"R{ridge.id} {_fmt_set(ridge.indices)} directions={count}{mark}")
    if not verdict:
        print(f"witness: R{verdict.witness.id} {_fmt_set(verdict.witness.indices)} "
              f"with {verdict.witness_count} directions")
        return 4
    return 0


def cmd_facets(args) -> int:
    V = _load(args.file, args.reduce)
    for fc in facet_classes(V):
        print(f"F{fc.id} {_fmt_set(fc.indices)} " + " ".join(V.label(i) for i in fc.indices))
    return 0


def cmd_belts(args) -> int:
    V = _load(args.file, args.reduce)
    for belt in belts(V):
        members = " ".join(f"F{m.id}" for m in belt.members)
        print(f"R{belt.ridge.id} {_fmt_set(belt.ridge.indices)} length={belt.length} members: {members}")
    return 0


def cmd_distance(args) -> int:
    V = _load(args.file, args.reduce)
    F = _facet_arg(V, args.source)
    G = _facet_arg(V, args.target)
    path = shortest_belt_path(V, F, G)
    print(path.length)
    parts = [f"F{path.facets[0].id}{_fmt_set(path.facets[0].indices)}"]
    for belt, fc in zip(path.belts, path.facets[1:]):
        parts.append(f"[R{belt.ridge.id}{_fmt_set(belt.ridge.indices)}]")
        parts.append(f"F{fc.id}{_fmt_set(fc.indices)}")
    print("path: " + " ".join(parts))
    return 0


def cmd_diameter(args) -> int:
    V = _load(args.file, args.reduce)
    diam = belt_diameter(V)
    print(diam)
    if V.dim >= 2:
        s, t = diameter_pair(V)
        classes = facet_classes(V)
        print(f"attained by F{s} {_fmt_set(classes[s].indices)} and F{t} {_fmt_set(classes[t].indices)}")
        verdict = venkov_test(V)
        if verdict:
            print(bound_check(V).line())
        else:
            print("bound check: skipped (not a parallelohedron)")
    return 0


def cmd_normal_form(args) -> int:
    V = _load(args.file, args.reduce)
    pair = ConjugatedPair.from_generators(V, _index_list(args.e), _index_list(args.f))
    nf = normal_form(pair)
    print("A:")
    for row in nf.A:
        print(" ".join(str(x) for x in row))
    print("transform:")
    for row in nf.transform:
        print(" ".join(str(x) for x in row))
    print("scalings: " + " ".join(str(x) for x in nf.scalings))
    if nf.flipped_rows:
        print("complemented rows: " + " ".join(str(i) for i in nf.flipped_rows))
    return 0


def cmd_catalog(args) -> int:
    if args.name == "list":
        for name in catalog.names():
            print(name)
        return 0
    try:
        entry = catalog.get(args.name)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 3
    if args.emit:
        sys.stdout.write(format_generator_file(entry.generators))
        return 0
    V = entry.generators
    print(f"name: {entry.name}")
    print(f"dimension: {V.dim}")
    print(f"generators: {V.n}")
    print(f"expected diameter: {entry.expected_diameter}")
    print(f"source: {entry.source}")
    sys.stdout.write(format_generator_file(V))
    return 0


def cmd_search(args) -> int:
    if args.spot is not None:
        A = parse_bits(args.spot, args.dim - 1)
        report = spot_check(args.dim, A)
    else:
        opts = SearchOptions(
            row_filter=not args.full,
            symmetry_reduction=(not args.full) and not args.no_symmetry,
            checkpoint_path=args.checkpoint,
            workers=args.workers,
            stop_after=args.stop_after,
            reproducer_path=args.reproducer,
        )
        report = search_xi(args.dim, opts)
    print(json.dumps(report.to_json(), indent=1, sort_keys=True))
    return 0


def graph_json(V: GeneratorSet) -> dict:
    graph = belt_graph(V)
    ridges = {b.ridge.id: b.ridge for b in belts(V)}
    return {
        "version": GRAPH_VERSION,
        "dim": V.dim,
        "nodes": [{"id": f"F{fc.id}", "generators": list(fc.indices)} for fc in graph.vertices],
        "edges": [
            {"source": f"F{i}", "target": f"F{j}", "ridges": [list(ridges[r].indices) for r in rs]}
            for (i, j), rs in graph.edges.items()
        ],
    }


def graph_dot(V: GeneratorSet) -> str:
    data = graph_json(V)
    lines = ["graph belts {"]
    for node in data["nodes"]:
        lines.append(f'  {node["id"]} [label="{_fmt_set(node["generators"])}"];')
    for e in data["edges"]:
        label = " ".join(_fmt_set(r) for r in e["ridges"])
        lines.append(f'  {e["source"]} -- {e["target"]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_graph(args) -> int:
    V = _load(args.file, args.reduce)
    if args.format == "dot":
        sys.stdout.write(graph_dot(V))
    else:
        print(json.dumps(graph_json(V), indent=1))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zonobelt", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="generator file ('-' for stdin)")
        sp.add_argument("--reduce", action="store_true",
                        help="rewrite rank-deficient input in coordinates of its span")
        sp.set_defaults(func=func)
        return sp

    with_file("check", cmd_check, "space-filling test with per-ridge direction counts")
    with_file("facets", cmd_facets, "list facet classes")
    with_file("belts", cmd_belts, "list belts")
    sp = with_file("distance", cmd_distance, "belt distance and a shortest belt path")
    sp.add_argument("--from", dest="source", required=True, help="class id (F3) or generator list (0,1,4)")
    sp.add_argument("--to", dest="target", required=True)
    with_file("diameter", cmd_diameter, "belt diameter, an attaining pair, and the bound check")
    sp = with_file("normal-form", cmd_normal_form, "0/1 normal form of a conjugated pair")
    sp.add_argument("--e", required=True, help="comma-separated generator indices of E")
    sp.add_argument("--f", required=True, help="comma-separated generator indices of F")
    sp = with_file("export-graph", cmd_export_graph, "belt graph as DOT or JSON")
    sp.add_argument("--format", choices=("dot", "json"), default="dot")

    sp = sub.add_parser("catalog", help="named examples ('list' to enumerate)")
    sp.add_argument("name")
    sp.add_argument("--emit", action="store_true", help="print only the generator file")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("search", help="scan 0/1 normal forms in dimension d")
    sp.add_argument("--dim", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--full", action="store_true", help="every 0/1 matrix, no reductions")
    mode.add_argument("--spot", metavar="BITS", help="a single matrix, row-major bits")
    sp.add_argument("--no-symmetry", action="store_true",
                    help="keep the row filter but skip orbit reduction")
    sp.add_argument("--checkpoint", help="checkpoint JSON path (resumed if present)")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--stop-after", type=int, help="stop after this many matrices (resumable)")
    sp.add_argument("--reproducer", help="where to dump a bound-violating matrix")
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ZonobeltError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

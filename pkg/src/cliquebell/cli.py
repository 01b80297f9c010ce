"""Command-line front end: ``cliquebell {table,bell,enumerate,bijection,verify}``.

Exit codes: 0 success, 1 failed check or invalid object, 2 usage/configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from . import crosscheck
from . import exact_numbers as en
from .clique_colourings import Colouring, build_family, is_proper, iter_colourings, parse_sizes
from .eulerian_digraphs import (
    DigraphError,
    LabelledEulerianDigraph,
    colouring_to_digraph,
    digraph_to_colouring,
    iter_digraphs,
    to_dot,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_FAIL):
        super().__init__(message)
        self.code = code


# -- rendering ---------------------------------------------------------------

def render_triangle(rows: Dict[int, Dict[int, int]], fmt: str, label: str) -> str:
    ks = sorted({k for row in rows.values() for k in row})
    if fmt == "json":
        return json.dumps({"family": label,
                           "rows": {str(n): {str(k): v for k, v in sorted(row.items())}
                                    for n, row in rows.items()}}) + "\n"
    cells = [[str(n)] + [str(row[k]) if k in row else "" for k in ks] for n, row in rows.items()]
    header = ["n"] + [f"k={k}" for k in ks]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join([label] + header[1:]) + " |",
                 "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(r) + " |" for r in cells]
        return "\n".join(lines) + "\n"
    if fmt == "text":
        widths = [max(len(r[c]) for r in [header] + cells) for c in range(len(header))]
        return "\n".join(" ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip()
                         for r in [header] + cells) + "\n"
    raise CliError(f"format {fmt!r} not supported for tables", EXIT_USAGE)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------

def cmd_table(args) -> int:
    r, s, n_max = args.r, args.s, args.n_max
    if r is None or s is None:
        raise CliError("table needs --r and --s", EXIT_USAGE)
    if s < 1 or r < s:
        raise CliError(f"need r >= s >= 1, got r={r}, s={s}", EXIT_USAGE)
    if n_max < 1:
        raise CliError("--n-max must be positive", EXIT_USAGE)
    rows = {}
    for n in range(1, n_max + 1):
        row = {k: v for k, v in en.gen_stirling_row(r, s, n).items() if v}
        if r == s and row != en.stirling_mm_row(r, n):
            raise CliError(f"routes disagree on S_{{{r},{s}}}({n}, k)")
        rows[n] = row
    _emit(render_triangle(rows, args.format, f"S_{{{r},{s}}}(n,k)"), args.output)
    return EXIT_OK


def cmd_bell(args) -> int:
    if args.m is None or args.m < 1:
        raise CliError("bell needs --m >= 1", EXIT_USAGE)
    values = [en.bell_mm(args.m, n) for n in range(1, args.n_max + 1)]
    if args.format == "json":
        text = json.dumps({"m": args.m, "values": values}) + "\n"
    elif args.format == "csv":
        text = "n,value\n" + "".join(f"{n},{v}\n" for n, v in enumerate(values, 1))
    else:
        text = ", ".join(map(str, values)) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def _family_from(args):
    if not args.cliques:
        raise CliError("--cliques is required", EXIT_USAGE)
    try:
        return build_family(parse_sizes(args.cliques))
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def cmd_enumerate(args) -> int:
    family = _family_from(args)
    fmt = args.format
    if args.kind == "colourings":
        if fmt not in ("text", "json"):
            raise CliError(f"format {fmt!r} not supported for colourings", EXIT_USAGE)
        stream = iter_colourings(family, args.k)
        line = (lambda c: c.to_text()) if fmt == "text" else (lambda c: c.to_json())
    else:
        if fmt not in ("text", "json", "dot"):
            raise CliError(f"format {fmt!r} not supported for digraphs", EXIT_USAGE)
        stream = iter_digraphs(family.sizes, args.k)
        if fmt == "dot":
            return _write_dot(stream, args.output)
        line = (lambda d: d.to_json())
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        for obj in stream:
            out.write(line(obj) + "\n")
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def _write_dot(stream, output: Optional[str]) -> int:
    if output:
        folder = Path(output)
        folder.mkdir(parents=True, exist_ok=True)
        for idx, d in enumerate(stream, 1):
            (folder / f"digraph_{idx:05d}.dot").write_text(to_dot(d, f"G{idx}"), encoding="utf-8")
    else:
        for idx, d in enumerate(stream, 1):
            sys.stdout.write(to_dot(d, f"G{idx}"))
    return EXIT_OK


def _read_json(path: Optional[str]):
    text = Path(path).read_text(encoding="utf-8") if path else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"input is not valid JSON: {exc}", EXIT_USAGE) from None


def cmd_bijection(args) -> int:
    obj = _read_json(args.input)
    try:
        if args.direction == "to-digraph":
            c = Colouring.from_json_obj(obj)
            if args.cliques:
                family = _family_from(args)
            else:
                top: Dict[int, int] = {}
                for block in c.blocks:
                    for v in block:
                        top[v.i] = max(top.get(v.i, 0), v.j)
                family = build_family([top[i] for i in range(1, max(top) + 1)]) if top else None
            if family is None or not is_proper(family, c):
                raise CliError("input is not a proper colouring of the clique family")
            result = colouring_to_digraph(family, c).to_json()
        else:
            d = LabelledEulerianDigraph.from_json_obj(obj)
            family = _family_from(args) if args.cliques else build_family(d.sizes)
            result = digraph_to_colouring(family, d).to_json()
    except (DigraphError, ValueError) as exc:
        raise CliError(str(exc)) from None
    _emit(result + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = list(crosscheck.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in suites:
        if name == "oeis":
            try:
                fixtures = crosscheck.load_fixtures(args.fixtures)
            except crosscheck.FixtureError as exc:
                raise CliError(str(exc), EXIT_USAGE) from None
            reports.append(crosscheck.run_oeis(fixtures, args.n_max or 10))
        elif name == "bijection":
            reports.append(crosscheck.run_bijection(args.max_vertices))
        else:
            reports.append(crosscheck.run_tables(args.n_max or 5))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = json.dumps({"passed": ok, "suites": [r.as_dict() for r in reports]}, indent=2) + "\n"
    else:
        lines = []
        for r in reports:
            for c in r.checks:
                tail = f"  ({c.detail})" if c.detail and not c.passed else ""
                lines.append(f"{'PASS' if c.passed else 'FAIL'}  {r.suite}: {c.name}{tail}")
        lines.append("all checks passed" if ok else "verification FAILED")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquebell",
        description="Generalized Bell/Stirling numbers, clique colourings and labelled Eulerian digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the S_{r,s}(n,k) triangle")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--format", choices=["csv", "json", "markdown", "text"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bell", help="print B_{m,m}(n) for n = 1..n-max")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--format", choices=["csv", "json", "text"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("enumerate", help="stream colourings or digraphs of a clique family")
    p.add_argument("kind", choices=["colourings", "digraphs"])
    p.add_argument("--cliques", required=True, help="comma separated clique sizes, e.g. 3,3")
    p.add_argument("--k", type=int, help="only objects with k colour classes / vertices")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--output", help="output file; for dot, a directory with one file per digraph")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bijection", help="map a colouring to its digraph or back (JSON)")
    p.add_argument("direction", choices=["to-digraph", "to-colouring"])
    p.add_argument("--input", help="JSON file (default: stdin)")
    p.add_argument("--cliques")
    p.add_argument("--output")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["tables", "oeis", "bijection", "all"])
    p.add_argument("--n-max", type=int)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--fixtures", help="fixture directory (default: bundled)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"cliquebell: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface: generate, compose, pack, verify, tabulate.

Stdout carries the requested artifact (edge list, packing record, report,
table) and is byte-identical across runs of the same command; a one-line run
record with wall time goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .cartesian import cartesian_bound, pack_cartesian
from .core import (ContractError, EdgeSet, FamilySpec, Graph, InputError,
                   ParameterError, ParseError, SizeError, TreePacking,
                   UnsupportedOperationError, complete, complete_multipartite,
                   cycle, generate, hypercube, path, read_graph, sort_edges,
                   write_graph)
from .lex import lex_bound, pack_lex
from .oracle import max_packing
from .products import (CARTESIAN, LEXICOGRAPHIC, cartesian, lexicographic,
                       write_product)
from .verify import verify_packing

USAGE_ERRORS = (ParameterError, ParseError, InputError, ContractError,
                SizeError, UnsupportedOperationError, OSError,
                json.JSONDecodeError)

FAMILY_CLI_NAMES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "multipartite": "complete_multipartite",
    "hypercube": "hypercube",
    "complete-minus-edge": "complete_minus_edge",
}


@dataclass
class RunRecord:
    command: str
    inputs: list[str]
    outputs: dict[str, Any]
    verified: bool | None
    wall_time_s: float

    def emit(self) -> None:
        record = {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "verified": self.verified,
            "wall_time_s": round(self.wall_time_s, 3),
        }
        print(json.dumps(record, sort_keys=True), file=sys.stderr)


def _dump(record: Any) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _write_out(path_: str, text: str) -> None:
    with open(path_, "w", encoding="utf-8") as fh:
        fh.write(text)


def _read_graph_file(path_: str) -> Graph:
    with open(path_, "r", encoding="utf-8") as fh:
        return read_graph(fh.read())


def _graph_record(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}


def _packing_record(graph_ref: str, packing: TreePacking, bound: int,
                    verified: bool) -> dict[str, Any]:
    return {
        "graph": graph_ref,
        "method": packing.method,
        "bound": bound,
        "trees": [[list(e) for e in t] for t in packing.trees],
        "verified": verified,
    }


def _load_packing(path_: str, host: Graph, validate: bool) -> TreePacking:
    with open(path_, "r", encoding="utf-8") as fh:
        record = json.load(fh)
    trees = []
    for raw in record["trees"]:
        edges = sort_edges((int(a), int(b)) for a, b in raw)
        if validate:
            trees.append(EdgeSet.of(host, edges))
        else:
            trees.append(EdgeSet(host, edges))
    return TreePacking(host, tuple(trees), str(record.get("method", "user")))


def cmd_gen(args: argparse.Namespace) -> int:
    kind = FAMILY_CLI_NAMES[args.family]
    g = generate(FamilySpec(kind, tuple(args.params)))
    text = write_graph(g, [f"family {args.family} {' '.join(map(str, args.params))}"])
    if args.out:
        _write_out(args.out, text)
    else:
        sys.stdout.write(text if args.format == "text" else _dump(_graph_record(g)) + "\n")
    RunRecord("gen", [args.family] + [str(p) for p in args.params],
              {"n": g.n, "m": g.m, "out": args.out}, None,
              time.perf_counter() - args.t0).emit()
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    g = _read_graph_file(args.fileG)
    h = _read_graph_file(args.fileH)
    p = cartesian(g, h) if args.kind == CARTESIAN else lexicographic(g, h)
    text = write_product(p)
    if args.out:
        _write_out(args.out, text)
    else:
        if args.format == "text":
            sys.stdout.write(text)
        else:
            record = {"kind": p.kind, "n1": p.n1, "n2": p.n2}
            record.update(_graph_record(p.graph))
            sys.stdout.write(_dump(record) + "\n")
    RunRecord("product", [args.kind, args.fileG, args.fileH],
              {"n": p.graph.n, "m": p.graph.m, "out": args.out}, None,
              time.perf_counter() - args.t0).emit()
    return 0


def _factor_packings(args: argparse.Namespace, g: Graph,
                     h: Graph) -> tuple[TreePacking, TreePacking]:
    overrides = args.factor_packing or []
    if len(overrides) > 2:
        raise InputError("--factor-packing may be given at most twice (G then H)")
    pg = (_load_packing(overrides[0], g, validate=True)
          if len(overrides) >= 1 else max_packing(g).packing)
    ph = (_load_packing(overrides[1], h, validate=True)
          if len(overrides) >= 2 else max_packing(h).packing)
    return pg, ph


def cmd_pack(args: argparse.Namespace) -> int:
    g = _read_graph_file(args.fileG)
    h = _read_graph_file(args.fileH)
    pg, ph = _factor_packings(args, g, h)
    if args.kind == CARTESIAN:
        packed = pack_cartesian(g, h, pg, ph)
        product = cartesian(g, h)
        bound = cartesian_bound(len(pg.trees), len(ph.trees))
    else:
        packed = pack_lex(g, h, pg, ph)
        product = lexicographic(g, h)
        bound = lex_bound(len(pg.trees), len(ph.trees), g.n, h.n)[1]
    verified = verify_packing(product.graph, packed).overall
    graph_ref = "-"
    if args.out:
        graph_ref = os.path.basename(args.out) + ".graph"
        _write_out(args.out + ".graph", write_product(product))
    record = _packing_record(graph_ref, packed, bound, verified)
    if args.out:
        _write_out(args.out, _dump(record) + "\n")
    else:
        if args.format == "text":
            sys.stdout.write(
                f"packed {args.kind} product: {len(packed.trees)} trees "
                f"(bound {bound}), verified={str(verified).lower()}\n")
        else:
            sys.stdout.write(_dump(record) + "\n")
    RunRecord("pack", [args.kind, args.fileG, args.fileH],
              {"trees": len(packed.trees), "bound": bound, "out": args.out},
              verified, time.perf_counter() - args.t0).emit()
    return 0 if verified else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph_file(args.file)
    result = max_packing(g)
    verified = verify_packing(g, result.packing).overall
    record = {
        "sigma": result.sigma,
        "certificate": {
            "partition": [list(b) for b in result.certificate.partition],
            "crossing_count": result.certificate.crossing_count,
            "bound": result.certificate.bound,
        },
        "packing": _packing_record(args.file, result.packing,
                                   result.sigma, verified),
    }
    if args.out:
        _write_out(args.out, _dump(record) + "\n")
    if args.format == "text":
        cert = result.certificate
        sys.stdout.write(
            f"sigma = {result.sigma}\n"
            f"certificate: {len(cert.partition)} blocks, "
            f"{cert.crossing_count} crossing edges, bound {cert.bound}\n"
            f"packing: {len(result.packing.trees)} trees, "
            f"verified={str(verified).lower()}\n")
    else:
        sys.stdout.write(_dump(record) + "\n")
    RunRecord("oracle", [args.file],
              {"sigma": result.sigma, "bound": result.certificate.bound},
              verified, time.perf_counter() - args.t0).emit()
    return 0 if verified else 1


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph_file(args.graphfile)
    packing = _load_packing(args.packingfile, g, validate=False)
    report = verify_packing(g, packing)
    if args.format == "text":
        sys.stdout.write(report.render() + "\n")
    else:
        sys.stdout.write(_dump(report.to_record()) + "\n")
    RunRecord("verify", [args.graphfile, args.packingfile],
              {"trees": len(packing.trees)}, report.overall,
              time.perf_counter() - args.t0).emit()
    return 0 if report.overall else 1


@dataclass(frozen=True)
class TableRow:
    label: str
    kind: str | None          # cartesian | lex | None (plain graph)
    make_g: Callable[[], Graph]
    make_h: Callable[[], Graph] | None
    closed: int | None        # catalogued exact value, if any
    expect_tight: bool | None  # None: no expectation enforced


def _table_rows() -> list[TableRow]:
    return [
        TableRow("P3 x P3", CARTESIAN, lambda: path(3), lambda: path(3), 1, True),
        TableRow("P4 x P4", CARTESIAN, lambda: path(4), lambda: path(4), 1, True),
        TableRow("P5 x P5", CARTESIAN, lambda: path(5), lambda: path(5), 1, True),
        TableRow("K4 x C3", CARTESIAN, lambda: complete(4), lambda: cycle(3), 2, True),
        TableRow("K4 x C4", CARTESIAN, lambda: complete(4), lambda: cycle(4), 2, True),
        TableRow("K4 x C5", CARTESIAN, lambda: complete(4), lambda: cycle(5), 2, True),
        TableRow("K5 x C4", CARTESIAN, lambda: complete(5), lambda: cycle(4), 3, False),
        TableRow("K4 x K4", CARTESIAN, lambda: complete(4), lambda: complete(4), 3, True),
        TableRow("K4 x K6", CARTESIAN, lambda: complete(4), lambda: complete(6), 4, True),
        TableRow("Q3 x P2", CARTESIAN, lambda: hypercube(3), lambda: path(2), 2, False),
        TableRow("Q4 x P2", CARTESIAN, lambda: hypercube(4), lambda: path(2), 2, True),
        TableRow("K2(2) x K3", CARTESIAN, lambda: complete_multipartite(2, 2),
                 lambda: complete(3), 2, False),
        TableRow("K3(2)", None, lambda: complete_multipartite(3, 2), None, 2, None),
        TableRow("K2 o K2", LEXICOGRAPHIC, lambda: complete(2), lambda: complete(2),
                 2, True),
        TableRow("P3 o K4", LEXICOGRAPHIC, lambda: path(3), lambda: complete(4),
                 4, True),
        TableRow("K5 o P3", LEXICOGRAPHIC, lambda: complete(5), lambda: path(3),
                 None, None),
    ]


def _run_table_row(row: TableRow) -> dict[str, Any]:
    if row.kind is None:
        host = row.make_g()
        bound = None
        verified = None
    else:
        g = row.make_g()
        h = row.make_h()
        pg = max_packing(g).packing
        ph = max_packing(h).packing
        if row.kind == CARTESIAN:
            packed = pack_cartesian(g, h, pg, ph)
            host = cartesian(g, h).graph
        else:
            packed = pack_lex(g, h, pg, ph)
            host = lexicographic(g, h).graph
        bound = len(packed.trees)
        verified = verify_packing(host, packed).overall
    sigma = max_packing(host).sigma

    failures = []
    if verified is False:
        failures.append("verification failed")
    if row.closed is not None and sigma != row.closed:
        failures.append(f"oracle {sigma} != closed form {row.closed}")
    if bound is not None and bound > sigma:
        failures.append(f"bound {bound} exceeds oracle {sigma}")
    if row.expect_tight is True and bound != sigma:
        failures.append(f"expected tight, bound {bound} != oracle {sigma}")

    if bound is None:
        note = "no construction"
    elif bound == sigma:
        note = "tight"
    else:
        note = "bound<sigma"
    return {
        "graph": row.label,
        "closed": row.closed,
        "bound": bound,
        "sigma": sigma,
        "verified": verified,
        "note": note,
        "failures": failures,
    }


def cmd_table(args: argparse.Namespace) -> int:
    rows = [_run_table_row(r) for r in _table_rows()]
    if args.format == "text":
        header = f"{'graph':<12} {'closed':>6} {'bound':>5} {'sigma':>5} {'verified':>8}  note"
        lines = [header, "-" * len(header)]
        for r in rows:
            closed = "-" if r["closed"] is None else str(r["closed"])
            bound = "-" if r["bound"] is None else str(r["bound"])
            ver = "-" if r["verified"] is None else ("yes" if r["verified"] else "NO")
            note = r["note"]
            if r["failures"]:
                note += "  !! " + "; ".join(r["failures"])
            lines.append(f"{r['graph']:<12} {closed:>6} {bound:>5} "
                         f"{r['sigma']:>5} {ver:>8}  {note}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(_dump(rows) + "\n")
    failed = [r["graph"] for r in rows if r["failures"]]
    all_verified = all(r["verified"] is not False for r in rows)
    RunRecord("table", [], {"rows": len(rows), "failed": failed},
              all_verified, time.perf_counter() - args.t0).emit()
    if args.strict and failed:
        print(f"strict: failing rows: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treepack",
        description="Edge-disjoint spanning tree packings of product graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write the primary artifact to this path")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_gen = sub.add_parser("gen", help="generate a named graph family")
    p_gen.add_argument("family", choices=sorted(FAMILY_CLI_NAMES))
    p_gen.add_argument("params", nargs="+", type=int)
    common(p_gen)
    p_gen.set_defaults(func=cmd_gen)

    p_prod = sub.add_parser("product", help="compose two graphs")
    p_prod.add_argument("kind", choices=(CARTESIAN, LEXICOGRAPHIC))
    p_prod.add_argument("fileG")
    p_prod.add_argument("fileH")
    common(p_prod)
    p_prod.set_defaults(func=cmd_product)

    p_pack = sub.add_parser("pack", help="build a spanning tree packing of a product")
    p_pack.add_argument("kind", choices=(CARTESIAN, LEXICOGRAPHIC))
    p_pack.add_argument("fileG")
    p_pack.add_argument("fileH")
    p_pack.add_argument("--factor-packing", action="append", metavar="PATH",
                        help="packing file for a factor; give once for the "
                             "first factor, twice for both")
    common(p_pack)
    p_pack.set_defaults(func=cmd_pack)

    p_oracle = sub.add_parser("oracle", help="exact packing number with certificate")
    p_oracle.add_argument("file")
    common(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify", help="check a packing file against a graph")
    p_verify.add_argument("graphfile")
    p_verify.add_argument("packingfile")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="closed form vs construction vs oracle")
    p_table.add_argument("--strict", action="store_true",
                         help="exit nonzero on any unexpected mismatch")
    common(p_table)
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.t0 = time.perf_counter()
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

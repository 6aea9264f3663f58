"""Command-line interface: exact quiver-algebra invariants, text or JSON output.

Every command wraps its result in a deterministic envelope carrying the
command name, a content digest of the input file, the result object, and any
normalization warnings, so identical inputs and flags produce byte-identical
JSON.

Exit codes: 0 success (for `verify`: all checks pass), 1 verify-check failure,
2 input error, 3 infinite-dimensional algebra, 4 global dimension unresolved
at the degree bound.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from .linalg import Matrix, determinant
from .magnitude import magnitude, verify
from .path_algebra import InfiniteDimensionalError, cartan_matrix, enumerate_paths
from .quiver import QuiverError, parse_quiver_with_warnings, quiver_json_dict, serialize_quiver
from .resolutions import ext_table

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INFINITE_DIMENSIONAL = 3
EXIT_UNRESOLVED = 4


def _read_input(path: str) -> tuple[str, str]:
    with open(path, "rb") as handle:
        data = handle.read()
    digest = hashlib.sha256(data).hexdigest()
    return data.decode("utf-8"), digest


def _emit(args: argparse.Namespace, envelope: dict, text_lines: list[str]) -> None:
    for warning in envelope["warnings"]:
        print(f"warning: {warning}", file=sys.stderr)
    if args.json:
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _matrix_lines(m: Matrix, formatter=str) -> list[str]:
    if m.rows == 0 or m.cols == 0:
        return ["  (empty)"]
    cells = [[formatter(x) for x in row] for row in m.entries]
    widths = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    return ["  " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells]


def _int_matrix_json(m: Matrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in m.entries]


def _load_quiver(args: argparse.Namespace):
    text, digest = _read_input(args.file)
    bq, warnings = parse_quiver_with_warnings(text)
    return bq, digest, warnings


def _envelope(command: str, digest: str, result: dict, warnings: list[str]) -> dict:
    return {"command": command, "input_digest": digest, "result": result, "warnings": warnings}


def cmd_parse(args: argparse.Namespace) -> int:
    bq, digest, warnings = _load_quiver(args)
    envelope = _envelope("parse", digest, {"quiver": quiver_json_dict(bq)}, warnings)
    _emit(args, envelope, serialize_quiver(bq, "text").rstrip("\n").split("\n"))
    return EXIT_OK


def cmd_cartan(args: argparse.Namespace) -> int:
    bq, digest, warnings = _load_quiver(args)
    cartan = cartan_matrix(enumerate_paths(bq))
    det = determinant(cartan)
    result = {"vertices": list(bq.quiver.vertices),
              "cartan_matrix": _int_matrix_json(cartan),
              "determinant": str(det)}
    lines = ["cartan matrix (rows/columns in vertex order "
             + " ".join(bq.quiver.vertices) + "):"]
    lines += _matrix_lines(cartan)
    lines.append(f"determinant: {det}")
    _emit(args, _envelope("cartan", digest, result, warnings), lines)
    return EXIT_OK


def cmd_ext(args: argparse.Namespace) -> int:
    bq, digest, warnings = _load_quiver(args)
    pb = enumerate_paths(bq)
    max_degree = args.max_degree if args.max_degree is not None else pb.total_dim
    table = ext_table(bq, max_degree, pb=pb)
    result = {"vertices": list(bq.quiver.vertices),
              "max_degree": max_degree,
              "tables": [[list(row) for row in grid] for grid in table.tables],
              "global_dimension": (table.global_dimension if table.complete
                                   else f">= {max_degree}")}
    lines = []
    for n, grid in enumerate(table.tables):
        lines.append(f"Ext^{n}:")
        lines += _matrix_lines(Matrix(grid))
    lines.append(f"global dimension: {table.describe_global_dimension()}")
    _emit(args, _envelope("ext", digest, result, warnings), lines)
    return EXIT_OK


def _magnitude_lines(mag) -> list[str]:
    if mag.status == "invertible":
        lines = [f"magnitude: {mag.value} (sum of the entries of the inverse)"]
        lines.append("inverse:")
        lines += _matrix_lines(mag.inverse)
        return lines
    if mag.status == "weighted":
        return [f"magnitude: {mag.value} (weighting-based; matrix singular)",
                "weighting:   " + " ".join(str(x) for x in mag.weighting),
                "coweighting: " + " ".join(str(x) for x in mag.coweighting)]
    return [f"magnitude undefined: {mag.reason}"]


def cmd_magnitude(args: argparse.Namespace) -> int:
    bq, digest, warnings = _load_quiver(args)
    mag = magnitude(cartan_matrix(enumerate_paths(bq)))
    _emit(args, _envelope("magnitude", digest, {"magnitude": mag.to_json_dict()}, warnings),
          _magnitude_lines(mag))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    bq, digest, warnings = _load_quiver(args)
    report = verify(bq, args.max_degree)
    result = {"report": report.to_json_dict()}
    lines = [f"dimension: {report.dimension}",
             f"global dimension: "
             + (str(report.global_dimension) if report.global_dimension is not None
                else f">= {report.max_degree}"),
             f"cartan determinant: {report.cartan_determinant}"]
    lines += _magnitude_lines(report.magnitude)
    if report.euler_form_ss is not None:
        lines.append(f"euler form chi(S,S): {report.euler_form_ss}")
    for check in report.checks:
        lines.append(f"{check.status.upper():4s} {check.name}: {check.detail}")
    lines.append(f"overall: {report.overall}")
    _emit(args, _envelope("verify", digest, result, warnings), lines)
    if report.overall == "fail":
        return EXIT_CHECK_FAILED
    if report.overall == "unresolved":
        return EXIT_UNRESOLVED
    return EXIT_OK


def cmd_paths(args: argparse.Namespace) -> int:
    bq, digest, warnings = _load_quiver(args)
    pb = enumerate_paths(bq)
    vertices = bq.quiver.vertices
    for flag, value in (("--from", args.from_vertex), ("--to", args.to_vertex)):
        if value is not None and value not in bq.quiver.vertex_index:
            raise QuiverError(f"unknown vertex {value!r} in {flag}")
    sources = [args.from_vertex] if args.from_vertex else list(vertices)
    targets = [args.to_vertex] if args.to_vertex else list(vertices)
    explicit = args.from_vertex is not None and args.to_vertex is not None
    pairs = []
    lines = []
    for src in sources:
        for tgt in targets:
            paths = pb.paths(src, tgt)
            if not paths and not explicit:
                continue
            entry = {"source": src, "target": tgt, "count": len(paths)}
            text = f"{src} -> {tgt}: {len(paths)}"
            if not args.count_only:
                entry["paths"] = [list(p.arrows) for p in paths]
                text += "  " + ", ".join(str(p) for p in paths) if paths else ""
            pairs.append(entry)
            lines.append(text)
    result = {"total_dim": pb.total_dim, "pairs": pairs}
    lines.append(f"total dimension: {pb.total_dim}")
    _emit(args, _envelope("paths", digest, result, warnings), lines)
    return EXIT_OK


def _parse_matrix_file(text: str) -> Matrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([Fraction(cell) for cell in line.split()])
        except (ValueError, ZeroDivisionError) as exc:
            raise QuiverError(f"bad matrix entry: {exc}") from None
    if not rows:
        raise QuiverError("empty matrix file")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise QuiverError("rows of unequal length in matrix file")
    return Matrix(rows, width)


def cmd_matrix_magnitude(args: argparse.Namespace) -> int:
    text, digest = _read_input(args.matrix)
    m = _parse_matrix_file(text)
    if not m.is_square():
        raise QuiverError(f"matrix is {m.rows}x{m.cols}, expected square")
    mag = magnitude(m)
    result = {"size": m.rows, "magnitude": mag.to_json_dict()}
    _emit(args, _envelope("matrix-magnitude", digest, result, []), _magnitude_lines(mag))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a JSON envelope instead of text")
    common.add_argument("--max-degree", type=int, default=None, metavar="N",
                        help="resolution degree bound (default: the algebra's dimension)")
    parser = argparse.ArgumentParser(
        prog="quivermag",
        description="Exact Cartan, Euler and magnitude invariants of bound quiver algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, with_file: bool = True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if with_file:
            p.add_argument("file", help="quiver file (text grammar or JSON)")
        p.set_defaults(handler=handler)
        return p

    add("parse", cmd_parse, "validate a quiver file and echo its normal form")
    add("cartan", cmd_cartan, "Cartan matrix and its determinant")
    add("ext", cmd_ext, "Ext dimension tables and global dimension")
    add("magnitude", cmd_magnitude, "magnitude of the category of projectives")
    add("verify", cmd_verify, "check the inverse/magnitude/unimodularity identities")
    paths_p = add("paths", cmd_paths, "list basis paths by source/target pair")
    paths_p.add_argument("--from", dest="from_vertex", default=None, metavar="V",
                         help="restrict to paths starting here")
    paths_p.add_argument("--to", dest="to_vertex", default=None, metavar="V",
                         help="restrict to paths ending here")
    paths_p.add_argument("--count-only", action="store_true",
                         help="report counts without listing paths")
    mm = add("matrix-magnitude", cmd_matrix_magnitude,
             "magnitude of a raw square rational matrix", with_file=False)
    mm.add_argument("--matrix", required=True, metavar="FILE",
                    help="matrix file: one row per line, entries like 2 or -1/3")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except InfiniteDimensionalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFINITE_DIMENSIONAL
    except QuiverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: enumeration listings, sequence tables, coproduct
and shuffle evaluation, primitive bases, character tables, and the bundled
verification suite."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import hopf, linalg, prim, series, symfun, trees
from .freealg import parse_element
from .prim import CellCapExceeded

SCHEMA = 1

EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _bound_arg(text: str):
    if text == "omega":
        return trees.OMEGA
    try:
        value = int(text)
    except ValueError:
        raise CliError(f"invalid bound {text!r}: expected an integer >= 2 or 'omega'")
    if value < 2:
        raise CliError(f"invalid bound {text!r}: finite bounds start at 2")
    return trees.ArityBound(value)


def _labels_arg(text: str, n: int):
    if text == "multilinear":
        return "multilinear"
    labels = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece.startswith("x") or not piece[1:].isdigit() or piece[1:].startswith("0"):
            raise CliError(f"invalid variable {piece!r}: expected x<k> with k >= 1")
        labels.append(int(piece[1:]))
    if len(labels) != n:
        raise CliError(f"--vars lists {len(labels)} variables but --n is {n}")
    return tuple(sorted(labels))


def _emit(args, payload: dict, text_lines, csv_rows=None):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        if csv_rows is None:
            raise CliError("csv output is not available for this command")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line)


def cmd_trees(args):
    shapes = trees.enumerate_shapes(args.n, args.bound)
    payload = {
        "schema": SCHEMA,
        "command": "trees",
        "bound": repr(args.bound),
        "n": args.n,
        "count": len(shapes),
        "trees": [str(t) for t in shapes],
    }
    rows = [["index", "tree"]] + [[i, str(t)] for i, t in enumerate(shapes)]
    _emit(args, payload, [str(t) for t in shapes], rows)
    return EXIT_OK


def cmd_sequences(args):
    m = args.max_degree
    cat = [trees.catalan(n) for n in range(1, m + 1)]
    sup = [trees.super_catalan(n) for n in range(1, m + 1)]
    bnd = series.bounded_tree_counts(args.bound, m)
    catp = series.c_prime_sequence(2, m)
    supp = series.c_prime_sequence(trees.OMEGA, m)
    bndp = series.c_prime_sequence(args.bound, m)
    header = ["n", "catalan", "super_catalan", "c_bounded", "log_catalan",
              "log_super_catalan", "log_c_bounded"]
    table = [
        [n, cat[n - 1], sup[n - 1], bnd[n - 1], catp[n - 1], supp[n - 1], bndp[n - 1]]
        for n in range(1, m + 1)
    ]
    payload = {
        "schema": SCHEMA,
        "command": "sequences",
        "bound": repr(args.bound),
        "max_degree": m,
        "columns": header,
        "rows": table,
    }
    lines = ["\t".join(header)] + ["\t".join(str(v) for v in row) for row in table]
    _emit(args, payload, lines, [header] + table)
    return EXIT_OK


def cmd_coproduct(args):
    e = parse_element(args.element, args.bound)
    result = hopf.coproduct(e)
    payload = {
        "schema": SCHEMA,
        "command": "coproduct",
        "bound": repr(args.bound),
        "input": str(e),
        "result": str(result),
    }
    _emit(args, payload, [str(result)])
    return EXIT_OK


def cmd_shuffle(args):
    f = parse_element(args.left, args.bound)
    g = parse_element(args.right, args.bound)
    result = hopf.shuffle(f, g)
    payload = {
        "schema": SCHEMA,
        "command": "shuffle",
        "bound": repr(args.bound),
        "left": str(f),
        "right": str(g),
        "result": str(result),
    }
    _emit(args, payload, [str(result)])
    return EXIT_OK


def cmd_prim(args):
    labels = _labels_arg(args.vars, args.n) if args.vars else "multilinear"
    basis = prim.primitive_basis(args.n, args.bound, labels, args.cell_cap)
    payload = {
        "schema": SCHEMA,
        "command": "prim",
        "bound": repr(args.bound),
        "n": args.n,
        "labels": "multilinear" if labels == "multilinear" else [f"x{k}" for k in labels],
        "dimension": basis.dimension,
        "basis": [str(v) for v in basis.vectors],
    }
    lines = [f"dimension {basis.dimension}"] + [str(v) for v in basis.vectors]
    rows = [["index", "element"]] + [[i, str(v)] for i, v in enumerate(basis.vectors)]
    _emit(args, payload, lines, rows)
    return EXIT_OK


def cmd_character(args):
    if args.oracle:
        values = prim.character(args.n, args.bound, args.cell_cap)
        f = symfun.character_to_symfunc(values)
    else:
        f = symfun.ch_prim(args.n, args.bound)
    schur = symfun.to_schur(f)
    text = symfun.format_schur(schur)
    payload = {
        "schema": SCHEMA,
        "command": "character",
        "bound": repr(args.bound),
        "n": args.n,
        "oracle": bool(args.oracle),
        "power_sums": str(f),
        "schur": {",".join(str(p) for p in lam): str(c) for lam, c in sorted(schur.items())},
    }
    rows = [["partition", "multiplicity"]] + [
        [",".join(str(p) for p in lam), str(c)] for lam, c in sorted(schur.items())
    ]
    _emit(args, payload, [text], rows)
    return EXIT_OK


def _verify_checks(args):
    deep = args.deep
    yield (
        "sequence tables",
        lambda: [trees.catalan(n) for n in range(1, 10)]
        == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
        and [trees.super_catalan(n) for n in range(1, 11)]
        == [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049]
        and series.c_prime_sequence(2, 10)
        == [1, 1, 4, 13, 46, 166, 610, 2269, 8518, 32206],
    )
    yield (
        "series identities",
        lambda: series.prim_generating_series(2, 10) == series.prim_closed_form(2, 10)
        and series.prim_generating_series(trees.OMEGA, 10)
        == series.prim_closed_form(trees.OMEGA, 10)
        and [int(c) for c in series.catalan_closed_form(9).coeffs[1:]]
        == [trees.catalan(n) for n in range(1, 10)]
        and [int(c) for c in series.super_catalan_closed_form(10).coeffs[1:]]
        == [trees.super_catalan(n) for n in range(1, 11)],
    )
    hopf_deg = 5 if deep else 4
    yield (
        "coproduct axioms",
        lambda: hopf.verify_hopf_axioms(2, 2, hopf_deg).ok
        and hopf.verify_hopf_axioms(trees.OMEGA, 2, 3 if not deep else 4).ok,
    )

    def dims_ok():
        top = 5 if deep else 4
        for n in range(2, top + 1):
            if prim.primitive_dimension(n, 2) != prim.prim_dim_formula(n, 2):
                return False
        for n in range(2, 5):
            if prim.primitive_dimension(n, trees.OMEGA) != prim.prim_dim_formula(
                n, trees.OMEGA
            ):
                return False
        return True

    yield ("primitive dimension formula", dims_ok)

    def pbw_ok():
        b = trees.ArityBound(2)
        for n in range(2, 5):
            basis = prim.primitive_basis(n, b, "multilinear")
            comp = prim.pbw_complement_basis(n, b, "multilinear")
            vectors = [v.terms for v in basis.vectors] + [v.terms for v in comp]
            if linalg.rank_of_vectors(vectors) != trees.catalan(n) * math.factorial(n):
                return False
        return True

    yield ("shuffle complement spans", pbw_ok)

    def schur_ok():
        tables = {
            (3, 2): {(3,): 1, (2, 1): 3, (1, 1, 1): 1},
            (4, 2): {(4,): 3, (3, 1): 10, (2, 2): 6, (2, 1, 1): 10, (1, 1, 1, 1): 3},
            (3, None): {(3,): 2, (2, 1): 5, (1, 1, 1): 2},
            (4, None): {(4,): 8, (3, 1): 25, (2, 2): 16, (2, 1, 1): 25, (1, 1, 1, 1): 8},
        }
        for (n, bv), want in tables.items():
            b = trees.OMEGA if bv is None else trees.ArityBound(bv)
            got = symfun.to_schur(symfun.ch_prim(n, b))
            if {k: int(v) for k, v in got.items()} != want:
                return False
        return True

    yield ("Schur tables", schur_ok)

    def character_ok():
        top = 4 if deep else 3
        for n in range(2, top + 1):
            oracle = symfun.character_to_symfunc(prim.character(n, 2))
            if oracle != symfun.ch_prim(n, 2):
                return False
        return True

    yield ("character oracle", character_ok)
    yield ("arity-4 description", lambda: prim.verify_degree4_description().ok)


def cmd_verify(args):
    if args.format == "csv":
        raise CliError("csv output is not available for verify")
    results = []
    ok_all = True
    for name, check in _verify_checks(args):
        try:
            ok = bool(check())
        except CellCapExceeded:
            raise
        results.append((name, ok))
        ok_all = ok_all and ok
        if args.format == "text":
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "verify",
            "deep": bool(args.deep),
            "checks": [{"name": n, "ok": ok} for n, ok in results],
            "ok": ok_all,
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "text":
        print(f"{'PASS' if ok_all else 'FAIL'}  overall")
    return EXIT_OK if ok_all else EXIT_MATH_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--bound", default="2", help="arity bound: 2, 3, ... or omega")
    common.add_argument("--cell-cap", type=int, default=prim.DEFAULT_CELL_CAP)
    common.add_argument(
        "--threads", type=int, default=1, help="accepted; output never depends on it"
    )
    common.add_argument("--seed", type=int, default=0, help="seed for randomized extras")

    parser = argparse.ArgumentParser(
        prog="magtree",
        description="Exact computations in free algebras over planar trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_trees = sub.add_parser("trees", parents=[common], help="list tree shapes of one degree")
    p_trees.add_argument("--n", type=int, required=True)
    p_trees.set_defaults(func=cmd_trees)

    p_seq = sub.add_parser(
        "sequences", parents=[common], help="tree-count sequences and log derivatives"
    )
    p_seq.add_argument("--max-degree", type=int, default=10)
    p_seq.set_defaults(func=cmd_sequences)

    p_cop = sub.add_parser(
        "coproduct", parents=[common], help="diagonal coproduct of an element literal"
    )
    p_cop.add_argument("element")
    p_cop.set_defaults(func=cmd_coproduct)

    p_shuf = sub.add_parser(
        "shuffle", parents=[common], help="shuffle product of two element literals"
    )
    p_shuf.add_argument("left")
    p_shuf.add_argument("right")
    p_shuf.set_defaults(func=cmd_shuffle)

    p_prim = sub.add_parser("prim", parents=[common], help="basis of a primitive component")
    p_prim.add_argument("--n", type=int, required=True)
    p_prim.add_argument("--vars", help='label multiset like "x1,x1,x2"; default multilinear')
    p_prim.set_defaults(func=cmd_prim)

    p_char = sub.add_parser(
        "character", parents=[common], help="Schur table of a primitive component"
    )
    p_char.add_argument("--n", type=int, required=True)
    p_char.add_argument("--oracle", action="store_true", help="use the kernel character")
    p_char.set_defaults(func=cmd_character)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run the bundled verification checks"
    )
    p_verify.add_argument("--deep", action="store_true", help="larger degrees (minutes)")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.bound = _bound_arg(args.bound)
        if args.threads < 1:
            raise CliError("--threads must be >= 1")
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except CellCapExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

    homyd check FILE [--suite all|algebra|coalgebra|hopf|yd|tcat]
                     [--seed N] [--report text|json]
    homyd braid FILE -m NAME -n NAME [--out csv|json]
    homyd demo h4 [--c Q] [--cp Q] [--cpp Q] [--out csv|json]

Exit codes: 0 when every identity passes, 1 when any fails, 2 on a
parse or resolution diagnostic.

Matrices act on column coordinate vectors, so in CSV/JSON output the
column j holds the image of the j-th domain basis vector; the table
convention that lists one source vector per row is the transpose of what
is emitted here (the demo prints a reminder on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .defformat import (
    DefinitionError,
    SuiteError,
    SUITES,
    parse_definition,
    resolve_definition,
    run_checks,
)
from .h4_library import H4Params, ZeroParameter, build_h4, build_h4_yd_table
from .t_category import braiding


def render_text_report(report):
    lines = ["suite: %s" % report.suite, "seed: %d" % report.seed]
    for item in report.items:
        status = "pass" if item.passed else "FAIL"
        lines.append("[%s] %s  --  %s" % (status, item.identity, item.law))
        if item.witness is not None:
            w = item.witness
            lines.append("       at %s (indices %s)" % (",".join(map(str, w.labels)), list(w.inputs)))
            lines.append("       lhs: %s" % " ".join(str(x) for x in w.lhs))
            lines.append("       rhs: %s" % " ".join(str(x) for x in w.rhs))
    bad = len(report.failures())
    lines.append("%d identities checked, %d failing" % (len(report.items), bad))
    return "\n".join(lines) + "\n"


def report_to_dict(report):
    items = []
    for item in report.items:
        entry = {
            "id": item.identity,
            "paper_ref": item.law,
            "status": "pass" if item.passed else "fail",
        }
        if item.witness is not None:
            entry["witness"] = {
                "inputs": list(item.witness.inputs),
                "labels": list(item.witness.labels),
                "lhs": [str(x) for x in item.witness.lhs],
                "rhs": [str(x) for x in item.witness.rhs],
            }
        items.append(entry)
    return {"suite": report.suite, "seed": report.seed, "items": items}


def render_json_report(report):
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def matrix_to_csv(matrix):
    buf = io.StringIO()
    writer = csv.writer(buf)
    for i in range(matrix.rows):
        writer.writerow([str(x) for x in matrix.row(i)])
    return buf.getvalue()


def _pair_dict(pair):
    def rows(m):
        return [[str(m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)]

    return {"a": rows(pair[0].matrix), "b": rows(pair[1].matrix)}


def braiding_to_dict(b):
    m, n = b.source
    tgt_first, tgt_second = b.target
    mat = b.matrix
    return {
        "convention": "columns hold images of domain basis vectors; "
                      "the row-per-source table is the transpose",
        "rows": mat.rows,
        "cols": mat.cols,
        "domain_basis": ["%s(x)%s" % (a, c) for a in m.basis for c in n.basis],
        "codomain_basis": ["%s(x)%s" % (a, c) for a in tgt_first.basis for c in tgt_second.basis],
        "source": {
            "m": m.name,
            "n": n.name,
            "m_pair": _pair_dict(m.pair),
            "n_pair": _pair_dict(n.pair),
        },
        "target_pair": _pair_dict((tgt_first.pair_a, tgt_first.pair_b)),
        "matrix": [[str(mat.entry(i, j)) for j in range(mat.cols)] for i in range(mat.rows)],
    }


def matrix_from_json(text):
    """Inverse of the JSON emission, for round-tripping."""
    from .exactlin import LinearMap

    data = json.loads(text)
    entries = [Fraction(x) for row in data["matrix"] for x in row]
    return LinearMap(data["rows"], data["cols"], entries)


def emit_braiding(resolved, m_name, n_name, out_format="csv"):
    """Serialized braiding matrix of two named modules from a resolved file.

    CSV is row-major with exact rationals as integer or p/q strings; JSON
    carries basis labels and the source/target component pairs alongside
    the matrix.
    """
    kind_m, mod_m = resolved.get(m_name)
    kind_n, mod_n = resolved.get(n_name)
    if kind_m != "ydmodule" or kind_n != "ydmodule":
        raise SuiteError("braiding needs two ydmodule sections, got %s and %s" % (kind_m, kind_n))
    if mod_m.over is not mod_n.over and not mod_m.over.equal_tables(mod_n.over):
        raise SuiteError("modules %r and %r are over different algebras" % (m_name, n_name))
    b = braiding(mod_m, mod_n)
    if out_format == "csv":
        return matrix_to_csv(b.matrix)
    return json.dumps(braiding_to_dict(b), indent=2) + "\n"


def _emit_braiding(b, out_format, stream):
    if out_format == "csv":
        stream.write(matrix_to_csv(b.matrix))
    else:
        stream.write(json.dumps(braiding_to_dict(b), indent=2) + "\n")


def cmd_check(args):
    try:
        text = open(args.file, "r", encoding="utf-8").read()
        report = run_checks(parse_definition(text), args.suite, seed=args.seed)
    except DefinitionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    out = render_json_report(report) if args.report == "json" else render_text_report(report)
    sys.stdout.write(out)
    return 0 if report.ok() else 1


def cmd_braid(args):
    try:
        text = open(args.file, "r", encoding="utf-8").read()
        resolved = resolve_definition(parse_definition(text))
        out = emit_braiding(resolved, args.m, args.n, args.out)
    except DefinitionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


def cmd_demo(args):
    if args.what != "h4":
        print("error: unknown demo %r" % args.what, file=sys.stderr)
        return 2
    try:
        params = H4Params(Fraction(args.c), Fraction(args.cp), Fraction(args.cpp))
        h = build_h4(params.c)
        m = build_h4_yd_table("H4A", params, h=h)
        n = build_h4_yd_table("H4B", params, h=h)
    except (ZeroParameter, ZeroDivisionError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    b = braiding(m, n)
    _emit_braiding(b, args.out, sys.stdout)
    print(
        "note: columns are images of basis vectors; transpose for the "
        "row-per-source table.",
        file=sys.stderr,
    )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="homyd",
        description="Exact checks for twisted Hopf structures and their braidings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run an identity suite over a definition file")
    p_check.add_argument("file")
    p_check.add_argument("--suite", choices=SUITES, default="all")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--report", choices=("text", "json"), default="text")
    p_check.set_defaults(func=cmd_check)

    p_braid = sub.add_parser("braid", help="emit the braiding matrix of two modules")
    p_braid.add_argument("file")
    p_braid.add_argument("-m", required=True, help="first ydmodule section name")
    p_braid.add_argument("-n", required=True, help="second ydmodule section name")
    p_braid.add_argument("--out", choices=("csv", "json"), default="csv")
    p_braid.set_defaults(func=cmd_braid)

    p_demo = sub.add_parser("demo", help="built-in demonstration families")
    p_demo.add_argument("what", choices=("h4",))
    p_demo.add_argument("--c", default="1")
    p_demo.add_argument("--cp", default="2")
    p_demo.add_argument("--cpp", default="3")
    p_demo.add_argument("--out", choices=("csv", "json"), default="csv")
    p_demo.set_defaults(func=cmd_demo)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

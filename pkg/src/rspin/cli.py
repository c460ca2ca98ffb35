"""Command-line front end.

Exit codes: 0 success/PASS, 1 usage or domain error, 2 check FAIL, 3 scale limit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from . import __version__
from . import graphs as ga
from .axioms import SUITES, run_suite
from .correlators import parse_insertion, theory
from .errors import DomainError, ScaleLimitError
from .euler_class import admissible_four_tuples, four_point_class_degree
from .frobenius import prepotential
from .polynomial import frac_str
from .state_space import Sector, degree, from_rspin, state_space, to_rspin

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_SCALE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: error: %s" % (self.prog, message))


def _int_list(text: str) -> List[int]:
    if text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers, got %r" % text) from None


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def build_parser() -> Parser:
    p = Parser(prog="rspin", description="Exact genus-zero r-spin / A_{r-1} computations.")
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    s = sub.add_parser("sectors", help="list the mu_r sectors and the state space")
    s.add_argument("--r", type=int, required=True)

    s = sub.add_parser("translate", help="translate between sector exponents k and r-spin labels m")
    s.add_argument("--r", type=int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--m", type=int)

    s = sub.add_parser("selection", help="selection rule and bundle degree")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--g", type=int, default=0)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=_int_list, help="sector exponents, comma separated")
    g.add_argument("--m", type=_int_list, help="r-spin labels, comma separated")

    s = sub.add_parser("dimension", help="virtual dimension D and homological degree d")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--g", type=int, default=0)
    s.add_argument("--alpha", type=int, default=1)
    s.add_argument("--m", type=_int_list, required=True)

    s = sub.add_parser("graphs", help="validate a graph file or enumerate decorated stable graphs")
    s.add_argument("--graph", metavar="FILE")
    s.add_argument("--r", type=int)
    s.add_argument("--g", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--nonempty", action="store_true", help="only graphs obeying the selection rule at each vertex")

    s = sub.add_parser("potential", help="genus-zero primary potential as JSON")
    s.add_argument("--r", type=int, required=True)

    s = sub.add_parser("correlator", help="a genus-zero correlator, or a CSV table of them")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--insert", action="append", default=[], metavar="A:M")
    s.add_argument("--table", action="store_true")
    s.add_argument("--n", type=int, default=5, help="table: maximal number of insertions")
    s.add_argument("--order", type=int, default=2, help="table: maximal total descendant order")

    s = sub.add_parser("fourpoint", help="four-point values from both engines, as CSV")
    s.add_argument("--r", type=int, required=True)

    s = sub.add_parser("check", help="run a verification suite")
    s.add_argument("--suite", choices=SUITES, default="all")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--order", type=int, default=6)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    return p


# ---------------------------------------------------------------------------


def cmd_sectors(args) -> tuple:
    space = state_space(args.r)
    rows = []
    for k in range(args.r):
        sec = Sector(args.r, k)
        label = to_rspin(args.r, k)
        rows.append(
            {
                "k": k,
                "theta": frac_str(sec.theta),
                "narrow": sec.narrow,
                "fixed_dim": sec.fixed_dim,
                "degree": frac_str(degree(args.r, k)) if sec.narrow else None,
                "m": label.m,
                "kind": label.kind.value,
            }
        )
    out = {
        "r": args.r,
        "central_charge": frac_str(space.central_charge),
        "sectors": rows,
        "pairing": [list(row) for row in space.pairing_matrix()],
    }
    return _dumps(out) + "\n", EXIT_OK


def cmd_translate(args) -> tuple:
    if args.k is not None:
        label = to_rspin(args.r, args.k)
        # key order follows the documented example output
        text = '{"m":%d,"kind":"%s"}' % (label.m, label.kind.value)
    else:
        sec = from_rspin(args.r, args.m)
        text = '{"k":%d,"narrow":%s}' % (sec.k, "true" if sec.narrow else "false")
    return text + "\n", EXIT_OK


def cmd_selection(args) -> tuple:
    r = args.r
    if args.k is not None:
        ks = args.k
        ms = [to_rspin(r, k).m for k in ks]
    else:
        ms = [r - 1 if m == -1 else m for m in args.m]
        ks = [from_rspin(r, m).k for m in ms]
    out = {
        "k": ks,
        "m": ms,
        "nonempty": ga.selection_nonempty(r, args.g, ks),
        "degree_canonical": frac_str(ga.bundle_degree(r, args.g, ms, "canonical")),
        "degree_log": frac_str(ga.bundle_degree(r, args.g, ks, "log")),
    }
    return _dumps(out) + "\n", EXIT_OK


def cmd_dimension(args) -> tuple:
    ms = [args.r - 1 if m == -1 else m for m in args.m]
    vd = ga.virtual_dim(args.r, args.g, args.alpha, ms)
    out = {"D": frac_str(vd.D), "d": vd.d, "vanishes": vd.vanishes}
    return _dumps(out) + "\n", EXIT_OK


def cmd_graphs(args) -> tuple:
    if args.graph is not None:
        try:
            with open(args.graph, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise DomainError("cannot read %s: %s" % (args.graph, exc.strerror)) from None
        except json.JSONDecodeError as exc:
            raise DomainError("%s is not valid JSON: %s" % (args.graph, exc.msg)) from None
        G = ga.DecoratedGraph.from_json(data)
        problems = ga.validate(G)
        out = {"valid": not problems, "violations": problems}
        if not problems:
            out.update(
                {
                    "genus": G.genus,
                    "concave": ga.concave(G.r, G),
                    "key": ga.canonical_string(G),
                    "edge_factors": [ga.edge_factor(G.r, G.decoration[a]) for a, _ in G.edges],
                    "vertex_degrees": [frac_str(G.vertex_degree(v)) for v in range(len(G.genera))],
                    "graph": G.to_json(),
                }
            )
        return _dumps(out) + "\n", EXIT_OK if not problems else EXIT_FAIL
    if args.r is None or args.g is None or args.n is None:
        raise UsageError("graphs: give --graph FILE, or all of --r, --g and --n")
    lines = [G.dumps() for G in ga.enumerate_graphs(args.r, args.g, args.n, nonempty=args.nonempty)]
    return "".join(line + "\n" for line in lines), EXIT_OK


def cmd_potential(args) -> tuple:
    return _dumps(prepotential(args.r).to_json()) + "\n", EXIT_OK


def cmd_correlator(args) -> tuple:
    T = theory(args.r)
    if args.table:
        rows = [("insertions", "value")]
        for key, value in T.table_rows(args.n, args.order):
            rows.append((" ".join("%d:%d" % km for km in key), frac_str(value)))
        return _csv(rows), EXIT_OK
    if not args.insert:
        raise UsageError("correlator: give at least three --insert a:m, or --table")
    insertions = [parse_insertion(x) for x in args.insert]
    return frac_str(T.descendant(insertions)) + "\n", EXIT_OK


def cmd_fourpoint(args) -> tuple:
    F = prepotential(args.r)
    rows = [("m1", "m2", "m3", "m4", "euler_class", "lg_residue")]
    for m in admissible_four_tuples(args.r):
        rows.append(tuple(str(x) for x in m) + (frac_str(four_point_class_degree(args.r, m)), frac_str(F.correlator(m))))
    return _csv(rows), EXIT_OK


def cmd_check(args) -> tuple:
    results = run_suite(args.suite, args.r, args.order)
    ok = all(results)
    if args.format == "json":
        text = _dumps({"r": args.r, "suite": args.suite, "order": args.order, "result": "PASS" if ok else "FAIL",
                       "checks": [c.as_dict() for c in results]}) + "\n"
    else:
        rows = [("check", "result", "cases", "counterexample")]
        rows += [(c.name, c.status, str(c.cases), c.counterexample or "") for c in results]
        rows.append(("overall", "PASS" if ok else "FAIL", str(sum(c.cases for c in results)), ""))
        text = _csv(rows)
    return text, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "sectors": cmd_sectors,
    "translate": cmd_translate,
    "selection": cmd_selection,
    "dimension": cmd_dimension,
    "graphs": cmd_graphs,
    "potential": cmd_potential,
    "correlator": cmd_correlator,
    "fourpoint": cmd_fourpoint,
    "check": cmd_check,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        stderr.write(parser.format_usage())
        stderr.write(str(exc) + "\n")
        return EXIT_USAGE
    except ScaleLimitError as exc:
        stderr.write("scale limit: %s\n" % exc)
        return EXIT_SCALE
    except DomainError as exc:
        stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    stdout.write(text)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)

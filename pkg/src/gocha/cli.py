"""Command line front end.

Subcommands take a JSON description of the family (prime, graph, one group
per vertex) and print human-readable tables, or machine output with --json,
or a CSV rank table with --csv.  Exit codes: 0 success, 1 malformed input,
2 a verification failure, 3 a resource cap was hit.

    gocha poincare family.json
    gocha ranks family.json --ring both --truncation 20
    gocha verify family.json --json
    gocha paper-example

See the README for the input file format.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .errors import (
    ConventionMismatchError,
    NotEulerianError,
    NotIntegralError,
    ResourceCapError,
    SpecFileError,
    UsageError,
)
from .graph import Graph, cliques_by_size
from .numtheory import is_prime
from .presentation import QuadraticPresentation, graded_dimensions, quadratic_dual
from .product import (
    CyclicTwoVertex,
    FamilySpec,
    FreeVertex,
    PoincareVertex,
    PresentationVertex,
    SurfaceVertex,
    UNBOUNDED,
    assemble_presentation,
    cohomological_dimension,
    dual_family,
    gocha_series,
    is_conditional,
    poincare_series,
)
from .ranks import a_Fp_mobius, a_Fp_peel, table_from_gocha, verify_identities
from .series import DEFAULT_TRUNCATION, ps_inverse

#: Clique enumeration is exponential in the vertex count; refuse beyond this.
MAX_VERTICES = 24

#: Oracle depth `verify` uses unless --oracle-depth raises it.
DEFAULT_VERIFY_ORACLE_DEPTH = 4

#: The built-in example family: a path graph 2--1--3 carrying three genus-2
#: surface groups at p = 2.
EXAMPLE_SPEC = {
    "p": 2,
    "truncation": 16,
    "graph": {"vertices": 3, "edges": [[1, 2], [1, 3]]},
    "groups": [
        {"type": "surface", "genus": 2},
        {"type": "surface", "genus": 2},
        {"type": "surface", "genus": 2},
    ],
}

_EXAMPLE_POINCARE = (1, 12, 35, 16, 2)
_EXAMPLE_DENOMINATOR = (1, -12, 35, -16, 2)
_EXAMPLE_A_ZP = (12, 31, 168, 928, 5704)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# input file handling

def _check_keys(obj, where, required, optional=()):
    if not isinstance(obj, dict):
        raise SpecFileError("%s must be a JSON object" % where)
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise SpecFileError("%s has unknown keys: %s" % (where, ", ".join(unknown)))
    missing = sorted(set(required) - set(obj))
    if missing:
        raise SpecFileError("%s is missing keys: %s" % (where, ", ".join(missing)))


def _as_int(x, where, minimum=None):
    if not isinstance(x, int) or isinstance(x, bool):
        raise SpecFileError("%s must be an integer, got %r" % (where, x))
    if minimum is not None and x < minimum:
        raise SpecFileError("%s must be >= %d, got %d" % (where, minimum, x))
    return x


def _parse_vertex(index, obj, p):
    where = "groups[%d]" % index
    if not isinstance(obj, dict) or "type" not in obj:
        raise SpecFileError("%s must be an object with a 'type' key" % where)
    vtype = obj["type"]
    if vtype == "free":
        _check_keys(obj, where, ("type", "rank"))
        return FreeVertex(_as_int(obj["rank"], where + ".rank", 0))
    if vtype == "surface":
        _check_keys(obj, where, ("type", "genus"))
        return SurfaceVertex(_as_int(obj["genus"], where + ".genus", 1))
    if vtype == "cyclic2":
        _check_keys(obj, where, ("type",))
        return CyclicTwoVertex()
    if vtype == "poincare":
        _check_keys(obj, where, ("type", "coefficients"), ("koszul",))
        coeffs = obj["coefficients"]
        if not isinstance(coeffs, list) or not coeffs:
            raise SpecFileError("%s.coefficients must be a nonempty list" % where)
        coeffs = [_as_int(c, where + ".coefficients", 0) for c in coeffs]
        koszul = obj.get("koszul", False)
        if not isinstance(koszul, bool):
            raise SpecFileError("%s.koszul must be a boolean" % where)
        return PoincareVertex(tuple(coeffs), koszul)
    if vtype == "presentation":
        _check_keys(obj, where, ("type", "generators", "relations"))
        d = _as_int(obj["generators"], where + ".generators", 0)
        rels_in = obj["relations"]
        if not isinstance(rels_in, list):
            raise SpecFileError("%s.relations must be a list" % where)
        relations = []
        for j, rel in enumerate(rels_in):
            if not isinstance(rel, list) or not rel:
                raise SpecFileError(
                    "%s.relations[%d] must be a nonempty list of "
                    "[a, b, coeff] triples" % (where, j))
            terms = []
            for term in rel:
                if not isinstance(term, list) or len(term) != 3:
                    raise SpecFileError(
                        "%s.relations[%d] entries must be [a, b, coeff] "
                        "triples" % (where, j))
                a, b, coeff = (_as_int(x, where + ".relations") for x in term)
                terms.append((a, b, coeff))
            relations.append(terms)
        return PresentationVertex(QuadraticPresentation(p, d, relations))
    raise SpecFileError("%s has unknown type %r" % (where, vtype))


def parse_spec(data, truncation_override=None) -> FamilySpec:
    """Validate a parsed JSON object into a FamilySpec.  Unknown keys are
    rejected everywhere: a typo should fail loudly, not be ignored."""
    _check_keys(data, "input", ("p", "graph", "groups"), ("truncation",))
    p = _as_int(data["p"], "p", 2)
    if not is_prime(p):
        raise SpecFileError("p must be prime, got %d" % p)
    if truncation_override is not None:
        truncation = truncation_override
    else:
        truncation = data.get("truncation", DEFAULT_TRUNCATION)
    truncation = _as_int(truncation, "truncation", 1)

    gobj = data["graph"]
    _check_keys(gobj, "graph", ("vertices", "edges"))
    k = _as_int(gobj["vertices"], "graph.vertices", 1)
    if k > MAX_VERTICES:
        raise ResourceCapError(
            k, "graphs beyond %d vertices are refused; clique enumeration "
            "grows exponentially" % MAX_VERTICES)
    edges_in = gobj["edges"]
    if not isinstance(edges_in, list):
        raise SpecFileError("graph.edges must be a list of [u, v] pairs")
    edges = []
    for e in edges_in:
        if not isinstance(e, list) or len(e) != 2:
            raise SpecFileError("graph.edges entries must be [u, v] pairs, got %r" % (e,))
        edges.append((_as_int(e[0], "graph.edges"), _as_int(e[1], "graph.edges")))
    graph = Graph(k, edges)

    groups_in = data["groups"]
    if not isinstance(groups_in, list):
        raise SpecFileError("groups must be a list")
    if len(groups_in) != k:
        raise SpecFileError("%d groups for %d vertices" % (len(groups_in), k))
    groups = [_parse_vertex(i, obj, p) for i, obj in enumerate(groups_in)]
    return FamilySpec(p, graph, tuple(groups), truncation)


def load_spec(path, truncation_override=None) -> FamilySpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecFileError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise SpecFileError("%s is not valid JSON: %s" % (path, exc))
    return parse_spec(data, truncation_override)


# ---------------------------------------------------------------------------
# formatting

def _coeff_str(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def _series_line(ts):
    return ", ".join(_coeff_str(c) for c in ts.coefficients)


def _frac_str(b):
    return "%d/%d" % (b.numerator, b.denominator)


def _poly_str(coeffs):
    """1 - 12t + 35t^2 - 16t^3 + 2t^4 from [1, -12, 35, -16, 2]."""
    parts = []
    for n, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if n == 0:
            term = str(mag)
        elif n == 1:
            term = "t" if mag == 1 else "%dt" % mag
        else:
            term = "t^%d" % n if mag == 1 else "%dt^%d" % (mag, n)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


def _table_lines(headers, rows):
    cells = [headers] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    out = []
    for r in cells:
        out.append("  ".join(x.rjust(w) for x, w in zip(r, widths)))
    return out


def _emit(args, human_lines, json_obj, csv_rows=None):
    if args.csv and csv_rows is None:
        raise UsageError("--csv applies to ranks, verify, and paper-example only")
    if args.json:
        print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in human_lines:
            print(line)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["degree", "c", "b", "a_zp", "a_fp"])
            writer.writerows(csv_rows)


def _rank_csv_rows(table):
    return [[n, table.c[n - 1], _frac_str(table.b[n - 1]),
             table.aZ[n - 1], table.aF[n - 1]]
            for n in range(1, table.N + 1)]


def _conditional_note(spec):
    if is_conditional(spec):
        return ["note: results are conditional on the declared Koszulity of "
                "the user-supplied Poincare data"]
    return []


# ---------------------------------------------------------------------------
# subcommands

def _cmd_cliques(args):
    spec = load_spec(args.file, args.truncation)
    grouped = cliques_by_size(spec.graph)
    lines = []
    total = 0
    payload = []
    for m in sorted(grouped):
        members = [list(c.vertices) for c in grouped[m]]
        total += len(members)
        lines.append("m=%d: %s" % (m, " ".join(
            "(%s)" % ",".join(str(v) for v in c) for c in members)))
        payload.append({"m": m, "members": members})
    lines.append("total: %d cliques" % total)
    _emit(args, lines, {"vertices": spec.graph.k, "cliques": payload})
    return 0


def _cmd_poincare(args):
    spec = load_spec(args.file, args.truncation)
    series = poincare_series(spec)
    cd = cohomological_dimension(spec)
    lines = ["poincare coefficients (degrees 0..%d):" % spec.truncation,
             "  " + _series_line(series),
             "cohomological dimension: %s"
             % ("unbounded" if cd is UNBOUNDED else cd)]
    obj = {"p": spec.p, "truncation": spec.truncation,
           "poincare": [int(c) for c in series.coefficients],
           "cohomological_dimension": None if cd is UNBOUNDED else cd}
    _emit(args, lines, obj)
    return 0


def _cmd_gocha(args):
    spec = load_spec(args.file, args.truncation)
    g = gocha_series(spec)
    reciprocal = ps_inverse(g)
    deg = reciprocal.polynomial_degree()
    denominator = None
    if deg is not None and deg < spec.truncation and reciprocal.is_integral():
        denominator = [int(c) for c in reciprocal.coefficients[:deg + 1]]
    lines = ["gocha coefficients (degrees 0..%d):" % spec.truncation,
             "  " + _series_line(g)]
    if denominator is not None:
        lines.append("denominator: " + _poly_str(denominator))
    lines.extend(_conditional_note(spec))
    obj = {"p": spec.p, "truncation": spec.truncation,
           "gocha": [int(c) for c in g.coefficients],
           "denominator": denominator,
           "conditional_on_declared_koszulity": is_conditional(spec)}
    _emit(args, lines, obj)
    return 0


def _cmd_ranks(args):
    spec = load_spec(args.file, args.truncation)
    series = poincare_series(spec)
    g = gocha_series(spec)
    table = table_from_gocha(g, spec.p)
    headers = ["n", "c"]
    if args.ring in ("zp", "both"):
        headers += ["b", "a_Zp"]
    if args.ring in ("fp", "both"):
        headers += ["a_Fp"]
    rows = []
    for n in range(1, table.N + 1):
        row = [n, table.c[n - 1]]
        if args.ring in ("zp", "both"):
            row += [_frac_str(table.b[n - 1]), table.aZ[n - 1]]
        if args.ring in ("fp", "both"):
            row += [table.aF[n - 1]]
        rows.append(row)
    lines = ["p = %d, truncation = %d" % (spec.p, table.N)]
    lines += _table_lines(headers, rows)
    lines.extend(_conditional_note(spec))
    obj = {"p": spec.p, "truncation": table.N,
           "poincare": [int(c) for c in series.coefficients],
           "gocha": [1] + list(table.c),
           "b": [_frac_str(b) for b in table.b],
           "a_zp": list(table.aZ),
           "a_fp": list(table.aF),
           "conditional_on_declared_koszulity": is_conditional(spec)}
    _emit(args, lines, obj, csv_rows=_rank_csv_rows(table))
    return 0


def _cmd_dual(args):
    spec = load_spec(args.file, args.truncation)
    pres = assemble_presentation(spec)
    dual = dual_family(spec)
    complement = quadratic_dual(pres)
    identity = pres.r + dual.r == pres.d ** 2
    same_span = dual == complement
    lines = [
        "generators d = %d" % pres.d,
        "relations r(S) = %d" % pres.r,
        "dual relations r(S!) = %d" % dual.r,
        "d^2 = %d" % pres.d ** 2,
        "r(S) + r(S!) = %d  [%s]" % (pres.r + dual.r, "ok" if identity else "MISMATCH"),
        "family dual equals orthogonal complement: %s" % ("yes" if same_span else "NO"),
    ]
    obj = {"d": pres.d, "r": pres.r, "r_dual": dual.r,
           "d_squared": pres.d ** 2,
           "counting_identity": identity,
           "dual_is_complement": same_span}
    _emit(args, lines, obj)
    return 0 if identity and same_span else 2


def _cmd_oracle(args):
    spec = load_spec(args.file, args.truncation)
    depth = args.max_degree
    if depth < 0:
        raise UsageError("--max-degree must be >= 0")
    g = gocha_series(spec)
    if depth > spec.truncation:
        raise UsageError(
            "--max-degree %d exceeds the truncation %d" % (depth, spec.truncation))
    pres = assemble_presentation(spec)
    dims = graded_dimensions(pres, depth)
    formula = [int(g[n]) for n in range(depth + 1)]
    rows = [[n, dims[n], formula[n], "ok" if dims[n] == formula[n] else "MISMATCH"]
            for n in range(depth + 1)]
    agree = all(dims[n] == formula[n] for n in range(depth + 1))
    lines = ["d = %d, r = %d" % (pres.d, pres.r)]
    lines += _table_lines(["n", "oracle", "formula", ""], rows)
    lines.append("oracle vs formula: %s" % ("agree" if agree else "DISAGREE"))
    obj = {"d": pres.d, "r": pres.r, "max_degree": depth,
           "oracle": list(dims.dims), "formula": formula, "agree": agree}
    _emit(args, lines, obj)
    return 0 if agree else 2


def _cmd_verify(args):
    spec = load_spec(args.file, args.truncation)
    series = poincare_series(spec)
    g = gocha_series(spec)
    N = spec.truncation

    try:
        table = table_from_gocha(g, spec.p)
    except NotIntegralError as exc:
        lines = ["rank table not computable: %s" % exc, "VERIFY: FAIL"]
        obj = {"p": spec.p, "truncation": N,
               "poincare": [int(c) for c in series.coefficients],
               "gocha": [_coeff_str(c) for c in g.coefficients],
               "checks": {"passed": False, "error": str(exc)}}
        _emit(args, lines, obj)
        return 2

    report = verify_identities(table)

    def _route(fn):
        try:
            return list(fn()) == list(table.aF), None
        except (ConventionMismatchError, NotEulerianError) as exc:
            return False, str(exc)

    peel_ok, peel_err = _route(lambda: a_Fp_peel(g, spec.p))
    mobius_ok, mobius_err = _route(lambda: a_Fp_mobius(table.b, spec.p))

    presentable = all(
        isinstance(v, (FreeVertex, SurfaceVertex, PresentationVertex))
        for v in spec.groups)
    oracle_obj = None
    oracle_ok = True
    oracle_line = "oracle comparison: skipped (family has no quadratic presentation)"
    if presentable:
        pres = assemble_presentation(spec)
        dims = graded_dimensions(pres, min(N, args.oracle_depth),
                                 stop_before_cap=True)
        depth = len(dims) - 1
        oracle_ok = all(dims[n] == table.c[n - 1] for n in range(1, depth + 1))
        oracle_obj = {"depth": depth, "agree": oracle_ok}
        oracle_line = ("oracle comparison (degrees 0..%d): %s"
                       % (depth, "ok" if oracle_ok else "MISMATCH"))

    def _degree_line(label, flags):
        bad = [str(i + 1) for i, ok in enumerate(flags) if not ok]
        return "%s: %s" % (label, "ok" if not bad else "FAIL at degrees " + ", ".join(bad))

    lines = ["p = %d, truncation = %d" % (spec.p, N)]
    lines.append(_degree_line("euler reconstruction of c from a_Zp", report.euler))
    lines.append(_degree_line("jennings reconstruction of c from a_Fp", report.jennings))
    lines.append(_degree_line("lazard stacking of a_Fp from a_Zp", report.lazard))
    lines.append(_degree_line("a_Zp nonnegative", report.nonneg))
    lines.append("peeling route for a_Fp: %s" % ("ok" if peel_ok else "FAIL (%s)" % peel_err))
    lines.append("mobius route for a_Fp: %s" % ("ok" if mobius_ok else "FAIL (%s)" % mobius_err))
    lines.append(oracle_line)
    lines.extend(_conditional_note(spec))

    passed = report.passed and peel_ok and mobius_ok and oracle_ok
    lines.append("VERIFY: %s" % ("PASS" if passed else "FAIL"))

    checks = {"euler": list(report.euler),
              "jennings": list(report.jennings),
              "lazard": list(report.lazard),
              "nonneg": list(report.nonneg),
              "peel_agrees": peel_ok,
              "mobius_agrees": mobius_ok,
              "oracle": oracle_obj,
              "passed": passed}
    obj = {"p": spec.p, "truncation": N,
           "poincare": [int(c) for c in series.coefficients],
           "gocha": [1] + list(table.c),
           "b": [_frac_str(b) for b in table.b],
           "a_zp": list(table.aZ),
           "a_fp": list(table.aF),
           "conditional_on_declared_koszulity": is_conditional(spec),
           "checks": checks}
    _emit(args, lines, obj, csv_rows=_rank_csv_rows(table))
    return 0 if passed else 2


def _cmd_paper_example(args):
    spec = parse_spec(EXAMPLE_SPEC, args.truncation)
    series = poincare_series(spec)
    g = gocha_series(spec)
    table = table_from_gocha(g, spec.p)
    report = verify_identities(table)

    N = spec.truncation
    failures = []
    for n in range(N + 1):
        want = _EXAMPLE_POINCARE[n] if n < len(_EXAMPLE_POINCARE) else 0
        if series[n] != want:
            failures.append("poincare degree %d: got %s, expected %d"
                            % (n, _coeff_str(series[n]), want))
    reciprocal = ps_inverse(g)
    for n in range(N + 1):
        want = _EXAMPLE_DENOMINATOR[n] if n < len(_EXAMPLE_DENOMINATOR) else 0
        if reciprocal[n] != want:
            failures.append("denominator degree %d: got %s, expected %d"
                            % (n, _coeff_str(reciprocal[n]), want))
    for n in range(1, min(5, N) + 1):
        if table.aZ[n - 1] != _EXAMPLE_A_ZP[n - 1]:
            failures.append("a_Zp degree %d: got %d, expected %d"
                            % (n, table.aZ[n - 1], _EXAMPLE_A_ZP[n - 1]))
    if not report.passed:
        failures.extend("identity check %s failed at degree %d" % f
                        for f in report.failures())

    lines = ["h = " + ", ".join(_coeff_str(c) for c in series.coefficients[1:5]),
             "a = " + ", ".join(str(a) for a in table.aZ[:5]),
             "gocha denominator: " + _poly_str(
                 [int(c) for c in reciprocal.coefficients[:5]]),
             "a_Fp = " + ", ".join(str(a) for a in table.aF[:5])]
    lines.extend(failures)
    lines.append("golden values: %s" % ("ok" if not failures else "FAIL"))

    obj = {"p": spec.p, "truncation": N,
           "poincare": [int(c) for c in series.coefficients],
           "gocha": [1] + list(table.c),
           "b": [_frac_str(b) for b in table.b],
           "a_zp": list(table.aZ),
           "a_fp": list(table.aF),
           "checks": {"passed": report.passed and not failures,
                      "golden_failures": failures}}
    _emit(args, lines, obj, csv_rows=_rank_csv_rows(table))
    return 0 if not failures else 2


# ---------------------------------------------------------------------------
# wiring

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="machine-readable output on stdout")
    common.add_argument("--csv", metavar="PATH",
                        help="also write the per-degree rank table as CSV")
    common.add_argument("--truncation", type=int, metavar="N",
                        help="override the truncation order")

    parser = _Parser(prog="gocha",
                     description="graded invariants of graph products of groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, needs_file=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if needs_file:
            p.add_argument("file", help="JSON family description")
        p.set_defaults(func=func)
        return p

    add("cliques", _cmd_cliques, "list all complete subgraphs, grouped by size")
    add("poincare", _cmd_poincare, "Poincare series of the graph product")
    add("gocha", _cmd_gocha, "gocha series (graded dimensions) of the graph product")
    ranks_p = add("ranks", _cmd_ranks, "rank table: c, b, a_Zp, a_Fp")
    ranks_p.add_argument("--ring", choices=["zp", "fp", "both"], default="both",
                         help="which rank columns to print (default both)")
    add("dual", _cmd_dual, "relation census of the presentation and its dual")
    oracle_p = add("oracle", _cmd_oracle,
                   "brute-force graded dimensions vs the series formula")
    oracle_p.add_argument("--max-degree", type=int, required=True, metavar="N",
                          help="compare degrees 0..N")
    verify_p = add("verify", _cmd_verify, "run every identity check and compare "
                   "the oracle; exit 2 on any failure")
    verify_p.add_argument("--oracle-depth", type=int,
                          default=DEFAULT_VERIFY_ORACLE_DEPTH, metavar="N",
                          help="oracle comparison depth (default %d)"
                          % DEFAULT_VERIFY_ORACLE_DEPTH)
    add("paper-example", _cmd_paper_example,
        "run the built-in example family and check its known values",
        needs_file=False)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ResourceCapError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (NotIntegralError, NotEulerianError, ConventionMismatchError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command-line front end.

Every command prints a report made of sections.  All sections except
``[timing]`` are a deterministic function of the command line and the input
file contents.  Exit codes: 0 success, 2 input error, 3 search budget
exceeded, 4 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from fractions import Fraction

from . import errors
from .distance import gh_exact, gh_level_search
from .matrixfile import file_digest, read_space
from .metric import diameter, format_rational, simplex, to_rational
from .partitions import alpha_m, below_diameter_cover, d_m
from .relations import distortion
from .segments import extend_check, is_between, linear_curve, linear_space
from .simplex_dist import dist_to_simplex, simplex_distance

DEFAULT_BUDGET = 5_000_000

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_PRECONDITION = 0, 2, 3, 4


def _q(v):
    return format_rational(v)


def _matrix(M):
    return [[_q(v) for v in row] for row in M]


class Report:
    def __init__(self, argv):
        self.sections = {"command": "ghexact " + shlex.join(argv)}
        self.started = time.perf_counter()

    def section(self, name):
        return self.sections.setdefault(name, {})

    def add_input(self, role, path):
        self.section("inputs")[role] = {"path": str(path), "sha256": file_digest(path)}
        return read_space(path)

    def finish(self):
        self.sections["timing"] = {"wall_seconds": f"{time.perf_counter() - self.started:.6f}"}

    def to_json(self):
        return json.dumps(self.sections, indent=2)

    def to_text(self):
        lines = [f"command: {self.sections['command']}"]
        for name, body in self.sections.items():
            if name == "command":
                continue
            lines.append(f"[{name}]")
            for key, value in body.items():
                if isinstance(value, str):
                    lines.append(f"{key}: {value}")
                else:
                    lines.append(f"{key}: {json.dumps(value, separators=(', ', ': '))}")
        return "\n".join(lines) + "\n"


def _load(report, args, *roles):
    return [report.add_input(role, getattr(args, role)) for role in roles]


def cmd_validate(args, report):
    (X,) = _load(report, args, "X")
    res = report.section("result")
    res["status"] = "OK"
    res["points"] = str(X.n)
    res["diameter"] = _q(diameter(X))
    res["matrix"] = _matrix(X.d)


def _certificate_fields(cert):
    return {
        "value": _q(cert.value),
        "twice_value": _q(cert.twice_value),
        "correspondence": cert.optimal.as_lists(),
        "lower_bound": _q(cert.lower_bound),
        "lower_bound_witness": cert.lower_bound_witness,
    }


def cmd_dist(args, report):
    X, Y = _load(report, args, "X", "Y")
    cert = gh_exact(X, Y, budget=args.budget)
    level = gh_level_search(X, Y, budget=args.budget)
    res = report.section("result")
    res["d_GH"] = _q(cert.value)
    res["twice_d_GH"] = _q(cert.twice_value)
    c = report.section("certificate")
    c.update(_certificate_fields(cert))
    c["distortion_check"] = _q(distortion(X, Y, cert.optimal))
    c["level_search_value"] = _q(level.value)
    c["level_search_witness"] = level.lower_bound_witness
    c["engines_agree"] = str(level.value == cert.value).lower()
    report.section("stats").update(
        {"bnb_nodes": str(cert.nodes), "level_search_nodes": str(level.nodes)}
    )


def cmd_simplex_dist(args, report):
    (X,) = _load(report, args, "X")
    lam = to_rational(args.lam)
    value, route = simplex_distance(X, args.m, lam)
    general = dist_to_simplex(X, args.m, lam)
    cert = gh_exact(simplex(args.m, lam), X, budget=args.budget)
    res = report.section("result")
    res["d_GH"] = _q(value)
    res["twice_d_GH"] = _q(2 * value)
    res["route"] = route
    res["partition_formula"] = _q(general)
    res["gh_exact"] = _q(cert.value)
    res["cross_check"] = str(value == general == cert.value).lower()
    report.section("stats")["bnb_nodes"] = str(cert.nodes)


def cmd_invariants(args, report):
    (X,) = _load(report, args, "X")
    res = report.section("result")
    res["points"] = str(X.n)
    res["diameter"] = _q(diameter(X))
    failed = None
    for key, fn in (
        (f"d_{args.m}", lambda: _q(d_m(X, args.m))),
        (f"alpha_{args.m}", lambda: _q(alpha_m(X, args.m))),
        ("cover_number_below_diam", lambda: str(len(below_diameter_cover(X)))),
        ("below_diam_covering", lambda: below_diameter_cover(X).as_lists()),
    ):
        try:
            res[key] = fn()
        except errors.PreconditionError as exc:
            res[key] = f"error: {type(exc).__name__}: {exc}"
            failed = failed or exc
    return EXIT_PRECONDITION if failed else EXIT_OK


def cmd_between(args, report):
    X, Y, Z = _load(report, args, "X", "Y", "Z")
    b = is_between(X, Y, Z, budget=args.budget)
    res = report.section("result")
    res["between"] = str(b.holds).lower()
    res["twice_d_XY"] = _q(2 * b.d_xy)
    res["twice_d_YZ"] = _q(2 * b.d_yz)
    res["twice_d_XZ"] = _q(2 * b.d_xz)


def cmd_extend_check(args, report):
    X, Y = _load(report, args, "X", "Y")
    rep = extend_check(X, Y, budget=args.budget)
    e = rep.extremality
    res = report.section("result")
    res["twice_d_GH"] = _q(e.twice_distance)
    res["diam_X"] = _q(e.diam_x)
    res["diam_Y"] = _q(e.diam_y)
    res["classification"] = e.kind
    res["nonextendable_beyond_Y"] = "certified" if rep.nonextendable_beyond_y else "not certified"
    if rep.check is not None:
        ch = rep.check
        c = report.section("certificate")
        c["mutually_hyperextreme"] = str(ch.cond_extreme).lower()
        c["n"] = str(ch.n)
        c["partition_X"] = ch.partition_x.as_lists()
        c["alpha_partition_X"] = _q(ch.alpha_partition_x)
        c["m"] = str(ch.m)
        c["covering_Y"] = ch.covering_y.as_lists()
        c["diam_covering_Y"] = _q(ch.diam_covering_y)
        c["cond_partition_alpha_positive"] = str(ch.cond_partition).lower()
        c["cond_covering_below_diam"] = str(ch.cond_covering).lower()
        c["cond_m_le_n"] = str(ch.cond_count).lower()
        c["all_conditions"] = str(ch.holds).lower()
    if rep.extension_witness is not None:
        w = rep.extension_witness
        ws = report.section("extension_witness")
        ws["construction"] = w.construction
        ws["Z"] = _matrix(w.Z.d)
        ws["twice_d_XY"] = _q(2 * w.betweenness.d_xy)
        ws["twice_d_YZ"] = _q(2 * w.betweenness.d_yz)
        ws["twice_d_XZ"] = _q(2 * w.betweenness.d_xz)
        ws["between"] = str(w.betweenness.holds).lower()


def cmd_geodesic(args, report):
    X, Y = _load(report, args, "X", "Y")
    eps = to_rational(args.epsilon)
    ts = [to_rational(t) for t in args.t.split(",")]
    curve = linear_curve(X, Y, eps, budget=args.budget)
    d = gh_exact(X, Y, budget=args.budget).value
    res = report.section("result")
    res["twice_d_GH"] = _q(2 * d)
    res["epsilon"] = _q(eps)
    res["correspondence"] = curve.R.as_lists()
    res["dis_R"] = _q(curve.dis())
    samples = report.section("samples")
    spaces = []
    for t in ts:
        S = linear_space(curve, t)
        spaces.append(S)
        samples[f"t={_q(t)}"] = _matrix(S.d)
    table = [[_q(gh_exact(A, B, budget=args.budget).value) for B in spaces] for A in spaces]
    order = sorted(range(len(ts)), key=lambda i: ts[i])
    length = sum(
        (gh_exact(spaces[a], spaces[b], budget=args.budget).value for a, b in zip(order, order[1:])),
        Fraction(0),
    )
    dist = report.section("distances")
    dist["parameters"] = [_q(t) for t in ts]
    dist["d_GH_table"] = table
    dist["polyline_length"] = _q(length)
    dist["length_bound_d_GH_plus_epsilon"] = _q(d + eps)
    dist["epsilon_shortest_ok"] = str(length <= d + eps and curve.dis() <= 2 * d + 2 * eps).lower()


def build_parser():
    p = argparse.ArgumentParser(prog="ghexact", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, spaces, help):
        sp = sub.add_parser(name, help=help)
        for role in spaces:
            sp.add_argument(role, help=f"distance-matrix file for {role}")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="branch-and-bound node limit (default %(default)s)")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, ["X"], "parse and validate a matrix file")
    add("dist", cmd_dist, ["X", "Y"], "exact Gromov-Hausdorff distance with certificate")
    sp = add("simplex-dist", cmd_simplex_dist, ["X"], "distance from lam*Delta_m to X")
    sp.add_argument("m", type=int)
    sp.add_argument("lam", help="simplex edge length, e.g. 3 or 1/2")
    sp = add("invariants", cmd_invariants, ["X"], "diameter, d_m, alpha_m, cover number")
    sp.add_argument("m", type=int, nargs="?", default=2)
    add("between", cmd_between, ["X", "Y", "Z"], "does Y lie between X and Z")
    add("extend-check", cmd_extend_check, ["X", "Y"], "extendability of [X, Y] beyond Y")
    sp = add("geodesic", cmd_geodesic, ["X", "Y"], "sample a linear epsilon-shortest curve")
    sp.add_argument("--t", default="0,1/4,1/2,3/4,1", help="comma-separated parameters")
    sp.add_argument("--epsilon", default="0")
    return p


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    report = Report(argv)
    try:
        code = args.func(args, report) or EXIT_OK
    except (errors.InputError, OSError) as exc:
        code = EXIT_INPUT
        report.section("error").update({"type": type(exc).__name__, "message": str(exc)})
    except errors.SearchBudgetExceeded as exc:
        code = EXIT_BUDGET
        report.section("error").update({
            "type": type(exc).__name__, "message": str(exc),
            "nodes": str(exc.nodes),
            "lower": _q(exc.lower) if exc.lower is not None else "none",
            "upper": _q(exc.upper) if exc.upper is not None else "none",
        })
    except errors.PreconditionError as exc:
        code = EXIT_PRECONDITION
        report.section("error").update({"type": type(exc).__name__, "message": str(exc)})
    report.finish()
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())

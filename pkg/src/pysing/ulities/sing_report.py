#!/usr/bin/env python3
import argparse
import json
import logging
import sys

from pysing.analysis import SurfaceAnalyzer
from pysing.errors import InvalidPointError, PysingError, exit_code_for
from pysing.helper import default_config, merge_config, parse_config
from pysing.io import SurfaceFile, render_json, write_report
from pysing.poly import ProjPoint
from pysing.surface import implicitize, moving_planes_of_degree

logger = logging.getLogger(__name__)


def parse_point(text):
    coords = text.split(",")
    if len(coords) != 4:
        raise InvalidPointError(f"--point needs four comma-separated coordinates, got {text!r}")
    return ProjPoint.from_strings(coords)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="Surface file (JSON)")
    common.add_argument("--json", action="store_true", help="Write the report as JSON")
    common.add_argument("--seed", type=int, default=None, help="Seed of the generic draws")
    common.add_argument("--degree-bound", type=int, default=None, help="Largest mu-basis degree searched")
    common.add_argument("--config", default=None, help="JSON configuration string")
    common.add_argument("--workers", type=int, default=None, help="Threads used for candidate points")
    common.add_argument("--verbose", "-v", action="count", default=0, help="-v for info, -vv for debug")

    parser = argparse.ArgumentParser("pysing", description="Base points, mu-bases and singularity orders of rational surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    report = sub.add_parser("report", parents=[common], help="Full report for the surface and its points")
    report.add_argument("--point", action="append", default=[], help="Extra point x,y,z,w (repeatable)")
    report.add_argument("--verify", action="store_true", help="Cross-check every count; exit 1 on disagreement")

    sub.add_parser("basepoints", parents=[common], help="Base points and lambda")

    order = sub.add_parser("order", parents=[common], help="Order r of points")
    order.add_argument("--point", action="append", required=True, help="Point x,y,z,w (repeatable)")

    sub.add_parser("mubasis", parents=[common], help="Verified mu-basis")

    planes = sub.add_parser("movingplanes", parents=[common], help="Moving planes of bounded degree")
    planes.add_argument("--degree", type=int, required=True, help="Degree bound k")

    implicit = sub.add_parser("implicitize", parents=[common], help="Implicit equation")
    implicit.add_argument("--route", choices=["affine", "homogeneous"], default="affine")
    return parser


def build_config(args, surface_file):
    config = merge_config(default_config(), surface_file.config_overrides())
    config = merge_config(config, parse_config(args.config))
    if args.seed is not None:
        config["seed"] = args.seed
    if args.degree_bound is not None:
        config["mu_basis"]["degree_bound"] = args.degree_bound
    if args.workers is not None:
        config["workers"] = args.workers
    return config


def cmd_report(args, analyzer, surface_file, out):
    points = list(surface_file.points) + [parse_point(p) for p in args.point]
    doc = analyzer.report(points, verify=args.verify)
    write_report(doc, out, as_json=args.json)
    if args.verify and not doc["verified"]:
        print("error[VERIFY_FAILED]: the counts disagree", file=sys.stderr)
        return 1
    return 0


def cmd_basepoints(args, analyzer, surface_file, out):
    base = analyzer.base_points()
    doc = dict(base.to_dict(), seed=analyzer.seed)
    if args.json:
        out.write(render_json(doc))
    else:
        out.write(f"lambda = {base.lam}\n")
        out.write(f"base point free: {'yes' if base.is_base_point_free else 'no'}\n")
        out.write(f"distinct base points: {base.point_count}\n")
        for chart, value in base.per_chart.items():
            out.write(f"  {chart}: {value}\n")
        out.write(f"{base.lambda_note}\n")
    return 0


def cmd_order(args, analyzer, surface_file, out):
    points = [parse_point(p) for p in args.point]
    entries = [analyzer.analyze_point(X0) for X0 in points]
    if args.json:
        out.write(render_json({"seed": analyzer.seed, "lambda": analyzer.base_points().lam, "points": entries}))
    else:
        for entry in entries:
            out.write(f"point ({', '.join(entry['point'])}): r={entry['r']}"
                      f"  (count {entry['total_count']}, lambda {entry['lambda']}, pivot {entry['pivot']})\n")
    return 0


def cmd_mubasis(args, analyzer, surface_file, out):
    mu = analyzer.mu_basis()
    if mu is None:
        failure = analyzer.mu_failure
        doc = {"mu_basis": None, "code": failure.code, "message": failure.message,
               "candidates": failure.candidates, "diagnostics": failure.diagnostics}
        if args.json:
            out.write(render_json(doc))
        else:
            out.write(f"no mu-basis: {failure.message}\n")
            for plane in failure.candidates:
                out.write(f"  candidate ({', '.join(plane)})\n")
        return 0
    if args.json:
        out.write(render_json({"mu_basis": mu.to_dict()}))
    else:
        out.write(f"kappa = {mu.kappa}\n")
        for name, plane in zip("pqr", mu.planes):
            out.write(f"{name} = {plane}\n")
    return 0


def cmd_movingplanes(args, analyzer, surface_file, out):
    planes = moving_planes_of_degree(surface_file.surface, args.degree)
    if args.json:
        out.write(render_json({"degree": args.degree, "planes": [L.to_list() for L in planes]}))
    else:
        out.write(f"{len(planes)} independent moving planes of degree <= {args.degree}\n")
        for plane in planes:
            out.write(f"{plane}\n")
    return 0


def cmd_implicitize(args, analyzer, surface_file, out):
    implicit = implicitize(surface_file.surface, args.route)
    if args.json:
        out.write(render_json(implicit.to_dict()))
    else:
        out.write(f"{implicit}\n")
    return 0


COMMANDS = {
    "report": cmd_report,
    "basepoints": cmd_basepoints,
    "order": cmd_order,
    "mubasis": cmd_mubasis,
    "movingplanes": cmd_movingplanes,
    "implicitize": cmd_implicitize,
}


def main(argv=None, out=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    out = out or sys.stdout
    try:
        surface_file = SurfaceFile.read(args.file)
        config = build_config(args, surface_file)
        analyzer = SurfaceAnalyzer(surface_file.surface, json.dumps(config))
        return COMMANDS[args.command](args, analyzer, surface_file, out)
    except PysingError as err:
        print(f"error[{err.code}]: {err.message}", file=sys.stderr)
        return exit_code_for(err)
    except ValueError as err:
        print(f"error[INVALID_INPUT]: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success with a valid report, 2 when the computation
finished but the report is invalid, 1 on input or usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import io
from .cech import cech_filtration
from .complex import ComplexError
from .persistence import BasisError, persistent_cohomology
from .plot import emit_barcode_plot
from .sampling import nsw_sample_bound
from .wu import persistent_sw, sw_at_scale

EXIT_OK, EXIT_ERROR, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _write(text: str, output) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_cech(args) -> int:
    points = io.load_points(args.input)
    fc = cech_filtration(points, args.max_dim, args.max_scale, threads=args.threads)
    _write(io.dumps_complex(fc), args.output)
    return EXIT_OK


def cmd_barcodes(args) -> int:
    fc = io.load_complex(args.input)
    classes = persistent_cohomology(fc, args.max_degree)
    _write(io.dump_json(io.barcodes_document(classes, args.max_degree)), args.output)
    return EXIT_OK


def _check_type(fc, n: int) -> None:
    # a complex of dimension <= n triggers TopDegreeWarning from the persistence step
    if n < 1:
        raise UsageError("--type-n must be at least 1")


def _finish(fc, classes, report, args) -> int:
    _write(io.dump_json(io.report_document(report)), args.output)
    if args.plot:
        emit_barcode_plot(classes, report, args.plot)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_sw(args) -> int:
    fc = io.load_complex(args.input)
    _check_type(fc, args.type_n)
    if len(fc) == 0:
        raise UsageError("complex is empty")
    r = fc.scales[-1] if args.scale is None else args.scale
    classes = persistent_cohomology(fc, min(args.type_n, fc.max_dimension))
    return _finish(fc, classes, sw_at_scale(fc, r, args.type_n, classes), args)


def cmd_persistent_sw(args) -> int:
    fc = io.load_complex(args.input)
    _check_type(fc, args.type_n)
    s, t = args.interval
    if s > t:
        raise UsageError(f"--interval needs S <= T, got {s} > {t}")
    if len(fc) == 0 or fc.floor_scale(t) is None:
        raise UsageError(f"complex is empty at scale {t}")
    classes = persistent_cohomology(fc, min(args.type_n, fc.max_dimension))
    report = persistent_sw(fc, s, t, args.type_n, classes, threads=args.threads)
    return _finish(fc, classes, report, args)


def cmd_nsw_bound(args) -> int:
    value = nsw_sample_bound(args.tau, args.vol, args.dim, args.eps, args.delta)
    _write(f"{value!r}\n", args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    fc = io.load_complex(args.input)
    counts = [fc.count(d) for d in range(fc.max_dimension + 1)]
    _write(f"ok: {len(fc)} cells, f-vector {counts}, {len(fc.scales)} distinct scales\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default=None, help="output path (default: stdout)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for parallel stages")
    common.add_argument("--seed", type=int, default=0, help="seed for any randomised step")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="perssw", description="Persistent Stiefel-Whitney classes over Z/2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cech", parents=[common], help="build a Čech filtration from a point cloud")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--max-scale", type=float, required=True)
    p.set_defaults(func=cmd_cech)

    p = sub.add_parser("barcodes", parents=[common], help="persistent cohomology barcodes")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--max-degree", type=int, default=2)
    p.set_defaults(func=cmd_barcodes)

    p = sub.add_parser("sw", parents=[common], help="Stiefel-Whitney classes at one scale")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--type-n", type=int, required=True)
    p.add_argument("--scale", type=float, default=None, help="default: largest filtration value")
    p.add_argument("--plot", default=None, help="SVG path for a barcode plot")
    p.set_defaults(func=cmd_sw)

    p = sub.add_parser("persistent-sw", parents=[common], help="persistent Stiefel-Whitney classes")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--type-n", type=int, required=True)
    p.add_argument("--interval", type=float, nargs=2, metavar=("S", "T"), required=True)
    p.add_argument("--plot", default=None, help="SVG path for a barcode plot")
    p.set_defaults(func=cmd_persistent_sw)

    p = sub.add_parser("nsw-bound", parents=[common], help="sample-size bound for Čech recovery")
    p.add_argument("--tau", type=float, required=True, help="reach lower bound")
    p.add_argument("--vol", type=float, required=True, help="volume upper bound")
    p.add_argument("--dim", type=int, required=True, help="manifold dimension")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.set_defaults(func=cmd_nsw_bound)

    p = sub.add_parser("validate", parents=[common], help="check a filtered-complex file")
    p.add_argument("--input", "-i", required=True)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.threads < 1:
        print("perssw: error: --threads must be positive", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (io.FormatError, ComplexError, UsageError, OSError, ValueError, BasisError) as exc:
        print(f"perssw: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

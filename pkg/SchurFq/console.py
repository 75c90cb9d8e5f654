# -*- coding: utf-8 -*-
# ==============================================================================
#   Copyright 2026 AlphaOmega Technology
#
#   Licensed under the AlphaOmega Technology Open License Version 1.0
#   You may not use this file except in compliance with this License.
#   You may obtain a copy of the License at
#
#       http://www.alphaomega-technology.com.au/license/AOT-OL/1.0
# ==============================================================================
"""
SchurFq.console Module
======================

The ``sfq`` command. Exit status is 0 when every asserted check matches, 1 on a
mismatch and 2 for bad arguments or configuration::

    sfq prob --shape 4,4,2,2 --q 3
    sfq joint --shapes "2,2;3,3" --targets "0;0" --q 2
    sfq classify --max-label 6 --q 2,3 --format csv
"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional, Sequence

try:
    from SchurFq import settings
    from SchurFq._info import __appname__, __desc__, __version__
    from SchurFq.counting import BudgetExceeded, JointCountSpec, conditional_prob, distribution, joint_distribution
    from SchurFq.field import make_field
    from SchurFq.formulas import NotCovered, matching_predictions, predicted_prob_zero
    from SchurFq.harness import (
        CONJECTURES,
        FAMILIES,
        block_structure_scan,
        conjecture_scan,
        independence_suite,
        parse_shape_list,
        rectangle_trichotomy_scan,
        report_emit,
        scan_classification,
        verify_shape,
        verify_sweep,
        ScanReport,
    )
    from SchurFq.partitions import parse_partition
    from SchurFq.schur import SINGULAR, block_structure, classify_matrix, jt_matrix, psi
except ImportError:
    from . import settings
    from ._info import __appname__, __desc__, __version__
    from .counting import BudgetExceeded, JointCountSpec, conditional_prob, distribution, joint_distribution
    from .field import make_field
    from .formulas import NotCovered, matching_predictions, predicted_prob_zero
    from .harness import (
        CONJECTURES,
        FAMILIES,
        block_structure_scan,
        conjecture_scan,
        independence_suite,
        parse_shape_list,
        rectangle_trichotomy_scan,
        report_emit,
        scan_classification,
        verify_shape,
        verify_sweep,
        ScanReport,
    )
    from .partitions import parse_partition
    from .schur import SINGULAR, block_structure, classify_matrix, jt_matrix, psi

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CONFIG = 2


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.replace(";", ",").split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got {0!r}".format(text))


def _shape(text: str):
    try:
        return parse_partition(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _emit(doc, args):
    if args.format == "csv" and isinstance(doc, list):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerows(doc)
        sys.stdout.write(out.getvalue())
    else:
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _emit_report(report: ScanReport, args) -> int:
    sys.stdout.write(report_emit(report, args.format, timings=not args.no_timings).decode("utf-8"))
    return report.exit_code


def cmd_prob(args) -> int:
    dist = distribution(args.shape, make_field(args.q), args.basis, args.method)
    count = dist.as_exact(0)
    _emit(
        {
            "shape": list(args.shape),
            "basis": args.basis,
            "q": args.q,
            "m": dist.m,
            "counts": {"0": str(count.count)},
            "total": count.total_text,
            "prob_zero": str(dist.prob_zero),
        },
        args,
    )
    return EXIT_OK


def cmd_dist(args) -> int:
    dist = distribution(args.shape, make_field(args.q), args.basis, args.method)
    if args.format == "csv":
        _emit([("value", "count")] + [(a, c) for a, c in enumerate(dist.counts)], args)
        return EXIT_OK
    _emit(
        {
            "shape": list(args.shape),
            "basis": args.basis,
            "q": args.q,
            "m": dist.m,
            "counts": {str(a): str(c) for a, c in enumerate(dist.counts)},
            "total": "{0:d}^{1:d}".format(args.q, dist.m),
            "prob_zero": str(dist.prob_zero),
            "uniform": dist.is_uniform(),
        },
        args,
    )
    return EXIT_OK


def cmd_joint(args) -> int:
    shapes = parse_shape_list(args.shapes)
    targets = _int_list(args.targets) if args.targets else [0] * len(shapes)
    spec = JointCountSpec(shapes, targets, args.basis)
    doc = {"shapes": [list(s) for s in shapes], "targets": targets, "basis": args.basis, "q": args.q}
    if args.conditional:
        joint, cond = conditional_prob(spec, args.q)
        doc["conditional"] = str(cond)
    else:
        joint = joint_distribution(spec, args.q)
    doc.update({"m": joint.m, "count": str(joint.count), "total": joint.total_text, "prob": str(joint.reduced)})
    _emit(doc, args)
    return EXIT_OK


def cmd_reduce(args) -> int:
    M = jt_matrix(args.shape, args.basis, make_field(args.q))

    def trace(kind, pos, matrix):
        sys.stdout.write("{0:s} at {1!r}\n{2:s}\n\n".format(kind, pos, matrix.to_text()))

    sys.stdout.write("{0:s}\n\n".format(M.to_text()))
    result = psi(M, trace=trace if args.trace else None)
    sys.stdout.write(
        "psi ({0:d}x{0:d}), alpha = {1:d}, class {2!s}\n{3:s}\n".format(
            result.matrix.n, result.alpha, classify_matrix(result.matrix), result.matrix.to_text()
        )
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.shape is not None:
        report = ScanReport(config=settings.echo())
        for q in args.q:
            report.records.append(verify_shape(args.shape, q, args.basis))
    else:
        report = verify_sweep(args.max_label, args.q, args.basis)
    return _emit_report(report, args)


def cmd_classify(args) -> int:
    return _emit_report(scan_classification(args.max_label, args.q, args.basis), args)


def cmd_independence(args) -> int:
    report = ScanReport(config=settings.echo())
    for q in args.q:
        part = independence_suite(args.family, args.limit, q, args.c, args.basis)
        report.records.extend(part.records)
        report.config = part.config
    report.config["q"] = list(args.q)
    return _emit_report(report, args)


def cmd_conjecture(args) -> int:
    shapes = parse_shape_list(args.shapes) if args.shapes else None
    report = conjecture_scan(args.which, args.max_label, args.q, args.basis, shapes)
    return _emit_report(report, args)


def cmd_predict(args) -> int:
    if args.all:
        preds = matching_predictions(args.shape, args.q, include_conjectures=True)
    else:
        preds = [predicted_prob_zero(args.shape, args.q, args.conjectures)]
    docs = [
        {"rule": None, "value": None}
        if isinstance(p, NotCovered)
        else {"rule": p.provenance, "value": str(p.value), "family": p.applicability, "conjecture": p.conjecture}
        for p in preds
    ]
    _emit({"predictions": docs} if args.all else docs[0], args)
    return EXIT_OK


def cmd_block(args) -> int:
    if args.trichotomy:
        scan = rectangle_trichotomy_scan(len(args.shape), args.q, args.samples, args.seed)
    elif args.assignment is None:
        scan = block_structure_scan(len(args.shape), args.q, args.samples or 1000, args.seed)
    else:
        blocks = block_structure(args.shape, make_field(args.q), _int_list(args.assignment))
        _emit({"blocks": None if blocks is SINGULAR else list(blocks)}, args)
        return EXIT_OK
    _emit(
        {"kind": scan.kind, "n": scan.n, "q": scan.q, "checked": scan.checked,
         "outcomes": scan.outcomes, "failures": scan.failures},
        args,
    )
    return EXIT_OK if scan.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=__appname__, description=__desc__)
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--workers", type=int, default=None, help="worker processes for counting")
    parser.add_argument("--budget", type=int, default=None, help="determinant evaluations allowed per count")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--no-timings", action="store_true", help="leave runtimes out of reports")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    def shape_args(p, many_q=False):
        p.add_argument("--shape", type=_shape, required=not many_q, default=None)
        p.add_argument("--basis", choices=("h", "e"), default="h")
        if many_q:
            p.add_argument("--q", type=_int_list, default=[2, 3])
        else:
            p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("prob", help="probability a Schur function vanishes")
    shape_args(p)
    p.add_argument("--method", choices=("fast", "brute"), default="fast")
    p.add_argument("--json", action="store_true", help="accepted for compatibility, output is json")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("dist", help="full value distribution")
    shape_args(p)
    p.add_argument("--method", choices=("fast", "brute"), default="fast")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("joint", help="joint probability of several shapes taking given values")
    p.add_argument("--shapes", required=True)
    p.add_argument("--targets", default=None)
    p.add_argument("--basis", choices=("h", "e"), default="h")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--conditional", action="store_true", help="condition the first shape on the second")
    p.set_defaults(func=cmd_joint)

    p = sub.add_parser("reduce", help="reduce the Jacobi-Trudi matrix")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--basis", choices=("h", "e"), default="h")
    p.add_argument("--q", type=int, default=101)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="compare counts with the closed forms")
    shape_args(p, many_q=True)
    p.add_argument("--max-label", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="check which shapes vanish with probability 1/q")
    p.add_argument("--max-label", type=int, default=6)
    p.add_argument("--q", type=_int_list, default=[2, 3])
    p.add_argument("--basis", choices=("h", "e"), default="h")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("independence", help="joint vanishing against products of marginals")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--limit", type=int, default=3)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--q", type=_int_list, default=[2])
    p.add_argument("--basis", choices=("h", "e"), default="h")
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("conjecture", help="report on a conjecture")
    p.add_argument("--which", choices=CONJECTURES, required=True)
    p.add_argument("--max-label", type=int, default=6)
    p.add_argument("--q", type=_int_list, default=[2, 3])
    p.add_argument("--shapes", default=None)
    p.add_argument("--basis", choices=("h", "e"), default="h")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("predict", help="closed form prediction for a shape")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--all", action="store_true", help="every matching rule")
    p.add_argument("--conjectures", action="store_true", help="also consult conjectured rules")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("block", help="block structure of rectangle reductions")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--assignment", default=None)
    p.add_argument("--trichotomy", action="store_true")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_block)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.budget is not None:
            settings.set_budget(args.budget)
        if args.workers is not None:
            settings.set_workers(args.workers)
        return args.func(args)
    except (ValueError, TypeError, SyntaxError, BudgetExceeded, ZeroDivisionError) as err:
        sys.stderr.write("{0:s}: {1!s}\n".format(__appname__, err))
        return EXIT_CONFIG
    finally:
        settings.set_budget()
        settings.set_workers()

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
r"""
SchurFq.harness Module
======================

Verification campaigns comparing exact counts with the closed forms of
:mod:`SchurFq.formulas`.

Every check produces a :class:`VerificationRecord` pairing the observed
probability with what was expected of it. A record is a ``Match`` when the
observed value stands in the record's relation (``==``, ``!=`` or ``<=``) to the
expected one. Scans gather records in a :class:`ScanReport`, which
:func:`report_emit` serialises to JSON or CSV::

    >>> from SchurFq.harness import verify_shape
    >>> rec = verify_shape((4, 4, 2, 2), 2)
    >>> rec.verdict, rec.observed, rec.predicted.provenance
    (<Verdict.MATCH: 'Match'>, Fraction(9, 16), 'prop-quasi-4422')

Records of conjectures are never asserted, a violation only shows in the summary
as ``conjecture_violations``.
"""

import csv
import enum
import io
import itertools
import json
import logging
import operator
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

try:
    from SchurFq import settings
    from SchurFq.counting import (
        BudgetExceeded,
        ExactProb,
        JointCountSpec,
        conditional_prob,
        distribution,
        joint_distribution,
    )
    from SchurFq.field import make_field
    from SchurFq.formulas import (
        NOT_COVERED,
        NoFit,
        NotCovered,
        Prediction,
        asymptotic_bound,
        matching_predictions,
        predicted_prob_zero,
        quasipoly_excess,
        quasipoly_fit,
        quasipolynomials,
        two_staircase_conjecture,
        upper_bound_conjecture,
    )
    from SchurFq.partitions import (
        Partition,
        classify,
        hook,
        parse_partition,
        partitions_by_max_label,
        rectangle,
        staircase,
        two_staircase,
    )
    from SchurFq.schur import (
        SINGULAR,
        SchurMatrix,
        block_structure,
        is_block_anti_diagonal,
        phi,
        phi_tilde,
        rectangle_matrix,
        rectangle_trichotomy,
    )
except ImportError:
    from . import settings
    from .counting import BudgetExceeded, ExactProb, JointCountSpec, conditional_prob, distribution, joint_distribution
    from .field import make_field
    from .formulas import (
        NOT_COVERED,
        NoFit,
        NotCovered,
        Prediction,
        asymptotic_bound,
        matching_predictions,
        predicted_prob_zero,
        quasipoly_excess,
        quasipoly_fit,
        quasipolynomials,
        two_staircase_conjecture,
        upper_bound_conjecture,
    )
    from .partitions import Partition, classify, hook, parse_partition, partitions_by_max_label, rectangle, staircase, two_staircase
    from .schur import (
        SINGULAR,
        SchurMatrix,
        block_structure,
        is_block_anti_diagonal,
        phi,
        phi_tilde,
        rectangle_matrix,
        rectangle_trichotomy,
    )

logger = logging.getLogger(__name__)

CSV_HEADER = ("shape", "q", "basis", "count0", "total", "prob", "predicted", "rule", "verdict", "ms")

FAMILIES = ("hooks-by-size", "squares", "rect-diff-c", "rect-sum-c", "staircase-step2")

CONJECTURES = ("upper-bound", "two-staircase", "quasi-poly")

# shape -> monomials used to fit its correction term
QUASI_FITS = {
    Partition((4, 4, 2, 2)): (0, 1, 2),
    Partition((4, 4, 3, 3)): (0, 3),
    Partition((4, 4, 3, 2)): (0, 1, 2),
}

RELATIONS = {"==": operator.eq, "!=": operator.ne, "<=": operator.le}

DEPENDENT_PAIR = (Partition((2, 2)), Partition((3, 3)))


class Verdict(enum.Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    NO_PREDICTION = "NoPrediction"
    SKIPPED = "Skipped"


Shape = Union[Partition, Tuple[Partition, ...]]


@dataclass
class VerificationRecord:
    """One observed probability and what it was checked against

    ``measured`` holds the raw count; ``observed`` the compared value, which is
    ``measured.reduced`` except for conditional checks.
    """

    shape: Shape
    q: int
    basis: str
    measured: Optional[ExactProb]
    predicted: Union[Prediction, NotCovered]
    verdict: Verdict
    runtime_ms: int = 0
    observed: Optional[Fraction] = None
    kind: str = "zero"
    relation: str = "=="
    asserted: bool = True
    reason: str = ""

    def __post_init__(self):
        if self.observed is None and self.measured is not None:
            self.observed = self.measured.reduced

    @property
    def shapes(self) -> Tuple[Partition, ...]:
        return (self.shape,) if isinstance(self.shape, Partition) else tuple(self.shape)

    @property
    def key(self):
        return (self.shapes, self.q, self.basis, self.kind)

    @property
    def shape_text(self) -> str:
        return ";".join(str(s) for s in self.shapes)


@dataclass
class ScanReport:
    records: List[VerificationRecord] = field(default_factory=list)
    config: Dict[str, object] = field(default_factory=dict)
    extras: Dict[str, object] = field(default_factory=dict)

    @property
    def summary(self) -> Dict[str, object]:
        out = {v.value: 0 for v in Verdict}
        for rec in self.records:
            out[rec.verdict.value] += 1
        out["records"] = len(self.records)
        out["asserted_mismatches"] = sum(
            1 for rec in self.records if rec.asserted and rec.verdict is Verdict.MISMATCH
        )
        out["conjecture_violations"] = sum(
            1 for rec in self.records if not rec.asserted and rec.verdict is Verdict.MISMATCH
        )
        out["ok"] = out["asserted_mismatches"] == 0
        return out

    @property
    def exit_code(self) -> int:
        return 0 if self.summary["ok"] else 1

    def sorted_records(self) -> List[VerificationRecord]:
        return sorted(self.records, key=lambda rec: rec.key)


@dataclass
class MatrixScan:
    """Outcome tally of a matrix property scan over rectangle reductions"""

    kind: str
    n: int
    q: int
    checked: int = 0
    outcomes: Dict[str, int] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def tally(self, outcome):
        key = str(outcome)
        self.outcomes[key] = self.outcomes.get(key, 0) + 1
        self.checked += 1


def _ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def _judge(observed: Fraction, predicted, relation: str = "==") -> Tuple[Verdict, str]:
    if isinstance(predicted, NotCovered):
        return Verdict.NO_PREDICTION, ""
    if RELATIONS[relation](observed, predicted.value):
        return Verdict.MATCH, ""
    return Verdict.MISMATCH, "observed {0!s}, expected {1:s} {2!s}".format(
        observed, relation, predicted.value
    )


def _bounds_reason(lam: Partition, q: int, p: Fraction) -> str:
    low, high = Fraction(1, q), asymptotic_bound(lam, q)
    if p < low:
        return "{0!s} below 1/{1:d}".format(p, q)
    if p > high:
        return "{0!s} above the bound {1!s}".format(p, high)
    return ""


def _log_record(rec: VerificationRecord):
    if rec.verdict is Verdict.SKIPPED:
        logger.warning("skipped %s over F_%d: %s", rec.shape_text, rec.q, rec.reason)
    elif rec.verdict is Verdict.MISMATCH and not rec.asserted:
        logger.warning("conjecture violated by %s over F_%d: %s", rec.shape_text, rec.q, rec.reason)
    else:
        logger.info("%s over F_%d (%s): %s %s", rec.shape_text, rec.q, rec.basis, rec.verdict.value, rec.reason)


def _config(**kwargs) -> Dict[str, object]:
    out = settings.echo()
    out.update(kwargs)
    return out


def verify_shape(
    lam,
    q: int,
    basis: str = "h",
    budget: Optional[int] = None,
    workers: Optional[int] = None,
    predicted=None,
    relation: str = "==",
) -> VerificationRecord:
    """Count :math:`P(s_\\lambda \\mapsto 0)` and compare it with the formulas

    Besides the first matching rule, every other rule covering the shape or its
    transpose must agree, and the value must lie in
    :math:`[1/q, 1/q + n(n-1)/q^2]`. A shape over budget gives a ``Skipped`` record.
    """
    lam = Partition(lam)
    f = make_field(q)
    start = time.perf_counter()
    if predicted is None:
        predicted = predicted_prob_zero(lam, f.q)
    try:
        dist = distribution(lam, f, basis, budget=budget, workers=workers)
    except BudgetExceeded as err:
        rec = VerificationRecord(lam, f.q, basis, None, predicted, Verdict.SKIPPED, _ms(start), reason=str(err))
        _log_record(rec)
        return rec
    measured = dist.as_exact(0)
    p = measured.reduced
    verdict, reason = _judge(p, predicted, relation)
    reasons = [reason] if reason else []
    for other in matching_predictions(lam, f.q):
        if other.value != p:
            verdict = Verdict.MISMATCH
            reasons.append("{0:s} predicts {1!s}".format(other.provenance, other.value))
    bound = _bounds_reason(lam, f.q, p)
    if bound:
        verdict = Verdict.MISMATCH
        reasons.append(bound)
    rec = VerificationRecord(
        lam, f.q, basis, measured, predicted, verdict, _ms(start), relation=relation, reason="; ".join(reasons)
    )
    _log_record(rec)
    return rec


def verify_sweep(
    max_label: int,
    q_list: Sequence[int],
    basis: str = "h",
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> ScanReport:
    """:func:`verify_shape` for every shape up to `max_label` and every field"""
    report = ScanReport(config=_config(max_label=max_label, q=list(q_list), basis=basis, scan="verify"))
    for lam in partitions_by_max_label(max_label):
        for q in q_list:
            report.records.append(verify_shape(lam, q, basis, budget, workers))
    return report


def scan_classification(
    max_label: int,
    q_list: Sequence[int],
    basis: str = "h",
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> ScanReport:
    """Check that exactly the hooks, rectangles and staircases vanish with probability 1/q

    Raises
    ------
    ArithmeticError
        If the enumeration does not hold :math:`2^L - 1` shapes.
    """
    shapes = partitions_by_max_label(max_label)
    if len(shapes) != 2**max_label - 1:
        raise ArithmeticError(
            "enumerated {0:d} shapes with max label <= {1:d}, expected {2:d}".format(
                len(shapes), max_label, 2**max_label - 1
            )
        )
    report = ScanReport(
        config=_config(max_label=max_label, q=list(q_list), basis=basis, scan="classify", shapes=len(shapes))
    )
    for lam in shapes:
        family = classify(lam).is_family
        for q in q_list:
            expected = Prediction(
                Fraction(1, q),
                "thm-classification",
                "hook, rectangle or staircase" if family else "outside the 1/q families",
            )
            report.records.append(
                verify_shape(lam, q, basis, budget, workers, predicted=expected, relation="==" if family else "!=")
            )
    return report


def _subsets(members: Sequence[Partition]) -> List[Tuple[Partition, ...]]:
    return [c for r in range(2, len(members) + 1) for c in itertools.combinations(members, r)]


def _family_groups(family: str, limit: int, c: int) -> List[Tuple[Tuple[Partition, ...], str, str]]:
    # (shapes, provenance, applicability)
    if family == "hooks-by-size":
        hooks = [hook(a, n - a) for n in range(1, limit + 1) for a in range(1, n + 1)]
        return [
            ((s, t), "prop-hook-independence", "hooks of different sizes")
            for s, t in itertools.combinations(hooks, 2)
            if s.size != t.size
        ]
    if family == "squares":
        members = [rectangle(k, k) for k in range(1, limit + 1)]
        return [(g, "prop-rect-diff", "squares (k^k)") for g in _subsets(members)]
    if family == "rect-diff-c":
        first = max(1, 1 - c)
        members = [rectangle(l + c, l) for l in range(first, first + limit)]
        return [(g, "prop-rect-diff", "(k^l), k-l = {0:d}".format(c)) for g in _subsets(members)]
    if family == "rect-sum-c":
        members = [rectangle(k, c - k) for k in range(1, c)][:limit]
        return [(g, "prop-rect-sum", "(k^l), k+l = {0:d}".format(c)) for g in _subsets(members)]
    if family == "staircase-step2":
        groups = [
            ((staircase(k), staircase(k + 2)), "prop-staircase-step2", "(delta_k, delta_k+2)")
            for k in range(1, limit + 1)
        ]
        groups.extend(
            ((staircase(1), staircase(k)), "cor-staircase-delta1", "(delta_1, delta_k)")
            for k in range(2, limit + 1)
            if k != 3
        )
        return groups
    raise ValueError("unknown family {0!r}, expected one of {1!s}".format(family, ", ".join(FAMILIES)))


def _marginal(cache: Dict, lam: Partition, q: int, basis: str, budget, workers) -> Fraction:
    key = (lam, q, basis)
    if key not in cache:
        cache[key] = distribution(lam, q, basis, budget=budget, workers=workers).prob_zero
    return cache[key]


def _joint_record(shapes, q, basis, expected, relation, budget, workers) -> VerificationRecord:
    start = time.perf_counter()
    spec = JointCountSpec(shapes, (0,) * len(shapes), basis)
    try:
        measured = joint_distribution(spec, q, budget, workers)
    except BudgetExceeded as err:
        return VerificationRecord(
            tuple(shapes), q, basis, None, expected, Verdict.SKIPPED, _ms(start), kind="joint", reason=str(err)
        )
    verdict, reason = _judge(measured.reduced, expected, relation)
    return VerificationRecord(
        tuple(shapes), q, basis, measured, expected, verdict, _ms(start), kind="joint", relation=relation, reason=reason
    )


def independence_suite(
    family: str,
    limit: int,
    q: int,
    c: int = 0,
    basis: str = "h",
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> ScanReport:
    """Check joint vanishing probabilities against the product of the marginals

    Rectangle families are checked on every subset of their first `limit`
    members, and also carry the pair ``(2,2), (3,3)`` that must *not* multiply.
    ``staircase-step2`` also checks :math:`P(s_{\\delta_{k+2}} \\mapsto 0 \\mid s_{\\delta_k} \\mapsto 0) = 1/q`.
    """
    groups = _family_groups(family, limit, c)
    report = ScanReport(config=_config(family=family, limit=limit, q=[q], c=c, basis=basis, scan="independence"))
    cache: Dict = {}
    for shapes, provenance, applicability in groups:
        try:
            product = Fraction(1)
            for lam in shapes:
                product *= _marginal(cache, lam, q, basis, budget, workers)
        except BudgetExceeded as err:
            rec = VerificationRecord(
                tuple(shapes), q, basis, None, NOT_COVERED, Verdict.SKIPPED, kind="joint", reason=str(err)
            )
        else:
            rec = _joint_record(shapes, q, basis, Prediction(product, provenance, applicability), "==", budget, workers)
        _log_record(rec)
        report.records.append(rec)
    if family in ("squares", "rect-diff-c", "rect-sum-c"):
        product = Fraction(1, q * q)
        rec = _joint_record(
            DEPENDENT_PAIR, q, basis, Prediction(product, "ex-dependent-pair", "(2,2) with (3,3)"), "!=", budget, workers
        )
        _log_record(rec)
        report.records.append(rec)
    if family == "staircase-step2":
        for k in range(1, limit + 1):
            start = time.perf_counter()
            shapes = (staircase(k + 2), staircase(k))
            expected = Prediction(Fraction(1, q), "prop-staircase-step2", "delta_k+2 given delta_k")
            try:
                joint, cond = conditional_prob(JointCountSpec(shapes, (0, 0), basis), q, budget, workers)
            except BudgetExceeded as err:
                rec = VerificationRecord(
                    shapes, q, basis, None, expected, Verdict.SKIPPED, _ms(start), kind="conditional", reason=str(err)
                )
            else:
                verdict, reason = _judge(cond, expected)
                rec = VerificationRecord(
                    shapes, q, basis, joint, expected, verdict, _ms(start), observed=cond, kind="conditional", reason=reason
                )
            _log_record(rec)
            report.records.append(rec)
    return report


def _quasi_fits(report: ScanReport, shapes: Iterable[Partition], q_list: Sequence[int], basis, budget, workers):
    for lam in shapes:
        if lam not in quasipolynomials:
            raise ValueError("{0!s} has no registered quasi-polynomial".format(lam))
        exponent, known = quasipolynomials[lam]
        points = []
        for q in q_list:
            rec = verify_shape(lam, q, basis, budget, workers)
            rec.kind = "conjecture"
            rec.asserted = False
            report.records.append(rec)
            if rec.measured is not None:
                points.append((q, quasipoly_excess(rec.observed, q, exponent)))
        monomials = QUASI_FITS.get(lam, (0, 1, 2))
        try:
            fitted = quasipoly_fit(points, known.modulus, max(monomials), monomials)
        except (NoFit, ValueError) as err:
            logger.warning("no quasi-polynomial fit for %s: %s", lam, err)
            report.extras[str(lam)] = {"fit": None, "reason": str(err)}
            continue
        agrees = all(
            fitted.branch(r) == known.branch(r) for r, _ in fitted.branches
        )
        if not agrees:
            logger.warning("fitted branches for %s differ from the registered ones", lam)
        report.extras[str(lam)] = {
            "fit": {
                str(r): {str(e): str(c) for e, c in sorted(fitted.branch(r).items())} for r, _ in fitted.branches
            },
            "modulus": known.modulus,
            "agrees": agrees,
        }


def conjecture_scan(
    which: str,
    max_label: int = 6,
    q_list: Sequence[int] = (2, 3),
    basis: str = "h",
    shapes: Optional[Sequence] = None,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> ScanReport:
    """Report supporting and violating instances of a conjecture, asserting nothing

    ``upper-bound`` sweeps all shapes up to `max_label`; ``two-staircase`` the
    shapes :math:`(2n, \\ldots, 2)`, :math:`n \\geq 2`, up to `max_label`;
    ``quasi-poly`` measures the shapes with registered quasi-polynomials at every
    field of `q_list` and refits their branches.
    """
    if which not in CONJECTURES:
        raise ValueError("unknown conjecture {0!r}, expected one of {1!s}".format(which, ", ".join(CONJECTURES)))
    report = ScanReport(config=_config(which=which, max_label=max_label, q=list(q_list), basis=basis, scan="conjecture"))
    if which == "quasi-poly":
        chosen = [Partition(s) for s in shapes] if shapes else list(QUASI_FITS)
        _quasi_fits(report, chosen, q_list, basis, budget, workers)
        return report
    if which == "upper-bound":
        chosen = [Partition(s) for s in shapes] if shapes else partitions_by_max_label(max_label)
    else:
        chosen = [Partition(s) for s in shapes] if shapes else [
            two_staircase(n) for n in range(2, max_label) if two_staircase(n).max_label <= max_label
        ]
    for lam in chosen:
        for q in q_list:
            if which == "upper-bound":
                expected = Prediction(upper_bound_conjecture(lam, q), "conj-upper-bound", "k parts", True)
                relation = "<="
            else:
                expected = Prediction(two_staircase_conjecture(lam, q), "conj-two-staircase", "(2n,...,4,2)", True)
                relation = "=="
            start = time.perf_counter()
            try:
                measured = distribution(lam, q, basis, budget=budget, workers=workers).as_exact(0)
            except BudgetExceeded as err:
                rec = VerificationRecord(
                    lam, q, basis, None, expected, Verdict.SKIPPED, _ms(start),
                    kind="conjecture", relation=relation, asserted=False, reason=str(err),
                )
            else:
                verdict, reason = _judge(measured.reduced, expected, relation)
                rec = VerificationRecord(
                    lam, q, basis, measured, expected, verdict, _ms(start),
                    kind="conjecture", relation=relation, asserted=False, reason=reason,
                )
            _log_record(rec)
            report.records.append(rec)
    return report


def _prefixes(n: int, q: int, prefixes: Optional[int], seed: int) -> Iterable[Tuple[int, ...]]:
    width = 2 * n - 1
    if prefixes is None:
        for r in range(width + 1):
            yield from itertools.product(range(q), repeat=r)
        return
    rng = np.random.default_rng(seed)
    for _ in range(prefixes):
        r = int(rng.integers(0, width + 1))
        yield tuple(int(v) for v in rng.integers(0, q, size=r))


def rectangle_trichotomy_scan(n: int, q: int, prefixes: Optional[int] = None, seed: int = 0) -> MatrixScan:
    """Classify :math:`\\phi(A; x_1 = a_1, \\ldots, x_r = a_r)` for the ``n x n`` rectangle matrix

    Every prefix length :math:`r \\leq 2n - 1` is enumerated, or `prefixes`
    random prefixes are drawn when given.
    """
    f = make_field(q)
    A = rectangle_matrix(n, f)
    scan = MatrixScan("trichotomy", n, q)
    for prefix in _prefixes(n, q, prefixes, seed):
        try:
            scan.tally(rectangle_trichotomy(phi(A, prefix), n))
        except ValueError as err:
            scan.checked += 1
            scan.failures.append("prefix {0!r}: {1!s}".format(prefix, err))
    logger.info("trichotomy n=%d q=%d: %r", n, q, scan.outcomes)
    return scan


def block_structure_scan(n: int, q: int, samples: int = 1000, seed: int = 0) -> MatrixScan:
    """Random full assignments of the ``n x n`` rectangle matrix

    Each :func:`phi_tilde` step must keep the determinant, every prefix must
    split into anti-diagonal blocks beside the :func:`phi` reduction, and the
    final blocks are tallied.
    """
    f = make_field(q)
    A = rectangle_matrix(n, f)
    rng = np.random.default_rng(seed)
    scan = MatrixScan("blocks", n, q)
    empty = SchurMatrix(f, [])
    for _ in range(samples):
        a = tuple(int(v) for v in rng.integers(0, q, size=2 * n - 1))
        want = A.det_at(a)
        steps, reduced = [], {}
        phi_tilde(A, a, trace=lambda i, value, M: steps.append((i, M)))
        phi(A, a, trace=lambda i, value, M: reduced.__setitem__(i, M))
        for i, M in steps:
            # phi stops once its matrix is empty
            B = reduced.get(i, empty)
            if M.det_at(a) != want:
                scan.failures.append("det changed at x{0:d} for {1!r}".format(i, a))
                break
            if not is_block_anti_diagonal(M, B):
                scan.failures.append("not block anti-diagonal at x{0:d} for {1!r}".format(i, a))
                break
        try:
            blocks = block_structure(rectangle(n, n), f, a)
        except ArithmeticError as err:
            scan.failures.append(str(err))
            scan.checked += 1
            continue
        scan.tally("singular" if blocks is SINGULAR else ",".join(str(b) for b in blocks))
    logger.info("blocks n=%d q=%d: %r", n, q, scan.outcomes)
    return scan


def _record_dict(rec: VerificationRecord, timings: bool) -> Dict[str, object]:
    predicted = rec.predicted if isinstance(rec.predicted, Prediction) else None
    shapes = [list(s) for s in rec.shapes]
    return {
        "shape": shapes[0] if isinstance(rec.shape, Partition) else shapes,
        "q": rec.q,
        "basis": rec.basis,
        "kind": rec.kind,
        "m": rec.measured.m if rec.measured else None,
        "count": str(rec.measured.count) if rec.measured else None,
        "total": rec.measured.total_text if rec.measured else None,
        "prob": str(rec.observed) if rec.observed is not None else None,
        "predicted": str(predicted.value) if predicted else None,
        "rule": predicted.provenance if predicted else None,
        "applicability": predicted.applicability if predicted else None,
        "conjecture": predicted.conjecture if predicted else False,
        "relation": rec.relation,
        "verdict": rec.verdict.value,
        "asserted": rec.asserted,
        "reason": rec.reason,
        "ms": rec.runtime_ms if timings else None,
    }


def report_emit(report: ScanReport, format: str = "json", timings: bool = True) -> bytes:
    """Serialise a report, records sorted by shape, field and basis

    Without `timings` the output depends on nothing but the records.
    """
    records = report.sorted_records()
    if format == "json":
        doc = {
            "config": report.config,
            "records": [_record_dict(rec, timings) for rec in records],
            "summary": report.summary,
        }
        if report.extras:
            doc["extras"] = report.extras
        return (json.dumps(doc, sort_keys=True, indent=1) + "\n").encode("utf-8")
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rec in records:
            d = _record_dict(rec, timings)
            writer.writerow(
                [
                    rec.shape_text,
                    rec.q,
                    rec.basis,
                    d["count"] or "",
                    d["total"] or "",
                    d["prob"] or "",
                    d["predicted"] or "",
                    d["rule"] or "",
                    d["verdict"],
                    "" if d["ms"] is None else d["ms"],
                ]
            )
        return out.getvalue().encode("utf-8")
    raise ValueError("unknown report format {0!r}, expected json or csv".format(format))


def _shape_from(data) -> Shape:
    if data and isinstance(data[0], list):
        return tuple(Partition(s) for s in data)
    return Partition(data)


def report_parse(data: bytes, format: str = "json") -> ScanReport:
    """Rebuild a :class:`ScanReport` from :func:`report_emit` JSON output"""
    if format != "json":
        raise ValueError("only json reports can be parsed, got {0!r}".format(format))
    doc = json.loads(data.decode("utf-8"))
    report = ScanReport(config=doc.get("config", {}), extras=doc.get("extras", {}))
    for d in doc["records"]:
        measured = None
        if d["count"] is not None:
            q_text, _, m_text = d["total"].partition("^")
            measured = ExactProb(int(d["count"]), int(q_text), int(m_text))
        if d["predicted"] is None:
            predicted = NOT_COVERED
        else:
            predicted = Prediction(Fraction(d["predicted"]), d["rule"], d["applicability"], d["conjecture"])
        report.records.append(
            VerificationRecord(
                _shape_from(d["shape"]),
                d["q"],
                d["basis"],
                measured,
                predicted,
                Verdict(d["verdict"]),
                d["ms"] or 0,
                observed=None if d["prob"] is None else Fraction(d["prob"]),
                kind=d["kind"],
                relation=d["relation"],
                asserted=d["asserted"],
                reason=d["reason"],
            )
        )
    return report


def parse_shape_list(text: str) -> List[Partition]:
    """``"2,2;3,3"`` to its partitions"""
    return [parse_partition(part) for part in text.split(";")]

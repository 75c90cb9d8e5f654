#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json
import unittest
from fractions import Fraction

from SchurFq.counting import ExactProb
from SchurFq.formulas import NOT_COVERED, Prediction
from SchurFq.partitions import Partition
from SchurFq.harness import (
    CSV_HEADER,
    ScanReport,
    VerificationRecord,
    Verdict,
    block_structure_scan,
    conjecture_scan,
    independence_suite,
    parse_shape_list,
    rectangle_trichotomy_scan,
    report_emit,
    report_parse,
    scan_classification,
    verify_shape,
    verify_sweep,
)


class TestVerifyShape(unittest.TestCase):
    def testQuasiShape(self):
        rec = verify_shape((4, 4, 2, 2), 2)
        self.assertIs(rec.verdict, Verdict.MATCH)
        self.assertEqual(rec.observed, Fraction(9, 16))
        self.assertEqual(rec.predicted.provenance, "prop-quasi-4422")
        self.assertEqual((rec.measured.count, rec.measured.m), (72, 7))

    def testNoPrediction(self):
        rec = verify_shape((5, 3, 1, 1), 2)
        self.assertIs(rec.verdict, Verdict.NO_PREDICTION)
        self.assertIs(rec.predicted, NOT_COVERED)

    def testSkipped(self):
        rec = verify_shape((4, 4), 5, budget=10)
        self.assertIs(rec.verdict, Verdict.SKIPPED)
        self.assertIsNone(rec.measured)
        self.assertIn("budget", rec.reason)

    def testWrongPrediction(self):
        rec = verify_shape((2, 1), 2, predicted=Prediction(Fraction(1, 3), "made-up", "test"))
        self.assertIs(rec.verdict, Verdict.MISMATCH)
        self.assertIn("1/3", rec.reason)

    def testRelation(self):
        rec = verify_shape((3, 2), 2, predicted=Prediction(Fraction(1, 2), "not-one-over-q", "test"), relation="!=")
        self.assertIs(rec.verdict, Verdict.MATCH)

    def testDualBasis(self):
        self.assertIs(verify_shape((3, 2), 3, basis="e").verdict, Verdict.MATCH)


class TestScans(unittest.TestCase):
    def testSweep(self):
        report = verify_sweep(4, (2, 3))
        self.assertEqual(len(report.records), 30)
        self.assertTrue(report.summary["ok"])
        self.assertEqual(report.summary["Mismatch"], 0)
        self.assertEqual(report.exit_code, 0)

    def testClassification(self):
        report = scan_classification(4, (2, 3))
        self.assertEqual(report.summary["Match"], 30)
        relations = {rec.shape: rec.relation for rec in report.records}
        self.assertEqual(relations[Partition((3, 2))], "!=")
        self.assertEqual(relations[Partition((2, 2, 2))], "==")
        self.assertEqual(report.config["shapes"], 15)

    def testClassificationSkips(self):
        report = scan_classification(5, (3,), budget=50)
        self.assertGreater(report.summary["Skipped"], 0)
        self.assertTrue(report.summary["ok"])


class TestIndependence(unittest.TestCase):
    def testHooks(self):
        report = independence_suite("hooks-by-size", 3, 2)
        self.assertTrue(report.records)
        self.assertTrue(all(rec.verdict is Verdict.MATCH for rec in report.records))
        self.assertTrue(all(rec.shapes[0].size != rec.shapes[1].size for rec in report.records))

    def testSquares(self):
        report = independence_suite("squares", 2, 2)
        self.assertEqual(len(report.records), 2)
        last = report.records[-1]
        self.assertEqual(last.shapes, (Partition((2, 2)), Partition((3, 3))))
        self.assertEqual(last.relation, "!=")
        self.assertEqual(last.observed, Fraction(5, 16))
        self.assertTrue(report.summary["ok"])

    def testRectangleFamilies(self):
        for family, c in (("rect-diff-c", 1), ("rect-sum-c", 4)):
            report = independence_suite(family, 2, 2, c=c)
            self.assertTrue(report.summary["ok"], family)

    def testStaircases(self):
        report = independence_suite("staircase-step2", 1, 3)
        kinds = [rec.kind for rec in report.records]
        self.assertEqual(kinds, ["joint", "conditional"])
        self.assertEqual(report.records[-1].observed, Fraction(1, 3))
        self.assertTrue(report.summary["ok"])

    def testUnknownFamily(self):
        with self.assertRaises(ValueError):
            independence_suite("dominoes", 2, 2)


class TestConjectures(unittest.TestCase):
    def testUpperBound(self):
        report = conjecture_scan("upper-bound", 3, (2,))
        self.assertEqual(len(report.records), 7)
        self.assertTrue(all(not rec.asserted and rec.relation == "<=" for rec in report.records))
        self.assertEqual(report.summary["conjecture_violations"], 0)

    def testTwoStaircase(self):
        report = conjecture_scan("two-staircase", 5, (2, 3))
        self.assertEqual([rec.shape for rec in report.records], [Partition((4, 2))] * 2)
        self.assertTrue(all(rec.verdict is Verdict.MATCH for rec in report.records))

    def testQuasiFit(self):
        report = conjecture_scan("quasi-poly", q_list=(2, 3, 4, 5, 7, 8), shapes=[(4, 4, 2, 2)])
        fit = report.extras["4,4,2,2"]
        self.assertTrue(fit["agrees"])
        self.assertEqual(fit["fit"]["0"], {"1": "-1", "2": "1"})
        self.assertTrue(report.summary["ok"])

    def testQuasiFitTooFewFields(self):
        report = conjecture_scan("quasi-poly", q_list=(2, 3), shapes=[(4, 4, 2, 2)])
        self.assertIsNone(report.extras["4,4,2,2"]["fit"])
        self.assertEqual(len(report.records), 2)

    def testErrors(self):
        with self.assertRaises(ValueError):
            conjecture_scan("riemann")
        with self.assertRaises(ValueError):
            conjecture_scan("quasi-poly", q_list=(2,), shapes=[(3, 2)])


class TestMatrixScans(unittest.TestCase):
    def testTrichotomy(self):
        for n, q in ((2, 2), (2, 3), (3, 2)):
            scan = rectangle_trichotomy_scan(n, q)
            self.assertTrue(scan.ok, scan.failures)
            self.assertEqual(scan.checked, sum((q**r for r in range(2 * n)), 0))

    def testTrichotomyThreeByThree(self):
        scan = rectangle_trichotomy_scan(3, 3)
        self.assertTrue(scan.ok, scan.failures)
        self.assertEqual(scan.checked, sum(3**r for r in range(6)))

    def testTrichotomySampled(self):
        scan = rectangle_trichotomy_scan(3, 5, prefixes=200, seed=1)
        self.assertTrue(scan.ok, scan.failures)
        self.assertEqual(scan.checked, 200)
        scan = rectangle_trichotomy_scan(4, 5, prefixes=10000, seed=3)
        self.assertTrue(scan.ok, scan.failures[:5])
        self.assertEqual(scan.checked, 10000)

    def testBlocks(self):
        for n, q in ((3, 2), (3, 3), (3, 5), (4, 5)):
            scan = block_structure_scan(n, q, samples=1000, seed=2)
            self.assertTrue(scan.ok, scan.failures[:5])
            self.assertEqual(sum(scan.outcomes.values()), 1000)


class TestReport(unittest.TestCase):
    def setUp(self):
        hit = ExactProb(1, 2, 1)
        self.report = ScanReport(config={"scan": "test"})
        self.report.records = [
            VerificationRecord(
                Partition((2, 1)), 2, "h", hit, Prediction(Fraction(1, 2), "prop-hook", "hook"), Verdict.MATCH, 12
            ),
            VerificationRecord(
                Partition((1,)), 2, "h", hit, Prediction(Fraction(1, 4), "conj", "c", True), Verdict.MISMATCH, 3,
                kind="conjecture", asserted=False, reason="observed 1/2",
            ),
            VerificationRecord(
                (Partition((1,)), Partition((2,))), 3, "h", ExactProb(1, 3, 2), NOT_COVERED, Verdict.NO_PREDICTION, 5,
                kind="joint",
            ),
        ]

    def testSummary(self):
        summary = self.report.summary
        self.assertEqual(summary["Match"], 1)
        self.assertEqual(summary["conjecture_violations"], 1)
        self.assertEqual(summary["asserted_mismatches"], 0)
        self.assertTrue(summary["ok"])
        self.report.records[0].verdict = Verdict.MISMATCH
        self.assertEqual(self.report.exit_code, 1)

    def testJsonDeterministic(self):
        a = report_emit(self.report, timings=False)
        self.report.records[0].runtime_ms = 999
        self.assertEqual(report_emit(self.report, timings=False), a)
        doc = json.loads(a.decode("utf-8"))
        self.assertEqual([r["shape"] for r in doc["records"]], [[1], [[1], [2]], [2, 1]])
        self.assertTrue(all(r["ms"] is None for r in doc["records"]))

    def testRoundTrip(self):
        parsed = report_parse(report_emit(self.report))
        self.assertEqual(parsed.summary, self.report.summary)
        self.assertEqual([r.key for r in parsed.sorted_records()], [r.key for r in self.report.sorted_records()])
        self.assertEqual(parsed.records[0].observed, Fraction(1, 2))

    def testCsv(self):
        lines = report_emit(self.report, "csv").decode("utf-8").splitlines()
        self.assertEqual(lines[0], ",".join(CSV_HEADER))
        self.assertEqual(lines[1], "1,2,h,1,2^1,1/2,1/4,conj,Mismatch,3")
        self.assertEqual(lines[2], "1;2,3,h,1,3^2,1/9,,,NoPrediction,5")
        self.assertTrue(report_emit(self.report, "csv", timings=False).decode("utf-8").splitlines()[3].endswith("Match,"))

    def testUnknownFormat(self):
        with self.assertRaises(ValueError):
            report_emit(self.report, "xml")
        with self.assertRaises(ValueError):
            report_parse(b"{}", "csv")

    def testShapeList(self):
        self.assertEqual(parse_shape_list("2,2;3,3"), [Partition((2, 2)), Partition((3, 3))])


if __name__ == "__main__":
    unittest.main()

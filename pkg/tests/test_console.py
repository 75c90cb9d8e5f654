#!/usr/bin/env python
# -*- coding: utf-8 -*-

import io
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from SchurFq import formulas, settings, util
from SchurFq.console import EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, run


class ConsoleTestCase(unittest.TestCase):
    def call(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = run(list(argv))
        self.stderr = err.getvalue()
        return code, out.getvalue()

    def callJson(self, *argv):
        code, text = self.call(*argv)
        return code, json.loads(text)


class TestCounting(ConsoleTestCase):
    def testProb(self):
        code, doc = self.callJson("prob", "--shape", "2,2", "--q", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["prob_zero"], "1/3")
        self.assertEqual(doc["counts"], {"0": "9"})
        self.assertEqual(doc["total"], "3^3")

    def testBruteMethod(self):
        code, doc = self.callJson("prob", "--shape", "4^2,2^2", "--q", "2", "--method", "brute")
        self.assertEqual(doc["prob_zero"], "9/16")

    def testDist(self):
        code, doc = self.callJson("dist", "--shape", "2,2", "--q", "3")
        self.assertEqual(doc["counts"], {"0": "9", "1": "12", "2": "6"})
        self.assertFalse(doc["uniform"])

    def testDistCsv(self):
        code, text = self.call("--format", "csv", "dist", "--shape", "2,2", "--q", "3")
        self.assertEqual(text, "value,count\n0,9\n1,12\n2,6\n")

    def testJoint(self):
        code, doc = self.callJson("joint", "--shapes", "2,2;3,3", "--q", "2")
        self.assertEqual((doc["count"], doc["total"], doc["prob"]), ("5", "2^4", "5/16"))

    def testConditional(self):
        code, doc = self.callJson("joint", "--shapes", "3,2,1;1", "--q", "3", "--conditional")
        self.assertEqual(doc["conditional"], "1/3")


class TestErrors(ConsoleTestCase):
    def testNotPrimePower(self):
        code, _ = self.call("prob", "--shape", "2,1", "--q", "6")
        self.assertEqual(code, EXIT_CONFIG)
        self.assertIn("6 = 2 * 3 is not a prime power", self.stderr)

    def testBudget(self):
        code, _ = self.call("--budget", "10", "prob", "--shape", "4,4", "--q", "5")
        self.assertEqual(code, EXIT_CONFIG)
        self.assertEqual(settings.budget(), settings.DEFAULT_BUDGET)

    def testConditioning(self):
        code, doc = self.callJson("joint", "--shapes", "1;2", "--targets", "0;0", "--q", "2", "--conditional")
        self.assertEqual((code, doc["conditional"]), (EXIT_OK, "1/2"))
        code, _ = self.call("joint", "--shapes", "1", "--q", "2", "--conditional")
        self.assertEqual(code, EXIT_CONFIG)
        # the empty shape is 1 everywhere, so never 0
        code, _ = self.call("joint", "--shapes", "1;", "--q", "2", "--conditional")
        self.assertEqual(code, EXIT_CONFIG)
        self.assertIn("no assignment sends", self.stderr)

    def testBadArguments(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                run(["prob", "--shape", "2,3", "--q", "2"])
            self.assertEqual(cm.exception.code, 2)
            with self.assertRaises(SystemExit) as cm:
                run([])
            self.assertEqual(cm.exception.code, 2)

    def testVersion(self):
        with redirect_stdout(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                run(["--version"])
        self.assertEqual(cm.exception.code, 0)


class TestMatrices(ConsoleTestCase):
    def testReduce(self):
        code, text = self.call("reduce", "--shape", "2,1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("[x3 - x1*x2]", text)
        self.assertIn("class Special, Reduced, General\n", text)
        self.assertNotIn("MatrixClass", text)

    def testReduceTrace(self):
        code, text = self.call("reduce", "--shape", "4,4,2,2", "--trace")
        self.assertIn("rows at (2, 0)", text)
        self.assertIn("psi (2x2)", text)

    def testBlock(self):
        code, doc = self.callJson("block", "--shape", "3,3,3", "--q", "5", "--assignment", "0,2,1,1,4")
        self.assertEqual(doc, {"blocks": [2, 1]})
        code, doc = self.callJson("block", "--shape", "2,2", "--q", "2", "--assignment", "1,1,1")
        self.assertEqual(doc, {"blocks": None})

    def testBlockScans(self):
        code, doc = self.callJson("block", "--shape", "2,2", "--q", "3", "--trichotomy")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["checked"], 1 + 3 + 9 + 27)
        code, doc = self.callJson("block", "--shape", "3,3,3", "--q", "3", "--samples", "20")
        self.assertEqual((code, doc["failures"]), (EXIT_OK, []))


class TestPredict(ConsoleTestCase):
    def testPredict(self):
        code, doc = self.callJson("predict", "--shape", "4,4,2,2", "--q", "3")
        self.assertEqual(doc["rule"], "prop-quasi-4422")
        self.assertEqual(doc["value"], "95/243")
        self.assertFalse(doc["conjecture"])

    def testAll(self):
        code, doc = self.callJson("predict", "--shape", "2,1", "--q", "2", "--all")
        self.assertEqual([p["rule"] for p in doc["predictions"]], ["prop-hook", "thm-staircase", "prop-far-apart"])

    def testNotCovered(self):
        code, doc = self.callJson("predict", "--shape", "8,6,4,2", "--q", "2")
        self.assertEqual(doc, {"rule": None, "value": None})
        code, doc = self.callJson("predict", "--shape", "8,6,4,2", "--q", "2", "--conjectures")
        self.assertEqual(doc["rule"], "conj-two-staircase")


class TestReports(ConsoleTestCase):
    def testVerifyShape(self):
        code, doc = self.callJson("--no-timings", "verify", "--shape", "2,2,1", "--q", "2,3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([r["prob"] for r in doc["records"]], ["5/8", "11/27"])
        self.assertTrue(all(r["ms"] is None for r in doc["records"]))

    def testDeterministic(self):
        argv = ("--no-timings", "classify", "--max-label", "3", "--q", "2,3")
        first = self.call(*argv)
        self.assertEqual(first, self.call(*argv))
        self.assertEqual(first[0], EXIT_OK)

    def testCsvReport(self):
        code, text = self.call("--format", "csv", "verify", "--max-label", "2", "--q", "2")
        lines = text.splitlines()
        self.assertEqual(lines[0], "shape,q,basis,count0,total,prob,predicted,rule,verdict,ms")
        self.assertEqual(len(lines), 4)

    def testMismatchExit(self):
        util.addRule("wrong-single-box", "shape 1", 0, lambda lam: lam == (1,), lambda lam, q: Fraction(1, 3))
        formulas.recalculate_rule_order()
        try:
            code, doc = self.callJson("verify", "--shape", "1", "--q", "2")
        finally:
            del formulas.rules["wrong-single-box"]
            formulas.recalculate_rule_order()
        self.assertEqual(code, EXIT_MISMATCH)
        self.assertFalse(doc["summary"]["ok"])

    def testIndependence(self):
        code, doc = self.callJson("--no-timings", "independence", "--family", "squares", "--limit", "2", "--q", "2,3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["config"]["q"], [2, 3])
        self.assertEqual(doc["summary"]["records"], 4)

    def testConjecture(self):
        code, doc = self.callJson("conjecture", "--which", "two-staircase", "--max-label", "5", "--q", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["records"][0]["shape"], [4, 2])

    def testWorkers(self):
        code, doc = self.callJson("--workers", "2", "prob", "--shape", "3,3", "--q", "9")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(settings.workers(), settings.DEFAULT_WORKERS)


if __name__ == "__main__":
    unittest.main()

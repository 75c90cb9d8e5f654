#!/usr/bin/env python
# -*- coding: utf-8 -*-

import itertools
import unittest

from hypothesis import given, settings, strategies as st

from SchurFq.field import make_field
from SchurFq.multipoly import NotLabelForm, parse
from SchurFq.partitions import Partition, partitions_by_max_label, rectangle
from SchurFq.schur import (
    SINGULAR,
    MatrixClass,
    NotGeneralSchur,
    SchurMatrix,
    block_structure,
    classify_matrix,
    corner_minors,
    corner_minors_unchanged,
    det_numeric,
    is_block_anti_diagonal,
    jt_matrix,
    phi,
    phi_tilde,
    psi,
    psi_tilde,
    rectangle_matrix,
    rectangle_trichotomy,
)

F101 = make_field(101)


def matrix(rows, field=F101):
    return SchurMatrix(field, rows)


GENERAL_6X6 = [
    ["x4", "x5", "x6 - x1*x3", "x8 - x5^2", "x10", "x13 + 4"],
    ["x2", "x3", "x5 - x3", "x7 - x5^2", "x9", "x12 - x11 + 3"],
    [0, "x2 - x1", "x4", "x5", "x8 - x1 - x2", "x11"],
    [0, 3, "x3 - 3*x1*x2", "x4", "x7", "x10 - x7*x9"],
    [0, 0, "x2 - x1", "x3 - x2", "x6 - 4*x2 + 4", "2*x9"],
    [0, 0, 0, "x1", "x2 - 2", "x8"],
]

# the bottom two rows carry labels 2,3,5,6 and 1,2,4,5 so every 2x2 label sum agrees
SPECIAL_4X4 = [
    ["x5", "x6", "x8 - x5^2", "x9 - x3*x6"],
    ["x4", "x5 - x2", "x7", "x8"],
    ["x2", "x3", "x5", "x6"],
    ["x1", "x2", "x4", "x5"],
]

M1 = [
    [0, "2*x2", "x4", "x5"],
    [0, 1, "4*x3", "x4"],
    [0, 0, "x1", "x3 - x2"],
    [0, 0, 0, "x2"],
]


class TestJacobiTrudi(unittest.TestCase):
    def testSmall(self):
        self.assertEqual(jt_matrix(Partition((1,))), matrix([["x1"]]))
        self.assertEqual(jt_matrix(Partition((2, 1))), matrix([["x2", "x3"], [1, "x1"]]))
        self.assertEqual(jt_matrix(Partition((3, 1, 1))).n, 3)

    def testDualBasis(self):
        M = jt_matrix(Partition((3, 1)), basis="e")
        self.assertEqual(M, SchurMatrix(F101, [["x2", "x3", "x4"], [1, "x1", "x2"], [0, 1, "x1"]], "e"))
        with self.assertRaises(ValueError):
            jt_matrix(Partition((2,)), basis="p")

    def testText(self):
        self.assertEqual(jt_matrix(Partition((2, 1))).to_text(), "[x2, x3]\n[1, x1]")

    def testRectangleMatrix(self):
        self.assertEqual(rectangle_matrix(3), jt_matrix(rectangle(3, 3)))

    def testNotSquare(self):
        with self.assertRaises(ValueError):
            matrix([["x1", "x2"], ["x1"]])


class TestClassify(unittest.TestCase):
    def testGeneralOnly(self):
        self.assertEqual(classify_matrix(matrix(GENERAL_6X6)), MatrixClass.GENERAL)
        self.assertEqual(classify_matrix(jt_matrix(Partition((2, 1)))), MatrixClass.GENERAL)

    def testSpecial(self):
        flags = classify_matrix(matrix(SPECIAL_4X4))
        self.assertEqual(flags, MatrixClass.GENERAL | MatrixClass.REDUCED | MatrixClass.SPECIAL)
        self.assertEqual(str(flags), "Special, Reduced, General")
        self.assertEqual(str(MatrixClass.GENERAL | MatrixClass.REDUCED), "Reduced, General")
        self.assertEqual(str(MatrixClass.NONE), "None")

    def testLabelSumViolation(self):
        # uncorrected bottom rows, rows 0 and 2 then disagree on label sums
        rows = [list(r) for r in SPECIAL_4X4]
        rows[2] = ["x2", "x3", "x4", "x5"]
        rows[3] = ["x1", "x2", "x3", "x4"]
        self.assertEqual(classify_matrix(matrix(rows)), MatrixClass.GENERAL | MatrixClass.REDUCED)

    def testNotGeneral(self):
        self.assertEqual(classify_matrix(matrix([["x1", "x2"], ["x3", "x4"]])), MatrixClass.NONE)
        self.assertEqual(classify_matrix(matrix([["x1^2"]])), MatrixClass.NONE)
        self.assertEqual(classify_matrix(matrix([[0, "x2"], ["x2", "x1"]])), MatrixClass.NONE)

    def testConstantTerm(self):
        rows = [list(r) for r in SPECIAL_4X4]
        rows[0][0] = "x5 + 1"
        self.assertEqual(classify_matrix(matrix(rows)), MatrixClass.GENERAL | MatrixClass.REDUCED)


class TestPsi(unittest.TestCase):
    def setUp(self):
        self.M2 = jt_matrix(Partition((4, 4, 2, 2)))

    def testM1(self):
        result = psi(matrix(M1))
        self.assertEqual(
            result.matrix,
            matrix([[0, "x4 - 8*x2*x3", "x5 - 2*x2*x4"], [0, "x1", "x3 - x2"], [0, 0, "x2"]]),
        )
        self.assertEqual(result.pivots, ((1, 1),))

    def testFattenedHook(self):
        want = matrix(
            [
                ["x6 - x1*x5 - x2*x4 + x1^2*x4", "x7 - x2*x5 - x3*x4 + x1*x2*x4"],
                ["x5 + x1^2*x3 - x2*x3 - x1*x4", "x6 - x2*x4 - x3^2 + x1*x2*x3"],
            ]
        )
        self.assertEqual(psi(self.M2).matrix, want)

    def testNoConstants(self):
        M = matrix(SPECIAL_4X4)
        result = psi(M)
        self.assertIs(result.matrix, M)
        self.assertEqual(result.alpha, 1)
        self.assertEqual(psi_tilde(M).matrix, M)

    def testNotGeneral(self):
        with self.assertRaises(NotGeneralSchur):
            psi(matrix([["x1", "x2"], ["x3", "x4"]]))

    def testDeterminantScale(self):
        for h in range(1, 6):
            for lam in partitions_by_max_label(h):
                M = jt_matrix(lam)
                result = psi(M)
                self.assertEqual(result.matrix.det(), M.det().scale(result.alpha), str(lam))

    def testTildeKeepsDeterminant(self):
        for lam in (Partition((4, 4, 2, 2)), Partition((3, 2, 1)), Partition((2, 2, 1, 1))):
            M = jt_matrix(lam)
            T = psi_tilde(M).matrix
            self.assertEqual(T.n, M.n)
            self.assertEqual(T.det(), M.det())

    def testSpecialImage(self):
        for h in range(1, 8):
            for lam in partitions_by_max_label(h):
                for basis in ("h", "e"):
                    flags = classify_matrix(psi(jt_matrix(lam, basis)).matrix)
                    self.assertTrue(flags & MatrixClass.SPECIAL, "{0!s} {1:s}".format(lam, basis))


class TestPhi(unittest.TestCase):
    def setUp(self):
        self.A = jt_matrix(rectangle(4, 4))

    def testFirstStep(self):
        B = phi(self.A, [1])
        self.assertEqual(B.n, 3)
        self.assertEqual(B[0, 0], parse("x5 - x2*x4", F101))

    def testUpperTriangular(self):
        B = phi(self.A, [1, 2, 4, 8])
        want = matrix(
            [
                ["x5 - 16", "x6 - 32", "x7 - 64"],
                [0, "x5 - 16", "x6 - 32"],
                [0, 0, "x5 - 16"],
            ]
        )
        self.assertEqual(B, want)

    def testMappingAssignments(self):
        self.assertEqual(phi(self.A, {1: 1, 2: 2}), phi(self.A, [1, 2]))
        with self.assertRaises(ValueError):
            phi(self.A, {1: 0, 3: 1})

    def testEmpty(self):
        empty = SchurMatrix(F101, [])
        self.assertEqual(phi(empty, [0]).n, 0)

    def testTrace(self):
        steps = []
        phi(self.A, [1, 2], trace=lambda i, a, M: steps.append((i, a, M.n)))
        self.assertEqual([s[:2] for s in steps], [(1, 1), (2, 2)])

    def testNotReduced(self):
        with self.assertRaises(NotGeneralSchur):
            phi(jt_matrix(Partition((2, 1))), [0])


class TestPhiTilde(unittest.TestCase):
    def setUp(self):
        self.F5 = make_field(5)
        self.A = rectangle_matrix(4, self.F5)

    def testBlocks(self):
        T = phi_tilde(self.A, [0, 2])
        self.assertEqual(T.n, 4)
        self.assertEqual([[e.constant_term() for e in T.entries[i]] for i in (2, 3)], [[2, 0, 0, 0], [0, 2, 0, 0]])
        self.assertTrue(all(e.is_constant() for i in (2, 3) for e in T.entries[i]))
        B = phi(self.A, [0, 2])
        self.assertEqual(B.n, 2)
        self.assertTrue(is_block_anti_diagonal(T, B))

    def testDeterminantKept(self):
        F3 = make_field(3)
        A = rectangle_matrix(3, F3)
        for a in itertools.product(range(3), repeat=5):
            self.assertEqual(phi_tilde(A, a).det_at(a), A.det_at(a))

    def testCornerMinors(self):
        F3 = make_field(3)
        A = rectangle_matrix(3, F3)
        for a in itertools.product(range(3), repeat=3):
            self.assertTrue(corner_minors_unchanged(A, a), a)
        B = rectangle_matrix(4, F3)
        for a in ((0, 0), (1, 2), (0, 1, 1), (2, 0, 1)):
            self.assertTrue(corner_minors_unchanged(B, a), a)
        self.assertEqual(corner_minors(A)[1], parse("x1", F3))

    def testZeroBlockInside(self):
        # pivots above the main diagonal leave a zero phi block under the scalar one
        F3 = make_field(3)
        A = rectangle_matrix(3, F3)
        a = (0, 0, 0, 0, 2)
        T = phi_tilde(A, a)
        B = phi(A, a)
        self.assertEqual(B.n, 2)
        self.assertTrue(all(e.is_zero() for row in B.entries for e in row))
        self.assertEqual([[e.constant_term() for e in row] for row in T.entries], [[0, 0, 2], [0, 0, 0], [0, 0, 0]])
        self.assertTrue(is_block_anti_diagonal(T, B))
        self.assertFalse(is_block_anti_diagonal(T, phi(A, a[:4])))

    def testEveryPrefixDecomposes(self):
        F3 = make_field(3)
        A = rectangle_matrix(3, F3)
        for a in itertools.product(range(3), repeat=5):
            for i in range(1, 6):
                self.assertTrue(is_block_anti_diagonal(phi_tilde(A, a[:i]), phi(A, a[:i])), a[:i])


class TestBlockStructure(unittest.TestCase):
    def testExamples(self):
        F5 = make_field(5)
        self.assertEqual(block_structure(rectangle(3, 3), F5, (0, 2, 1, 1, 4)), (2, 1))
        self.assertEqual(block_structure(rectangle(3, 3), F5, (0, 0, 1, 2, 3)), (3,))
        self.assertEqual(block_structure(rectangle(2, 2), make_field(2), (0, 1, 1)), (2,))

    def testSingular(self):
        self.assertIs(block_structure(rectangle(2, 2), make_field(2), (1, 1, 1)), SINGULAR)
        self.assertFalse(SINGULAR)

    def testWideRectangle(self):
        self.assertEqual(block_structure(rectangle(5, 2), make_field(3), (0, 1, 0)), (2,))

    def testErrors(self):
        F5 = make_field(5)
        with self.assertRaises(ValueError):
            block_structure(Partition((3, 2)), F5, (0, 0, 1))
        with self.assertRaises(ValueError):
            block_structure(rectangle(2, 3), F5, (0, 0, 1, 1, 1))
        with self.assertRaises(ValueError):
            block_structure(rectangle(2, 2), F5, (0, 1))

    @given(st.lists(st.integers(min_value=0, max_value=4), min_size=5, max_size=5))
    @settings(max_examples=60, deadline=None)
    def testBlocksCoverRectangle(self, a):
        blocks = block_structure(rectangle(3, 3), make_field(5), a)
        if blocks is not SINGULAR:
            self.assertEqual(sum(blocks), 3)


class TestTrichotomy(unittest.TestCase):
    def testEmpty(self):
        self.assertEqual(rectangle_trichotomy(SchurMatrix(F101, []), 2), 1)

    def testAllPrefixes(self):
        F2 = make_field(2)
        A = rectangle_matrix(2, F2)
        for r in range(4):
            for prefix in itertools.product(range(2), repeat=r):
                self.assertIn(rectangle_trichotomy(phi(A, prefix), 2), (1, 2, 3))


class TestNumeric(unittest.TestCase):
    def testDet(self):
        F7 = make_field(7)
        self.assertEqual(det_numeric(F7, [[1, 2], [3, 4]]), 5)
        self.assertEqual(det_numeric(F7, [[0, 1], [1, 0]]), 6)
        self.assertEqual(det_numeric(F7, [[1, 2], [2, 4]]), 0)
        self.assertEqual(det_numeric(F7, []), 1)

    def testAgreesWithSymbolic(self):
        F3 = make_field(3)
        M = jt_matrix(Partition((2, 2)), field=F3)
        d = M.det()
        for a in itertools.product(range(3), repeat=3):
            self.assertEqual(M.det_at(a), d.evaluate(a))

    def testLabels(self):
        self.assertEqual(matrix(M1).labels(), ((None, 2, 4, 5), (None, 0, 3, 4), (None, None, 1, 3), (None, None, None, 2)))
        with self.assertRaises(NotLabelForm):
            matrix(M1).labels(monic=True)
        with self.assertRaises(NotLabelForm):
            matrix([["x2^2"]]).labels()


if __name__ == "__main__":
    unittest.main()

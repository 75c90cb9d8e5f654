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

__authors__ = "Glen Fletcher"
__copyright__ = "(c) 2026, AlphaOmega Technology"
__license__ = "AlphaOmega Technology Open License Version 1.0"
__contact__ = "Glen Fletcher <glen.fletcher@alphaomega-technology.com.au>"

from fractions import Fraction

from SchurFq.formulas import far_apart_prob, relaxed_prob, two_staircase_conjecture
from SchurFq.partitions import ShapeClass, classify
from SchurFq.util import addQuasiPolynomial, addRule


def _gaps(lam):
    return [lam[i] - lam[i + 1] for i in range(len(lam) - 1)]


def _far_apart(lam):
    k = len(lam)
    return k >= 1 and all(g >= k - 1 for g in _gaps(lam))


def _relaxed(lam):
    k = len(lam)
    gaps = _gaps(lam)
    if k < 2 or lam[-1] < k:
        return False
    tight = [g for g in gaps if g == k - 2]
    return len(tight) == 1 and all(g >= k - 1 for g in gaps if g != k - 2)


def _a_b_1m(lam):
    # (a, b, 1^m) with m >= 1, b >= 2 and a != b + m
    if len(lam) < 3 or lam[1] < 2 or any(part != 1 for part in lam[2:]):
        return False
    return lam[0] != lam[1] + len(lam) - 2


def _fat_hook(lam):
    # (a^m, 1^n) with a, m > 1 and n >= 1
    if lam[-1] != 1 or lam[0] < 2:
        return False
    m = sum(1 for part in lam if part == lam[0])
    return m > 1 and m + sum(1 for part in lam if part == 1) == len(lam)


def _two_staircase(lam):
    return len(lam) >= 2 and lam[-1] == 2 and all(g == 2 for g in _gaps(lam))


def rules_extend():
    def one_over_q(lam, q):
        return Fraction(1, q)

    def next_smallest(lam, q):
        return Fraction(q * q + q - 1, q**3)

    # fmt: off
    addRule("prop-hook", "hook (a,1^m)", 10, lambda lam: bool(classify(lam) & ShapeClass.HOOK), one_over_q)
    addRule("cor-rectangle", "rectangle (b^m)", 11, lambda lam: bool(classify(lam) & ShapeClass.RECTANGLE), one_over_q)
    addRule("thm-staircase", "staircase (k,...,1)", 12, lambda lam: bool(classify(lam) & ShapeClass.STAIRCASE), one_over_q)

    addQuasiPolynomial("prop-quasi-4422", (4, 4, 2, 2), 5, 2, {0: {2: 1, 1: -1}, 1: {2: 1, 1: -1, 0: 1}}, 20)
    addQuasiPolynomial("rem-quasi-4433", (4, 4, 3, 3), 6, 3, {0: {3: 1}, 1: {3: 1, 0: -1}, 2: {3: 1, 0: 1}}, 21)
    addQuasiPolynomial("rem-quasi-4432", (4, 4, 3, 2), 5, 2, {0: {2: 1, 1: 1, 0: -1}, 1: {2: 1, 1: 1, 0: -2}}, 22)
    addRule("rem-431", "shape 4,3,1", 23, lambda lam: lam == (4, 3, 1),
            lambda lam, q: Fraction(q**3 + q**2 - 2 * q + 1, q**4))

    addRule("next-descending", "(a,a-1,a-2), a >= 5", 30,
            lambda lam: len(lam) == 3 and lam[0] >= 5 and _gaps(lam) == [1, 1], next_smallest)
    addRule("next-two-row", "(a,b), a > b >= 2", 31,
            lambda lam: len(lam) == 2 and lam[0] > lam[1] >= 2, next_smallest)
    addRule("next-a-b-1m", "(a,b,1^m), b >= 2, a != b+m", 32, _a_b_1m, next_smallest)
    addRule("next-fat-hook", "(a^m,1^n), a,m > 1, n >= 1", 33, _fat_hook, next_smallest)

    addRule("prop-far-apart", "gaps >= k-1", 40, _far_apart,
            lambda lam, q: far_apart_prob(len(lam) if lam[-1] >= len(lam) else len(lam) - 1, q))
    addRule("prop-relaxed", "one gap = k-2, others >= k-1, last part >= k", 41, _relaxed,
            lambda lam, q: relaxed_prob(len(lam), q))

    addRule("conj-two-staircase", "(2n,...,4,2)", 50, _two_staircase,
            two_staircase_conjecture, conjecture=True)
    # fmt: on

#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Compare the exact vanishing probability of the fattened hooks with their
quasi-polynomial closed forms, over every field up to a given size.

.. moduleauthor:: Glen Fletcher <glen.fletcher@alphaomega-technology.com.au>
"""
import logging
import sys

from SchurFq import Partition, fast_distribution, predicted_prob_zero
from SchurFq.field import NotPrimePower
from SchurFq.partitions import format_partition

SHAPES = [Partition((4, 4, 2, 2)), Partition((4, 4, 3, 2)), Partition((4, 4, 3, 3))]

if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    largest = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    for lam in SHAPES:
        for q in range(2, largest + 1):
            try:
                observed = fast_distribution(lam, q).prob_zero
            except NotPrimePower:
                continue
            predicted = predicted_prob_zero(lam, q)
            print(
                "({0}) q={1:d} {2!s} rule={3} {4}".format(
                    format_partition(lam),
                    q,
                    observed,
                    predicted.provenance,
                    "ok" if predicted.value == observed else "MISMATCH",
                )
            )

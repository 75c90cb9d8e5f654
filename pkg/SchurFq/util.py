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


from fractions import Fraction
from typing import Callable, Dict, Union

try:
    from SchurFq import formulas
    from SchurFq.partitions import Partition
except ImportError:
    from . import formulas
    from .partitions import Partition


def addRule(
    id: str,
    family: str,
    priority: int,
    match: Callable[[Partition], bool],
    value: Callable[[Partition, int], Union[int, Fraction]],
    conjecture: bool = False,
):
    formulas.rules[id] = {
        "family": family,
        "priority": priority,
        "match": match,
        "value": value,
        "conjecture": conjecture,
    }


def addQuasiPolynomial(
    id: str,
    shape,
    exponent: int,
    modulus: int,
    branches: Dict[int, Dict[int, int]],
    priority: int,
):
    shape = Partition(shape)
    g = formulas.QuasiPolynomial(
        modulus,
        tuple(
            (r, tuple(sorted((e, Fraction(c)) for e, c in branches[r].items())))
            for r in sorted(branches)
        ),
    )
    formulas.quasipolynomials[shape] = (exponent, g)
    addRule(
        id,
        "shape {0!s}, q mod {1:d}".format(shape, modulus),
        priority,
        lambda lam: lam == shape,
        lambda lam, q: formulas.quasipoly_prob(g, q, exponent),
    )

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
SchurFq.partitions Module
=========================

Partitions, the named shape families, compositions and the small amount of
elementary number theory needed by the rectangle value formulas.

A :class:`Partition` is a tuple of weakly decreasing positive integers, largest
part first::

    >>> from SchurFq.partitions import Partition, classify, parse_partition
    >>> lam = parse_partition("4^2,2^2")
    >>> lam
    Partition(4, 4, 2, 2)
    >>> lam.transpose()
    Partition(4, 4, 2, 2)
    >>> Partition((4, 2, 1)).transpose()
    Partition(3, 2, 1, 1)
    >>> classify(Partition((3, 2, 1)))
    <ShapeClass.STAIRCASE: 4>

The empty partition is legal, it is the index of :math:`s_\\emptyset = 1`, and
belongs to none of the named families.
"""

import enum
import re
from math import gcd
from functools import reduce
from typing import Dict, Iterator, List, Tuple

Composition = Tuple[int, ...]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers"""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError("partition parts must be positive, got {0!r}".format(parts))
            if i > 0 and parts[i - 1] < p:
                raise ValueError(
                    "partition parts must be weakly decreasing, got {0!r}".format(parts)
                )
        return super().__new__(cls, parts)

    def __repr__(self):
        return "Partition({0:s})".format(", ".join(str(p) for p in self))

    def __str__(self):
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def max_label(self) -> int:
        """Largest variable index in the h-basis Jacobi-Trudi matrix, :math:`\\lambda_1 + \\ell - 1`"""
        if not self:
            return 0
        return self[0] + len(self) - 1

    def transpose(self) -> "Partition":
        return transpose(self)

    conjugate = transpose


def transpose(p) -> Partition:
    """Column lengths of the Young diagram of `p`"""
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part > j) for j in range(p[0]))


class ShapeClass(enum.Flag):
    NONE = 0
    HOOK = 1
    RECTANGLE = 2
    STAIRCASE = 4
    FATTENED_HOOK = 8

    # Shapes whose zero probability is exactly 1/q
    @property
    def is_family(self):
        return bool(self & (ShapeClass.HOOK | ShapeClass.RECTANGLE | ShapeClass.STAIRCASE))


def classify(p) -> ShapeClass:
    """Flags for every named family `p` belongs to

    A fattened hook is :math:`(a^n, b^m)` with :math:`a > b \\geq 1`, so exactly two
    distinct part sizes. Hooks :math:`(a, 1^m)` are left out, as is the rectangle :math:`a = b`.
    """
    flags = ShapeClass.NONE
    if not p:
        return flags
    if all(part == 1 for part in p[1:]):
        flags |= ShapeClass.HOOK
    if p[0] == p[-1]:
        flags |= ShapeClass.RECTANGLE
    if p[-1] == 1 and all(p[i] == p[i + 1] + 1 for i in range(len(p) - 1)):
        flags |= ShapeClass.STAIRCASE
    if len(set(p)) == 2 and not flags & ShapeClass.HOOK:
        flags |= ShapeClass.FATTENED_HOOK
    return flags


def hook(a: int, m: int) -> Partition:
    return Partition((a,) + (1,) * m)


def rectangle(b: int, m: int) -> Partition:
    return Partition((b,) * m)


def staircase(k: int) -> Partition:
    return Partition(range(k, 0, -1))


def two_staircase(n: int) -> Partition:
    """:math:`(2n, 2n-2, \\ldots, 2)`"""
    return Partition(range(2 * n, 0, -2))


_part = re.compile(r"^\s*(?P<base>\d+)\s*(?:\^\s*(?P<exp>\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Read ``"4,4,2,2"`` or the exponent shorthand ``"4^2,2^2"``

    ``""`` and ``"()"`` give the empty partition.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body.strip():
        return Partition()
    parts: List[int] = []
    for chunk in body.split(","):
        m = _part.match(chunk)
        if m is None:
            raise ValueError("invalid partition part {0!r} in {1!r}".format(chunk, text))
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        parts.extend([int(m.group("base"))] * exp)
    return Partition(parts)


def format_partition(p) -> str:
    return ",".join(str(part) for part in p)


def _bounded(length: int, largest: int) -> Iterator[Tuple[int, ...]]:
    # weakly decreasing tuples of the given length with parts in [1, largest]
    if length == 0:
        yield ()
        return
    for first in range(largest, 0, -1):
        for rest in _bounded(length - 1, first):
            yield (first,) + rest


def partitions_by_max_label(max_label: int) -> List[Partition]:
    """All nonempty partitions with :math:`\\lambda_1 + \\ell - 1 \\leq` `max_label`

    Ordered by max label, then reverse lexicographically. There are
    :math:`2^L - 1` of them.
    """
    result = []
    for h in range(1, max_label + 1):
        layer = []
        for a in range(1, h + 1):
            length = h - a + 1
            for rest in _bounded(length - 1, a):
                layer.append(Partition((a,) + rest))
        layer.sort(reverse=True)
        result.extend(layer)
    return result


def compositions(n: int) -> List[Composition]:
    """All compositions of `n` in ascending lexicographic order

    ``compositions(0)`` is the single empty composition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative, got {0:d}".format(n))
    if n == 0:
        return [()]
    result = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            result.append((first,) + rest)
    return result


def factorize(n: int) -> Dict[int, int]:
    """Prime factorisation by trial division, ``{prime: exponent}``"""
    if n < 1:
        raise ValueError("cannot factorise {0:d}".format(n))
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> List[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def gcd_all(values) -> int:
    return reduce(gcd, values, 0)

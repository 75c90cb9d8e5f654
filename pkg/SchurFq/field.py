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
SchurFq.field Module
====================

Exact arithmetic in :math:`GF(p^k)`.

Elements are plain integers in ``[0, q)``, the base-`p` digits of an element are
the coefficients of its residue polynomial, constant coefficient least
significant. This makes the assignment space of the counting engine an
ordinary integer counter.

.. code-block:: python

    >>> from SchurFq.field import make_field, mult_order
    >>> F4 = make_field(4)
    >>> F4.modulus_coefficients()
    [1, 1, 1]
    >>> F4.mul(2, 3)
    1
    >>> F5 = make_field(5)
    >>> F5.inv(2)
    3
    >>> mult_order(F5, 2)
    4

:func:`make_field` picks the canonical modulus, the monic irreducible polynomial
whose coefficient vector read as a base-`p` integer is smallest. An alternate
modulus may be given explicitly, counts never depend on the choice.
"""

import logging
from collections import namedtuple
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

try:
    from SchurFq.partitions import factorize, divisors
except ImportError:
    from .partitions import factorize, divisors

logger = logging.getLogger(__name__)

FieldElement = int

FieldTables = namedtuple("FieldTables", ["add", "sub", "mul", "neg", "inv"])

# Extension fields up to this order keep python lookup tables for scalar arithmetic
LUT_LIMIT = 1024


class NotPrimePower(ValueError):
    pass


def _digits(a: int, p: int, k: int) -> List[int]:
    out = []
    for _ in range(k):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _undigits(coeffs: Sequence[int], p: int) -> int:
    a = 0
    for c in reversed(coeffs):
        a = a * p + c
    return a


def _poly_mod(num: List[int], den: Sequence[int], p: int) -> List[int]:
    # remainder of num by the monic polynomial den, coefficients constant first
    num = list(num)
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] % p
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return [c % p for c in num[:d]] + [0] * max(0, d - len(num))


def _monic(p: int, degree: int) -> Iterator[Tuple[int, ...]]:
    for low in range(p**degree):
        yield tuple(_digits(low, p, degree)) + (1,)


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree at most half"""
    k = len(coeffs) - 1
    if k < 1:
        return False
    for degree in range(1, k // 2 + 1):
        for div in _monic(p, degree):
            if not any(_poly_mod(list(coeffs), div, p)):
                return False
    return True


def irreducible_moduli(p: int, k: int) -> List[Tuple[int, ...]]:
    """Monic irreducible polynomials of degree `k` over :math:`Z_p`, canonical order first

    Coefficients are listed constant term first.
    """
    if k == 1:
        return [(0, 1)]
    return [m for m in _monic(p, k) if is_irreducible(m, p)]


class Field:
    """The finite field :math:`GF(p^k) = Z_p[x]/(modulus)`

    Parameters
    ----------
    p: int
        Characteristic, must be prime.
    k: int
        Extension degree.
    modulus: tuple of int
        Monic irreducible polynomial of degree `k`, constant coefficient first.
    """

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)
        if len(self.modulus) != k + 1 or self.modulus[-1] != 1:
            raise ValueError(
                "modulus {0!r} is not monic of degree {1:d}".format(self.modulus, k)
            )
        if k > 1 and not is_irreducible(self.modulus, p):
            raise ValueError("modulus {0!r} is reducible over Z_{1:d}".format(self.modulus, p))
        self._add = self._mul = self._inv = None
        self._np_tables = None
        if k > 1 and self.q <= LUT_LIMIT:
            self._build_tables()

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        digits = [_digits(a, p, k) for a in range(q)]
        self._add = [
            [_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q)]
            for a in range(q)
        ]
        self._mul = [[self._poly_mul(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _poly_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        x, y = _digits(a, p, k), _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, c in enumerate(x):
            if c:
                for j, d in enumerate(y):
                    prod[i + j] += c * d
        return _undigits(_poly_mod(prod, self.modulus, p), p)

    def __repr__(self):
        return "Field(q={0:d}, modulus={1!r})".format(self.q, self.modulus_coefficients())

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __reduce__(self):
        return (Field, (self.p, self.k, self.modulus))

    def modulus_coefficients(self) -> List[int]:
        """Modulus coefficients from the highest degree down, as emitted in report metadata"""
        return list(reversed(self.modulus))

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def from_int(self, n: int) -> FieldElement:
        """Image of the integer `n` under :math:`Z \\to F_q`"""
        return n % self.p

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.k == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        p, k = self.p, self.k
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)

    def neg(self, a: FieldElement) -> FieldElement:
        if self.k == 1:
            return -a % self.p
        p, k = self.p, self.k
        return _undigits([-x % p for x in _digits(a, p, k)], p)

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.add(a, self.neg(b))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.k == 1:
            return a * b % self.p
        if self._mul is not None:
            return self._mul[a][b]
        return self._poly_mul(a, b)

    def inv(self, a: FieldElement) -> FieldElement:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF({0:d})".format(self.q))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        if e < 0:
            a, e = self.inv(a), -e
        if self.k == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def tables(self) -> FieldTables:
        """numpy lookup tables for vectorised arithmetic, ``inv[0]`` is 0"""
        if self._np_tables is None:
            q = self.q
            if self.k == 1:
                r = np.arange(q, dtype=np.intp)
                add = np.add.outer(r, r) % q
                mul = np.multiply.outer(r, r) % q
            else:
                add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.intp)
                mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.intp)
            neg = np.array([self.neg(a) for a in range(q)], dtype=np.intp)
            sub = add[:, neg]
            inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.intp)
            self._np_tables = FieldTables(add, sub, mul, neg, inv)
            logger.debug("built lookup tables for GF(%d)", q)
        return self._np_tables


@lru_cache(maxsize=None)
def _make_field(q: int, modulus: Optional[Tuple[int, ...]]) -> Field:
    factors = factorize(q) if q >= 1 else {}
    if len(factors) != 1:
        shown = " * ".join(
            "{0:d}^{1:d}".format(p, e) if e > 1 else str(p) for p, e in sorted(factors.items())
        )
        raise NotPrimePower("{0:d} = {1:s} is not a prime power".format(q, shown or "1"))
    ((p, k),) = factors.items()
    if modulus is None:
        chosen = irreducible_moduli(p, k)[0]
    else:
        chosen = tuple(reversed(modulus))
    return Field(p, k, chosen)


def make_field(q: int, modulus: Optional[Sequence[int]] = None) -> Field:
    """Build :math:`F_q`

    Parameters
    ----------
    q: int
        Field order, a prime power.
    modulus: list of int, optional
        Monic irreducible modulus, highest degree coefficient first. The
        canonical modulus is used when omitted.

    Raises
    ------
    NotPrimePower
        If `q` is not a prime power, the message shows its factorisation.
    """
    return _make_field(q, None if modulus is None else tuple(modulus))


def mult_order(f: Field, b: FieldElement) -> int:
    """Least :math:`t \\geq 1` with :math:`b^t = 1`"""
    if b == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    for t in divisors(f.q - 1):
        if f.pow(b, t) == 1:
            return t
    raise ArithmeticError("order of {0:d} does not divide {1:d}".format(b, f.q - 1))


def primitive_element(f: Field) -> FieldElement:
    for b in f.nonzero():
        if mult_order(f, b) == f.q - 1:
            return b
    raise ArithmeticError("GF({0:d}) has no generator".format(f.q))

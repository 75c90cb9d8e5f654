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
SchurFq.formulas Module
=======================

Closed form probabilities for :math:`P(s_\lambda \mapsto 0)` and for the values of
rectangles, all as exact :class:`fractions.Fraction` values.

Predictions come from a table of rules, each rule naming the family of shapes it
covers and the result it evaluates. The rules are registered by the ``rules_*``
plugin modules through :func:`SchurFq.util.addRule`, and tried in priority order
by :func:`predicted_prob_zero`::

    >>> from SchurFq.partitions import Partition
    >>> from SchurFq.formulas import predicted_prob_zero
    >>> p = predicted_prob_zero(Partition((4, 4, 2, 2)), 3)
    >>> p.value, p.provenance
    (Fraction(95, 243), 'prop-quasi-4422')

A shape no rule covers gives :data:`NOT_COVERED`. Rules tagged as conjectures are
only consulted when asked for.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

try:
    from SchurFq.field import Field, FieldElement, make_field, mult_order
    from SchurFq.partitions import (
        Partition,
        compositions,
        divisors,
        gcd_all,
        moebius,
        totient,
        transpose,
        two_staircase,
    )
    from SchurFq.schur import jt_matrix, psi
except ImportError:
    from .field import Field, FieldElement, make_field, mult_order
    from .partitions import Partition, compositions, divisors, gcd_all, moebius, totient, transpose, two_staircase
    from .schur import jt_matrix, psi

logger = logging.getLogger(__name__)

# id -> {"family", "priority", "match", "value", "conjecture"}, filled by util.addRule
rules: Dict[str, dict] = {}
_rule_order: List[str] = []

# shape -> (exponent, QuasiPolynomial) for the known quasi-polynomial probabilities
quasipolynomials: Dict[Partition, Tuple[int, "QuasiPolynomial"]] = {}


class NoFit(ArithmeticError):
    pass


@dataclass(frozen=True)
class Prediction:
    value: Fraction
    provenance: str
    applicability: str
    conjecture: bool = False

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise ValueError("{0:s} predicted {1!s}, not a probability".format(self.provenance, self.value))
        if not self.provenance:
            raise ValueError("a prediction needs a provenance")


class NotCovered:
    def __repr__(self):
        return "NotCovered"

    def __bool__(self):
        return False


NOT_COVERED = NotCovered()


def recalculate_rule_order():
    global _rule_order
    _rule_order = sorted(rules, key=lambda id: (rules[id]["priority"], id))


def _field_order(q: Union[Field, int]) -> int:
    return q.q if isinstance(q, Field) else q


def _evaluate(id: str, lam: Partition, q: int, provenance: Optional[str] = None) -> Prediction:
    rule = rules[id]
    return Prediction(
        Fraction(rule["value"](lam, q)),
        provenance or id,
        rule["family"],
        rule["conjecture"],
    )


def matching_predictions(lam, q: Union[Field, int], include_conjectures: bool = False) -> List[Prediction]:
    """Every rule covering `lam` or its transpose, in priority order"""
    lam = Partition(lam)
    q = _field_order(q)
    out = []
    candidates = [(lam, "")]
    if transpose(lam) != lam:
        candidates.append((transpose(lam), "+transpose"))
    for shape, suffix in candidates:
        for id in _rule_order:
            rule = rules[id]
            if rule["conjecture"] and not include_conjectures:
                continue
            if rule["match"](shape):
                out.append(_evaluate(id, shape, q, id + suffix))
    return out


def predicted_prob_zero(lam, q: Union[Field, int], include_conjectures: bool = False):
    """First matching rule in priority order, falling back to the transpose

    Returns
    -------
    Prediction or NotCovered
    """
    lam = Partition(lam)
    q = _field_order(q)
    for shape, suffix in ((lam, ""), (transpose(lam), "+transpose")):
        if suffix and shape == lam:
            break
        for id in _rule_order:
            rule = rules[id]
            if rule["conjecture"] and not include_conjectures:
                continue
            if rule["match"](shape):
                logger.debug("%s covered by %s%s", lam, id, suffix)
                return _evaluate(id, shape, q, id + suffix)
    return NOT_COVERED


def gl_order(k: int, q: int) -> int:
    """:math:`|GL_k(F_q)| = \\prod_{j=0}^{k-1} (q^k - q^j)`"""
    result = 1
    for j in range(k):
        result *= q**k - q**j
    return result


def far_apart_prob(k: int, q: int) -> Fraction:
    """:math:`1 - |GL_k(F_q)| / q^{k^2}`, the probability a random k x k matrix is singular"""
    return 1 - Fraction(gl_order(k, q), q ** (k * k))


def relaxed_prob(k: int, q: int) -> Fraction:
    """Zero probability when exactly one gap between rows is :math:`k - 2`"""
    e = k * k - 2 * k + 2
    prod = 1
    for i in range(k - 2):
        prod *= q ** (k - 2) - q**i
    return Fraction(q**e - (q ** (2 * k - 2) - q ** (k - 1) - q ** (k - 2) + 1) * prod, q**e)


def upper_bound_conjecture(lam, q: Union[Field, int]) -> Fraction:
    """Conjectured upper bound :math:`1 - |GL_k| / q^{k^2}` for a shape with `k` parts"""
    return far_apart_prob(len(Partition(lam)), _field_order(q))


def two_staircase_conjecture(lam, q: Union[Field, int]) -> Fraction:
    """Conjectured :math:`(q^2+q-1)/q^3` for :math:`(2n, 2n-2, \\ldots, 2)`"""
    lam = Partition(lam)
    if len(lam) < 2 or lam != two_staircase(len(lam)):
        raise ValueError("{0!s} is not a 2-staircase".format(lam))
    q = _field_order(q)
    return Fraction(q * q + q - 1, q**3)


@lru_cache(maxsize=None)
def reduced_size(lam: Partition) -> int:
    """Size of :math:`\\psi` of the Jacobi-Trudi matrix, the same over every field"""
    return psi(jt_matrix(lam)).matrix.n


def asymptotic_bound(lam, q: Union[Field, int]) -> Fraction:
    """:math:`1/q + n(n-1)/q^2` with `n` the size of the reduced Jacobi-Trudi matrix"""
    q = _field_order(q)
    n = reduced_size(Partition(lam))
    return Fraction(1, q) + Fraction(n * (n - 1), q * q)


@dataclass(frozen=True)
class GFunction:
    """:math:`g_b(d) = d` when `d` divides :math:`(q - 1)/\\mathrm{ord}(b)`, else 0"""

    q: int
    b: FieldElement
    ord_b: int

    @classmethod
    def of(cls, f: Field, b: FieldElement) -> "GFunction":
        if b == 0:
            raise ValueError("value formulas cover nonzero targets only")
        return cls(f.q, b, mult_order(f, b))

    def __call__(self, d: int) -> int:
        return d if ((self.q - 1) // self.ord_b) % d == 0 else 0

    def inverse(self, d: int) -> int:
        """Moebius inverse :math:`f_b(d) = \\sum_{e|d} \\mu(e) g_b(d/e)`"""
        return sum(moebius(e) * self(d // e) for e in divisors(d))


def _check_rect(a: int, n: int):
    if not a >= n >= 1:
        raise ValueError("need a >= n >= 1, got a={0:d}, n={1:d}".format(a, n))


def rect_value_prob_compositions(a: int, n: int, q: Union[Field, int], b: FieldElement) -> Fraction:
    """:math:`P(s_{a^n} \\mapsto b)` as a sum over the compositions of `n`"""
    _check_rect(a, n)
    f = q if isinstance(q, Field) else make_field(q)
    g = GFunction.of(f, b)
    total = Fraction(0)
    for c in compositions(n):
        total += Fraction((f.q - 1) ** (len(c) - 1), f.q**n) * g(gcd(gcd_all(c), f.q - 1))
    return total


def rect_value_prob_moebius(a: int, n: int, q: Union[Field, int], b: FieldElement) -> Fraction:
    """:math:`P(s_{a^n} \\mapsto b) = \\sum_{d | \\gcd(q-1, n)} f_b(d) / q^{n(d-1)/d + 1}`"""
    _check_rect(a, n)
    f = q if isinstance(q, Field) else make_field(q)
    g = GFunction.of(f, b)
    return sum(
        (Fraction(g.inverse(d), f.q ** (n * (d - 1) // d + 1)) for d in divisors(gcd(f.q - 1, n))),
        Fraction(0),
    )


def rect_value_prob_primitive(a: int, n: int, q: int) -> Fraction:
    """Value probability for a target of order :math:`q - 1`, the Moebius function form"""
    _check_rect(a, n)
    return sum(
        (Fraction(moebius(d), q ** (n * (d - 1) // d + 1)) for d in divisors(gcd(q - 1, n))),
        Fraction(0),
    )


def rect_value_prob_one(a: int, n: int, q: int) -> Fraction:
    """Value probability for the target 1, the totient form"""
    _check_rect(a, n)
    return sum(
        (Fraction(totient(d), q ** (n * (d - 1) // d + 1)) for d in divisors(gcd(q - 1, n))),
        Fraction(0),
    )


@dataclass(frozen=True)
class QuasiPolynomial:
    """One polynomial per residue class of `q` modulo ``modulus``

    ``branches`` maps each residue to ``((exponent, coefficient), ...)``.
    """

    modulus: int
    branches: Tuple[Tuple[int, Tuple[Tuple[int, Fraction], ...]], ...]

    def branch(self, residue: int) -> Dict[int, Fraction]:
        for r, terms in self.branches:
            if r == residue:
                return {e: c for e, c in terms if c != 0}
        raise KeyError("no branch for q = {0:d} mod {1:d}".format(residue, self.modulus))

    def __call__(self, q: int) -> Fraction:
        return sum((c * q**e for e, c in self.branch(q % self.modulus).items()), Fraction(0))


def _solve(rows: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    # exact Gauss-Jordan elimination over the rationals
    n = len(rows)
    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise ValueError("interpolation points do not determine the polynomial")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                factor = a[r][c]
                a[r] = [x - factor * y for x, y in zip(a[r], a[c])]
    return [a[r][n] for r in range(n)]


def quasipoly_fit(
    points: Sequence[Tuple[int, Union[int, Fraction]]],
    modulus: int,
    degree: int,
    monomials: Optional[Sequence[int]] = None,
) -> QuasiPolynomial:
    """Fit one exact polynomial per residue class of `q` modulo `modulus`

    Each class is interpolated through its first points (in increasing `q`) using
    the monomials :math:`q^0..q^{degree}`, or the given exponents, and checked
    against the rest of its points.

    Raises
    ------
    ValueError
        If some class present in `points` has fewer points than unknowns.
    NoFit
        If a held-out point disagrees with the fitted branch.
    """
    exps = list(range(degree + 1)) if monomials is None else sorted(monomials)
    classes: Dict[int, List[Tuple[int, Fraction]]] = {}
    for q, value in sorted(points):
        classes.setdefault(q % modulus, []).append((q, Fraction(value)))
    branches = []
    for residue in sorted(classes):
        pts = classes[residue]
        if len(pts) < len(exps):
            raise ValueError(
                "residue {0:d} mod {1:d} has {2:d} points, {3:d} needed".format(
                    residue, modulus, len(pts), len(exps)
                )
            )
        fit, held = pts[: len(exps)], pts[len(exps):]
        coeffs = _solve([[Fraction(q**e) for e in exps] for q, _ in fit], [v for _, v in fit])
        for q, v in held:
            got = sum(c * q**e for e, c in zip(exps, coeffs))
            if got != v:
                raise NoFit(
                    "branch {0:d} mod {1:d} predicts {2!s} at q={3:d}, measured {4!s}".format(
                        residue, modulus, got, q, v
                    )
                )
        branches.append((residue, tuple(zip(exps, coeffs))))
    return QuasiPolynomial(modulus, tuple(branches))


def quasipoly_excess(prob: Fraction, q: int, exponent: int) -> Fraction:
    """The `g(q)` with :math:`P = (q^{e-1} + (q-1) g(q)) / q^e`"""
    return (Fraction(prob) - Fraction(1, q)) * q**exponent / (q - 1)


def quasipoly_prob(g: QuasiPolynomial, q: int, exponent: int) -> Fraction:
    return Fraction(q ** (exponent - 1) + (q - 1) * g(q), q**exponent)


def quasipoly_branches(lam) -> Tuple[int, QuasiPolynomial]:
    """Registered ``(exponent, g)`` of a shape with a registered quasi-polynomial"""
    return quasipolynomials[Partition(lam)]

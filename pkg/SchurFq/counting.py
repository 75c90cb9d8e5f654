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
SchurFq.counting Module
=======================

Exact counts of how many homomorphisms :math:`\Lambda \to F_q` send a Schur
function (or several at once) to given values.

A homomorphism is an assignment of :math:`x_1, \ldots, x_m` in :math:`F_q`, with
`m` the largest label of the Jacobi-Trudi matrix. Assignments are numbered by a
base-`q` counter, :math:`x_i` being digit :math:`i - 1`, and determinants are
evaluated for whole batches of assignments at once with numpy lookup tables.

.. code-block:: python

    >>> from SchurFq.partitions import Partition
    >>> from SchurFq.field import make_field
    >>> from SchurFq.counting import fast_distribution
    >>> dist = fast_distribution(Partition((2, 2)), make_field(3))
    >>> dist.counts
    (9, 12, 6)
    >>> dist.prob_zero
    Fraction(1, 3)

:func:`fast_distribution` peels off the top variable :math:`x_m`, in which the
determinant is affine, and only enumerates :math:`q^{m-1}` fibers.
The counter is split into contiguous ranges when several workers are configured,
the tallies of the ranges are summed so every split gives the same result.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

try:
    from SchurFq import settings
    from SchurFq.field import Field, FieldElement, make_field
    from SchurFq.partitions import Partition, transpose
except ImportError:
    from . import settings
    from .field import Field, FieldElement, make_field
    from .partitions import Partition, transpose

logger = logging.getLogger(__name__)

# Assignments evaluated per numpy batch
BATCH = 1 << 15

# Below this many assignments the pool is not worth starting
PARALLEL_THRESHOLD = 1 << 12


class BudgetExceeded(RuntimeError):
    pass


class EmptyConditioningEvent(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class ExactProb:
    """``count`` assignments out of :math:`q^m`"""

    count: int
    q: int
    m: int

    @property
    def total(self) -> int:
        return self.q**self.m

    @property
    def total_text(self) -> str:
        return "{0:d}^{1:d}".format(self.q, self.m)

    @property
    def reduced(self) -> Fraction:
        return Fraction(self.count, self.total)

    def __str__(self):
        return str(self.reduced)


@dataclass(frozen=True)
class ValueDistribution:
    """Count of assignments per value of the determinant, indexed by element rep"""

    shape: Partition
    basis: str
    field: Field
    m: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        if sum(self.counts) != self.total:
            raise ArithmeticError(
                "counts of {0!s} sum to {1:d}, not {2:d}^{3:d}".format(
                    self.shape, sum(self.counts), self.field.q, self.m
                )
            )

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def total(self) -> int:
        return self.field.q**self.m

    def as_exact(self, a: FieldElement) -> ExactProb:
        return ExactProb(self.counts[a], self.field.q, self.m)

    def prob(self, a: FieldElement) -> Fraction:
        return Fraction(self.counts[a], self.total)

    @property
    def prob_zero(self) -> Fraction:
        return self.prob(0)

    def is_uniform(self) -> bool:
        return len(set(self.counts)) == 1

    def scaled(self, x: FieldElement, n: int) -> Tuple[int, ...]:
        """Counts reindexed by :math:`a \\mapsto x^n a`"""
        f = self.field
        return tuple(self.counts[f.mul(f.pow(x, n), a)] for a in f.elements())

    def respects_scaling(self, n: int) -> bool:
        """``count(a) == count(x^n a)`` for every nonzero `x` and `a`"""
        return all(self.scaled(x, n) == self.counts for x in self.field.nonzero())


@dataclass(frozen=True)
class JointCountSpec:
    """Shapes paired with the values their Schur functions must take"""

    shapes: Tuple[Partition, ...]
    targets: Tuple[FieldElement, ...]
    basis: str = "h"

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(Partition(s) for s in self.shapes))
        object.__setattr__(self, "targets", tuple(self.targets))
        if len(self.shapes) != len(self.targets):
            raise ValueError(
                "{0:d} shapes but {1:d} targets".format(len(self.shapes), len(self.targets))
            )

    @property
    def m(self) -> int:
        return max((max_label(s, self.basis) for s in self.shapes), default=0)


def _as_field(f: Union[Field, int]) -> Field:
    return f if isinstance(f, Field) else make_field(f)


def max_label(lam, basis: str = "h") -> int:
    mu = Partition(lam) if basis == "h" else transpose(Partition(lam))
    return mu.max_label


def jt_template(lam, basis: str = "h") -> np.ndarray:
    """Column indices into ``[1, x_1, ..., x_m, 0]`` laying out the Jacobi-Trudi matrix

    Index 0 is the constant 1, index -1 the constant 0.
    """
    if basis not in ("h", "e"):
        raise ValueError("basis must be 'h' or 'e', got {0!r}".format(basis))
    mu = Partition(lam) if basis == "h" else transpose(Partition(lam))
    k = len(mu)
    t = np.empty((k, k), dtype=np.intp)
    for i in range(k):
        for j in range(k):
            t[i, j] = max(mu[i] - i + j, -1)
    return t


def batch_det(tables, mats: np.ndarray) -> np.ndarray:
    """Determinants of a batch of matrices, shape ``(B, k, k)``, over the tabled field"""
    add, sub, mul, neg, inv = tables
    a = np.array(mats, dtype=np.intp, copy=True)
    B, k = a.shape[0], a.shape[1]
    det = np.ones(B, dtype=np.intp)
    lanes = np.arange(B)
    for c in range(k):
        nz = a[:, c:, c] != 0
        piv = c + nz.argmax(axis=1)
        swap = piv != c
        if swap.any():
            top = a[lanes, c].copy()
            a[lanes, c] = a[lanes, piv]
            a[lanes, piv] = top
            det = np.where(swap, neg[det], det)
        pv = a[:, c, c]
        # lanes without a pivot have pv == 0, which zeroes det
        det = mul[det, pv]
        ipv = inv[pv]
        for r in range(c + 1, k):
            factor = mul[a[:, r, c], ipv]
            a[:, r, c:] = sub[a[:, r, c:], mul[factor[:, None], a[:, c, c:]]]
    return det


def _digits(start: int, stop: int, q: int, width: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.intp)
    for i in range(width):
        out[:, i] = idx % q
        idx //= q
    return out


def _extend(x: np.ndarray, *columns: int) -> np.ndarray:
    # [1, x_1 .. x_w, extra columns .., 0]
    B = x.shape[0]
    parts = [np.ones((B, 1), dtype=np.intp), x]
    parts.extend(np.full((B, 1), c, dtype=np.intp) for c in columns)
    parts.append(np.zeros((B, 1), dtype=np.intp))
    return np.concatenate(parts, axis=1)


def _count_range(kind: str, field: Field, payload, start: int, stop: int):
    """Tally for counter values ``[start, stop)``, run in process or in a worker"""
    tables = field.tables()
    q = field.q
    if kind == "joint":
        templates, targets, width = payload
        total = 0
    else:
        template, width = payload
        total = np.zeros(q, dtype=np.int64)
    for lo in range(start, stop, BATCH):
        hi = min(lo + BATCH, stop)
        x = _digits(lo, hi, q, width)
        if kind == "brute":
            dets = batch_det(tables, _extend(x)[:, template])
            total += np.bincount(dets, minlength=q)
        elif kind == "fast":
            d0 = batch_det(tables, _extend(x, 0)[:, template])
            d1 = batch_det(tables, _extend(x, 1)[:, template])
            flat = tables.sub[d1, d0] == 0
            total += int(np.count_nonzero(~flat))
            total += q * np.bincount(d0[flat], minlength=q)
        else:
            ext = _extend(x)
            hit = np.ones(hi - lo, dtype=bool)
            for template, target in zip(templates, targets):
                hit &= batch_det(tables, ext[:, template]) == target
            total += int(np.count_nonzero(hit))
    logger.debug("%s range [%d, %d) done", kind, start, stop)
    if kind == "joint":
        return total
    return [int(v) for v in total]


def _ranges(total: int, workers: int):
    pieces = min(total, workers * 4)
    step = -(-total // pieces)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run(kind: str, field: Field, payload, total: int, workers: int):
    if workers == 1 or total < PARALLEL_THRESHOLD:
        return _count_range(kind, field, payload, 0, total)
    chunks = _ranges(total, workers)
    logger.debug("splitting %d assignments into %d ranges", total, len(chunks))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [
            executor.submit(_count_range, kind, field, payload, lo, hi) for lo, hi in chunks
        ]
        results = [fut.result() for fut in futures]
    if kind == "joint":
        return sum(results)
    return [sum(col) for col in zip(*results)]


def _check_budget(cost: int, budget: int, q: int, m: int):
    if cost > budget:
        raise BudgetExceeded(
            "counting over {0:d}^{1:d} assignments needs {2:d} evaluations, budget is {3:d}".format(
                q, m, cost, budget
            )
        )


def count_assignments(q: int, m: int) -> int:
    return q**m


def cost(kind: str, q: int, m: int, shapes: int = 1) -> int:
    if kind == "fast" and m > 0:
        return 2 * q ** (m - 1)
    return shapes * q**m


def brute_force_distribution(
    lam, f: Union[Field, int], basis: str = "h", budget: Optional[int] = None, workers: Optional[int] = None
) -> ValueDistribution:
    """Evaluate the determinant at every assignment of :math:`x_1..x_m` and tally

    Raises
    ------
    BudgetExceeded
        If :math:`q^m` is over the budget.
    """
    f = _as_field(f)
    budget, workers = settings.resolve(budget, workers)
    lam = Partition(lam)
    m = max_label(lam, basis)
    _check_budget(cost("brute", f.q, m), budget, f.q, m)
    counts = _run("brute", f, (jt_template(lam, basis), m), count_assignments(f.q, m), workers)
    return ValueDistribution(lam, basis, f, m, tuple(counts))


def fast_distribution(
    lam, f: Union[Field, int], basis: str = "h", budget: Optional[int] = None, workers: Optional[int] = None
) -> ValueDistribution:
    """Same result as :func:`brute_force_distribution` from :math:`q^{m-1}` fibers

    For each assignment of :math:`x_1..x_{m-1}` the determinant is
    :math:`r + c x_m`. A fiber with :math:`c \\neq 0` hits every value once, a fiber
    with :math:`c = 0` hits `r` exactly `q` times.
    """
    f = _as_field(f)
    budget, workers = settings.resolve(budget, workers)
    lam = Partition(lam)
    m = max_label(lam, basis)
    if m == 0:
        return brute_force_distribution(lam, f, basis, budget, workers)
    _check_budget(cost("fast", f.q, m), budget, f.q, m)
    counts = _run("fast", f, (jt_template(lam, basis), m - 1), f.q ** (m - 1), workers)
    return ValueDistribution(lam, basis, f, m, tuple(counts))


def joint_distribution(
    spec: JointCountSpec, f: Union[Field, int], budget: Optional[int] = None, workers: Optional[int] = None
) -> ExactProb:
    """Assignments sending every shape of `spec` to its target, over the shared :math:`x_1..x_m`"""
    f = _as_field(f)
    budget, workers = settings.resolve(budget, workers)
    m = spec.m
    _check_budget(cost("joint", f.q, m, len(spec.shapes)), budget, f.q, m)
    templates = [jt_template(s, spec.basis) for s in spec.shapes]
    count = _run("joint", f, (templates, spec.targets, m), count_assignments(f.q, m), workers)
    return ExactProb(int(count), f.q, m)


def conditional_prob(
    spec: JointCountSpec, f: Union[Field, int], budget: Optional[int] = None, workers: Optional[int] = None
) -> Tuple[ExactProb, Fraction]:
    """Joint probability of both events and the probability of the first given the second

    Raises
    ------
    EmptyConditioningEvent
        If no assignment sends the second shape to its target.
    """
    if len(spec.shapes) != 2:
        raise ValueError("conditioning needs exactly two shapes, got {0:d}".format(len(spec.shapes)))
    f = _as_field(f)
    joint = joint_distribution(spec, f, budget, workers)
    given = JointCountSpec(spec.shapes[1:], spec.targets[1:], spec.basis)
    marginal = joint_distribution(given, f, budget, workers)
    # the marginal is counted over its own variables, lift it to the joint space
    lifted = marginal.count * f.q ** (joint.m - marginal.m)
    if lifted == 0:
        raise EmptyConditioningEvent(
            "no assignment sends {0!s} to {1:d}".format(spec.shapes[1], spec.targets[1])
        )
    return joint, Fraction(joint.count, lifted)


def distribution(lam, f: Union[Field, int], basis: str = "h", method: str = "fast", **kwargs) -> ValueDistribution:
    if method == "fast":
        return fast_distribution(lam, f, basis, **kwargs)
    if method == "brute":
        return brute_force_distribution(lam, f, basis, **kwargs)
    raise ValueError("unknown counting method {0!r}".format(method))

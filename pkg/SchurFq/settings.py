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
.. _settings-module:

SchurFq.settings Module
=======================

Holds the process wide limits used by the counting engine, and allows them to be changed

The budget bounds the number of determinant evaluations a single count may perform,
a count whose cost exceeds the budget raises :class:`SchurFq.counting.BudgetExceeded`
rather than running for hours. The worker count sets how many processes share the
assignment space.

.. code-block:: python

    >>> from SchurFq import settings
    >>> settings.budget()
    1000000000
    >>> settings.set_budget(10**6)
    >>> settings.budget()
    1000000
    >>> settings.set_workers(4)
    >>> settings.workers()
    4

Every counting function also takes ``budget=`` and ``workers=`` keywords, which
override these values for one call only.
"""

DEFAULT_BUDGET = 10**9
DEFAULT_WORKERS = 1

_budget = DEFAULT_BUDGET
_workers = DEFAULT_WORKERS


def _check_positive(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(type(value))
    if value < 1:
        raise ValueError("expected a positive integer, got {0:d}".format(value))


def set_budget(value=DEFAULT_BUDGET):
    """Set Evaluation Budget

    Parameters
    ----------
    value: int
        Maximum number of determinant evaluations a count may perform.
    """
    global _budget
    _check_positive(value)
    _budget = value


def set_workers(value=DEFAULT_WORKERS):
    """Set Worker Count

    Parameters
    ----------
    value: int
        Number of processes the assignment space is split across, 1 runs in process.
    """
    global _workers
    _check_positive(value)
    _workers = value


def budget():
    return _budget


def workers():
    return _workers


def resolve(budget_=None, workers_=None):
    """Return ``(budget, workers)`` with ``None`` replaced by the configured values"""
    b = _budget if budget_ is None else budget_
    w = _workers if workers_ is None else workers_
    _check_positive(b)
    _check_positive(w)
    return b, w


def echo():
    return {"budget": _budget, "workers": _workers}

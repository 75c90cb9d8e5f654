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
SchurFq Module
==============

Exact distributions of Schur function values under random homomorphisms
:math:`\\Lambda \\to F_q`.

The names most code needs are exported here::

    from SchurFq import Partition, make_field, fast_distribution, predicted_prob_zero
    ...

Closed form rules are read from the ``rules_*`` modules of this package when it
is first imported, each supplying a ``rules_extend`` function.

.. moduleauthor:: Glen Fletcher <glen.fletcher@alphaomega-technology.com.au>
"""


__all__ = [
    "BudgetExceeded",
    "Field",
    "JointCountSpec",
    "MultiPoly",
    "NOT_COVERED",
    "NotPrimePower",
    "Partition",
    "Prediction",
    "SchurMatrix",
    "ShapeClass",
    "brute_force_distribution",
    "classify",
    "classify_matrix",
    "conditional_prob",
    "fast_distribution",
    "jt_matrix",
    "joint_distribution",
    "label_of",
    "make_field",
    "matching_predictions",
    "parse",
    "parse_partition",
    "phi",
    "phi_tilde",
    "predicted_prob_zero",
    "psi",
    "psi_tilde",
    "transpose",
    "__version__",
    "__title__",
    "__appname__",
    "__desc__",
]

try:
    from SchurFq._info import *
except ImportError:
    from ._info import *

try:
    from SchurFq.partitions import Partition, ShapeClass, classify, parse_partition, transpose
    from SchurFq.field import Field, NotPrimePower, make_field
    from SchurFq.multipoly import MultiPoly, label_of, parse
    from SchurFq.schur import SchurMatrix, classify_matrix, jt_matrix, phi, phi_tilde, psi, psi_tilde
    from SchurFq.counting import (
        BudgetExceeded,
        JointCountSpec,
        brute_force_distribution,
        conditional_prob,
        fast_distribution,
        joint_distribution,
    )
    from SchurFq.formulas import NOT_COVERED, Prediction, matching_predictions, predicted_prob_zero
except ImportError:
    from .partitions import Partition, ShapeClass, classify, parse_partition, transpose
    from .field import Field, NotPrimePower, make_field
    from .multipoly import MultiPoly, label_of, parse
    from .schur import SchurMatrix, classify_matrix, jt_matrix, phi, phi_tilde, psi, psi_tilde
    from .counting import (
        BudgetExceeded,
        JointCountSpec,
        brute_force_distribution,
        conditional_prob,
        fast_distribution,
        joint_distribution,
    )
    from .formulas import NOT_COVERED, Prediction, matching_predictions, predicted_prob_zero


def load():
    import os
    import os.path
    import importlib
    import logging

    try:
        from SchurFq.formulas import recalculate_rule_order
    except ImportError:
        from .formulas import recalculate_rule_order

    logger = logging.getLogger(__name__)
    if not hasattr(load, "loaded"):
        load.loaded = False
    if not load.loaded:
        load.loaded = True
        plugins_loaded = {}
        dirname = os.path.dirname(os.path.abspath(__file__))
        prefix = __package__ + "." if __package__ else ""
        for file in sorted(os.listdir(dirname)):
            plugin_file, extension = os.path.splitext(os.path.basename(file))
            if not plugin_file.lower().startswith("rules_") or extension.lower() not in [".py", ".pyc"]:
                continue
            if plugin_file not in plugins_loaded:
                plugins_loaded[plugin_file] = 1
                try:
                    plugin_script = importlib.import_module(prefix + plugin_file)
                except Exception:
                    logger.exception("Was unable to load %s", plugin_file)
                    continue
                if not hasattr(plugin_script, "rules_extend"):
                    logger.error(
                        "The plugin '%s' from file '%s' is invalid because its missing the attribute 'rules_extend'",
                        plugin_file,
                        os.path.join(dirname, plugin_file + extension),
                    )
                    continue
                plugin_script.rules_extend()  # type: ignore
        recalculate_rule_order()


load()

del load

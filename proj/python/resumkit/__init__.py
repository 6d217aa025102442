"""Exact constructive tree weights, forest-formula positivity, Symanzik
polynomials and the zero-dimensional loop vertex expansion.

Graphs cross the boundary as JSON strings::

    {"vertices": ["A", "B"], "edges": [{"id": "l1", "ends": ["A", "B"]}]}

Exact rationals are returned as ``"num/den"`` strings; feed them to
:class:`fractions.Fraction` when arithmetic is needed.
"""

from ._core import (
    amplitude,
    canonical_key,
    kruskal,
    logz_oracle,
    lve_repack,
    psd_check,
    sectors,
    selftest,
    spanning_trees,
    symanzik,
    symanzik_eval,
    weight,
    weight_mc_table,
    weight_table,
)

__version__ = "1.0.0"

__all__ = [
    "amplitude",
    "canonical_key",
    "kruskal",
    "logz_oracle",
    "lve_repack",
    "psd_check",
    "sectors",
    "selftest",
    "spanning_trees",
    "symanzik",
    "symanzik_eval",
    "weight",
    "weight_mc_table",
    "weight_table",
    "__version__",
]
